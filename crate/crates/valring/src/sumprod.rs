//! Set arithmetic, line families, collision energy, and the checkers for
//! the sum-product inequalities, including the full square-energy chain and
//! the Plünnecke–Ruzsa witness search.

use crate::error::{Error, Result};
use crate::ring::{RingElem, RingSpec};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Cap on weight(L)·|A| for energy computations.
pub const ENERGY_CAP: u64 = 1_000_000;
/// Cap on |A| for the cubic-cost theorem-2 chain.
pub const THEOREM2_SIZE_CAP: usize = 40;
/// Cap on |A| for the exhaustive-subset Plünnecke search.
pub const PLUNNECKE_SIZE_CAP: usize = 12;

/// A subset of R: sorted, deduplicated element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemSet {
    ring: RingSpec,
    members: Vec<RingElem>,
}

impl ElemSet {
    pub fn new(ring: &RingSpec, elems: impl IntoIterator<Item = RingElem>) -> Result<Self> {
        let mut members: Vec<RingElem> = elems.into_iter().collect();
        for &e in &members {
            ring.elem(e.index())?;
        }
        members.sort();
        members.dedup();
        Ok(ElemSet { ring: ring.clone(), members })
    }

    pub fn from_indices(ring: &RingSpec, indices: &[u64]) -> Result<Self> {
        Self::new(ring, indices.iter().map(|&i| RingElem(i)))
    }

    pub fn full_ring(ring: &RingSpec) -> Self {
        ElemSet { ring: ring.clone(), members: ring.enumerate().collect() }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[RingElem] {
        &self.members
    }

    pub fn contains(&self, x: RingElem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    fn check_ring(&self, other: &ElemSet) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.format_spec(),
                right: other.ring.format_spec(),
            });
        }
        Ok(())
    }

    fn collect(ring: &RingSpec, set: BTreeSet<RingElem>) -> ElemSet {
        ElemSet { ring: ring.clone(), members: set.into_iter().collect() }
    }
}

/// A + B = {a + b}.
pub fn sumset(a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
    a.check_ring(b)?;
    let ring = &a.ring;
    let mut out = BTreeSet::new();
    for &x in &a.members {
        for &y in &b.members {
            out.insert(ring.add(x, y));
        }
    }
    Ok(ElemSet::collect(ring, out))
}

/// AB = {a · b}.
pub fn productset(a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
    a.check_ring(b)?;
    let ring = &a.ring;
    let mut out = BTreeSet::new();
    for &x in &a.members {
        for &y in &b.members {
            out.insert(ring.mul(x, y));
        }
    }
    Ok(ElemSet::collect(ring, out))
}

/// Aⁿ = {aⁿ : a ∈ A} (elementwise powers, not an iterated product set).
pub fn powerset_n(a: &ElemSet, n: u32) -> Result<ElemSet> {
    if n < 1 {
        return Err(Error::Config("power must be >= 1".into()));
    }
    let ring = &a.ring;
    let out: BTreeSet<RingElem> =
        a.members.iter().map(|&x| ring.pow(x, n)).collect();
    Ok(ElemSet::collect(ring, out))
}

/// BA + C by the direct triple loop.
pub fn ba_plus_c(a: &ElemSet, b: &ElemSet, c: &ElemSet) -> Result<ElemSet> {
    a.check_ring(b)?;
    a.check_ring(c)?;
    let ring = &a.ring;
    let mut out = BTreeSet::new();
    for &vb in &b.members {
        for &va in &a.members {
            let ba = ring.mul(vb, va);
            for &vc in &c.members {
                out.insert(ring.add(ba, vc));
            }
        }
    }
    Ok(ElemSet::collect(ring, out))
}

/// A multiset of lines l_{m,b}: (m, b) → multiplicity ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFamily {
    ring: RingSpec,
    entries: BTreeMap<(RingElem, RingElem), u64>,
}

impl LineFamily {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    /// Number of distinct lines |L|.
    pub fn distinct_len(&self) -> u64 {
        self.entries.len() as u64
    }

    /// Total multiplicity Σ mult.
    pub fn weight(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((RingElem, RingElem), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn multiplicity(&self, m: RingElem, b: RingElem) -> u64 {
        self.entries.get(&(m, b)).copied().unwrap_or(0)
    }
}

/// Multiplicity-1 family over P = B × C.
pub fn lines_from_product(b: &ElemSet, c: &ElemSet) -> Result<LineFamily> {
    b.check_ring(c)?;
    let mut entries = BTreeMap::new();
    for &m in &b.members {
        for &off in &c.members {
            entries.insert((m, off), 1);
        }
    }
    Ok(LineFamily { ring: b.ring.clone(), entries })
}

/// The family over P = {(2s, c² - s²) : s ∈ A+A, c ∈ A}, with multiplicity
/// counting the (s, c) pairs landing on each line. In characteristic 2 every
/// slope 2s is a nonunit; see `Theorem2Report::char_two`.
pub fn lines_theorem2(a: &ElemSet) -> Result<LineFamily> {
    let ring = &a.ring;
    let aa = sumset(a, a)?;
    let mut entries = BTreeMap::new();
    for &s in &aa.members {
        let two_s = ring.add(s, s);
        let s2 = ring.mul(s, s);
        for &c in &a.members {
            let b = ring.sub(ring.mul(c, c), s2);
            *entries.entry((two_s, b)).or_insert(0) += 1;
        }
    }
    Ok(LineFamily { ring: ring.clone(), entries })
}

/// L(A) = {ma + b}.
pub fn evaluate_lines(lines: &LineFamily, a: &ElemSet) -> Result<ElemSet> {
    if lines.ring != a.ring {
        return Err(Error::RingMismatch {
            left: lines.ring.format_spec(),
            right: a.ring.format_spec(),
        });
    }
    let ring = &a.ring;
    let mut out = BTreeSet::new();
    for ((m, b), _) in lines.entries() {
        for &x in &a.members {
            out.insert(ring.add(ring.mul(m, x), b));
        }
    }
    Ok(ElemSet::collect(ring, out))
}

/// r_{L(A)}(y) = Σ_{(m,b)} mult(m,b) · #{a ∈ A : ma + b = y}, as a sorted
/// histogram over the values y that occur.
pub fn r_function(lines: &LineFamily, a: &ElemSet) -> Result<Vec<(RingElem, u64)>> {
    if lines.ring != a.ring {
        return Err(Error::RingMismatch {
            left: lines.ring.format_spec(),
            right: a.ring.format_spec(),
        });
    }
    let ring = &a.ring;
    let mut hist: BTreeMap<RingElem, u64> = BTreeMap::new();
    for ((m, b), mult) in lines.entries() {
        for &x in &a.members {
            *hist.entry(ring.add(ring.mul(m, x), b)).or_insert(0) += mult;
        }
    }
    Ok(hist.into_iter().collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct EnergyReport {
    /// E(L,A) = Σ_y r(y)², counting line multiplicities.
    pub e: u64,
    pub distinct_lines: u64,
    pub weight: u64,
    pub a_size: u64,
    /// weight²|A|²/qʳ + q^{2r-1}·weight·|A|
    pub rhs: f64,
    pub evaluation_set_size: u64,
    pub r_histogram: Vec<(RingElem, u64)>,
    /// E ≤ rhs, decided exactly (both sides scaled by qʳ).
    pub collision_pass: bool,
    /// |L(A)|·E ≥ (weight·|A|)², exact.
    pub cauchy_schwarz_pass: bool,
}

/// Collision energy with its upper bound and the Cauchy–Schwarz lower
/// bound, both as exact integer comparisons.
pub fn energy(lines: &LineFamily, a: &ElemSet) -> Result<EnergyReport> {
    let ring = &a.ring;
    let weight = lines.weight();
    let a_size = a.len() as u64;
    let load = weight.saturating_mul(a_size);
    if load > ENERGY_CAP {
        return Err(Error::Capacity { what: "energy", size: load, cap: ENERGY_CAP });
    }
    let hist = r_function(lines, a)?;
    let e: u64 = hist.iter().map(|&(_, r)| r * r).sum();
    let eval_size = hist.len() as u64;

    let q_r = ring.order() as u128; // qʳ
    let q3r1 = q_r * q_r * ring.order() as u128 / ring.q() as u128; // q^{3r-1}
    let w = weight as u128;
    let n = a_size as u128;
    // E ≤ w²n²/qʳ + q^{2r-1}wn  ⇔  E·qʳ ≤ w²n² + q^{3r-1}wn
    let collision_pass = e as u128 * q_r <= w * w * n * n + q3r1 * w * n;
    // |L(A)|·E ≥ (wn)²
    let cauchy_schwarz_pass = eval_size as u128 * e as u128 >= (w * n) * (w * n);

    let rhs = (w * w * n * n) as f64 / q_r as f64 + (q3r1 * w * n) as f64 / q_r as f64;
    Ok(EnergyReport {
        e,
        distinct_lines: lines.distinct_len(),
        weight,
        a_size,
        rhs,
        evaluation_set_size: eval_size,
        r_histogram: hist,
        collision_pass,
        cauchy_schwarz_pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Record {
    pub a_size: u64,
    pub b_size: u64,
    pub c_size: u64,
    /// |BA + C|
    pub lhs: u64,
    /// ½·min{qʳ, |A||B||C|/q^{2r-1}}
    pub rhs: f64,
    pub ratio: f64,
    pub pass: bool,
}

/// |BA+C| ≥ ½·min{qʳ, |A||B||C|/q^{2r-1}}: the explicit-constant form of the
/// sum-product bound, decided exactly.
pub fn check_theorem1(a: &ElemSet, b: &ElemSet, c: &ElemSet) -> Result<Theorem1Record> {
    let ring = &a.ring;
    let lhs = ba_plus_c(a, b, c)?.len() as u64;
    let q_r = ring.order() as u128;
    let q2r1 = q_r * q_r / ring.q() as u128; // q^{2r-1}
    let abc = a.len() as u128 * b.len() as u128 * c.len() as u128;
    // 2·lhs·q^{2r-1} ≥ min(q^{3r-1}, |A||B||C|)
    let pass = 2 * lhs as u128 * q2r1 >= (q_r * q2r1).min(abc);
    let rhs = 0.5 * (q_r as f64).min(abc as f64 / q2r1 as f64);
    let ratio = if rhs > 0.0 { lhs as f64 / rhs } else { f64::INFINITY };
    Ok(Theorem1Record {
        a_size: a.len() as u64,
        b_size: b.len() as u64,
        c_size: c.len() as u64,
        lhs,
        rhs,
        ratio,
        pass,
    })
}

/// Σ_v #{(a,b,c) ∈ A³ : c²+a²-b² = v}², the additive energy of the
/// square-sum representation used by the theorem-2 chain.
pub fn energy_squares(a: &ElemSet) -> Result<u64> {
    if a.len() > THEOREM2_SIZE_CAP {
        return Err(Error::Capacity {
            what: "theorem-2 set",
            size: a.len() as u64,
            cap: THEOREM2_SIZE_CAP as u64,
        });
    }
    let ring = &a.ring;
    let squares: Vec<RingElem> = a.members.iter().map(|&x| ring.mul(x, x)).collect();
    let mut hist: BTreeMap<RingElem, u64> = BTreeMap::new();
    for &c2 in &squares {
        for &a2 in &squares {
            let ca = ring.add(c2, a2);
            for &b2 in &squares {
                *hist.entry(ring.sub(ca, b2)).or_insert(0) += 1;
            }
        }
    }
    Ok(hist.values().map(|&r| r * r).sum())
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem2Report {
    pub a_size: u64,
    pub energy_squares: u64,
    /// |A² + A² + A²|
    pub square_triple_sumset: u64,
    /// |A|⁶ ≤ |A²+A²+A²| · energy_squares (Cauchy–Schwarz, exact).
    pub cs_pass: bool,
    /// energy_squares ≤ weighted E(lines_theorem2(A), A), exact.
    pub relax_pass: bool,
    /// Collision upper bound for the theorem-2 line family.
    pub collision_pass: bool,
    /// p = 2: every slope 2s is a nonunit and multiplicities collapse;
    /// collision_pass is reported but not required in this regime.
    pub char_two: bool,
    /// |A+A|·|A|² > q^{3r-1}, the theorem's hypothesis.
    pub hypothesis: bool,
    /// |A²+A²|·|A+A| / (q^{r/2}·|A|^{3/2}), recorded when the hypothesis
    /// holds; the final bound's constant is not recoverable, so this is
    /// reported rather than asserted.
    pub ratio: Option<f64>,
    pub pass: bool,
}

/// The theorem-2 proof chain on one set A.
pub fn check_theorem2(a: &ElemSet) -> Result<Theorem2Report> {
    if a.is_empty() {
        return Err(Error::Config("theorem-2 chain needs a nonempty set".into()));
    }
    let ring = &a.ring;
    let e_sq = energy_squares(a)?;
    let squares = powerset_n(a, 2)?;
    let two_sq = sumset(&squares, &squares)?;
    let three_sq = sumset(&two_sq, &squares)?;
    let n = a.len() as u128;
    let cs_pass = n.pow(6) <= three_sq.len() as u128 * e_sq as u128;

    let lines = lines_theorem2(a)?;
    let erep = energy(&lines, a)?;
    let relax_pass = e_sq <= erep.e;
    let collision_pass = erep.collision_pass;
    let char_two = ring.p() == 2;

    let aa = sumset(a, a)?;
    let q_r = ring.order() as u128;
    let q3r1 = q_r * q_r * ring.order() as u128 / ring.q() as u128;
    let hypothesis = aa.len() as u128 * n * n > q3r1;
    let ratio = hypothesis.then(|| {
        let lhs = two_sq.len() as f64 * aa.len() as f64;
        lhs / ((q_r as f64).sqrt() * (a.len() as f64).powf(1.5))
    });

    Ok(Theorem2Report {
        a_size: a.len() as u64,
        energy_squares: e_sq,
        square_triple_sumset: three_sq.len() as u64,
        cs_pass,
        relax_pass,
        collision_pass,
        char_two,
        hypothesis,
        ratio,
        pass: cs_pass && relax_pass && (collision_pass || char_two),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PlunneckeWitness {
    /// Member indices of X ⊆ A.
    pub x: Vec<u64>,
    pub x_size: u64,
    /// |X + kB|
    pub x_plus_kb: u64,
    /// (K/δ)^k |X|
    pub bound: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlunneckeReport {
    pub a_size: u64,
    pub b_size: u64,
    pub sum_ab_size: u64,
    /// δ as an exact fraction (numerator, denominator).
    pub delta: (u64, u64),
    pub k: u32,
    /// Some witness X with |X| ≥ (1-δ)|A| and |X+kB| < (K/δ)^k |X|;
    /// None would falsify the lemma on this instance.
    pub witness: Option<PlunneckeWitness>,
}

/// Exhaustive search for a Plünnecke–Ruzsa witness, K = |A+B|/|A|. Masks are
/// scanned from the full set downward; all comparisons are exact integers.
pub fn plunnecke_verify(
    a: &ElemSet,
    b: &ElemSet,
    delta: (u64, u64),
    k: u32,
) -> Result<PlunneckeReport> {
    a.check_ring(b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::Config("plunnecke needs nonempty sets".into()));
    }
    if a.len() > PLUNNECKE_SIZE_CAP {
        return Err(Error::Capacity {
            what: "plunnecke set",
            size: a.len() as u64,
            cap: PLUNNECKE_SIZE_CAP as u64,
        });
    }
    let (num, den) = delta;
    if num == 0 || num >= den {
        return Err(Error::Config(format!("delta {num}/{den} not in (0,1)")));
    }
    if k < 1 {
        return Err(Error::Config("k must be >= 1".into()));
    }
    let ring = &a.ring;
    let sum_ab = sumset(a, b)?.len() as u64;

    // kB = B + ... + B, k-fold
    let mut kb = b.clone();
    for _ in 1..k {
        kb = sumset(&kb, b)?;
    }

    let n = a.len();
    let a_size = n as u64;
    // |X| ≥ (1-δ)|A| ⇔ |X|·den ≥ (den-num)·|A|
    let min_size = ((den - num) * a_size).div_ceil(den);
    // strict |X+kB| < (K/δ)^k|X| ⇔ |X+kB|·(|A|·num)^k < (|A+B|·den)^k·|X|
    let scale = |base: u128| {
        base.checked_pow(k)
            .ok_or_else(|| Error::Config(format!("delta/k overflow: {base}^{k}")))
    };
    let lhs_scale = scale(a_size as u128 * num as u128)?;
    let rhs_scale = scale(sum_ab as u128 * den as u128)?;

    let mut occupancy = vec![false; ring.order() as usize];
    let mut witness = None;
    for mask in (1u32..1 << n).rev() {
        let x_size = mask.count_ones() as u64;
        if x_size < min_size {
            continue;
        }
        occupancy.iter_mut().for_each(|w| *w = false);
        let mut x_plus_kb = 0u64;
        for (i, &x) in a.members.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            for &y in kb.members() {
                let v = ring.add(x, y).index() as usize;
                if !occupancy[v] {
                    occupancy[v] = true;
                    x_plus_kb += 1;
                }
            }
        }
        if (x_plus_kb as u128) * lhs_scale < rhs_scale * x_size as u128 {
            let members: Vec<u64> = a
                .members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x.index())
                .collect();
            let kd = (sum_ab as f64 * den as f64 / (a_size as f64 * num as f64)).powi(k as i32);
            witness = Some(PlunneckeWitness {
                x: members,
                x_size,
                x_plus_kb,
                bound: kd * x_size as f64,
            });
            break;
        }
    }

    Ok(PlunneckeReport {
        a_size,
        b_size: b.len() as u64,
        sum_ab_size: sum_ab,
        delta,
        k,
        witness,
    })
}
