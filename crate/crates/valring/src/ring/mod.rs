//! Exact arithmetic, enumeration, and structure queries for finite valuation
//! rings of order q^r.
//!
//! Two families are supported: Z/p^r (q = p) and F_q[t]/(t^r) with
//! q = p^m given by an irreducible modulus polynomial over F_p. Elements are
//! dense indices in [0, q^r): the residue itself for Z/p^r, and base-q digit
//! vectors (coefficients of 1, t, ..., t^{r-1}) for the polynomial family,
//! each digit encoding an F_q element as a base-p coefficient vector.

mod parse;
pub(crate) mod poly;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default cap on |R| = q^r; constructors reject larger rings.
pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingFamily {
    /// Z/p^r
    ZPowerR,
    /// F_{p^m}[t]/(t^r)
    TruncatedPoly,
}

/// An element of a ring, as its dense index in [0, q^r).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingElem(pub u64);

impl RingElem {
    pub fn index(self) -> u64 {
        self.0
    }
}

/// A finite valuation ring of order q^r together with precomputed structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    family: RingFamily,
    p: u64,
    m: u32,
    r: u32,
    q: u64,
    order: u64,
    /// Monic irreducible modulus of the residue field (ascending, degree m);
    /// empty when m = 1.
    modulus: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(base: u64, exp: u32, cap: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > cap {
            return None;
        }
    }
    Some(acc)
}

impl RingSpec {
    /// Z/p^r with the default order cap.
    pub fn z_power_r(p: u64, r: u32) -> Result<Self> {
        Self::z_power_r_capped(p, r, DEFAULT_ORDER_CAP)
    }

    pub fn z_power_r_capped(p: u64, r: u32, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        if r < 1 {
            return Err(Error::Parse("length r must be >= 1".into()));
        }
        let order = checked_pow(p, r, cap)
            .ok_or(Error::Capacity { what: "ring order", size: 0, cap })?;
        Ok(RingSpec { family: RingFamily::ZPowerR, p, m: 1, r, q: p, order, modulus: Vec::new() })
    }

    /// F_p[t]/(t^r) (prime residue field).
    pub fn truncated_poly_prime(p: u64, r: u32) -> Result<Self> {
        Self::truncated_poly(p, &[], r)
    }

    /// F_{p^m}[t]/(t^r) with residue field modulus given in ascending
    /// coefficient order (monic, degree m, irreducible over F_p). An empty
    /// modulus means m = 1.
    pub fn truncated_poly(p: u64, modulus: &[u64], r: u32) -> Result<Self> {
        Self::truncated_poly_capped(p, modulus, r, DEFAULT_ORDER_CAP)
    }

    pub fn truncated_poly_capped(p: u64, modulus: &[u64], r: u32, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        if r < 1 {
            return Err(Error::Parse("length r must be >= 1".into()));
        }
        let mut modulus: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        poly::trim(&mut modulus);
        let m = match poly::degree(&modulus) {
            None => 1,
            Some(0) => return Err(Error::Parse("modulus must have degree >= 1".into())),
            Some(d) => {
                if *modulus.last().unwrap() != 1 {
                    return Err(Error::Parse("modulus must be monic".into()));
                }
                if !poly::is_irreducible(&modulus, p) {
                    return Err(Error::Parse(format!(
                        "modulus is not irreducible over F_{p}"
                    )));
                }
                d as u32
            }
        };
        if m == 1 {
            modulus.clear();
        }
        let q = checked_pow(p, m, cap)
            .ok_or(Error::Capacity { what: "residue field order", size: 0, cap })?;
        let order = checked_pow(q, r, cap)
            .ok_or(Error::Capacity { what: "ring order", size: 0, cap })?;
        Ok(RingSpec { family: RingFamily::TruncatedPoly, p, m, r, q, order, modulus })
    }

    pub fn family(&self) -> RingFamily {
        self.family
    }
    /// Characteristic prime of the residue field.
    pub fn p(&self) -> u64 {
        self.p
    }
    /// Residue field extension degree over F_p.
    pub fn m(&self) -> u32 {
        self.m
    }
    /// Length: the maximal ideal satisfies 𝔪^r = 0.
    pub fn r(&self) -> u32 {
        self.r
    }
    /// Residue field size q = p^m.
    pub fn q(&self) -> u64 {
        self.q
    }
    /// |R| = q^r.
    pub fn order(&self) -> u64 {
        self.order
    }
    /// |R*| = q^r - q^{r-1}.
    pub fn unit_count(&self) -> u64 {
        self.order - self.order / self.q
    }
    /// |R⁰| = q^{r-1}.
    pub fn nonunit_count(&self) -> u64 {
        self.order / self.q
    }

    pub fn zero(&self) -> RingElem {
        RingElem(0)
    }
    pub fn one(&self) -> RingElem {
        RingElem(1 % self.order)
    }

    /// Generator of the maximal ideal: p for Z/p^r, t for F_q[t]/(t^r).
    pub fn uniformizer(&self) -> RingElem {
        match self.family {
            RingFamily::ZPowerR => RingElem(self.p % self.order),
            RingFamily::TruncatedPoly => RingElem(self.q % self.order),
        }
    }

    /// Validated element constructor; the one place range errors surface.
    pub fn elem(&self, index: u64) -> Result<RingElem> {
        if index < self.order {
            Ok(RingElem(index))
        } else {
            Err(Error::InvalidElement { index, order: self.order })
        }
    }

    fn digits(&self, x: RingElem) -> Vec<u64> {
        let mut idx = x.0;
        let mut out = vec![0u64; self.r as usize];
        for slot in out.iter_mut() {
            *slot = idx % self.q;
            idx /= self.q;
        }
        out
    }

    fn from_digits(&self, digits: &[u64]) -> RingElem {
        let mut idx = 0u64;
        for i in (0..self.r as usize).rev() {
            idx = idx * self.q + digits.get(i).copied().unwrap_or(0);
        }
        RingElem(idx)
    }

    // Residue field F_q arithmetic on digit values in [0, q).
    fn fq_add(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            (a + b) % self.p
        } else {
            let pa = poly::decode_base_p(a, self.m as usize, self.p);
            let pb = poly::decode_base_p(b, self.m as usize, self.p);
            let s = poly::add(&pa, &pb, self.p);
            poly::encode_base_p(&s, self.m as usize, self.p)
        }
    }

    fn fq_neg(&self, a: u64) -> u64 {
        if self.m == 1 {
            (self.p - a % self.p) % self.p
        } else {
            let pa = poly::decode_base_p(a, self.m as usize, self.p);
            let n = poly::sub(&[], &pa, self.p);
            poly::encode_base_p(&n, self.m as usize, self.p)
        }
    }

    fn fq_mul(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            a * b % self.p
        } else {
            let pa = poly::decode_base_p(a, self.m as usize, self.p);
            let pb = poly::decode_base_p(b, self.m as usize, self.p);
            let prod = poly::rem(&poly::mul(&pa, &pb, self.p), &self.modulus, self.p);
            poly::encode_base_p(&prod, self.m as usize, self.p)
        }
    }

    fn fq_inv(&self, a: u64) -> Option<u64> {
        if self.m == 1 {
            if a % self.p == 0 {
                return None;
            }
            // Fermat
            let mut acc = 1u64;
            let mut base = a % self.p;
            let mut e = self.p - 2;
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * base % self.p;
                }
                base = base * base % self.p;
                e >>= 1;
            }
            Some(acc)
        } else {
            let pa = poly::decode_base_p(a, self.m as usize, self.p);
            poly::inverse_mod(&pa, &self.modulus, self.p)
                .map(|inv| poly::encode_base_p(&inv, self.m as usize, self.p))
        }
    }

    pub fn add(&self, x: RingElem, y: RingElem) -> RingElem {
        debug_assert!(x.0 < self.order && y.0 < self.order);
        match self.family {
            RingFamily::ZPowerR => RingElem((x.0 + y.0) % self.order),
            RingFamily::TruncatedPoly => {
                let (dx, dy) = (self.digits(x), self.digits(y));
                let sum: Vec<u64> =
                    dx.iter().zip(&dy).map(|(&a, &b)| self.fq_add(a, b)).collect();
                self.from_digits(&sum)
            }
        }
    }

    pub fn neg(&self, x: RingElem) -> RingElem {
        debug_assert!(x.0 < self.order);
        match self.family {
            RingFamily::ZPowerR => RingElem((self.order - x.0) % self.order),
            RingFamily::TruncatedPoly => {
                let dx = self.digits(x);
                let neg: Vec<u64> = dx.iter().map(|&a| self.fq_neg(a)).collect();
                self.from_digits(&neg)
            }
        }
    }

    pub fn sub(&self, x: RingElem, y: RingElem) -> RingElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: RingElem, y: RingElem) -> RingElem {
        debug_assert!(x.0 < self.order && y.0 < self.order);
        match self.family {
            RingFamily::ZPowerR => {
                RingElem((x.0 as u128 * y.0 as u128 % self.order as u128) as u64)
            }
            RingFamily::TruncatedPoly => {
                let (dx, dy) = (self.digits(x), self.digits(y));
                let r = self.r as usize;
                let mut acc = vec![0u64; r];
                for i in 0..r {
                    if dx[i] == 0 {
                        continue;
                    }
                    for j in 0..r - i {
                        if dy[j] == 0 {
                            continue;
                        }
                        acc[i + j] = self.fq_add(acc[i + j], self.fq_mul(dx[i], dy[j]));
                    }
                }
                self.from_digits(&acc)
            }
        }
    }

    pub fn pow(&self, x: RingElem, n: u32) -> RingElem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// True iff x has an inverse, decided by a nonzero image in the residue
    /// field (cross-checked against exhaustive inverse search in tests).
    pub fn is_unit(&self, x: RingElem) -> bool {
        debug_assert!(x.0 < self.order);
        match self.family {
            RingFamily::ZPowerR => x.0 % self.p != 0,
            RingFamily::TruncatedPoly => x.0 % self.q != 0,
        }
    }

    /// Inverse by Newton–Hensel lifting from the residue field.
    pub fn inverse(&self, x: RingElem) -> Result<RingElem> {
        if !self.is_unit(x) {
            return Err(Error::NotInvertible { index: x.0 });
        }
        // residue field inverse as the starting point
        let mut y = match self.family {
            RingFamily::ZPowerR => RingElem(self.fq_inv(x.0 % self.p).unwrap()),
            RingFamily::TruncatedPoly => RingElem(self.fq_inv(x.0 % self.q).unwrap()),
        };
        // y_{k+1} = y_k (2 - x y_k); precision doubles each step
        let two = self.add(self.one(), self.one());
        let mut prec = 1u32;
        while prec < self.r {
            y = self.mul(y, self.sub(two, self.mul(x, y)));
            prec *= 2;
        }
        debug_assert_eq!(self.mul(x, y), self.one());
        Ok(y)
    }

    /// v(x) = max k with x ∈ 𝔪^k, with the convention v(0) = r.
    pub fn valuation(&self, x: RingElem) -> u32 {
        debug_assert!(x.0 < self.order);
        if x.0 == 0 {
            return self.r;
        }
        match self.family {
            RingFamily::ZPowerR => {
                let mut v = 0;
                let mut n = x.0;
                while n % self.p == 0 {
                    n /= self.p;
                    v += 1;
                }
                v
            }
            RingFamily::TruncatedPoly => {
                let mut v = 0;
                let mut idx = x.0;
                while idx % self.q == 0 {
                    idx /= self.q;
                    v += 1;
                }
                v
            }
        }
    }

    /// All elements in index order.
    pub fn enumerate(&self) -> impl Iterator<Item = RingElem> + '_ {
        (0..self.order).map(RingElem)
    }

    /// All units in index order; count is q^r - q^{r-1}.
    pub fn enumerate_units(&self) -> impl Iterator<Item = RingElem> + '_ {
        self.enumerate().filter(|&x| self.is_unit(x))
    }

    /// All nonunits (the maximal ideal) in index order.
    pub fn enumerate_nonunits(&self) -> impl Iterator<Item = RingElem> + '_ {
        self.enumerate().filter(|&x| !self.is_unit(x))
    }

    /// Element rendering: the residue for Z/p^r, a polynomial in t otherwise.
    pub fn format_elem(&self, x: RingElem) -> String {
        match self.family {
            RingFamily::ZPowerR => x.0.to_string(),
            RingFamily::TruncatedPoly => {
                let digits = self.digits(x);
                let mut terms = Vec::new();
                for (i, &d) in digits.iter().enumerate() {
                    if d == 0 {
                        continue;
                    }
                    let t = match (i, d) {
                        (0, _) => d.to_string(),
                        (1, 1) => "t".to_string(),
                        (1, _) => format!("{d}t"),
                        (_, 1) => format!("t^{i}"),
                        (_, _) => format!("{d}t^{i}"),
                    };
                    terms.push(t);
                }
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_spec())
    }
}
