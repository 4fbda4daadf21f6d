//! Acceptance gate: one test per release criterion. Each prints a single
//! pass/fail line (visible with `--nocapture`) and asserts the criterion
//! together with its runtime budget.

use rand::Rng;
use std::time::Instant;
use valring::graph::{
    build_graph_capped, degree_formula, mixing_check, part_size_formula, spectrum, Solver,
};
use valring::harness::derive_substream;
use valring::incidence::{all_planes, all_points, count_incidences, sample_planes, sample_points};
use valring::ring::{RingElem, RingSpec};
use valring::sumprod::{
    check_theorem1, check_theorem2, energy, energy_squares, lines_from_product, plunnecke_verify,
    ElemSet,
};

const MASTER_SEED: u64 = 42;
const PART_LIMIT: u64 = 5000;

fn conclude(criterion: u32, what: &str, started: Instant, limit_secs: f64, pass: bool, detail: &str) {
    let secs = started.elapsed().as_secs_f64();
    let verdict = if pass && secs <= limit_secs { "PASS" } else { "FAIL" };
    println!("criterion {criterion} ({what}): {verdict} [{secs:.1}s] {detail}");
    assert!(pass, "criterion {criterion} ({what}) failed: {detail}");
    assert!(
        secs <= limit_secs,
        "criterion {criterion} ({what}) overran its {limit_secs}s budget: {secs:.1}s"
    );
}

/// q in {2,3,5} x r in {1,2,3}, both ring families.
fn grid_rings() -> Vec<RingSpec> {
    let mut out = Vec::new();
    for q in [2u64, 3, 5] {
        for r in [1u32, 2, 3] {
            out.push(RingSpec::z_power_r(q, r).unwrap());
            out.push(RingSpec::truncated_poly_prime(q, r).unwrap());
        }
    }
    out
}

/// (ring, d) pairs from the grid whose vertex part fits the size limit.
fn graph_grid() -> Vec<(RingSpec, usize)> {
    let mut out = Vec::new();
    for ring in grid_rings() {
        for d in [3usize, 4] {
            match part_size_formula(&ring, d) {
                Some(n) if n <= PART_LIMIT => out.push((ring.clone(), d)),
                _ => {}
            }
        }
    }
    out
}

/// Rings used by the experiment harness defaults.
fn default_grid() -> Vec<RingSpec> {
    ["Z/2^2", "Z/2^3", "Z/3^2", "GF(2)[t]/t^2", "GF(3)[t]/t^2"]
        .iter()
        .map(|s| RingSpec::parse(s).unwrap())
        .collect()
}

fn random_subset(ring: &RingSpec, size: usize, rng: &mut impl Rng) -> ElemSet {
    let size = size.min(ring.order() as usize);
    let mut seen = std::collections::HashSet::new();
    while seen.len() < size {
        seen.insert(RingElem(rng.random_range(0..ring.order())));
    }
    ElemSet::new(ring, seen).unwrap()
}

/// All subsets of the ring with the given size, as sorted index masks.
fn subsets_of_size(ring: &RingSpec, size: u32) -> Vec<ElemSet> {
    let n = ring.order() as u32;
    assert!(n <= 16, "exhaustive sweeps are for tiny rings");
    (1u32..1 << n)
        .filter(|m| m.count_ones() == size)
        .map(|m| {
            let members = (0..n).filter(|i| m >> i & 1 == 1).map(|i| RingElem(i as u64));
            ElemSet::new(ring, members).unwrap()
        })
        .collect()
}

#[test]
fn criterion_1_structure_formulas() {
    let started = Instant::now();
    let mut graphs = 0usize;
    for (ring, d) in graph_grid() {
        let parts = part_size_formula(&ring, d).unwrap();
        let degree = degree_formula(&ring, d).unwrap();
        let g = build_graph_capped(&ring, d, PART_LIMIT).unwrap();
        assert_eq!(g.part_size() as u64, parts, "{ring} d={d} part size");
        for i in 0..g.part_size() {
            assert_eq!(g.degree_of(i), degree, "{ring} d={d} row {i}");
            assert_eq!(g.codegree_of(i), degree, "{ring} d={d} column {i}");
        }
        graphs += 1;
    }
    conclude(
        1,
        "structure formulas",
        started,
        60.0,
        graphs > 0,
        &format!("{graphs} graphs, all part sizes and degrees exact"),
    );
}

#[test]
fn criterion_2_spectral_bound() {
    let started = Instant::now();
    let mut checked = 0usize;
    let mut fixed_point = f64::NAN;
    for (ring, d) in graph_grid() {
        let g = build_graph_capped(&ring, d, PART_LIMIT).unwrap();
        let rep = spectrum(&g, Solver::default()).unwrap();
        assert!(
            rep.pass,
            "{ring} d={d}: lambda3 {} above bound {}",
            rep.lambda3, rep.bound
        );
        if ring.format_spec() == "Z/2" && d == 4 {
            fixed_point = rep.lambda3;
        }
        checked += 1;
    }
    let fixed_ok = (fixed_point - 2.0).abs() <= 1e-6;
    conclude(
        2,
        "spectral bound",
        started,
        300.0,
        checked > 0 && fixed_ok,
        &format!("{checked} spectra within bound; sigma2(F2, d=4) = {fixed_point:.9}"),
    );
}

#[test]
fn criterion_3_mixing() {
    let started = Instant::now();
    let mut checks = 0u64;
    for (ring, d) in graph_grid() {
        let g = build_graph_capped(&ring, d, PART_LIMIT).unwrap();
        let lambda3 = spectrum(&g, Solver::default()).unwrap().lambda3;
        let id = format!("acc3:{}:{d}", ring.format_spec());
        for trial in 0..200u64 {
            let mut rng = derive_substream(MASTER_SEED, &id, trial);
            let px = rng.random_range(1..=9) as f64 / 10.0;
            let x: Vec<usize> = (0..g.part_size()).filter(|_| rng.random::<f64>() < px).collect();
            let py = rng.random_range(1..=9) as f64 / 10.0;
            let y: Vec<usize> = (0..g.part_size()).filter(|_| rng.random::<f64>() < py).collect();
            let rec = mixing_check(&g, lambda3, &x, &y);
            assert!(
                rec.pass,
                "{ring} d={d} trial {trial}: |{} - {}| > {}",
                rec.edges, rec.main_term, rec.error_bound
            );
            checks += 1;
        }
    }
    conclude(
        3,
        "expander mixing",
        started,
        120.0,
        checks > 0,
        &format!("{checks} random (X,Y) pairs within the mixing bound"),
    );
}

#[test]
fn criterion_4_incidence() {
    let started = Instant::now();
    let rings = ["Z/2^2", "Z/3^2", "GF(2)[t]/t^2", "GF(3)[t]/t^2"];
    let mut checks = 0u64;
    for spec in rings {
        let ring = RingSpec::parse(spec).unwrap();
        let g = build_graph_capped(&ring, 4, PART_LIMIT).unwrap();
        let id = format!("acc4:{spec}");
        for trial in 0..100u64 {
            let mut rng = derive_substream(MASTER_SEED, &id, trial);
            let points = sample_points(&ring, 30, &mut rng).unwrap();
            let planes = sample_planes(g.classes(), 30, &mut rng).unwrap();
            let rep = count_incidences(&points, &planes, &g).unwrap();
            assert_eq!(rep.cross_check_edges, rep.incidences, "{spec} trial {trial}");
            assert!(rep.pass, "{spec} trial {trial} violates the incidence bound");
            checks += 1;
        }
    }
    // Exhaustive field case: every point against every plane.
    let f2 = RingSpec::parse("Z/2").unwrap();
    let g = build_graph_capped(&f2, 4, PART_LIMIT).unwrap();
    let rep = count_incidences(&all_points(&f2), &all_planes(g.classes()), &g).unwrap();
    let exhaustive_ok = rep.incidences == 56
        && rep.cross_check_edges == 56
        && (rep.incidences as f64 - rep.main_term).abs() == 0.0;
    conclude(
        4,
        "incidence bound",
        started,
        180.0,
        checks == 400 && exhaustive_ok,
        &format!(
            "{checks} sampled pairs exact; exhaustive F2 case I = {} with zero error",
            rep.incidences
        ),
    );
}

#[test]
fn criterion_5_energy() {
    let started = Instant::now();
    let mut checks = 0u64;
    for ring in default_grid() {
        let id = format!("acc5:{}", ring.format_spec());
        for trial in 0..300u64 {
            let mut rng = derive_substream(MASTER_SEED, &id, trial);
            let slopes = random_subset(&ring, rng.random_range(1..=4), &mut rng);
            let offsets = random_subset(&ring, rng.random_range(1..=4), &mut rng);
            let a = random_subset(&ring, rng.random_range(1..=4), &mut rng);
            let lines = lines_from_product(&slopes, &offsets).unwrap();
            let rep = energy(&lines, &a).unwrap();
            let from_histogram: u64 = rep.r_histogram.iter().map(|(_, r)| r * r).sum();
            assert_eq!(rep.e, from_histogram, "{ring} trial {trial}: E != sum r(y)^2");
            assert!(rep.collision_pass, "{ring} trial {trial}: collision bound");
            assert!(rep.cauchy_schwarz_pass, "{ring} trial {trial}: Cauchy-Schwarz");
            checks += 1;
        }
    }
    conclude(
        5,
        "collision energy",
        started,
        120.0,
        checks == 1500,
        &format!("{checks} (P,A) samples satisfy the energy identities exactly"),
    );
}

#[test]
fn criterion_6_theorem1() {
    let started = Instant::now();

    // Exhaustive sweep over Z/4: all nonempty (A, B, C).
    let z4 = RingSpec::parse("Z/2^2").unwrap();
    let nonempty: Vec<ElemSet> =
        (1..=4).flat_map(|k| subsets_of_size(&z4, k)).collect();
    assert_eq!(nonempty.len(), 15);
    let mut exhaustive = 0u64;
    for a in &nonempty {
        for b in &nonempty {
            for c in &nonempty {
                let rec = check_theorem1(a, b, c).unwrap();
                assert!(
                    rec.pass,
                    "Z/4 A={:?} B={:?} C={:?}: |BA+C| = {} < {}",
                    a.members(),
                    b.members(),
                    c.members(),
                    rec.lhs,
                    rec.rhs
                );
                exhaustive += 1;
            }
        }
    }
    assert_eq!(exhaustive, 3375);

    // Random triples across the default grid.
    let mut random_checks = 0u64;
    for ring in default_grid() {
        let id = format!("acc6:{}", ring.format_spec());
        for trial in 0..10_000u64 {
            let mut rng = derive_substream(MASTER_SEED, &id, trial);
            let a = random_subset(&ring, rng.random_range(1..=4), &mut rng);
            let b = random_subset(&ring, rng.random_range(1..=4), &mut rng);
            let c = random_subset(&ring, rng.random_range(1..=4), &mut rng);
            let rec = check_theorem1(&a, &b, &c).unwrap();
            assert!(rec.pass, "{ring} trial {trial}");
            random_checks += 1;
        }
    }

    // Large-set regime: |AA+A| >= 9/2 for every 7-subset of Z/9.
    let z9 = RingSpec::parse("Z/3^2").unwrap();
    let sevens = subsets_of_size(&z9, 7);
    assert_eq!(sevens.len(), 36);
    for a in &sevens {
        let rec = check_theorem1(a, a, a).unwrap();
        assert!(
            rec.lhs as f64 >= 4.5 && rec.pass,
            "7-subset {:?}: |AA+A| = {}",
            a.members(),
            rec.lhs
        );
    }

    conclude(
        6,
        "theorem 1 surrogate",
        started,
        300.0,
        random_checks == 50_000,
        &format!(
            "3375 exhaustive Z/4 triples, {random_checks} random triples, 36 large 7-subsets of Z/9"
        ),
    );
}

#[test]
fn criterion_7_theorem2() {
    let started = Instant::now();

    // Exhaustive small subsets of Z/9.
    let z9 = RingSpec::parse("Z/3^2").unwrap();
    let mut exhaustive = 0u64;
    for size in 1..=5u32 {
        for a in subsets_of_size(&z9, size) {
            let rep = check_theorem2(&a).unwrap();
            assert!(
                rep.pass,
                "Z/9 A={:?}: cs={} relax={} collision={}",
                a.members(),
                rep.cs_pass,
                rep.relax_pass,
                rep.collision_pass
            );
            exhaustive += 1;
        }
    }
    assert_eq!(exhaustive, 381);

    // Random subsets per odd-characteristic grid ring, ratio table reported.
    let mut ratio_rows: Vec<(String, u64, u64, f64)> = Vec::new();
    let mut random_checks = 0u64;
    for ring in default_grid().into_iter().filter(|r| r.p() != 2) {
        let id = format!("acc7:{}", ring.format_spec());
        for trial in 0..500u64 {
            let mut rng = derive_substream(MASTER_SEED, &id, trial);
            let a = random_subset(&ring, rng.random_range(1..=6), &mut rng);
            let rep = check_theorem2(&a).unwrap();
            assert!(rep.pass, "{ring} trial {trial}");
            if let Some(ratio) = rep.ratio {
                ratio_rows.push((ring.format_spec(), trial, rep.a_size, ratio));
            }
            random_checks += 1;
        }
    }
    println!(
        "criterion 7 ratio table: {} hypothesis-satisfying runs",
        ratio_rows.len()
    );
    for (ring, trial, a_size, ratio) in ratio_rows.iter().take(10) {
        println!("  {ring:<14} trial {trial:>3}  |A|={a_size}  ratio={ratio:.4}");
    }
    let ratios_positive = ratio_rows.iter().all(|r| r.3 > 0.0);

    // Fixed point for the squares energy.
    let z4 = RingSpec::parse("Z/2^2").unwrap();
    let pair = ElemSet::from_indices(&z4, &[0, 1]).unwrap();
    let fixed = energy_squares(&pair).unwrap();

    conclude(
        7,
        "theorem 2 chain",
        started,
        300.0,
        random_checks == 1000 && ratios_positive && fixed == 20,
        &format!(
            "381 exhaustive + {random_checks} random subsets; energy_squares({{0,1}}) = {fixed}; {} ratio rows",
            ratio_rows.len()
        ),
    );
}

#[test]
fn criterion_8_plunnecke() {
    let started = Instant::now();
    const DELTAS: [(u64, u64); 3] = [(1, 4), (1, 2), (3, 4)];
    let mut witnesses = 0u64;
    for spec in ["Z/2^2", "Z/2^3", "Z/3^2"] {
        let ring = RingSpec::parse(spec).unwrap();
        let id = format!("acc8:{spec}");
        for trial in 0..100u64 {
            let mut rng = derive_substream(MASTER_SEED, &id, trial);
            let a = random_subset(&ring, rng.random_range(1..=8), &mut rng);
            let b = random_subset(&ring, rng.random_range(1..=8), &mut rng);
            let delta = DELTAS[rng.random_range(0..DELTAS.len())];
            let k = rng.random_range(2..=3u32);
            let rep = plunnecke_verify(&a, &b, delta, k).unwrap();
            let w = rep.witness.unwrap_or_else(|| {
                panic!("{spec} trial {trial}: no witness for |A|={} |B|={}", rep.a_size, rep.b_size)
            });
            assert!(
                (w.x_plus_kb as f64) < w.bound,
                "{spec} trial {trial}: witness not strict"
            );
            witnesses += 1;
        }
    }
    conclude(
        8,
        "Plunnecke-Ruzsa witnesses",
        started,
        120.0,
        witnesses == 300,
        &format!("{witnesses} instances produced strict witnesses"),
    );
}

#[test]
fn criterion_9_reproducibility() {
    let started = Instant::now();
    let bin = env!("CARGO_BIN_EXE_valring");
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("acceptance.cfg");
    std::fs::write(
        &cfg_path,
        "ring = Z/2^2\nring = Z/2^3\nring = GF(2)[t]/t^2\nexperiment = all\ntrials = 30\nseed = 42\n",
    )
    .unwrap();

    let run = |threads: Option<&str>| {
        let mut cmd = std::process::Command::new(bin);
        cmd.arg("run").arg("--config").arg(&cfg_path);
        if let Some(t) = threads {
            cmd.env("VALRING_THREADS", t);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success(), "run failed: {}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };

    let first = run(None);
    let second = run(None);
    let serial = run(Some("1"));
    let identical = first == second;
    let schedule_free = first == serial;
    assert!(!first.is_empty() && first.starts_with(b"experiment,ring,trial,"));
    conclude(
        9,
        "reproducibility",
        started,
        300.0,
        identical && schedule_free,
        &format!(
            "byte-identical reruns ({} bytes); serial run matches parallel",
            first.len()
        ),
    );
}
