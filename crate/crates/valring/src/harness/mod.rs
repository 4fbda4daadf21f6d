//! Experiment orchestration: seeded sampling, grid runs, record collection.
//!
//! Every trial draws its randomness from `derive_substream(master_seed,
//! experiment_id, trial)`, so results are independent of worker scheduling
//! and identical between serial and parallel runs.

pub mod config;
pub mod report;
pub mod rng;

pub use config::{Experiment, ExperimentConfig, OutputFormat, DEFAULT_GRID};
pub use report::{
    render_csv, render_json, RunSummary, Thm2RatioRow, TrialRecord, CSV_HEADER,
};
pub use rng::derive_substream;

use crate::error::Result;
use crate::graph::{build_graph_capped, mixing_check, spectrum, Solver};
use crate::incidence::{count_incidences, sample_planes, sample_points};
use crate::ring::{RingElem, RingSpec};
use crate::sumprod::{
    check_theorem1, check_theorem2, energy, lines_from_product, plunnecke_verify, ElemSet,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::time::Instant;

/// Exactly min(n, |R|) distinct elements, uniform without replacement.
fn sample_set(ring: &RingSpec, n: usize, rng: &mut ChaCha8Rng) -> ElemSet {
    let n = n.min(ring.order() as usize);
    let mut seen = std::collections::HashSet::new();
    while seen.len() < n {
        seen.insert(RingElem(rng.random_range(0..ring.order())));
    }
    ElemSet::new(ring, seen).expect("sampled indices are in range")
}

fn ratio_of(lhs: f64, rhs: f64) -> f64 {
    if rhs != 0.0 {
        lhs / rhs
    } else if lhs == 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

fn graph_dims(cfg: &ExperimentConfig) -> Vec<usize> {
    match cfg.d {
        Some(d) => vec![d],
        None => vec![3, 4],
    }
}

fn spectrum_records(rings: &[RingSpec], cfg: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    let mut out = Vec::new();
    for ring in rings {
        for (trial, &d) in graph_dims(cfg).iter().enumerate() {
            let g = build_graph_capped(ring, d, cfg.part_cap)?;
            let rep = spectrum(&g, Solver::default())?;
            out.push(TrialRecord {
                experiment: "spectrum".into(),
                ring: ring.format_spec(),
                trial: trial as u64,
                inputs: format!("d={d};n={}", rep.part_size),
                lhs: rep.lambda3,
                rhs: rep.bound,
                ratio: ratio_of(rep.lambda3, rep.bound),
                pass: rep.pass,
            });
        }
    }
    Ok(out)
}

/// Vertex subsets drawn by independent inclusion with probability from
/// {0.1, ..., 0.9}, one probability per side per trial.
fn draw_vertex_subset(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let p = rng.random_range(1..=9) as f64 / 10.0;
    (0..n).filter(|_| rng.random::<f64>() < p).collect()
}

fn mixing_records(rings: &[RingSpec], cfg: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    let mut out = Vec::new();
    for ring in rings {
        for &d in &graph_dims(cfg) {
            let g = build_graph_capped(ring, d, cfg.part_cap)?;
            let lambda3 = spectrum(&g, Solver::default())?.lambda3;
            let id = format!("mixing:{}:{d}", ring.format_spec());
            let records: Vec<TrialRecord> = (0..cfg.trials)
                .into_par_iter()
                .map(|trial| {
                    let mut rng = derive_substream(cfg.master_seed, &id, trial);
                    let x = draw_vertex_subset(g.part_size(), &mut rng);
                    let y = draw_vertex_subset(g.part_size(), &mut rng);
                    let rec = mixing_check(&g, lambda3, &x, &y);
                    let lhs = (rec.edges as f64 - rec.main_term).abs();
                    TrialRecord {
                        experiment: "mixing".into(),
                        ring: ring.format_spec(),
                        trial,
                        inputs: format!("d={d};|X|={};|Y|={}", rec.x_size, rec.y_size),
                        lhs,
                        rhs: rec.error_bound,
                        ratio: ratio_of(lhs, rec.error_bound),
                        pass: rec.pass,
                    }
                })
                .collect();
            out.extend(records);
        }
    }
    Ok(out)
}

fn incidence_records(rings: &[RingSpec], cfg: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    let mut out = Vec::new();
    for ring in rings {
        let g = build_graph_capped(ring, 4, cfg.part_cap)?;
        let id = format!("incidence:{}", ring.format_spec());
        let records: Result<Vec<TrialRecord>> = (0..cfg.trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = derive_substream(cfg.master_seed, &id, trial);
                let n_points = cfg.points.min((ring.order() as usize).pow(3));
                let n_planes = cfg.planes.min(g.part_size());
                let points = sample_points(ring, n_points, &mut rng)?;
                let planes = sample_planes(g.classes(), n_planes, &mut rng)?;
                let rep = count_incidences(&points, &planes, &g)?;
                let lhs = (rep.incidences as f64 - rep.main_term).abs();
                Ok(TrialRecord {
                    experiment: "incidence".into(),
                    ring: ring.format_spec(),
                    trial,
                    inputs: format!("|Q|={};|Pi|={}", rep.q_size, rep.pi_size),
                    lhs,
                    rhs: rep.error_bound,
                    ratio: ratio_of(lhs, rep.error_bound),
                    pass: rep.pass && rep.cross_check_edges == rep.incidences,
                })
            })
            .collect();
        out.extend(records?);
    }
    Ok(out)
}

fn energy_records(rings: &[RingSpec], cfg: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    let mut out = Vec::new();
    for ring in rings {
        let id = format!("energy:{}", ring.format_spec());
        let records: Result<Vec<TrialRecord>> = (0..cfg.trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = derive_substream(cfg.master_seed, &id, trial);
                let slopes = sample_set(ring, rng.random_range(1..=cfg.size), &mut rng);
                let offsets = sample_set(ring, rng.random_range(1..=cfg.size), &mut rng);
                let a = sample_set(ring, rng.random_range(1..=cfg.size), &mut rng);
                let lines = lines_from_product(&slopes, &offsets)?;
                let rep = energy(&lines, &a)?;
                Ok(TrialRecord {
                    experiment: "energy".into(),
                    ring: ring.format_spec(),
                    trial,
                    inputs: format!("|L|={};w={};|A|={}", rep.distinct_lines, rep.weight, rep.a_size),
                    lhs: rep.e as f64,
                    rhs: rep.rhs,
                    ratio: ratio_of(rep.e as f64, rep.rhs),
                    pass: rep.collision_pass && rep.cauchy_schwarz_pass,
                })
            })
            .collect();
        out.extend(records?);
    }
    Ok(out)
}

fn thm1_records(rings: &[RingSpec], cfg: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    let mut out = Vec::new();
    for ring in rings {
        let id = format!("thm1:{}", ring.format_spec());
        let records: Result<Vec<TrialRecord>> = (0..cfg.trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = derive_substream(cfg.master_seed, &id, trial);
                let a = sample_set(ring, cfg.sizes.0, &mut rng);
                let b = sample_set(ring, cfg.sizes.1, &mut rng);
                let c = sample_set(ring, cfg.sizes.2, &mut rng);
                let rec = check_theorem1(&a, &b, &c)?;
                Ok(TrialRecord {
                    experiment: "thm1".into(),
                    ring: ring.format_spec(),
                    trial,
                    inputs: format!("|A|={};|B|={};|C|={}", rec.a_size, rec.b_size, rec.c_size),
                    lhs: rec.lhs as f64,
                    rhs: rec.rhs,
                    ratio: rec.ratio,
                    pass: rec.pass,
                })
            })
            .collect();
        out.extend(records?);
    }
    Ok(out)
}

fn thm2_records(
    rings: &[RingSpec],
    cfg: &ExperimentConfig,
) -> Result<(Vec<TrialRecord>, Vec<Thm2RatioRow>)> {
    let mut out = Vec::new();
    let mut ratios = Vec::new();
    for ring in rings {
        let id = format!("thm2:{}", ring.format_spec());
        let per_ring: Result<Vec<(TrialRecord, Option<Thm2RatioRow>)>> = (0..cfg.trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = derive_substream(cfg.master_seed, &id, trial);
                let a = sample_set(ring, rng.random_range(1..=cfg.size), &mut rng);
                let rep = check_theorem2(&a)?;
                let lhs = (rep.a_size as f64).powi(6);
                let rhs = rep.square_triple_sumset as f64 * rep.energy_squares as f64;
                let row = rep.ratio.map(|ratio| Thm2RatioRow {
                    ring: ring.format_spec(),
                    trial,
                    a_size: rep.a_size,
                    ratio,
                });
                Ok((
                    TrialRecord {
                        experiment: "thm2".into(),
                        ring: ring.format_spec(),
                        trial,
                        inputs: format!(
                            "|A|={};char2={};hyp={}",
                            rep.a_size, rep.char_two, rep.hypothesis
                        ),
                        lhs,
                        rhs,
                        ratio: ratio_of(lhs, rhs),
                        pass: rep.pass,
                    },
                    row,
                ))
            })
            .collect();
        for (rec, row) in per_ring? {
            out.push(rec);
            ratios.extend(row);
        }
    }
    Ok((out, ratios))
}

fn plunnecke_records(rings: &[RingSpec], cfg: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    let mut out = Vec::new();
    for ring in rings {
        let id = format!("plunnecke:{}", ring.format_spec());
        let records: Result<Vec<TrialRecord>> = (0..cfg.trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = derive_substream(cfg.master_seed, &id, trial);
                let a = sample_set(ring, rng.random_range(1..=8), &mut rng);
                let b = sample_set(ring, rng.random_range(1..=8), &mut rng);
                let delta = cfg.delta;
                let k = cfg.k;
                let rep = plunnecke_verify(&a, &b, delta, k)?;
                let inputs = format!(
                    "|A|={};|B|={};delta={}/{};k={k}",
                    rep.a_size, rep.b_size, delta.0, delta.1
                );
                let (lhs, rhs, pass) = match &rep.witness {
                    Some(w) => (w.x_plus_kb as f64, w.bound, true),
                    None => (0.0, 0.0, false),
                };
                Ok(TrialRecord {
                    experiment: "plunnecke".into(),
                    ring: ring.format_spec(),
                    trial,
                    inputs,
                    lhs,
                    rhs,
                    ratio: ratio_of(lhs, rhs),
                    pass,
                })
            })
            .collect();
        out.extend(records?);
    }
    Ok(out)
}

/// Execute the configured experiments over the ring grid.
pub fn run(cfg: &ExperimentConfig) -> Result<(Vec<TrialRecord>, RunSummary)> {
    let start = Instant::now();
    cfg.validate()?;
    let rings = cfg.ring_grid()?;
    let experiments: Vec<Experiment> = match cfg.experiment {
        Experiment::All => vec![
            Experiment::Spectrum,
            Experiment::Mixing,
            Experiment::Incidence,
            Experiment::Energy,
            Experiment::Thm1,
            Experiment::Thm2,
            Experiment::Plunnecke,
        ],
        e => vec![e],
    };
    let mut records = Vec::new();
    let mut ratios = Vec::new();
    for exp in experiments {
        match exp {
            Experiment::Spectrum => records.extend(spectrum_records(&rings, cfg)?),
            Experiment::Mixing => records.extend(mixing_records(&rings, cfg)?),
            Experiment::Incidence => records.extend(incidence_records(&rings, cfg)?),
            Experiment::Energy => records.extend(energy_records(&rings, cfg)?),
            Experiment::Thm1 => records.extend(thm1_records(&rings, cfg)?),
            Experiment::Thm2 => {
                let (recs, rows) = thm2_records(&rings, cfg)?;
                records.extend(recs);
                ratios.extend(rows);
            }
            Experiment::Plunnecke => records.extend(plunnecke_records(&rings, cfg)?),
            Experiment::All => unreachable!("expanded above"),
        }
    }
    let wall = start.elapsed().as_secs_f64();
    let summary = RunSummary::from_records(&records, ratios, wall);
    Ok((records, summary))
}
