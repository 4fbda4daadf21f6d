//! The bipartite orthogonality graph E_{q,d}(R) on projective classes, its
//! regularity formulas, spectrum, and the mixing inequality.
//!
//! Both vertex parts are copies of the class set; there is an edge between
//! [x] and [y] iff x · y = 0. The biadjacency matrix is stored as bitset
//! rows and expanded to floats only inside the eigensolver.

pub mod eigen;

pub use eigen::Solver;

use crate::error::{Error, Result};
use crate::projective::{class_count, ClassSet};
use crate::ring::RingSpec;
use rayon::prelude::*;
use serde::Serialize;

/// Default cap on the part size of one graph.
pub const DEFAULT_PART_CAP: u64 = 5000;

#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    ring: RingSpec,
    d: usize,
    classes: ClassSet,
    /// Bitset biadjacency, row-major: row i bit j = incident(A_i, B_j).
    rows: Vec<u64>,
    words_per_row: usize,
}

/// |A| = |B| = q^{(d-1)(r-1)} (q^d - 1)/(q - 1).
pub fn part_size_formula(ring: &RingSpec, d: usize) -> Option<u64> {
    class_count(ring, d)
}

/// Common degree q^{(d-2)(r-1)} (q^{d-1} - 1)/(q - 1).
pub fn degree_formula(ring: &RingSpec, d: usize) -> Option<u64> {
    let (q, r) = (ring.q(), ring.r() as u64);
    let d = d as u64;
    let mut geom: u64 = 0;
    let mut pw: u64 = 1;
    for _ in 0..d - 1 {
        geom = geom.checked_add(pw)?;
        pw = pw.checked_mul(q)?;
    }
    let mut scale: u64 = 1;
    for _ in 0..(d - 2) * (r - 1) {
        scale = scale.checked_mul(q)?;
    }
    scale.checked_mul(geom)
}

pub fn build_graph(ring: &RingSpec, d: usize) -> Result<BipartiteGraph> {
    build_graph_capped(ring, d, DEFAULT_PART_CAP)
}

pub fn build_graph_capped(ring: &RingSpec, d: usize, cap: u64) -> Result<BipartiteGraph> {
    let size = part_size_formula(ring, d)
        .ok_or(Error::Capacity { what: "part size", size: u64::MAX, cap })?;
    if size > cap {
        return Err(Error::Capacity { what: "part size", size, cap });
    }
    let classes = ClassSet::build(ring, d, cap)?;
    let n = classes.len();
    let words = n.div_ceil(64);
    let mut rows = vec![0u64; n * words];
    rows.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
        let a = classes.get(i);
        for j in 0..n {
            // dot of canonical representatives; orthogonality is
            // representative-independent
            if a.incident(classes.get(j)).expect("same ring and d") {
                row[j / 64] |= 1u64 << (j % 64);
            }
        }
    });
    Ok(BipartiteGraph { ring: ring.clone(), d, classes, rows, words_per_row: words })
}

impl BipartiteGraph {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }
    pub fn d(&self) -> usize {
        self.d
    }
    /// Shared class set: part A and part B are two copies of it.
    pub fn classes(&self) -> &ClassSet {
        &self.classes
    }
    pub fn part_size(&self) -> usize {
        self.classes.len()
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn degree_of(&self, i: usize) -> u64 {
        self.row(i).iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Column degree (part B side).
    pub fn codegree_of(&self, j: usize) -> u64 {
        (0..self.part_size()).filter(|&i| self.has_edge(i, j)).count() as u64
    }

    pub fn edge_count(&self) -> u64 {
        self.rows.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Brute-force e(X, Y): X indexes part A, Y indexes part B.
    pub fn edges_between(&self, x: &[usize], y: &[usize]) -> u64 {
        let mut mask = vec![0u64; self.words_per_row];
        for &j in y {
            mask[j / 64] |= 1u64 << (j % 64);
        }
        x.iter()
            .map(|&i| {
                self.row(i)
                    .iter()
                    .zip(&mask)
                    .map(|(w, m)| (w & m).count_ones() as u64)
                    .sum::<u64>()
            })
            .sum()
    }

    /// Gram matrix B·Bᵀ as floats; entry (i,j) = |N(i) ∩ N(j)|.
    fn gram(&self) -> Vec<f64> {
        let n = self.part_size();
        let mut g = vec![0.0f64; n * n];
        g.par_chunks_mut(n).enumerate().for_each(|(i, grow)| {
            let ri = self.row(i);
            for (j, slot) in grow.iter_mut().enumerate() {
                let rj = self.row(j);
                let common: u64 =
                    ri.iter().zip(rj).map(|(a, b)| (a & b).count_ones() as u64).sum();
                *slot = common as f64;
            }
        });
        g
    }
}

/// Documented eigensolver tolerance used by the pass criteria.
pub const SOLVER_TOLERANCE: f64 = 1e-8;
/// Slack added to the spectral bound comparison.
pub const SPECTRAL_SLACK: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    pub ring: String,
    pub d: usize,
    pub part_size: usize,
    pub degree: u64,
    /// Singular values of the biadjacency matrix, descending.
    pub singular_values: Vec<f64>,
    /// Second largest singular value; the graph's "third eigenvalue" once
    /// the symmetric ±degree pair is accounted for.
    pub lambda3: f64,
    /// q^{(d-2)(2r-1)/2}
    pub bound: f64,
    pub pass: bool,
    pub solver_tolerance: f64,
}

/// Singular values via eigendecomposition of B·Bᵀ.
pub fn spectrum(g: &BipartiteGraph, solver: Solver) -> Result<SpectralReport> {
    let n = g.part_size();
    let eigs = eigen::symmetric_eigenvalues(g.gram(), n, solver)?;
    let singular_values: Vec<f64> = eigs.iter().map(|&e| e.max(0.0).sqrt()).collect();
    let ring = g.ring();
    let (q, r, d) = (ring.q() as f64, ring.r() as f64, g.d() as f64);
    let bound = q.powf((d - 2.0) * (2.0 * r - 1.0) / 2.0);
    let lambda3 = if n > 1 { singular_values[1] } else { 0.0 };
    let degree = degree_formula(ring, g.d()).expect("graph fits in u64");
    Ok(SpectralReport {
        ring: ring.format_spec(),
        d: g.d(),
        part_size: n,
        degree,
        lambda3,
        bound,
        pass: lambda3 <= bound + SPECTRAL_SLACK,
        solver_tolerance: SOLVER_TOLERANCE,
        singular_values,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct MixingRecord {
    pub x_size: usize,
    pub y_size: usize,
    pub edges: u64,
    /// (a/|B|)|X||Y|
    pub main_term: f64,
    /// λ₃ √(|X||Y|)
    pub error_bound: f64,
    pub pass: bool,
}

/// Check |e(X,Y) - (a/|B|)|X||Y|| ≤ λ₃ √(|X||Y|) by brute force.
pub fn mixing_check(
    g: &BipartiteGraph,
    lambda3: f64,
    x: &[usize],
    y: &[usize],
) -> MixingRecord {
    let edges = g.edges_between(x, y);
    let degree = degree_formula(g.ring(), g.d()).expect("graph fits in u64") as f64;
    let main_term = degree / g.part_size() as f64 * x.len() as f64 * y.len() as f64;
    let error_bound = lambda3 * ((x.len() * y.len()) as f64).sqrt();
    let pass = (edges as f64 - main_term).abs() <= error_bound + SPECTRAL_SLACK;
    MixingRecord { x_size: x.len(), y_size: y.len(), edges, main_term, error_bound, pass }
}
