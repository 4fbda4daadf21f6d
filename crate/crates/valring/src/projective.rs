//! Equivalence classes [x] of vectors in R^d ∖ (R⁰)^d under unit scaling.
//!
//! Canonical form: the leftmost unit coordinate is normalized to 1. The
//! position of the leftmost unit is constant on each scaling orbit, so this
//! picks a unique representative.

use crate::error::{Error, Result};
use crate::ring::{RingElem, RingSpec};
use std::collections::HashMap;
use std::fmt;

/// A projective class in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjClass {
    ring: RingSpec,
    coords: Vec<RingElem>,
}

impl ProjClass {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn d(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[RingElem] {
        &self.coords
    }

    fn check_compatible(&self, other: &ProjClass) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.format_spec(),
                right: other.ring.format_spec(),
            });
        }
        if self.d() != other.d() {
            return Err(Error::DimensionMismatch { expected: self.d(), got: other.d() });
        }
        Ok(())
    }

    /// Σᵢ xᵢyᵢ on the canonical representatives.
    pub fn dot(&self, other: &ProjClass) -> Result<RingElem> {
        self.check_compatible(other)?;
        let mut acc = self.ring.zero();
        for (&a, &b) in self.coords.iter().zip(&other.coords) {
            acc = self.ring.add(acc, self.ring.mul(a, b));
        }
        Ok(acc)
    }

    /// Edge predicate of the orthogonality graph: x · y = 0. Independent of
    /// representative choice since (t·x) · y = t·(x·y) and t is a unit.
    pub fn incident(&self, other: &ProjClass) -> Result<bool> {
        Ok(self.dot(other)? == self.ring.zero())
    }
}

impl fmt::Display for ProjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.coords.iter().map(|&c| self.ring.format_elem(c)).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// Scale `raw` by the inverse of its leftmost unit coordinate.
pub fn canonicalize(ring: &RingSpec, raw: &[RingElem]) -> Result<ProjClass> {
    if raw.len() < 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: raw.len() });
    }
    for &c in raw {
        ring.elem(c.index())?;
    }
    let pivot = raw
        .iter()
        .position(|&c| ring.is_unit(c))
        .ok_or(Error::DegenerateVector)?;
    let scale = ring.inverse(raw[pivot])?;
    let coords = raw.iter().map(|&c| ring.mul(scale, c)).collect();
    Ok(ProjClass { ring: ring.clone(), coords })
}

/// Number of classes: q^{(d-1)(r-1)} (q^d - 1)/(q - 1).
pub fn class_count(ring: &RingSpec, d: usize) -> Option<u64> {
    let (q, r) = (ring.q(), ring.r() as u64);
    let d = d as u64;
    let geom = {
        // 1 + q + ... + q^{d-1}
        let mut acc: u64 = 0;
        let mut pw: u64 = 1;
        for _ in 0..d {
            acc = acc.checked_add(pw)?;
            pw = pw.checked_mul(q)?;
        }
        acc
    };
    let mut scale: u64 = 1;
    for _ in 0..(d - 1) * (r - 1) {
        scale = scale.checked_mul(q)?;
    }
    scale.checked_mul(geom)
}

/// All classes, canonical, ordered by leftmost-unit position and then by
/// odometer order on the free coordinates.
pub fn enumerate_classes(ring: &RingSpec, d: usize) -> Result<Vec<ProjClass>> {
    enumerate_classes_capped(ring, d, crate::ring::DEFAULT_ORDER_CAP)
}

pub fn enumerate_classes_capped(
    ring: &RingSpec,
    d: usize,
    cap: u64,
) -> Result<Vec<ProjClass>> {
    if d < 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: d });
    }
    let count = class_count(ring, d)
        .filter(|&n| n <= cap)
        .ok_or(Error::Capacity { what: "class count", size: 0, cap })?;
    let nonunits: Vec<RingElem> = ring.enumerate_nonunits().collect();
    let all: Vec<RingElem> = ring.enumerate().collect();
    let mut out = Vec::with_capacity(count as usize);
    // pivot = position of the leftmost unit: nonunit prefix, 1, free suffix
    for pivot in 0..d {
        let mut coords = vec![ring.zero(); d];
        coords[pivot] = ring.one();
        emit(ring, &mut coords, 0, pivot, d, &nonunits, &all, &mut out);
    }
    debug_assert_eq!(out.len() as u64, count);
    Ok(out)
}

fn emit(
    ring: &RingSpec,
    coords: &mut Vec<RingElem>,
    pos: usize,
    pivot: usize,
    d: usize,
    nonunits: &[RingElem],
    all: &[RingElem],
    out: &mut Vec<ProjClass>,
) {
    if pos == d {
        out.push(ProjClass { ring: ring.clone(), coords: coords.clone() });
        return;
    }
    if pos == pivot {
        emit(ring, coords, pos + 1, pivot, d, nonunits, all, out);
        return;
    }
    let choices = if pos < pivot { nonunits } else { all };
    for &c in choices {
        coords[pos] = c;
        emit(ring, coords, pos + 1, pivot, d, nonunits, all, out);
    }
    coords[pos] = ring.zero();
}

/// The class list of one (ring, d) pair plus an ordinal lookup keyed by
/// canonical coordinates; built once and shared by graph construction and
/// the point/plane embeddings.
#[derive(Debug, Clone)]
pub struct ClassSet {
    classes: Vec<ProjClass>,
    index: HashMap<Vec<RingElem>, usize>,
}

impl ClassSet {
    pub fn build(ring: &RingSpec, d: usize, cap: u64) -> Result<Self> {
        let classes = enumerate_classes_capped(ring, d, cap)?;
        let index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.coords.clone(), i))
            .collect();
        Ok(ClassSet { classes, index })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ProjClass] {
        &self.classes
    }

    pub fn get(&self, i: usize) -> &ProjClass {
        &self.classes[i]
    }

    /// Ordinal of a canonical class.
    pub fn position(&self, class: &ProjClass) -> Option<usize> {
        self.index.get(class.coords()).copied()
    }
}
