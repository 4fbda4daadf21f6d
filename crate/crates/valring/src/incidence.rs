//! Points and planes in R^3, brute-force incidence counting, and the
//! embedding of the incidence problem into E_{q,4}(R).
//!
//! A plane ax+by+cz = d is the projective class of its coefficient vector
//! (a,b,c,-d); a point (x1,x2,x3) embeds as the class of (x1,x2,x3,1). The
//! point lies on the plane iff the two classes are orthogonal, so incidences
//! are edges of E_{q,4}(R).

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::projective::{canonicalize, ClassSet, ProjClass};
use crate::ring::{RingElem, RingSpec};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point3 {
    ring: RingSpec,
    coords: [RingElem; 3],
}

impl Point3 {
    pub fn new(ring: &RingSpec, x1: RingElem, x2: RingElem, x3: RingElem) -> Result<Self> {
        for c in [x1, x2, x3] {
            ring.elem(c.index())?;
        }
        Ok(Point3 { ring: ring.clone(), coords: [x1, x2, x3] })
    }

    pub fn coords(&self) -> &[RingElem; 3] {
        &self.coords
    }

    /// The class of (x1, x2, x3, 1); the appended 1 guarantees a unit
    /// coordinate, and distinct points give distinct classes.
    pub fn embed(&self) -> ProjClass {
        let raw = [self.coords[0], self.coords[1], self.coords[2], self.ring.one()];
        canonicalize(&self.ring, &raw).expect("appended 1 is a unit")
    }
}

/// A plane ax+by+cz = d, stored as the canonical class of (a,b,c,-d).
/// Unit-proportional coefficient tuples give equal planes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Plane3 {
    coeffs: ProjClass,
}

impl Plane3 {
    /// From the equation ax + by + cz = d.
    pub fn from_equation(
        ring: &RingSpec,
        a: RingElem,
        b: RingElem,
        c: RingElem,
        d: RingElem,
    ) -> Result<Self> {
        let raw = [a, b, c, ring.neg(d)];
        Ok(Plane3 { coeffs: canonicalize(ring, &raw)? })
    }

    /// From an already-canonical coefficient class of dimension 4.
    pub fn from_class(coeffs: ProjClass) -> Result<Self> {
        if coeffs.d() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, got: coeffs.d() });
        }
        Ok(Plane3 { coeffs })
    }

    pub fn coeffs(&self) -> &ProjClass {
        &self.coeffs
    }
}

/// Direct evaluation of ax + by + cz = d with no class structure; works for
/// all-nonunit coefficient tuples that `Plane3` cannot represent, and serves
/// as the oracle for `is_on`.
pub fn satisfies_equation(
    ring: &RingSpec,
    coeffs: (RingElem, RingElem, RingElem, RingElem),
    point: &Point3,
) -> bool {
    let (a, b, c, d) = coeffs;
    let [x1, x2, x3] = *point.coords();
    let lhs = ring.add(ring.add(ring.mul(a, x1), ring.mul(b, x2)), ring.mul(c, x3));
    lhs == d
}

/// True iff the point satisfies the plane equation; equivalently the
/// embedded classes are orthogonal. Representative-independent.
pub fn is_on(point: &Point3, plane: &Plane3) -> Result<bool> {
    point.embed().incident(plane.coeffs())
}

#[derive(Debug, Clone, Serialize)]
pub struct IncidenceReport {
    pub q_size: usize,
    pub pi_size: usize,
    pub incidences: u64,
    /// (1/q^{r-1}) (q²+q+1)/(q³+q²+q+1) |Q||Π|
    pub main_term: f64,
    /// q^{2r-1} √(|Q||Π|)
    pub error_bound: f64,
    /// |incidences - main_term| ≤ error_bound, decided by exact integer
    /// arithmetic on the squared comparison.
    pub pass: bool,
    /// Edge count between the embedded vertex sets in E_{q,4}(R).
    pub cross_check_edges: u64,
}

/// Main-term coefficient as an exact fraction: numerator q²+q+1 over
/// denominator q^{r-1}(q³+q²+q+1). Equals degree/part-size of E_{q,4}(R).
pub fn main_term_fraction(ring: &RingSpec) -> (u64, u64) {
    let q = ring.q();
    let num = q * q + q + 1;
    let mut den = q * q * q + q * q + q + 1;
    for _ in 1..ring.r() {
        den *= q;
    }
    (num, den)
}

/// Ordinals of the embedded points in the graph's class set.
pub fn embed_points(classes: &ClassSet, points: &[Point3]) -> Vec<usize> {
    points
        .iter()
        .map(|p| classes.position(&p.embed()).expect("embedded class enumerated"))
        .collect()
}

/// Ordinals of the plane coefficient classes.
pub fn embed_planes(classes: &ClassSet, planes: &[Plane3]) -> Vec<usize> {
    planes
        .iter()
        .map(|h| classes.position(h.coeffs()).expect("plane class enumerated"))
        .collect()
}

/// Brute-force incidence count with the two-sided bound check and the graph
/// cross-check. `graph` must be E_{q,4}(R) for the same ring.
pub fn count_incidences(
    points: &[Point3],
    planes: &[Plane3],
    graph: &BipartiteGraph,
) -> Result<IncidenceReport> {
    let ring = graph.ring();
    if graph.d() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, got: graph.d() });
    }
    for p in points {
        if p.ring != *ring {
            return Err(Error::RingMismatch {
                left: p.ring.format_spec(),
                right: ring.format_spec(),
            });
        }
    }
    for h in planes {
        if h.coeffs.ring() != ring {
            return Err(Error::RingMismatch {
                left: h.coeffs.ring().format_spec(),
                right: ring.format_spec(),
            });
        }
    }
    // the oracle of record: a double loop evaluating ax1+bx2+cx3-d = 0
    let incidences: u64 = points
        .par_iter()
        .map(|p| {
            let [x1, x2, x3] = *p.coords();
            planes
                .iter()
                .filter(|h| {
                    let co = h.coeffs.coords();
                    let mut acc = ring.mul(co[0], x1);
                    acc = ring.add(acc, ring.mul(co[1], x2));
                    acc = ring.add(acc, ring.mul(co[2], x3));
                    acc = ring.add(acc, co[3]);
                    acc == ring.zero()
                })
                .count() as u64
        })
        .sum();

    let x = embed_points(graph.classes(), points);
    let y = embed_planes(graph.classes(), planes);
    let cross_check_edges = graph.edges_between(&x, &y);

    let (num, den) = main_term_fraction(ring);
    let s = points.len() as u64 * planes.len() as u64;
    let main_term = num as f64 / den as f64 * s as f64;
    let q2r1 = ring.q().pow(2 * ring.r() - 1);
    let error_bound = q2r1 as f64 * (s as f64).sqrt();
    // |I - (num/den) s| ≤ q^{2r-1} √s, squared and cleared of denominators
    let lhs = incidences as i128 * den as i128 - num as i128 * s as i128;
    let rhs = (den as i128).pow(2) * (q2r1 as i128).pow(2) * s as i128;
    let pass = lhs * lhs <= rhs;

    Ok(IncidenceReport {
        q_size: points.len(),
        pi_size: planes.len(),
        incidences,
        main_term,
        error_bound,
        pass,
        cross_check_edges,
    })
}

/// n distinct points with coordinates uniform over R³.
pub fn sample_points<R: Rng>(ring: &RingSpec, n: usize, rng: &mut R) -> Result<Vec<Point3>> {
    let space = (ring.order() as u128).pow(3);
    if n as u128 > space {
        return Err(Error::Capacity { what: "point sample", size: n as u64, cap: space.min(u64::MAX as u128) as u64 });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let coords = [
            RingElem(rng.random_range(0..ring.order())),
            RingElem(rng.random_range(0..ring.order())),
            RingElem(rng.random_range(0..ring.order())),
        ];
        if seen.insert(coords) {
            out.push(Point3 { ring: ring.clone(), coords });
        }
    }
    Ok(out)
}

/// n distinct planes drawn uniformly from the class set of E_{q,4}(R).
pub fn sample_planes<R: Rng>(
    classes: &ClassSet,
    n: usize,
    rng: &mut R,
) -> Result<Vec<Plane3>> {
    if n > classes.len() {
        return Err(Error::Capacity {
            what: "plane sample",
            size: n as u64,
            cap: classes.len() as u64,
        });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let i = rng.random_range(0..classes.len());
        if seen.insert(i) {
            out.push(Plane3 { coeffs: classes.get(i).clone() });
        }
    }
    Ok(out)
}

/// Every point of R³.
pub fn all_points(ring: &RingSpec) -> Vec<Point3> {
    let mut out = Vec::with_capacity((ring.order() as usize).pow(3));
    for x1 in ring.enumerate() {
        for x2 in ring.enumerate() {
            for x3 in ring.enumerate() {
                out.push(Point3 { ring: ring.clone(), coords: [x1, x2, x3] });
            }
        }
    }
    out
}

/// Every plane: one per class of dimension 4.
pub fn all_planes(classes: &ClassSet) -> Vec<Plane3> {
    classes.classes().iter().map(|c| Plane3 { coeffs: c.clone() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use rand::SeedableRng;

    fn f2() -> RingSpec {
        RingSpec::z_power_r(2, 1).unwrap()
    }
    fn z4() -> RingSpec {
        RingSpec::z_power_r(2, 2).unwrap()
    }

    fn pt(ring: &RingSpec, c: [u64; 3]) -> Point3 {
        Point3::new(
            ring,
            ring.elem(c[0]).unwrap(),
            ring.elem(c[1]).unwrap(),
            ring.elem(c[2]).unwrap(),
        )
        .unwrap()
    }

    fn plane(ring: &RingSpec, e: [u64; 4]) -> Plane3 {
        Plane3::from_equation(
            ring,
            ring.elem(e[0]).unwrap(),
            ring.elem(e[1]).unwrap(),
            ring.elem(e[2]).unwrap(),
            ring.elem(e[3]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn is_on_examples() {
        let f = f2();
        // x + y = 0 contains (1,1,0)
        assert!(is_on(&pt(&f, [1, 1, 0]), &plane(&f, [1, 1, 0, 0])).unwrap());

        // inconsistent plane [0,0,0,1]: no point satisfies it
        let r = z4();
        let p0 = pt(&r, [0, 0, 0]);
        let h = Plane3::from_class(
            canonicalize(&r, &[r.zero(), r.zero(), r.zero(), r.one()]).unwrap(),
        )
        .unwrap();
        assert!(!is_on(&p0, &h).unwrap());
    }

    #[test]
    fn all_nonunit_equation_evaluates_directly() {
        // 2x+2y+2z = 2 over Z/4 cannot be a Plane3 (no unit coefficient)
        // but the raw equation holds at (1,1,1): 2+2+2 = 6 ≡ 2.
        let r = z4();
        let two = r.elem(2).unwrap();
        assert!(Plane3::from_equation(&r, two, two, two, two).is_err());
        let coeffs = (two, two, two, two);
        assert!(satisfies_equation(&r, coeffs, &pt(&r, [1, 1, 1])));
        assert!(!satisfies_equation(&r, coeffs, &pt(&r, [1, 1, 2])));
    }

    #[test]
    fn is_on_matches_equation_oracle() {
        // representative independence: is_on agrees with the raw equation
        // whenever the coefficient tuple has a unit coordinate
        let r = z4();
        for a in r.enumerate() {
            for b in r.enumerate() {
                for d in r.enumerate() {
                    let c = r.one();
                    let h = Plane3::from_equation(&r, a, b, c, d).unwrap();
                    for x1 in r.enumerate() {
                        for x2 in r.enumerate() {
                            let p = Point3::new(&r, x1, x2, r.elem(1).unwrap()).unwrap();
                            assert_eq!(
                                is_on(&p, &h).unwrap(),
                                satisfies_equation(&r, (a, b, c, d), &p)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn embed_examples() {
        let r = z4();
        let origin = pt(&r, [0, 0, 0]).embed();
        let want: Vec<RingElem> =
            [0, 0, 0, 1].iter().map(|&i| RingElem(i)).collect();
        assert_eq!(origin.coords(), &want[..]);

        // 3x + y = 2 over Z/4 → class of (3,1,0,-2) = (3,1,0,2) → (1,3,0,2)
        let h = plane(&r, [3, 1, 0, 2]);
        let want: Vec<RingElem> =
            [1, 3, 0, 2].iter().map(|&i| RingElem(i)).collect();
        assert_eq!(h.coeffs().coords(), &want[..]);
    }

    #[test]
    fn embedding_is_injective() {
        let f = f2();
        let points = all_points(&f);
        assert_eq!(points.len(), 8);
        let images: HashSet<Vec<RingElem>> =
            points.iter().map(|p| p.embed().coords().to_vec()).collect();
        assert_eq!(images.len(), 8);
    }

    #[test]
    fn exhaustive_f2_incidences() {
        let f = f2();
        let g = build_graph(&f, 4).unwrap();
        let points = all_points(&f);
        let planes = all_planes(g.classes());
        assert_eq!((points.len(), planes.len()), (8, 15));
        let rep = count_incidences(&points, &planes, &g).unwrap();
        assert_eq!(rep.incidences, 56);
        assert_eq!(rep.cross_check_edges, 56);
        // main term (7/15)·8·15 = 56: error term exactly 0
        assert!((rep.main_term - 56.0).abs() < 1e-9);
        assert!(rep.pass);
    }

    #[test]
    fn empty_sets_pass() {
        let f = f2();
        let g = build_graph(&f, 4).unwrap();
        let rep = count_incidences(&[], &all_planes(g.classes()), &g).unwrap();
        assert_eq!(rep.incidences, 0);
        assert!(rep.pass);
        let rep = count_incidences(&all_points(&f), &[], &g).unwrap();
        assert_eq!(rep.incidences, 0);
        assert!(rep.pass);
    }

    #[test]
    fn main_coefficient_is_degree_over_part_size() {
        use crate::graph::{degree_formula, part_size_formula};
        for ring in [
            f2(),
            z4(),
            RingSpec::z_power_r(3, 2).unwrap(),
            RingSpec::truncated_poly_prime(3, 2).unwrap(),
            RingSpec::z_power_r(5, 2).unwrap(),
        ] {
            let (num, den) = main_term_fraction(&ring);
            let deg = degree_formula(&ring, 4).unwrap();
            let part = part_size_formula(&ring, 4).unwrap();
            // num/den == deg/part as exact integers
            assert_eq!(num as u128 * part as u128, deg as u128 * den as u128, "{ring}");
        }
    }

    #[test]
    fn random_pairs_pass_and_cross_check() {
        for ring in [z4(), RingSpec::truncated_poly_prime(2, 2).unwrap()] {
            let g = build_graph(&ring, 4).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
            for _ in 0..60 {
                use rand::Rng;
                let n = rng.random_range(1..=40);
                let m = rng.random_range(1..=60.min(g.part_size()));
                let points = sample_points(&ring, n, &mut rng).unwrap();
                let planes = sample_planes(g.classes(), m, &mut rng).unwrap();
                let rep = count_incidences(&points, &planes, &g).unwrap();
                assert_eq!(rep.incidences, rep.cross_check_edges, "{ring}");
                assert!(rep.pass, "{ring}: {rep:?}");
            }
        }
    }

    #[test]
    fn monotone_in_points() {
        let ring = z4();
        let g = build_graph(&ring, 4).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let points = sample_points(&ring, 30, &mut rng).unwrap();
        let planes = sample_planes(g.classes(), 40, &mut rng).unwrap();
        let small = count_incidences(&points[..10], &planes, &g).unwrap();
        let big = count_incidences(&points, &planes, &g).unwrap();
        assert!(small.incidences <= big.incidences);
    }

    #[test]
    fn plane_equality_up_to_unit_scale() {
        let r = z4();
        // 3x+y = 2 and 9x+3y = 6 (scaled by the unit 3) are the same plane
        assert_eq!(plane(&r, [3, 1, 0, 2]), plane(&r, [1, 3, 0, 2 * 3 % 4]));
    }
}
