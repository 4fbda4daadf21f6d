//! C ABI for the valring library.
//!
//! Conventions: every fallible call returns a ValringStatus and writes its
//! result through out-pointers; handles are opaque and freed with their
//! matching `_free`; element arguments are dense ring indices, validated on
//! entry. No call unwinds across the boundary.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use valring::error::Error;
use valring::graph::{build_graph_capped, mixing_check, spectrum, BipartiteGraph, Solver};
use valring::incidence::main_term_fraction;
use valring::ring::RingSpec;
use valring::sumprod::{
    check_theorem1, check_theorem2, energy, lines_from_product, plunnecke_verify, ElemSet,
};

/// Result discipline for every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValringStatus {
    Ok = 0,
    NullArgument = 1,
    Parse = 2,
    InvalidElement = 3,
    NotInvertible = 4,
    DegenerateVector = 5,
    DimensionMismatch = 6,
    RingMismatch = 7,
    Capacity = 8,
    Numerical = 9,
    Config = 10,
    Io = 11,
    OutOfRange = 12,
    BufferTooSmall = 13,
    Panic = 14,
}

impl From<&Error> for ValringStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => ValringStatus::Parse,
            Error::InvalidElement { .. } => ValringStatus::InvalidElement,
            Error::NotInvertible { .. } => ValringStatus::NotInvertible,
            Error::DegenerateVector => ValringStatus::DegenerateVector,
            Error::DimensionMismatch { .. } => ValringStatus::DimensionMismatch,
            Error::RingMismatch { .. } => ValringStatus::RingMismatch,
            Error::Capacity { .. } => ValringStatus::Capacity,
            Error::Numerical { .. } => ValringStatus::Numerical,
            Error::Config(_) => ValringStatus::Config,
            Error::Io(_) => ValringStatus::Io,
        }
    }
}

/// Opaque ring handle.
pub struct ValringRing(RingSpec);

/// Opaque bipartite graph handle.
pub struct ValringGraph(BipartiteGraph);

/// Singular-value summary of a graph.
#[repr(C)]
pub struct ValringSpectralReport {
    pub part_size: u64,
    pub degree: u64,
    pub lambda3: f64,
    pub bound: f64,
    pub pass: bool,
}

/// One expander-mixing spot check.
#[repr(C)]
pub struct ValringMixingRecord {
    pub x_size: u64,
    pub y_size: u64,
    pub edges: u64,
    pub main_term: f64,
    pub error_bound: f64,
    pub pass: bool,
}

/// |BA+C| against the growth bound.
#[repr(C)]
pub struct ValringTheorem1Report {
    pub a_size: u64,
    pub b_size: u64,
    pub c_size: u64,
    pub lhs: u64,
    pub rhs: f64,
    pub ratio: f64,
    pub pass: bool,
}

/// Collision energy of a product line family.
#[repr(C)]
pub struct ValringEnergyReport {
    pub e: u64,
    pub distinct_lines: u64,
    pub weight: u64,
    pub a_size: u64,
    pub evaluation_set_size: u64,
    pub rhs: f64,
    pub collision_pass: bool,
    pub cauchy_schwarz_pass: bool,
}

/// Square-sumset energy chain results.
#[repr(C)]
pub struct ValringTheorem2Report {
    pub a_size: u64,
    pub energy_squares: u64,
    pub square_triple_sumset: u64,
    pub cs_pass: bool,
    pub relax_pass: bool,
    pub collision_pass: bool,
    pub char_two: bool,
    pub hypothesis: bool,
    pub has_ratio: bool,
    pub ratio: f64,
    pub pass: bool,
}

/// Iterated sumset growth witness, when one was found.
#[repr(C)]
pub struct ValringPlunneckeReport {
    pub a_size: u64,
    pub b_size: u64,
    pub sum_ab_size: u64,
    pub k: u32,
    pub found: bool,
    pub x_size: u64,
    pub x_plus_kb: u64,
    pub bound: f64,
}

fn guarded(f: impl FnOnce() -> ValringStatus) -> ValringStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(ValringStatus::Panic)
}

unsafe fn ring_ref<'a>(ring: *const ValringRing) -> Option<&'a RingSpec> {
    ring.as_ref().map(|r| &r.0)
}

unsafe fn graph_ref<'a>(g: *const ValringGraph) -> Option<&'a BipartiteGraph> {
    g.as_ref().map(|g| &g.0)
}

unsafe fn index_slice<'a>(ptr: *const u64, len: usize) -> Option<&'a [u64]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

fn elem_set(ring: &RingSpec, indices: &[u64]) -> Result<ElemSet, Error> {
    ElemSet::from_indices(ring, indices)
}

/// Static human-readable name for a status code.
#[no_mangle]
pub extern "C" fn valring_status_message(status: ValringStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        ValringStatus::Ok => b"ok\0",
        ValringStatus::NullArgument => b"null argument\0",
        ValringStatus::Parse => b"parse error\0",
        ValringStatus::InvalidElement => b"element index out of range\0",
        ValringStatus::NotInvertible => b"element is not invertible\0",
        ValringStatus::DegenerateVector => b"vector has no unit coordinate\0",
        ValringStatus::DimensionMismatch => b"dimension mismatch\0",
        ValringStatus::RingMismatch => b"operands belong to different rings\0",
        ValringStatus::Capacity => b"capacity exceeded\0",
        ValringStatus::Numerical => b"numerical failure\0",
        ValringStatus::Config => b"invalid configuration\0",
        ValringStatus::Io => b"io error\0",
        ValringStatus::OutOfRange => b"index out of range\0",
        ValringStatus::BufferTooSmall => b"buffer too small\0",
        ValringStatus::Panic => b"internal panic\0",
    };
    msg.as_ptr().cast()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn valring_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parse a ring spec such as "Z/2^3" or "GF(4)[t]/t^2" into a handle.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_parse(
    spec: *const c_char,
    out: *mut *mut ValringRing,
) -> ValringStatus {
    guarded(|| {
        if spec.is_null() || out.is_null() {
            return ValringStatus::NullArgument;
        }
        let text = match CStr::from_ptr(spec).to_str() {
            Ok(t) => t,
            Err(_) => return ValringStatus::Parse,
        };
        match RingSpec::parse(text) {
            Ok(ring) => {
                *out = Box::into_raw(Box::new(ValringRing(ring)));
                ValringStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Release a ring handle. Null is a no-op.
///
/// # Safety
/// `ring` must be null or a pointer from `valring_ring_parse` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_free(ring: *mut ValringRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Ring order q^r; 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live ring handle.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_order(ring: *const ValringRing) -> u64 {
    ring_ref(ring).map_or(0, |r| r.order())
}

/// Residue field size q; 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live ring handle.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_residue_order(ring: *const ValringRing) -> u64 {
    ring_ref(ring).map_or(0, |r| r.q())
}

/// Length r of the valuation chain; 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live ring handle.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_length(ring: *const ValringRing) -> u32 {
    ring_ref(ring).map_or(0, |r| r.r())
}

/// Unit count q^r - q^(r-1); 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live ring handle.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_unit_count(ring: *const ValringRing) -> u64 {
    ring_ref(ring).map_or(0, |r| r.unit_count())
}

/// Write the canonical spec string, NUL-terminated, into `buf`.
///
/// # Safety
/// `ring` must be a live handle; `buf` must point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_format(
    ring: *const ValringRing,
    buf: *mut c_char,
    cap: usize,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if buf.is_null() {
            return ValringStatus::NullArgument;
        }
        let text = r.format_spec();
        if text.len() + 1 > cap {
            return ValringStatus::BufferTooSmall;
        }
        std::ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
        *buf.add(text.len()) = 0;
        ValringStatus::Ok
    })
}

macro_rules! binary_op {
    ($(#[$doc:meta])* $name:ident, $method:ident) => {
        $(#[$doc])*
        ///
        /// # Safety
        /// `ring` must be a live handle and `out` writable.
        #[no_mangle]
        pub unsafe extern "C" fn $name(
            ring: *const ValringRing,
            x: u64,
            y: u64,
            out: *mut u64,
        ) -> ValringStatus {
            guarded(|| {
                let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
                if out.is_null() {
                    return ValringStatus::NullArgument;
                }
                let (Ok(x), Ok(y)) = (r.elem(x), r.elem(y)) else {
                    return ValringStatus::InvalidElement;
                };
                *out = r.$method(x, y).0;
                ValringStatus::Ok
            })
        }
    };
}

binary_op!(
    /// out = x + y.
    valring_ring_add, add);
binary_op!(
    /// out = x - y.
    valring_ring_sub, sub);
binary_op!(
    /// out = x * y.
    valring_ring_mul, mul);

/// out = -x.
///
/// # Safety
/// `ring` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_neg(
    ring: *const ValringRing,
    x: u64,
    out: *mut u64,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let Ok(x) = r.elem(x) else { return ValringStatus::InvalidElement };
        *out = r.neg(x).0;
        ValringStatus::Ok
    })
}

/// out = x^-1 when x is a unit.
///
/// # Safety
/// `ring` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_inverse(
    ring: *const ValringRing,
    x: u64,
    out: *mut u64,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let Ok(x) = r.elem(x) else { return ValringStatus::InvalidElement };
        match r.inverse(x) {
            Ok(inv) => {
                *out = inv.0;
                ValringStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// out = v(x), with v(0) = r by convention.
///
/// # Safety
/// `ring` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_valuation(
    ring: *const ValringRing,
    x: u64,
    out: *mut u32,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let Ok(x) = r.elem(x) else { return ValringStatus::InvalidElement };
        *out = r.valuation(x);
        ValringStatus::Ok
    })
}

/// out = whether x is a unit.
///
/// # Safety
/// `ring` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn valring_ring_is_unit(
    ring: *const ValringRing,
    x: u64,
    out: *mut bool,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let Ok(x) = r.elem(x) else { return ValringStatus::InvalidElement };
        *out = r.is_unit(x);
        ValringStatus::Ok
    })
}

/// Build the bipartite dot-product graph on projective d-classes.
///
/// # Safety
/// `ring` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn valring_graph_build(
    ring: *const ValringRing,
    d: usize,
    part_cap: u64,
    out: *mut *mut ValringGraph,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        match build_graph_capped(r, d, part_cap) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(ValringGraph(g)));
                ValringStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Release a graph handle. Null is a no-op.
///
/// # Safety
/// `g` must be null or a pointer from `valring_graph_build` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn valring_graph_free(g: *mut ValringGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count of one part; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn valring_graph_part_size(g: *const ValringGraph) -> u64 {
    graph_ref(g).map_or(0, |g| g.part_size() as u64)
}

/// Common vertex degree; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn valring_graph_degree(g: *const ValringGraph) -> u64 {
    graph_ref(g).map_or(0, |g| if g.part_size() == 0 { 0 } else { g.degree_of(0) })
}

/// out = whether classes i (left part) and j (right part) are orthogonal.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn valring_graph_has_edge(
    g: *const ValringGraph,
    i: u64,
    j: u64,
    out: *mut bool,
) -> ValringStatus {
    guarded(|| {
        let Some(g) = graph_ref(g) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let n = g.part_size() as u64;
        if i >= n || j >= n {
            return ValringStatus::OutOfRange;
        }
        *out = g.has_edge(i as usize, j as usize);
        ValringStatus::Ok
    })
}

/// Compute singular values and the spectral-gap verdict.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn valring_graph_spectrum(
    g: *const ValringGraph,
    use_jacobi: bool,
    out: *mut ValringSpectralReport,
) -> ValringStatus {
    guarded(|| {
        let Some(g) = graph_ref(g) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let solver = if use_jacobi { Solver::Jacobi } else { Solver::default() };
        match spectrum(g, solver) {
            Ok(rep) => {
                *out = ValringSpectralReport {
                    part_size: rep.part_size as u64,
                    degree: rep.degree,
                    lambda3: rep.lambda3,
                    bound: rep.bound,
                    pass: rep.pass,
                };
                ValringStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Check the mixing bound on explicit vertex index sets.
///
/// # Safety
/// `g` must be a live graph handle; `x`/`y` must point to `x_len`/`y_len`
/// readable u64s (null only when the length is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn valring_graph_mixing_check(
    g: *const ValringGraph,
    lambda3: f64,
    x: *const u64,
    x_len: usize,
    y: *const u64,
    y_len: usize,
    out: *mut ValringMixingRecord,
) -> ValringStatus {
    guarded(|| {
        let Some(g) = graph_ref(g) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let (Some(x), Some(y)) = (index_slice(x, x_len), index_slice(y, y_len)) else {
            return ValringStatus::NullArgument;
        };
        let n = g.part_size() as u64;
        if x.iter().chain(y).any(|&v| v >= n) {
            return ValringStatus::OutOfRange;
        }
        let xs: Vec<usize> = x.iter().map(|&v| v as usize).collect();
        let ys: Vec<usize> = y.iter().map(|&v| v as usize).collect();
        let rec = mixing_check(g, lambda3, &xs, &ys);
        *out = ValringMixingRecord {
            x_size: rec.x_size as u64,
            y_size: rec.y_size as u64,
            edges: rec.edges,
            main_term: rec.main_term,
            error_bound: rec.error_bound,
            pass: rec.pass,
        };
        ValringStatus::Ok
    })
}

/// Main incidence coefficient as an exact fraction num/den.
///
/// # Safety
/// `ring` must be a live handle; `num` and `den` must be writable.
#[no_mangle]
pub unsafe extern "C" fn valring_incidence_main_term(
    ring: *const ValringRing,
    num: *mut u64,
    den: *mut u64,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if num.is_null() || den.is_null() {
            return ValringStatus::NullArgument;
        }
        let (n, d) = main_term_fraction(r);
        *num = n;
        *den = d;
        ValringStatus::Ok
    })
}

/// Check |BA+C| >= min(q^r, |A||B||C| / q^(2r-1)) / 2 on index sets.
///
/// # Safety
/// `ring` must be a live handle; the three arrays must each have their
/// stated length (null only when empty); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn valring_theorem1_check(
    ring: *const ValringRing,
    a: *const u64,
    a_len: usize,
    b: *const u64,
    b_len: usize,
    c: *const u64,
    c_len: usize,
    out: *mut ValringTheorem1Report,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let (Some(a), Some(b), Some(c)) = (
            index_slice(a, a_len),
            index_slice(b, b_len),
            index_slice(c, c_len),
        ) else {
            return ValringStatus::NullArgument;
        };
        let sets = (|| -> Result<_, Error> {
            Ok((elem_set(r, a)?, elem_set(r, b)?, elem_set(r, c)?))
        })();
        let (a, b, c) = match sets {
            Ok(s) => s,
            Err(e) => return (&e).into(),
        };
        match check_theorem1(&a, &b, &c) {
            Ok(rec) => {
                *out = ValringTheorem1Report {
                    a_size: rec.a_size,
                    b_size: rec.b_size,
                    c_size: rec.c_size,
                    lhs: rec.lhs,
                    rhs: rec.rhs,
                    ratio: rec.ratio,
                    pass: rec.pass,
                };
                ValringStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Collision energy of the product family of slopes x offsets, evaluated on A.
///
/// # Safety
/// `ring` must be a live handle; the three arrays must each have their
/// stated length (null only when empty); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn valring_energy_product_lines(
    ring: *const ValringRing,
    slopes: *const u64,
    slopes_len: usize,
    offsets: *const u64,
    offsets_len: usize,
    a: *const u64,
    a_len: usize,
    out: *mut ValringEnergyReport,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let (Some(s), Some(o), Some(a)) = (
            index_slice(slopes, slopes_len),
            index_slice(offsets, offsets_len),
            index_slice(a, a_len),
        ) else {
            return ValringStatus::NullArgument;
        };
        let rep = (|| -> Result<_, Error> {
            let lines = lines_from_product(&elem_set(r, s)?, &elem_set(r, o)?)?;
            energy(&lines, &elem_set(r, a)?)
        })();
        match rep {
            Ok(rep) => {
                *out = ValringEnergyReport {
                    e: rep.e,
                    distinct_lines: rep.distinct_lines,
                    weight: rep.weight,
                    a_size: rep.a_size,
                    evaluation_set_size: rep.evaluation_set_size,
                    rhs: rep.rhs,
                    collision_pass: rep.collision_pass,
                    cauchy_schwarz_pass: rep.cauchy_schwarz_pass,
                };
                ValringStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Run the square-sumset energy chain on an index set.
///
/// # Safety
/// `ring` must be a live handle; `a` must have the stated length (null only
/// when empty); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn valring_theorem2_check(
    ring: *const ValringRing,
    a: *const u64,
    a_len: usize,
    out: *mut ValringTheorem2Report,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let Some(a) = index_slice(a, a_len) else { return ValringStatus::NullArgument };
        let rep = (|| -> Result<_, Error> { check_theorem2(&elem_set(r, a)?) })();
        match rep {
            Ok(rep) => {
                *out = ValringTheorem2Report {
                    a_size: rep.a_size,
                    energy_squares: rep.energy_squares,
                    square_triple_sumset: rep.square_triple_sumset,
                    cs_pass: rep.cs_pass,
                    relax_pass: rep.relax_pass,
                    collision_pass: rep.collision_pass,
                    char_two: rep.char_two,
                    hypothesis: rep.hypothesis,
                    has_ratio: rep.ratio.is_some(),
                    ratio: rep.ratio.unwrap_or(0.0),
                    pass: rep.pass,
                };
                ValringStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Search for an iterated-sumset growth witness X inside A.
///
/// # Safety
/// `ring` must be a live handle; `a` and `b` must have their stated lengths
/// (null only when empty); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn valring_plunnecke_verify(
    ring: *const ValringRing,
    a: *const u64,
    a_len: usize,
    b: *const u64,
    b_len: usize,
    delta_num: u64,
    delta_den: u64,
    k: u32,
    out: *mut ValringPlunneckeReport,
) -> ValringStatus {
    guarded(|| {
        let Some(r) = ring_ref(ring) else { return ValringStatus::NullArgument };
        if out.is_null() {
            return ValringStatus::NullArgument;
        }
        let (Some(a), Some(b)) = (index_slice(a, a_len), index_slice(b, b_len)) else {
            return ValringStatus::NullArgument;
        };
        let rep = (|| -> Result<_, Error> {
            plunnecke_verify(&elem_set(r, a)?, &elem_set(r, b)?, (delta_num, delta_den), k)
        })();
        match rep {
            Ok(rep) => {
                let (found, x_size, x_plus_kb, bound) = match &rep.witness {
                    Some(w) => (true, w.x_size, w.x_plus_kb, w.bound),
                    None => (false, 0, 0, 0.0),
                };
                *out = ValringPlunneckeReport {
                    a_size: rep.a_size,
                    b_size: rep.b_size,
                    sum_ab_size: rep.sum_ab_size,
                    k: rep.k,
                    found,
                    x_size,
                    x_plus_kb,
                    bound,
                };
                ValringStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}
