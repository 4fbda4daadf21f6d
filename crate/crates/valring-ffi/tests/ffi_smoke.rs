//! Drive the C ABI from Rust: handle lifecycle, status codes, report PODs.

use std::ffi::CString;
use valring_ffi::*;

fn parse(spec: &str) -> *mut ValringRing {
    let c = CString::new(spec).unwrap();
    let mut ring = std::ptr::null_mut();
    let status = unsafe { valring_ring_parse(c.as_ptr(), &mut ring) };
    assert_eq!(status, ValringStatus::Ok, "{spec}");
    assert!(!ring.is_null());
    ring
}

#[test]
fn ring_lifecycle_and_arithmetic() {
    let ring = parse("Z/2^2");
    unsafe {
        assert_eq!(valring_ring_order(ring), 4);
        assert_eq!(valring_ring_residue_order(ring), 2);
        assert_eq!(valring_ring_length(ring), 2);
        assert_eq!(valring_ring_unit_count(ring), 2);

        let mut out = 0u64;
        assert_eq!(valring_ring_add(ring, 3, 3, &mut out), ValringStatus::Ok);
        assert_eq!(out, 2);
        assert_eq!(valring_ring_mul(ring, 2, 2, &mut out), ValringStatus::Ok);
        assert_eq!(out, 0);
        assert_eq!(valring_ring_inverse(ring, 3, &mut out), ValringStatus::Ok);
        assert_eq!(out, 3);
        assert_eq!(
            valring_ring_inverse(ring, 2, &mut out),
            ValringStatus::NotInvertible
        );
        assert_eq!(
            valring_ring_add(ring, 9, 0, &mut out),
            ValringStatus::InvalidElement
        );

        let mut val = 0u32;
        assert_eq!(valring_ring_valuation(ring, 2, &mut val), ValringStatus::Ok);
        assert_eq!(val, 1);
        assert_eq!(valring_ring_valuation(ring, 0, &mut val), ValringStatus::Ok);
        assert_eq!(val, 2);

        let mut unit = false;
        assert_eq!(valring_ring_is_unit(ring, 3, &mut unit), ValringStatus::Ok);
        assert!(unit);

        let mut buf = [0i8; 32];
        assert_eq!(
            valring_ring_format(ring, buf.as_mut_ptr().cast(), buf.len()),
            ValringStatus::Ok
        );
        let text = std::ffi::CStr::from_ptr(buf.as_ptr().cast()).to_str().unwrap();
        assert_eq!(text, "Z/2^2");
        assert_eq!(
            valring_ring_format(ring, buf.as_mut_ptr().cast(), 3),
            ValringStatus::BufferTooSmall
        );

        valring_ring_free(ring);
        valring_ring_free(std::ptr::null_mut());
    }
}

#[test]
fn parse_failures_and_null_discipline() {
    let bad = CString::new("Z/6").unwrap();
    let mut ring = std::ptr::null_mut();
    unsafe {
        assert_eq!(
            valring_ring_parse(bad.as_ptr(), &mut ring),
            ValringStatus::Parse
        );
        assert_eq!(
            valring_ring_parse(std::ptr::null(), &mut ring),
            ValringStatus::NullArgument
        );
        assert_eq!(valring_ring_order(std::ptr::null()), 0);
        let mut out = 0u64;
        assert_eq!(
            valring_ring_add(std::ptr::null(), 0, 0, &mut out),
            ValringStatus::NullArgument
        );
    }
    let msg = unsafe {
        std::ffi::CStr::from_ptr(valring_status_message(ValringStatus::Parse))
    };
    assert_eq!(msg.to_str().unwrap(), "parse error");
    let version = unsafe { std::ffi::CStr::from_ptr(valring_version()) };
    assert!(!version.to_str().unwrap().is_empty());
}

#[test]
fn graph_spectrum_and_mixing() {
    let ring = parse("Z/2");
    unsafe {
        let mut graph = std::ptr::null_mut();
        assert_eq!(
            valring_graph_build(ring, 4, 5000, &mut graph),
            ValringStatus::Ok
        );
        assert_eq!(valring_graph_part_size(graph), 15);
        assert_eq!(valring_graph_degree(graph), 7);

        let mut edge = false;
        assert_eq!(
            valring_graph_has_edge(graph, 0, 0, &mut edge),
            ValringStatus::Ok
        );
        assert_eq!(
            valring_graph_has_edge(graph, 15, 0, &mut edge),
            ValringStatus::OutOfRange
        );

        let mut rep = ValringSpectralReport {
            part_size: 0,
            degree: 0,
            lambda3: 0.0,
            bound: 0.0,
            pass: false,
        };
        assert_eq!(
            valring_graph_spectrum(graph, false, &mut rep),
            ValringStatus::Ok
        );
        assert!((rep.lambda3 - 2.0).abs() < 1e-6);
        assert!(rep.pass);

        let x: Vec<u64> = (0..15).collect();
        let mut mix = ValringMixingRecord {
            x_size: 0,
            y_size: 0,
            edges: 0,
            main_term: 0.0,
            error_bound: 0.0,
            pass: false,
        };
        assert_eq!(
            valring_graph_mixing_check(
                graph,
                rep.lambda3,
                x.as_ptr(),
                x.len(),
                x.as_ptr(),
                x.len(),
                &mut mix
            ),
            ValringStatus::Ok
        );
        assert_eq!(mix.edges, 15 * 7);
        assert!(mix.pass);

        valring_graph_free(graph);
        valring_ring_free(ring);
    }
}

#[test]
fn sumprod_reports_round_trip() {
    let ring = parse("Z/2^2");
    unsafe {
        let mut num = 0u64;
        let mut den = 0u64;
        assert_eq!(
            valring_incidence_main_term(ring, &mut num, &mut den),
            ValringStatus::Ok
        );
        assert_eq!((num, den), (7, 30));

        let a = [0u64, 1, 2];
        let mut t1 = std::mem::zeroed::<ValringTheorem1Report>();
        assert_eq!(
            valring_theorem1_check(ring, a.as_ptr(), 3, a.as_ptr(), 3, a.as_ptr(), 3, &mut t1),
            ValringStatus::Ok
        );
        assert!(t1.pass);
        assert_eq!(t1.a_size, 3);

        let mut en = std::mem::zeroed::<ValringEnergyReport>();
        assert_eq!(
            valring_energy_product_lines(
                ring,
                a.as_ptr(),
                3,
                a.as_ptr(),
                3,
                a.as_ptr(),
                3,
                &mut en
            ),
            ValringStatus::Ok
        );
        assert!(en.collision_pass && en.cauchy_schwarz_pass);
        assert_eq!(en.weight, 9);

        let pair = [0u64, 1];
        let mut t2 = std::mem::zeroed::<ValringTheorem2Report>();
        assert_eq!(
            valring_theorem2_check(ring, pair.as_ptr(), 2, &mut t2),
            ValringStatus::Ok
        );
        assert_eq!(t2.energy_squares, 20);
        assert!(t2.char_two && t2.pass);

        let mut pl = std::mem::zeroed::<ValringPlunneckeReport>();
        assert_eq!(
            valring_plunnecke_verify(ring, pair.as_ptr(), 2, pair.as_ptr(), 2, 1, 2, 2, &mut pl),
            ValringStatus::Ok
        );
        assert!(pl.found);
        assert!((pl.x_plus_kb as f64) < pl.bound);

        // Out-of-range index inside a set argument.
        let bad = [99u64];
        assert_eq!(
            valring_theorem2_check(ring, bad.as_ptr(), 1, &mut t2),
            ValringStatus::InvalidElement
        );

        valring_ring_free(ring);
    }
}
