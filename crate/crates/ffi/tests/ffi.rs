use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use finring_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { fr_string_free(p) };
    s
}

fn last_error() -> String {
    let p = fr_last_error_message();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn zn(n: usize) -> *mut FrRing {
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { fr_ring_zn(n, &mut r) }, FrStatus::Ok);
    r
}

#[test]
fn ring_round_trip_and_arithmetic() {
    let r = zn(6);
    unsafe {
        assert_eq!(fr_ring_order(r), 6);
        let mut v = 0usize;
        assert_eq!(fr_ring_mul(r, 4, 5, &mut v), FrStatus::Ok);
        assert_eq!(v, 2);
        assert_eq!(fr_ring_add(r, 4, 5, &mut v), FrStatus::Ok);
        assert_eq!(v, 3);
        assert_eq!(fr_ring_add(r, 6, 0, &mut v), FrStatus::InvalidArgument);

        let mut text = ptr::null_mut();
        assert_eq!(fr_ring_to_ringtab(r, &mut text), FrStatus::Ok);
        let text = CString::new(take_string(text)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(fr_ring_parse(text.as_ptr(), &mut back), FrStatus::Ok);
        let mut iso = false;
        assert_eq!(fr_ring_isomorphic(r, back, &mut iso), FrStatus::Ok);
        assert!(iso);

        let mut report = ptr::null_mut();
        assert_eq!(fr_ring_report(back, &mut report), FrStatus::Ok);
        assert!(take_string(report).contains("order: 6"));
        fr_ring_free(back);
        fr_ring_free(r);
    }
}

#[test]
fn tables_are_validated() {
    // Z_2 + Z_2 with the product of Z_2 x Z_2 written via xor / and
    let add: Vec<usize> = (0..16).map(|i| (i / 4) ^ (i % 4)).collect();
    let mul: Vec<usize> = (0..16).map(|i| (i / 4) & (i % 4)).collect();
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(fr_ring_from_tables(4, add.as_ptr(), mul.as_ptr(), &mut r), FrStatus::Ok);
        let mut g = ptr::null_mut();
        assert_eq!(fr_zero_divisor_graph(r, &mut g), FrStatus::Ok);
        assert_eq!((fr_graph_vertex_count(g), fr_graph_edge_count(g)), (2, 1));
        let mut cert = ptr::null_mut();
        assert_eq!(fr_graph_canonical_form(g, &mut cert), FrStatus::Ok);
        assert_eq!(take_string(cert), "000280");
        fr_graph_free(g);
        fr_ring_free(r);

        let mut broken = mul.clone();
        broken[5] = 0; // 1 * 1 = 0 breaks distributivity with 1 * 3 = 1
        let mut bad = ptr::null_mut();
        assert_eq!(
            fr_ring_from_tables(4, add.as_ptr(), broken.as_ptr(), &mut bad),
            FrStatus::AxiomViolation
        );
        assert!(bad.is_null());
        assert!(last_error().contains("axiom"));
    }
}

#[test]
fn graphs_of_rings_with_equal_zero_divisor_structure() {
    unsafe {
        let z9 = zn(9);
        let mut f = ptr::null_mut();
        assert_eq!(fr_ring_gf(3, 1, &mut f), FrStatus::Ok);
        let mut sum = ptr::null_mut();
        assert_eq!(fr_ring_direct_sum(f, f, &mut sum), FrStatus::Ok);
        assert_eq!(fr_ring_order(sum), 9);

        let (mut g, mut h) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(fr_zero_divisor_graph(z9, &mut g), FrStatus::Ok);
        assert_eq!(fr_zero_divisor_graph(sum, &mut h), FrStatus::Ok);
        let mut iso = true;
        assert_eq!(fr_graph_isomorphic(g, h, &mut iso), FrStatus::Ok);
        assert!(!iso, "K2 vs K2,2");

        let mut dot = ptr::null_mut();
        assert_eq!(fr_graph_to_dot(g, &mut dot), FrStatus::Ok);
        let dot = take_string(dot);
        assert!(dot.starts_with("graph {") && dot.contains(" -- "), "{dot}");

        for p in [g, h] {
            fr_graph_free(p);
        }
        for r in [z9, f, sum] {
            fr_ring_free(r);
        }
    }
}

#[test]
fn identities_report_least_counterexample() {
    unsafe {
        let r = zn(4);
        let mut p = ptr::null_mut();
        let text = CString::new("x^2 - x").unwrap();
        assert_eq!(fr_poly_parse(text.as_ptr(), &mut p), FrStatus::Ok);
        let mut rendered = ptr::null_mut();
        assert_eq!(fr_poly_render(p, &mut rendered), FrStatus::Ok);
        assert_eq!(take_string(rendered), "-x + x^2");

        let mut holds = true;
        let mut cex = [99usize; 3];
        assert_eq!(fr_identity_check(r, p, &mut holds, cex.as_mut_ptr(), cex.len()), FrStatus::Ok);
        assert!(!holds);
        // 2^2 - 2 = 2 in Z_4, and 0, 1 are idempotent
        assert_eq!(cex, [2, 0, 0]);

        let four = CString::new("4x").unwrap();
        let mut q = ptr::null_mut();
        assert_eq!(fr_poly_parse(four.as_ptr(), &mut q), FrStatus::Ok);
        assert_eq!(fr_identity_check(r, q, &mut holds, ptr::null_mut(), 0), FrStatus::Ok);
        assert!(holds);

        fr_poly_free(p);
        fr_poly_free(q);
        fr_ring_free(r);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(fr_ring_gf(4, 1, &mut r), FrStatus::InvalidArgument);
        assert!(last_error().contains("not prime"));
        assert_eq!(fr_ring_zn(0, &mut r), FrStatus::InvalidArgument);
        assert_eq!(fr_ring_zn(100_000, &mut r), FrStatus::ResourceCap);
        assert_eq!(fr_ring_zn(3, ptr::null_mut()), FrStatus::NullPointer);
        assert!(r.is_null());

        let mut p = ptr::null_mut();
        let bad = CString::new("x + * y").unwrap();
        assert_eq!(fr_poly_parse(bad.as_ptr(), &mut p), FrStatus::Parse);
        assert_eq!(fr_poly_parse(ptr::null(), &mut p), FrStatus::NullPointer);
        let not_utf8 = [0xffu8, 0];
        assert_eq!(fr_poly_parse(not_utf8.as_ptr().cast(), &mut p), FrStatus::InvalidUtf8);

        let mut n = 0usize;
        assert_eq!(fr_atlas_count(1000, &mut n), FrStatus::ResourceCap);

        // a success clears the message
        assert_eq!(fr_atlas_count(1, &mut n), FrStatus::Ok);
        assert!(fr_last_error_message().is_null());

        assert_eq!(fr_ring_order(ptr::null()), 0);
        fr_ring_free(ptr::null_mut());
        fr_string_free(ptr::null_mut());
    }
}

#[test]
fn atlas_access() {
    unsafe {
        let mut n = 0usize;
        assert_eq!(fr_atlas_count(4, &mut n), FrStatus::Ok);
        assert_eq!(n, 11);
        let mut certs = std::collections::BTreeSet::new();
        for i in 0..n {
            let mut r = ptr::null_mut();
            assert_eq!(fr_atlas_ring(4, i, &mut r), FrStatus::Ok);
            let mut c = ptr::null_mut();
            assert_eq!(fr_ring_certificate(r, &mut c), FrStatus::Ok);
            certs.insert(take_string(c));
            fr_ring_free(r);
        }
        assert_eq!(certs.len(), 11);
        let mut r = ptr::null_mut();
        assert_eq!(fr_atlas_ring(4, 11, &mut r), FrStatus::InvalidArgument);
    }
}

#[test]
fn header_declares_every_export() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/finring.h")).unwrap();
    let source = std::fs::read_to_string(format!("{dir}/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|s| s.split('(').next().unwrap())
        .collect();
    assert!(exports.len() > 20);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let Ok(status) = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(format!("{dir}/include/finring.h"))
        .status()
    else {
        eprintln!("no C compiler on PATH; skipping");
        return;
    };
    assert!(status.success());
}
