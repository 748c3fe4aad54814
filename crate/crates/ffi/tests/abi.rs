use std::ffi::{c_char, CStr, CString};
use std::ptr;

use kgraph_cohn_ffi::*;

const LAMBDA2: &str = include_str!("../../core/examples/lambda2.kg");

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { kg_string_free(s) };
    out
}

fn last_error() -> String {
    let p = kg_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn parse(text: &str) -> (KgStatus, *mut KgGraph) {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    let st = unsafe { kg_graph_parse(c.as_ptr(), &mut g) };
    (st, g)
}

#[test]
fn parse_count_print_free() {
    let (st, g) = parse(LAMBDA2);
    assert_eq!(st, KgStatus::Ok);
    unsafe {
        assert_eq!(kg_graph_vertex_count(g), 1);
        assert_eq!(kg_graph_edge_count(g), 2);
        let mut s = ptr::null_mut();
        assert_eq!(kg_graph_print(g, &mut s), KgStatus::Ok);
        assert!(take(s).contains("square e.f ~ f.e"));
        assert_eq!(kg_graph_dot(g, &mut s), KgStatus::Ok);
        assert!(take(s).starts_with("digraph"));
        kg_graph_free(g);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let (st, g) = parse("kgraph rank=2\nvertex v\nedge e : v <- v color 1\nedge f : v <- v color 2\n");
    assert_eq!(st, KgStatus::IncompleteSquares);
    assert!(g.is_null());
    assert!(last_error().starts_with("INCOMPLETE_SQUARES"));

    let (st, _) = parse("kgraph rank=2\nbogus\n");
    assert_eq!(st, KgStatus::Parse);

    let mut g = ptr::null_mut();
    assert_eq!(unsafe { kg_graph_parse(ptr::null(), &mut g) }, KgStatus::NullPointer);
    assert_eq!(unsafe { kg_graph_vertex_count(ptr::null()) }, 0);
}

#[test]
fn tlambda_and_sources() {
    let n = [1u32, 2];
    let mut om = ptr::null_mut();
    unsafe {
        assert_eq!(kg_graph_omega(2, n.as_ptr(), &mut om), KgStatus::Ok);
        assert_eq!(kg_graph_vertex_count(om), 6);
        let mut t = ptr::null_mut();
        assert_eq!(kg_tlambda_build(om, &mut t), KgStatus::HasSources);
        kg_graph_free(om);
    }
    let (_, g) = parse(LAMBDA2);
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(kg_tlambda_build(g, &mut t), KgStatus::Ok);
        assert_eq!(kg_graph_vertex_count(t), 2);
        assert_eq!(kg_graph_edge_count(t), 4);
        kg_graph_free(t);
        kg_graph_free(g);
    }
}

#[test]
fn algebra_json() {
    let (_, g) = parse(LAMBDA2);
    let z = CString::new("Z").unwrap();
    let v = CString::new("v").unwrap();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(kg_fproj_json(g, z.as_ptr(), v.as_ptr(), &mut s), KgStatus::Ok);
        let f: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(f["terms"].as_array().unwrap().len(), 3);

        let a = CString::new(r#"{"ring":"Z","terms":[{"lambda":[],"mu":["e"],"coeff":"1"}]}"#).unwrap();
        let b = CString::new(r#"{"ring":"Z","terms":[{"lambda":["e"],"mu":[],"coeff":"1"}]}"#).unwrap();
        assert_eq!(kg_mult_json(g, a.as_ptr(), b.as_ptr(), &mut s), KgStatus::Ok);
        let p: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(p["terms"][0]["vertex"], "v");

        let bad = CString::new("Zmod:0").unwrap();
        assert_eq!(kg_fproj_json(g, bad.as_ptr(), v.as_ptr(), &mut s), KgStatus::InvalidArgument);

        let bound = CString::new("1,1").unwrap();
        assert_eq!(kg_suite_json(g, z.as_ptr(), bound.as_ptr(), 3, &mut s), KgStatus::Ok);
        let r: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(r["pass"], true);
        kg_graph_free(g);
    }
}

#[test]
fn header_declares_the_abi() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/kgraph_cohn.h")).unwrap();
    for name in [
        "kg_graph_parse",
        "kg_graph_omega",
        "kg_graph_free",
        "kg_tlambda_build",
        "kg_fproj_json",
        "kg_mult_json",
        "kg_suite_json",
        "kg_last_error_message",
        "kg_string_free",
        "KG_STATUS_HAS_SOURCES",
        "typedef struct KgGraph KgGraph",
    ] {
        assert!(h.contains(name), "{name}");
    }
}
