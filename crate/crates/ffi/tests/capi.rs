use std::ffi::{CStr, CString};
use std::ptr;

use csf_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { csf_string_free(p) };
    s
}

fn tree(text: &str) -> *mut CsfTree {
    let c = CString::new(text).unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { csf_tree_from_edge_list(c.as_ptr(), &mut t) }, CsfStatus::Ok);
    t
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(csf_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn star_versus_path() {
    let s4 = tree("0 1\n0 2\n0 3\n");
    let mut p4 = ptr::null_mut();
    assert_eq!(unsafe { csf_tree_path(4, &mut p4) }, CsfStatus::Ok);
    unsafe {
        let mut n = 0;
        assert_eq!(csf_tree_vertex_count(s4, &mut n), CsfStatus::Ok);
        assert_eq!(n, 4);
        let mut alpha = 0;
        assert_eq!(csf_tree_alpha(s4, &mut alpha), CsfStatus::Ok);
        assert_eq!(alpha, 3);
        let mut same = true;
        assert_eq!(csf_trees_csf_equal(s4, p4, &mut same), CsfStatus::Ok);
        assert!(!same);
        assert_eq!(csf_trees_isomorphic(s4, p4, &mut same), CsfStatus::Ok);
        assert!(!same);
        let mut json = ptr::null_mut();
        assert_eq!(csf_compare_json(s4, p4, true, &mut json), CsfStatus::Ok);
        let report = take_string(json);
        assert!(report.contains("\"x_equal\":false"), "{report}");
        assert!(report.contains("\"case_id\":1"), "{report}");
        assert_eq!(csf_tree_decomposition_json(s4, &mut json), CsfStatus::Ok);
        assert_eq!(take_string(json), "{\"levels\":[{\"b\":3,\"eta\":1}],\"alpha_correction\":0}");
        let mut code = ptr::null_mut();
        assert_eq!(csf_tree_canonical_code(p4, &mut code), CsfStatus::Ok);
        assert!(!take_string(code).is_empty());
        csf_tree_free(s4);
        csf_tree_free(p4);
    }
}

#[test]
fn symmetric_functions() {
    let p3 = tree("0 1\n1 2\n");
    unsafe {
        let mut m = ptr::null_mut();
        let mut p = ptr::null_mut();
        assert_eq!(csf_symfunc_monomial(p3, &mut m), CsfStatus::Ok);
        assert_eq!(csf_symfunc_powersum(p3, &mut p), CsfStatus::Ok);
        let mut count = 0;
        assert_eq!(csf_symfunc_term_count(m, &mut count), CsfStatus::Ok);
        assert_eq!(count, 2);
        let mut json = ptr::null_mut();
        assert_eq!(csf_symfunc_to_json(m, &mut json), CsfStatus::Ok);
        assert_eq!(
            take_string(json),
            r#"{"n":3,"basis":"m","terms":[{"partition":[2,1],"coeff":1},{"partition":[1,1,1],"coeff":6}]}"#
        );
        let mut converted = ptr::null_mut();
        assert_eq!(csf_symfunc_to_monomial(p, &mut converted), CsfStatus::Ok);
        assert_eq!(csf_symfunc_to_json(converted, &mut json), CsfStatus::Ok);
        assert!(take_string(json).contains("\"coeff\":6"));
        let mut value = 0i64;
        assert_eq!(csf_symfunc_evaluate_ones(m, 3, &mut value), CsfStatus::Ok);
        assert_eq!(value, 12);
        assert_eq!(csf_symfunc_max_block(m, &mut count), CsfStatus::Ok);
        assert_eq!(count, 2);
        assert_eq!(csf_symfunc_max_block(p, &mut count), CsfStatus::UnsupportedBasis);
        assert_eq!(csf_symfunc_evaluate_ones(m, u64::MAX, &mut value), CsfStatus::Overflow);
        csf_symfunc_free(m);
        csf_symfunc_free(p);
        csf_symfunc_free(converted);
        csf_tree_free(p3);
    }
}

#[test]
fn spiders_and_survey() {
    unsafe {
        let legs = [2usize, 2, 2];
        let mut t = ptr::null_mut();
        assert_eq!(csf_tree_spider(legs.as_ptr(), legs.len(), &mut t), CsfStatus::Ok);
        let mut alpha = 0;
        assert_eq!(csf_tree_alpha(t, &mut alpha), CsfStatus::Ok);
        assert_eq!(alpha, 4);
        csf_tree_free(t);
        assert_eq!(csf_tree_spider(legs.as_ptr(), 2, &mut t), CsfStatus::InvalidArgument);
        let mut json = ptr::null_mut();
        assert_eq!(csf_survey_json(5, 1, &mut json), CsfStatus::Ok);
        assert!(take_string(json).contains("\"pairs\": 3"));
        assert_eq!(csf_survey_json(20, 0, &mut json), CsfStatus::InvalidArgument);
    }
}

#[test]
fn error_reporting() {
    let mut t = ptr::null_mut();
    let cycle = CString::new("0 1\n1 2\n2 0\n").unwrap();
    assert_eq!(unsafe { csf_tree_from_edge_list(cycle.as_ptr(), &mut t) }, CsfStatus::NotATree);
    assert!(t.is_null());
    assert_eq!(last_error(), "graph has a cycle");
    let bad = CString::new("0 x\n").unwrap();
    assert_eq!(unsafe { csf_tree_from_edge_list(bad.as_ptr(), &mut t) }, CsfStatus::InvalidInput);
    assert_eq!(unsafe { csf_tree_from_edge_list(ptr::null(), &mut t) }, CsfStatus::NullPointer);
    let ok = CString::new("0 1\n").unwrap();
    assert_eq!(unsafe { csf_tree_from_edge_list(ok.as_ptr(), ptr::null_mut()) }, CsfStatus::NullPointer);
    let mut n = 0;
    assert_eq!(unsafe { csf_tree_vertex_count(ptr::null(), &mut n) }, CsfStatus::NullPointer);
    assert_eq!(unsafe { csf_tree_star(1, &mut t) }, CsfStatus::InvalidArgument);
    let mut p15 = ptr::null_mut();
    assert_eq!(unsafe { csf_tree_path(15, &mut p15) }, CsfStatus::Ok);
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { csf_symfunc_monomial(p15, &mut f) }, CsfStatus::CapExceeded);
    let mut p14 = ptr::null_mut();
    assert_eq!(unsafe { csf_tree_path(14, &mut p14) }, CsfStatus::Ok);
    let mut same = true;
    assert_eq!(unsafe { csf_trees_csf_equal(p15, p14, &mut same) }, CsfStatus::Ok);
    assert!(!same);
    unsafe {
        csf_tree_free(p15);
        csf_tree_free(p14);
        csf_tree_free(ptr::null_mut());
        csf_symfunc_free(ptr::null_mut());
        csf_string_free(ptr::null_mut());
    }
}
