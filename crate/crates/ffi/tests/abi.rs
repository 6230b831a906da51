//! Drives the C entry points the way a foreign caller would: through
//! raw pointers and status codes only.

use std::ffi::{CStr, CString};
use std::ptr;

use treepal_ffi::*;

fn parse(text: &str) -> *mut TreepalTree {
    let c = CString::new(text).unwrap();
    let mut t: *mut TreepalTree = ptr::null_mut();
    assert_eq!(treepal_tree_parse(c.as_ptr(), &mut t), TreepalStatus::Ok);
    assert!(!t.is_null());
    t
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(treepal_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn parse_report_and_free() {
    let t = parse("4\n1 2 a\n2 3 b\n3 4 a\n");
    let (mut nodes, mut edges) = (0u32, 0u32);
    assert_eq!(treepal_tree_nodes(t, &mut nodes), TreepalStatus::Ok);
    assert_eq!(treepal_tree_edges(t, &mut edges), TreepalStatus::Ok);
    assert_eq!((nodes, edges), (4, 3));

    let mut r: *mut TreepalReport = ptr::null_mut();
    assert_eq!(treepal_report(t, 0, &mut r), TreepalStatus::Ok);
    let mut len = 0usize;
    assert_eq!(treepal_report_len(r, &mut len), TreepalStatus::Ok);
    // Path "aba": palindromes a, b, aba.
    assert_eq!(len, 3);
    let mut prev = 0u32;
    for i in 0..len {
        let mut tr = TreepalTriple { length: 0, u: 0, v: 0 };
        assert_eq!(treepal_report_get(r, i, &mut tr), TreepalStatus::Ok);
        assert!(tr.length >= prev, "records must be sorted by length");
        assert!(tr.u >= 1 && tr.u <= nodes && tr.v >= 1 && tr.v <= nodes);
        prev = tr.length;
    }
    let mut tr = TreepalTriple { length: 0, u: 0, v: 0 };
    assert_eq!(treepal_report_get(r, len, &mut tr), TreepalStatus::InvalidArgument);
    assert!(last_error().contains("out of range"));

    treepal_report_free(r);
    treepal_tree_free(t);
}

#[test]
fn generated_comb_matches_pinned_count() {
    let mut t: *mut TreepalTree = ptr::null_mut();
    assert_eq!(treepal_tree_gen_comb(5, &mut t), TreepalStatus::Ok);
    let mut count = 0u64;
    assert_eq!(treepal_count(t, &mut count), TreepalStatus::Ok);
    assert_eq!(count, 65);

    let mut r: *mut TreepalReport = ptr::null_mut();
    assert_eq!(treepal_report(t, 2, &mut r), TreepalStatus::Ok);
    let mut len = 0usize;
    assert_eq!(treepal_report_len(r, &mut len), TreepalStatus::Ok);
    assert_eq!(len as u64, count, "threaded report must agree");
    let mut density = 0.0f64;
    assert_eq!(treepal_report_density(r, &mut density), TreepalStatus::Ok);
    assert!(density > 0.18 && density < 0.19);
    treepal_report_free(r);
    treepal_tree_free(t);
}

#[test]
fn test_and_longest_witnesses() {
    let mut t: *mut TreepalTree = ptr::null_mut();
    let pat = CString::new("ab").unwrap();
    assert_eq!(treepal_tree_gen_path(6, pat.as_ptr(), &mut t), TreepalStatus::Ok);

    let mut found = false;
    let mut tr = TreepalTriple { length: 0, u: 0, v: 0 };
    assert_eq!(treepal_test(t, 5, &mut found, &mut tr), TreepalStatus::Ok);
    assert!(found);
    assert_eq!(tr.length, 5);
    assert_eq!(treepal_test(t, 2, &mut found, ptr::null_mut()), TreepalStatus::Ok);
    assert!(!found, "abab tiling has no even palindrome");

    assert_eq!(treepal_longest(t, &mut found, &mut tr), TreepalStatus::Ok);
    assert!(found);
    assert_eq!(tr.length, 5);
    treepal_tree_free(t);
}

#[test]
fn random_generator_is_deterministic() {
    let mut a: *mut TreepalTree = ptr::null_mut();
    let mut b: *mut TreepalTree = ptr::null_mut();
    assert_eq!(treepal_tree_gen_random(40, 2, 9, &mut a), TreepalStatus::Ok);
    assert_eq!(treepal_tree_gen_random(40, 2, 9, &mut b), TreepalStatus::Ok);
    let (mut ca, mut cb) = (0u64, 0u64);
    assert_eq!(treepal_count(a, &mut ca), TreepalStatus::Ok);
    assert_eq!(treepal_count(b, &mut cb), TreepalStatus::Ok);
    assert_eq!(ca, cb);
    treepal_tree_free(a);
    treepal_tree_free(b);
}

#[test]
fn error_paths_set_messages() {
    let mut t: *mut TreepalTree = ptr::null_mut();

    assert_eq!(
        treepal_tree_parse(ptr::null(), &mut t),
        TreepalStatus::NullArgument
    );

    let bad = CString::new([0xFFu8, 0xFEu8].as_slice()).unwrap();
    assert_eq!(
        treepal_tree_parse(bad.as_ptr(), &mut t),
        TreepalStatus::InvalidUtf8
    );

    let cyclic = CString::new("3\n1 2 a\n1 2 b\n").unwrap();
    assert_eq!(
        treepal_tree_parse(cyclic.as_ptr(), &mut t),
        TreepalStatus::ParseFailed
    );
    assert!(!last_error().is_empty());
    assert!(t.is_null(), "failed parse must not hand out a tree");

    assert_eq!(treepal_tree_gen_comb(6, &mut t), TreepalStatus::InvalidArgument);
    assert!(last_error().contains("prime"));

    // Free functions must tolerate null.
    treepal_tree_free(ptr::null_mut());
    treepal_report_free(ptr::null_mut());
}
