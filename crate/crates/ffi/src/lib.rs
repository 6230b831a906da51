//! C ABI for tree palindrome reporting.
//!
//! Every function returns a status code; results travel through out
//! parameters. Handles are opaque and must be released with their
//! matching free function. On any non-Ok status the calling thread's
//! error message is replaced; it stays readable until the next failing
//! call on the same thread. No call unwinds across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use treepal::pipeline::{self, Prepared, Report};
use treepal::{generators, LabeledTree, PalTriple};

/// Call outcome. Anything but Ok leaves the out parameters untouched.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TreepalStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A text argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The tree text did not parse; see treepal_last_error_message.
    ParseFailed = 3,
    /// A numeric argument violated a precondition, or an index was out
    /// of range.
    InvalidArgument = 4,
    /// An internal invariant failed; see treepal_last_error_message.
    Internal = 5,
}

/// One reported palindrome: its length and a witness node pair with
/// 1-based ids, matching the text format of the CLI.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TreepalTriple {
    pub length: u32,
    pub u: u32,
    pub v: u32,
}

/// Opaque parsed tree with its cached query structures.
pub struct TreepalTree {
    tree: LabeledTree,
    prep: Prepared,
}

/// Opaque finished report; records sorted by (length, u, v).
pub struct TreepalReport {
    rep: Report,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: TreepalStatus, msg: &str) -> TreepalStatus {
    let clean = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
    status
}

/// Runs a body, converting panics into Internal instead of unwinding
/// across the C boundary.
fn guarded(f: impl FnOnce() -> TreepalStatus) -> TreepalStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic with non-string payload".to_string());
            fail(TreepalStatus::Internal, &msg)
        }
    }
}

fn store_tree(t: LabeledTree, out: *mut *mut TreepalTree) -> TreepalStatus {
    let handle = Box::new(TreepalTree {
        prep: pipeline::prepare(&t),
        tree: t,
    });
    unsafe { *out = Box::into_raw(handle) };
    TreepalStatus::Ok
}

fn triple_out(tr: &PalTriple) -> TreepalTriple {
    TreepalTriple {
        length: tr.length,
        u: tr.u + 1,
        v: tr.v + 1,
    }
}

/// Message of the last failure on this thread; empty when none. The
/// pointer stays valid until the next failing treepal call here.
#[no_mangle]
pub extern "C" fn treepal_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses the text tree format (first line node count, then one
/// "u v label" line per edge, 1-based ids).
#[no_mangle]
pub extern "C" fn treepal_tree_parse(
    text: *const c_char,
    out: *mut *mut TreepalTree,
) -> TreepalStatus {
    guarded(|| {
        if text.is_null() || out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        let s = match unsafe { CStr::from_ptr(text) }.to_str() {
            Ok(s) => s,
            Err(_) => return fail(TreepalStatus::InvalidUtf8, "tree text is not UTF-8"),
        };
        match LabeledTree::parse(s) {
            Ok(t) => store_tree(t, out),
            Err(e) => fail(TreepalStatus::ParseFailed, &e.to_string()),
        }
    })
}

/// Builds a path of `edges` edges labeled by the tiled pattern.
#[no_mangle]
pub extern "C" fn treepal_tree_gen_path(
    edges: u32,
    pattern: *const c_char,
    out: *mut *mut TreepalTree,
) -> TreepalStatus {
    guarded(|| {
        if pattern.is_null() || out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        let pat = match unsafe { CStr::from_ptr(pattern) }.to_str() {
            Ok(s) => s,
            Err(_) => return fail(TreepalStatus::InvalidUtf8, "pattern is not UTF-8"),
        };
        match generators::gen_path(edges, pat) {
            Ok(t) => store_tree(t, out),
            Err(e) => fail(TreepalStatus::InvalidArgument, &e.to_string()),
        }
    })
}

/// Builds the comb family member for odd prime `p`.
#[no_mangle]
pub extern "C" fn treepal_tree_gen_comb(p: u32, out: *mut *mut TreepalTree) -> TreepalStatus {
    guarded(|| {
        if out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        match generators::gen_comb(p) {
            Ok(t) => store_tree(t, out),
            Err(e) => fail(TreepalStatus::InvalidArgument, &e.to_string()),
        }
    })
}

/// Builds a seeded random attachment tree with `edges` edges.
#[no_mangle]
pub extern "C" fn treepal_tree_gen_random(
    edges: u32,
    sigma: u32,
    seed: u64,
    out: *mut *mut TreepalTree,
) -> TreepalStatus {
    guarded(|| {
        if out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        match generators::gen_random(edges, sigma, seed) {
            Ok(t) => store_tree(t, out),
            Err(e) => fail(TreepalStatus::InvalidArgument, &e.to_string()),
        }
    })
}

/// Releases a tree handle. Null is ignored.
#[no_mangle]
pub extern "C" fn treepal_tree_free(t: *mut TreepalTree) {
    if !t.is_null() {
        drop(unsafe { Box::from_raw(t) });
    }
}

#[no_mangle]
pub extern "C" fn treepal_tree_nodes(t: *const TreepalTree, out: *mut u32) -> TreepalStatus {
    guarded(|| {
        if t.is_null() || out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        unsafe { *out = (*t).tree.node_count() };
        TreepalStatus::Ok
    })
}

#[no_mangle]
pub extern "C" fn treepal_tree_edges(t: *const TreepalTree, out: *mut u32) -> TreepalStatus {
    guarded(|| {
        if t.is_null() || out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        unsafe { *out = (*t).tree.edge_count() as u32 };
        TreepalStatus::Ok
    })
}

/// Reports all distinct palindromes. `threads` 0 runs sequentially,
/// anything else processes the decomposition family on that many
/// workers; the report is identical either way.
#[no_mangle]
pub extern "C" fn treepal_report(
    t: *const TreepalTree,
    threads: u32,
    out: *mut *mut TreepalReport,
) -> TreepalStatus {
    guarded(|| {
        if t.is_null() || out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        let prep = &unsafe { &*t }.prep;
        let rep = match threads {
            0 => prep.report(),
            k => prep.report_with_threads(Some(k as usize)),
        };
        unsafe { *out = Box::into_raw(Box::new(TreepalReport { rep })) };
        TreepalStatus::Ok
    })
}

#[no_mangle]
pub extern "C" fn treepal_report_len(r: *const TreepalReport, out: *mut usize) -> TreepalStatus {
    guarded(|| {
        if r.is_null() || out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        unsafe { *out = (*r).rep.triples.len() };
        TreepalStatus::Ok
    })
}

/// Copies record `index` into `out`.
#[no_mangle]
pub extern "C" fn treepal_report_get(
    r: *const TreepalReport,
    index: usize,
    out: *mut TreepalTriple,
) -> TreepalStatus {
    guarded(|| {
        if r.is_null() || out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        let rep = &unsafe { &*r }.rep;
        match rep.triples.get(index) {
            Some(tr) => {
                unsafe { *out = triple_out(tr) };
                TreepalStatus::Ok
            }
            None => fail(
                TreepalStatus::InvalidArgument,
                &format!("index {index} out of range for {} records", rep.triples.len()),
            ),
        }
    })
}

/// Distinct palindromes per edge count to the power 1.5.
#[no_mangle]
pub extern "C" fn treepal_report_density(
    r: *const TreepalReport,
    out: *mut f64,
) -> TreepalStatus {
    guarded(|| {
        if r.is_null() || out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        unsafe { *out = (*r).rep.stats.density() };
        TreepalStatus::Ok
    })
}

/// Releases a report handle. Null is ignored.
#[no_mangle]
pub extern "C" fn treepal_report_free(r: *mut TreepalReport) {
    if !r.is_null() {
        drop(unsafe { Box::from_raw(r) });
    }
}

/// Number of distinct palindromes; runs a full report internally.
#[no_mangle]
pub extern "C" fn treepal_count(t: *const TreepalTree, out: *mut u64) -> TreepalStatus {
    guarded(|| {
        if t.is_null() || out.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        unsafe { *out = (*t).prep.report().stats.count as u64 };
        TreepalStatus::Ok
    })
}

/// Looks for a palindrome of length exactly `length`. Sets `*found`;
/// when found and `witness` is non-null, also fills the witness.
#[no_mangle]
pub extern "C" fn treepal_test(
    t: *const TreepalTree,
    length: u32,
    found: *mut bool,
    witness: *mut TreepalTriple,
) -> TreepalStatus {
    guarded(|| {
        if t.is_null() || found.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        let hit = unsafe { &*t }.prep.palindrome_test(length);
        unsafe { *found = hit.is_some() };
        if let (Some(tr), false) = (hit, witness.is_null()) {
            unsafe { *witness = triple_out(&tr) };
        }
        TreepalStatus::Ok
    })
}

/// Finds a longest palindrome. `*found` is false only for an edgeless
/// tree.
#[no_mangle]
pub extern "C" fn treepal_longest(
    t: *const TreepalTree,
    found: *mut bool,
    witness: *mut TreepalTriple,
) -> TreepalStatus {
    guarded(|| {
        if t.is_null() || found.is_null() {
            return fail(TreepalStatus::NullArgument, "null argument");
        }
        let hit = unsafe { &*t }.prep.find_longest();
        unsafe { *found = hit.is_some() };
        if let (Some(tr), false) = (hit, witness.is_null()) {
            unsafe { *witness = triple_out(&tr) };
        }
        TreepalStatus::Ok
    })
}
