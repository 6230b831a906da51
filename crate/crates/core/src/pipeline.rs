//! End-to-end palindrome reporting over a labeled tree.
//!
//! The tree is expanded so every palindrome of interest has length a
//! multiple of four and starts with the sentinel, then a centroid family
//! of double trees is processed one call at a time. Each call runs two
//! routes per orientation: the candidate route walks the left side and
//! matches palindromic-suffix anchors against a dictionary of right
//! words, and the spine route handles the highly periodic palindromes
//! the candidate window skips. Surviving words are contracted back to
//! source terms, deduplicated by (length, half word), and sorted.

use rustc_hash::FxHashMap;

use crate::dtree::{decompose_with, DTree, FamilyStats};
use crate::factors::{exists_dictionary, CodeAssigner, CodeTriple, SideIndex};
use crate::spine::{induced_palindromes, spine_decomposition, CrossPal};
use crate::tree::{expand_even, ContractError, ExpandedTree, LabeledTree, NodeId, PalTriple};

/// Cached expansion, reused across report and length queries.
pub struct Prepared {
    exp: ExpandedTree,
    source_nodes: u32,
    source_edges: u32,
}

pub fn prepare(t: &LabeledTree) -> Prepared {
    Prepared {
        exp: expand_even(t),
        source_nodes: t.node_count(),
        source_edges: t.edge_count() as u32,
    }
}

/// Size counters from one report run.
#[derive(Clone, Copy, Debug)]
pub struct ReportStats {
    pub count: usize,
    pub source_nodes: u32,
    pub source_edges: u32,
    pub family: FamilyStats,
    /// Summed spine tree sizes over every processed orientation.
    pub spine_nodes: u64,
}

impl ReportStats {
    /// Distinct palindromes per edges^1.5.
    pub fn density(&self) -> f64 {
        if self.source_edges == 0 {
            return 0.0;
        }
        self.count as f64 / (self.source_edges as f64).powf(1.5)
    }
}

pub struct Report {
    /// Sorted by (length, u, v); one entry per distinct palindrome.
    pub triples: Vec<PalTriple>,
    pub stats: ReportStats,
}

/// Convenience wrapper: prepare and report sequentially.
pub fn report_all(t: &LabeledTree) -> Report {
    prepare(t).report()
}

type DedupMap = FxHashMap<(u32, CodeTriple), PalTriple>;

struct CallOutcome {
    map: DedupMap,
    spine_nodes: u64,
}

impl Prepared {
    pub fn report(&self) -> Report {
        self.report_with_threads(None)
    }

    /// Same result as `report` for any thread count: per-word winners are
    /// minima and the final order is sorted, so scheduling cannot leak in.
    pub fn report_with_threads(&self, threads: Option<usize>) -> Report {
        let assigner = CodeAssigner::new();
        let mut map = DedupMap::default();
        let mut spine_nodes = 0u64;
        let family = match threads {
            None => decompose_with(&self.exp.tree, |call| {
                let o = process_call(&self.exp, &assigner, &call);
                merge(&mut map, o.map);
                spine_nodes += o.spine_nodes;
            }),
            Some(k) => {
                use rayon::prelude::*;
                let mut calls = Vec::new();
                let stats = decompose_with(&self.exp.tree, |c| calls.push(c));
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(k.max(1))
                    .build()
                    .expect("thread pool");
                let outcomes: Vec<CallOutcome> = pool.install(|| {
                    calls
                        .par_iter()
                        .map(|c| process_call(&self.exp, &assigner, c))
                        .collect()
                });
                for o in outcomes {
                    merge(&mut map, o.map);
                    spine_nodes += o.spine_nodes;
                }
                stats
            }
        };
        let mut triples: Vec<PalTriple> = map.into_values().collect();
        triples.sort_unstable_by_key(|t| (t.length, t.u, t.v));
        if cfg!(debug_assertions) {
            let cap = 10.0 * ((self.source_nodes + 1) as f64).powf(1.5);
            debug_assert!((triples.len() as f64) <= cap, "palindrome count breaks the bound");
        }
        let stats = ReportStats {
            count: triples.len(),
            source_nodes: self.source_nodes,
            source_edges: self.source_edges,
            family,
            spine_nodes,
        };
        Report { triples, stats }
    }

    /// A witness of some palindromic substring of length exactly `k`.
    pub fn palindrome_test(&self, k: u32) -> Option<PalTriple> {
        if k == 0 || k > self.source_edges {
            return None;
        }
        let kp = 4 * k;
        let assigner = CodeAssigner::new();
        let mut hit: Option<PalTriple> = None;
        decompose_with(&self.exp.tree, |call| {
            if hit.is_some() {
                return;
            }
            let ix1 = SideIndex::build(&call.left, &assigner);
            let ix2 = SideIndex::build(&call.right, &assigner);
            let d1 = exists_dictionary(&ix1);
            let d2 = exists_dictionary(&ix2);
            for (lx, dict) in [(&ix1, &d2), (&ix2, &d1)] {
                if hit.is_some() {
                    break;
                }
                hit = scan_for_length(&self.exp, call.r, lx, dict, kp);
            }
        });
        hit
    }

    /// A longest palindromic substring; None only for a single node.
    /// Length feasibility is monotone within a parity class, so two
    /// binary searches over the exact-length test suffice.
    pub fn find_longest(&self) -> Option<PalTriple> {
        let m = self.source_edges;
        if m == 0 {
            return None;
        }
        let even = search_max(m / 2, |j| self.palindrome_test(2 * j).is_some());
        let odd = search_max(m.div_ceil(2), |j| self.palindrome_test(2 * j - 1).is_some());
        let best_k = match (even, odd) {
            (Some(je), Some(jo)) => (2 * je).max(2 * jo - 1),
            (Some(je), None) => 2 * je,
            (None, Some(jo)) => 2 * jo - 1,
            (None, None) => return None,
        };
        self.palindrome_test(best_k)
    }
}

/// Largest j in [1, hi] accepted by a monotone-decreasing predicate.
fn search_max(hi: u32, pred: impl Fn(u32) -> bool) -> Option<u32> {
    let (mut lo, mut hi) = (0u32, hi);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    (lo > 0).then_some(lo)
}

fn merge(into: &mut DedupMap, from: DedupMap) {
    for (k, v) in from {
        into.entry(k)
            .and_modify(|b| {
                if (v.u, v.v) < (b.u, b.v) {
                    *b = v;
                }
            })
            .or_insert(v);
    }
}

/// Both routes for both orientations of one family call.
fn process_call(exp: &ExpandedTree, assigner: &CodeAssigner, call: &DTree) -> CallOutcome {
    let ix1 = SideIndex::build(&call.left, assigner);
    let ix2 = SideIndex::build(&call.right, assigner);
    let d1 = exists_dictionary(&ix1);
    let d2 = exists_dictionary(&ix2);
    let mut out = CallOutcome {
        map: DedupMap::default(),
        spine_nodes: 0,
    };
    let mut emits: Vec<CrossPal> = Vec::new();
    for (lx, rx, dict) in [(&ix1, &ix2, &d2), (&ix2, &ix1, &d1)] {
        emits.clear();
        candidate_route(lx, rx.len(), dict, &mut emits);
        for st in spine_decomposition(lx, rx) {
            out.spine_nodes += st.size() as u64;
            induced_palindromes(&st, lx, rx, assigner, &mut emits);
        }
        reduce_emissions(exp, call.r, lx, &emits, &mut out.map);
    }
    out
}

/// Walks the left side once. `xstack` holds the ancestors-or-self whose
/// full upward word is a palindrome; appending the reversal of a right
/// word equal to val(v, z) to val(v, r) then forms a palindrome, so each
/// window entry costs one dictionary probe. The window keeps both ends
/// of the stack only; the middle is periodic and belongs to the spines.
fn candidate_route(
    lx: &SideIndex,
    right_len: usize,
    dict: &FxHashMap<CodeTriple, u32>,
    out: &mut Vec<CrossPal>,
) {
    let n_d = lx.len() + right_len - 1;
    let s = (n_d as u64).isqrt() as usize + 1;
    let (front, back) = (4 * s, 2 * s);
    let mut xstack: Vec<u32> = Vec::new();
    let mut frames: Vec<(u32, usize, bool)> = Vec::new();
    let p0 = enter_node(lx, 0, front, back, dict, &mut xstack, out);
    frames.push((0, 0, p0));
    while let Some(&(v, ci, pushed)) = frames.last() {
        let kids = &lx.det.children[v as usize];
        if ci < kids.len() {
            frames.last_mut().expect("nonempty").1 += 1;
            let c = kids[ci].1;
            let pc = enter_node(lx, c, front, back, dict, &mut xstack, out);
            frames.push((c, 0, pc));
        } else {
            if pushed {
                xstack.pop();
            }
            frames.pop();
        }
    }
}

fn enter_node(
    lx: &SideIndex,
    v: u32,
    front: usize,
    back: usize,
    dict: &FxHashMap<CodeTriple, u32>,
    xstack: &mut Vec<u32>,
    out: &mut Vec<CrossPal>,
) -> bool {
    let d = lx.depth(v);
    let pal = lx.is_pal_anc(v, d);
    if pal {
        xstack.push(v);
    }
    let len = xstack.len();
    let take_front = front.min(len);
    let start_back = len.saturating_sub(back).max(take_front);
    for i in (0..take_front).chain(start_back..len) {
        let z = xstack[i];
        let q = d - lx.depth(z);
        if dict.contains_key(&lx.seg_fwd(v, q)) {
            out.push(CrossPal { len: d + q, u: v });
        }
    }
    pal
}

/// Exact-length scan of one orientation: a palindrome of expanded length
/// `kp` starting at u either lies on the root path (deep case) or closes
/// through the root against a matching right word (cross case).
fn scan_for_length(
    exp: &ExpandedTree,
    r: NodeId,
    lx: &SideIndex,
    dict: &FxHashMap<CodeTriple, u32>,
    kp: u32,
) -> Option<PalTriple> {
    let sent = exp.sentinel();
    for u in 1..lx.len() as u32 {
        if lx.det.plabel[u as usize] != sent {
            continue;
        }
        let d = lx.depth(u);
        let ok = if d >= kp {
            lx.is_pal_anc(u, kp)
        } else if 2 * d >= kp {
            let vp = lx.up(u, kp - d);
            lx.is_pal_anc(vp, lx.depth(vp)) && dict.contains_key(&lx.seg_fwd(u, kp - d))
        } else {
            false
        };
        if !ok {
            continue;
        }
        let u_src = lx.det.origin[u as usize];
        let v_src = exp.walk(u_src, r, kp / 2);
        let trip = PalTriple {
            length: kp,
            u: u_src,
            v: v_src,
        };
        // A sentinel-led palindrome can still fail contraction when its
        // occurrences never start at a source node; keep scanning then.
        if let Ok(orig) = exp.contract_triple(&trip) {
            return Some(orig);
        }
    }
    None
}

/// Filters raw emissions down to source palindromes and folds them into
/// the dedup map keyed by (expanded length, half-word token).
fn reduce_emissions(
    exp: &ExpandedTree,
    r: NodeId,
    lx: &SideIndex,
    emits: &[CrossPal],
    map: &mut DedupMap,
) {
    let sent = exp.sentinel();
    for &CrossPal { len, u } in emits {
        if len == 0 || !len.is_multiple_of(4) || lx.det.plabel[u as usize] != sent {
            continue;
        }
        debug_assert!(lx.depth(u) >= len / 2, "midpoint fell off the left side");
        let tok = lx.seg_fwd(u, len / 2);
        let u_src = lx.det.origin[u as usize];
        let v_src = exp.walk(u_src, r, len / 2);
        let trip = PalTriple {
            length: len,
            u: u_src,
            v: v_src,
        };
        match exp.contract_triple(&trip) {
            Ok(orig) => {
                map.entry((len, tok))
                    .and_modify(|b| {
                        if (orig.u, orig.v) < (b.u, b.v) {
                            *b = orig;
                        }
                    })
                    .or_insert(orig);
            }
            // Palindromic but not blockwise: no occurrence starts at a
            // source node, so the word has no source counterpart.
            Err(ContractError::StartNotOriginal) => {}
            Err(e) => unreachable!("contraction rejected a filtered emission: {e}"),
        }
    }
}
