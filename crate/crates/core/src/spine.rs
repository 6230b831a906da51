//! Spine decomposition of a double tree and the palindromes it induces.
//!
//! A spine is a maximal periodic path through the root: it starts from a
//! depth-alpha left node whose word has a short period, extends downward
//! and across the root by following the unique period-preserving child,
//! and must reach depth alpha on the right as well. Palindromes whose
//! central part runs along a spine are found by labeling the nodes
//! hanging off it and matching equal labels across the root; equal-label
//! pairs at even spine distance are settled either pairwise (small
//! groups) or via one representative test plus a distance-set
//! convolution (large groups).

use rustc_hash::FxHashMap;

use crate::convolution::{set_difference, IntSet};
use crate::dtree::RootedDet;
use crate::factors::{is_palindrome_cross, CodeAssigner, CodeTriple, SideIndex, StringCodes};
use crate::tree::Label;

/// A palindrome found in double-tree coordinates: an even-length word
/// whose first half reads upward from `u`; the midpoint is the ancestor
/// of `u` at distance `len / 2` (emission guarantees `len/2 <= depth`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrossPal {
    pub len: u32,
    pub u: u32,
}

/// A node attached to a spine: `pos` indexes the nearest spine node in
/// spine order, `off` is the distance to it (0 for spine nodes).
#[derive(Clone, Copy, Debug)]
pub struct SpineMember {
    pub node: u32,
    pub pos: u32,
    pub off: u32,
}

/// One spine with its word, nodes by position (`nodes[pos_r]` is the
/// shared root), and the members hanging off its deep halves.
pub struct SpineTree {
    pub p: u32,
    pub alpha: u32,
    pub word: Vec<Label>,
    pub nodes: Vec<u32>,
    pub pos_r: usize,
    pub left_members: Vec<SpineMember>,
    pub right_members: Vec<SpineMember>,
}

impl SpineTree {
    /// Spine nodes plus attached off-spine nodes.
    pub fn size(&self) -> usize {
        let attached = self
            .left_members
            .iter()
            .chain(&self.right_members)
            .filter(|m| m.off > 0)
            .count();
        self.nodes.len() + attached
    }
}

/// ceil(2 * sqrt(n)).
pub fn alpha_for(n: usize) -> u32 {
    let t = (4 * n as u64).isqrt();
    if t * t < 4 * n as u64 {
        t as u32 + 1
    } else {
        t as u32
    }
}

/// floor(sqrt(n) / 2).
pub fn period_cap_for(n: usize) -> u32 {
    ((n as u64).isqrt() / 2) as u32
}

/// All spine trees of the double tree with sides `lx`, `rx`. Candidates
/// are left nodes at depth exactly alpha whose word period is at most
/// floor(sqrt(n)/2); each is extended maximally in both directions and
/// kept iff the right reach is at least alpha. The summed sizes stay
/// within twice the double tree, asserted here.
pub fn spine_decomposition(lx: &SideIndex, rx: &SideIndex) -> Vec<SpineTree> {
    let n_d = lx.len() + rx.len() - 1;
    let alpha = alpha_for(n_d);
    let p_cap = period_cap_for(n_d);
    let ldet = &lx.det;
    let rdet = &rx.det;

    let mut out = Vec::new();
    for u in 0..ldet.len() as u32 {
        if lx.depth(u) != alpha {
            continue;
        }
        let p = lx.per_len(u);
        if p > p_cap {
            continue;
        }
        // The word grows in three segments: `down_rev` below u (deepest
        // last), the fixed u-to-root base, appended right labels.
        let base = ldet.root_word(u);
        let mut down_rev: Vec<Label> = Vec::new();
        let mut down_nodes: Vec<u32> = Vec::new();
        let at = |down_rev: &[Label], right: &[Label], i: usize| -> Label {
            if i < down_rev.len() {
                down_rev[down_rev.len() - 1 - i]
            } else if i - down_rev.len() < base.len() {
                base[i - down_rev.len()]
            } else {
                right[i - down_rev.len() - base.len()]
            }
        };
        let mut cur = u;
        loop {
            // Period p forces the next char below to repeat index p - 1.
            let need = at(&down_rev, &[], p as usize - 1);
            match ldet.child(cur, need) {
                Some(c) => {
                    down_rev.push(need);
                    down_nodes.push(c);
                    cur = c;
                }
                None => break,
            }
        }
        let mut right: Vec<Label> = Vec::new();
        let mut right_nodes: Vec<u32> = Vec::new();
        let mut cur_r = 0u32;
        loop {
            let total = down_rev.len() + base.len() + right.len();
            let need = at(&down_rev, &right, total - p as usize);
            match rdet.child(cur_r, need) {
                Some(c) => {
                    right.push(need);
                    right_nodes.push(c);
                    cur_r = c;
                }
                None => break,
            }
        }
        if (right.len() as u32) < alpha {
            continue;
        }

        let mut word: Vec<Label> = down_rev.iter().rev().copied().collect();
        word.extend(&base);
        word.extend(&right);
        debug_assert!(
            word.len() > 256 || shortest_period(&word) == p as usize,
            "extension changed the shortest period"
        );
        down_nodes.reverse();
        let mut nodes = down_nodes;
        nodes.push(u);
        let mut a = u;
        while a != 0 {
            a = ldet.parent[a as usize];
            nodes.push(a);
        }
        let pos_r = nodes.len() - 1;
        nodes.extend(&right_nodes);
        debug_assert_eq!(nodes.len(), word.len() + 1);

        let (left_members, right_members) = collect_members(&nodes, pos_r, alpha, lx, rx);
        out.push(SpineTree {
            p,
            alpha,
            word,
            nodes,
            pos_r,
            left_members,
            right_members,
        });
    }

    let total: usize = out.iter().map(|s| s.size()).sum();
    assert!(
        total <= 2 * n_d,
        "spine trees hold {total} nodes, double tree only {n_d}"
    );
    out
}

/// Members hang off spine nodes at depth >= alpha on their side: the
/// spine node itself plus its subtree minus the continuing spine child.
fn collect_members(
    nodes: &[u32],
    pos_r: usize,
    alpha: u32,
    lx: &SideIndex,
    rx: &SideIndex,
) -> (Vec<SpineMember>, Vec<SpineMember>) {
    let alpha = alpha as usize;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for pos in 0..=(pos_r - alpha) {
        let w = nodes[pos];
        let skip = if pos > 0 { Some(nodes[pos - 1]) } else { None };
        subtree_members(&lx.det, w, skip, pos as u32, lx.depth(w), &mut left);
    }
    for pos in (pos_r + alpha)..nodes.len() {
        let w = nodes[pos];
        let skip = if pos + 1 < nodes.len() {
            Some(nodes[pos + 1])
        } else {
            None
        };
        subtree_members(&rx.det, w, skip, pos as u32, rx.depth(w), &mut right);
    }
    (left, right)
}

fn subtree_members(
    det: &RootedDet,
    w: u32,
    skip: Option<u32>,
    pos: u32,
    w_depth: u32,
    out: &mut Vec<SpineMember>,
) {
    let mut stack = vec![w];
    while let Some(v) = stack.pop() {
        out.push(SpineMember {
            node: v,
            pos,
            off: det.depth[v as usize] - w_depth,
        });
        for &(_, c) in &det.children[v as usize] {
            if v == w && Some(c) == skip {
                continue;
            }
            stack.push(c);
        }
    }
}

/// Palindromes induced by one spine tree, in double-tree coordinates.
///
/// Nodes are keyed by (off-spine length + p, off-spine word, adjacent
/// length-p spine window pointing across the root); equal keys read the
/// same label. Within a key, a left and right member at even spine
/// distance delta span a palindrome of length 2*off + delta whenever the
/// cross word checks out; small groups test every pair, large groups
/// test one even-distance representative and then emit every even delta
/// of the distance difference set, witnessed by the deepest left member.
pub fn induced_palindromes(
    st: &SpineTree,
    lx: &SideIndex,
    rx: &SideIndex,
    assigner: &CodeAssigner,
    out: &mut Vec<CrossPal>,
) {
    let p = st.p as usize;
    let wlen = st.word.len();
    let fwd = StringCodes::build(&st.word, assigner);
    let rev_word: Vec<Label> = st.word.iter().rev().copied().collect();
    let rev = StringCodes::build(&rev_word, assigner);

    type Key = (u32, CodeTriple, CodeTriple);
    let mut groups: FxHashMap<Key, (Vec<SpineMember>, Vec<SpineMember>)> = FxHashMap::default();
    for m in &st.left_members {
        // The on-spine window runs from s(u) toward the right end.
        if m.pos as usize + p > wlen {
            continue;
        }
        let key = (
            m.off + st.p,
            lx.seg_fwd(m.node, m.off),
            fwd.seg(m.pos as usize, p),
        );
        groups.entry(key).or_default().0.push(*m);
    }
    for m in &st.right_members {
        // Mirrored: the window runs from s(v) toward the left end, read
        // through the reversed word.
        if (m.pos as usize) < p {
            continue;
        }
        let key = (
            m.off + st.p,
            rx.seg_fwd(m.node, m.off),
            rev.seg(wlen - m.pos as usize, p),
        );
        groups.entry(key).or_default().1.push(*m);
    }

    let small_cap = st.size().isqrt();
    for (lefts, rights) in groups.values() {
        if lefts.is_empty() || rights.is_empty() {
            continue;
        }
        if lefts.len() + rights.len() <= small_cap {
            for x in lefts {
                for y in rights {
                    let delta = y.pos - x.pos;
                    if delta % 2 != 0 || (delta / 2) as usize > st.pos_r - x.pos as usize {
                        continue;
                    }
                    if is_palindrome_cross(lx, x.node, rx, y.node) {
                        out.push(CrossPal {
                            len: 2 * x.off + delta,
                            u: x.node,
                        });
                    }
                }
            }
            continue;
        }

        // One even-distance pair settles the whole group: all members
        // share the off word and a spine window, so by periodicity all
        // even-delta pairs are palindromic together.
        let Some((xr, yr)) = find_even_pair(lefts, rights) else {
            continue;
        };
        if !is_palindrome_cross(lx, xr.node, rx, yr.node) {
            continue;
        }
        let x0 = lefts
            .iter()
            .min_by_key(|m| (m.pos, m.node))
            .expect("nonempty group");
        let xs = IntSet::from_members(wlen as u32, lefts.iter().map(|m| m.pos));
        let ys = IntSet::from_members(wlen as u32, rights.iter().map(|m| m.pos));
        let diffs = set_difference(&ys, &xs);
        for delta in diffs.iter() {
            debug_assert!(delta > 0);
            let delta = delta as u32;
            if delta % 2 != 0 || (delta / 2) as usize > st.pos_r - x0.pos as usize {
                continue;
            }
            out.push(CrossPal {
                len: 2 * x0.off + delta,
                u: x0.node,
            });
        }
    }
}

/// Any (left, right) pair at even spine distance: positions of equal
/// parity. Returns none when all pairs are odd.
fn find_even_pair(
    lefts: &[SpineMember],
    rights: &[SpineMember],
) -> Option<(SpineMember, SpineMember)> {
    for parity in 0..2u32 {
        let x = lefts.iter().find(|m| m.pos % 2 == parity);
        let y = rights.iter().find(|m| m.pos % 2 == parity);
        if let (Some(x), Some(y)) = (x, y) {
            return Some((*x, *y));
        }
    }
    None
}

fn shortest_period(w: &[Label]) -> usize {
    (1..=w.len())
        .find(|&p| (0..w.len() - p).all(|i| w[i] == w[i + p]))
        .unwrap_or(0)
}
