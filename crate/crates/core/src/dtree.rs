//! Deterministic double trees and their centroid decomposition family.
//!
//! A double tree pairs two rooted, determinized trees sharing a root r;
//! reading up the left tree through r and down the right enumerates path
//! words. Determinization merges equal-labeled children recursively, so
//! equal root-ward words collapse to one node. Pairing two sides that
//! came from disjoint components of r keeps every such word a genuine
//! simple-path word of the source; the recursive family below arranges
//! exactly that while keeping total size near-linear.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::generators::SplitMix64;
use crate::tree::{Label, LabeledTree, NodeId};

/// Calibrated constant for the family size bound
/// `total_edges <= C_FAM * edges * (ceil(log2 edges) + 1)`.
pub const C_FAM: u64 = 8;

/// A rooted determinized tree. Node 0 is the root; ids are dense and
/// assigned in breadth-first construction order, so they are stable for a
/// given input. Each node is a class of source nodes with equal root-ward
/// words; `origin` keeps the smallest class member.
#[derive(Debug)]
pub struct RootedDet {
    pub parent: Vec<u32>,
    /// Label of the edge toward the parent; unused at the root.
    pub plabel: Vec<Label>,
    pub depth: Vec<u32>,
    /// Children sorted by label; labels are unique per node.
    pub children: Vec<Vec<(Label, u32)>>,
    /// Smallest source node id among the class members.
    pub origin: Vec<NodeId>,
}

impl RootedDet {
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.len() - 1
    }

    /// The unique child along `lab`, if present.
    pub fn child(&self, x: u32, lab: Label) -> Option<u32> {
        let kids = &self.children[x as usize];
        kids.binary_search_by_key(&lab, |&(l, _)| l).ok().map(|i| kids[i].1)
    }

    /// Upward word from `x` to the root.
    pub fn root_word(&self, x: u32) -> Vec<Label> {
        let mut w = Vec::with_capacity(self.depth[x as usize] as usize);
        let mut v = x;
        while v != 0 {
            w.push(self.plabel[v as usize]);
            v = self.parent[v as usize];
        }
        w
    }
}

/// Two determinized trees sharing root `r` (a source node id). Words are
/// read up the left side, through r, down the right side.
#[derive(Clone)]
pub struct DTree {
    pub left: Arc<RootedDet>,
    pub right: Arc<RootedDet>,
    pub r: NodeId,
}

impl DTree {
    pub fn edge_count(&self) -> u64 {
        (self.left.edge_count() + self.right.edge_count()) as u64
    }

    /// The word of the cross pair (x in left, y in right).
    pub fn cross_word(&self, x: u32, y: u32) -> Vec<Label> {
        let mut w = self.left.root_word(x);
        let mut down = self.right.root_word(y);
        down.reverse();
        w.extend(down);
        w
    }
}

/// The recursive decomposition: every even-length simple path value of
/// the source appears as a cross word of some member with its midpoint on
/// the left side, and every cross word is a simple-path value.
pub struct DTreeFamily {
    pub members: Vec<DTree>,
    pub total_edges: u64,
    /// Recursion calls that emitted a member pair.
    pub calls: usize,
    pub max_depth: usize,
}

/// Scratch shared by the recursion so per-call work stays O(call size).
/// Epoch counters substitute for clearing.
struct Scratch {
    active: Vec<u32>,
    active_epoch: u32,
    parent: Vec<NodeId>,
    order: Vec<NodeId>,
    size: Vec<u32>,
    comp: Vec<u32>,
    label_slot: Vec<u32>,
    label_seen: Vec<u32>,
    label_epoch: u32,
}

impl Scratch {
    fn new(n: usize, labels: usize) -> Self {
        Scratch {
            active: vec![0; n],
            active_epoch: 0,
            parent: vec![0; n],
            order: Vec::with_capacity(n),
            size: vec![0; n],
            comp: vec![0; n],
            label_slot: vec![0; labels],
            label_seen: vec![0; labels],
            label_epoch: 0,
        }
    }

    fn activate(&mut self, nodes: &[NodeId]) {
        self.active_epoch += 1;
        for &v in nodes {
            self.active[v as usize] = self.active_epoch;
        }
    }

    fn is_active(&self, v: NodeId) -> bool {
        self.active[v as usize] == self.active_epoch
    }
}

/// Rooted BFS over the active subset; fills parent pointers and the visit
/// order. In a tree, skipping the parent edge is the whole visited check.
fn orient(t: &LabeledTree, root: NodeId, scratch: &mut Scratch) {
    scratch.order.clear();
    scratch.order.push(root);
    scratch.parent[root as usize] = root;
    let mut head = 0;
    while head < scratch.order.len() {
        let x = scratch.order[head];
        head += 1;
        for &(y, _) in t.neighbors(x) {
            if scratch.is_active(y) && y != scratch.parent[x as usize] {
                scratch.parent[y as usize] = x;
                scratch.order.push(y);
            }
        }
    }
}

fn centroid_of_active(t: &LabeledTree, nodes: &[NodeId], scratch: &mut Scratch) -> NodeId {
    scratch.activate(nodes);
    orient(t, nodes[0], scratch);
    assert_eq!(scratch.order.len(), nodes.len(), "subset must induce a subtree");
    let total = nodes.len() as u32;
    for &v in &scratch.order {
        scratch.size[v as usize] = 1;
    }
    for i in (1..scratch.order.len()).rev() {
        let v = scratch.order[i];
        let p = scratch.parent[v as usize];
        scratch.size[p as usize] += scratch.size[v as usize];
    }
    let mut best: Option<(u32, NodeId)> = None;
    for &v in &scratch.order {
        // Components at v: each child subtree, plus everything above.
        let mut worst = total - scratch.size[v as usize];
        for &(y, _) in t.neighbors(v) {
            if scratch.is_active(y) && scratch.parent[y as usize] == v && y != scratch.order[0] {
                worst = worst.max(scratch.size[y as usize]);
            }
        }
        let key = (worst, v);
        if best.is_none() || key < best.unwrap() {
            best = Some(key);
        }
    }
    best.unwrap().1
}

/// The node of the subset minimizing the largest component left by its
/// removal (ties to the smallest id). That minimum is at most half the
/// subset, the classic centroid guarantee.
///
/// # Panics
/// When `within` is empty or does not induce a subtree.
pub fn centroid(t: &LabeledTree, within: &[NodeId]) -> NodeId {
    assert!(!within.is_empty(), "centroid of an empty subset");
    let mut scratch = Scratch::new(t.node_count() as usize, 0);
    centroid_of_active(t, within, &mut scratch)
}

/// Greedy balanced split of component sizes: descending size, each to the
/// currently lighter group. Returns index groups. With every component at
/// most half the whole subtree (the centroid guarantee) the heavier group
/// holds at most 3/4 of the total, asserted here.
pub fn split_components(sizes: &[u64]) -> (Vec<usize>, Vec<usize>) {
    assert!(sizes.len() >= 2, "need at least two components to split");
    let total: u64 = sizes.iter().sum();
    let mut idx: Vec<usize> = (0..sizes.len()).collect();
    idx.sort_by_key(|&i| std::cmp::Reverse(sizes[i]));
    let (mut g1, mut g2) = (Vec::new(), Vec::new());
    let (mut w1, mut w2) = (0u64, 0u64);
    for i in idx {
        if w1 <= w2 {
            g1.push(i);
            w1 += sizes[i];
        } else {
            g2.push(i);
            w2 += sizes[i];
        }
    }
    assert!(
        4 * w1.max(w2) <= 3 * total,
        "unbalanced split {w1}/{w2} of {total}: centroid components invalid"
    );
    (g1, g2)
}

/// Connected components of the active subset minus `r`, in BFS discovery
/// order. `subset` must contain `r`. Uses `scratch.comp` so the cost is
/// O(subset), not O(tree).
fn components_at(
    t: &LabeledTree,
    r: NodeId,
    subset: &[NodeId],
    scratch: &mut Scratch,
) -> Vec<Vec<NodeId>> {
    scratch.activate(subset);
    orient(t, r, scratch);
    let mut comps: Vec<Vec<NodeId>> = Vec::new();
    // BFS order assigns parents before children, so component ids flow
    // down from r's immediate children.
    for i in 1..scratch.order.len() {
        let v = scratch.order[i];
        let p = scratch.parent[v as usize];
        let c = if p == r {
            comps.push(Vec::new());
            (comps.len() - 1) as u32
        } else {
            scratch.comp[p as usize]
        };
        scratch.comp[v as usize] = c;
        comps[c as usize].push(v);
    }
    comps
}

/// Determinizes the components in `group` (node lists hanging off `r`,
/// not containing r) into one rooted tree. Classes are built breadth
/// first; a class's children are its members' children bucketed by edge
/// label, one class per distinct label.
fn determinize(
    t: &LabeledTree,
    r: NodeId,
    group: &[&Vec<NodeId>],
    scratch: &mut Scratch,
) -> RootedDet {
    let mut total = 1usize;
    scratch.active_epoch += 1;
    for comp in group {
        total += comp.len();
        for &v in comp.iter() {
            scratch.active[v as usize] = scratch.active_epoch;
        }
    }
    scratch.active[r as usize] = scratch.active_epoch;
    orient(t, r, scratch);
    debug_assert_eq!(scratch.order.len(), total);

    let mut det = RootedDet {
        parent: vec![0],
        plabel: vec![0],
        depth: vec![0],
        children: vec![Vec::new()],
        origin: vec![r],
    };
    // Queue of (class id, members); member lists die after expansion.
    let mut queue: VecDeque<(u32, Vec<NodeId>)> = VecDeque::new();
    queue.push_back((0, vec![r]));
    while let Some((cid, members)) = queue.pop_front() {
        scratch.label_epoch += 1;
        let fresh_base = det.parent.len() as u32;
        let mut fresh: Vec<(u32, Vec<NodeId>)> = Vec::new();
        for &m in &members {
            for &(y, lab) in t.neighbors(m) {
                if !scratch.is_active(y) || scratch.parent[y as usize] != m || y == r {
                    continue;
                }
                let li = lab as usize;
                if scratch.label_seen[li] != scratch.label_epoch {
                    scratch.label_seen[li] = scratch.label_epoch;
                    let id = det.parent.len() as u32;
                    scratch.label_slot[li] = id;
                    det.parent.push(cid);
                    det.plabel.push(lab);
                    det.depth.push(det.depth[cid as usize] + 1);
                    det.children.push(Vec::new());
                    det.origin.push(y);
                    det.children[cid as usize].push((lab, id));
                    fresh.push((id, vec![y]));
                } else {
                    let id = scratch.label_slot[li];
                    fresh[(id - fresh_base) as usize].1.push(y);
                    let o = &mut det.origin[id as usize];
                    *o = (*o).min(y);
                }
            }
        }
        queue.extend(fresh);
    }
    for kids in &mut det.children {
        kids.sort_by_key(|&(l, _)| l);
        assert!(
            kids.windows(2).all(|w| w[0].0 != w[1].0),
            "determinization left duplicate child labels"
        );
    }
    det
}

/// The full determinization of `t` at root `r`, duplicated into both
/// sides. Cross words of this naive double tree need not be simple-path
/// values (the family below exists precisely to fix that).
pub fn build_psi(t: &LabeledTree, r: NodeId) -> DTree {
    assert!(r < t.node_count());
    let mut scratch = Scratch::new(t.node_count() as usize, t.sigma() as usize + 1);
    let all: Vec<NodeId> = (0..t.node_count()).collect();
    let comps = components_at(t, r, &all, &mut scratch);
    let refs: Vec<&Vec<NodeId>> = comps.iter().collect();
    let det = Arc::new(determinize(t, r, &refs, &mut scratch));
    DTree {
        left: det.clone(),
        right: det,
        r,
    }
}

/// Family size counters without the members themselves.
#[derive(Clone, Copy, Debug)]
pub struct FamilyStats {
    pub total_edges: u64,
    pub calls: usize,
    pub max_depth: usize,
}

/// Centroid recursion feeding one member per call to `sink`; the mirror
/// orientation is the same pair with sides swapped, which callers build
/// themselves from the shared arcs. Streaming keeps only one call alive
/// at a time. Hard-asserts the calibrated size bound at the end.
pub fn decompose_with(t: &LabeledTree, mut sink: impl FnMut(DTree)) -> FamilyStats {
    assert!(t.node_count() >= 1);
    let n = t.node_count() as usize;
    let mut scratch = Scratch::new(n, t.sigma() as usize + 1);
    let mut stats = FamilyStats {
        total_edges: 0,
        calls: 0,
        max_depth: 0,
    };
    let all: Vec<NodeId> = (0..t.node_count()).collect();
    let mut work: Vec<(Vec<NodeId>, usize)> = vec![(all, 0)];
    while let Some((nodes, rec_depth)) = work.pop() {
        if nodes.len() <= 2 {
            // One edge or less: single labels still occur as length-1
            // cross paths of ancestor calls, nothing to emit here.
            continue;
        }
        stats.max_depth = stats.max_depth.max(rec_depth + 1);
        let r = centroid_of_active(t, &nodes, &mut scratch);
        let comps = components_at(t, r, &nodes, &mut scratch);
        let sizes: Vec<u64> = comps.iter().map(|c| c.len() as u64).collect();
        let (g1, g2) = split_components(&sizes);
        let pick = |g: &[usize]| -> Vec<&Vec<NodeId>> { g.iter().map(|&i| &comps[i]).collect() };
        let d1 = Arc::new(determinize(t, r, &pick(&g1), &mut scratch));
        let d2 = Arc::new(determinize(t, r, &pick(&g2), &mut scratch));
        stats.total_edges += 2 * (d1.edge_count() + d2.edge_count()) as u64;
        stats.calls += 1;
        sink(DTree {
            left: d1,
            right: d2,
            r,
        });
        for g in [g1, g2] {
            let mut part: Vec<NodeId> = vec![r];
            for &i in &g {
                part.extend_from_slice(&comps[i]);
            }
            work.push((part, rec_depth + 1));
        }
    }
    let edges = t.edge_count() as u64;
    if edges > 0 {
        let bound = C_FAM * edges * (edges.next_power_of_two().trailing_zeros() as u64 + 1);
        assert!(
            stats.total_edges <= bound,
            "family has {} edges, bound {bound}",
            stats.total_edges
        );
    }
    stats
}

/// Builds the whole family at once: two mirrored members per call (the
/// two orientations of the same determinized pair).
pub fn decompose_family(t: &LabeledTree) -> DTreeFamily {
    let mut members = Vec::new();
    let stats = decompose_with(t, |d| {
        members.push(d.clone());
        members.push(DTree {
            left: d.right,
            right: d.left,
            r: d.r,
        });
    });
    DTreeFamily {
        members,
        total_edges: stats.total_edges,
        calls: stats.calls,
        max_depth: stats.max_depth,
    }
}

/// Result of randomized soundness checking: every sampled cross word must
/// read along the source path between the two class origins.
#[derive(Debug)]
pub struct SoundnessReport {
    pub samples: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SoundnessReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Samples random cross pairs across `members` and checks each word
/// against the source path between the pair's origins.
pub fn sample_soundness(
    members: &[DTree],
    source: &LabeledTree,
    samples: usize,
    seed: u64,
) -> SoundnessReport {
    let mut rng = SplitMix64::new(seed);
    let mut report = SoundnessReport {
        samples,
        failures: 0,
        first_failure: None,
    };
    if members.is_empty() {
        report.samples = 0;
        return report;
    }
    for _ in 0..samples {
        let d = &members[rng.below(members.len() as u64) as usize];
        let x = rng.below(d.left.len() as u64) as u32;
        let y = rng.below(d.right.len() as u64) as u32;
        if x == 0 && y == 0 {
            continue;
        }
        let word = d.cross_word(x, y);
        let (a, b) = (d.left.origin[x as usize], d.right.origin[y as usize]);
        let actual = source.path_value(a, b);
        if actual.symbols != word {
            report.failures += 1;
            if report.first_failure.is_none() {
                report.first_failure = Some(format!(
                    "cross pair ({x},{y}) at root {r}: word {:?} but path {a}->{b} reads {:?}",
                    word, actual.symbols, r = d.r
                ));
            }
        }
    }
    report
}
