//! A rooted view of a tree: parents, depths, and binary-lifting jumps
//! giving O(log n) level ancestors, LCA, distances, and path walking.

use crate::tree::{Label, LabeledTree, NodeId};

pub(crate) struct RootedIndex {
    parent: Vec<NodeId>,
    #[cfg_attr(not(test), allow(dead_code))]
    plabel: Vec<Label>,
    depth: Vec<u32>,
    /// up[k][v] is the 2^k-ancestor of v (root beyond the top).
    up: Vec<Vec<NodeId>>,
}

impl RootedIndex {
    pub fn new(tree: &LabeledTree, root: NodeId) -> Self {
        let n = tree.node_count() as usize;
        let mut parent = vec![root; n];
        let mut plabel = vec![0; n];
        let mut depth = vec![0u32; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut stack = vec![root];
        seen[root as usize] = true;
        while let Some(x) = stack.pop() {
            order.push(x);
            for &(y, lab) in tree.neighbors(x) {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    parent[y as usize] = x;
                    plabel[y as usize] = lab;
                    depth[y as usize] = depth[x as usize] + 1;
                    stack.push(y);
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        let max_depth = depth.iter().copied().max().unwrap_or(0);
        let levels = (32 - u32::leading_zeros(max_depth.max(1))) as usize;
        let mut up = Vec::with_capacity(levels);
        up.push(parent.clone());
        for k in 1..levels {
            let prev = &up[k - 1];
            let next: Vec<NodeId> = (0..n).map(|v| prev[prev[v] as usize]).collect();
            up.push(next);
        }
        RootedIndex {
            parent,
            plabel,
            depth,
            up,
        }
    }

    #[cfg(test)]
    pub fn depth(&self, v: NodeId) -> u32 {
        self.depth[v as usize]
    }

    pub fn ancestor(&self, v: NodeId, k: u32) -> NodeId {
        debug_assert!(k <= self.depth[v as usize]);
        let mut v = v;
        let mut k = k;
        while k != 0 {
            let bit = k.trailing_zeros() as usize;
            v = self.up[bit][v as usize];
            k &= k - 1;
        }
        v
    }

    pub fn lca(&self, a: NodeId, b: NodeId) -> NodeId {
        let (mut a, mut b) = (a, b);
        if self.depth[a as usize] < self.depth[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        a = self.ancestor(a, self.depth[a as usize] - self.depth[b as usize]);
        if a == b {
            return a;
        }
        for k in (0..self.up.len()).rev() {
            if self.up[k][a as usize] != self.up[k][b as usize] {
                a = self.up[k][a as usize];
                b = self.up[k][b as usize];
            }
        }
        self.parent[a as usize]
    }

    pub fn dist(&self, a: NodeId, b: NodeId) -> u32 {
        let l = self.lca(a, b);
        self.depth[a as usize] + self.depth[b as usize] - 2 * self.depth[l as usize]
    }

    /// Node `d` edges from `a` along the path to `b`; `d` must not exceed
    /// the path length.
    pub fn walk(&self, a: NodeId, b: NodeId, d: u32) -> NodeId {
        let l = self.lca(a, b);
        let da = self.depth[a as usize] - self.depth[l as usize];
        let db = self.depth[b as usize] - self.depth[l as usize];
        assert!(d <= da + db, "walk distance exceeds path length");
        if d <= da {
            self.ancestor(a, d)
        } else {
            self.ancestor(b, da + db - d)
        }
    }

    /// Label sequence read from `a` to `b`, in O(path length).
    #[cfg(test)]
    pub fn path_word(&self, a: NodeId, b: NodeId) -> Vec<Label> {
        let l = self.lca(a, b);
        let mut front = Vec::new();
        let mut x = a;
        while x != l {
            front.push(self.plabel[x as usize]);
            x = self.parent[x as usize];
        }
        let mut back = Vec::new();
        let mut y = b;
        while y != l {
            back.push(self.plabel[y as usize]);
            y = self.parent[y as usize];
        }
        back.reverse();
        front.extend(back);
        front
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::tree::LabeledTree;

    #[test]
    fn jumps_match_a_path() {
        let edges: Vec<_> = (0..9).map(|i| (i, i + 1, 'x')).collect();
        let t = LabeledTree::from_edges(10, &edges).unwrap();
        let idx = RootedIndex::new(&t, 0);
        assert_eq!(idx.depth(9), 9);
        assert_eq!(idx.ancestor(9, 9), 0);
        assert_eq!(idx.ancestor(9, 4), 5);
        assert_eq!(idx.lca(3, 7), 3);
        assert_eq!(idx.dist(3, 7), 4);
        assert_eq!(idx.walk(2, 8, 3), 5);
    }

    #[test]
    fn lca_walk_and_words_on_sample() {
        let t = corpus::sample_tree();
        let idx = RootedIndex::new(&t, 5);
        assert_eq!(idx.lca(0, 12), 5);
        assert_eq!(idx.lca(8, 10), 8);
        assert_eq!(idx.dist(1, 10), 6);
        assert_eq!(idx.walk(1, 10, 3), 6);
        assert_eq!(idx.walk(1, 10, 0), 1);
        assert_eq!(idx.walk(1, 10, 6), 10);
        for (a, b) in [(0u32, 12u32), (1, 10), (4, 9), (6, 6)] {
            assert_eq!(idx.path_word(a, b), t.path_value(a, b).symbols);
        }
    }
}
