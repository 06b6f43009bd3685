//! Disjoint sets, plain and with integer translation offsets.

use crate::lattice::Lattice2;

/// Union by size with path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        true
    }
}

/// Union-find over nodes placed in copies of a periodic domain.
///
/// Each node carries its period translation relative to its parent, so the
/// set root fixes one lift of the whole class. Closing a cycle with a
/// nonzero net translation records that translation in the root's lattice.
#[derive(Debug, Clone)]
pub struct OffsetUnionFind {
    parent: Vec<u32>,
    offset: Vec<(i64, i64)>,
    lattice: Vec<Lattice2>,
}

impl OffsetUnionFind {
    pub fn new(n: usize) -> Self {
        OffsetUnionFind {
            parent: (0..n as u32).collect(),
            offset: vec![(0, 0); n],
            lattice: vec![Lattice2::default(); n],
        }
    }

    /// Root of `x` and the translation of `x`'s lift relative to the root.
    pub fn find(&mut self, x: u32) -> (u32, (i64, i64)) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur as usize] != cur {
            path.push(cur);
            cur = self.parent[cur as usize];
        }
        let root = cur;
        let mut acc = (0, 0);
        for &node in path.iter().rev() {
            let o = self.offset[node as usize];
            acc = (acc.0 + o.0, acc.1 + o.1);
            self.offset[node as usize] = acc;
            self.parent[node as usize] = root;
        }
        (root, self.offset[x as usize])
    }

    /// Records that the copy of `b` at translation `delta` from `a`'s copy touches `a`.
    pub fn union(&mut self, a: u32, b: u32, delta: (i64, i64)) {
        let (ra, la) = self.find(a);
        let (rb, lb) = self.find(b);
        let gap = (la.0 + delta.0 - lb.0, la.1 + delta.1 - lb.1);
        if ra == rb {
            self.lattice[ra as usize].insert(gap);
            return;
        }
        self.parent[rb as usize] = ra;
        self.offset[rb as usize] = gap;
        let moved = std::mem::take(&mut self.lattice[rb as usize]);
        for g in moved.generators() {
            self.lattice[ra as usize].insert(g);
        }
    }

    pub fn lattice(&mut self, x: u32) -> &Lattice2 {
        let (root, _) = self.find(x);
        &self.lattice[root as usize]
    }
}
