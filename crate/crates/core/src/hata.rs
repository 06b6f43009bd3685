//! Hata graphs with exact overlap tests.
//!
//! Two translates `K + d` and `K + d'` with `d' - d = (1, 0)` meet along the
//! line between them, so only the right column of `K^(L) + d` and the left
//! column of `K^(L) + d'` matter. Those columns are the one-dimensional
//! expansions of `{j : (N-1, j) in D}` and `{j : (0, j) in D}`. Diagonal
//! neighbours meet only at a corner, which lies in `K` exactly when both
//! corner digits are present.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde_json::{json, Value};

use crate::budget::Budget;
use crate::digits::{Digit, DigitSet};
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// Neighbour offsets `d' - d` tested in the forward direction.
pub const FORWARD_OFFSETS: [(i64, i64); 4] = [(1, 0), (0, 1), (1, 1), (1, -1)];

/// `{ sum_{k<L} N^k t_k : t_k in base }`, sorted.
pub fn expand_1d(base: &[u32], order: u32, level: u32) -> Vec<u64> {
    let mut values = vec![0u64];
    for _ in 0..level {
        let mut next = Vec::with_capacity(values.len() * base.len());
        for &v in &values {
            for &t in base {
                next.push(v * order as u64 + t as u64);
            }
        }
        values = next;
    }
    values.sort_unstable();
    values
}

fn within_one(a: &[u64], b: &[u64]) -> bool {
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        if a[x].abs_diff(b[y]) <= 1 {
            return true;
        }
        if a[x] < b[y] {
            x += 1;
        } else {
            y += 1;
        }
    }
    false
}

/// Whether `K^(L)` and `K^(L) + offset` share a point, for a unit offset.
pub fn overlap_at_basis(digits: &DigitSet, offset: (i64, i64), basis: u32) -> bool {
    let n = digits.order();
    let top = n - 1;
    match offset {
        (0, 0) => true,
        (1, 0) | (-1, 0) => {
            let right: Vec<u32> = (0..n).filter(|&j| digits.contains(top, j)).collect();
            let left: Vec<u32> = (0..n).filter(|&j| digits.contains(0, j)).collect();
            within_one(&expand_1d(&right, n, basis), &expand_1d(&left, n, basis))
        }
        (0, 1) | (0, -1) => overlap_at_basis(&digits.transpose(), (1, 0), basis),
        (1, 1) | (-1, -1) => digits.contains(0, 0) && digits.contains(top, top),
        (1, -1) | (-1, 1) => digits.contains(top, 0) && digits.contains(0, top),
        _ => false,
    }
}

/// Whether `K^(2) + d` and `K^(2) + d'` intersect; this equals `f_d(K) ∩ f_d'(K) ≠ ∅`.
pub fn adjacency_level2(digits: &DigitSet, d: Digit, d2: Digit) -> Result<bool> {
    for x in [d, d2] {
        if !digits.contains(x.0, x.1) {
            return Err(Error::NotADigit(x.0, x.1));
        }
    }
    if d == d2 {
        return Err(Error::InvalidArgument("adjacency needs two distinct digits".into()));
    }
    let offset = (d2.0 as i64 - d.0 as i64, d2.1 as i64 - d.1 as i64);
    Ok(overlap_at_basis(digits, offset, 2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HataGraph {
    pub order: u32,
    pub level: u32,
    pub adjacency_basis: u32,
    /// Cells of `D_n`, sorted.
    pub vertices: Vec<(u64, u64)>,
    /// Index pairs `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl HataGraph {
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertices.len());
        let mut count = self.vertices.len();
        for &(a, b) in &self.edges {
            if uf.union(a as u32, b as u32) {
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn edge_cells(&self) -> Vec<((u64, u64), (u64, u64))> {
        self.edges.iter().map(|&(a, b)| (self.vertices[a], self.vertices[b])).collect()
    }

    /// Graphviz text with vertices named `"i,j"` in sorted order.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph hata_n{} {{", self.level);
        for &(i, j) in &self.vertices {
            let _ = writeln!(out, "  \"{i},{j}\";");
        }
        for &(a, b) in &self.edges {
            let (p, q) = (self.vertices[a], self.vertices[b]);
            let _ = writeln!(out, "  \"{},{}\" -- \"{},{}\";", p.0, p.1, q.0, q.1);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.level,
            "basis": self.adjacency_basis,
            "vertices": self.vertices.iter().map(|v| [v.0, v.1]).collect::<Vec<_>>(),
            "edges": self.edge_cells().iter().map(|(p, q)| [[p.0, p.1], [q.0, q.1]]).collect::<Vec<_>>(),
            "components": self.component_count(),
        })
    }
}

/// The n-th Hata graph, with overlaps decided at basis level `2n`.
pub fn hata_graph(digits: &DigitSet, level: u32, budget: &Budget) -> Result<HataGraph> {
    if level < 1 {
        return Err(Error::LevelTooSmall { min: 1, got: level });
    }
    budget.check_cells(digits.order(), level, 4 * level)?;
    let basis = 2 * level;
    let touching: Vec<((i64, i64), bool)> =
        FORWARD_OFFSETS.iter().map(|&o| (o, overlap_at_basis(digits, o, basis))).collect();
    let vertices = digits.expand(level, budget)?.cells;
    let mut edges = BTreeSet::new();
    for (a, &(x, y)) in vertices.iter().enumerate() {
        for &((dx, dy), touches) in &touching {
            if !touches || (dy < 0 && y == 0) {
                continue;
            }
            let target = ((x as i64 + dx) as u64, (y as i64 + dy) as u64);
            if let Ok(b) = vertices.binary_search(&target) {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    Ok(HataGraph { order: digits.order(), level, adjacency_basis: basis, vertices, edges: edges.into_iter().collect() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Connected,
    Disconnected,
}

/// Decides connectedness of `K` from its first Hata graph.
pub fn connected_certificate(digits: &DigitSet) -> Connectivity {
    let graph = hata_graph(digits, 1, &Budget::new(u64::MAX)).expect("level-one graphs always fit");
    if graph.is_connected() {
        Connectivity::Connected
    } else {
        Connectivity::Disconnected
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(text: &str) -> DigitSet {
        text.parse().unwrap()
    }

    #[test]
    fn pairwise_examples() {
        let d = set("N=3; D=(0,0),(1,1),(2,2)");
        assert!(adjacency_level2(&d, (0, 0), (1, 1)).unwrap());
        let pair = set("N=3; D=(0,0),(2,2)");
        assert!(!adjacency_level2(&pair, (0, 0), (2, 2)).unwrap());
        let carpet = set("111\n101\n111");
        assert!(adjacency_level2(&carpet, (0, 0), (1, 0)).unwrap());
        assert!(adjacency_level2(&carpet, (0, 1), (0, 2)).unwrap());
        assert!(matches!(adjacency_level2(&pair, (0, 0), (1, 1)), Err(Error::NotADigit(1, 1))));
    }

    #[test]
    fn graph_examples() {
        let b = Budget::default();
        let diag = DigitSet::new(5, (0..5).map(|i| (i, i))).unwrap();
        let g = hata_graph(&diag, 1, &b).unwrap();
        assert_eq!(g.edges, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        let pair = hata_graph(&set("N=3; D=(0,0),(2,2)"), 1, &b).unwrap();
        assert!(pair.edges.is_empty());
        let carpet = hata_graph(&set("111\n101\n111"), 1, &b).unwrap();
        assert_eq!(carpet.vertices.len(), 8);
        assert_eq!(carpet.edges.len(), 12);
        assert_eq!(connected_certificate(&set("111\n101\n111")), Connectivity::Connected);
        assert_eq!(connected_certificate(&set("N=3; D=(0,0),(2,2)")), Connectivity::Disconnected);
    }

    #[test]
    fn naive_adjacency_overstates() {
        let ex = set("N=3; D=(1,0),(0,1),(1,1),(2,1),(2,2)");
        let g = hata_graph(&ex, 1, &Budget::default()).unwrap();
        let edges = g.edge_cells();
        assert_eq!(edges, vec![((0, 1), (1, 1)), ((1, 1), (2, 1))]);
        assert_eq!(g.component_count(), 3);
        assert_eq!(connected_certificate(&ex), Connectivity::Disconnected);
    }

    #[test]
    fn dot_is_sorted() {
        let diag = DigitSet::new(5, (0..5).map(|i| (i, i))).unwrap();
        let dot = hata_graph(&diag, 1, &Budget::default()).unwrap().to_dot();
        assert!(dot.starts_with("graph hata_n1 {\n  \"0,0\";"));
        assert!(dot.contains("\"3,3\" -- \"4,4\";"));
        assert_eq!(dot.matches("--").count(), 4);
    }

    #[test]
    fn one_dimensional_expansion() {
        assert_eq!(expand_1d(&[0, 2], 3, 2), vec![0, 2, 6, 8]);
        assert_eq!(expand_1d(&[1], 3, 0), vec![0]);
    }
}
