//! Dense occupancy grids for approximations.

use crate::budget::Budget;
use crate::digits::DigitSet;
use crate::error::{Error, Result};

/// Occupancy of the `N^n x N^n` cells of the n-th approximation.
///
/// Cell `(i, j)` is column `i`, row `j`, with `j` increasing upward.
#[derive(Clone, PartialEq, Eq)]
pub struct CellGrid {
    order: u32,
    level: u32,
    side: u64,
    words_per_row: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for CellGrid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CellGrid(N={}, n={}, {} set)", self.order, self.level, self.count_ones())
    }
}

/// A maximal horizontal run `start..=end` of equal cells in row `row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub row: u64,
    pub start: u64,
    pub end: u64,
}

impl CellGrid {
    pub fn empty(order: u32, level: u32, side: u64) -> Self {
        let words_per_row = side.div_ceil(64) as usize;
        CellGrid { order, level, side, words_per_row, words: vec![0; words_per_row * side as usize] }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn side(&self) -> u64 {
        self.side
    }

    #[inline]
    pub fn get(&self, i: u64, j: u64) -> bool {
        let w = self.words[j as usize * self.words_per_row + (i / 64) as usize];
        w >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: u64, j: u64) {
        self.words[j as usize * self.words_per_row + (i / 64) as usize] |= 1 << (i % 64);
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn cells(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (0..self.side).flat_map(move |j| (0..self.side).filter(move |&i| self.get(i, j)).map(move |i| (i, j)))
    }

    /// Runs of cells equal to `value` in row `j`, left to right.
    pub fn row_runs(&self, j: u64, value: bool, out: &mut Vec<Run>) {
        let row = &self.words[j as usize * self.words_per_row..(j as usize + 1) * self.words_per_row];
        let mut i = 0u64;
        while i < self.side {
            let next = next_with(row, i, value, self.side);
            if next >= self.side {
                break;
            }
            let stop = next_with(row, next, !value, self.side).min(self.side);
            out.push(Run { row: j, start: next, end: stop - 1 });
            i = stop;
        }
    }
}

/// First index `>= from` whose bit equals `value`, or `side` if none.
fn next_with(row: &[u64], from: u64, value: bool, side: u64) -> u64 {
    let mut w = (from / 64) as usize;
    let mut bits = if value { row[w] } else { !row[w] };
    bits &= u64::MAX << (from % 64);
    loop {
        if bits != 0 {
            return (w as u64 * 64 + bits.trailing_zeros() as u64).min(side);
        }
        w += 1;
        if w == row.len() {
            return side;
        }
        bits = if value { row[w] } else { !row[w] };
    }
}

/// The grid of `K^(n)`: cell `d + N c` is set iff `d in D` and `c in D_(n-1)`.
pub fn rasterize(digits: &DigitSet, level: u32, budget: &Budget) -> Result<CellGrid> {
    if level < 1 {
        return Err(Error::LevelTooSmall { min: 1, got: level });
    }
    let side = budget.grid_side(digits.order(), level)?;
    let mut grid = CellGrid::empty(digits.order(), level, side);
    let n = digits.order() as u64;
    let mut stack = vec![(0u32, 0u64, 0u64)];
    while let Some((depth, x, y)) = stack.pop() {
        if depth == level {
            grid.set(x, y);
            continue;
        }
        for &(i, j) in digits.digits() {
            stack.push((depth + 1, x * n + i as u64, y * n + j as u64));
        }
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carpet_counts() {
        let carpet: DigitSet = "111\n101\n111".parse().unwrap();
        let b = Budget::default();
        let g = rasterize(&carpet, 2, &b).unwrap();
        assert_eq!(g.side(), 9);
        assert_eq!(g.count_ones(), 64);
        assert!(!g.get(4, 4));
        assert!(!g.get(1, 1));
        assert!(g.get(3, 1));
        let full = rasterize(&DigitSet::full(3).unwrap(), 3, &b).unwrap();
        assert_eq!(full.count_ones(), 729);
    }

    #[test]
    fn runs_cover_rows() {
        let d: DigitSet = "N=3; D=(0,0),(2,0),(1,1)".parse().unwrap();
        let g = rasterize(&d, 3, &Budget::default()).unwrap();
        for j in 0..g.side() {
            let mut set = Vec::new();
            let mut unset = Vec::new();
            g.row_runs(j, true, &mut set);
            g.row_runs(j, false, &mut unset);
            let covered: u64 = set.iter().chain(&unset).map(|r| r.end - r.start + 1).sum();
            assert_eq!(covered, g.side());
            for r in &set {
                assert!((r.start..=r.end).all(|i| g.get(i, j)));
            }
        }
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let d: DigitSet = "N=5; D=(0,0),(1,1),(2,2),(3,3),(4,4),(4,0)".parse().unwrap();
        let g = rasterize(&d, 3, &Budget::default()).unwrap();
        assert_eq!(g.count_ones(), 216);
        let mut runs = Vec::new();
        for j in 0..g.side() {
            g.row_runs(j, true, &mut runs);
        }
        let total: u64 = runs.iter().map(|r| r.end - r.start + 1).sum();
        assert_eq!(total, 216);
    }
}
