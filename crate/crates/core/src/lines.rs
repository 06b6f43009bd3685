//! Slopes, intercept sets of lines in `H_n`, and the `(m, q)` invariants.
//!
//! For a slope `tau = r/s` the projection `x -> x2 - tau x1` sends the corners
//! of the level-n grid to integers over `N^n s`. Intercepts are therefore
//! tracked on the grid `{0, ..., M}` with `M = N^n`, each unit standing for
//! `1/(M s)`, and the projection is periodic with period `M`.

use std::fmt;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::digitop::{line_in_h, RationalLine};
use crate::digits::DigitSet;
use crate::error::{Error, Result};
use crate::grid::{rasterize, CellGrid};
use crate::scalar::{LogRatio, RationalScalar};
use crate::Fraction64;

/// A reduced direction `(r, s)`: `tau = r/s` with `s > 0`, or `(1, 0)` for vertical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    pub r: i64,
    pub s: i64,
}

impl Slope {
    pub fn new(r: i64, s: i64) -> Result<Self> {
        if r == 0 && s == 0 {
            return Err(Error::InvalidSlope("(0, 0) is not a direction".into()));
        }
        if s == 0 {
            return Ok(Slope::vertical());
        }
        let g = r.gcd(&s);
        let sign = s.signum();
        Ok(Slope { r: sign * r / g, s: sign * s / g })
    }

    pub fn vertical() -> Self {
        Slope { r: 1, s: 0 }
    }

    pub fn horizontal() -> Self {
        Slope { r: 0, s: 1 }
    }

    pub fn is_vertical(&self) -> bool {
        self.s == 0
    }

    pub fn is_horizontal(&self) -> bool {
        self.r == 0
    }

    pub fn tau<T: RationalScalar>(&self) -> T {
        T::from_fraction(self.r, self.s)
    }

    /// The slope of the mirror image under `(x1, x2) -> (x2, x1)`.
    pub fn transposed(&self) -> Slope {
        if self.is_vertical() {
            Slope::horizontal()
        } else if self.is_horizontal() {
            Slope::vertical()
        } else {
            Slope::new(self.s, self.r).expect("nonzero")
        }
    }

    fn sort_key(&self) -> (u8, i64, i64, bool) {
        match (self.r, self.s) {
            (1, 0) => (0, 0, 0, false),
            (0, 1) => (1, 0, 0, false),
            (r, s) => (2, r.abs() + s, r.abs(), r < 0),
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.s)
    }
}

/// Vertical, horizontal, then every reduced `(r, s)` with `r != 0`, `s >= 1`, `|r| + s <= N`.
pub fn admissible_slopes(order: u32) -> Vec<Slope> {
    let n = order as i64;
    let mut slopes = vec![Slope::vertical(), Slope::horizontal()];
    for s in 1..n {
        for a in 1..=n - s {
            if a.gcd(&s) == 1 {
                slopes.push(Slope { r: a, s });
                slopes.push(Slope { r: -a, s });
            }
        }
    }
    slopes.sort_by_key(Slope::sort_key);
    slopes
}

/// Intercepts of lines of one slope lying in `H_n`, on the grid of step `1/(N^n s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaLevelSet {
    pub slope: Slope,
    pub order: u32,
    pub level: u32,
    /// `cells[k]`: the closed cell `[k, k+1]` lies in the set, `0 <= k < M`.
    cells: Vec<bool>,
    /// `points[v]`: the grid point `v` lies in the set, `0 <= v <= M`.
    points: Vec<bool>,
}

impl OmegaLevelSet {
    /// The whole period `[0, 1/s]` at level 0.
    pub fn full(slope: Slope, order: u32) -> Self {
        OmegaLevelSet { slope, order, level: 0, cells: vec![true], points: vec![true, true] }
    }

    pub fn resolution(&self) -> u64 {
        self.cells.len() as u64
    }

    pub fn contains_cell(&self, k: u64) -> bool {
        self.cells[k as usize]
    }

    pub fn contains_point(&self, v: u64) -> bool {
        self.points[v as usize]
    }

    pub fn cell_indices(&self) -> Vec<u64> {
        (0..self.cells.len() as u64).filter(|&k| self.cells[k as usize]).collect()
    }

    pub fn point_indices(&self) -> Vec<u64> {
        (0..self.points.len() as u64).filter(|&v| self.points[v as usize]).collect()
    }

    pub fn is_empty(&self) -> bool {
        !self.points.iter().any(|&p| p)
    }

    /// Points of the set not on the boundary of any cell of the set.
    pub fn isolated_points(&self) -> Vec<u64> {
        let m = self.cells.len();
        (0..=m)
            .filter(|&v| self.points[v] && (v == 0 || !self.cells[v - 1]) && (v == m || !self.cells[v]))
            .map(|v| v as u64)
            .collect()
    }

    /// The same set on a grid `N` times finer.
    pub fn refine(&self) -> OmegaLevelSet {
        let n = self.order as usize;
        let m = self.cells.len();
        let mut cells = vec![false; m * n];
        let mut points = vec![false; m * n + 1];
        for k in 0..m {
            if self.cells[k] {
                cells[k * n..(k + 1) * n].iter_mut().for_each(|c| *c = true);
                points[k * n..=(k + 1) * n].iter_mut().for_each(|p| *p = true);
            }
        }
        for v in 0..=m {
            if self.points[v] {
                points[v * n] = true;
            }
        }
        OmegaLevelSet { slope: self.slope, order: self.order, level: self.level + 1, cells, points }
    }

    /// Refines to the given level.
    pub fn refine_to(&self, level: u32) -> OmegaLevelSet {
        let mut out = self.clone();
        while out.level < level {
            out = out.refine();
        }
        out
    }

    /// Set inclusion; both sets must share slope and resolution.
    pub fn is_subset(&self, other: &OmegaLevelSet) -> bool {
        assert_eq!(self.cells.len(), other.cells.len(), "resolutions differ");
        self.cells.iter().zip(&other.cells).all(|(&a, &b)| !a || b)
            && self.points.iter().zip(&other.points).all(|(&a, &b)| !a || b)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "slope": [self.slope.r, self.slope.s],
            "level": self.level,
            "resolution": self.resolution(),
            "cells": self.cell_indices(),
            "points": self.point_indices(),
        })
    }
}

/// Marks the open interval `(lo, hi)` as removed, modulo `m`.
fn remove_open(lo: i64, hi: i64, m: i64, cells: &mut [bool], points: &mut [bool]) {
    for k in lo..hi {
        cells[k.rem_euclid(m) as usize] = true;
    }
    for v in lo + 1..hi {
        points[v.rem_euclid(m) as usize] = true;
    }
}

fn remove_segment(a: i64, b: i64, m: i64, cells: &mut [bool], points: &mut [bool]) {
    if a == b {
        points[a.rem_euclid(m) as usize] = true;
    } else {
        remove_open(a.min(b), a.max(b), m, cells, points);
    }
}

/// Projects the open cells, open edges and vertices of the complement of one period.
fn omega_from_grid(grid: &CellGrid, slope: Slope) -> OmegaLevelSet {
    debug_assert!(!slope.is_vertical());
    let m = grid.side() as i64;
    let (r, s) = (slope.r, slope.s);
    let value = |a: i64, b: i64| b * s - a * r;
    let empty = |a: i64, b: i64| !grid.get(a.rem_euclid(m) as u64, b.rem_euclid(m) as u64);
    let mut removed_cells = vec![false; m as usize];
    let mut removed_points = vec![false; m as usize];
    for b in 0..m {
        for a in 0..m {
            if !empty(a, b) {
                continue;
            }
            let corners = [value(a, b), value(a + 1, b), value(a, b + 1), value(a + 1, b + 1)];
            let lo = *corners.iter().min().unwrap();
            let hi = *corners.iter().max().unwrap();
            remove_open(lo, hi, m, &mut removed_cells, &mut removed_points);
            if empty(a + 1, b) {
                remove_segment(value(a + 1, b), value(a + 1, b + 1), m, &mut removed_cells, &mut removed_points);
            }
            if empty(a, b + 1) {
                remove_segment(value(a, b + 1), value(a + 1, b + 1), m, &mut removed_cells, &mut removed_points);
                if empty(a + 1, b) && empty(a + 1, b + 1) {
                    removed_points[value(a + 1, b + 1).rem_euclid(m) as usize] = true;
                }
            }
        }
    }
    let cells = removed_cells.iter().map(|&x| !x).collect();
    let points = (0..=m as usize).map(|v| !removed_points[v % m as usize]).collect();
    OmegaLevelSet { slope, order: grid.order(), level: grid.level(), cells, points }
}

/// `Omega_n` for one slope: intercepts in `[0, 1/s]` of lines contained in `H_n`.
pub fn omega_level(digits: &DigitSet, slope: Slope, level: u32, budget: &Budget) -> Result<OmegaLevelSet> {
    if slope.is_vertical() {
        let mut set = omega_level(&digits.transpose(), Slope::horizontal(), level, budget)?;
        set.slope = slope;
        return Ok(set);
    }
    let grid = rasterize(digits, level, budget)?;
    Ok(omega_from_grid(&grid, slope))
}

/// The level-one intercept set with its counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaProfile {
    pub slope: Slope,
    pub order: u32,
    /// Grid cells `u` with `[u, u+1] / (N s)` inside `Omega_1`.
    pub cells: Vec<u32>,
    /// Isolated grid points `v` of `Omega_1`, in `0..=N`.
    pub isolated: Vec<u32>,
    /// Isolated points whose lines are proven to lie in `H`.
    pub certified_isolated: Vec<u32>,
    pub m: u32,
    pub q: u32,
    pub q_certified: u32,
    pub line_bearing: bool,
}

fn identified_count(points: &[u32], order: u32) -> u32 {
    let both_ends = points.contains(&0) && points.contains(&order);
    points.len() as u32 - both_ends as u32
}

impl OmegaProfile {
    pub fn level_set(&self) -> OmegaLevelSet {
        let n = self.order as usize;
        let mut cells = vec![false; n];
        let mut points = vec![false; n + 1];
        for &u in &self.cells {
            cells[u as usize] = true;
            points[u as usize] = true;
            points[u as usize + 1] = true;
        }
        for &v in &self.isolated {
            points[v as usize] = true;
        }
        OmegaLevelSet { slope: self.slope, order: self.order, level: 1, cells, points }
    }

    /// The intercept of the line named by grid point `v`.
    pub fn line_at(&self, v: u32) -> RationalLine<Fraction64> {
        let scale = if self.slope.is_vertical() { 1 } else { self.slope.s };
        RationalLine::new(self.slope, Fraction64::new(v as i64, self.order as i64 * scale))
    }

    /// Fixed point `u / (s (N - 1))` of the cell map of cell `u`.
    pub fn fixed_point_line(&self, u: u32) -> RationalLine<Fraction64> {
        let scale = if self.slope.is_vertical() { 1 } else { self.slope.s };
        RationalLine::new(self.slope, Fraction64::new(u as i64, scale * (self.order as i64 - 1)))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "slope": [self.slope.r, self.slope.s],
            "m": self.m,
            "q": self.q,
            "cells": self.cells,
            "isolated": self.isolated,
            "certified_isolated": self.certified_isolated,
            "line_bearing": self.line_bearing,
        })
    }
}

/// `Omega_1` for one slope, with `m`, `q` and certified line bearing.
pub fn omega1(digits: &DigitSet, slope: Slope) -> OmegaProfile {
    let budget = Budget::new(u64::MAX);
    let set = omega_level(digits, slope, 1, &budget).expect("level one always fits");
    profile_from_level_set(digits, &set)
}

fn profile_from_level_set(digits: &DigitSet, set: &OmegaLevelSet) -> OmegaProfile {
    let order = digits.order();
    let cells: Vec<u32> = set.cell_indices().into_iter().map(|k| k as u32).collect();
    let isolated: Vec<u32> = set.isolated_points().into_iter().map(|v| v as u32).collect();
    let mut profile = OmegaProfile {
        slope: set.slope,
        order,
        m: cells.len() as u32,
        q: identified_count(&isolated, order),
        cells,
        isolated,
        certified_isolated: Vec::new(),
        q_certified: 0,
        line_bearing: false,
    };
    profile.certified_isolated =
        profile.isolated.iter().copied().filter(|&v| line_in_h(digits, &profile.line_at(v))).collect();
    profile.q_certified = identified_count(&profile.certified_isolated, order);
    profile.line_bearing = profile.m >= 1 || profile.q_certified >= 1;
    profile
}

/// All admissible slopes carrying a certified line of `H`, in slope order.
pub fn line_bearing_slopes(digits: &DigitSet) -> Vec<OmegaProfile> {
    admissible_slopes(digits.order())
        .into_iter()
        .map(|slope| omega1(digits, slope))
        .filter(|p| p.line_bearing)
        .collect()
}

/// Profiles of every admissible slope.
pub fn all_profiles(digits: &DigitSet) -> Vec<OmegaProfile> {
    admissible_slopes(digits.order()).into_iter().map(|slope| omega1(digits, slope)).collect()
}

/// Applies `Phi = h_(u_1) ∪ ... ∪ h_(u_m)` with `h_u(t) = (t + u/s) / N`.
///
/// On grids this sends index `k` at resolution `M` to `k + u M` at resolution `M N`.
pub fn omega_recursion_step(profile: &OmegaProfile, x: &OmegaLevelSet) -> Result<OmegaLevelSet> {
    if profile.m == 0 {
        return Err(Error::NoContractionMaps);
    }
    let n = profile.order as usize;
    let m = x.cells.len();
    let mut cells = vec![false; m * n];
    let mut points = vec![false; m * n + 1];
    for &u in &profile.cells {
        let shift = u as usize * m;
        for k in 0..m {
            cells[k + shift] |= x.cells[k];
        }
        for v in 0..=m {
            points[v + shift] |= x.points[v];
        }
    }
    Ok(OmegaLevelSet { slope: x.slope, order: x.order, level: x.level + 1, cells, points })
}

/// `Phi^n([0, 1/s])`.
pub fn phi_iterate(profile: &OmegaProfile, n: u32) -> Result<OmegaLevelSet> {
    let mut x = OmegaLevelSet::full(profile.slope, profile.order);
    for _ in 0..n {
        x = omega_recursion_step(profile, &x)?;
    }
    Ok(x)
}

/// `1 + log m / log N`.
pub fn dim_lambda1(m: u64, order: u32) -> Result<LogRatio> {
    if m < 2 {
        return Err(Error::DimensionPrecondition { m, min: 2 });
    }
    Ok(LogRatio::new(1, m, order as u64))
}

/// `log m / log N`.
pub fn dim_omega(m: u64, order: u32) -> Result<LogRatio> {
    if m < 1 {
        return Err(Error::DimensionPrecondition { m, min: 1 });
    }
    Ok(LogRatio::new(0, m, order as u64))
}
