//! Components, holes and the periodic complement of approximations.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::digits::DigitSet;
use crate::error::{Error, Result};
use crate::grid::{rasterize, CellGrid, Run};
use crate::hull::{diameter_sq, Point};
use crate::lattice::Lattice2;
use crate::unionfind::{OffsetUnionFind, UnionFind};
use crate::ExactFraction;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Adjacency {
    Eight,
    Four,
}

/// Runs of one cell value grouped into components.
struct RunLabels {
    runs: Vec<Run>,
    component: Vec<u32>,
    count: u32,
}

/// Row-wise start indices into `runs`.
fn collect_runs(grid: &CellGrid, value: bool) -> (Vec<Run>, Vec<usize>) {
    let mut runs = Vec::new();
    let mut starts = Vec::with_capacity(grid.side() as usize + 1);
    for j in 0..grid.side() {
        starts.push(runs.len());
        grid.row_runs(j, value, &mut runs);
    }
    starts.push(runs.len());
    (runs, starts)
}

/// Calls `link` for every pair of runs in consecutive rows that touch.
fn for_each_touching(lower: &[Run], upper: &[Run], adjacency: Adjacency, mut link: impl FnMut(usize, usize)) {
    let slack = if adjacency == Adjacency::Eight { 1 } else { 0 };
    let (mut a, mut b) = (0, 0);
    while a < lower.len() && b < upper.len() {
        let (x, y) = (lower[a], upper[b]);
        if y.start <= x.end + slack && x.start <= y.end + slack {
            link(a, b);
        }
        if x.end < y.end {
            a += 1;
        } else {
            b += 1;
        }
    }
}

fn label_runs(grid: &CellGrid, value: bool, adjacency: Adjacency) -> RunLabels {
    let (runs, starts) = collect_runs(grid, value);
    let mut uf = UnionFind::new(runs.len());
    for j in 1..grid.side() as usize {
        let (lo, mid, hi) = (starts[j - 1], starts[j], starts[j + 1]);
        for_each_touching(&runs[lo..mid], &runs[mid..hi], adjacency, |a, b| {
            uf.union((lo + a) as u32, (mid + b) as u32);
        });
    }
    let mut index = vec![u32::MAX; runs.len()];
    let mut component = Vec::with_capacity(runs.len());
    let mut count = 0;
    for r in 0..runs.len() as u32 {
        let root = uf.find(r) as usize;
        if index[root] == u32::MAX {
            index[root] = count;
            count += 1;
        }
        component.push(index[root]);
    }
    RunLabels { runs, component, count }
}

fn run_corners(run: &Run, shift: (i64, i64), out: &mut Vec<Point>) {
    let (x0, x1) = (run.start as i64 + shift.0, run.end as i64 + 1 + shift.0);
    let (y0, y1) = (run.row as i64 + shift.1, run.row as i64 + 1 + shift.1);
    out.extend_from_slice(&[(x0, y0), (x1, y0), (x0, y1), (x1, y1)]);
}

fn fraction_over(numer: u128, side: u64) -> ExactFraction {
    BigRational::new(BigInt::from(numer), BigInt::from(side as u128 * side as u128))
}

/// Renders an exact fraction as `p/q`, or `p` when integral.
pub fn fraction_text(x: &ExactFraction) -> String {
    x.to_string()
}

/// β₀ of a grid together with per-cell labels and exact component diameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    pub level: u32,
    pub count: u64,
    /// Component id per cell, indexed `j * side + i`; `u32::MAX` marks empty cells.
    pub labels: Vec<u32>,
    /// Squared diameters in units of the unit square.
    pub diameters_sq: Vec<ExactFraction>,
}

impl ComponentSummary {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.level,
            "beta0": self.count,
            "diameters": self.diameters_sq.iter().map(fraction_text).collect::<Vec<_>>(),
        })
    }
}

/// 8-connected components of the occupied cells.
pub fn components(grid: &CellGrid) -> ComponentSummary {
    let labels_by_run = label_runs(grid, true, Adjacency::Eight);
    let side = grid.side();
    let mut labels = vec![u32::MAX; (side * side) as usize];
    let mut corners: Vec<Vec<Point>> = vec![Vec::new(); labels_by_run.count as usize];
    for (run, &c) in labels_by_run.runs.iter().zip(&labels_by_run.component) {
        for i in run.start..=run.end {
            labels[(run.row * side + i) as usize] = c;
        }
        run_corners(run, (0, 0), &mut corners[c as usize]);
    }
    let diameters_sq = corners.iter().map(|pts| fraction_over(diameter_sq(pts), side)).collect();
    ComponentSummary { level: grid.level(), count: labels_by_run.count as u64, labels, diameters_sq }
}

/// β₀ of a grid, without labels.
pub fn count_components(grid: &CellGrid) -> u64 {
    label_runs(grid, true, Adjacency::Eight).count as u64
}

/// `[β₀(K^(1)), ..., β₀(K^(n_max))]`.
pub fn beta0_sequence(digits: &DigitSet, n_max: u32, budget: &Budget) -> Result<Vec<u64>> {
    if n_max < 1 {
        return Err(Error::LevelTooSmall { min: 1, got: n_max });
    }
    (1..=n_max).map(|n| Ok(count_components(&rasterize(digits, n, budget)?))).collect()
}

/// A certified stabilization `β₀(K^(n0)) = β₀(K^(n0+1))` with `n0 >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub n0: u32,
    pub beta0: u64,
    /// β₀ for levels `1..=n0+1`.
    pub sequence: Vec<u64>,
}

/// Outcome of a stabilization search, keeping the sequence either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationSearch {
    pub found: Option<Stabilization>,
    pub sequence: Vec<u64>,
    /// Set when the search stopped early on the budget.
    pub budget_error: Option<Error>,
}

/// Least `n0` with `2 <= n0 < n_max` and `β₀(K^(n0)) = β₀(K^(n0+1))`.
pub fn beta0_stabilize(digits: &DigitSet, n_max: u32, budget: &Budget) -> Result<Option<Stabilization>> {
    let search = beta0_search(digits, n_max, budget)?;
    match search.budget_error {
        Some(e) => Err(e),
        None => Ok(search.found),
    }
}

/// Like [`beta0_stabilize`], but returns the partial sequence when the budget runs out.
pub fn beta0_search(digits: &DigitSet, n_max: u32, budget: &Budget) -> Result<StabilizationSearch> {
    if n_max < 3 {
        return Err(Error::LevelTooSmall { min: 3, got: n_max });
    }
    let mut sequence = Vec::new();
    for n in 1..=n_max {
        let grid = match rasterize(digits, n, budget) {
            Ok(g) => g,
            Err(e @ Error::BudgetExceeded { .. }) => {
                return Ok(StabilizationSearch { found: None, sequence, budget_error: Some(e) });
            }
            Err(e) => return Err(e),
        };
        sequence.push(count_components(&grid));
        if n >= 3 && sequence[n as usize - 1] == sequence[n as usize - 2] {
            let found = Stabilization { n0: n - 1, beta0: sequence[n as usize - 1], sequence: sequence.clone() };
            return Ok(StabilizationSearch { found: Some(found), sequence, budget_error: None });
        }
    }
    Ok(StabilizationSearch { found: None, sequence, budget_error: None })
}

/// Number of bounded components of the plane minus the grid's occupied cells.
pub fn holes(grid: &CellGrid) -> u64 {
    let labels = label_runs(grid, false, Adjacency::Four);
    let last = grid.side() - 1;
    let mut touches = vec![false; labels.count as usize];
    for (run, &c) in labels.runs.iter().zip(&labels.component) {
        if run.row == 0 || run.row == last || run.start == 0 || run.end == last {
            touches[c as usize] = true;
        }
    }
    touches.iter().filter(|&&t| !t).count() as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pi1Certificate {
    TrivialCertified,
    NoCertificate,
}

/// Trivial fundamental group is certified when `K^(3)` has no holes.
pub fn pi1_certificate(digits: &DigitSet, budget: &Budget) -> Result<Pi1Certificate> {
    let grid = rasterize(digits, 3, budget)?;
    Ok(if holes(&grid) == 0 { Pi1Certificate::TrivialCertified } else { Pi1Certificate::NoCertificate })
}

/// One component of the complement of `H_n = K^(n) + Z^2`, seen on one period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementComponent {
    pub cells: u64,
    /// Lowest-row, leftmost cell of the component in the period.
    pub representative: (u64, u64),
    /// Period translations under which the lifted component is invariant.
    pub holonomy: Lattice2,
    /// Squared diameter of one lift, or `None` for unbounded components.
    pub diameter_sq: Option<ExactFraction>,
}

impl ComplementComponent {
    pub fn is_bounded(&self) -> bool {
        self.diameter_sq.is_some()
    }

    /// The first holonomy generator, or `(0, 0)`.
    pub fn holonomy_vector(&self) -> (i64, i64) {
        self.holonomy.generators().first().copied().unwrap_or((0, 0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicComplementReport {
    pub level: u32,
    pub components: Vec<ComplementComponent>,
}

impl PeriodicComplementReport {
    pub fn max_bounded_diameter_sq(&self) -> Option<ExactFraction> {
        self.components.iter().filter_map(|c| c.diameter_sq.clone()).max()
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .components
            .iter()
            .map(|c| {
                json!({
                    "cells": c.cells,
                    "representative": [c.representative.0, c.representative.1],
                    "holonomy": c.holonomy.generators().iter().map(|g| [g.0, g.1]).collect::<Vec<_>>(),
                    "diameter_sq": c.diameter_sq.as_ref().map(fraction_text),
                })
            })
            .collect();
        json!({ "n": self.level, "components": comps })
    }
}

/// Complement components of the periodic set `H_n`, found on the torus.
pub fn complement_components_periodic(
    digits: &DigitSet,
    level: u32,
    budget: &Budget,
) -> Result<PeriodicComplementReport> {
    let grid = rasterize(digits, level, budget)?;
    Ok(periodic_complement(&grid))
}

pub fn periodic_complement(grid: &CellGrid) -> PeriodicComplementReport {
    let side = grid.side();
    let (runs, starts) = collect_runs(grid, false);
    let mut uf = OffsetUnionFind::new(runs.len());
    let rows = side as usize;
    for j in 0..rows {
        let (lo, hi) = (starts[j], starts[j + 1]);
        if hi > lo && runs[lo].start == 0 && runs[hi - 1].end == side - 1 {
            uf.union((hi - 1) as u32, lo as u32, (1, 0));
        }
        let (below, delta) = if j == 0 { (rows - 1, (0, 1)) } else { (j - 1, (0, 0)) };
        let (blo, bhi) = (starts[below], starts[below + 1]);
        for_each_touching(&runs[blo..bhi], &runs[lo..hi], Adjacency::Four, |a, b| {
            uf.union((blo + a) as u32, (lo + b) as u32, delta);
        });
    }
    let mut index = vec![usize::MAX; runs.len()];
    let mut components: Vec<ComplementComponent> = Vec::new();
    let mut corners: Vec<Vec<Point>> = Vec::new();
    for (r, run) in runs.iter().enumerate() {
        let (root, lift) = uf.find(r as u32);
        if index[root as usize] == usize::MAX {
            index[root as usize] = components.len();
            components.push(ComplementComponent {
                cells: 0,
                representative: (run.start, run.row),
                holonomy: uf.lattice(root).clone(),
                diameter_sq: None,
            });
            corners.push(Vec::new());
        }
        let k = index[root as usize];
        components[k].cells += run.end - run.start + 1;
        if components[k].holonomy.is_trivial() {
            let shift = (lift.0 * side as i64, lift.1 * side as i64);
            run_corners(run, shift, &mut corners[k]);
        }
    }
    for (comp, pts) in components.iter_mut().zip(&corners) {
        if comp.holonomy.is_trivial() {
            comp.diameter_sq = Some(fraction_over(diameter_sq(pts), side));
        }
    }
    PeriodicComplementReport { level: grid.level(), components }
}

/// `B^2 = 2 (N^2 + 1)^4 / N^2`.
pub fn dichotomy_bound_sq(order: u32) -> ExactFraction {
    let n = BigInt::from(order);
    let base = &n * &n + 1u32;
    BigRational::new(BigInt::from(2) * base.pow(4), &n * &n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DichotomyOutcome {
    Case1,
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Holonomy,
    DiameterExceedsBound,
}

/// Per-level summary gathered while probing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeLevel {
    pub level: u32,
    pub components: usize,
    pub max_bounded_diameter_sq: Option<ExactFraction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DichotomyWitness {
    pub outcome: DichotomyOutcome,
    /// Witness level for a positive outcome, otherwise the deepest level scanned.
    pub level: u32,
    pub kind: Option<WitnessKind>,
    /// The witnessing component, when there is one.
    pub component: Option<ComplementComponent>,
    pub bound_sq: ExactFraction,
    pub scanned: Vec<ProbeLevel>,
    /// Set when the scan stopped early on the budget.
    pub budget_error: Option<Error>,
}

impl DichotomyWitness {
    pub fn to_json(&self) -> Value {
        json!({
            "outcome": match self.outcome {
                DichotomyOutcome::Case1 => "case1",
                DichotomyOutcome::Undetermined => "undetermined",
            },
            "level": self.level,
            "kind": self.kind.map(|k| match k {
                WitnessKind::Holonomy => "holonomy",
                WitnessKind::DiameterExceedsBound => "diameter-exceeds-bound",
            }),
            "holonomy": self.component.as_ref().map(|c| {
                let v = c.holonomy_vector();
                [v.0, v.1]
            }),
            "bound_sq": fraction_text(&self.bound_sq),
        })
    }
}

/// Scans `H_1, ..., H_(n_max)` for a complement component that is unbounded or
/// longer than the bound of the bounded alternative.
pub fn dichotomy_probe(digits: &DigitSet, n_max: u32, budget: &Budget) -> Result<DichotomyWitness> {
    if n_max < 1 {
        return Err(Error::LevelTooSmall { min: 1, got: n_max });
    }
    let bound_sq = dichotomy_bound_sq(digits.order());
    let mut scanned = Vec::new();
    for n in 1..=n_max {
        let report = match complement_components_periodic(digits, n, budget) {
            Ok(r) => r,
            Err(e @ Error::BudgetExceeded { .. }) => {
                return Ok(DichotomyWitness {
                    outcome: DichotomyOutcome::Undetermined,
                    level: n - 1,
                    kind: None,
                    component: None,
                    bound_sq,
                    scanned,
                    budget_error: Some(e),
                });
            }
            Err(e) => return Err(e),
        };
        scanned.push(ProbeLevel {
            level: n,
            components: report.components.len(),
            max_bounded_diameter_sq: report.max_bounded_diameter_sq(),
        });
        let witness =
            report.components.iter().find(|c| !c.is_bounded()).map(|c| (WitnessKind::Holonomy, c)).or_else(|| {
                report
                    .components
                    .iter()
                    .find(|c| c.diameter_sq.as_ref().is_some_and(|d| *d > bound_sq))
                    .map(|c| (WitnessKind::DiameterExceedsBound, c))
            });
        if let Some((kind, comp)) = witness {
            return Ok(DichotomyWitness {
                outcome: DichotomyOutcome::Case1,
                level: n,
                kind: Some(kind),
                component: Some(comp.clone()),
                bound_sq,
                scanned,
                budget_error: None,
            });
        }
    }
    Ok(DichotomyWitness {
        outcome: DichotomyOutcome::Undetermined,
        level: n_max,
        kind: None,
        component: None,
        bound_sq,
        scanned,
        budget_error: None,
    })
}
