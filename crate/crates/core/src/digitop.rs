//! Rational lines, their orbits under `Z^2` and `x -> Nx`, and the digit operator.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::digits::DigitSet;
use crate::error::{Error, Result};
use crate::lines::Slope;
use crate::scalar::RationalScalar;
use crate::ExactFraction;

/// `x2 = (r/s) x1 + intercept`, or `x1 = intercept` for the vertical slope.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalLine<T> {
    pub slope: Slope,
    pub intercept: T,
}

impl<T: RationalScalar> RationalLine<T> {
    pub fn new(slope: Slope, intercept: T) -> Self {
        RationalLine { slope, intercept }
    }

    /// Intercepts differing by a multiple of this value name translates of one line.
    pub fn period(&self) -> T {
        if self.slope.is_vertical() {
            T::from_int(1)
        } else {
            T::from_fraction(1, self.slope.s)
        }
    }

    /// The same line with its intercept reduced into `[0, period)`.
    pub fn canonical(&self) -> Self {
        RationalLine { slope: self.slope, intercept: self.intercept.rem_period(&self.period()) }
    }

    pub fn to_exact(&self) -> RationalLine<ExactFraction> {
        RationalLine { slope: self.slope, intercept: self.intercept.to_exact() }
    }
}

impl<T: RationalScalar> fmt::Display for RationalLine<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_vertical() {
            write!(f, "v@{}", self.intercept)
        } else {
            write!(f, "{}/{}@{}", self.slope.r, self.slope.s, self.intercept)
        }
    }
}

fn parse_fraction(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::InvalidLine(format!("`{text}` is not a fraction"));
    let (p, q) = match text.trim().split_once('/') {
        Some((p, q)) => (p.trim().parse::<i64>().map_err(|_| bad())?, q.trim().parse::<i64>().map_err(|_| bad())?),
        None => (text.trim().parse::<i64>().map_err(|_| bad())?, 1),
    };
    if q == 0 {
        return Err(bad());
    }
    Ok((p, q))
}

impl FromStr for RationalLine<ExactFraction> {
    type Err = Error;

    /// `r/s@p/q` for `x2 = (r/s) x1 + p/q`, `v@p/q` for `x1 = p/q`.
    fn from_str(text: &str) -> Result<Self> {
        let (head, tail) =
            text.trim().split_once('@').ok_or_else(|| Error::InvalidLine(format!("`{text}` lacks `@`")))?;
        let (p, q) = parse_fraction(tail)?;
        let intercept = BigRational::new(BigInt::from(p), BigInt::from(q));
        let slope = if head.trim().eq_ignore_ascii_case("v") {
            Slope::vertical()
        } else {
            let (r, s) = parse_fraction(head)?;
            Slope::new(r, s)?
        };
        Ok(RationalLine { slope, intercept })
    }
}

/// The finite set of intercept classes reached from a line under `Z^2` and `x -> Nx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClosure<T> {
    pub slope: Slope,
    /// Sorted representatives in `[0, period)`.
    pub classes: Vec<T>,
}

impl<T: RationalScalar> OrbitClosure<T> {
    pub fn to_json(&self) -> Value {
        json!({
            "slope": [self.slope.r, self.slope.s],
            "classes": self.classes.iter().map(|c| c.to_exact().to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Forward orbit of the intercept under `w -> N w` modulo the period, pre-period included.
pub fn intercept_orbit<T: RationalScalar>(line: &RationalLine<T>, order: u32) -> OrbitClosure<T> {
    let period = line.period();
    let factor = T::from_int(order as i64);
    let mut seen = BTreeSet::new();
    let mut w = line.intercept.rem_period(&period);
    while seen.insert(w.clone()) {
        w = (w * factor.clone()).rem_period(&period);
    }
    OrbitClosure { slope: line.slope, classes: seen.into_iter().collect() }
}

/// Whether the line `x2 = tau x1 + c` meets the half-open cell `[i, i+1) x [j, j+1)` scaled by `1/N`.
fn hits_cell<T: RationalScalar>(slope: Slope, c: &T, i: u32, j: u32, order: u32) -> bool {
    let n = order as i64;
    let cell_lo = |k: u32| T::from_fraction(k as i64, n);
    if slope.is_vertical() {
        return cell_lo(i) <= *c && *c < cell_lo(i + 1);
    }
    let (ylo, yhi) = (cell_lo(j), cell_lo(j + 1));
    if slope.r == 0 {
        return ylo <= *c && *c < yhi;
    }
    let tau = slope.tau::<T>();
    let a = tau.clone() * cell_lo(i) + c.clone();
    let b = tau * cell_lo(i + 1) + c.clone();
    if slope.r > 0 {
        // image [a, b)
        a < yhi && ylo < b
    } else {
        // image (b, a]
        b < yhi && ylo <= a
    }
}

/// The cells of `{0..N-1}^2` whose half-open copies meet the orbit of the lines.
pub fn digit_operator<T: RationalScalar>(lines: &[RationalLine<T>], order: u32) -> Result<DigitSet> {
    if lines.is_empty() {
        return Err(Error::InvalidArgument("the digit operator needs at least one line".into()));
    }
    if order < 2 {
        return Err(Error::OrderTooSmall(order));
    }
    let mut cells = BTreeSet::new();
    for line in lines {
        let orbit = intercept_orbit(line, order);
        let reach = line.slope.r.abs() + line.slope.s + 1;
        let step = line.period();
        for w in &orbit.classes {
            for k in -reach..=reach {
                let c = w.clone() + step.clone() * T::from_int(k);
                for i in 0..order {
                    for j in 0..order {
                        if hits_cell(line.slope, &c, i, j, order) {
                            cells.insert((i, j));
                        }
                    }
                }
            }
        }
    }
    DigitSet::new(order, cells)
}

/// A piece of a line inside the unit square, as tracked by [`line_in_h`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Piece<T> {
    /// `y2 = tau y1 + c` crossing the open square.
    Interior(T),
    /// Horizontal: every `x` has `(x, 0)` in `K`.
    Bottom,
    /// Horizontal: every `x` has `(x, 1)` in `K`.
    Top,
    /// Horizontal: every `x` has `(x, 0)` or `(x, 1)` in `K`.
    Both,
}

fn open_range_contains<T: RationalScalar>(tau: &T, c: &T) -> bool {
    let zero = T::from_int(0);
    let one = T::from_int(1);
    if *tau >= zero {
        -tau.clone() < *c && *c < one
    } else {
        zero < *c && *c < one - tau.clone()
    }
}

/// Decides exactly whether the line lies in `H = K + Z^2`.
///
/// The pieces of the line in the open unit squares are tracked through the
/// self-similar subdivision. A piece lies in `K` iff every open subcell it
/// crosses is a digit and every rescaled sub-piece lies in `K`; the set of
/// rescaled pieces is finite, so the search terminates.
pub fn line_in_h<T: RationalScalar>(digits: &DigitSet, line: &RationalLine<T>) -> bool {
    if line.slope.is_vertical() {
        let flipped = RationalLine { slope: Slope::horizontal(), intercept: line.intercept.clone() };
        return line_in_h(&digits.transpose(), &flipped);
    }
    let order = digits.order();
    let n = T::from_int(order as i64);
    let tau = line.slope.tau::<T>();
    let horizontal = line.slope.r == 0;
    let mut start = Vec::new();
    let c0 = line.intercept.rem_period(&line.period());
    if horizontal {
        if c0 == T::from_int(0) {
            start.push(Piece::Both);
        } else {
            start.push(Piece::Interior(c0));
        }
    } else {
        let step = line.period();
        let reach = line.slope.r.abs() + line.slope.s + 1;
        for k in -reach..=reach {
            let c = c0.clone() + step.clone() * T::from_int(k);
            if open_range_contains(&tau, &c) {
                start.push(Piece::Interior(c));
            }
        }
    }
    let mut seen: HashSet<Piece<T>> = start.iter().cloned().collect();
    let mut queue: VecDeque<Piece<T>> = start.into();
    let row_all = |j: u32| (0..order).all(|i| digits.contains(i, j));
    while let Some(piece) = queue.pop_front() {
        let mut children = Vec::new();
        match piece {
            Piece::Interior(c) if !horizontal => {
                let scaled = c * n.clone();
                for i in 0..order {
                    for j in 0..order {
                        let child = scaled.clone() + tau.clone() * T::from_int(i as i64) - T::from_int(j as i64);
                        if open_range_contains(&tau, &child) {
                            if !digits.contains(i, j) {
                                return false;
                            }
                            children.push(Piece::Interior(child));
                        }
                    }
                }
            }
            Piece::Interior(c) => {
                let t = c * n.clone();
                if !t.is_integer() {
                    let row = t.floor();
                    let j = row.to_exact().to_integer().try_into().expect("row index is small");
                    if !row_all(j) {
                        return false;
                    }
                    children.push(Piece::Interior(t - row));
                } else {
                    let k: u32 = t.to_exact().to_integer().try_into().expect("row index is small");
                    let mut mixed = false;
                    for i in 0..order {
                        match (digits.contains(i, k), digits.contains(i, k - 1)) {
                            (true, true) => mixed = true,
                            (true, false) => children.push(Piece::Bottom),
                            (false, true) => children.push(Piece::Top),
                            (false, false) => return false,
                        }
                    }
                    if mixed {
                        children.push(Piece::Both);
                    }
                }
            }
            Piece::Bottom => {
                if !row_all(0) {
                    return false;
                }
                children.push(Piece::Bottom);
            }
            Piece::Top => {
                if !row_all(order - 1) {
                    return false;
                }
                children.push(Piece::Top);
            }
            Piece::Both => {
                for i in 0..order {
                    match (digits.contains(i, 0), digits.contains(i, order - 1)) {
                        (true, true) => children.push(Piece::Both),
                        (true, false) => children.push(Piece::Bottom),
                        (false, true) => children.push(Piece::Top),
                        (false, false) => return false,
                    }
                }
            }
        }
        for child in children {
            if seen.insert(child.clone()) {
                queue.push_back(child);
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineCheck {
    ContainedUpToDepth(u32),
    ExcludedAt(u32),
}

/// Depth-bounded membership of the line's intercept in `Omega_1, ..., Omega_depth`.
pub fn line_in_h_check<T: RationalScalar>(
    digits: &DigitSet,
    line: &RationalLine<T>,
    depth: u32,
    budget: &crate::Budget,
) -> Result<LineCheck> {
    let exact = line.to_exact();
    let slope = exact.slope;
    let scale = if slope.is_vertical() { 1 } else { slope.s };
    let period = exact.period();
    let w = exact.intercept.rem_period(&period);
    for level in 1..=depth {
        let omega = crate::lines::omega_level(digits, slope, level, budget)?;
        let m = omega.resolution() as i64;
        let t = w.clone() * BigRational::from_integer(BigInt::from(m * scale));
        let inside = if t.is_integer() {
            omega.contains_point(i64::try_from(t.to_integer()).expect("grid index") as u64)
        } else {
            omega.contains_cell(i64::try_from(t.floor().to_integer()).expect("grid index") as u64)
        };
        if !inside {
            return Ok(LineCheck::ExcludedAt(level));
        }
    }
    Ok(LineCheck::ContainedUpToDepth(depth))
}
