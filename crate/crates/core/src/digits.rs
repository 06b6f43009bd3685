//! Digit sets, their expansions and symmetries.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::scalar::LogRatio;

/// A digit `(i, j)` with `0 <= i, j < N`.
pub type Digit = (u32, u32);

/// The order `N` and digit set `D` of a fractal square `K(N, D)`.
///
/// Digits are kept sorted lexicographically and unique.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DigitSetRepr", into = "DigitSetRepr")]
pub struct DigitSet {
    order: u32,
    digits: Vec<Digit>,
    occupied: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct DigitSetRepr {
    n: u32,
    digits: Vec<[i64; 2]>,
}

impl TryFrom<DigitSetRepr> for DigitSet {
    type Error = Error;

    fn try_from(repr: DigitSetRepr) -> Result<Self> {
        DigitSet::from_signed(repr.n, repr.digits.iter().map(|d| (d[0], d[1])))
    }
}

impl From<DigitSet> for DigitSetRepr {
    fn from(set: DigitSet) -> Self {
        DigitSetRepr { n: set.order, digits: set.digits.iter().map(|&(i, j)| [i as i64, j as i64]).collect() }
    }
}

impl DigitSet {
    pub fn new(order: u32, digits: impl IntoIterator<Item = Digit>) -> Result<Self> {
        Self::from_signed(order, digits.into_iter().map(|(i, j)| (i as i64, j as i64)))
    }

    fn from_signed(order: u32, digits: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        if order < 2 {
            return Err(Error::OrderTooSmall(order));
        }
        let n = order as i64;
        let mut occupied = vec![false; (order * order) as usize];
        let mut list = Vec::new();
        for (i, j) in digits {
            if !(0..n).contains(&i) || !(0..n).contains(&j) {
                return Err(Error::DigitOutOfRange { i, j, max: order - 1 });
            }
            let slot = (i * n + j) as usize;
            if occupied[slot] {
                return Err(Error::DuplicateDigit(i as u32, j as u32));
            }
            occupied[slot] = true;
            list.push((i as u32, j as u32));
        }
        if list.len() < 2 {
            return Err(Error::TooFewDigits(list.len()));
        }
        list.sort_unstable();
        Ok(DigitSet { order, digits: list, occupied })
    }

    /// The full grid `{0..N-1}^2`.
    pub fn full(order: u32) -> Result<Self> {
        Self::new(order, (0..order).flat_map(|i| (0..order).map(move |j| (i, j))))
    }

    /// Builds the digit set whose bit `i * N + j` is set in `mask`.
    pub fn from_mask(order: u32, mask: u128) -> Result<Self> {
        Self::new(
            order,
            (0..order).flat_map(|i| (0..order).map(move |j| (i, j))).filter(|&(i, j)| mask >> (i * order + j) & 1 == 1),
        )
    }

    pub fn mask(&self) -> u128 {
        self.digits.iter().fold(0u128, |m, &(i, j)| m | 1u128 << (i * self.order + j))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        i < self.order && j < self.order && self.occupied[(i * self.order + j) as usize]
    }

    pub fn is_full(&self) -> bool {
        self.digits.len() == (self.order * self.order) as usize
    }

    /// `(i, j) -> (j, i)`.
    pub fn transpose(&self) -> DigitSet {
        self.map(|(i, j)| (j, i))
    }

    /// `(i, j) -> (N - 1 - i, j)`.
    pub fn reflect_horizontal(&self) -> DigitSet {
        let top = self.order - 1;
        self.map(|(i, j)| (top - i, j))
    }

    fn map(&self, f: impl Fn(Digit) -> Digit) -> DigitSet {
        DigitSet::new(self.order, self.digits.iter().map(|&d| f(d))).expect("bijection of a valid set")
    }

    /// Digits `{ sum_{i<n} N^i d_i }` of the n-th approximation.
    pub fn expand(&self, level: u32, budget: &Budget) -> Result<ExpandedDigits> {
        if level < 1 {
            return Err(Error::LevelTooSmall { min: 1, got: level });
        }
        budget.grid_side(self.order, level)?;
        let n = self.order as u64;
        let mut cells: Vec<(u64, u64)> = self.digits.iter().map(|&(i, j)| (i as u64, j as u64)).collect();
        for _ in 1..level {
            let mut next = Vec::with_capacity(cells.len() * self.digits.len());
            for &(a, b) in &cells {
                for &(i, j) in &self.digits {
                    next.push((i as u64 + n * a, j as u64 + n * b));
                }
            }
            cells = next;
        }
        cells.sort_unstable();
        Ok(ExpandedDigits { order: self.order, level, cells })
    }

    /// The product-form decomposition, if `D = C x {0..N-1}` or its transpose
    /// with `2 <= |C| <= N - 1`.
    pub fn product_form(&self) -> Option<ProductForm> {
        let n = self.order;
        let columns: Vec<u32> = (0..n).filter(|&i| (0..n).any(|j| self.contains(i, j))).collect();
        let rows: Vec<u32> = (0..n).filter(|&j| (0..n).any(|i| self.contains(i, j))).collect();
        let acceptable = |k: usize| k >= 2 && k < n as usize;
        if acceptable(columns.len()) && self.len() == columns.len() * n as usize {
            return Some(ProductForm { axis: Axis::Columns, indices: columns });
        }
        if acceptable(rows.len()) && self.len() == rows.len() * n as usize {
            return Some(ProductForm { axis: Axis::Rows, indices: rows });
        }
        None
    }

    /// Similarity dimension `log #D / log N`.
    pub fn similarity_dimension(&self) -> LogRatio {
        LogRatio::new(0, self.len() as u64, self.order as u64)
    }

    /// Coordinate-list text, `N=3; D=(0,0),(2,2)`.
    pub fn to_list_string(&self) -> String {
        let body: Vec<String> = self.digits.iter().map(|(i, j)| format!("({i},{j})")).collect();
        format!("N={}; D={}", self.order, body.join(","))
    }

    /// Grid text: row 0 is the top row `j = N - 1`.
    pub fn to_grid_string(&self) -> String {
        let n = self.order;
        let mut out = String::new();
        for row in 0..n {
            let j = n - 1 - row;
            for i in 0..n {
                out.push(if self.contains(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("digit sets serialize")
    }
}

impl fmt::Debug for DigitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_list_string())
    }
}

impl fmt::Display for DigitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_list_string())
    }
}

impl FromStr for DigitSet {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_digit_set(text)
    }
}

/// Parses either `N=5; D=(0,0),(1,1),...` or an N-line grid of `0`/`1`.
/// `D_n = D_1 + N D_(n-1)`.
pub fn expand_digits(digits: &DigitSet, level: u32, budget: &Budget) -> Result<ExpandedDigits> {
    digits.expand(level, budget)
}

pub fn hausdorff_dim_attractor(digits: &DigitSet) -> LogRatio {
    digits.similarity_dimension()
}

pub fn parse_digit_set(text: &str) -> Result<DigitSet> {
    let trimmed = text.trim();
    if trimmed.to_ascii_uppercase().starts_with("N") && trimmed.contains('=') {
        parse_list(trimmed)
    } else {
        parse_grid(trimmed)
    }
}

fn parse_list(text: &str) -> Result<DigitSet> {
    let (head, tail) = text.split_once(';').ok_or_else(|| Error::Syntax("expected `N=<order>; D=<digits>`".into()))?;
    let order = head
        .trim()
        .split_once('=')
        .filter(|(k, _)| k.trim().eq_ignore_ascii_case("n"))
        .and_then(|(_, v)| v.trim().parse::<u32>().ok())
        .ok_or_else(|| Error::Syntax(format!("bad order clause `{}`", head.trim())))?;
    let (key, body) = tail.trim().split_once('=').ok_or_else(|| Error::Syntax("expected `D=` clause".into()))?;
    if !key.trim().eq_ignore_ascii_case("d") {
        return Err(Error::Syntax(format!("expected `D=`, found `{}=`", key.trim())));
    }
    DigitSet::from_signed(order, parse_pairs(body)?)
}

/// Parses `(a,b),(c,d),...`, optionally wrapped in braces.
pub(crate) fn parse_pairs(body: &str) -> Result<Vec<(i64, i64)>> {
    let body = body.trim().trim_start_matches('{').trim_end_matches('}').trim();
    let mut pairs = Vec::new();
    let mut rest = body;
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| Error::Syntax(format!("expected `(` at `{rest}`")))?;
        let close = open.find(')').ok_or_else(|| Error::Syntax("unterminated digit".into()))?;
        let (a, b) = open[..close]
            .split_once(',')
            .ok_or_else(|| Error::Syntax(format!("digit `({})` needs two coordinates", &open[..close])))?;
        let parse =
            |s: &str| s.trim().parse::<i64>().map_err(|_| Error::Syntax(format!("`{}` is not an integer", s.trim())));
        pairs.push((parse(a)?, parse(b)?));
        rest = open[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        } else if !rest.is_empty() {
            return Err(Error::Syntax(format!("unexpected `{rest}`")));
        }
    }
    Ok(pairs)
}

fn parse_grid(text: &str) -> Result<DigitSet> {
    let rows: Vec<&str> = text.split(['\n', '/']).map(str::trim).filter(|r| !r.is_empty()).collect();
    let n = rows.len();
    if n == 0 {
        return Err(Error::Syntax("empty grid".into()));
    }
    let mut digits = Vec::new();
    for (k, row) in rows.iter().enumerate() {
        if row.chars().count() != n {
            return Err(Error::Syntax(format!("grid row {k} has {} cells, expected {n}", row.chars().count())));
        }
        let j = (n - 1 - k) as u32;
        for (i, c) in row.chars().enumerate() {
            match c {
                '1' => digits.push((i as u32, j)),
                '0' => {}
                other => return Err(Error::Syntax(format!("unexpected grid character `{other}`"))),
            }
        }
    }
    DigitSet::new(n as u32, digits)
}

/// The cells of `D_n`, sorted, in `[0, N^n - 1]^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedDigits {
    pub order: u32,
    pub level: u32,
    pub cells: Vec<(u64, u64)>,
}

impl ExpandedDigits {
    pub fn side(&self) -> u64 {
        (self.order as u64).pow(self.level)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Columns,
    Rows,
}

/// `D = {i_1..i_j} x {0..N-1}` (columns) or `{0..N-1} x {i_1..i_j}` (rows).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProductForm {
    pub axis: Axis,
    pub indices: Vec<u32>,
}

impl ProductForm {
    pub fn reconstruct(&self, order: u32) -> Result<DigitSet> {
        let digits = self.indices.iter().flat_map(|&k| {
            (0..order).map(move |t| match self.axis {
                Axis::Columns => (k, t),
                Axis::Rows => (t, k),
            })
        });
        DigitSet::new(order, digits)
    }

    pub fn transposed(&self) -> ProductForm {
        let axis = match self.axis {
            Axis::Columns => Axis::Rows,
            Axis::Rows => Axis::Columns,
        };
        ProductForm { axis, indices: self.indices.clone() }
    }
}
