//! Exact analysis of fractal squares `K(N, D)`.
//!
//! A fractal square is the attractor of `{x -> (x + d) / N : d in D}` for a
//! digit set `D` inside `{0..N-1}^2`. This crate computes approximations,
//! component counts, Hata graphs, line invariants and a certified
//! classification of the range of the lambda function.

pub mod budget;
pub mod census;
pub mod classify;
pub mod digitop;
pub mod digits;
pub mod error;
pub mod grid;
pub mod hata;
pub mod hull;
pub mod lattice;
pub mod lines;
pub mod presets;
pub mod render;
pub mod scalar;
pub mod topology;
pub mod unionfind;

use num_rational::{BigRational, Ratio};

pub use budget::Budget;
pub use classify::{classify, explain, recheck, LambdaRange, Limits, Rule, Verdict};
pub use digitop::RationalLine;
pub use digits::{
    expand_digits, hausdorff_dim_attractor, parse_digit_set, Axis, Digit, DigitSet, ExpandedDigits, ProductForm,
};
pub use error::{Error, Result};
pub use grid::{rasterize, CellGrid};
pub use scalar::{LogRatio, RationalScalar};

/// Arbitrary-precision reduced fraction used for every reported coordinate.
pub type ExactFraction = BigRational;
/// Machine-word fraction for small intermediate computations.
pub type Fraction64 = Ratio<i64>;

/// A rational line with exact coordinates.
pub type Line = RationalLine<ExactFraction>;
