//! Scalar abstractions.
//!
//! Every geometric decision in the crate is exact. Rational quantities go
//! through [`RationalScalar`], which is implemented for any `Ratio<I>` over a
//! signed integer type (`i64`, `i128`, `BigInt`). Floating point only shows up
//! when a [`LogRatio`] is rendered for display, and that rendering is generic
//! over `f32`/`f64` through `num_traits::Float`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FromPrimitive, Signed};
use serde::Serialize;

/// Exact rational arithmetic sufficient for interval and orbit computations.
pub trait RationalScalar: Clone + Ord + Hash + Debug + Display + Signed {
    fn from_fraction(numer: i64, denom: i64) -> Self;

    fn from_int(value: i64) -> Self {
        Self::from_fraction(value, 1)
    }

    fn floor(&self) -> Self;

    fn is_integer(&self) -> bool;

    /// Arbitrary-precision copy, used for reporting.
    fn to_exact(&self) -> BigRational;

    /// Representative of `self` modulo `period` in `[0, period)`.
    fn rem_period(&self, period: &Self) -> Self {
        let q = (self.clone() / period.clone()).floor();
        self.clone() - q * period.clone()
    }
}

impl<I> RationalScalar for Ratio<I>
where
    I: Clone + Integer + Signed + FromPrimitive + Hash + Debug + Display + Into<BigInt>,
{
    fn from_fraction(numer: i64, denom: i64) -> Self {
        let n = I::from_i64(numer).expect("numerator fits the integer type");
        let d = I::from_i64(denom).expect("denominator fits the integer type");
        Ratio::new(n, d)
    }

    fn floor(&self) -> Self {
        Ratio::floor(self)
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn to_exact(&self) -> BigRational {
        BigRational::new(self.numer().clone().into(), self.denom().clone().into())
    }
}

/// A dimension value of the form `offset + log(argument) / log(base)`.
///
/// Kept symbolic so equality is decided on integers; floats are produced on
/// demand by [`LogRatio::value`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LogRatio {
    pub offset: u32,
    pub argument: u64,
    pub base: u64,
}

impl LogRatio {
    pub fn new(offset: u32, argument: u64, base: u64) -> Self {
        LogRatio { offset, argument, base }
    }

    pub fn value<F: Float + FromPrimitive>(&self) -> F {
        let offset = F::from_u32(self.offset).expect("small integer");
        if self.argument == 1 {
            return offset;
        }
        let a = F::from_u64(self.argument).expect("finite");
        let b = F::from_u64(self.base).expect("finite");
        offset + a.ln() / b.ln()
    }

    /// `Some(k)` when the value is the integer `k`, i.e. `argument = base^j`.
    pub fn exact_integer(&self) -> Option<u32> {
        let mut power = 1u64;
        let mut j = 0u32;
        while power < self.argument {
            power = power.checked_mul(self.base)?;
            j += 1;
        }
        (power == self.argument).then_some(self.offset + j)
    }
}

impl Display for LogRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(k) = self.exact_integer() {
            return write!(f, "{k}");
        }
        if self.offset > 0 {
            write!(f, "{} + ", self.offset)?;
        }
        write!(f, "log {}/log {}", self.argument, self.base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rem_period_is_nonnegative() {
        let x = Ratio::<i64>::from_fraction(-1, 5);
        assert_eq!(x.rem_period(&Ratio::from_int(1)), Ratio::from_fraction(4, 5));
        let y = BigRational::from_fraction(7, 4);
        assert_eq!(y.rem_period(&BigRational::from_fraction(1, 2)), BigRational::from_fraction(1, 4));
    }

    #[test]
    fn log_ratio_values() {
        let carpet = LogRatio::new(0, 8, 3);
        assert!((carpet.value::<f64>() - 1.892_789_260_714_372).abs() < 1e-12);
        assert!((carpet.value::<f32>() - 1.892_789_3).abs() < 1e-5);
        assert_eq!(carpet.exact_integer(), None);
        assert_eq!(LogRatio::new(0, 5, 5).exact_integer(), Some(1));
        assert_eq!(LogRatio::new(0, 9, 3).exact_integer(), Some(2));
        assert_eq!(LogRatio::new(1, 1, 5).exact_integer(), Some(1));
        assert_eq!(LogRatio::new(1, 2, 5).to_string(), "1 + log 2/log 5");
    }
}
