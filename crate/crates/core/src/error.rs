use thiserror::Error;

/// Errors produced by the analyzer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed digit set: {0}")]
    Syntax(String),
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(u32),
    #[error("digit ({i}, {j}) lies outside [0, {max}]^2")]
    DigitOutOfRange { i: i64, j: i64, max: u32 },
    #[error("duplicate digit ({0}, {1})")]
    DuplicateDigit(u32, u32),
    #[error("a digit set needs at least 2 digits, got {0}")]
    TooFewDigits(usize),
    #[error("level {level} at order {order} needs {required} cells, budget is {budget}")]
    BudgetExceeded { order: u64, level: u32, required: u128, budget: u64 },
    #[error("level must be at least {min}, got {got}")]
    LevelTooSmall { min: u32, got: u32 },
    #[error("{px} pixels per unit is not divisible by {cells} cells per side")]
    PixelDivisibility { px: u32, cells: u64 },
    #[error("no contraction maps: the profile has m = 0")]
    NoContractionMaps,
    #[error("formula needs m >= {min}, got {m}")]
    DimensionPrecondition { m: u64, min: u64 },
    #[error("invalid slope: {0}")]
    InvalidSlope(String),
    #[error("invalid line: {0}")]
    InvalidLine(String),
    #[error("({0}, {1}) is not a digit of the set")]
    NotADigit(u32, u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
