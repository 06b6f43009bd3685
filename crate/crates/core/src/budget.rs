use crate::error::{Error, Result};

/// Environment variable that overrides the default cell budget.
pub const BUDGET_ENV: &str = "FRACSQ_BUDGET_CELLS";

/// Upper bound on the number of grid cells (N^(2n)) any single raster may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_cells: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_cells: 1 << 26 }
    }
}

impl Budget {
    pub fn new(max_cells: u64) -> Self {
        Budget { max_cells }
    }

    /// Reads `FRACSQ_BUDGET_CELLS`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<u64>()
                .map(Budget::new)
                .map_err(|_| Error::InvalidArgument(format!("{BUDGET_ENV}={raw} is not a cell count"))),
            Err(_) => Ok(Budget::default()),
        }
    }

    /// Side length N^n of a level-n grid, provided N^(2n) cells fit.
    pub fn grid_side(&self, order: u32, level: u32) -> Result<u64> {
        self.check_cells(order, level, 2 * level)?;
        Ok((order as u64).pow(level))
    }

    /// Fails unless N^exponent fits in the budget; `level` is only used for reporting.
    pub fn check_cells(&self, order: u32, level: u32, exponent: u32) -> Result<u64> {
        let required = (order as u128).checked_pow(exponent).unwrap_or(u128::MAX);
        if required > self.max_cells as u128 {
            return Err(Error::BudgetExceeded { order: order as u64, level, required, budget: self.max_cells });
        }
        Ok(required as u64)
    }

    /// Largest level n with N^(2n) within budget (at least 1).
    pub fn max_level(&self, order: u32) -> u32 {
        let mut n = 1;
        while self.check_cells(order, n + 1, 2 * (n + 1)).is_ok() {
            n += 1;
        }
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_budget_levels() {
        let b = Budget::default();
        assert_eq!(b.max_level(3), 8);
        assert_eq!(b.max_level(5), 5);
        assert_eq!(b.max_level(2), 13);
    }

    #[test]
    fn over_budget_is_an_error() {
        let b = Budget::new(100);
        assert_eq!(b.grid_side(3, 2).unwrap(), 9);
        assert!(matches!(b.grid_side(3, 3), Err(Error::BudgetExceeded { required: 729, .. })));
    }
}
