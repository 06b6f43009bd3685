//! Exhaustive classification of every digit set of a given order.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::classify::{classify, recheck_ok, LambdaRange, Limits, Rule, Verdict};
use crate::digits::{Axis, DigitSet, ProductForm};
use crate::error::{Error, Result};
use crate::lines::line_bearing_slopes;
use crate::topology::{beta0_sequence, dichotomy_probe, DichotomyOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub order: u32,
    pub limits: Limits,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl CensusConfig {
    /// Per-task depths kept small so the whole census stays interactive.
    pub fn default_for(order: u32, budget: &Budget) -> Self {
        let limits = match order {
            3 => Limits { beta_depth: 6, probe_depth: 4 },
            4 => Limits { beta_depth: 4, probe_depth: 3 },
            _ => Limits::for_order(order, budget),
        };
        CensusConfig { order, limits, jobs: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub mask: u128,
    pub digits: DigitSet,
    pub verdict: Verdict,
    /// β₀ of the first three approximations.
    pub beta0_prefix: Vec<u64>,
    pub line_slopes: usize,
    pub recheck_ok: bool,
    /// Set for crossing-direction verdicts whose probe nevertheless finds an unbounded complement.
    pub crossing_conflict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub config: CensusConfig,
    pub rows: Vec<CensusRow>,
}

/// `2^(N^2) - (N^2 + 1)`: subsets with at least two digits.
pub fn expected_rows(order: u32) -> u128 {
    let cells = order * order;
    (1u128 << cells) - (cells as u128 + 1)
}

/// Product forms enumerated from column subsets of size `2..=N-1`, as masks.
pub fn product_form_masks(order: u32) -> Vec<u128> {
    let mut masks = Vec::new();
    for subset in 0u32..1 << order {
        let size = subset.count_ones();
        if size < 2 || size > order - 1 {
            continue;
        }
        let indices: Vec<u32> = (0..order).filter(|k| subset >> k & 1 == 1).collect();
        for axis in [Axis::Columns, Axis::Rows] {
            let pf = ProductForm { axis, indices: indices.clone() };
            masks.push(pf.reconstruct(order).expect("valid product form").mask());
        }
    }
    masks.sort_unstable();
    masks
}

/// Whether the stricter index range `2 <= k <= N-2` also admits this product form.
pub fn strict_product_range(pf: &ProductForm, order: u32) -> bool {
    let k = pf.indices.len() as u32;
    k >= 2 && k + 2 <= order
}

fn census_row(order: u32, mask: u128, limits: Limits, budget: &Budget) -> Result<CensusRow> {
    let digits = DigitSet::from_mask(order, mask)?;
    let verdict = classify(&digits, limits, budget)?;
    let beta0_prefix = beta0_sequence(&digits, 3, budget)?;
    let line_slopes = line_bearing_slopes(&digits).len();
    let ok = recheck_ok(&digits, &verdict, budget)?;
    let crossing_conflict = verdict.rule == Rule::CrossingDirections
        && dichotomy_probe(&digits, limits.probe_depth.max(1), budget)?.outcome == DichotomyOutcome::Case1;
    Ok(CensusRow { mask, digits, verdict, beta0_prefix, line_slopes, recheck_ok: ok, crossing_conflict })
}

/// Classifies every digit set of the order with at least two digits, in mask order.
pub fn run_census(config: CensusConfig, budget: &Budget, progress: Option<&(dyn Fn(u64) + Sync)>) -> Result<Census> {
    let cells = config.order * config.order;
    if cells > 16 {
        return Err(Error::InvalidArgument(format!("census over 2^{cells} digit sets is out of reach")));
    }
    let masks: Vec<u128> = (0u128..1 << cells).filter(|m| m.count_ones() >= 2).collect();
    let done = AtomicU64::new(0);
    let work = || {
        masks
            .par_iter()
            .map(|&mask| {
                let row = census_row(config.order, mask, config.limits, budget);
                let count = done.fetch_add(1, Ordering::Relaxed) + 1;
                if let Some(report) = progress {
                    report(count);
                }
                row
            })
            .collect::<Result<Vec<_>>>()
    };
    let rows = match config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    Ok(Census { config, rows })
}

impl Census {
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("mask,digits,lambda,rule,dim_exact,dim_value,beta0_1,beta0_2,beta0_3,line_slopes,recheck\n");
        for row in &self.rows {
            let (exact, value) = match row.verdict.dim_lambda1 {
                Some(d) => (d.value.to_string(), format!("{:.15}", d.value.value::<f64>())),
                None => (String::new(), String::new()),
            };
            let b = &row.beta0_prefix;
            let _ = writeln!(
                out,
                "{},\"{}\",{},{},{},{},{},{},{},{},{}",
                row.mask,
                row.digits.to_list_string(),
                row.verdict.lambda.label(),
                row.verdict.rule.id(),
                exact,
                value,
                b[0],
                b[1],
                b[2],
                row.line_slopes,
                if row.recheck_ok { "ok" } else { "FAIL" }
            );
        }
        out
    }

    pub fn recheck_failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.recheck_ok).count()
    }

    pub fn summary(&self) -> Value {
        let order = self.config.order;
        let mut verdicts = BTreeMap::new();
        let mut rules = BTreeMap::new();
        for lambda in [LambdaRange::Zero, LambdaRange::One, LambdaRange::ZeroOne, LambdaRange::Undetermined] {
            verdicts.insert(lambda.label(), 0usize);
        }
        for row in &self.rows {
            *verdicts.entry(row.verdict.lambda.label()).or_default() += 1;
            *rules.entry(row.verdict.rule.id()).or_insert(0usize) += 1;
        }

        let one_masks: Vec<u128> =
            self.rows.iter().filter(|r| r.verdict.lambda == LambdaRange::One).map(|r| r.mask).collect();
        let enumerated = product_form_masks(order);
        let formula = 2 * ((1u64 << order) - 2 - order as u64);

        let strict_disagreements: Vec<String> = self
            .rows
            .iter()
            .filter_map(|r| r.digits.product_form().map(|pf| (r, pf)))
            .filter(|(_, pf)| !strict_product_range(pf, order))
            .map(|(r, _)| r.digits.to_list_string())
            .collect();

        let pattern: Vec<&CensusRow> = self
            .rows
            .iter()
            .filter(|r| {
                let b = &r.beta0_prefix;
                1 < b[0] && b[0] == b[1] && b[1] < b[2]
            })
            .collect();

        let r3_rows: Vec<&CensusRow> = self.rows.iter().filter(|r| r.verdict.rule == Rule::Stabilization).collect();
        let r6_rows = self.rows.iter().filter(|r| r.verdict.rule == Rule::CrossingDirections).count();

        json!({
            "n": order,
            "rows": self.rows.len(),
            "expected_rows": expected_rows(order).to_string(),
            "limits": { "beta_depth": self.config.limits.beta_depth, "probe_depth": self.config.limits.probe_depth },
            "verdicts": verdicts,
            "rules": rules,
            "product_form_check": {
                "verdict_one": one_masks.len(),
                "enumerated": enumerated.len(),
                "formula": formula,
                "match": one_masks == enumerated && enumerated.len() as u64 == formula,
            },
            "strict_product_range_disagreements": {
                "count": strict_disagreements.len(),
                "digit_sets": strict_disagreements,
            },
            "beta0_pattern": {
                "condition": "1 < b1 = b2 < b3",
                "count": pattern.len(),
                "examples": pattern.iter().take(5).map(|r| r.digits.to_list_string()).collect::<Vec<_>>(),
            },
            "crossing_rule_check": {
                "crossing_verdicts": r6_rows,
                "stabilized_with_crossing_lines": r3_rows.iter().filter(|r| r.line_slopes >= 2).count(),
                "probe_conflicts": self.rows.iter().filter(|r| r.crossing_conflict).count(),
            },
            "recheck_failures": self.recheck_failures(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_masks() {
        assert_eq!(product_form_masks(3).len(), 6);
        assert_eq!(product_form_masks(4).len(), 2 * (16 - 2 - 4));
        assert_eq!(expected_rows(3), 502);
        assert_eq!(expected_rows(4), 65519);
    }

    #[test]
    fn order_two_census() {
        let b = Budget::default();
        let config = CensusConfig { jobs: Some(2), ..CensusConfig::default_for(2, &b) };
        let c = run_census(config, &b, None).unwrap();
        assert_eq!(c.rows.len(), 11);
        assert_eq!(c.recheck_failures(), 0);
        let again = run_census(CensusConfig { jobs: Some(1), ..config }, &b, None).unwrap();
        assert_eq!(c.to_csv(), again.to_csv());
    }
}
