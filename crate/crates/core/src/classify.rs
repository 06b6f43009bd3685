//! Certified classification of the lambda range of a fractal square.
//!
//! Rules are evaluated in a fixed order and the first that applies decides.
//! Every step records the data it used, so [`recheck`] can recompute it with
//! the underlying module operations and compare.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::budget::Budget;
use crate::digitop::line_in_h;
use crate::digits::{DigitSet, ProductForm};
use crate::error::{Error, Result};
use crate::lines::{admissible_slopes, dim_lambda1, omega1, OmegaProfile, Slope};
use crate::scalar::LogRatio;
use crate::topology::{
    beta0_search, beta0_sequence, complement_components_periodic, dichotomy_probe, DichotomyOutcome, DichotomyWitness,
    WitnessKind,
};

/// Depths used by the depth-bounded rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Deepest approximation used when looking for stabilization of β₀.
    pub beta_depth: u32,
    /// Deepest periodic complement scanned for an unbounded component.
    pub probe_depth: u32,
}

impl Limits {
    /// Largest depths whose grids fit the budget; the probe gets a sixteenth of it, at most 6 levels.
    pub fn for_order(order: u32, budget: &Budget) -> Self {
        let beta_depth = budget.max_level(order).max(3);
        let probe_depth = Budget::new(budget.max_cells / 16).max_level(order).min(6);
        Limits { beta_depth, probe_depth }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambdaRange {
    Zero,
    One,
    ZeroOne,
    Undetermined,
}

impl LambdaRange {
    pub fn label(&self) -> &'static str {
        match self {
            LambdaRange::Zero => "{0}",
            LambdaRange::One => "{1}",
            LambdaRange::ZeroOne => "{0,1}",
            LambdaRange::Undetermined => "undetermined",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    FullGrid,
    ProductForm,
    Stabilization,
    NoLines,
    SingleDirection,
    CrossingDirections,
    Inconclusive,
}

impl Rule {
    pub fn id(&self) -> &'static str {
        match self {
            Rule::FullGrid => "R1",
            Rule::ProductForm => "R2",
            Rule::Stabilization => "R3",
            Rule::NoLines => "R4",
            Rule::SingleDirection => "R5",
            Rule::CrossingDirections => "R6",
            Rule::Inconclusive => "R7",
        }
    }

    pub fn anchor(&self) -> &'static str {
        match self {
            Rule::FullGrid => "the full square is a Peano continuum",
            Rule::ProductForm => "product form characterizes the range {1}",
            Rule::Stabilization => "stable component counts certify finitely many components",
            Rule::NoLines => "without lines in H every component is a Peano continuum",
            Rule::SingleDirection => "single-direction (m, q) criterion",
            Rule::CrossingDirections => "lines in two directions force the Peano alternative (derived rule)",
            Rule::Inconclusive => "no rule applies at the current depths",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepStatus {
    Fired,
    NotFired,
    /// The rule applies but its gate could not be confirmed.
    Inconclusive,
}

impl StepStatus {
    fn label(&self) -> &'static str {
        match self {
            StepStatus::Fired => "fired",
            StepStatus::NotFired => "not-fired",
            StepStatus::Inconclusive => "inconclusive",
        }
    }
}

/// Condensed `(m, q)` data of one line-bearing slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileRecord {
    pub slope: Slope,
    pub m: u32,
    pub q: u32,
    pub q_certified: u32,
    pub cells: Vec<u32>,
    pub isolated: Vec<u32>,
    pub certified_isolated: Vec<u32>,
}

impl From<&OmegaProfile> for ProfileRecord {
    fn from(p: &OmegaProfile) -> Self {
        ProfileRecord {
            slope: p.slope,
            m: p.m,
            q: p.q,
            q_certified: p.q_certified,
            cells: p.cells.clone(),
            isolated: p.isolated.clone(),
            certified_isolated: p.certified_isolated.clone(),
        }
    }
}

impl ProfileRecord {
    fn to_json(&self) -> Value {
        json!({
            "slope": [self.slope.r, self.slope.s],
            "m": self.m,
            "q": self.q,
            "q_certified": self.q_certified,
            "cells": self.cells,
            "isolated": self.isolated,
            "certified_isolated": self.certified_isolated,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeRecord {
    pub outcome: DichotomyOutcome,
    pub level: u32,
    pub kind: Option<WitnessKind>,
    pub holonomy: Option<(i64, i64)>,
    pub representative: Option<(u64, u64)>,
}

impl From<&DichotomyWitness> for ProbeRecord {
    fn from(w: &DichotomyWitness) -> Self {
        ProbeRecord {
            outcome: w.outcome,
            level: w.level,
            kind: w.kind,
            holonomy: w.component.as_ref().map(|c| c.holonomy_vector()),
            representative: w.component.as_ref().map(|c| c.representative),
        }
    }
}

/// Inputs a step relied on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    FullGrid { digits: usize, cells: usize },
    ProductForm(Option<ProductForm>),
    Beta0 { sequence: Vec<u64>, n0: Option<u32>, budget_limited: bool },
    LineBearing(Vec<ProfileRecord>),
    SingleDirection { profile: ProfileRecord, branch: char, probe: Option<ProbeRecord> },
    Directions(Vec<Slope>),
    Depths { beta_depth: u32, probe_depth: u32 },
}

impl Evidence {
    fn to_json(&self) -> Value {
        match self {
            Evidence::FullGrid { digits, cells } => json!({ "digits": digits, "cells": cells }),
            Evidence::ProductForm(pf) => json!({ "product_form": pf }),
            Evidence::Beta0 { sequence, n0, budget_limited } => {
                json!({ "beta0": sequence, "n0": n0, "budget_limited": budget_limited })
            }
            Evidence::LineBearing(ps) => json!({ "slopes": ps.iter().map(ProfileRecord::to_json).collect::<Vec<_>>() }),
            Evidence::SingleDirection { profile, branch, probe } => json!({
                "profile": profile.to_json(),
                "branch": branch.to_string(),
                "probe": probe.as_ref().map(|p| json!({
                    "outcome": match p.outcome {
                        DichotomyOutcome::Case1 => "case1",
                        DichotomyOutcome::Undetermined => "undetermined",
                    },
                    "level": p.level,
                    "holonomy": p.holonomy.map(|h| [h.0, h.1]),
                })),
            }),
            Evidence::Directions(slopes) => json!({ "slopes": slopes.iter().map(|s| [s.r, s.s]).collect::<Vec<_>>() }),
            Evidence::Depths { beta_depth, probe_depth } => {
                json!({ "beta_depth": beta_depth, "probe_depth": probe_depth })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateStep {
    pub rule: Rule,
    pub status: StepStatus,
    pub detail: String,
    pub evidence: Evidence,
}

/// `dim_H` of the points with lambda value 1, as `1 + log m / log N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimLambda1 {
    pub m: u64,
    pub order: u32,
    pub value: LogRatio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Depths {
    pub beta_depth: u32,
    pub probe_depth: u32,
    pub beta_reached: u32,
    pub probe_reached: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub lambda: LambdaRange,
    pub rule: Rule,
    pub dim_lambda1: Option<DimLambda1>,
    pub certificate: Vec<CertificateStep>,
    pub depths: Depths,
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.label(),
            "rule": self.rule.id(),
            "dim_lambda1": self.dim_lambda1.map(|d| json!({
                "m": d.m,
                "n": d.order,
                "value": d.value.value::<f64>(),
                "exact": d.value.to_string(),
            })),
            "certificate": self.certificate.iter().map(|s| json!({
                "rule": s.rule.id(),
                "status": s.status.label(),
                "anchor": s.rule.anchor(),
                "detail": s.detail,
                "evidence": s.evidence.to_json(),
            })).collect::<Vec<_>>(),
            "depths": {
                "beta_depth": self.depths.beta_depth,
                "probe_depth": self.depths.probe_depth,
                "beta_reached": self.depths.beta_reached,
                "probe_reached": self.depths.probe_reached,
            },
        })
    }
}

fn step(rule: Rule, status: StepStatus, detail: String, evidence: Evidence) -> CertificateStep {
    CertificateStep { rule, status, detail, evidence }
}

fn slope_list(profiles: &[ProfileRecord]) -> String {
    profiles.iter().map(|p| p.slope.to_string()).collect::<Vec<_>>().join(", ")
}

fn undetermined(mut certificate: Vec<CertificateStep>, depths: Depths) -> Result<Verdict> {
    certificate.push(step(
        Rule::Inconclusive,
        StepStatus::Fired,
        format!("β₀ searched to level {}, complement probed to level {}", depths.beta_reached, depths.probe_reached),
        Evidence::Depths { beta_depth: depths.beta_depth, probe_depth: depths.probe_depth },
    ));
    Ok(Verdict { lambda: LambdaRange::Undetermined, rule: Rule::Inconclusive, dim_lambda1: None, certificate, depths })
}

/// Classifies `λ_K(K)` into `{0}`, `{1}`, `{0,1}` or undetermined.
pub fn classify(digits: &DigitSet, limits: Limits, budget: &Budget) -> Result<Verdict> {
    let mut certificate = Vec::new();
    let mut depths =
        Depths { beta_depth: limits.beta_depth, probe_depth: limits.probe_depth, beta_reached: 0, probe_reached: 0 };
    let finish =
        |lambda, rule, dim, certificate, depths| Ok(Verdict { lambda, rule, dim_lambda1: dim, certificate, depths });

    let full = digits.is_full();
    certificate.push(step(
        Rule::FullGrid,
        if full { StepStatus::Fired } else { StepStatus::NotFired },
        format!("#D = {} of {} cells", digits.len(), digits.order() * digits.order()),
        Evidence::FullGrid { digits: digits.len(), cells: (digits.order() * digits.order()) as usize },
    ));
    if full {
        return finish(LambdaRange::Zero, Rule::FullGrid, None, certificate, depths);
    }

    let pf = digits.product_form();
    certificate.push(step(
        Rule::ProductForm,
        if pf.is_some() { StepStatus::Fired } else { StepStatus::NotFired },
        match &pf {
            Some(p) => format!("D is {:?} {:?} times the full range", p.axis, p.indices),
            None => "D is not of product form".into(),
        },
        Evidence::ProductForm(pf.clone()),
    ));
    if pf.is_some() {
        return finish(LambdaRange::One, Rule::ProductForm, None, certificate, depths);
    }

    let search = beta0_search(digits, limits.beta_depth.max(3), budget)?;
    depths.beta_reached = search.sequence.len() as u32;
    let n0 = search.found.as_ref().map(|s| s.n0);
    certificate.push(step(
        Rule::Stabilization,
        if n0.is_some() { StepStatus::Fired } else { StepStatus::NotFired },
        match &search.found {
            Some(s) => format!("β₀(K^({})) = β₀(K^({})) = {}, so β₀(K) = {}", s.n0, s.n0 + 1, s.beta0, s.beta0),
            None => format!("β₀ sequence {:?} does not stabilize", search.sequence),
        },
        Evidence::Beta0 { sequence: search.sequence.clone(), n0, budget_limited: search.budget_error.is_some() },
    ));
    if n0.is_some() {
        return finish(LambdaRange::Zero, Rule::Stabilization, None, certificate, depths);
    }

    let bearing: Vec<ProfileRecord> = admissible_slopes(digits.order())
        .into_iter()
        .map(|s| omega1(digits, s))
        .filter(|p| p.line_bearing)
        .map(|p| ProfileRecord::from(&p))
        .collect();
    certificate.push(step(
        Rule::NoLines,
        if bearing.is_empty() { StepStatus::Fired } else { StepStatus::NotFired },
        if bearing.is_empty() {
            "no admissible slope carries a line of H".into()
        } else {
            format!("line-bearing slopes: {}", slope_list(&bearing))
        },
        Evidence::LineBearing(bearing.clone()),
    ));
    if bearing.is_empty() {
        return finish(LambdaRange::Zero, Rule::NoLines, None, certificate, depths);
    }

    if bearing.len() == 1 {
        let profile = bearing[0].clone();
        let (m, qc) = (profile.m, profile.q_certified);
        if m <= 1 && m * qc == 0 {
            if m == 1 && profile.q > 0 {
                certificate.push(step(
                    Rule::SingleDirection,
                    StepStatus::Inconclusive,
                    format!("slope {}: m = 1 and q = {} but no isolated line is certified", profile.slope, profile.q),
                    Evidence::SingleDirection { profile, branch: 'a', probe: None },
                ));
                return undetermined(certificate, depths);
            }
            certificate.push(step(
                Rule::SingleDirection,
                StepStatus::Fired,
                format!("slope {}: m = {m}, q = {qc}, so no point has lambda value 1", profile.slope),
                Evidence::SingleDirection { profile, branch: 'a', probe: None },
            ));
            return finish(LambdaRange::Zero, Rule::SingleDirection, None, certificate, depths);
        }
        let branch = if m == 1 { 'b' } else { 'c' };
        let witness = dichotomy_probe(digits, limits.probe_depth.max(1), budget)?;
        depths.probe_reached = witness.scanned.len() as u32;
        let probe = ProbeRecord::from(&witness);
        let dim = if m == 1 {
            DimLambda1 { m: 1, order: digits.order(), value: LogRatio::new(1, 1, digits.order() as u64) }
        } else {
            DimLambda1 { m: m as u64, order: digits.order(), value: dim_lambda1(m as u64, digits.order())? }
        };
        if witness.outcome == DichotomyOutcome::Case1 {
            certificate.push(step(
                Rule::SingleDirection,
                StepStatus::Fired,
                format!(
                    "slope {}: m = {m}, q = {qc}; unbounded complement at level {}; dim = {}",
                    profile.slope, witness.level, dim.value
                ),
                Evidence::SingleDirection { profile, branch, probe: Some(probe) },
            ));
            return finish(LambdaRange::ZeroOne, Rule::SingleDirection, Some(dim), certificate, depths);
        }
        certificate.push(step(
            Rule::SingleDirection,
            StepStatus::Inconclusive,
            format!(
                "slope {}: m = {m}, q = {qc}; would give {{0,1}} with dim {}, but no unbounded complement up to level {}",
                profile.slope, dim.value, witness.level
            ),
            Evidence::SingleDirection { profile, branch, probe: Some(probe) },
        ));
        return undetermined(certificate, depths);
    }

    let slopes: Vec<Slope> = bearing.iter().map(|p| p.slope).collect();
    certificate.push(step(
        Rule::CrossingDirections,
        StepStatus::Fired,
        format!("lines of H in {} directions: {}", slopes.len(), slope_list(&bearing)),
        Evidence::Directions(slopes),
    ));
    finish(LambdaRange::Zero, Rule::CrossingDirections, None, certificate, depths)
}

/// Outcome of re-verifying one certificate step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepCheck {
    pub rule: Rule,
    pub ok: bool,
    pub note: String,
}

fn check(rule: Rule, ok: bool, note: impl Into<String>) -> StepCheck {
    StepCheck { rule, ok, note: note.into() }
}

/// Recomputes every step of a certificate from the digit set and compares.
pub fn recheck(digits: &DigitSet, verdict: &Verdict, budget: &Budget) -> Result<Vec<StepCheck>> {
    let mut out = Vec::new();
    for s in &verdict.certificate {
        let fired = s.status == StepStatus::Fired;
        let result = match &s.evidence {
            Evidence::FullGrid { digits: count, cells } => {
                let ok = *count == digits.len()
                    && *cells == (digits.order() * digits.order()) as usize
                    && fired == (count == cells);
                check(s.rule, ok, "digit count")
            }
            Evidence::ProductForm(pf) => {
                let again = digits.product_form();
                let round_trip = match pf {
                    Some(p) => p.reconstruct(digits.order()).is_ok_and(|d| d == *digits),
                    None => true,
                };
                check(s.rule, again == *pf && round_trip && fired == pf.is_some(), "product form round trip")
            }
            Evidence::Beta0 { sequence, n0, budget_limited } => {
                let again = match beta0_sequence(digits, sequence.len().max(1) as u32, budget) {
                    Ok(seq) => seq,
                    Err(Error::BudgetExceeded { .. }) if *budget_limited => sequence.clone(),
                    Err(e) => return Err(e),
                };
                let stable = match n0 {
                    Some(n) => {
                        let k = *n as usize;
                        *n >= 2 && k < sequence.len() && sequence[k - 1] == sequence[k]
                    }
                    None => sequence.windows(2).skip(1).all(|w| w[0] != w[1]),
                };
                let monotone = sequence.windows(2).all(|w| w[0] <= w[1]);
                check(s.rule, again == *sequence && stable && monotone && fired == n0.is_some(), "β₀ sequence")
            }
            Evidence::LineBearing(records) => {
                let again: Vec<ProfileRecord> = admissible_slopes(digits.order())
                    .into_iter()
                    .map(|sl| omega1(digits, sl))
                    .filter(|p| p.line_bearing)
                    .map(|p| ProfileRecord::from(&p))
                    .collect();
                let lines_hold = records.iter().all(|r| {
                    let p = omega1(digits, r.slope);
                    let fixed = p.cells.iter().all(|&u| line_in_h(digits, &p.fixed_point_line(u)));
                    let isolated = r.certified_isolated.iter().all(|&v| line_in_h(digits, &p.line_at(v)));
                    fixed && isolated
                });
                check(s.rule, again == *records && lines_hold && fired == records.is_empty(), "line-bearing slopes")
            }
            Evidence::SingleDirection { profile, branch, probe } => {
                let again = ProfileRecord::from(&omega1(digits, profile.slope));
                let mut ok = again == *profile;
                ok &= match branch {
                    'a' => profile.m <= 1 && profile.m * profile.q_certified == 0,
                    'b' => profile.m == 1 && profile.q_certified >= 1,
                    'c' => profile.m >= 2,
                    _ => false,
                };
                if let Some(p) = probe {
                    ok &= recheck_probe(digits, p, budget)?;
                }
                if fired && *branch != 'a' {
                    let expected = if profile.m == 1 {
                        LogRatio::new(1, 1, digits.order() as u64)
                    } else {
                        dim_lambda1(profile.m as u64, digits.order())?
                    };
                    ok &= verdict.dim_lambda1.map(|d| d.value) == Some(expected);
                    ok &= probe.as_ref().is_some_and(|p| p.outcome == DichotomyOutcome::Case1);
                }
                check(s.rule, ok, "single-direction profile")
            }
            Evidence::Directions(slopes) => {
                let again: Vec<Slope> = admissible_slopes(digits.order())
                    .into_iter()
                    .filter(|&sl| omega1(digits, sl).line_bearing)
                    .collect();
                check(s.rule, again == *slopes && slopes.len() >= 2, "line directions")
            }
            Evidence::Depths { .. } => check(s.rule, true, "depths"),
        };
        out.push(result);
    }
    let last_fires = verdict.certificate.last().map(|s| s.rule) == Some(verdict.rule);
    out.push(check(verdict.rule, last_fires, "verdict rule ends the chain"));
    Ok(out)
}

fn recheck_probe(digits: &DigitSet, probe: &ProbeRecord, budget: &Budget) -> Result<bool> {
    if probe.outcome != DichotomyOutcome::Case1 {
        return Ok(true);
    }
    let report = complement_components_periodic(digits, probe.level, budget)?;
    let bound = crate::topology::dichotomy_bound_sq(digits.order());
    Ok(report.components.iter().any(|c| {
        Some(c.representative) == probe.representative
            && match probe.kind {
                Some(WitnessKind::Holonomy) => !c.is_bounded() && Some(c.holonomy_vector()) == probe.holonomy,
                Some(WitnessKind::DiameterExceedsBound) => c.diameter_sq.as_ref().is_some_and(|d| *d > bound),
                None => false,
            }
    }))
}

/// True when every step re-checks.
pub fn recheck_ok(digits: &DigitSet, verdict: &Verdict, budget: &Budget) -> Result<bool> {
    Ok(recheck(digits, verdict, budget)?.iter().all(|c| c.ok))
}

/// Human-readable certificate, one line per step.
pub fn explain(verdict: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "lambda range: {}", verdict.lambda.label());
    if let Some(d) = verdict.dim_lambda1 {
        let _ = writeln!(out, "dim of lambda^-1(1): {} ≈ {:.12}", d.value, d.value.value::<f64>());
    }
    for s in &verdict.certificate {
        let mark = match s.status {
            StepStatus::Fired => "✓",
            StepStatus::NotFired => "✗",
            StepStatus::Inconclusive => "?",
        };
        let _ = writeln!(out, "{}{} {} [{}]", s.rule.id(), mark, s.detail, s.rule.anchor());
    }
    let _ = writeln!(
        out,
        "depths: β₀ {}/{}, probe {}/{}",
        verdict.depths.beta_reached,
        verdict.depths.beta_depth,
        verdict.depths.probe_reached,
        verdict.depths.probe_depth
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify_default(d: &DigitSet) -> Verdict {
        let b = Budget::default();
        classify(d, Limits::for_order(d.order(), &b), &b).unwrap()
    }

    #[test]
    fn default_limits() {
        let b = Budget::default();
        assert_eq!(Limits::for_order(3, &b), Limits { beta_depth: 8, probe_depth: 6 });
        assert_eq!(Limits::for_order(5, &b), Limits { beta_depth: 5, probe_depth: 4 });
    }

    #[test]
    fn basic_verdicts() {
        let b = Budget::default();
        let carpet: DigitSet = "111\n101\n111".parse().unwrap();
        let v = classify_default(&carpet);
        assert_eq!((v.lambda, v.rule), (LambdaRange::Zero, Rule::Stabilization));
        assert!(recheck_ok(&carpet, &v, &b).unwrap());
        let full = DigitSet::full(3).unwrap();
        let v = classify_default(&full);
        assert_eq!((v.lambda, v.certificate.len()), (LambdaRange::Zero, 1));
        let product: DigitSet = "101\n101\n101".parse().unwrap();
        let v = classify_default(&product);
        assert_eq!((v.lambda, v.rule), (LambdaRange::One, Rule::ProductForm));
        assert!(recheck_ok(&product, &v, &b).unwrap());
    }

    #[test]
    fn explain_lists_every_step() {
        let carpet: DigitSet = "111\n101\n111".parse().unwrap();
        let text = explain(&classify_default(&carpet));
        assert!(text.contains("R1✗"));
        assert!(text.contains("R3✓ β₀(K^(2)) = β₀(K^(3)) = 1"));
    }

    #[test]
    fn tampered_certificates_fail() {
        let b = Budget::default();
        let carpet: DigitSet = "111\n101\n111".parse().unwrap();
        let mut v = classify_default(&carpet);
        if let Evidence::Beta0 { sequence, .. } = &mut v.certificate[2].evidence {
            sequence[1] = 2;
        }
        assert!(!recheck_ok(&carpet, &v, &b).unwrap());
    }

    #[test]
    fn line_family_verdicts() {
        let b = Budget::default();
        let cases = [
            ("diag5", LambdaRange::Zero, Rule::Stabilization),
            ("d0_5", LambdaRange::Zero, Rule::SingleDirection),
            ("d2_5", LambdaRange::ZeroOne, Rule::SingleDirection),
            ("d3_5", LambdaRange::ZeroOne, Rule::SingleDirection),
        ];
        for (name, lambda, rule) in cases {
            let d = crate::presets::preset(name).unwrap();
            let v = classify_default(&d);
            assert_eq!((v.lambda, v.rule), (lambda, rule), "{name}\n{}", explain(&v));
            assert!(recheck_ok(&d, &v, &b).unwrap(), "{name}");
        }
        let d3 = classify_default(&crate::presets::preset("d3_5").unwrap());
        assert_eq!(d3.dim_lambda1.unwrap().value, LogRatio::new(1, 2, 5));
        let d2 = classify_default(&crate::presets::preset("d2_5").unwrap());
        assert_eq!(d2.dim_lambda1.unwrap().value.exact_integer(), Some(1));
    }
}
