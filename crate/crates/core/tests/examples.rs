mod common;

use fracsq::digitop::{digit_operator, intercept_orbit, line_in_h, line_in_h_check, LineCheck};
use fracsq::hata::{connected_certificate, hata_graph, Connectivity};
use fracsq::lines::{line_bearing_slopes, Slope};
use fracsq::presets::preset;
use fracsq::topology::{
    beta0_search, beta0_sequence, complement_components_periodic, dichotomy_bound_sq, dichotomy_probe, pi1_certificate,
    DichotomyOutcome, Pi1Certificate, WitnessKind,
};
use fracsq::{Budget, DigitSet, ExactFraction, Line};
use proptest::prelude::*;

fn line(text: &str) -> Line {
    text.parse().unwrap()
}

#[test]
fn three_component_approximation() {
    let b = Budget::default();
    let d = preset("ex21").unwrap();
    assert_eq!(beta0_sequence(&d, 3, &b).unwrap(), vec![1, 1, 3]);
    let search = beta0_search(&d, 4, &b).unwrap();
    assert_eq!(search.sequence, vec![1, 1, 3, common::brute_beta0(&d, 4)]);
    assert_eq!(search.sequence[3], 13);
    assert!(search.found.is_none());
    assert_eq!(connected_certificate(&d), Connectivity::Disconnected);
    assert_eq!(hata_graph(&d, 1, &b).unwrap().component_count(), 3);
    assert_eq!(d.transpose().transpose(), d);
}

#[test]
fn fundamental_group_certificates() {
    let b = Budget::default();
    assert_eq!(pi1_certificate(&preset("vicsek3").unwrap(), &b).unwrap(), Pi1Certificate::TrivialCertified);
    assert_eq!(pi1_certificate(&preset("carpet3").unwrap(), &b).unwrap(), Pi1Certificate::NoCertificate);
    assert_eq!(pi1_certificate(&preset("diag5").unwrap(), &b).unwrap(), Pi1Certificate::TrivialCertified);
}

#[test]
fn periodic_complements() {
    let b = Budget::default();
    let column: DigitSet = "N=3; D=(0,0),(0,1),(0,2)".parse().unwrap();
    for n in 1..=3 {
        let report = complement_components_periodic(&column, n, &b).unwrap();
        assert_eq!(report.components.len(), 1);
        let (x, y) = report.components[0].holonomy_vector();
        assert_eq!((x, y.abs()), (0, 1));
    }
    let probe = dichotomy_probe(&column, 3, &b).unwrap();
    assert_eq!((probe.outcome, probe.level, probe.kind), (DichotomyOutcome::Case1, 1, Some(WitnessKind::Holonomy)));
    let carpet = preset("carpet3").unwrap();
    for n in 1..=3 {
        let report = complement_components_periodic(&carpet, n, &b).unwrap();
        assert!(report.components.iter().all(|c| c.is_bounded() && c.holonomy_vector() == (0, 0)));
    }
    let diag = complement_components_periodic(&preset("diag5").unwrap(), 1, &b).unwrap();
    assert!(diag.components.iter().any(|c| {
        let v = c.holonomy_vector();
        v == (1, 1) || v == (-1, -1)
    }));
    let bound = dichotomy_bound_sq(5);
    assert_eq!(bound, ExactFraction::new((2 * 26u64.pow(4)).into(), 25.into()));
}

#[test]
fn line_checks() {
    let b = Budget::default();
    let diag = preset("diag5").unwrap();
    assert_eq!(line_in_h_check(&diag, &line("1/1@0"), 4, &b).unwrap(), LineCheck::ContainedUpToDepth(4));
    let carpet = preset("carpet3").unwrap();
    for depth in 1..=3 {
        assert_eq!(line_in_h_check(&carpet, &line("1/1@0"), depth, &b).unwrap(), LineCheck::ExcludedAt(1));
    }
    let full = DigitSet::full(3).unwrap();
    for text in ["1/2@1/7", "v@2/5", "-3/2@1/3"] {
        assert_eq!(line_in_h_check(&full, &line(text), 3, &b).unwrap(), LineCheck::ContainedUpToDepth(3));
    }
}

#[test]
fn orbits_and_digit_operator() {
    let classes = |l: &str, n| intercept_orbit(&line(l), n).classes.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    assert_eq!(classes("1/1@-1/5", 5), ["0", "4/5"]);
    assert_eq!(classes("0/1@2/3", 3), ["0", "2/3"]);
    assert_eq!(classes("3/2@0", 4), ["0"]);
    let carpet = digit_operator(&[line("1/2@0"), line("0/1@2/3")], 3).unwrap();
    assert_eq!(carpet, preset("carpet3").unwrap());
    let d2 = digit_operator(&[line("1/1@0"), line("1/1@-1/5")], 5).unwrap();
    let expected: Vec<(u32, u32)> = (0..5).map(|i| (i, i)).chain([(1, 0), (2, 1), (3, 2), (4, 3), (0, 4)]).collect();
    assert_eq!(d2, DigitSet::new(5, expected).unwrap());
}

#[test]
fn certified_lines_pass_the_depth_check() {
    let b = Budget::default();
    for name in ["carpet3", "diag5", "d2_5", "d3_5", "ex21", "vicsek3"] {
        let d = preset(name).unwrap();
        for p in line_bearing_slopes(&d) {
            for &v in &p.certified_isolated {
                assert_eq!(
                    line_in_h_check(&d, &p.line_at(v), 3, &b).unwrap(),
                    LineCheck::ContainedUpToDepth(3),
                    "{name} slope {} point {v}",
                    p.slope
                );
            }
            for &u in &p.cells {
                assert!(line_in_h(&d, &p.fixed_point_line(u)), "{name} slope {} cell {u}", p.slope);
            }
        }
    }
}

fn line_families() -> impl Strategy<Value = (u32, Vec<Line>)> {
    let one = (0usize..4, -3i64..=3, 1i64..=3, -6i64..=6, 1i64..=6).prop_map(|(kind, r, s, p, q)| {
        let text = match kind {
            0 => format!("v@{p}/{q}"),
            1 => format!("0/1@{p}/{q}"),
            _ => format!("{}/{s}@{p}/{q}", if r == 0 { 1 } else { r }),
        };
        text.parse::<Line>().unwrap()
    });
    (prop_oneof![Just(3u32), Just(4u32), Just(5u32)], prop::collection::vec(one, 1..=3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn digit_operator_is_invariant(family in line_families()) {
        let (n, lines) = family;
        let Ok(d) = digit_operator(&lines, n) else { return Ok(()); };
        let mut reversed = lines.clone();
        reversed.reverse();
        prop_assert_eq!(digit_operator(&reversed, n).unwrap(), d.clone());
        let shifted: Vec<Line> = lines
            .iter()
            .map(|l| Line::new(l.slope, l.intercept.clone() + l.period() * ExactFraction::from_integer(2.into())))
            .collect();
        prop_assert_eq!(digit_operator(&shifted, n).unwrap(), d.clone());
        for l in &lines {
            prop_assert!(line_in_h(&d, l), "{} not in H of {}", l, d.to_list_string());
        }
    }
}

#[test]
fn slope_display() {
    assert_eq!(Slope::new(-2, 4).unwrap().to_string(), "(-1, 2)");
}
