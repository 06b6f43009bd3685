use fracsq::classify::{recheck_ok, Evidence, Rule};
use fracsq::presets::preset;
use fracsq::topology::beta0_sequence;
use fracsq::{classify, explain, Budget, DigitSet, LambdaRange, Limits, LogRatio, Verdict};

fn verdict(d: &DigitSet) -> Verdict {
    let b = Budget::default();
    classify(d, Limits::for_order(d.order(), &b), &b).unwrap()
}

fn census_verdict(d: &DigitSet) -> Verdict {
    classify(d, Limits { beta_depth: 6, probe_depth: 4 }, &Budget::default()).unwrap()
}

fn all_order_three() -> impl Iterator<Item = DigitSet> {
    (0u128..1 << 9).filter(|m| m.count_ones() >= 2).map(|m| DigitSet::from_mask(3, m).unwrap())
}

#[test]
fn worked_examples() {
    let cases = [
        ("carpet3", LambdaRange::Zero, Rule::Stabilization, None),
        ("product32", LambdaRange::One, Rule::ProductForm, None),
        ("d3_5", LambdaRange::ZeroOne, Rule::SingleDirection, Some(LogRatio::new(1, 2, 5))),
        ("d2_5", LambdaRange::ZeroOne, Rule::SingleDirection, Some(LogRatio::new(1, 1, 5))),
        ("diag5", LambdaRange::Zero, Rule::Stabilization, None),
        ("d0_5", LambdaRange::Zero, Rule::SingleDirection, None),
    ];
    for (name, lambda, rule, dim) in cases {
        let d = preset(name).unwrap();
        let v = verdict(&d);
        assert_eq!((v.lambda, v.rule), (lambda, rule), "{name}");
        assert_eq!(v.dim_lambda1.map(|x| x.value), dim, "{name}");
        assert!(recheck_ok(&d, &v, &Budget::default()).unwrap(), "{name}");
    }
}

#[test]
fn single_direction_branches() {
    let branch = |name: &str| match &verdict(&preset(name).unwrap()).certificate.last().unwrap().evidence {
        Evidence::SingleDirection { branch, profile, .. } => (*branch, profile.m, profile.q),
        other => panic!("{other:?}"),
    };
    assert_eq!(branch("d0_5"), ('a', 0, 1));
    assert_eq!(branch("d2_5"), ('b', 1, 1));
    assert_eq!(branch("d3_5"), ('c', 2, 0));
}

#[test]
fn explanations() {
    let carpet = explain(&verdict(&preset("carpet3").unwrap()));
    assert!(carpet.contains("R3✓ β₀(K^(2)) = β₀(K^(3)) = 1, so β₀(K) = 1"));
    let d3 = explain(&verdict(&preset("d3_5").unwrap()));
    let marks: Vec<String> =
        d3.lines().filter(|l| l.starts_with('R')).map(|l| l.chars().take(3).collect::<String>()).collect();
    assert_eq!(marks, ["R1✗", "R2✗", "R3✗", "R4✗", "R5✓"]);
    assert!(d3.contains("does not stabilize"));
    let full = verdict(&DigitSet::full(4).unwrap());
    assert_eq!(full.certificate.len(), 1);
    assert_eq!(full.certificate[0].rule, Rule::FullGrid);
}

#[test]
fn json_shape() {
    let v = verdict(&preset("d3_5").unwrap()).to_json();
    assert_eq!(v["lambda"], "{0,1}");
    assert_eq!(v["dim_lambda1"]["m"], 2);
    assert_eq!(v["dim_lambda1"]["n"], 5);
    assert!((v["dim_lambda1"]["value"].as_f64().unwrap() - 1.430_676_558_073_393).abs() < 1e-12);
    assert_eq!(v["certificate"].as_array().unwrap().len(), 5);
    assert!(v["depths"]["beta_depth"].is_u64());
    assert!(verdict(&preset("carpet3").unwrap()).to_json()["dim_lambda1"].is_null());
}

#[test]
fn stabilized_counts_stay_constant() {
    let b = Budget::default();
    for d in all_order_three() {
        let v = census_verdict(&d);
        if v.rule != Rule::Stabilization {
            continue;
        }
        let n0 = match &v.certificate[2].evidence {
            Evidence::Beta0 { n0: Some(n0), .. } => *n0 as usize,
            other => panic!("{other:?}"),
        };
        let seq = beta0_sequence(&d, 6, &b).unwrap();
        assert!(seq[n0 - 1..].iter().all(|&x| x == seq[n0 - 1]), "{} {seq:?}", d.to_list_string());
    }
}

#[test]
fn product_verdicts_round_trip() {
    for d in all_order_three() {
        let v = census_verdict(&d);
        if v.lambda == LambdaRange::One {
            let pf = d.product_form().unwrap();
            assert_eq!(pf.reconstruct(3).unwrap(), d);
            assert_eq!(pf.transposed().reconstruct(3).unwrap(), d.transpose());
        }
    }
}

#[test]
fn verdicts_are_symmetric() {
    for d in all_order_three() {
        let v = census_verdict(&d);
        for image in [d.transpose(), d.reflect_horizontal()] {
            let w = census_verdict(&image);
            assert_eq!(v.lambda, w.lambda, "{}", d.to_list_string());
            assert_eq!(v.dim_lambda1.map(|x| x.value), w.dim_lambda1.map(|x| x.value));
        }
    }
}

#[test]
fn deeper_limits_never_overturn_a_verdict() {
    let b = Budget::default();
    let shallow = Limits { beta_depth: 3, probe_depth: 1 };
    let deep = Limits { beta_depth: 6, probe_depth: 4 };
    for d in all_order_three() {
        let s = classify(&d, shallow, &b).unwrap();
        let t = classify(&d, deep, &b).unwrap();
        if s.lambda != LambdaRange::Undetermined {
            assert_eq!((s.lambda, s.dim_lambda1), (t.lambda, t.dim_lambda1), "{}", d.to_list_string());
        }
    }
}

#[test]
fn budget_exhaustion_degrades_to_undetermined() {
    let tiny = Budget::new(24);
    let d = preset("d3_5").unwrap();
    let v = classify(&d, Limits { beta_depth: 4, probe_depth: 3 }, &tiny).unwrap();
    assert_eq!(v.lambda, LambdaRange::Undetermined);
    match &v.certificate[2].evidence {
        Evidence::Beta0 { budget_limited, .. } => assert!(budget_limited),
        other => panic!("{other:?}"),
    }
}

#[test]
fn every_order_three_certificate_rechecks() {
    let b = Budget::default();
    for d in all_order_three() {
        let v = census_verdict(&d);
        assert!(recheck_ok(&d, &v, &b).unwrap(), "{}", d.to_list_string());
    }
}
