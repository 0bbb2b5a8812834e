use pmean::means::{
    agm, all_means, bhatia_li, classical, schwab_borchardt, tilde_mean, ArcKind, Classical,
    MeanInput,
};
use pmean::ptrig::{arccosh_p, PExponent};
use proptest::prelude::*;

fn pe(p: f64) -> PExponent {
    PExponent::new(p).unwrap()
}

fn ordered_pair() -> impl Strategy<Value = (f64, f64)> {
    (0.01..100.0f64, 0.01..0.99f64).prop_map(|(b, t)| (b / (1.0 - t), b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn every_mean_lies_between_the_entries((a, b) in ordered_pair(), p in 2.0..10.0f64) {
        let input = MeanInput::new(a, b).unwrap();
        for (label, v) in all_means(pe(p), &input).unwrap() {
            prop_assert!(b <= v * (1.0 + 1e-14) && v <= a * (1.0 + 1e-14), "{label} = {v} outside [{b}, {a}]");
        }
    }

    #[test]
    fn homogeneous_of_degree_one((a, b) in ordered_pair(), p in 2.0..10.0f64, lambda in prop::sample::select(vec![0.1, 10.0])) {
        let base = all_means(pe(p), &MeanInput::new(a, b).unwrap()).unwrap();
        let scaled = all_means(pe(p), &MeanInput::new(lambda * a, lambda * b).unwrap()).unwrap();
        for ((label, v), (_, w)) in base.iter().zip(&scaled) {
            prop_assert!(((w - lambda * v) / (lambda * v)).abs() <= 1e-12, "{label}");
        }
    }

    #[test]
    fn order_of_arguments_is_irrelevant((a, b) in ordered_pair(), p in 2.0..10.0f64) {
        let fwd = all_means(pe(p), &MeanInput::new(a, b).unwrap()).unwrap();
        let rev = all_means(pe(p), &MeanInput::new(b, a).unwrap()).unwrap();
        prop_assert_eq!(fwd, rev);
    }

    #[test]
    fn chain((a, b) in ordered_pair(), p in 2.0..10.0f64) {
        let input = MeanInput::new(a, b).unwrap();
        let t = |k| tilde_mean(k, pe(p), &input).unwrap().value;
        let c = |k| classical(k, &input).value;
        let (l, q, am) = (c(Classical::L), c(Classical::Q), c(Classical::A));
        let (lt, pt, mt, tt) = (t(ArcKind::L), t(ArcKind::P), t(ArcKind::M), t(ArcKind::T));
        let slack = 1e-13 * a;
        prop_assert!(l <= lt + slack && lt <= pt + slack && pt <= am + slack);
        prop_assert!(am <= mt + slack && mt <= tt + slack && tt <= q + slack);
    }
}

#[test]
fn p2_reductions() {
    let p = pe(2.0);
    for (a, b) in [(3.0, 1.0), (10.0, 9.0), (1e3, 1e-2)] {
        let input = MeanInput::new(a, b).unwrap();
        for (k, c) in [
            (ArcKind::P, Classical::P),
            (ArcKind::T, Classical::T),
            (ArcKind::L, Classical::L),
            (ArcKind::M, Classical::M),
        ] {
            let (t, v) = (
                tilde_mean(k, p, &input).unwrap().value,
                classical(c, &input).value,
            );
            assert!(((t - v) / v).abs() <= 1e-12, "{k:?} at ({a}, {b})");
        }
    }
}

#[test]
fn bhatia_li_endpoints_and_remark_identity() {
    for (a, b) in [(3.0, 1.0), (2.0, 1.5), (50.0, 0.5)] {
        let input = MeanInput::new(a, b).unwrap();
        let l = classical(Classical::L, &input).value;
        let g = agm(&input, 1e-15).unwrap().value;
        assert!((bhatia_li(1.0, &input).unwrap().value - l).abs() <= 1e-8);
        assert!((bhatia_li(2.0, &input).unwrap().value - g).abs() <= 1e-8);
    }
    for p in [2.0, 3.0, 5.0] {
        let (x, y) = (3.0, 1.25);
        let sb = schwab_borchardt(pe(p), x, y).unwrap();
        let rhs = y * arccosh_p(pe(p), x / y).unwrap() / (x.powf(p) - y.powf(p)).powf(1.0 / p);
        assert!((y / sb - rhs).abs() <= 1e-9, "p={p}");
    }
}

#[test]
fn degenerate_pair_collapses() {
    let input = MeanInput::new(2.0, 2.0).unwrap();
    for (label, v) in all_means(pe(3.0), &input).unwrap() {
        assert!((v - 2.0).abs() <= 1e-14, "{label} = {v}");
    }
}
