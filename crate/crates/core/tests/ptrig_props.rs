use pmean::ptrig::{self, arcsin_p, arcsinh_p, arctan_p, arctanh_p, sin_p, ArcFn, PExponent};
use proptest::prelude::*;

fn pe(p: f64) -> PExponent {
    PExponent::new(p).unwrap()
}

fn x_grid() -> Vec<f64> {
    (1..=99).map(|i| i as f64 / 100.0).collect()
}

#[test]
fn arc_ordering_is_strict() {
    for p in [2.0, 2.5, 3.0, 4.0, 5.0, 7.5, 10.0] {
        for x in x_grid() {
            let p = pe(p);
            let (t, h, s, th) = (
                arctan_p(p, x).unwrap(),
                arcsinh_p(p, x).unwrap(),
                arcsin_p(p, x).unwrap(),
                arctanh_p(p, x).unwrap(),
            );
            assert!(t <= h && h <= s && s <= th, "p={} x={x}", p.value());
            // gaps are about x^(p+1) / (p + 1); below an ulp of x they vanish in f64
            if x.powf(p.value()) / (p.value() * (p.value() + 1.0)) > 1e-11 {
                assert!(t < h && h < s && s < th, "p={} x={x}", p.value());
            }
        }
    }
}

#[test]
fn monotone_in_p() {
    let ps: Vec<f64> = (0..=32).map(|i| 2.0 + 0.25 * i as f64).collect();
    for x in [0.1, 0.3, 0.5, 0.7, 0.9, 0.99] {
        for w in ps.windows(2) {
            let (lo, hi) = (pe(w[0]), pe(w[1]));
            assert!(arcsin_p(hi, x).unwrap() < arcsin_p(lo, x).unwrap());
            assert!(arctanh_p(hi, x).unwrap() < arctanh_p(lo, x).unwrap());
            assert!(arctan_p(hi, x).unwrap() > arctan_p(lo, x).unwrap());
            // (1 + t^p)^(-1/p) grows with p, so arcsinh_p does too
            assert!(arcsinh_p(hi, x).unwrap() > arcsinh_p(lo, x).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn log_convex_in_p(p in 1.2..10.0f64, q in 1.2..10.0f64, x in 0.01..0.99f64) {
        for f in [ArcFn::Arcsin, ArcFn::Arctanh] {
            let mid = f.eval(pe(0.5 * (p + q)), x).unwrap();
            let ends = f.eval(pe(p), x).unwrap() * f.eval(pe(q), x).unwrap();
            prop_assert!(mid * mid <= ends * (1.0 + 1e-14));
        }
    }

    #[test]
    fn geometrically_convex_in_p(p in 1.2..10.0f64, q in 1.2..10.0f64, x in 0.01..0.99f64) {
        let g = arcsin_p(pe((p * q).sqrt()), x).unwrap();
        let ends = (arcsin_p(pe(p), x).unwrap() * arcsin_p(pe(q), x).unwrap()).sqrt();
        prop_assert!(g <= ends * (1.0 + 1e-14));
    }

    #[test]
    fn sin_round_trip(p in prop::sample::select(vec![2.0, 3.0, 5.0]), frac in 0.001..0.999f64) {
        let p = pe(p);
        let theta = frac * ptrig::pi_p(p) / 2.0;
        let back = arcsin_p(p, sin_p(p, theta).unwrap()).unwrap();
        prop_assert!((back - theta).abs() <= 1e-10);
    }

    #[test]
    fn sin_symmetries(p in 1.5..8.0f64, frac in 0.0..1.0f64) {
        let p = pe(p);
        let pi = ptrig::pi_p(p);
        let theta = frac * pi;
        let s = sin_p(p, theta).unwrap();
        prop_assert!((sin_p(p, theta + pi).unwrap() + s).abs() < 1e-12);
        prop_assert!((sin_p(p, -theta).unwrap() + s).abs() < 1e-12);
        prop_assert!((sin_p(p, pi - theta).unwrap() - s).abs() < 1e-12);
    }
}

#[test]
fn hypergeometric_and_quadrature_paths_agree() {
    for p in 2..=10 {
        let p = pe(p as f64);
        for i in 1..=19 {
            let x = 0.05 * i as f64;
            for f in ArcFn::ALL {
                let h = f.eval(p, x).unwrap();
                let q = f.eval_quadrature(p, x).unwrap();
                assert!((h - q).abs() <= 1e-10, "{} p={} x={x}", f.name(), p.value());
            }
            let (c, cq) = (
                ptrig::arccos_p(p, x).unwrap(),
                ptrig::arccos_p_quadrature(p, x).unwrap(),
            );
            assert!((c - cq).abs() <= 1e-10);
            let t = 1.0 + x;
            let (h, hq) = (
                ptrig::arccosh_p(p, t).unwrap(),
                ptrig::arccosh_p_quadrature(p, t).unwrap(),
            );
            assert!((h - hq).abs() <= 1e-10);
        }
    }
}

#[test]
fn constants_agree_across_representations() {
    for p in [2.0, 2.5, 3.0, 5.0, 10.0] {
        let p = pe(p);
        let c = ptrig::constants(p).unwrap();
        assert!((ptrig::pi_p_beta(p).unwrap() - c.pi_p).abs() <= 1e-10);
        assert!((ptrig::pi_p_quadrature(p).unwrap() - c.pi_p).abs() <= 1e-10);
        assert!((ptrig::b_p_digamma(p).unwrap() - c.b_p).abs() <= 1e-10);
        assert!((ptrig::arctan_p_quadrature(p, 1.0).unwrap() - c.b_p).abs() <= 1e-10);
        assert!((ptrig::arcsinh_p_quadrature(p, 1.0).unwrap() - c.c_p).abs() <= 1e-10);
        assert_eq!(c.a_p, c.pi_p / 2.0);
    }
}

#[test]
fn domain_guards() {
    assert!(PExponent::new(1.0).is_err());
    assert!(PExponent::new(f64::INFINITY).is_err());
    assert!(arcsin_p(pe(2.0), 1.5).is_err());
    assert!(arctanh_p(pe(2.0), 1.0).is_err());
}
