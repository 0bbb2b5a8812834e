//! Generalized inverse trigonometric and hyperbolic functions, the forward
//! `sin_p`, and the constants `pi_p`, `a_p`, `b_p`, `c_p`.
//!
//! For `p > 1` the arc functions are the integrals
//!
//! ```text
//! arcsin_p(x)  = int_0^x (1 - t^p)^(-1/p) dt      arctan_p(x)  = int_0^x (1 + t^p)^(-1) dt
//! arcsinh_p(x) = int_0^x (1 + t^p)^(-1/p) dt      arctanh_p(x) = int_0^x (1 - t^p)^(-1) dt
//! ```
//!
//! The returned values come from the hypergeometric forms
//!
//! ```text
//! arcsin_p(x)  = x F(1/p, 1/p; 1 + 1/p; x^p)
//! arctan_p(x)  = x (1 + x^p)^(-1/p) F(1/p, 1/p; 1 + 1/p; x^p / (1 + x^p))
//! arcsinh_p(x) = x (1 + x^p)^(-1/p) F(1, 1/p; 1 + 1/p; x^p / (1 + x^p))
//! arctanh_p(x) = x F(1, 1/p; 1 + 1/p; x^p)
//! ```
//!
//! and the `*_quadrature` functions integrate the definitions directly; they
//! serve as independent oracles.
//!
//! `sin_p` is the inverse of `arcsin_p` on `[0, pi_p / 2]`, is extended to
//! `[0, pi_p]` by `sin_p(pi_p - t) = sin_p(t)`, and to the real line by
//! oddness and period `2 pi_p`. (A literal period of `2 pi` would be
//! incompatible with the construction unless `p = 2`.)

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{self, find_root, Integrand, Node, RootBracket};
use crate::special::{self, hyp2f1_with_complement};

/// Agreement required between independent representations of a constant.
pub const CONSTANT_CONSISTENCY_TOL: f64 = 1e-10;
/// Residual tolerance of the root solve inside `sin_p`.
pub const SIN_P_ROOT_TOL: f64 = 1e-12;

/// The generalization parameter, `p > 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct PExponent(f64);

impl PExponent {
    pub fn new(p: f64) -> Result<Self> {
        if p > 1.0 && p.is_finite() {
            Ok(PExponent(p))
        } else {
            Err(Error::domain(
                "PExponent",
                format!("need 1 < p < inf, got {p}"),
            ))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `2p`, used by several inequalities.
    pub fn doubled(self) -> PExponent {
        PExponent(2.0 * self.0)
    }
}

impl TryFrom<f64> for PExponent {
    type Error = Error;
    fn try_from(p: f64) -> Result<Self> {
        PExponent::new(p)
    }
}

impl From<PExponent> for f64 {
    fn from(p: PExponent) -> f64 {
        p.0
    }
}

impl fmt::Display for PExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Largest pairwise disagreement between the representations of each
/// constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstantResiduals {
    pub pi_p: f64,
    pub b_p: f64,
    pub c_p: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PConstants {
    pub p: f64,
    pub pi_p: f64,
    pub a_p: f64,
    pub b_p: f64,
    pub c_p: f64,
    pub residuals: ConstantResiduals,
}

/// `2 pi / (p sin(pi / p))`.
pub fn pi_p(p: PExponent) -> f64 {
    let p = p.value();
    2.0 * PI / (p * (PI / p).sin())
}

fn check_unit(function: &'static str, x: f64, closed_hi: bool) -> Result<()> {
    let ok = if closed_hi {
        (0.0..=1.0).contains(&x)
    } else {
        (0.0..1.0).contains(&x)
    };
    if ok {
        Ok(())
    } else {
        let range = if closed_hi { "[0, 1]" } else { "[0, 1)" };
        Err(Error::domain(
            function,
            format!("need x in {range}, got {x}"),
        ))
    }
}

fn check_nonnegative(function: &'static str, x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            function,
            format!("need 0 <= x < inf, got {x}"),
        ))
    }
}

/// `1 - x^p` without cancellation for `x` near 1.
fn one_minus_pow(x: f64, p: f64) -> f64 {
    -(p * x.ln()).exp_m1()
}

/// `y F(1/p, 1/p; 1 + 1/p; z)` with `z = y^p` and `w = 1 - z` given.
fn arcsin_parts(p: f64, y: f64, z: f64, w: f64) -> Result<f64> {
    let r = 1.0 / p;
    Ok(y * hyp2f1_with_complement(r, r, 1.0 + r, z, w)?)
}

/// `y (1 + y^p)^(-1/p) F(a, 1/p; 1 + 1/p; z)` with `z = y^p / (1 + y^p)`
/// and `w = 1 / (1 + y^p)`.
fn pfaff_parts(p: f64, a: f64, y: f64, z: f64, w: f64) -> Result<f64> {
    let r = 1.0 / p;
    Ok(y * w.powf(r) * hyp2f1_with_complement(a, r, 1.0 + r, z, w)?)
}

pub fn arcsin_p(p: PExponent, x: f64) -> Result<f64> {
    check_unit("arcsin_p", x, true)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(0.5 * pi_p(p));
    }
    let p = p.value();
    arcsin_parts(p, x, x.powf(p), one_minus_pow(x, p))
}

/// `arcsin_p((1 - x^p)^(1/p))`.
pub fn arccos_p(p: PExponent, x: f64) -> Result<f64> {
    check_unit("arccos_p", x, true)?;
    if x == 0.0 {
        return Ok(0.5 * pi_p(p));
    }
    if x == 1.0 {
        return Ok(0.0);
    }
    let p = p.value();
    let xp = x.powf(p);
    let z = one_minus_pow(x, p);
    arcsin_parts(p, z.powf(1.0 / p), z, xp)
}

pub fn arctan_p(p: PExponent, x: f64) -> Result<f64> {
    check_nonnegative("arctan_p", x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let p = p.value();
    let xp = x.powf(p);
    let r = 1.0 / p;
    pfaff_parts(p, r, x, xp / (1.0 + xp), 1.0 / (1.0 + xp))
}

pub fn arcsinh_p(p: PExponent, x: f64) -> Result<f64> {
    check_nonnegative("arcsinh_p", x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let p = p.value();
    let xp = x.powf(p);
    pfaff_parts(p, 1.0, x, xp / (1.0 + xp), 1.0 / (1.0 + xp))
}

pub fn arctanh_p(p: PExponent, x: f64) -> Result<f64> {
    check_unit("arctanh_p", x, false)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let p = p.value();
    let r = 1.0 / p;
    Ok(x * hyp2f1_with_complement(1.0, r, 1.0 + r, x.powf(p), one_minus_pow(x, p))?)
}

/// `arcsinh_p((t^p - 1)^(1/p))` for `t >= 1`.
pub fn arccosh_p(p: PExponent, t: f64) -> Result<f64> {
    if !(t >= 1.0 && t.is_finite()) {
        return Err(Error::domain(
            "arccosh_p",
            format!("need 1 <= t < inf, got {t}"),
        ));
    }
    if t == 1.0 {
        return Ok(0.0);
    }
    let p = p.value();
    let inv = t.powf(-p);
    // s^p = t^p - 1, z = s^p / (1 + s^p) = 1 - t^(-p), w = t^(-p)
    let z = -(-p * t.ln()).exp_m1();
    let s = (t.powf(p) - 1.0).powf(1.0 / p);
    pfaff_parts(p, 1.0, s, z, inv)
}

/// Forward generalized sine on the whole real line.
pub fn sin_p(p: PExponent, theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::domain(
            "sin_p",
            format!("need a finite angle, got {theta}"),
        ));
    }
    if theta < 0.0 {
        return Ok(-sin_p(p, -theta)?);
    }
    let half_period = pi_p(p);
    let mut r = theta % (2.0 * half_period);
    let mut sign = 1.0;
    if r > half_period {
        r -= half_period;
        sign = -1.0;
    }
    if r > 0.5 * half_period {
        r = half_period - r;
    }
    Ok(sign * sin_p_quarter(p, r, 0.5 * half_period)?)
}

/// Inverse of `arcsin_p` on `[0, pi_p / 2]`.
fn sin_p_quarter(p: PExponent, theta: f64, quarter: f64) -> Result<f64> {
    if theta <= 0.0 {
        return Ok(0.0);
    }
    if theta >= quarter {
        return Ok(1.0);
    }
    let pv = p.value();
    let split = 0.5f64.powf(1.0 / pv);
    let theta_split = arcsin_p(p, split)?;
    if theta <= theta_split {
        let f = |s: f64| arcsin_p(p, s).map_or(f64::NAN, |v| v - theta);
        let bracket = RootBracket::new(f, 0.0, split)?;
        return solve(f, bracket);
    }
    // Near pi_p / 2, arcsin_p is flat in s but not in c = (1 - s^p)^(1/p).
    let g = |c: f64| arccos_p(p, c).map_or(f64::NAN, |v| v - theta);
    let bracket = RootBracket::new(g, 0.0, split)?;
    let c = solve(g, bracket)?;
    Ok(one_minus_pow(c, pv).powf(1.0 / pv))
}

/// Root solve at [`SIN_P_ROOT_TOL`]; when the tolerance is below the
/// resolution of `f`, fall back to the collapsed bracket.
fn solve<F: Fn(f64) -> f64>(f: F, bracket: RootBracket) -> Result<f64> {
    match find_root(&f, bracket, SIN_P_ROOT_TOL) {
        Ok(x) => Ok(x),
        Err(Error::NonConvergence { .. }) => {
            let (mut lo, mut hi, f_lo) = (bracket.lo, bracket.hi, bracket.f_lo);
            while hi - lo > 2.0 * f64::EPSILON * hi.abs() {
                let mid = 0.5 * (lo + hi);
                if (f(mid) < 0.0) == (f_lo < 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Ok(0.5 * (lo + hi))
        }
        Err(e) => Err(e),
    }
}

/// `b_p` from `(psi((1+p)/(2p)) - psi(1/(2p))) / (2p)`.
pub fn b_p_digamma(p: PExponent) -> Result<f64> {
    let p = p.value();
    Ok((special::digamma((1.0 + p) / (2.0 * p))? - special::digamma(1.0 / (2.0 * p))?) / (2.0 * p))
}

/// `pi_p` from `(2/p) B(1 - 1/p, 1/p)`.
pub fn pi_p_beta(p: PExponent) -> Result<f64> {
    let p = p.value();
    Ok(2.0 / p * special::beta(1.0 - 1.0 / p, 1.0 / p)?)
}

/// `pi_p` from the improper integral `2 arcsin_p(1)`.
pub fn pi_p_quadrature(p: PExponent) -> Result<f64> {
    Ok(2.0 * arcsin_p_quadrature(p, 1.0)?)
}

fn compute_constants(p: PExponent) -> Result<PConstants> {
    let pv = p.value();
    let r = 1.0 / pv;
    let scale = 0.5f64.powf(r);

    let pi_closed = pi_p(p);
    let pi_beta = pi_p_beta(p)?;
    let pi_quad = pi_p_quadrature(p)?;

    let b_hyp = scale * hyp2f1_with_complement(r, r, 1.0 + r, 0.5, 0.5)?;
    let b_psi = b_p_digamma(p)?;
    let b_quad = arctan_p_quadrature(p, 1.0)?;

    let c_hyp = scale * hyp2f1_with_complement(1.0, r, 1.0 + r, 0.5, 0.5)?;
    let c_quad = arcsinh_p_quadrature(p, 1.0)?;

    let spread = |vals: &[f64]| {
        let mut worst: f64 = 0.0;
        for (i, a) in vals.iter().enumerate() {
            for b in &vals[i + 1..] {
                worst = worst.max((a - b).abs());
            }
        }
        worst
    };
    let residuals = ConstantResiduals {
        pi_p: spread(&[pi_closed, pi_beta, pi_quad]),
        b_p: spread(&[b_hyp, b_psi, b_quad]),
        c_p: spread(&[c_hyp, c_quad]),
    };
    for (what, res) in [
        ("pi_p", residuals.pi_p),
        ("b_p", residuals.b_p),
        ("c_p", residuals.c_p),
    ] {
        if !(res <= CONSTANT_CONSISTENCY_TOL) {
            return Err(Error::Inconsistent {
                what,
                residual: res,
            });
        }
    }
    Ok(PConstants {
        p: pv,
        pi_p: pi_closed,
        a_p: 0.5 * pi_closed,
        b_p: b_hyp,
        c_p: c_hyp,
        residuals,
    })
}

/// Constants for `p`, cross-checked across their representations and
/// memoized per `p`.
pub fn constants(p: PExponent) -> Result<PConstants> {
    static CACHE: OnceLock<Mutex<HashMap<u64, PConstants>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = p.value().to_bits();
    if let Some(c) = cache.lock().expect("constants cache poisoned").get(&key) {
        return Ok(*c);
    }
    let c = compute_constants(p)?;
    cache
        .lock()
        .expect("constants cache poisoned")
        .insert(key, c);
    Ok(c)
}

fn quad_0_to_x<F: Fn(Node) -> f64>(x: f64, f: F) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(quadrature::integrate(&Integrand::new(0.0, x, f))?.value)
}

/// `arcsin_p` by quadrature; the `t -> 1` singularity at `x = 1` is graded.
pub fn arcsin_p_quadrature(p: PExponent, x: f64) -> Result<f64> {
    check_unit("arcsin_p", x, true)?;
    arcsin_quadrature_parts(p.value(), x, 1.0 - x)
}

/// `int_0^x (1 - t^p)^(-1/p) dt` with `1 - x` supplied.
fn arcsin_quadrature_parts(p: f64, x: f64, one_minus_x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    let f = move |n: Node| {
        let u = one_minus_x + n.to_hi;
        (-(p * (-u).ln_1p()).exp_m1()).powf(-1.0 / p)
    };
    let mut integrand = Integrand::new(0.0, x, f);
    if one_minus_x == 0.0 {
        integrand = integrand.singular_hi(1.0 / p);
    }
    Ok(quadrature::integrate(&integrand)?.value)
}

pub fn arccos_p_quadrature(p: PExponent, x: f64) -> Result<f64> {
    check_unit("arccos_p", x, true)?;
    let pv = p.value();
    let y = one_minus_pow(x, pv).powf(1.0 / pv);
    // 1 - y = 1 - (1 - x^p)^(1/p)
    let one_minus_y = if x == 0.0 {
        0.0
    } else {
        -((-x.powf(pv)).ln_1p() / pv).exp_m1()
    };
    arcsin_quadrature_parts(pv, y, one_minus_y)
}

pub fn arctan_p_quadrature(p: PExponent, x: f64) -> Result<f64> {
    check_nonnegative("arctan_p", x)?;
    let p = p.value();
    quad_0_to_x(x, move |n: Node| 1.0 / (1.0 + n.t.powf(p)))
}

pub fn arcsinh_p_quadrature(p: PExponent, x: f64) -> Result<f64> {
    check_nonnegative("arcsinh_p", x)?;
    let p = p.value();
    quad_0_to_x(x, move |n: Node| (1.0 + n.t.powf(p)).powf(-1.0 / p))
}

pub fn arctanh_p_quadrature(p: PExponent, x: f64) -> Result<f64> {
    check_unit("arctanh_p", x, false)?;
    let p = p.value();
    let one_minus_x = 1.0 - x;
    quad_0_to_x(x, move |n: Node| {
        let u = one_minus_x + n.to_hi;
        1.0 / (-(p * (-u).ln_1p()).exp_m1())
    })
}

pub fn arccosh_p_quadrature(p: PExponent, t: f64) -> Result<f64> {
    if !(t >= 1.0 && t.is_finite()) {
        return Err(Error::domain(
            "arccosh_p",
            format!("need 1 <= t < inf, got {t}"),
        ));
    }
    let pv = p.value();
    arcsinh_p_quadrature(p, (t.powf(pv) - 1.0).powf(1.0 / pv))
}

/// The four arc functions that define the generalized means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArcFn {
    Arcsin,
    Arctan,
    Arcsinh,
    Arctanh,
}

impl ArcFn {
    pub const ALL: [ArcFn; 4] = [ArcFn::Arcsin, ArcFn::Arctan, ArcFn::Arcsinh, ArcFn::Arctanh];

    pub fn name(self) -> &'static str {
        match self {
            ArcFn::Arcsin => "arcsin_p",
            ArcFn::Arctan => "arctan_p",
            ArcFn::Arcsinh => "arcsinh_p",
            ArcFn::Arctanh => "arctanh_p",
        }
    }

    pub fn eval(self, p: PExponent, x: f64) -> Result<f64> {
        match self {
            ArcFn::Arcsin => arcsin_p(p, x),
            ArcFn::Arctan => arctan_p(p, x),
            ArcFn::Arcsinh => arcsinh_p(p, x),
            ArcFn::Arctanh => arctanh_p(p, x),
        }
    }

    pub fn eval_quadrature(self, p: PExponent, x: f64) -> Result<f64> {
        match self {
            ArcFn::Arcsin => arcsin_p_quadrature(p, x),
            ArcFn::Arctan => arctan_p_quadrature(p, x),
            ArcFn::Arcsinh => arcsinh_p_quadrature(p, x),
            ArcFn::Arctanh => arctanh_p_quadrature(p, x),
        }
    }

    /// The classical (`p = 2`) function.
    pub fn classical(self, x: f64) -> f64 {
        match self {
            ArcFn::Arcsin => x.asin(),
            ArcFn::Arctan => x.atan(),
            ArcFn::Arcsinh => x.asinh(),
            ArcFn::Arctanh => x.atanh(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: f64) -> PExponent {
        PExponent::new(v).unwrap()
    }

    #[test]
    fn exponent_guard() {
        for v in [1.0, 0.5, -2.0, f64::NAN, f64::INFINITY] {
            assert!(PExponent::new(v).is_err(), "{v}");
        }
        assert_eq!(p(3.0).doubled().value(), 6.0);
    }

    #[test]
    fn classical_values() {
        assert!((arcsin_p(p(2.0), 0.5).unwrap() - PI / 6.0).abs() < 1e-14);
        assert!((arccos_p(p(2.0), 0.5).unwrap() - PI / 3.0).abs() < 1e-14);
        assert!((arctan_p(p(2.0), 1.0).unwrap() - PI / 4.0).abs() < 1e-14);
        assert!((arcsinh_p(p(2.0), 1.0).unwrap() - 0.881_373_587_019_543).abs() < 1e-14);
        assert!((arctanh_p(p(2.0), 0.5).unwrap() - 0.549_306_144_334_054_8).abs() < 1e-14);
        assert!((arccosh_p(p(2.0), 2.0).unwrap() - 1.316_957_896_924_816_6).abs() < 1e-14);
    }

    #[test]
    fn endpoints() {
        for v in [1.5, 2.0, 3.0, 7.0] {
            assert_eq!(arcsin_p(p(v), 0.0).unwrap(), 0.0);
            assert_eq!(arcsin_p(p(v), 1.0).unwrap(), 0.5 * pi_p(p(v)));
            assert_eq!(arccos_p(p(v), 1.0).unwrap(), 0.0);
            assert_eq!(arccos_p(p(v), 0.0).unwrap(), 0.5 * pi_p(p(v)));
            assert_eq!(arccosh_p(p(v), 1.0).unwrap(), 0.0);
            assert_eq!(sin_p(p(v), 0.0).unwrap(), 0.0);
            assert_eq!(sin_p(p(v), 0.5 * pi_p(p(v))).unwrap(), 1.0);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(arcsin_p(p(3.0), 1.1).is_err());
        assert!(arcsin_p(p(3.0), -0.1).is_err());
        assert!(arctanh_p(p(3.0), 1.0).is_err());
        assert!(arctan_p(p(3.0), -1.0).is_err());
        assert!(arccosh_p(p(3.0), 0.9).is_err());
        assert!(sin_p(p(3.0), f64::NAN).is_err());
    }

    #[test]
    fn hypergeometric_vs_quadrature_examples() {
        let cases: [(ArcFn, f64, f64); 4] = [
            (ArcFn::Arcsin, 4.0, 0.9),
            (ArcFn::Arctan, 3.0, 0.8),
            (ArcFn::Arcsinh, 5.0, 0.6),
            (ArcFn::Arctanh, 4.0, 0.9),
        ];
        for (f, pv, x) in cases {
            let h = f.eval(p(pv), x).unwrap();
            let q = f.eval_quadrature(p(pv), x).unwrap();
            assert!(
                (h - q).abs() < 1e-12,
                "{} p={pv} x={x}: {h} vs {q}",
                f.name()
            );
        }
        let h = arccos_p(p(3.0), 0.7).unwrap();
        let q = arccos_p_quadrature(p(3.0), 0.7).unwrap();
        assert!((h - q).abs() < 1e-12);
        let h = arccosh_p(p(3.0), 1.5).unwrap();
        let q = arccosh_p_quadrature(p(3.0), 1.5).unwrap();
        assert!((h - q).abs() < 1e-12);
    }

    #[test]
    fn constants_examples() {
        let c = constants(p(2.0)).unwrap();
        assert!((c.pi_p - PI).abs() < 1e-14);
        assert!((c.a_p - PI / 2.0).abs() < 1e-14);
        assert!((c.b_p - PI / 4.0).abs() < 1e-14);
        assert!((c.c_p - 2f64.sqrt().ln_1p()).abs() < 1e-14);
        assert!(c.residuals.pi_p <= 1e-12 && c.residuals.b_p <= 1e-12 && c.residuals.c_p <= 1e-12);

        let c4 = constants(p(4.0)).unwrap();
        assert!((c4.pi_p - PI / 2f64.sqrt()).abs() < 1e-14);
        assert!((pi_p_quadrature(p(4.0)).unwrap() - 2.221_441_469_079_183).abs() < 1e-12);

        let b3 = constants(p(3.0)).unwrap().b_p;
        let psi =
            (special::digamma(2.0 / 3.0).unwrap() - special::digamma(1.0 / 6.0).unwrap()) / 6.0;
        assert!((b3 - psi).abs() < 1e-13);
        // cached values are identical
        assert_eq!(constants(p(3.0)).unwrap(), constants(p(3.0)).unwrap());
    }

    #[test]
    fn sin_p_examples() {
        let s = sin_p(p(3.0), 0.7).unwrap();
        assert!((arcsin_p(p(3.0), s).unwrap() - 0.7).abs() < 1e-11);
        // periodicity and symmetry
        let pp = pi_p(p(3.0));
        for t in [0.3, 1.1, 1.9] {
            let s = sin_p(p(3.0), t).unwrap();
            assert!((sin_p(p(3.0), pp - t).unwrap() - s).abs() < 1e-12);
            assert!((sin_p(p(3.0), t + 2.0 * pp).unwrap() - s).abs() < 1e-12);
            assert!((sin_p(p(3.0), -t).unwrap() + s).abs() < 1e-15);
            assert!((sin_p(p(3.0), t + pp).unwrap() + s).abs() < 1e-12);
        }
        for t in [0.1, 0.5, 1.0, 1.5] {
            assert!((sin_p(p(2.0), t).unwrap() - t.sin()).abs() < 1e-12);
        }
    }
}
