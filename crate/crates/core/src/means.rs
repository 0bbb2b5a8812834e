//! Bivariate means: classical, power, arithmetic-geometric, Bhatia-Li,
//! Schwab-Borchardt, Neuman's `L_p, P_p, T_p, M_p` and the generalized means
//! `L~_p, P~_p, T~_p, M~_p`.
//!
//! Every mean is homogeneous of degree one. Inputs are ordered so that
//! `a >= b`; `a == b` is admitted and every mean returns the common value.
//! With `x = (a - b) / (a + b)` and `A = (a + b) / 2` the arc-based means are
//! `A x / arc(x)`; the `*_normalized` evaluators return the ratio to `A`,
//! i.e. the mean at `a = 1 + x`, `b = 1 - x`.
//!
//! The Bhatia-Li mean is normalized so that it is a mean:
//! `1 / M_p(a, b) = n_p^(-1) int_0^inf dt / ((t^p + a^p)(t^p + b^p))^(1/p)`
//! with `n_p = int_0^inf (1 + t^p)^(-2/p) dt`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ptrig::{self, ArcFn, PExponent};
use crate::quadrature::{self, Integrand, Node};
use crate::special::hyp2f1_with_complement;

/// An ordered positive pair, `a >= b > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanInput {
    a: f64,
    b: f64,
    x: f64,
    arithmetic: f64,
}

impl MeanInput {
    /// Orders the pair; both entries must be positive and finite.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(Error::domain(
                "MeanInput",
                format!("need positive finite arguments, got ({a}, {b})"),
            ));
        }
        let (a, b) = if a >= b { (a, b) } else { (b, a) };
        Ok(MeanInput {
            a,
            b,
            x: (a - b) / (a + b),
            arithmetic: 0.5 * a + 0.5 * b,
        })
    }

    /// The pair `(1 + x, 1 - x)`, for `0 <= x < 1`.
    pub fn normalized(x: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&x) {
            return Err(Error::domain(
                "MeanInput::normalized",
                format!("need x in [0, 1), got {x}"),
            ));
        }
        Ok(MeanInput {
            a: 1.0 + x,
            b: 1.0 - x,
            x,
            arithmetic: 1.0,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `(a - b) / (a + b)`.
    pub fn x(&self) -> f64 {
        self.x
    }

    /// Arithmetic mean `A`.
    pub fn arithmetic(&self) -> f64 {
        self.arithmetic
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Classical {
    A,
    G,
    L,
    P,
    T,
    M,
    Q,
}

impl Classical {
    pub const ALL: [Classical; 7] = [
        Classical::A,
        Classical::G,
        Classical::L,
        Classical::P,
        Classical::T,
        Classical::M,
        Classical::Q,
    ];
}

/// Which arc function a mean is built on: `L` arctanh, `P` arcsin,
/// `T` arctan, `M` arcsinh.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ArcKind {
    L,
    P,
    T,
    M,
}

impl ArcKind {
    pub const ALL: [ArcKind; 4] = [ArcKind::L, ArcKind::P, ArcKind::T, ArcKind::M];

    pub fn arc(self) -> ArcFn {
        match self {
            ArcKind::L => ArcFn::Arctanh,
            ArcKind::P => ArcFn::Arcsin,
            ArcKind::T => ArcFn::Arctan,
            ArcKind::M => ArcFn::Arcsinh,
        }
    }

    fn letter(self) -> char {
        match self {
            ArcKind::L => 'L',
            ArcKind::P => 'P',
            ArcKind::T => 'T',
            ArcKind::M => 'M',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MeanFamily {
    Classical(Classical),
    Power,
    Agm,
    BhatiaLi,
    SchwabBorchardt,
    Neuman(ArcKind),
    Tilde(ArcKind),
}

impl fmt::Display for MeanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanFamily::Classical(c) => write!(f, "{c:?}"),
            MeanFamily::Power => write!(f, "A_p"),
            MeanFamily::Agm => write!(f, "AGM"),
            MeanFamily::BhatiaLi => write!(f, "BL_p"),
            MeanFamily::SchwabBorchardt => write!(f, "SB_p"),
            MeanFamily::Neuman(k) => write!(f, "{}_p", k.letter()),
            MeanFamily::Tilde(k) => write!(f, "{}~_p", k.letter()),
        }
    }
}

/// Generalized means are only proven to be means for `p >= 2`.
pub const TILDE_WARNING: &str = "p < 2: mean property not guaranteed";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanValue {
    pub value: f64,
    pub family: MeanFamily,
    pub p: Option<f64>,
    pub warning: Option<&'static str>,
}

impl MeanValue {
    fn new(value: f64, family: MeanFamily, p: Option<f64>) -> Self {
        MeanValue {
            value,
            family,
            p,
            warning: None,
        }
    }
}

/// `x / arc(x)` for the classical arc functions, 1 at `x = 0`.
pub fn classical_normalized(kind: Classical, x: f64) -> f64 {
    let ratio = |f: fn(f64) -> f64| if x == 0.0 { 1.0 } else { x / f(x) };
    match kind {
        Classical::A => 1.0,
        Classical::G => ((1.0 - x) * (1.0 + x)).sqrt(),
        Classical::L => ratio(f64::atanh),
        Classical::P => ratio(f64::asin),
        Classical::T => ratio(f64::atan),
        Classical::M => ratio(f64::asinh),
        Classical::Q => (1.0 + x * x).sqrt(),
    }
}

/// Classical means. `L = (a - b) / (ln a - ln b)` is evaluated as
/// `(a - b) / (2 artanh x)`, the same quantity without cancellation.
pub fn classical(kind: Classical, input: &MeanInput) -> MeanValue {
    let (a, b) = (input.a, input.b);
    let value = match kind {
        Classical::A => input.arithmetic,
        Classical::G => a.sqrt() * b.sqrt(),
        Classical::Q => a.hypot(b) / std::f64::consts::SQRT_2,
        _ if input.is_degenerate() => a,
        _ => input.arithmetic * classical_normalized(kind, input.x),
    };
    MeanValue::new(value, MeanFamily::Classical(kind), None)
}

/// Power mean `((a^p + b^p) / 2)^(1/p)`; the geometric mean at `p = 0`.
pub fn power_mean(p: f64, input: &MeanInput) -> Result<MeanValue> {
    if !p.is_finite() {
        return Err(Error::domain(
            "power_mean",
            format!("need finite p, got {p}"),
        ));
    }
    let (a, b) = (input.a, input.b);
    let value = if p == 0.0 || input.is_degenerate() {
        if input.is_degenerate() {
            a
        } else {
            a.sqrt() * b.sqrt()
        }
    } else {
        // 0.5 (1 + (b/a)^p) = 1 + 0.5 expm1(p ln(b/a)), accurate for small p
        let half_gap = 0.5 * (p * (b / a).ln()).exp_m1();
        a * (half_gap.ln_1p() / p).exp()
    };
    Ok(MeanValue::new(value, MeanFamily::Power, Some(p)))
}

/// Arithmetic-geometric mean, iterated until `|a_n - b_n| <= tol a_n`.
pub fn agm(input: &MeanInput, tol: f64) -> Result<MeanValue> {
    if !(tol > 0.0) {
        return Err(Error::domain("agm", format!("need tol > 0, got {tol}")));
    }
    let (mut a, mut b) = (input.a, input.b);
    for _ in 0..200 {
        if (a - b).abs() <= tol * a {
            return Ok(MeanValue::new(0.5 * (a + b), MeanFamily::Agm, None));
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    // the iteration stalls only when tol is below rounding level
    Ok(MeanValue::new(0.5 * (a + b), MeanFamily::Agm, None))
}

/// `n_p = int_0^inf (1 + t^p)^(-2/p) dt` by quadrature.
pub fn bhatia_li_normalizer(p: f64) -> Result<f64> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::domain("bhatia_li", format!("need p > 0, got {p}")));
    }
    let f = move |n: Node| (1.0 + n.t.powf(p)).powf(-2.0 / p);
    Ok(quadrature::integrate_semi_infinite(&Integrand::semi_infinite(0.0, f))?.value)
}

/// Bhatia-Li mean for `p > 0`.
pub fn bhatia_li(p: f64, input: &MeanInput) -> Result<MeanValue> {
    let norm = bhatia_li_normalizer(p)?;
    let value = if input.is_degenerate() {
        input.a
    } else {
        // t = a s turns the integral into J(b/a) / a
        let beta_p = (input.b / input.a).powf(p);
        let f = move |n: Node| {
            let sp = n.t.powf(p);
            ((1.0 + sp) * (sp + beta_p)).powf(-1.0 / p)
        };
        let j = quadrature::integrate_semi_infinite(&Integrand::semi_infinite(0.0, f))?.value;
        input.a * norm / j
    };
    Ok(MeanValue::new(value, MeanFamily::BhatiaLi, Some(p)))
}

fn check_positive_pair(x: f64, y: f64) -> Result<()> {
    if x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            "schwab_borchardt",
            format!("need positive finite arguments, got ({x}, {y})"),
        ))
    }
}

/// `SB_p(x, y) = y / F(1/p, 1/p; 1 + 1/p; 1 - (x/y)^p)`. Not symmetric.
pub fn schwab_borchardt(p: PExponent, x: f64, y: f64) -> Result<f64> {
    check_positive_pair(x, y)?;
    if x == y {
        return Ok(x);
    }
    let pv = p.value();
    let r = 1.0 / pv;
    let w = (x / y).powf(pv);
    let z = -(pv * (x / y).ln()).exp_m1();
    Ok(y / hyp2f1_with_complement(r, r, 1.0 + r, z, w)?)
}

/// `SB_p` through the inverse functions: `(x^p - y^p)^(1/p) / arccosh_p(x/y)`
/// for `x > y` and `(y^p - x^p)^(1/p) / arccos_p(x/y)` for `x < y`.
pub fn schwab_borchardt_arc(p: PExponent, x: f64, y: f64) -> Result<f64> {
    check_positive_pair(x, y)?;
    if x == y {
        return Ok(x);
    }
    let pv = p.value();
    let ratio = x / y;
    // |x^p - y^p|^(1/p) = y |ratio^p - 1|^(1/p)
    let gap = y * (pv * ratio.ln()).exp_m1().abs().powf(1.0 / pv);
    if x > y {
        Ok(gap / ptrig::arccosh_p(p, ratio)?)
    } else {
        Ok(gap / ptrig::arccos_p(p, ratio)?)
    }
}

/// Neuman's means `A_{p/2} v_p / arc_p(v_p)` with
/// `v_p = (a^{p/2} - b^{p/2}) / (a^{p/2} + b^{p/2})`.
pub fn neuman_mean(kind: ArcKind, p: PExponent, input: &MeanInput) -> Result<MeanValue> {
    let family = MeanFamily::Neuman(kind);
    if input.is_degenerate() {
        return Ok(MeanValue::new(input.a, family, Some(p.value())));
    }
    let half = 0.5 * p.value();
    let beta = (half * (input.b / input.a).ln()).exp();
    let v = -(half * (input.b / input.a).ln()).exp_m1() / (1.0 + beta);
    let power = power_mean(half, input)?.value;
    let value = power * v / kind.arc().eval(p, v)?;
    Ok(MeanValue::new(value, family, Some(p.value())))
}

/// `x / arc_p(x)`, the generalized mean at `a = 1 + x`, `b = 1 - x`.
pub fn tilde_normalized(kind: ArcKind, p: PExponent, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(1.0);
    }
    Ok(x / kind.arc().eval(p, x)?)
}

/// Generalized mean `A x / arc_p(x)`. For `p < 2` the value carries a
/// warning since the mean property is only established for `p >= 2`.
pub fn tilde_mean(kind: ArcKind, p: PExponent, input: &MeanInput) -> Result<MeanValue> {
    let value = if input.is_degenerate() {
        input.a
    } else {
        input.arithmetic * tilde_normalized(kind, p, input.x)?
    };
    let mut m = MeanValue::new(value, MeanFamily::Tilde(kind), Some(p.value()));
    if p.value() < 2.0 {
        m.warning = Some(TILDE_WARNING);
    }
    Ok(m)
}

/// The generalized mean with the arc function integrated by quadrature.
pub fn tilde_mean_quadrature(kind: ArcKind, p: PExponent, input: &MeanInput) -> Result<f64> {
    if input.is_degenerate() {
        return Ok(input.a);
    }
    Ok(input.arithmetic * input.x / kind.arc().eval_quadrature(p, input.x)?)
}

/// One labelled row per mean family, in a fixed order.
pub fn all_means(p: PExponent, input: &MeanInput) -> Result<Vec<(String, f64)>> {
    let pv = p.value();
    let mut rows = Vec::new();
    for kind in Classical::ALL {
        rows.push((format!("{kind:?}"), classical(kind, input).value));
    }
    rows.push(("AGM".to_string(), agm(input, 1e-15)?.value));
    rows.push((format!("BL_{pv}"), bhatia_li(pv, input)?.value));
    for kind in ArcKind::ALL {
        rows.push((
            format!("{}_{pv}", kind.letter()),
            neuman_mean(kind, p, input)?.value,
        ));
    }
    for kind in ArcKind::ALL {
        rows.push((
            format!("{}~_{pv}", kind.letter()),
            tilde_mean(kind, p, input)?.value,
        ));
    }
    Ok(rows)
}
