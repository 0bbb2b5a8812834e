//! Adaptive quadrature on finite and semi-infinite intervals, and bracketed
//! root finding.
//!
//! Every integral is reduced to an integral over the unit interval. Panels of
//! the unit interval are stored as distances from the nearer endpoint, so a
//! node close to an endpoint keeps full relative precision, and the
//! evaluator receives that distance in [`Node`] instead of having to recover
//! it as `hi - t`. Integrands such as `(1 - t^p)^(-1/p)` stay accurate right
//! up to `t = 1` this way.
//!
//! Endpoint singularities of the form `(t - lo)^(-alpha)` or
//! `(hi - t)^(-alpha)` with `alpha < 1` are flattened by the graded
//! substitution `hi - t = L (1 - s)^m` (mirrored at `lo`), where
//! `m = max(2, ceil(2 / (1 - alpha)))`. The singular factor becomes
//! `(1 - s)^(m (1 - alpha) - 1)`, whose exponent is at least one. When both
//! ends are singular the interval is split at its midpoint.
//!
//! Semi-infinite integrals use the compactification `t = lo + s / (1 - s)`.
//! Nodes with `1 - s < 1e-150` (that is `t > 1e150`) contribute nothing; the
//! integrand is required to decay like `t^(-beta)`, `beta > 1`.
//!
//! Two independent schemes are available: globally adaptive Gauss-Kronrod
//! (7/15 points, the default) and tanh-sinh (double exponential) with level
//! halving. The second one does not use the graded substitution.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use crate::error::{Error, Result};

pub const DEFAULT_ABS_TOL: f64 = 1e-13;
pub const DEFAULT_REL_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_PANELS: usize = 10_000;

/// Below this distance from 1 the compactified tail is dropped.
const TAIL_CUTOFF: f64 = 1e-150;

/// Absolute and relative accuracy goals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: DEFAULT_ABS_TOL,
            rel: DEFAULT_REL_TOL,
        }
    }
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Result<Self> {
        if abs > 0.0 && rel > 0.0 && abs.is_finite() && rel.is_finite() {
            Ok(Tolerance { abs, rel })
        } else {
            Err(Error::domain(
                "Tolerance::new",
                format!("tolerances must be positive and finite, got abs={abs}, rel={rel}"),
            ))
        }
    }

    /// Error level accepted for an integral of the given value.
    pub fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }
}

/// A quadrature node together with its exact distances to both ends of the
/// integration interval. `to_hi` is infinite on semi-infinite intervals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub t: f64,
    pub from_lo: f64,
    pub to_hi: f64,
}

/// Behaviour of the integrand at one end of the interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Endpoint {
    Regular,
    /// Integrable singularity like `distance^(-alpha)`, `alpha < 1`.
    Singular {
        alpha: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
    pub lo_end: Endpoint,
    pub hi_end: Endpoint,
}

impl Domain {
    pub fn is_semi_infinite(&self) -> bool {
        self.hi == f64::INFINITY
    }
}

/// An integrand with its interval, endpoint behaviour and accuracy goal.
pub struct Integrand<F> {
    evaluator: F,
    domain: Domain,
    tol: Tolerance,
    max_panels: usize,
}

impl<F: Fn(Node) -> f64> Integrand<F> {
    pub fn new(lo: f64, hi: f64, evaluator: F) -> Self {
        Integrand {
            evaluator,
            domain: Domain {
                lo,
                hi,
                lo_end: Endpoint::Regular,
                hi_end: Endpoint::Regular,
            },
            tol: Tolerance::default(),
            max_panels: DEFAULT_MAX_PANELS,
        }
    }

    /// Integrand on `[lo, +inf)`.
    pub fn semi_infinite(lo: f64, evaluator: F) -> Self {
        Self::new(lo, f64::INFINITY, evaluator)
    }

    pub fn singular_lo(mut self, alpha: f64) -> Self {
        self.domain.lo_end = Endpoint::Singular { alpha };
        self
    }

    pub fn singular_hi(mut self, alpha: f64) -> Self {
        self.domain.hi_end = Endpoint::Singular { alpha };
        self
    }

    pub fn tolerance(mut self, tol: Tolerance) -> Self {
        self.tol = tol;
        self
    }

    pub fn max_panels(mut self, max_panels: usize) -> Self {
        self.max_panels = max_panels;
        self
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }
}

/// Adapts a function of `t` alone into a node evaluator.
pub fn plain<G: Fn(f64) -> f64>(g: G) -> impl Fn(Node) -> f64 {
    move |node: Node| g(node.t)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    /// Number of panels (Gauss-Kronrod) or refinement levels (tanh-sinh).
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    GaussKronrod,
    TanhSinh,
}

/// Integrates with the default adaptive Gauss-Kronrod scheme.
pub fn integrate<F: Fn(Node) -> f64>(f: &Integrand<F>) -> Result<QuadResult> {
    integrate_with(Scheme::GaussKronrod, f)
}

/// Integrates over `[lo, +inf)`; the integrand must have been built with
/// [`Integrand::semi_infinite`].
pub fn integrate_semi_infinite<F: Fn(Node) -> f64>(f: &Integrand<F>) -> Result<QuadResult> {
    if !f.domain.is_semi_infinite() {
        return Err(Error::InvalidDomain {
            lo: f.domain.lo,
            hi: f.domain.hi,
            reason: "expected an interval of the form [lo, inf)".into(),
        });
    }
    integrate(f)
}

pub fn integrate_with<F: Fn(Node) -> f64>(scheme: Scheme, f: &Integrand<F>) -> Result<QuadResult> {
    let pieces = pieces_for(&f.domain, scheme)?;
    let n = pieces.len() as f64;
    let tol = Tolerance {
        abs: f.tol.abs / n,
        rel: f.tol.rel,
    };
    let budget = (f.max_panels / pieces.len()).max(2);
    let mut total = QuadResult {
        value: 0.0,
        error_estimate: 0.0,
        subdivisions: 0,
    };
    for piece in &pieces {
        let g = |u: Unit| piece.eval(&f.evaluator, u);
        let r = match scheme {
            Scheme::GaussKronrod => gauss_kronrod_unit(&g, tol, budget)?,
            Scheme::TanhSinh => tanh_sinh_unit(&g, tol)?,
        };
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.subdivisions += r.subdivisions;
    }
    Ok(total)
}

/// Position in the unit interval through both exact distances.
#[derive(Debug, Clone, Copy)]
struct Unit {
    from0: f64,
    to1: f64,
}

#[derive(Debug, Clone, Copy)]
enum Grade {
    None,
    Lo(f64),
    Hi(f64),
}

#[derive(Debug, Clone, Copy)]
enum Map {
    /// `t` runs over `[start, start + len]`; `base_lo` and `base_hi` are the
    /// distances of that sub-interval to the ends of the full interval.
    Finite {
        start: f64,
        len: f64,
        base_lo: f64,
        base_hi: f64,
    },
    Compact {
        start: f64,
    },
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    map: Map,
    grade: Grade,
}

fn grading_exponent(alpha: f64) -> Result<f64> {
    if alpha.is_nan() || alpha >= 1.0 {
        return Err(Error::domain(
            "integrate",
            format!("endpoint singularity exponent must be < 1, got {alpha}"),
        ));
    }
    Ok((2.0 / (1.0 - alpha)).ceil().max(2.0))
}

fn pieces_for(domain: &Domain, scheme: Scheme) -> Result<Vec<Piece>> {
    let Domain {
        lo,
        hi,
        lo_end,
        hi_end,
    } = *domain;
    if !lo.is_finite() || hi.is_nan() || !(lo < hi) {
        return Err(Error::InvalidDomain {
            lo,
            hi,
            reason: "need finite lo < hi".into(),
        });
    }
    let graded = scheme == Scheme::GaussKronrod;
    let exponent = |end: Endpoint| -> Result<Option<f64>> {
        match end {
            Endpoint::Regular => Ok(None),
            Endpoint::Singular { alpha } => grading_exponent(alpha).map(Some),
        }
    };
    let m_lo = exponent(lo_end)?;
    let m_hi = exponent(hi_end)?;

    if hi == f64::INFINITY {
        let grade = match (graded, m_lo) {
            (true, Some(m)) => Grade::Lo(m),
            _ => Grade::None,
        };
        return Ok(vec![Piece {
            map: Map::Compact { start: lo },
            grade,
        }]);
    }

    let len = hi - lo;
    if !len.is_finite() {
        return Err(Error::InvalidDomain {
            lo,
            hi,
            reason: "interval length overflows".into(),
        });
    }
    if !graded {
        return Ok(vec![Piece {
            map: Map::Finite {
                start: lo,
                len,
                base_lo: 0.0,
                base_hi: 0.0,
            },
            grade: Grade::None,
        }]);
    }
    Ok(match (m_lo, m_hi) {
        (Some(a), Some(b)) => {
            let half = 0.5 * len;
            vec![
                Piece {
                    map: Map::Finite {
                        start: lo,
                        len: half,
                        base_lo: 0.0,
                        base_hi: len - half,
                    },
                    grade: Grade::Lo(a),
                },
                Piece {
                    map: Map::Finite {
                        start: lo + half,
                        len: len - half,
                        base_lo: half,
                        base_hi: 0.0,
                    },
                    grade: Grade::Hi(b),
                },
            ]
        }
        (m_lo, m_hi) => {
            let grade = match (m_lo, m_hi) {
                (Some(m), _) => Grade::Lo(m),
                (_, Some(m)) => Grade::Hi(m),
                _ => Grade::None,
            };
            vec![Piece {
                map: Map::Finite {
                    start: lo,
                    len,
                    base_lo: 0.0,
                    base_hi: 0.0,
                },
                grade,
            }]
        }
    })
}

/// `s = u^m` near 0, returned with its jacobian.
fn grade_toward_zero(u: Unit, m: f64) -> (Unit, f64) {
    let s = u.from0.powf(m);
    let rest = if u.from0 < 0.5 {
        1.0 - s
    } else {
        -(m * (-u.to1).ln_1p()).exp_m1()
    };
    (
        Unit {
            from0: s,
            to1: rest,
        },
        m * u.from0.powf(m - 1.0),
    )
}

impl Piece {
    fn eval<F: Fn(Node) -> f64>(&self, f: &F, u: Unit) -> Result<f64> {
        let (s, jac) = match self.grade {
            Grade::None => (u, 1.0),
            Grade::Lo(m) => grade_toward_zero(u, m),
            Grade::Hi(m) => {
                let (r, jac) = grade_toward_zero(
                    Unit {
                        from0: u.to1,
                        to1: u.from0,
                    },
                    m,
                );
                (
                    Unit {
                        from0: r.to1,
                        to1: r.from0,
                    },
                    jac,
                )
            }
        };
        if jac == 0.0 {
            return Ok(0.0);
        }
        let (node, scale) = match self.map {
            Map::Finite {
                start,
                len,
                base_lo,
                base_hi,
            } => {
                let d_lo = len * s.from0;
                let d_hi = len * s.to1;
                let t = if d_lo <= d_hi {
                    start + d_lo
                } else {
                    start + len - d_hi
                };
                (
                    Node {
                        t,
                        from_lo: base_lo + d_lo,
                        to_hi: base_hi + d_hi,
                    },
                    len,
                )
            }
            Map::Compact { start } => {
                if s.to1 < TAIL_CUTOFF {
                    return Ok(0.0);
                }
                let offset = s.from0 / s.to1;
                (
                    Node {
                        t: start + offset,
                        from_lo: offset,
                        to_hi: f64::INFINITY,
                    },
                    1.0 / (s.to1 * s.to1),
                )
            }
        };
        let value = f(node);
        if !value.is_finite() {
            return Err(Error::NonFinite { t: node.t });
        }
        Ok(value * scale * jac)
    }
}

// Gauss-Kronrod 7/15 abscissae and weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Anchor {
    Zero,
    One,
}

fn unit_at(anchor: Anchor, d: f64) -> Unit {
    match anchor {
        Anchor::Zero => Unit {
            from0: d,
            to1: 1.0 - d,
        },
        Anchor::One => Unit {
            from0: 1.0 - d,
            to1: d,
        },
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    anchor: Anchor,
    near: f64,
    far: f64,
    value: f64,
    error: f64,
    seq: u64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

fn kronrod_panel<G: Fn(Unit) -> Result<f64>>(
    g: &G,
    anchor: Anchor,
    near: f64,
    far: f64,
    seq: u64,
) -> Result<Panel> {
    let center = 0.5 * (near + far);
    let half = 0.5 * (far - near);
    let at = |d: f64| g(unit_at(anchor, d));

    let fc = at(center)?;
    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = res_k.abs();
    let mut left = [0.0; 7];
    let mut right = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = at(center - dx)?;
        let f2 = at(center + dx)?;
        left[j] = f1;
        right[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((left[j] - mean).abs() + (right[j] - mean).abs());
    }
    let value = res_k * half;
    res_abs *= half;
    res_asc *= half;
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Panel {
        anchor,
        near,
        far,
        value,
        error,
        seq,
    })
}

fn gauss_kronrod_unit<G: Fn(Unit) -> Result<f64>>(
    g: &G,
    tol: Tolerance,
    max_panels: usize,
) -> Result<QuadResult> {
    let mut seq = 0u64;
    let mut heap = BinaryHeap::new();
    for anchor in [Anchor::Zero, Anchor::One] {
        heap.push(kronrod_panel(g, anchor, 0.0, 0.5, seq)?);
        seq += 1;
    }
    // Panels too narrow to split keep their estimate.
    let mut frozen_value = 0.0;
    let mut frozen_error = 0.0;
    let mut frozen_count = 0usize;

    loop {
        let value = frozen_value + heap.iter().map(|p| p.value).sum::<f64>();
        let error = frozen_error + heap.iter().map(|p| p.error).sum::<f64>();
        let panels = heap.len() + frozen_count;
        if error <= tol.target(value) {
            return Ok(QuadResult {
                value,
                error_estimate: error,
                subdivisions: panels,
            });
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => {
                return Err(Error::NonConvergence {
                    what: "integrate",
                    detail: format!(
                        "panels at resolution limit; value {value:e}, error estimate {error:e}"
                    ),
                })
            }
        };
        if panels >= max_panels {
            return Err(Error::NonConvergence {
                what: "integrate",
                detail: format!(
                    "panel budget {max_panels} exhausted; value {value:e}, error estimate {error:e}"
                ),
            });
        }
        let mid = 0.5 * (worst.near + worst.far);
        if !(mid > worst.near && mid < worst.far) || worst.far - worst.near <= 1e-15 * worst.far {
            frozen_value += worst.value;
            frozen_error += worst.error;
            frozen_count += 1;
            continue;
        }
        heap.push(kronrod_panel(g, worst.anchor, worst.near, mid, seq)?);
        heap.push(kronrod_panel(g, worst.anchor, mid, worst.far, seq + 1)?);
        seq += 2;
    }
}

const TANH_SINH_TAU_MAX: f64 = 6.0;
const TANH_SINH_MAX_LEVEL: usize = 11;

/// Node of the tanh-sinh rule at parameter `tau`, with its weight.
fn tanh_sinh_node(tau: f64) -> Option<(Unit, f64)> {
    let v = 0.5 * PI * tau.sinh();
    let e = (-2.0 * v.abs()).exp();
    if e == 0.0 {
        return None;
    }
    let near = e / (1.0 + e);
    let far = 1.0 / (1.0 + e);
    let unit = if tau >= 0.0 {
        Unit {
            from0: far,
            to1: near,
        }
    } else {
        Unit {
            from0: near,
            to1: far,
        }
    };
    let weight = PI * tau.cosh() * e / ((1.0 + e) * (1.0 + e));
    if weight == 0.0 || unit.from0 == 0.0 || unit.to1 == 0.0 {
        return None;
    }
    Some((unit, weight))
}

fn tanh_sinh_unit<G: Fn(Unit) -> Result<f64>>(g: &G, tol: Tolerance) -> Result<QuadResult> {
    let mut step = 1.0;
    let mut sum = {
        let (u, w) = tanh_sinh_node(0.0).expect("center node");
        w * g(u)?
    };
    let k_max = (TANH_SINH_TAU_MAX / step) as i64;
    for k in 1..=k_max {
        let tau = k as f64 * step;
        for tau in [tau, -tau] {
            if let Some((u, w)) = tanh_sinh_node(tau) {
                sum += w * g(u)?;
            }
        }
    }
    let mut estimate = step * sum;
    for level in 1..=TANH_SINH_MAX_LEVEL {
        step *= 0.5;
        let k_max = (TANH_SINH_TAU_MAX / step) as i64;
        let mut k = 1;
        while k <= k_max {
            let tau = k as f64 * step;
            for tau in [tau, -tau] {
                if let Some((u, w)) = tanh_sinh_node(tau) {
                    sum += w * g(u)?;
                }
            }
            k += 2;
        }
        let refined = step * sum;
        let error = (refined - estimate).abs();
        estimate = refined;
        if level >= 3 && error <= tol.target(refined) {
            return Ok(QuadResult {
                value: refined,
                error_estimate: error,
                subdivisions: level,
            });
        }
    }
    Err(Error::NonConvergence {
        what: "integrate (tanh-sinh)",
        detail: format!("level limit reached with estimate {estimate:e}"),
    })
}

/// A sign-changing bracket `[lo, hi]` for [`find_root`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl RootBracket {
    /// Evaluates `f` at both ends. An exact zero at an end is accepted.
    pub fn new<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<Self> {
        Self::from_values(lo, hi, f(lo), f(hi))
    }

    pub fn from_values(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidDomain {
                lo,
                hi,
                reason: "root bracket needs finite lo < hi".into(),
            });
        }
        if f_lo.is_nan() || f_hi.is_nan() || f_lo * f_hi > 0.0 {
            return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
        }
        Ok(RootBracket { lo, hi, f_lo, f_hi })
    }
}

const ROOT_MAX_ITER: usize = 200;

/// Brent's method: inverse quadratic and secant steps, falling back to
/// bisection, always keeping a sign change. Returns `x` inside the bracket
/// with `|f(x)| <= tol`.
pub fn find_root<F: Fn(f64) -> f64>(f: F, bracket: RootBracket, tol: f64) -> Result<f64> {
    let RootBracket { lo, hi, f_lo, f_hi } = bracket;
    if f_lo.abs() <= tol {
        return Ok(lo);
    }
    if f_hi.abs() <= tol {
        return Ok(hi);
    }
    let (mut a, mut b, mut fa, mut fb) = (lo, hi, f_lo, f_hi);
    let (mut c, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..ROOT_MAX_ITER {
        if (fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        if fb.abs() <= tol {
            return Ok(b);
        }
        let xtol = 2.0 * f64::EPSILON * b.abs() + 1e-300;
        let m = 0.5 * (c - b);
        if m.abs() <= xtol {
            break;
        }
        if e.abs() >= xtol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (xtol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > xtol { d } else { xtol.copysign(m) };
        fb = f(b);
        if fb.is_nan() {
            return Err(Error::NonFinite { t: b });
        }
    }
    if fc.abs() <= tol {
        return Ok(c);
    }
    Err(Error::NonConvergence {
        what: "find_root",
        detail: format!(
            "bracket collapsed at x = {b} with |f| = {:e} > {tol:e}",
            fb.abs()
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn constant_integrand() {
        let r = integrate(&Integrand::new(0.0, 1.0, plain(|_| 1.0))).unwrap();
        assert!(close(r.value, 1.0, 1e-15));
    }

    #[test]
    fn gauss_kronrod_is_exact_for_polynomials() {
        // degree 21 is the Kronrod limit
        let r = integrate(&Integrand::new(
            -1.0,
            2.0,
            plain(|t: f64| t.powi(20) - 3.0 * t),
        ))
        .unwrap();
        let exact = (2f64.powi(21) + 1.0) / 21.0 - 3.0 * (4.0 - 1.0) / 2.0;
        assert!(close(r.value, exact, 1e-9 * exact.abs()));
    }

    #[test]
    fn arcsine_endpoint_singularity() {
        // 1 - t^2 = (1 - t)(1 + t) with 1 - t taken from the node
        let f = |n: Node| 1.0 / (n.to_hi * (1.0 + n.t)).sqrt();
        let r = integrate(&Integrand::new(0.0, 1.0, f).singular_hi(0.5)).unwrap();
        assert!(close(r.value, PI / 2.0, 1e-13), "{}", r.value);
        let r = integrate_with(Scheme::TanhSinh, &Integrand::new(0.0, 1.0, f)).unwrap();
        assert!(close(r.value, PI / 2.0, 1e-13), "{}", r.value);
    }

    #[test]
    fn both_ends_singular() {
        // ∫ t^{-1/2} (1-t)^{-1/2} = π
        let f = |n: Node| 1.0 / (n.from_lo * n.to_hi).sqrt();
        let r = integrate(
            &Integrand::new(0.0, 1.0, f)
                .singular_lo(0.5)
                .singular_hi(0.5),
        )
        .unwrap();
        assert!(close(r.value, PI, 1e-12), "{}", r.value);
    }

    #[test]
    fn semi_infinite_examples() {
        let r = integrate_semi_infinite(&Integrand::semi_infinite(
            0.0,
            plain(|t| 1.0 / (1.0 + t * t)),
        ))
        .unwrap();
        assert!(close(r.value, PI / 2.0, 1e-13));
        let r = integrate_semi_infinite(&Integrand::semi_infinite(
            0.0,
            plain(|t| (1.0 + t).powi(-2)),
        ))
        .unwrap();
        assert!(close(r.value, 1.0, 1e-13));
        let r = integrate_semi_infinite(&Integrand::semi_infinite(
            0.0,
            plain(|t| (1.0 + t * t).powf(-2.0 / 2.0)),
        ))
        .unwrap();
        assert!(close(r.value, PI / 2.0, 1e-13));
        // shifted start
        let r = integrate(&Integrand::semi_infinite(1.0, plain(|t| 1.0 / (t * t)))).unwrap();
        assert!(close(r.value, 1.0, 1e-13));
    }

    #[test]
    fn semi_infinite_requires_infinite_domain() {
        let f = Integrand::new(0.0, 1.0, plain(|t| t));
        assert!(matches!(
            integrate_semi_infinite(&f),
            Err(Error::InvalidDomain { .. })
        ));
    }

    #[test]
    fn invalid_domains() {
        for (lo, hi) in [
            (1.0, 1.0),
            (2.0, 1.0),
            (f64::NAN, 1.0),
            (f64::NEG_INFINITY, 0.0),
        ] {
            let f = Integrand::new(lo, hi, plain(|t| t));
            assert!(
                matches!(integrate(&f), Err(Error::InvalidDomain { .. })),
                "{lo} {hi}"
            );
        }
        let f = Integrand::new(0.0, 1.0, plain(|t| t)).singular_lo(1.0);
        assert!(matches!(integrate(&f), Err(Error::Domain { .. })));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let f = Integrand::new(
            0.0,
            1.0,
            plain(|t: f64| (200.0 * t).sin() * (30.0 * t).cos()),
        )
        .max_panels(4);
        assert!(matches!(integrate(&f), Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let f = Integrand::new(-1.0, 1.0, plain(|t: f64| 1.0 / t.abs().sqrt() * f64::NAN));
        assert!(matches!(integrate(&f), Err(Error::NonFinite { .. })));
    }

    #[test]
    fn root_examples() {
        let r = find_root(
            |x| x - 0.5,
            RootBracket::new(|x| x - 0.5, 0.0, 1.0).unwrap(),
            1e-14,
        );
        assert!(close(r.unwrap(), 0.5, 1e-14));

        let f = |x: f64| x.powi(4) + 2.0 * x * x - 1.0;
        let x = find_root(f, RootBracket::new(f, 0.0, 1.0).unwrap(), 1e-14).unwrap();
        assert!(close(x, (2f64.sqrt() - 1.0).sqrt(), 1e-13));
        assert!(close(x, 0.643_594_252_905_582_6, 1e-12));

        let f = |x: f64| x.cos() - x;
        let x = find_root(f, RootBracket::new(f, 0.0, 1.0).unwrap(), 1e-15).unwrap();
        assert!(close(x, 0.739_085_133_215_160_6, 1e-12));
    }

    #[test]
    fn root_requires_sign_change() {
        assert!(matches!(
            RootBracket::new(|x| x * x + 1.0, -1.0, 1.0),
            Err(Error::NoSignChange { .. })
        ));
        assert!(matches!(
            RootBracket::new(|x| x, 1.0, 0.0),
            Err(Error::InvalidDomain { .. })
        ));
    }

    #[test]
    fn unreachable_root_tolerance() {
        // a jump has no point with |f| below 0.5
        let f = |x: f64| if x < 0.3 { -1.0 } else { 1.0 };
        let r = find_root(f, RootBracket::new(f, 0.0, 1.0).unwrap(), 0.5);
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }
}
