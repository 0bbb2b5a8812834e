//! Executable inequality claims with signed margins, grid scans and the
//! `x0` root.
//!
//! Every clause is a one-sided relation `lhs <= rhs` (or `<` when strict)
//! evaluated in normalized coordinates `a = 1 + x`, `b = 1 - x`, so that
//! `A = 1` and each mean equals its ratio to `A`. Two-sided statements are
//! split into `.lo` and `.hi` clauses. The margin is `rhs - lhs`; it is
//! classified against a tolerance (default `1e-12`):
//!
//! - `margin < -tol`: violated
//! - `|margin| <= tol`: holds with equality
//! - `margin > tol`: holds
//!
//! Where the printed statement of a clause disagrees with what its proof
//! yields, both are evaluated: `as-printed` and `as-derived` rows. Clauses
//! with a single reading are labelled `common`. Only `as-derived` and
//! `common` rows decide the overall outcome; `as-printed` violations are
//! reported as warnings.
//!
//! Notation used below: `P~ = x/arcsin_p(x)`, `T~ = x/arctan_p(x)`,
//! `L~ = x/arctanh_p(x)`, `M~ = x/arcsinh_p(x)`, subscripts give `p`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::means::{self, classical_normalized, tilde_normalized, ArcKind, Classical, MeanInput};
use crate::ptrig::{self, PExponent};
use crate::quadrature::{self, find_root, Integrand, Node, RootBracket};
use crate::special;

pub const DEFAULT_TOL: f64 = 1e-12;
/// Residual required of the `x0` root.
pub const X0_RESIDUAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "as-printed")]
    AsPrinted,
    #[serde(rename = "as-derived")]
    AsDerived,
    #[serde(rename = "common")]
    Common,
}

impl Variant {
    pub fn label(self) -> &'static str {
        match self {
            Variant::AsPrinted => "as-printed",
            Variant::AsDerived => "as-derived",
            Variant::Common => "common",
        }
    }

    /// Whether violations of this variant fail a verification run.
    pub fn gates(self) -> bool {
        !matches!(self, Variant::AsPrinted)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as-printed" => Ok(Variant::AsPrinted),
            "as-derived" => Ok(Variant::AsDerived),
            "common" => Ok(Variant::Common),
            _ => Err(Error::domain("Variant", format!("unknown variant '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "holds-with-equality")]
    HoldsWithEquality,
    #[serde(rename = "violated")]
    Violated,
    #[serde(rename = "error")]
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::HoldsWithEquality => "holds-with-equality",
            Status::Violated => "violated",
            Status::Error => "error",
        }
    }

    /// Classifies `margin = rhs - lhs` at tolerance `tol`.
    pub fn classify(margin: f64, tol: f64) -> Status {
        if !margin.is_finite() {
            Status::Error
        } else if margin < -tol {
            Status::Violated
        } else if margin <= tol {
            Status::HoldsWithEquality
        } else {
            Status::Holds
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Status {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "holds" => Ok(Status::Holds),
            "holds-with-equality" => Ok(Status::HoldsWithEquality),
            "violated" => Ok(Status::Violated),
            "error" => Ok(Status::Error),
            _ => Err(Error::domain("Status", format!("unknown status '{s}'"))),
        }
    }
}

/// One evaluated clause at one grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub variant: Variant,
    pub p: f64,
    pub q: Option<f64>,
    pub a: f64,
    pub b: f64,
    pub x: f64,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub margin: Option<f64>,
    pub status: Status,
}

impl ClaimReport {
    /// The claim part of the clause id, e.g. `T3` for `T3.hi`.
    pub fn claim(&self) -> &str {
        self.claim_id.split('.').next().unwrap_or(&self.claim_id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    T1,
    T2a,
    T2b,
    T2c,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
}

impl ClaimId {
    pub const ALL: [ClaimId; 22] = [
        ClaimId::T1,
        ClaimId::T2a,
        ClaimId::T2b,
        ClaimId::T2c,
        ClaimId::T3,
        ClaimId::T4,
        ClaimId::T5,
        ClaimId::T6,
        ClaimId::T7,
        ClaimId::T8,
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::L1,
        ClaimId::L2,
        ClaimId::L3,
        ClaimId::L4,
        ClaimId::L5,
        ClaimId::L6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::T1 => "T1",
            ClaimId::T2a => "T2a",
            ClaimId::T2b => "T2b",
            ClaimId::T2c => "T2c",
            ClaimId::T3 => "T3",
            ClaimId::T4 => "T4",
            ClaimId::T5 => "T5",
            ClaimId::T6 => "T6",
            ClaimId::T7 => "T7",
            ClaimId::T8 => "T8",
            ClaimId::C1 => "C1",
            ClaimId::C2 => "C2",
            ClaimId::C3 => "C3",
            ClaimId::C4 => "C4",
            ClaimId::C5 => "C5",
            ClaimId::C6 => "C6",
            ClaimId::L1 => "L1",
            ClaimId::L2 => "L2",
            ClaimId::L3 => "L3",
            ClaimId::L4 => "L4",
            ClaimId::L5 => "L5",
            ClaimId::L6 => "L6",
        }
    }

    pub fn claim(self) -> InequalityClaim {
        let (title, domain, shape) = match self {
            ClaimId::T1 => (
                "chain L <= L~ < P~ < A < M~ < T~ <= Q",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::T2a => (
                "monotonicity of the ratios f1..f4 in x",
                Domain::P_BELOW_Q,
                Shape::Sequence,
            ),
            ClaimId::T2b => (
                "x0: root of q x^(q-p) + (q-p) x^q - p",
                Domain::P_BELOW_Q,
                Shape::PerPair,
            ),
            ClaimId::T2c => (
                "ratio bounds between orders p < q",
                Domain::P2_BELOW_Q,
                Shape::Point,
            ),
            ClaimId::T3 => (
                "P~ M~ <= P~_2p^2 <= k P~ M~",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::T4 => (
                "sum bounds with r and R",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::T5 => (
                "Chebyshev and Gruss bounds for T~ L~",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::T6 => (
                "two-sided bounds for T~ and L~",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::T7 => (
                "two-sided bounds for A/P~ and A/M~",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::T8 => (
                "constant ratio bounds with a_p, b_p, c_p",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::C1 => (
                "logarithmic bounds for L~ and M~",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::C2 => (
                "(1 - x^p)^(1/p) P~ < L~ < P~ / A^(p-1)",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::C3 => (
                "Turan-type inequalities",
                Domain::P_AT_LEAST_3,
                Shape::Point,
            ),
            ClaimId::C4 => (
                "geometric convexity of P~ in p",
                Domain::P_AND_Q_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::C5 => (
                "special cases with orders 3 and 4",
                Domain::P_EQUALS_3,
                Shape::Point,
            ),
            ClaimId::C6 => (
                "(2/pi_p) A < P~ < P_2p < A",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::L1 => (
                "Cauchy-Bouniakowski instances",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::L2 => (
                "Polya-Szego and Schweizer instances",
                Domain::P_AT_LEAST_2,
                Shape::Point,
            ),
            ClaimId::L3 => ("Chebyshev instance", Domain::P_AT_LEAST_2, Shape::Point),
            ClaimId::L4 => ("Gruss instance", Domain::P_AT_LEAST_2, Shape::Point),
            ClaimId::L5 => ("Minkowski instance", Domain::P_AT_LEAST_2, Shape::Point),
            ClaimId::L6 => ("Diaz-Metcalf instance", Domain::P_AT_LEAST_2, Shape::Point),
        };
        InequalityClaim {
            id: self,
            title,
            domain,
            shape,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(wanted))
            .ok_or_else(|| Error::domain("ClaimId", format!("unknown claim '{wanted}'")))
    }
}

/// Parameter domain of a claim.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub p_min: f64,
    /// Only evaluated at this exact `p`.
    pub p_exact: Option<f64>,
    pub needs_q: bool,
    /// `q > p` required (otherwise only `q >= q_min`).
    pub q_above_p: bool,
    pub q_min: f64,
}

impl Domain {
    const P_AT_LEAST_2: Domain = Domain {
        p_min: 2.0,
        p_exact: None,
        needs_q: false,
        q_above_p: false,
        q_min: 0.0,
    };
    const P_AT_LEAST_3: Domain = Domain {
        p_min: 3.0,
        ..Domain::P_AT_LEAST_2
    };
    const P_EQUALS_3: Domain = Domain {
        p_min: 3.0,
        p_exact: Some(3.0),
        ..Domain::P_AT_LEAST_2
    };
    const P_BELOW_Q: Domain = Domain {
        p_min: 1.0,
        p_exact: None,
        needs_q: true,
        q_above_p: true,
        q_min: 1.0,
    };
    const P2_BELOW_Q: Domain = Domain {
        p_min: 2.0,
        ..Domain::P_BELOW_Q
    };
    const P_AND_Q_AT_LEAST_2: Domain = Domain {
        p_min: 2.0,
        p_exact: None,
        needs_q: true,
        q_above_p: false,
        q_min: 2.0,
    };

    pub fn admits(&self, p: f64, q: Option<f64>) -> bool {
        let p_ok = match self.p_exact {
            Some(v) => p == v,
            None => p >= self.p_min && p > 1.0,
        };
        let q_ok = match (self.needs_q, q) {
            (false, _) => true,
            (true, None) => false,
            (true, Some(q)) => q >= self.q_min && q > 1.0 && (!self.q_above_p || q > p),
        };
        p_ok && q_ok && p.is_finite()
    }
}

/// How a claim is laid over a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Independent clauses at each `(p, q, x)`.
    Point,
    /// Relations between consecutive `x` values for each `(p, q)`.
    Sequence,
    /// A single evaluation per `(p, q)`.
    PerPair,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityClaim {
    pub id: ClaimId,
    pub title: &'static str,
    pub domain: Domain,
    pub shape: Shape,
}

/// Every registered claim in canonical order.
pub fn registry() -> Vec<InequalityClaim> {
    ClaimId::ALL.iter().map(|c| c.claim()).collect()
}

/// A clause evaluated in normalized coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Clause {
    pub id: &'static str,
    pub variant: Variant,
    pub strict: bool,
    pub lhs: f64,
    pub rhs: f64,
}

impl Clause {
    fn new(id: &'static str, variant: Variant, strict: bool, lhs: f64, rhs: f64) -> Self {
        Clause {
            id,
            variant,
            strict,
            lhs,
            rhs,
        }
    }

    fn common(id: &'static str, strict: bool, lhs: f64, rhs: f64) -> Self {
        Clause::new(id, Variant::Common, strict, lhs, rhs)
    }

    pub fn margin(&self) -> f64 {
        self.rhs - self.lhs
    }
}

/// Where a report row sits on the grid.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Site {
    p: f64,
    q: Option<f64>,
    a: f64,
    b: f64,
    x: f64,
}

impl Site {
    fn normalized(p: f64, q: Option<f64>, x: f64) -> Self {
        Site {
            p,
            q,
            a: 1.0 + x,
            b: 1.0 - x,
            x,
        }
    }

    fn from_input(p: f64, q: Option<f64>, input: &MeanInput) -> Self {
        Site {
            p,
            q,
            a: input.a(),
            b: input.b(),
            x: input.x(),
        }
    }

    fn report(&self, c: &Clause, tol: f64) -> ClaimReport {
        let margin = c.margin();
        ClaimReport {
            claim_id: c.id.to_string(),
            variant: c.variant,
            p: self.p,
            q: self.q,
            a: self.a,
            b: self.b,
            x: self.x,
            lhs: Some(c.lhs),
            rhs: Some(c.rhs),
            margin: Some(margin),
            status: Status::classify(margin, tol),
        }
    }

    fn error(&self, claim: ClaimId) -> ClaimReport {
        ClaimReport {
            claim_id: claim.name().to_string(),
            variant: Variant::Common,
            p: self.p,
            q: self.q,
            a: self.a,
            b: self.b,
            x: self.x,
            lhs: None,
            rhs: None,
            margin: None,
            status: Status::Error,
        }
    }
}

fn to_reports(
    site: Site,
    claim: ClaimId,
    clauses: Result<Vec<Clause>>,
    tol: f64,
) -> Vec<ClaimReport> {
    match clauses {
        Ok(cs) => cs.iter().map(|c| site.report(c, tol)).collect(),
        Err(_) => vec![site.error(claim)],
    }
}

fn pexp(p: f64) -> Result<PExponent> {
    PExponent::new(p)
}

fn check_open_unit(x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(
            "inequalities",
            format!("need x in (0, 1), got {x}"),
        ))
    }
}

fn tilde(kind: ArcKind, p: f64, x: f64) -> Result<f64> {
    tilde_normalized(kind, pexp(p)?, x)
}

// ---------------------------------------------------------------- T1

fn clauses_chain(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let l = classical_normalized(Classical::L, x);
    let q = classical_normalized(Classical::Q, x);
    let lt = tilde(ArcKind::L, p, x)?;
    let pt = tilde(ArcKind::P, p, x)?;
    let mt = tilde(ArcKind::M, p, x)?;
    let tt = tilde(ArcKind::T, p, x)?;
    Ok(vec![
        Clause::common("T1.1", false, l, lt),
        Clause::common("T1.2", true, lt, pt),
        Clause::common("T1.3", true, pt, 1.0),
        Clause::common("T1.4", true, 1.0, mt),
        Clause::common("T1.5", true, mt, tt),
        Clause::common("T1.6", false, tt, q),
    ])
}

/// Chain `L <= L~ < P~ < A < M~ < T~ <= Q`.
pub fn check_chain(p: PExponent, input: &MeanInput, tol: f64) -> Vec<ClaimReport> {
    let site = Site::from_input(p.value(), None, input);
    to_reports(site, ClaimId::T1, clauses_chain(p.value(), input.x()), tol)
}

// ---------------------------------------------------------------- T2

/// `u2(x) = q x^(q-p) + (q-p) x^q - p`.
pub fn u2(p: f64, q: f64, x: f64) -> f64 {
    q * x.powf(q - p) + (q - p) * x.powf(q) - p
}

type PairCache = Mutex<HashMap<(u8, u64, u64), f64>>;

fn pair_cache() -> &'static PairCache {
    static CACHE: OnceLock<PairCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(tag: u8, p: f64, q: f64, compute: impl FnOnce() -> Result<f64>) -> Result<f64> {
    let key = (tag, p.to_bits(), q.to_bits());
    if let Some(v) = pair_cache().lock().expect("cache poisoned").get(&key) {
        return Ok(*v);
    }
    let v = compute()?;
    pair_cache().lock().expect("cache poisoned").insert(key, v);
    Ok(v)
}

fn check_orders(p: f64, q: f64) -> Result<()> {
    if p > 1.0 && q > p && q.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            "solve_x0",
            format!("need 1 < p < q, got p={p}, q={q}"),
        ))
    }
}

/// The unique root `x0` of `u2` in `(0, 1)`.
pub fn solve_x0(p: f64, q: f64) -> Result<f64> {
    check_orders(p, q)?;
    cached(0, p, q, || {
        let f = |x: f64| u2(p, q, x);
        let bracket = RootBracket::new(f, 0.0, 1.0)?;
        find_root(f, bracket, 1e-13)
    })
}

/// Last sign change of `g` below 1, scanning down from `0.999`, refined by
/// a root solve. `g` must be positive just below 1.
fn last_crossing(g: impl Fn(f64) -> Result<f64>, what: &'static str) -> Result<f64> {
    let step = 1e-3;
    let mut hi = 0.999;
    let mut g_hi = g(hi)?;
    if !(g_hi > 0.0) {
        return Err(Error::NonConvergence {
            what,
            detail: format!("expected a positive value at x = {hi}, got {g_hi}"),
        });
    }
    while hi > step {
        let lo = hi - step;
        let g_lo = g(lo)?;
        if g_lo <= 0.0 {
            let f = |x: f64| g(x).unwrap_or(f64::NAN);
            let bracket = RootBracket::from_values(lo, hi, g_lo, g_hi)?;
            return match find_root(f, bracket, 1e-14) {
                Ok(x) => Ok(x),
                Err(Error::NonConvergence { .. }) => Ok(0.5 * (lo + hi)),
                Err(e) => Err(e),
            };
        }
        hi = lo;
        g_hi = g_lo;
    }
    Err(Error::NonConvergence {
        what,
        detail: "no sign change found in (0, 1)".into(),
    })
}

/// Where `f4 = arctan_p / arctan_q` actually turns: the root of
/// `f4 = (1 + x^q) / (1 + x^p)`.
pub fn f4_turning_point(p: f64, q: f64) -> Result<f64> {
    check_orders(p, q)?;
    let (pp, qq) = (pexp(p)?, pexp(q)?);
    cached(1, p, q, || {
        last_crossing(
            |x| {
                let f4 = ptrig::arctan_p(pp, x)? / ptrig::arctan_p(qq, x)?;
                Ok((1.0 + x.powf(q)) / (1.0 + x.powf(p)) - f4)
            },
            "f4 turning point",
        )
    })
}

/// Where `T~_p / T~_q` crosses `b_q / b_p` inside `(0, 1)`.
pub fn t_ratio_crossing(p: f64, q: f64) -> Result<f64> {
    check_orders(p, q)?;
    let (pp, qq) = (pexp(p)?, pexp(q)?);
    let level = ptrig::constants(qq)?.b_p / ptrig::constants(pp)?.b_p;
    cached(2, p, q, || {
        last_crossing(
            |x| Ok(ptrig::arctan_p(qq, x)? / ptrig::arctan_p(pp, x)? - level),
            "T ratio crossing",
        )
    })
}

/// The four ratios of the monotonicity claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RatioPair {
    F1,
    F2,
    F3,
    F4,
}

impl RatioPair {
    pub const ALL: [RatioPair; 4] = [RatioPair::F1, RatioPair::F2, RatioPair::F3, RatioPair::F4];

    fn id(self) -> &'static str {
        match self {
            RatioPair::F1 => "T2a.f1",
            RatioPair::F2 => "T2a.f2",
            RatioPair::F3 => "T2a.f3",
            RatioPair::F4 => "T2a.f4",
        }
    }

    /// `arc_p(x) / arc_q(x)`.
    pub fn eval(self, p: f64, q: f64, x: f64) -> Result<f64> {
        let kind = match self {
            RatioPair::F1 => ArcKind::P,
            RatioPair::F2 => ArcKind::M,
            RatioPair::F3 => ArcKind::L,
            RatioPair::F4 => ArcKind::T,
        };
        let f = kind.arc();
        Ok(f.eval(pexp(p)?, x)? / f.eval(pexp(q)?, x)?)
    }
}

fn clauses_monotonicity(pair: RatioPair, p: f64, q: f64, xs: &[f64]) -> Result<Vec<(f64, Clause)>> {
    for &x in xs {
        check_open_unit(x)?;
    }
    let vals = xs
        .iter()
        .map(|&x| pair.eval(p, q, x))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let increasing =
        |i: usize, variant| Clause::new(pair.id(), variant, true, vals[i], vals[i + 1]);
    let decreasing =
        |i: usize, variant| Clause::new(pair.id(), variant, true, vals[i + 1], vals[i]);
    let splits = match pair {
        RatioPair::F4 => vec![
            (Variant::AsPrinted, solve_x0(p, q)?),
            (Variant::AsDerived, f4_turning_point(p, q)?),
        ],
        _ => Vec::new(),
    };
    for i in 0..xs.len().saturating_sub(1) {
        match pair {
            RatioPair::F1 | RatioPair::F3 => out.push((xs[i], increasing(i, Variant::Common))),
            RatioPair::F2 => out.push((xs[i], decreasing(i, Variant::Common))),
            RatioPair::F4 => {
                for &(variant, split) in &splits {
                    if xs[i + 1] <= split {
                        out.push((xs[i], decreasing(i, variant)));
                    } else if xs[i] >= split {
                        out.push((xs[i], increasing(i, variant)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Discrete monotonicity of one ratio over consecutive points of `xs`
/// (sorted ascending). Each row sits at the left point of its pair. The
/// `f4` rows come in two variants, split at `x0` and at the actual turning
/// point; pairs straddling the split are skipped.
pub fn check_ratio_monotonicity(
    pair: RatioPair,
    p: PExponent,
    q: PExponent,
    xs: &[f64],
    tol: f64,
) -> Vec<ClaimReport> {
    let (p, q) = (p.value(), q.value());
    match clauses_monotonicity(pair, p, q, xs) {
        Ok(rows) => rows
            .iter()
            .map(|(x, c)| Site::normalized(p, Some(q), *x).report(c, tol))
            .collect(),
        Err(_) => vec![
            Site::normalized(p, Some(q), xs.first().copied().unwrap_or(f64::NAN))
                .error(ClaimId::T2a),
        ],
    }
}

fn clauses_x0(p: f64, q: f64) -> Result<(f64, Vec<Clause>)> {
    let x0 = solve_x0(p, q)?;
    Ok((
        x0,
        vec![
            Clause::common("T2b.1", true, u2(p, q, 0.0), 0.0),
            Clause::common("T2b.2", true, 0.0, u2(p, q, 1.0)),
            Clause::common("T2b.3", false, u2(p, q, x0).abs(), X0_RESIDUAL_TOL),
        ],
    ))
}

/// Sign change of `u2` on `(0, 1)` and the residual of `x0`; rows sit at `x0`.
pub fn check_x0(p: PExponent, q: PExponent, tol: f64) -> Vec<ClaimReport> {
    let (p, q) = (p.value(), q.value());
    match clauses_x0(p, q) {
        Ok((x0, cs)) => cs
            .iter()
            .map(|c| Site::normalized(p, Some(q), x0).report(c, tol))
            .collect(),
        Err(_) => vec![Site::normalized(p, Some(q), f64::NAN).error(ClaimId::T2b)],
    }
}

fn clauses_ratio_bounds(p: f64, q: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let (pp, qq) = (pexp(p)?, pexp(q)?);
    let (cp, cq) = (ptrig::constants(pp)?, ptrig::constants(qq)?);
    let r_p = tilde(ArcKind::P, p, x)? / tilde(ArcKind::P, q, x)?;
    let r_m = tilde(ArcKind::M, p, x)? / tilde(ArcKind::M, q, x)?;
    let r_l = tilde(ArcKind::L, p, x)? / tilde(ArcKind::L, q, x)?;
    let r_t = tilde(ArcKind::T, p, x)? / tilde(ArcKind::T, q, x)?;
    let level = cq.b_p / cp.b_p;
    let mut out = vec![
        Clause::common("T2c.1.lo", true, cq.pi_p / cp.pi_p, r_p),
        Clause::common("T2c.1.hi", true, r_p, 1.0),
        Clause::common("T2c.2.lo", true, 1.0, r_m),
        Clause::common("T2c.2.hi", true, r_m, cq.c_p / cp.c_p),
        Clause::new("T2c.3.lo", Variant::AsPrinted, true, 1.0, r_l),
        Clause::new("T2c.3.hi", Variant::AsPrinted, true, r_l, q / p),
        Clause::new("T2c.3.lo", Variant::AsDerived, true, p / q, r_l),
        Clause::new("T2c.3.hi", Variant::AsDerived, true, r_l, 1.0),
    ];
    for (variant, split) in [
        (Variant::AsPrinted, solve_x0(p, q)?),
        (Variant::AsDerived, t_ratio_crossing(p, q)?),
    ] {
        if x < split {
            out.push(Clause::new("T2c.4", variant, true, r_t, level));
        } else if x > split {
            out.push(Clause::new("T2c.4", variant, true, level, r_t));
        }
    }
    Ok(out)
}

/// Ratio bounds between the orders `2 <= p < q`. The `T~` clause switches
/// direction at `x0` (as printed) or at the actual crossing (as derived).
pub fn check_ratio_bounds(
    p: PExponent,
    q: PExponent,
    input: &MeanInput,
    tol: f64,
) -> Vec<ClaimReport> {
    let site = Site::from_input(p.value(), Some(q.value()), input);
    to_reports(
        site,
        ClaimId::T2c,
        clauses_ratio_bounds(p.value(), q.value(), input.x()),
        tol,
    )
}

// ---------------------------------------------------------------- T3, T4

/// Printed `k(x, p)`.
pub fn k_printed(p: f64, x: f64) -> f64 {
    let xp = x.powf(p);
    let u = (1.0 + xp).powf(2.0 / p);
    let v = (1.0 - xp).powf(2.0 / p);
    (u + v).powi(2) / (4.0 * (1.0 - xp * xp).powf(1.0 / p))
}

/// `r = ((1 + x^p) / (1 - x^p))^(1/(2p))`.
pub fn r_derived(p: f64, x: f64) -> f64 {
    let xp = x.powf(p);
    ((1.0 + xp) / (1.0 - xp)).powf(1.0 / (2.0 * p))
}

/// Printed `r = (1 + x^p) / (1 - x^p)^(1/(2p))`.
pub fn r_printed(p: f64, x: f64) -> f64 {
    let xp = x.powf(p);
    (1.0 + xp) / (1.0 - xp).powf(1.0 / (2.0 * p))
}

/// Polya-Szego constant `(r + 1)^2 / (4 r)` for the pair
/// `(1 - t^p)^(-1/(2p))`, `(1 + t^p)^(-1/(2p))`.
pub fn k_derived(p: f64, x: f64) -> f64 {
    let r = r_derived(p, x);
    (r + 1.0).powi(2) / (4.0 * r)
}

/// Printed `R(x, p)`.
pub fn big_r_printed(p: f64, x: f64) -> f64 {
    let w = 1.0 - x.powf(2.0 * p);
    let e = 1.0 / (2.0 * p);
    (w.powf(e) + w.powf(-e)).powf(e) / 2f64.powf(2.0 * p - 1.0)
}

/// `R = 2 K^p` with `K = (s^(1/2) + s^(-1/2))^2 / 4`, `s = (1 - x^(2p))^(-1/(2p))`.
pub fn big_r_derived(p: f64, x: f64) -> f64 {
    let s = (1.0 - x.powf(2.0 * p)).powf(-1.0 / (2.0 * p));
    let k = (s.sqrt() + 1.0 / s.sqrt()).powi(2) / 4.0;
    2.0 * k.powf(p)
}

fn clauses_product(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let pt = tilde(ArcKind::P, p, x)?;
    let mt = tilde(ArcKind::M, p, x)?;
    let p2 = tilde(ArcKind::P, 2.0 * p, x)?;
    Ok(vec![
        Clause::common("T3.lo", false, pt * mt, p2 * p2),
        Clause::new(
            "T3.hi",
            Variant::AsPrinted,
            false,
            p2 * p2,
            k_printed(p, x) * pt * mt,
        ),
        Clause::new(
            "T3.hi",
            Variant::AsDerived,
            false,
            p2 * p2,
            k_derived(p, x) * pt * mt,
        ),
    ])
}

/// `P~ M~ <= P~_2p^2 <= k P~ M~`, with the printed `k` and the constant the
/// proof yields.
pub fn check_product_bounds(p: PExponent, input: &MeanInput, tol: f64) -> Vec<ClaimReport> {
    let site = Site::from_input(p.value(), None, input);
    to_reports(
        site,
        ClaimId::T3,
        clauses_product(p.value(), input.x()),
        tol,
    )
}

fn clauses_sum(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let pt = tilde(ArcKind::P, p, x)?;
    let mt = tilde(ArcKind::M, p, x)?;
    let p2 = tilde(ArcKind::P, 2.0 * p, x)?;
    let eq23 = |r: f64| (1.0 / pt + r / mt, (r + 1.0) / p2);
    let (l_pr, r_pr) = eq23(r_printed(p, x));
    let (l_de, r_de) = eq23(r_derived(p, x));
    let lhs26 = p2.powf(2.0 * p) * (pt.powf(-p) + mt.powf(-p));
    Ok(vec![
        Clause::new("T4.23", Variant::AsPrinted, false, l_pr, r_pr),
        Clause::new("T4.23", Variant::AsDerived, false, l_de, r_de),
        Clause::new(
            "T4.26",
            Variant::AsPrinted,
            false,
            lhs26,
            big_r_printed(p, x),
        ),
        Clause::new(
            "T4.26",
            Variant::AsDerived,
            false,
            lhs26,
            big_r_derived(p, x),
        ),
    ])
}

/// Sum bounds with `r` and `R`, printed and derived.
pub fn check_sum_bounds(p: PExponent, input: &MeanInput, tol: f64) -> Vec<ClaimReport> {
    let site = Site::from_input(p.value(), None, input);
    to_reports(site, ClaimId::T4, clauses_sum(p.value(), input.x()), tol)
}

// ---------------------------------------------------------------- T5, T6, T7

fn clauses_chebyshev_gruss(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let tt = tilde(ArcKind::T, p, x)?;
    let lt = tilde(ArcKind::L, p, x)?;
    let l2 = tilde(ArcKind::L, 2.0 * p, x)?;
    let x2p = x.powf(2.0 * p);
    Ok(vec![
        Clause::common("T5.20", false, tt * lt, l2),
        Clause::common(
            "T5.20b",
            false,
            1.0 / (tt * lt) - 1.0 / l2,
            x2p / (4.0 * (1.0 - x2p)),
        ),
    ])
}

/// `A L~_2p >= T~ L~` and its Gruss companion.
pub fn check_chebyshev_gruss(p: PExponent, input: &MeanInput, tol: f64) -> Vec<ClaimReport> {
    let site = Site::from_input(p.value(), None, input);
    to_reports(
        site,
        ClaimId::T5,
        clauses_chebyshev_gruss(p.value(), input.x()),
        tol,
    )
}

fn clauses_single_tl(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let tt = tilde(ArcKind::T, p, x)?;
    let lt = tilde(ArcKind::L, p, x)?;
    let xp = x.powf(p);
    Ok(vec![
        Clause::common(
            "T6.31.lo",
            false,
            4.0 * (1.0 + xp) * (1.0 + xp / (p + 1.0)) / (xp + 2.0).powi(2),
            tt,
        ),
        Clause::common("T6.31.hi", false, tt, 1.0 + xp / (1.0 + p)),
        Clause::common(
            "T6.32.lo",
            false,
            4.0 * (1.0 - xp) * (1.0 - xp / (1.0 + p)) / (2.0 - xp).powi(2),
            lt,
        ),
        Clause::common("T6.32.hi", false, lt, 1.0 - xp / (1.0 + p)),
    ])
}

/// Two-sided bounds for `T~ / A` and `L~ / A`.
pub fn check_single_bounds_tl(p: PExponent, input: &MeanInput, tol: f64) -> Vec<ClaimReport> {
    let site = Site::from_input(p.value(), None, input);
    to_reports(
        site,
        ClaimId::T6,
        clauses_single_tl(p.value(), input.x()),
        tol,
    )
}

/// `int_0^x (1 - t^p)^(1/p) dt = (1/p) B(1/p, 1 + 1/p) I_{x^p}(1/p, 1 + 1/p)`.
pub fn sine_area(p: f64, x: f64) -> Result<f64> {
    let (s, t) = (1.0 / p, 1.0 + 1.0 / p);
    Ok(special::beta(s, t)? * special::beta_incomplete(s, t, x.powf(p))? / p)
}

/// `j(x, p) = int_0^x (1 + t^p)^(1/p) dt`.
pub fn j_integral(p: f64, x: f64) -> Result<f64> {
    let f = move |n: Node| (1.0 + n.t.powf(p)).powf(1.0 / p);
    Ok(quadrature::integrate(&Integrand::new(0.0, x, f))?.value)
}

fn clauses_single_pm(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let a_over_p = 1.0 / tilde(ArcKind::P, p, x)?;
    let a_over_m = 1.0 / tilde(ArcKind::M, p, x)?;
    let xp = x.powf(p);
    let b = special::beta(1.0 / p, 1.0 + 1.0 / p)?;
    let area = sine_area(p, x)?;
    let alpha = (1.0 - xp).powf(1.0 / p);
    let j = j_integral(p, x)?;
    let big = (1.0 + xp).powf(1.0 / p);
    Ok(vec![
        Clause::new("T7.APp.lo", Variant::AsPrinted, false, p * x / b, a_over_p),
        Clause::new("T7.APp.lo", Variant::AsDerived, false, x / area, a_over_p),
        Clause::new(
            "T7.APp.hi",
            Variant::AsPrinted,
            false,
            a_over_p,
            p * x * (2.0 - xp).powi(2) / (4.0 * (1.0 - xp)),
        ),
        Clause::new(
            "T7.APp.hi",
            Variant::AsDerived,
            false,
            a_over_p,
            x * (1.0 + alpha).powi(2) / (4.0 * alpha * area),
        ),
        Clause::common("T7.AMp.lo", false, x / j, a_over_m),
        Clause::new(
            "T7.AMp.hi",
            Variant::AsPrinted,
            false,
            a_over_m,
            x * (1.0 + big) / (4.0 * j * big),
        ),
        Clause::new(
            "T7.AMp.hi",
            Variant::AsDerived,
            false,
            a_over_m,
            x * (1.0 + big).powi(2) / (4.0 * j * big),
        ),
    ])
}

/// Two-sided bounds for `A / P~` and `A / M~`.
pub fn check_single_bounds_pm(p: PExponent, input: &MeanInput, tol: f64) -> Vec<ClaimReport> {
    let site = Site::from_input(p.value(), None, input);
    to_reports(
        site,
        ClaimId::T7,
        clauses_single_pm(p.value(), input.x()),
        tol,
    )
}

// ---------------------------------------------------------------- T8

fn clauses_constant_ratio(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let c = ptrig::constants(pexp(p)?)?;
    let pt = tilde(ArcKind::P, p, x)?;
    let mt = tilde(ArcKind::M, p, x)?;
    let tt = tilde(ArcKind::T, p, x)?;
    let mut out = vec![
        Clause::common("T8.1.lo", true, c.b_p / c.c_p * tt, mt),
        Clause::common("T8.1.hi", true, mt, tt),
    ];
    for (variant, a_p) in [(Variant::AsPrinted, PI / 2.0), (Variant::AsDerived, c.a_p)] {
        out.push(Clause::new("T8.2.lo", variant, true, c.c_p / a_p * mt, pt));
    }
    out.push(Clause::common("T8.2.hi", true, pt, mt));
    for (variant, a_p) in [(Variant::AsPrinted, PI / 2.0), (Variant::AsDerived, c.a_p)] {
        out.push(Clause::new("T8.3.lo", variant, true, c.b_p / a_p * tt, pt));
    }
    out.push(Clause::common("T8.3.hi", true, pt, tt));
    Ok(out)
}

/// Bounds through `a_p`, `b_p`, `c_p`; `a_p = pi/2` as printed and
/// `a_p = pi_p / 2` as derived.
pub fn check_constant_ratio_bounds(p: PExponent, input: &MeanInput, tol: f64) -> Vec<ClaimReport> {
    let site = Site::from_input(p.value(), None, input);
    to_reports(
        site,
        ClaimId::T8,
        clauses_constant_ratio(p.value(), input.x()),
        tol,
    )
}

// ---------------------------------------------------------------- C1..C6

fn clauses_c1(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let (alpha, beta) = (1.0 / p, 1.0 / (1.0 + p));
    let xp = x.powf(p);
    let lt = tilde(ArcKind::L, p, x)?;
    let mt = tilde(ArcKind::M, p, x)?;
    let lminus = (-xp).ln_1p();
    let lplus = xp.ln_1p();
    let u = (1.0 + xp).powf(-1.0 / p);
    let mut out = vec![
        Clause::common("C1.L.lo", true, 1.0 / (1.0 - alpha * lminus), lt),
        Clause::common("C1.L.hi", true, lt, 1.0 / (1.0 - beta * lminus)),
    ];
    for (variant, factor) in [(Variant::AsPrinted, u), (Variant::AsDerived, 1.0 / u)] {
        out.push(Clause::new(
            "C1.M.lo",
            variant,
            true,
            factor / (1.0 + alpha * lplus),
            mt,
        ));
        out.push(Clause::new(
            "C1.M.hi",
            variant,
            true,
            mt,
            factor / (1.0 + beta * lplus),
        ));
    }
    Ok(out)
}

fn clauses_c2(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let pt = tilde(ArcKind::P, p, x)?;
    let lt = tilde(ArcKind::L, p, x)?;
    let factor = (-x.powf(p)).ln_1p() / p;
    Ok(vec![
        Clause::common("C2.lo", true, factor.exp() * pt, lt),
        // P~ / A^(p-1) with A = 1
        Clause::common("C2.hi", true, lt, pt),
    ])
}

fn clauses_c3(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let turan = |kind| -> Result<(f64, f64)> {
        let mid = tilde(kind, p, x)?;
        Ok((
            mid * mid,
            tilde(kind, p - 1.0, x)? * tilde(kind, p + 1.0, x)?,
        ))
    };
    let (pm, pn) = turan(ArcKind::P)?;
    let (lm, ln) = turan(ArcKind::L)?;
    let (tm, tn) = turan(ArcKind::T)?;
    Ok(vec![
        Clause::common("C3.P", true, pn, pm),
        Clause::common("C3.L", true, ln, lm),
        Clause::common("C3.T", true, tm, tn),
    ])
}

fn clauses_c4(p: f64, q: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let lhs = (tilde(ArcKind::P, p, x)? * tilde(ArcKind::P, q, x)?).sqrt();
    let rhs = tilde(ArcKind::P, (p * q).sqrt(), x)?;
    Ok(vec![Clause::common("C4", false, lhs, rhs)])
}

fn clauses_c5(x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let p_cl = classical_normalized(Classical::P, x);
    let l_cl = classical_normalized(Classical::L, x);
    let t_cl = classical_normalized(Classical::T, x);
    let p3 = tilde(ArcKind::P, 3.0, x)?;
    let p4 = tilde(ArcKind::P, 4.0, x)?;
    let l3 = tilde(ArcKind::L, 3.0, x)?;
    let l4 = tilde(ArcKind::L, 4.0, x)?;
    let t3 = tilde(ArcKind::T, 3.0, x)?;
    let t4 = tilde(ArcKind::T, 4.0, x)?;
    Ok(vec![
        Clause::common("C5.P.lo", true, p_cl, p3 * p3 / p4),
        Clause::common("C5.P.hi", true, p3 * p3 / p4, p3 * p3 / l4),
        Clause::common("C5.L.lo", true, l_cl, l3 * l3 / l4),
        Clause::common("C5.L.hi", true, l3 * l3 / l4, l3 * l3 / l_cl),
        Clause::common("C5.T.lo", true, t3 * t3 / t4, t_cl),
        Clause::common("C5.T.hi", true, t3 * t3 / t_cl, t3 * t3 / t4),
    ])
}

fn clauses_c6(p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let pp = pexp(p)?;
    let pt = tilde(ArcKind::P, p, x)?;
    let neuman = means::neuman_mean(ArcKind::P, pp.doubled(), &MeanInput::normalized(x)?)?.value;
    let p2 = tilde(ArcKind::P, 2.0 * p, x)?;
    Ok(vec![
        Clause::common("C6.1", true, 2.0 / ptrig::pi_p(pp), pt),
        Clause::new("C6.2", Variant::AsPrinted, true, pt, neuman),
        Clause::new("C6.2", Variant::AsDerived, true, pt, p2),
        Clause::new("C6.3", Variant::AsPrinted, true, neuman, 1.0),
        Clause::new("C6.3", Variant::AsDerived, true, p2, 1.0),
    ])
}

/// Clauses `C1`..`C6` at one point. `C3` needs `p >= 3`, `C4`
/// needs `q`, and `C5` (fixed orders 3 and 4) is evaluated only at `p = 3`.
pub fn check_corollaries(
    p: PExponent,
    q: Option<PExponent>,
    input: &MeanInput,
    tol: f64,
) -> Vec<ClaimReport> {
    let qv = q.map(|q| q.value());
    let mut out = Vec::new();
    for id in [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
    ] {
        if id.claim().domain.admits(p.value(), qv) {
            let site =
                Site::from_input(p.value(), if id == ClaimId::C4 { qv } else { None }, input);
            out.extend(to_reports(
                site,
                id,
                point_clauses(id, p.value(), qv, input.x()),
                tol,
            ));
        }
    }
    out
}

// ---------------------------------------------------------------- L1..L6

struct ArcQuad {
    asin: f64,
    asinh: f64,
    atan: f64,
    atanh: f64,
    asin2: f64,
    atanh2: f64,
}

impl ArcQuad {
    fn new(p: f64, x: f64) -> Result<Self> {
        let (pp, p2) = (pexp(p)?, pexp(2.0 * p)?);
        Ok(ArcQuad {
            asin: ptrig::arcsin_p_quadrature(pp, x)?,
            asinh: ptrig::arcsinh_p_quadrature(pp, x)?,
            atan: ptrig::arctan_p_quadrature(pp, x)?,
            atanh: ptrig::arctanh_p_quadrature(pp, x)?,
            asin2: ptrig::arcsin_p_quadrature(p2, x)?,
            atanh2: ptrig::arctanh_p_quadrature(p2, x)?,
        })
    }
}

/// `int_0^x (1 - t^(2p))^(-1/p) dt`.
fn squared_weight_integral(p: f64, x: f64) -> Result<f64> {
    let one_minus_x = 1.0 - x;
    let f = move |n: Node| {
        let u = one_minus_x + n.to_hi;
        (-(2.0 * p * (-u).ln_1p()).exp_m1()).powf(-1.0 / p)
    };
    Ok(quadrature::integrate(&Integrand::new(0.0, x, f))?.value)
}

fn clauses_lemma(id: ClaimId, p: f64, x: f64) -> Result<Vec<Clause>> {
    check_open_unit(x)?;
    let q = ArcQuad::new(p, x)?;
    let xp = x.powf(p);
    Ok(match id {
        ClaimId::L1 => vec![
            Clause::common("L1.13", false, q.asin2 * q.asin2, q.asin * q.asinh),
            // F = 1 + t^p: int F * int 1/F >= x^2
            Clause::common("L1.27", false, x * x, (x + x * xp / (p + 1.0)) * q.atan),
        ],
        ClaimId::L2 => {
            let product = q.asin * q.asinh;
            let f_int = (x + x * xp / (p + 1.0)) * q.atan;
            let big = 1.0 + xp;
            let schweizer = x * x * (1.0 + big).powi(2) / (4.0 * big);
            vec![
                Clause::new(
                    "L2.14",
                    Variant::AsPrinted,
                    false,
                    product,
                    k_printed(p, x) * q.asin2 * q.asin2,
                ),
                Clause::new(
                    "L2.14",
                    Variant::AsDerived,
                    false,
                    product,
                    k_derived(p, x) * q.asin2 * q.asin2,
                ),
                Clause::new("L2.28", Variant::AsPrinted, false, schweizer, f_int),
                Clause::new("L2.28", Variant::AsDerived, false, f_int, schweizer),
            ]
        }
        ClaimId::L3 => vec![
            Clause::new(
                "L3.19",
                Variant::AsPrinted,
                false,
                q.atan * q.atanh,
                x * q.atanh2,
            ),
            Clause::new(
                "L3.19",
                Variant::AsDerived,
                false,
                x * q.atanh2,
                q.atan * q.atanh,
            ),
        ],
        ClaimId::L4 => {
            let x2p = xp * xp;
            vec![Clause::common(
                "L4",
                false,
                (x * q.atanh2 - q.atan * q.atanh).abs(),
                x * x * x2p / (4.0 * (1.0 - x2p)),
            )]
        }
        ClaimId::L5 => vec![Clause::common(
            "L5.24",
            false,
            q.asin.powf(p) + q.asinh.powf(p),
            2.0 * squared_weight_integral(p, x)?.powf(p),
        )],
        ClaimId::L6 => {
            let m = r_derived(p, x);
            vec![Clause::common(
                "L6.22",
                false,
                q.asin + m * q.asinh,
                (m + 1.0) * q.asin2,
            )]
        }
        _ => unreachable!("not a lemma claim"),
    })
}

/// Integral inequality instances `L1`..`L6` at `x`, with the arc functions integrated by
/// quadrature.
pub fn check_integral_lemmas(p: PExponent, x: f64, tol: f64) -> Vec<ClaimReport> {
    let site = Site::normalized(p.value(), None, x);
    [
        ClaimId::L1,
        ClaimId::L2,
        ClaimId::L3,
        ClaimId::L4,
        ClaimId::L5,
        ClaimId::L6,
    ]
    .into_iter()
    .flat_map(|id| to_reports(site, id, clauses_lemma(id, p.value(), x), tol))
    .collect()
}

// ---------------------------------------------------------------- dispatch

/// Clauses of a point-shaped claim at `(p, q, x)`.
pub fn point_clauses(id: ClaimId, p: f64, q: Option<f64>, x: f64) -> Result<Vec<Clause>> {
    let need_q = || q.ok_or_else(|| Error::domain(id.name(), "claim needs q"));
    match id {
        ClaimId::T1 => clauses_chain(p, x),
        ClaimId::T2c => clauses_ratio_bounds(p, need_q()?, x),
        ClaimId::T3 => clauses_product(p, x),
        ClaimId::T4 => clauses_sum(p, x),
        ClaimId::T5 => clauses_chebyshev_gruss(p, x),
        ClaimId::T6 => clauses_single_tl(p, x),
        ClaimId::T7 => clauses_single_pm(p, x),
        ClaimId::T8 => clauses_constant_ratio(p, x),
        ClaimId::C1 => clauses_c1(p, x),
        ClaimId::C2 => clauses_c2(p, x),
        ClaimId::C3 => clauses_c3(p, x),
        ClaimId::C4 => clauses_c4(p, need_q()?, x),
        ClaimId::C5 => clauses_c5(x),
        ClaimId::C6 => clauses_c6(p, x),
        ClaimId::L1 | ClaimId::L2 | ClaimId::L3 | ClaimId::L4 | ClaimId::L5 | ClaimId::L6 => {
            clauses_lemma(id, p, x)
        }
        ClaimId::T2a | ClaimId::T2b => Err(Error::domain(id.name(), "not a point claim")),
    }
}

// ---------------------------------------------------------------- grids

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Spacing {
    Linear,
    Log,
}

/// `count` points from `lo` to `hi` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl Axis {
    pub fn new(lo: f64, hi: f64, count: usize, spacing: Spacing) -> Result<Self> {
        let axis = Axis {
            lo,
            hi,
            count,
            spacing,
        };
        axis.validate()?;
        Ok(axis)
    }

    pub fn single(v: f64) -> Self {
        Axis {
            lo: v,
            hi: v,
            count: 1,
            spacing: Spacing::Linear,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite()) || self.lo > self.hi {
            return Err(Error::domain(
                "Axis",
                format!("need finite lo <= hi, got {}:{}", self.lo, self.hi),
            ));
        }
        if self.count == 0 {
            return Err(Error::domain("Axis", "point count must be positive"));
        }
        if self.count > 1 && self.lo == self.hi {
            return Err(Error::domain("Axis", "several points need lo < hi"));
        }
        if self.spacing == Spacing::Log && !(self.lo > 0.0) {
            return Err(Error::domain("Axis", "log spacing needs lo > 0"));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.lo];
        }
        let n = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i == self.count - 1 {
                    return self.hi;
                }
                let s = i as f64 / n;
                match self.spacing {
                    Spacing::Linear => self.lo + s * (self.hi - self.lo),
                    Spacing::Log => (self.lo.ln() + s * (self.hi.ln() - self.lo.ln())).exp(),
                }
            })
            .collect()
    }
}

/// Points of a scan: normalized `x` values or explicit pairs.
#[derive(Debug, Clone, PartialEq)]
pub enum Points {
    X(Vec<f64>),
    Pairs(Vec<(f64, f64)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub p: Vec<f64>,
    pub q: Vec<f64>,
    pub points: Points,
}

impl GridSpec {
    pub fn new(p: Vec<f64>, q: Vec<f64>, points: Points) -> Self {
        GridSpec { p, q, points }
    }

    /// The common `p` in `{2..10}` by `x` in `linspace(0.01, 0.99, 99)` grid.
    pub fn standard() -> Self {
        GridSpec {
            p: (2..=10).map(f64::from).collect(),
            q: Vec::new(),
            points: Points::X(
                Axis::new(0.01, 0.99, 99, Spacing::Linear)
                    .expect("valid axis")
                    .values(),
            ),
        }
    }

    fn sites(&self, p: f64, q: Option<f64>) -> Vec<Site> {
        match &self.points {
            Points::X(xs) => xs.iter().map(|&x| Site::normalized(p, q, x)).collect(),
            Points::Pairs(pairs) => pairs
                .iter()
                .filter_map(|&(a, b)| MeanInput::new(a, b).ok())
                .map(|m| Site::from_input(p, q, &m))
                .collect(),
        }
    }

    /// Sorted distinct `x` values of the grid.
    fn xs(&self) -> Vec<f64> {
        let mut xs: Vec<f64> = match &self.points {
            Points::X(xs) => xs.clone(),
            Points::Pairs(pairs) => pairs
                .iter()
                .filter_map(|&(a, b)| MeanInput::new(a, b).ok())
                .map(|m| m.x())
                .collect(),
        };
        xs.retain(|x| *x > 0.0 && *x < 1.0);
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        xs
    }
}

enum Task {
    Point(ClaimId, Site),
    Sequence(f64, f64, Vec<f64>),
    PerPair(f64, f64),
}

impl Task {
    fn run(&self, tol: f64) -> Vec<ClaimReport> {
        match self {
            Task::Point(id, site) => {
                if !(site.x > 0.0 && site.x < 1.0) {
                    return Vec::new();
                }
                to_reports(*site, *id, point_clauses(*id, site.p, site.q, site.x), tol)
            }
            Task::Sequence(p, q, xs) => {
                let (Ok(pp), Ok(qq)) = (PExponent::new(*p), PExponent::new(*q)) else {
                    return vec![Site::normalized(*p, Some(*q), f64::NAN).error(ClaimId::T2a)];
                };
                RatioPair::ALL
                    .iter()
                    .flat_map(|&pair| check_ratio_monotonicity(pair, pp, qq, xs, tol))
                    .collect()
            }
            Task::PerPair(p, q) => match (PExponent::new(*p), PExponent::new(*q)) {
                (Ok(pp), Ok(qq)) => check_x0(pp, qq, tol),
                _ => vec![Site::normalized(*p, Some(*q), f64::NAN).error(ClaimId::T2b)],
            },
        }
    }
}

/// Evaluates the claims over the grid. Rows are ordered by claim (in
/// canonical order), then `p`, `q` and point, independently of how the
/// work is scheduled. Points outside a claim's domain are skipped; claims
/// that need `q` are skipped when the grid has none.
pub fn scan(claims: &[ClaimId], grid: &GridSpec, tol: f64) -> Vec<ClaimReport> {
    let mut ids: Vec<ClaimId> = claims.to_vec();
    ids.sort();
    ids.dedup();
    let xs = grid.xs();
    let mut tasks = Vec::new();
    for id in ids {
        let claim = id.claim();
        let qs: Vec<Option<f64>> = if claim.domain.needs_q {
            grid.q.iter().copied().map(Some).collect()
        } else {
            vec![None]
        };
        for &p in &grid.p {
            for &q in &qs {
                if !claim.domain.admits(p, q) {
                    continue;
                }
                match claim.shape {
                    Shape::Point => {
                        for site in grid.sites(p, q) {
                            tasks.push(Task::Point(id, site));
                        }
                    }
                    Shape::Sequence => {
                        if xs.len() >= 2 {
                            tasks.push(Task::Sequence(p, q.expect("domain needs q"), xs.clone()));
                        }
                    }
                    Shape::PerPair => tasks.push(Task::PerPair(p, q.expect("domain needs q"))),
                }
            }
        }
    }
    tasks
        .par_iter()
        .map(|t| t.run(tol))
        .collect::<Vec<_>>()
        .concat()
}

/// Per claim and variant: number of rows, smallest margin, violations and
/// evaluation errors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub claim: String,
    pub variant: Variant,
    pub points: usize,
    pub min_margin: Option<f64>,
    pub violations: usize,
    pub errors: usize,
}

pub fn summarize(reports: &[ClaimReport]) -> Vec<ClaimSummary> {
    let mut order: Vec<(String, Variant)> = Vec::new();
    let mut map: HashMap<(String, Variant), ClaimSummary> = HashMap::new();
    for r in reports {
        let key = (r.claim().to_string(), r.variant);
        let entry = map.entry(key.clone()).or_insert_with(|| {
            order.push(key.clone());
            ClaimSummary {
                claim: key.0.clone(),
                variant: key.1,
                points: 0,
                min_margin: None,
                violations: 0,
                errors: 0,
            }
        });
        entry.points += 1;
        match r.status {
            Status::Violated => entry.violations += 1,
            Status::Error => entry.errors += 1,
            _ => {}
        }
        if let Some(m) = r.margin.filter(|m| m.is_finite()) {
            entry.min_margin = Some(entry.min_margin.map_or(m, |cur: f64| cur.min(m)));
        }
    }
    let rank = |c: &str| {
        ClaimId::from_str(c)
            .map(|id| id as usize)
            .unwrap_or(usize::MAX)
    };
    order.sort_by(|a, b| {
        rank(&a.0)
            .cmp(&rank(&b.0))
            .then(a.0.cmp(&b.0))
            .then(a.1.cmp(&b.1))
    });
    order
        .into_iter()
        .map(|k| map.remove(&k).expect("summary key"))
        .collect()
}

/// Overall result of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// No violations and no errors.
    Clean,
    /// Only `as-printed` clauses are violated.
    PrintedOnly,
    /// An `as-derived` or `common` clause is violated, or an evaluation
    /// failed.
    Failed,
}

impl Outcome {
    pub fn of(reports: &[ClaimReport]) -> Outcome {
        let gating = reports.iter().any(|r| {
            r.status == Status::Error || (r.status == Status::Violated && r.variant.gates())
        });
        if gating {
            Outcome::Failed
        } else if reports.iter().any(|r| r.status == Status::Violated) {
            Outcome::PrintedOnly
        } else {
            Outcome::Clean
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Clean | Outcome::PrintedOnly => 0,
            Outcome::Failed => 1,
        }
    }
}
