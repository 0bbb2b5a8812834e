//! Python bindings: generalized trigonometric functions, means, constants
//! and the inequality verifier.

use pmean::inequalities::{self, ClaimId, ClaimReport, GridSpec, Points};
use pmean::means::{self, ArcKind, Classical, MeanInput};
use pmean::ptrig::{self, PExponent};
use pmean::special::{self, HypergeometricArgs};
use pmean::Error;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Domain { .. } | Error::InvalidDomain { .. } => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn pexp(p: f64) -> PyResult<PExponent> {
    PExponent::new(p).map_err(to_py)
}

fn arc_kind(kind: &str) -> PyResult<ArcKind> {
    match kind {
        "L" => Ok(ArcKind::L),
        "P" => Ok(ArcKind::P),
        "T" => Ok(ArcKind::T),
        "M" => Ok(ArcKind::M),
        _ => Err(PyValueError::new_err(format!(
            "kind must be one of L, P, T, M; got '{kind}'"
        ))),
    }
}

fn classical_kind(kind: &str) -> PyResult<Classical> {
    Classical::ALL
        .into_iter()
        .find(|c| format!("{c:?}") == kind)
        .ok_or_else(|| PyValueError::new_err(format!("unknown classical mean '{kind}'")))
}

macro_rules! arc_binding {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[pyfunction]
        fn $name(p: f64, x: f64) -> PyResult<f64> {
            ptrig::$name(pexp(p)?, x).map_err(to_py)
        }
    };
}

arc_binding!(arcsin_p, "`int_0^x (1 - t^p)^(-1/p) dt`, 0 <= x <= 1.");
arc_binding!(arccos_p, "`arcsin_p((1 - x^p)^(1/p))`, 0 <= x <= 1.");
arc_binding!(arctan_p, "`int_0^x (1 + t^p)^(-1) dt`.");
arc_binding!(arcsinh_p, "`int_0^x (1 + t^p)^(-1/p) dt`.");
arc_binding!(arctanh_p, "`int_0^x (1 - t^p)^(-1) dt`, 0 <= x < 1.");
arc_binding!(arccosh_p, "`arcsinh_p((t^p - 1)^(1/p))`, t >= 1.");
arc_binding!(sin_p, "Inverse of `arcsin_p`, extended to the real line.");

#[pyfunction]
fn pi_p(p: f64) -> PyResult<f64> {
    Ok(ptrig::pi_p(pexp(p)?))
}

/// `(pi_p, a_p, b_p, c_p)`, each cross-checked against independent
/// representations.
#[pyfunction]
fn constants(p: f64) -> PyResult<(f64, f64, f64, f64)> {
    let c = ptrig::constants(pexp(p)?).map_err(to_py)?;
    Ok((c.pi_p, c.a_p, c.b_p, c.c_p))
}

#[pyfunction]
fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> PyResult<f64> {
    let args = HypergeometricArgs::new(a, b, c, z).map_err(to_py)?;
    special::hyp2f1(&args).map_err(to_py)
}

#[pyfunction]
fn gamma(x: f64) -> PyResult<f64> {
    special::gamma(x).map_err(to_py)
}

#[pyfunction]
fn digamma(x: f64) -> PyResult<f64> {
    special::digamma(x).map_err(to_py)
}

#[pyfunction]
fn beta(x: f64, y: f64) -> PyResult<f64> {
    special::beta(x, y).map_err(to_py)
}

/// Normalized incomplete beta `I_s(x, y)`.
#[pyfunction]
fn beta_incomplete(x: f64, y: f64, s: f64) -> PyResult<f64> {
    special::beta_incomplete(x, y, s).map_err(to_py)
}

/// Classical mean `kind` in {A, G, L, P, T, M, Q}.
#[pyfunction]
fn classical_mean(kind: &str, a: f64, b: f64) -> PyResult<f64> {
    let input = MeanInput::new(a, b).map_err(to_py)?;
    Ok(means::classical(classical_kind(kind)?, &input).value)
}

/// `A x / arc_p(x)` with `x = (a - b) / (a + b)`; `kind` in {L, P, T, M}.
#[pyfunction]
fn tilde_mean(kind: &str, p: f64, a: f64, b: f64) -> PyResult<f64> {
    let input = MeanInput::new(a, b).map_err(to_py)?;
    Ok(means::tilde_mean(arc_kind(kind)?, pexp(p)?, &input)
        .map_err(to_py)?
        .value)
}

/// Neuman-type mean built from the Schwab-Borchardt mean of order `p`.
#[pyfunction]
fn neuman_mean(kind: &str, p: f64, a: f64, b: f64) -> PyResult<f64> {
    let input = MeanInput::new(a, b).map_err(to_py)?;
    Ok(means::neuman_mean(arc_kind(kind)?, pexp(p)?, &input)
        .map_err(to_py)?
        .value)
}

#[pyfunction]
fn bhatia_li(p: f64, a: f64, b: f64) -> PyResult<f64> {
    let input = MeanInput::new(a, b).map_err(to_py)?;
    Ok(means::bhatia_li(p, &input).map_err(to_py)?.value)
}

/// Every mean of the pair as `(label, value)` rows.
#[pyfunction]
fn all_means(p: f64, a: f64, b: f64) -> PyResult<Vec<(String, f64)>> {
    let input = MeanInput::new(a, b).map_err(to_py)?;
    means::all_means(pexp(p)?, &input).map_err(to_py)
}

#[pyfunction]
fn solve_x0(p: f64, q: f64) -> PyResult<f64> {
    inequalities::solve_x0(p, q).map_err(to_py)
}

/// One evaluated clause.
#[pyclass(name = "ClaimReport", get_all, frozen)]
struct PyClaimReport {
    claim_id: String,
    variant: String,
    p: f64,
    q: Option<f64>,
    a: f64,
    b: f64,
    x: f64,
    lhs: Option<f64>,
    rhs: Option<f64>,
    margin: Option<f64>,
    status: String,
}

#[pymethods]
impl PyClaimReport {
    fn __repr__(&self) -> String {
        format!(
            "ClaimReport({} {} p={} q={:?} x={} margin={:?} {})",
            self.claim_id, self.variant, self.p, self.q, self.x, self.margin, self.status
        )
    }
}

impl From<ClaimReport> for PyClaimReport {
    fn from(r: ClaimReport) -> Self {
        PyClaimReport {
            claim_id: r.claim_id,
            variant: r.variant.to_string(),
            p: r.p,
            q: r.q,
            a: r.a,
            b: r.b,
            x: r.x,
            lhs: r.lhs,
            rhs: r.rhs,
            margin: r.margin,
            status: r.status.to_string(),
        }
    }
}

/// Evaluates claims (ids such as "T1", "C4"; all when omitted) over
/// `p x q x x`.
#[pyfunction]
#[pyo3(signature = (claims=None, p=vec![2.0], q=vec![], x=vec![0.5], tol=inequalities::DEFAULT_TOL))]
fn verify(
    claims: Option<Vec<String>>,
    p: Vec<f64>,
    q: Vec<f64>,
    x: Vec<f64>,
    tol: f64,
) -> PyResult<Vec<PyClaimReport>> {
    let ids = match claims {
        None => ClaimId::ALL.to_vec(),
        Some(list) => list
            .iter()
            .map(|s| s.parse::<ClaimId>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(to_py)?,
    };
    let grid = GridSpec::new(p, q, Points::X(x));
    Ok(inequalities::scan(&ids, &grid, tol)
        .into_iter()
        .map(PyClaimReport::from)
        .collect())
}

#[pymodule]
fn pypmean(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(arcsin_p, m)?)?;
    m.add_function(wrap_pyfunction!(arccos_p, m)?)?;
    m.add_function(wrap_pyfunction!(arctan_p, m)?)?;
    m.add_function(wrap_pyfunction!(arcsinh_p, m)?)?;
    m.add_function(wrap_pyfunction!(arctanh_p, m)?)?;
    m.add_function(wrap_pyfunction!(arccosh_p, m)?)?;
    m.add_function(wrap_pyfunction!(sin_p, m)?)?;
    m.add_function(wrap_pyfunction!(pi_p, m)?)?;
    m.add_function(wrap_pyfunction!(constants, m)?)?;
    m.add_function(wrap_pyfunction!(hyp2f1, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(digamma, m)?)?;
    m.add_function(wrap_pyfunction!(beta, m)?)?;
    m.add_function(wrap_pyfunction!(beta_incomplete, m)?)?;
    m.add_function(wrap_pyfunction!(classical_mean, m)?)?;
    m.add_function(wrap_pyfunction!(tilde_mean, m)?)?;
    m.add_function(wrap_pyfunction!(neuman_mean, m)?)?;
    m.add_function(wrap_pyfunction!(bhatia_li, m)?)?;
    m.add_function(wrap_pyfunction!(all_means, m)?)?;
    m.add_function(wrap_pyfunction!(solve_x0, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_class::<PyClaimReport>()?;
    Ok(())
}
