use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error in {function}: {message}")]
    Domain {
        function: &'static str,
        message: String,
    },

    /// An iterative method exhausted its budget above tolerance.
    #[error("{what} did not converge: {detail}")]
    NonConvergence { what: &'static str, detail: String },

    /// Integration interval is empty, reversed or not representable.
    #[error("invalid integration domain [{lo}, {hi}]: {reason}")]
    InvalidDomain { lo: f64, hi: f64, reason: String },

    /// The integrand returned NaN or an infinity at an interior node.
    #[error("integrand is not finite at t = {t}")]
    NonFinite { t: f64 },

    /// The root bracket does not enclose a sign change.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// Independent representations of the same quantity disagree.
    #[error("{what}: independent representations disagree by {residual:e}")]
    Inconsistent { what: &'static str, residual: f64 },

    /// Reading or writing a report failed.
    #[error("report: {0}")]
    Report(String),
}

impl Error {
    pub(crate) fn domain(function: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            function,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
