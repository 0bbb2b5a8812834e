//! The `pmean` command line: evaluation, constants, means, claim
//! verification and the `x0` root.
//!
//! Exit codes: 0 success (also when only as-printed clauses fail), 1 when
//! an as-derived or common clause is violated or cannot be evaluated, 2 on
//! usage or domain errors.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::inequalities::{
    self, solve_x0, u2, Axis, ClaimId, GridSpec, Outcome, Points, Spacing, Variant, DEFAULT_TOL,
};
use crate::means::{self, MeanInput};
use crate::ptrig::{self, PExponent};
use crate::quadrature::{self, Integrand, Node};
use crate::report::{self, fmt15, Format};
use crate::special::{self, HypergeometricArgs};

/// Environment variable overriding the default classification tolerance.
pub const TOL_ENV: &str = "PMEAN_TOL";

#[derive(Parser, Debug)]
#[command(
    name = "pmean",
    version,
    about = "Generalized trigonometric functions, p-means and inequality verification"
)]
pub struct Cli {
    /// Tolerance for classifying margins (overrides PMEAN_TOL)
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a function at one or more points
    Eval(EvalArgs),
    /// Print pi_p, a_p, b_p, c_p with cross-check residuals
    Const(ConstArgs),
    /// Print every mean of a pair in ascending order
    Means(MeansArgs),
    /// Check inequality claims over a grid
    Verify(VerifyArgs),
    /// Solve q x^(q-p) + (q-p) x^q = p on (0, 1)
    X0(X0Args),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalFn {
    #[value(name = "arcsin_p")]
    ArcsinP,
    #[value(name = "arccos_p")]
    ArccosP,
    #[value(name = "arctan_p")]
    ArctanP,
    #[value(name = "arcsinh_p")]
    ArcsinhP,
    #[value(name = "arctanh_p")]
    ArctanhP,
    #[value(name = "arccosh_p")]
    ArccoshP,
    #[value(name = "sin_p")]
    SinP,
    #[value(name = "hyp2f1")]
    Hyp2f1,
    #[value(name = "gamma")]
    Gamma,
    #[value(name = "digamma")]
    Digamma,
    #[value(name = "beta")]
    Beta,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    pub function: EvalFn,
    /// Exponent p > 1 (p-functions)
    #[arg(long)]
    pub p: Option<f64>,
    /// Argument: a value, a comma list or lo:hi:count (z for hyp2f1)
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Second argument of beta
    #[arg(long)]
    pub y: Option<f64>,
    /// hyp2f1 parameter a
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// hyp2f1 parameter b
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// hyp2f1 parameter c
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    /// Also print an independent quadrature value and the discrepancy
    #[arg(long)]
    pub oracle: bool,
    /// Logarithmic spacing for ranges
    #[arg(long)]
    pub log: bool,
}

#[derive(Args, Debug)]
pub struct ConstArgs {
    #[arg(long)]
    pub p: f64,
}

#[derive(Args, Debug)]
pub struct MeansArgs {
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub b: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantFilter {
    All,
    #[value(name = "as-printed")]
    AsPrinted,
    #[value(name = "as-derived")]
    AsDerived,
    Common,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Table,
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated claim ids, `all` or `none`
    #[arg(long, default_value = "all")]
    pub claims: String,
    /// Exponents: a value, a comma list or lo:hi:count
    #[arg(long, default_value = "2:10:9")]
    pub p: String,
    /// Second exponents for claims comparing two orders
    #[arg(long)]
    pub q: Option<String>,
    /// Normalized points x = (a - b) / (a + b); default 0.01:0.99:99
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub x: Option<String>,
    /// First entries of the pairs (with --b; all combinations are used)
    #[arg(long, requires = "b")]
    pub a: Option<String>,
    #[arg(long, requires = "a")]
    pub b: Option<String>,
    /// Logarithmic spacing for ranges
    #[arg(long)]
    pub log: bool,
    #[arg(long, value_enum, default_value = "all")]
    pub variant: VariantFilter,
    #[arg(long, value_enum, default_value = "table")]
    pub format: FormatArg,
    /// Write the full report here (CSV unless --format json)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct X0Args {
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub q: f64,
}

fn io_err(e: std::io::Error) -> Error {
    Error::Report(e.to_string())
}

/// Tolerance from the flag, then `PMEAN_TOL`, then the default.
pub fn resolve_tol(flag: Option<f64>) -> Result<f64> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(s) => s.trim().parse().map_err(|_| {
                Error::domain("tolerance", format!("{TOL_ENV}='{s}' is not a number"))
            })?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if tol >= 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(Error::domain(
            "tolerance",
            format!("need a finite tol >= 0, got {tol}"),
        ))
    }
}

/// Parses `v`, `v1,v2,...` or `lo:hi:count`.
pub fn parse_values(s: &str, log: bool) -> Result<Vec<f64>> {
    let num = |t: &str| -> Result<f64> {
        t.trim()
            .parse::<f64>()
            .map_err(|_| Error::domain("range", format!("'{t}' is not a number")))
    };
    let parts: Vec<&str> = s.split(':').collect();
    match parts.len() {
        1 => s.split(',').map(num).collect(),
        3 => {
            let count = parts[2].trim().parse::<usize>().map_err(|_| {
                Error::domain("range", format!("'{}' is not a point count", parts[2]))
            })?;
            let spacing = if log { Spacing::Log } else { Spacing::Linear };
            Ok(Axis::new(num(parts[0])?, num(parts[1])?, count, spacing)?.values())
        }
        _ => Err(Error::domain(
            "range",
            format!("expected lo:hi:count, got '{s}'"),
        )),
    }
}

pub fn parse_claims(s: &str) -> Result<Vec<ClaimId>> {
    match s.trim() {
        "all" => Ok(ClaimId::ALL.to_vec()),
        "none" | "" => Ok(Vec::new()),
        list => list.split(',').map(str::parse).collect(),
    }
}

/// Runs a parsed command, writing results to `out` and diagnostics to
/// `err`. Returns the exit code; errors map to exit code 2.
pub fn run<W: Write, E: Write>(cli: &Cli, out: &mut W, err: &mut E) -> Result<i32> {
    let tol = resolve_tol(cli.tol)?;
    match &cli.command {
        Command::Eval(args) => cmd_eval(args, out),
        Command::Const(args) => cmd_const(args, out),
        Command::Means(args) => cmd_means(args, out),
        Command::Verify(args) => cmd_verify(args, tol, out, err),
        Command::X0(args) => cmd_x0(args, out),
    }
}

fn need_p(p: Option<f64>, function: EvalFn) -> Result<PExponent> {
    let p = p.ok_or_else(|| Error::domain("eval", format!("{function:?} needs --p")))?;
    PExponent::new(p)
}

fn eval_value(args: &EvalArgs, x: f64) -> Result<f64> {
    let f = args.function;
    match f {
        EvalFn::ArcsinP => ptrig::arcsin_p(need_p(args.p, f)?, x),
        EvalFn::ArccosP => ptrig::arccos_p(need_p(args.p, f)?, x),
        EvalFn::ArctanP => ptrig::arctan_p(need_p(args.p, f)?, x),
        EvalFn::ArcsinhP => ptrig::arcsinh_p(need_p(args.p, f)?, x),
        EvalFn::ArctanhP => ptrig::arctanh_p(need_p(args.p, f)?, x),
        EvalFn::ArccoshP => ptrig::arccosh_p(need_p(args.p, f)?, x),
        EvalFn::SinP => ptrig::sin_p(need_p(args.p, f)?, x),
        EvalFn::Hyp2f1 => special::hyp2f1(&hyp_args(args, x)?),
        EvalFn::Gamma => special::gamma(x),
        EvalFn::Digamma => special::digamma(x),
        EvalFn::Beta => special::beta(x, need_y(args)?),
    }
}

fn need_y(args: &EvalArgs) -> Result<f64> {
    args.y
        .ok_or_else(|| Error::domain("eval", "beta needs --y"))
}

fn hyp_args(args: &EvalArgs, z: f64) -> Result<HypergeometricArgs> {
    match (args.a, args.b, args.c) {
        (Some(a), Some(b), Some(c)) => HypergeometricArgs::new(a, b, c, z),
        _ => Err(Error::domain("eval", "hyp2f1 needs --a, --b and --c")),
    }
}

/// `sin_p` from the quadrature `arcsin_p`, reduced to `[0, pi_p / 2]` and
/// inverted by bisection.
fn sin_p_oracle(p: PExponent, theta: f64) -> Result<f64> {
    let pi = ptrig::pi_p(p);
    let mut t = theta.rem_euclid(2.0 * pi);
    let sign = if t < pi { 1.0 } else { -1.0 };
    t = t.rem_euclid(pi);
    t = t.min(pi - t);
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if ptrig::arcsin_p_quadrature(p, mid)? < t {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(sign * 0.5 * (lo + hi))
}

fn gamma_oracle(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("gamma oracle", "needs x > 0"));
    }
    let f = move |n: Node| n.t.powf(x - 1.0) * (-n.t).exp();
    let mut head = Integrand::new(0.0, 1.0, f);
    if x < 1.0 {
        head = head.singular_lo(1.0 - x);
    }
    let tail = Integrand::semi_infinite(1.0, f);
    Ok(quadrature::integrate(&head)?.value + quadrature::integrate_semi_infinite(&tail)?.value)
}

/// Binet's second formula: `psi(x) = ln x - 1/(2x) - 2 int_0^inf t / ((t^2 + x^2)(e^(2 pi t) - 1)) dt`.
fn digamma_oracle(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("digamma oracle", "needs x > 0"));
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let f = move |n: Node| {
        let t = n.t;
        if t == 0.0 {
            return 1.0 / (two_pi * x * x);
        }
        t / ((t * t + x * x) * (two_pi * t).exp_m1())
    };
    let integral = quadrature::integrate_semi_infinite(&Integrand::semi_infinite(0.0, f))?.value;
    Ok(x.ln() - 0.5 / x - 2.0 * integral)
}

fn beta_oracle(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::domain("beta oracle", "needs x, y > 0"));
    }
    let f = move |n: Node| n.from_lo.powf(x - 1.0) * n.to_hi.powf(y - 1.0);
    let mut g = Integrand::new(0.0, 1.0, f);
    if x < 1.0 {
        g = g.singular_lo(1.0 - x);
    }
    if y < 1.0 {
        g = g.singular_hi(1.0 - y);
    }
    Ok(quadrature::integrate(&g)?.value)
}

fn eval_oracle(args: &EvalArgs, x: f64) -> Result<f64> {
    let f = args.function;
    match f {
        EvalFn::ArcsinP => ptrig::arcsin_p_quadrature(need_p(args.p, f)?, x),
        EvalFn::ArccosP => ptrig::arccos_p_quadrature(need_p(args.p, f)?, x),
        EvalFn::ArctanP => ptrig::arctan_p_quadrature(need_p(args.p, f)?, x),
        EvalFn::ArcsinhP => ptrig::arcsinh_p_quadrature(need_p(args.p, f)?, x),
        EvalFn::ArctanhP => ptrig::arctanh_p_quadrature(need_p(args.p, f)?, x),
        EvalFn::ArccoshP => ptrig::arccosh_p_quadrature(need_p(args.p, f)?, x),
        EvalFn::SinP => sin_p_oracle(need_p(args.p, f)?, x),
        EvalFn::Hyp2f1 => special::hyp2f1_integral(&hyp_args(args, x)?),
        EvalFn::Gamma => gamma_oracle(x),
        EvalFn::Digamma => digamma_oracle(x),
        EvalFn::Beta => beta_oracle(x, need_y(args)?),
    }
}

fn cmd_eval<W: Write>(args: &EvalArgs, out: &mut W) -> Result<i32> {
    let xs = parse_values(&args.x, args.log)?;
    let several = xs.len() > 1;
    for x in xs {
        let value = eval_value(args, x)?;
        let mut line = if several {
            format!("{}  {}", fmt15(x), fmt15(value))
        } else {
            fmt15(value)
        };
        if args.oracle {
            match eval_oracle(args, x) {
                Ok(o) => line.push_str(&format!(
                    "  oracle {}  discrepancy {}",
                    fmt15(o),
                    fmt15((value - o).abs())
                )),
                Err(e) => line.push_str(&format!("  oracle unavailable ({e})")),
            }
        }
        writeln!(out, "{line}").map_err(io_err)?;
    }
    Ok(0)
}

fn cmd_const<W: Write>(args: &ConstArgs, out: &mut W) -> Result<i32> {
    let c = ptrig::constants(PExponent::new(args.p)?)?;
    let rows: Vec<Vec<String>> = [
        ("p", c.p),
        ("pi_p", c.pi_p),
        ("a_p", c.a_p),
        ("b_p", c.b_p),
        ("c_p", c.c_p),
        ("residual_pi_p", c.residuals.pi_p),
        ("residual_b_p", c.residuals.b_p),
        ("residual_c_p", c.residuals.c_p),
    ]
    .iter()
    .map(|(k, v)| vec![k.to_string(), fmt15(*v)])
    .collect();
    out.write_all(report::render_columns(&rows).as_bytes())
        .map_err(io_err)?;
    Ok(0)
}

/// Position of a row label in `L <= L~ < P~ < A < M~ < T~ <= Q`.
fn chain_position(label: &str) -> Option<usize> {
    let tilde = |letter: &str| label.starts_with(&format!("{letter}~_"));
    match label {
        "L" => Some(1),
        "A" => Some(4),
        "Q" => Some(7),
        _ if tilde("L") => Some(2),
        _ if tilde("P") => Some(3),
        _ if tilde("M") => Some(5),
        _ if tilde("T") => Some(6),
        _ => None,
    }
}

fn cmd_means<W: Write>(args: &MeansArgs, out: &mut W) -> Result<i32> {
    let p = PExponent::new(args.p)?;
    let input = MeanInput::new(args.a, args.b)?;
    let mut rows = means::all_means(p, &input)?;
    rows.sort_by(|x, y| x.1.total_cmp(&y.1));
    let mut table = vec![vec![
        "mean".to_string(),
        "value".to_string(),
        "chain".to_string(),
    ]];
    for (label, value) in rows {
        let chain = chain_position(&label).map_or_else(|| "-".to_string(), |i| i.to_string());
        table.push(vec![label, fmt15(value), chain]);
    }
    out.write_all(report::render_columns(&table).as_bytes())
        .map_err(io_err)?;
    Ok(0)
}

fn grid_from(args: &VerifyArgs) -> Result<GridSpec> {
    let p = parse_values(&args.p, args.log)?;
    let q = match &args.q {
        Some(s) => parse_values(s, args.log)?,
        None => Vec::new(),
    };
    let points = match (&args.x, &args.a, &args.b) {
        (Some(x), _, _) => {
            let xs = parse_values(x, args.log)?;
            if let Some(bad) = xs.iter().find(|x| !(**x > 0.0 && **x < 1.0)) {
                return Err(Error::domain(
                    "verify",
                    format!("x must lie in (0, 1), got {bad}"),
                ));
            }
            Points::X(xs)
        }
        (None, Some(a), Some(b)) => {
            let (a, b) = (parse_values(a, args.log)?, parse_values(b, args.log)?);
            let mut pairs = Vec::new();
            for &ai in &a {
                for &bi in &b {
                    MeanInput::new(ai, bi)?;
                    if ai != bi {
                        pairs.push((ai, bi));
                    }
                }
            }
            Points::Pairs(pairs)
        }
        _ => Points::X(Axis::new(0.01, 0.99, 99, Spacing::Linear)?.values()),
    };
    Ok(GridSpec::new(p, q, points))
}

fn cmd_verify<W: Write, E: Write>(
    args: &VerifyArgs,
    tol: f64,
    out: &mut W,
    err: &mut E,
) -> Result<i32> {
    let claims = parse_claims(&args.claims)?;
    let grid = grid_from(args)?;
    let mut reports = inequalities::scan(&claims, &grid, tol);
    let keep = |v: Variant| match args.variant {
        VariantFilter::All => true,
        VariantFilter::AsPrinted => v == Variant::AsPrinted,
        VariantFilter::AsDerived => v == Variant::AsDerived,
        VariantFilter::Common => v == Variant::Common,
    };
    reports.retain(|r| keep(r.variant));

    let format = match args.format {
        FormatArg::Table => Format::Table,
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    let summary = inequalities::summarize(&reports);
    // the summary goes wherever the report does not
    let mut summary_text = Vec::new();
    report::write_summary(&summary, &mut summary_text)?;
    for r in reports.iter().filter(|r| r.claim_id == "T2b.3") {
        let q = r.q.map_or_else(|| "-".to_string(), fmt15);
        writeln!(
            summary_text,
            "x0 (p = {}, q = {}) = {}",
            fmt15(r.p),
            q,
            fmt15(r.x)
        )
        .map_err(io_err)?;
    }
    match (&args.out, format) {
        (Some(path), _) => {
            let file_format = if format == Format::Json {
                Format::Json
            } else {
                Format::Csv
            };
            write_file(path, &reports, file_format)?;
            out.write_all(&summary_text).map_err(io_err)?;
        }
        (None, Format::Table) => out.write_all(&summary_text).map_err(io_err)?,
        (None, f) => {
            report::write_report(&reports, f, &mut *out)?;
            err.write_all(&summary_text).map_err(io_err)?;
        }
    }

    let outcome = Outcome::of(&reports);
    match outcome {
        Outcome::Clean => {}
        Outcome::PrintedOnly => {
            let n = reports
                .iter()
                .filter(|r| r.status == inequalities::Status::Violated)
                .count();
            writeln!(
                err,
                "warning: {n} as-printed rows violated; as-derived and common clauses hold"
            )
            .map_err(io_err)?;
        }
        Outcome::Failed => {
            writeln!(
                err,
                "FAILED: as-derived or common clauses violated or not evaluable"
            )
            .map_err(io_err)?;
        }
    }
    Ok(outcome.exit_code())
}

fn write_file(path: &Path, reports: &[inequalities::ClaimReport], format: Format) -> Result<()> {
    let file = File::create(path).map_err(io_err)?;
    let mut w = BufWriter::new(file);
    report::write_report(reports, format, &mut w)?;
    w.flush().map_err(io_err)
}

fn cmd_x0<W: Write>(args: &X0Args, out: &mut W) -> Result<i32> {
    let x0 = solve_x0(args.p, args.q)?;
    let rows = vec![
        vec!["x0".to_string(), fmt15(x0)],
        vec!["residual".to_string(), fmt15(u2(args.p, args.q, x0).abs())],
    ];
    out.write_all(report::render_columns(&rows).as_bytes())
        .map_err(io_err)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<i32>, String, String) {
        let cli =
            Cli::try_parse_from(std::iter::once("pmean").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ranges() {
        assert_eq!(
            parse_values("2:10:9", false).unwrap(),
            (2..=10).map(f64::from).collect::<Vec<_>>()
        );
        assert_eq!(parse_values("0.5", false).unwrap(), vec![0.5]);
        assert_eq!(parse_values("1,2.5", false).unwrap(), vec![1.0, 2.5]);
        assert!(parse_values("1:2", false).is_err());
        assert!(parse_values("1:2:x", false).is_err());
        assert_eq!(parse_claims("none").unwrap(), vec![]);
        assert_eq!(
            parse_claims("T1,t2b").unwrap(),
            vec![ClaimId::T1, ClaimId::T2b]
        );
    }

    #[test]
    fn eval_examples() {
        let (code, out, _) = run_args(&["eval", "arcsin_p", "--p", "2", "--x", "0.5"]);
        assert_eq!((code.unwrap(), out.as_str()), (0, "0.523598775598299\n"));
        let (_, out, _) = run_args(&["eval", "gamma", "--x", "0.5"]);
        assert_eq!(out, "1.77245385090552\n");
        let (code, _, _) = run_args(&["eval", "arcsin_p", "--p", "1", "--x", "0.5"]);
        assert!(code.is_err());
    }

    #[test]
    fn oracle_flags_agree() {
        for args in [
            vec!["eval", "sin_p", "--p", "3", "--x", "2.5", "--oracle"],
            vec!["eval", "digamma", "--x", "0.7", "--oracle"],
            vec!["eval", "beta", "--x", "0.5", "--y", "2.5", "--oracle"],
            vec!["eval", "gamma", "--x", "0.3", "--oracle"],
            vec![
                "eval", "hyp2f1", "--a", "0.5", "--b", "0.5", "--c", "1.5", "--x", "0.9",
                "--oracle",
            ],
        ] {
            let (code, out, _) = run_args(&args);
            assert_eq!(code.unwrap(), 0);
            let d: f64 = out.trim().rsplit(' ').next().unwrap().parse().unwrap();
            assert!(d < 1e-10, "{args:?}: {out}");
        }
    }

    #[test]
    fn verify_and_x0() {
        let (code, out, _) = run_args(&["verify", "--claims", "T2b", "--p", "2", "--q", "4"]);
        assert_eq!(code.unwrap(), 0);
        assert!(
            out.contains("x0 (p = 2, q = 4) = 0.643594252905583"),
            "{out}"
        );
        let (code, out, _) = run_args(&["verify", "--claims", "none"]);
        assert_eq!(code.unwrap(), 0);
        assert!(out.starts_with("claim"));
        let (code, out, _) = run_args(&["x0", "--p", "2", "--q", "3"]);
        assert_eq!(code.unwrap(), 0);
        assert!(out.contains("0.596071637983"));
        assert!(run_args(&["x0", "--p", "4", "--q", "2"]).0.is_err());
    }
}
