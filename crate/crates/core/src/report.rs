//! Report serialization: CSV and JSON with values rounded to 15
//! significant digits, and plain-text tables for terminals.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inequalities::{ClaimReport, ClaimSummary};

/// Significant digits of every printed or serialized number.
pub const DIGITS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Format {
    Table,
    Csv,
    Json,
}

fn report_err(e: impl std::fmt::Display) -> Error {
    Error::Report(e.to_string())
}

/// Rounds to 15 significant digits; non-finite values pass through.
pub fn round15(v: f64) -> f64 {
    if !v.is_finite() {
        return v;
    }
    format!("{:.*e}", DIGITS - 1, v).parse().unwrap_or(v)
}

fn round_opt(v: Option<f64>) -> Option<f64> {
    v.filter(|v| v.is_finite()).map(round15)
}

/// `printf("%.15g")` formatting, independent of locale.
pub fn fmt15(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return if v.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    let sci = format!("{:.*e}", DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if exp < -4 || exp >= DIGITS as i32 {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), fmt15)
}

/// Copy of a report with every number rounded to 15 significant digits.
pub fn rounded(r: &ClaimReport) -> ClaimReport {
    ClaimReport {
        p: round15(r.p),
        q: round_opt(r.q),
        a: round15(r.a),
        b: round15(r.b),
        x: round15(r.x),
        lhs: round_opt(r.lhs),
        rhs: round_opt(r.rhs),
        margin: round_opt(r.margin),
        ..r.clone()
    }
}

/// Columns: `claim_id, variant, p, q, a, b, x, lhs, rhs, margin, status`;
/// absent values are empty fields.
pub fn write_csv<W: Write>(reports: &[ClaimReport], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record([
        "claim_id", "variant", "p", "q", "a", "b", "x", "lhs", "rhs", "margin", "status",
    ])
    .map_err(report_err)?;
    for r in reports {
        w.serialize(rounded(r)).map_err(report_err)?;
    }
    w.flush().map_err(report_err)
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ClaimReport>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|row| row.map_err(report_err))
        .collect()
}

pub fn to_json(reports: &[ClaimReport]) -> Result<String> {
    let rows: Vec<ClaimReport> = reports.iter().map(rounded).collect();
    let mut s = serde_json::to_string_pretty(&rows).map_err(report_err)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(s: &str) -> Result<Vec<ClaimReport>> {
    serde_json::from_str(s).map_err(report_err)
}

pub fn write_report<W: Write>(reports: &[ClaimReport], format: Format, mut out: W) -> Result<()> {
    match format {
        Format::Csv => write_csv(reports, out),
        Format::Json => out
            .write_all(to_json(reports)?.as_bytes())
            .map_err(report_err),
        Format::Table => write_table(reports, out),
    }
}

/// Pads each column to its widest cell.
pub fn render_columns(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut s = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, cell)| {
                if i + 1 == row.len() {
                    cell.clone()
                } else {
                    format!("{cell:<width$}", width = widths[i])
                }
            })
            .collect();
        s.push_str(&cells.join("  "));
        s.push('\n');
    }
    s
}

pub fn write_table<W: Write>(reports: &[ClaimReport], mut out: W) -> Result<()> {
    let mut rows = vec![[
        "claim_id", "variant", "p", "q", "x", "lhs", "rhs", "margin", "status",
    ]
    .map(String::from)
    .to_vec()];
    for r in reports {
        rows.push(vec![
            r.claim_id.clone(),
            r.variant.to_string(),
            fmt15(r.p),
            fmt_opt(r.q),
            fmt15(r.x),
            fmt_opt(r.lhs),
            fmt_opt(r.rhs),
            fmt_opt(r.margin),
            r.status.to_string(),
        ]);
    }
    out.write_all(render_columns(&rows).as_bytes())
        .map_err(report_err)
}

pub fn write_summary<W: Write>(summary: &[ClaimSummary], mut out: W) -> Result<()> {
    let mut rows = vec![[
        "claim",
        "variant",
        "points",
        "min_margin",
        "violations",
        "errors",
    ]
    .map(String::from)
    .to_vec()];
    for s in summary {
        rows.push(vec![
            s.claim.clone(),
            s.variant.to_string(),
            s.points.to_string(),
            fmt_opt(s.min_margin),
            s.violations.to_string(),
            s.errors.to_string(),
        ]);
    }
    out.write_all(render_columns(&rows).as_bytes())
        .map_err(report_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequalities::{Status, Variant};

    #[test]
    fn fmt15_matches_printf() {
        assert_eq!(fmt15(std::f64::consts::PI / 6.0), "0.523598775598299");
        assert_eq!(fmt15(1.772_453_850_905_516), "1.77245385090552");
        assert_eq!(fmt15(2.0), "2");
        assert_eq!(fmt15(1e-7), "1e-07");
        assert_eq!(fmt15(-1.25e20), "-1.25e+20");
        assert_eq!(fmt15(0.0001), "0.0001");
        assert_eq!(fmt15(123456.5), "123456.5");
    }

    #[test]
    fn round15_is_idempotent() {
        for v in [
            std::f64::consts::E,
            1.0 / 3.0,
            -7.123_456_789_012_345e-9,
            0.0,
        ] {
            let r = round15(v);
            assert_eq!(round15(r), r);
            assert!((r - v).abs() <= 1e-14 * v.abs());
        }
    }

    fn sample() -> Vec<ClaimReport> {
        vec![
            ClaimReport {
                claim_id: "T3.hi".into(),
                variant: Variant::AsDerived,
                p: 2.0,
                q: None,
                a: 1.5,
                b: 0.5,
                x: 0.5,
                lhs: Some(1.0 / 3.0),
                rhs: Some(0.4),
                margin: Some(0.4 - 1.0 / 3.0),
                status: Status::Holds,
            },
            ClaimReport {
                claim_id: "C4".into(),
                variant: Variant::Common,
                p: 2.0,
                q: Some(3.5),
                a: 1.25,
                b: 0.75,
                x: 0.25,
                lhs: None,
                rhs: None,
                margin: None,
                status: Status::Error,
            },
        ]
    }

    #[test]
    fn csv_round_trip() {
        let mut buf = Vec::new();
        write_csv(&sample(), &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("claim_id,variant,p,q,a,b,x,lhs,rhs,margin,status\n"));
        let back = read_csv(buf.as_slice()).unwrap();
        let expected: Vec<_> = sample().iter().map(rounded).collect();
        assert_eq!(back, expected);
        let mut again = Vec::new();
        write_csv(&back, &mut again).unwrap();
        assert_eq!(again, buf);
    }

    #[test]
    fn json_round_trip() {
        let s = to_json(&sample()).unwrap();
        let back = from_json(&s).unwrap();
        assert_eq!(to_json(&back).unwrap(), s);
        assert!(s.contains("\"variant\": \"as-derived\""));
    }
}
