use std::fmt;
use std::io::{self, Write};

use anyhow::Result;
use qtsieve::combinatorics::{
    cocharge_kostka, fake_degree, kostka_number, partitions_of, Partition,
};
use qtsieve::csp::{csp_polynomial, verify_csp, CspKind};
use qtsieve::garsia_haiman::{gh_crosscheck, HILBERT_BOUND};
use qtsieve::macdonald::{hl_kostka, qt_kostka};
use qtsieve::polyring::MultiPoly;
use serde_json::{json, Value};

use crate::{selftest, Command, CspArgs, Format, Kind, Outcome};

/// A parameter problem detected before dispatch.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn emit(format: Format, text: impl fmt::Display, value: Value) {
    let mut out = io::stdout().lock();
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = match format {
        Format::Text => writeln!(out, "{text}"),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()),
    };
}

fn table_text(rows: &[(Partition, MultiPoly)]) -> String {
    rows.iter()
        .map(|(l, p)| format!("{l}: {p}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn table_json(rows: &[(Partition, MultiPoly)]) -> Value {
    Value::Array(
        rows.iter()
            .map(|(l, p)| json!({ "lambda": l.to_string(), "polynomial": p.to_string() }))
            .collect(),
    )
}

impl CspArgs {
    fn to_kind(&self) -> Result<CspKind> {
        let (m, n) = (self.m, self.n);
        let need_nu = || {
            self.nu
                .clone()
                .ok_or_else(|| usage("--nu is required for this kind"))
        };
        Ok(match self.kind {
            Kind::Rect3 => CspKind::Rect3 { m, n },
            Kind::Content2 => CspKind::Content2 {
                m,
                n,
                nu: need_nu()?,
            },
            Kind::Content3 => CspKind::Content3 {
                m,
                n,
                nu: need_nu()?,
                a: self.a.ok_or_else(|| usage("-a is required for content3"))?,
            },
            Kind::Perm4 => CspKind::Perm4 {
                m,
                n,
                a: self.a.ok_or_else(|| usage("-a is required for perm4"))?,
                b: self.b.ok_or_else(|| usage("-b is required for perm4"))?,
            },
        })
    }
}

pub fn run(command: Command, format: Format) -> Result<Outcome> {
    match command {
        Command::Partitions { n } => {
            let parts: Vec<String> = partitions_of(n).iter().map(|p| p.to_string()).collect();
            emit(format, parts.join("\n"), json!(parts));
        }
        Command::Kostka { lambda, nu } => {
            let k = kostka_number(&lambda, &nu)?;
            emit(
                format,
                k,
                json!({ "lambda": lambda.to_string(), "nu": nu.to_string(), "value": k }),
            );
        }
        Command::FakeDegree { lambda } => {
            let f = fake_degree(&lambda);
            emit(
                format,
                &f,
                json!({ "lambda": lambda.to_string(), "polynomial": f.to_string() }),
            );
        }
        Command::CochargeKostka { lambda, nu } => {
            let k = cocharge_kostka(&lambda, &nu)?;
            emit(
                format,
                &k,
                json!({
                    "lambda": lambda.to_string(),
                    "nu": nu.to_string(),
                    "polynomial": k.to_string(),
                }),
            );
        }
        Command::QtKostka { mu } => {
            let table = qt_kostka(&mu)?;
            emit(
                format,
                table_text(table.entries()),
                json!({ "mu": mu.to_string(), "table": table_json(table.entries()) }),
            );
        }
        Command::HlKostka { nu } => {
            let rows = hl_kostka(&nu)?;
            emit(
                format,
                table_text(&rows),
                json!({ "nu": nu.to_string(), "table": table_json(&rows) }),
            );
        }
        Command::CspVerify { params, max_size } => {
            let kind = params.to_kind()?;
            let report = verify_csp(&kind, max_size)?;
            let mut value = serde_json::to_value(&report)?;
            value["polynomial"] = json!(report.polynomial.to_string());
            for (rec, out) in report
                .records
                .iter()
                .zip(value["records"].as_array_mut().unwrap())
            {
                out["element"] = json!(rec.element_label());
            }
            emit(format, &report, value);
            if !report.all_match {
                return Ok(Outcome::Mismatch);
            }
        }
        Command::CspPoly { params } => {
            let kind = params.to_kind()?;
            let p = csp_polynomial(&kind)?;
            emit(
                format,
                &p,
                json!({
                    "kind": kind.name(),
                    "params": kind.to_string(),
                    "polynomial": p.to_string(),
                }),
            );
        }
        Command::GhHilbert { mu, allow_n5 } => {
            let bound = if allow_n5 { 5 } else { HILBERT_BOUND };
            if mu.size() > bound {
                return Err(usage(format!(
                    "|μ| = {} exceeds the bound {bound}{}",
                    mu.size(),
                    if allow_n5 {
                        ""
                    } else {
                        " (use --allow-n5 for 5)"
                    }
                )));
            }
            if mu.size() == 5 {
                eprintln!(
                    "warning: |μ| = 5 spans 120-dimensional derivative closures; this is slow"
                );
            }
            let rec = match gh_crosscheck(&mu, bound) {
                Ok(rec) => rec,
                Err(e @ qtsieve::Error::Mismatch { .. }) => {
                    eprintln!("{e}");
                    return Ok(Outcome::Mismatch);
                }
                Err(e) => return Err(e.into()),
            };
            let mut text: Vec<String> = rec
                .hilbert
                .dims()
                .iter()
                .map(|(&(d, e), &v)| format!("({d},{e}): {v}"))
                .collect();
            text.push(format!("total: {}", rec.hilbert.total()));
            text.push(format!("hilbert: {}", rec.hilbert_series));
            text.push(format!("expansion: {}", rec.expansion));
            text.push(format!("orientation: {}", rec.orientation));
            let dims: Vec<Value> = rec
                .hilbert
                .dims()
                .iter()
                .map(|(&(d, e), &v)| json!({ "x_degree": d, "y_degree": e, "dim": v }))
                .collect();
            emit(
                format,
                text.join("\n"),
                json!({
                    "mu": mu.to_string(),
                    "dims": dims,
                    "total": rec.hilbert.total(),
                    "hilbert": rec.hilbert_series.to_string(),
                    "expansion": rec.expansion.to_string(),
                    "orientation": rec.orientation.to_string(),
                }),
            );
        }
        Command::Selftest { max_n } => {
            if max_n == 0 || max_n > 6 {
                return Err(usage("--max-n must lie in 1..=6"));
            }
            let results = selftest::run(max_n);
            let text: Vec<String> = results
                .iter()
                .map(|r| {
                    let tag = if r.passed { "PASS" } else { "FAIL" };
                    format!("[{tag}] {}: {}", r.name, r.detail)
                })
                .collect();
            let value: Vec<Value> = results
                .iter()
                .map(|r| json!({ "check": r.name, "passed": r.passed, "detail": r.detail }))
                .collect();
            emit(format, text.join("\n"), json!(value));
            if results.iter().any(|r| !r.passed) {
                return Ok(Outcome::Mismatch);
            }
        }
    }
    Ok(Outcome::Success)
}
