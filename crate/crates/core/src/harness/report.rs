//! Rendering of reports as JSON, CSV or Markdown.
//!
//! JSON sweep schema:
//!
//! ```text
//! { "ring":    { "n", "form", "params": { .. } },
//!   "pairs":   [ { "u", "v", "e1", "e2", "m", "det_abs", "predicted", "match", "roundtrip" } ],
//!   "summary": { "pairs", "matches", "seed", "version" } }
//! ```
//!
//! Integers are decimal strings; `e2` and `predicted` may be `null`; `match`
//! and `roundtrip` are booleans. CSV carries the pair columns, one row per
//! pair. Output for a given report is byte-for-byte deterministic.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use super::counterexamples::CounterexampleSummary;
use super::sweep::SweepReport;
use super::tables::TableArtifact;
use super::theorem::TheoremSummary;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(format!("unknown format `{other}` (json, csv, markdown)")),
        }
    }
}

pub trait Render: Serialize {
    fn markdown(&self) -> String;

    fn csv(&self) -> Result<String> {
        Err(Error::UnsupportedFormat("csv"))
    }
}

pub fn render<T: Render + ?Sized>(doc: &T, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => doc.csv(),
        Format::Markdown => Ok(doc.markdown()),
    }
}

/// Writes to `path` when given, otherwise to `out`.
pub fn write_output(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => out
            .write_all(text.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl Render for SweepReport {
    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.pairs.is_empty() {
            w.write_record([
                "u",
                "v",
                "e1",
                "e2",
                "m",
                "det_abs",
                "predicted",
                "match",
                "roundtrip",
            ])?;
        }
        for p in &self.pairs {
            w.serialize(p)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Serialize(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))
    }

    fn markdown(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self
            .ring
            .params
            .iter()
            .map(|(k, v)| format!("{k} = {v}"))
            .collect();
        let _ = writeln!(
            s,
            "## Determinant sweep, n = {} (form {}, {})\n",
            self.ring.n,
            self.ring.form,
            params.join(", ")
        );
        s.push_str("| u | v | e1 | e2 | m | det_abs | predicted | match | roundtrip |\n");
        s.push_str("|---|---|---|---|---|---|---|---|---|\n");
        for p in &self.pairs {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                p.u,
                p.v,
                p.e1,
                opt(&p.e2),
                p.m,
                p.det_abs,
                opt(&p.predicted),
                p.matches,
                p.inner_roundtrip_pass
            );
        }
        let _ = writeln!(
            s,
            "\npairs: {}, matches: {}, seed: {}, version: {}",
            self.summary.pairs, self.summary.matches, self.summary.seed, self.summary.version
        );
        s
    }
}

fn matrix_markdown(s: &mut String, m: &IntMatrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "    [{}]", row.join(", "));
    }
}

impl Render for TableArtifact {
    fn markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "## Multiplier matrices, n = {}, phi(n) = {}, modulus {}\n",
            self.n, self.phi, self.modulus
        );
        for b in &self.blocks {
            let _ = writeln!(s, "### (zeta^{}, zeta^{}), det = {}\n", b.u, b.v, b.det);
            s.push_str("A =\n\n");
            matrix_markdown(&mut s, &b.matrix);
            let _ = writeln!(s, "\nA^-1 = 1/{} *\n", b.solution.denominator());
            matrix_markdown(&mut s, b.solution.numerators());
            if let Some(p) = &b.published {
                let _ = writeln!(
                    s,
                    "\nprinted table: sign {}, matrix {}, det {}, consistent {}",
                    p.sign,
                    if p.matrix_match { "matches" } else { "differs" },
                    if p.det_match { "matches" } else { "differs" },
                    p.consistent
                );
                for m in &p.solution_mismatches {
                    let _ = writeln!(
                        s,
                        "- C' cell ({}, {}): printed {}, computed {}{}",
                        m.row,
                        m.col,
                        m.printed,
                        m.computed,
                        if m.known_typo { " (known typo)" } else { "" }
                    );
                }
            }
            s.push('\n');
        }
        s
    }
}

impl Render for TheoremSummary {
    fn markdown(&self) -> String {
        let mut s = format!(
            "## Product-rule check, n = {}, (u, v) = ({}, {})\n\npassed {}/{} (seed {})\n",
            self.n, self.u, self.v, self.passed, self.trials, self.seed
        );
        for f in &self.failures {
            let _ = writeln!(
                s,
                "- trial {}: D(theta) = {}, fails at basis pair ({}, {})",
                f.trial, f.d_theta, f.i, f.j
            );
        }
        s
    }
}

impl Render for CounterexampleSummary {
    fn markdown(&self) -> String {
        let mut s = String::from(
            "## Counterexamples\n\n| case | expected derivation | is derivation | failing pair | ok |\n|---|---|---|---|---|\n",
        );
        for c in &self.cases {
            let pair = c
                .failing_pair
                .map(|[i, j]| format!("({i}, {j})"))
                .unwrap_or_default();
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} |",
                c.name, c.expect_derivation, c.is_derivation, pair, c.ok
            );
        }
        s
    }
}
