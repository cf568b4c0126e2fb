//! Command-line front end.
//!
//! Exits with `1` when a check that should hold fails and `2` on bad usage or input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Error;
use crate::harness::{self, Format, Render, SweepConfig, DEFAULT_CAP};
use crate::innerness::{self, Kind, RingForm};
use crate::linalg::{IntMatrix, RatVector};
use crate::poly::{cyclotomic_poly, totient};
use crate::ring::QuotientRing;
use crate::serial::{dec, dec_vec, matrix, opt_dec, rat_vector};

/// Relative `--output` paths are resolved against this directory when set.
pub const OUTPUT_DIR_ENV: &str = "CYCLO_DERIV_OUTPUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "cyclo-deriv",
    version,
    about = "Twisted derivations of cyclotomic integer rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// json, csv (sweep only) or markdown.
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest phi(n) accepted by sweep and tables.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormTag {
    #[value(name = "2rp")]
    TwoPowerTimesPrime,
    #[value(name = "pk")]
    PrimePower,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients of the n-th cyclotomic polynomial, ascending.
    PhiPoly { n: u64 },
    /// Multiplier matrix of zeta -> zeta^u, zeta -> zeta^v and its determinant.
    Matrix { n: u64, u: u64, v: u64 },
    /// Inner/outer verdict for the derivation with the given D(zeta).
    Classify {
        n: u64,
        u: u64,
        v: u64,
        /// Comma-separated coordinates of D(zeta), exactly phi(n) of them.
        #[arg(long, allow_hyphen_values = true)]
        dzeta: String,
    },
    /// Determinants of all unordered pairs against the predicted values.
    Sweep {
        #[arg(long, value_enum)]
        form: FormTag,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Product-rule check on random derivations built from D(zeta).
    VerifyTheorem {
        n: u64,
        u: u64,
        v: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Matrices, determinants and inverses for every pair of Z[zeta_n].
    Tables { n: u64 },
    /// Power-image maps on non-domains that fail the product rule.
    Counterexamples,
}

#[derive(Serialize)]
struct PhiPolyDoc {
    #[serde(serialize_with = "dec")]
    n: u64,
    #[serde(serialize_with = "dec")]
    degree: usize,
    #[serde(serialize_with = "dec_vec")]
    coefficients: Vec<BigInt>,
    polynomial: String,
}

impl Render for PhiPolyDoc {
    fn markdown(&self) -> String {
        let coeffs: Vec<String> = self.coefficients.iter().map(ToString::to_string).collect();
        format!(
            "Phi_{}(x) = {}\n\ncoefficients (ascending): {}\n",
            self.n,
            self.polynomial,
            coeffs.join(", ")
        )
    }
}

#[derive(Serialize)]
struct MatrixDoc {
    #[serde(serialize_with = "dec")]
    n: u64,
    #[serde(serialize_with = "dec")]
    u: u64,
    #[serde(serialize_with = "dec")]
    v: u64,
    #[serde(serialize_with = "matrix")]
    matrix: IntMatrix,
    #[serde(serialize_with = "dec")]
    det: BigInt,
    #[serde(serialize_with = "opt_dec")]
    predicted: Option<BigInt>,
}

impl Render for MatrixDoc {
    fn markdown(&self) -> String {
        let mut s = format!(
            "A for (zeta^{}, zeta^{}), n = {}\n\n",
            self.u, self.v, self.n
        );
        for i in 0..self.matrix.rows() {
            let row: Vec<String> = self.matrix.row(i).iter().map(ToString::to_string).collect();
            s.push_str(&format!("    [{}]\n", row.join(", ")));
        }
        s.push_str(&format!("\ndet = {}\n", self.det));
        if let Some(p) = &self.predicted {
            s.push_str(&format!("predicted |det| = {p}\n"));
        }
        s
    }
}

#[derive(Serialize)]
struct ClassifyDoc {
    #[serde(serialize_with = "dec")]
    n: u64,
    #[serde(serialize_with = "dec")]
    u: u64,
    #[serde(serialize_with = "dec")]
    v: u64,
    kind: Kind,
    #[serde(serialize_with = "rat_vector")]
    witness: RatVector,
    #[serde(serialize_with = "dec")]
    det_abs: BigInt,
}

impl Render for ClassifyDoc {
    fn markdown(&self) -> String {
        format!(
            "{} (n = {}, (u, v) = ({}, {}), |det A| = {})\n\nbeta = {}\n",
            self.kind, self.n, self.u, self.v, self.det_abs, self.witness
        )
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } | Error::Serialize(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn parse_coords(raw: &str, expected: usize) -> Result<Vec<BigInt>, Failure> {
    let coords = raw
        .split(',')
        .map(|t| {
            t.trim().parse::<BigInt>().map_err(|_| {
                Failure::Usage(format!("invalid coordinate `{}` in --dzeta", t.trim()))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != expected {
        return Err(Failure::Usage(format!(
            "--dzeta needs exactly phi(n) = {expected} coordinates, got {}",
            coords.len()
        )));
    }
    Ok(coords)
}

fn output_path(path: Option<&Path>) -> Option<PathBuf> {
    let p = path?;
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if p.is_relative() => Some(PathBuf::from(dir).join(p)),
        _ => Some(p.to_path_buf()),
    }
}

fn emit<T: Render>(doc: &T, cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let text = harness::render(doc, cli.format)?;
    let path = output_path(cli.output.as_deref());
    harness::write_output(&text, path.as_deref(), out)?;
    Ok(())
}

/// Returns whether every expected check held.
fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, Failure> {
    match &cli.command {
        Command::PhiPoly { n } => {
            let phi = cyclotomic_poly(*n)?;
            let doc = PhiPolyDoc {
                n: *n,
                degree: phi.degree().unwrap_or(0),
                polynomial: phi.to_string(),
                coefficients: phi.into_coeffs(),
            };
            emit(&doc, cli, out)?;
            Ok(true)
        }
        Command::Matrix { n, u, v } => {
            let a = innerness::cyclotomic_matrix(*n, *u, *v)?;
            let predicted = match RingForm::from_n(*n) {
                Some(form) => {
                    let val = innerness::valuate(&form, *u, *v)?;
                    Some(innerness::predict_det(&form, &val)?)
                }
                None => None,
            };
            let doc = MatrixDoc {
                n: *n,
                u: *u,
                v: *v,
                matrix: a.matrix().clone(),
                det: a.determinant().clone(),
                predicted,
            };
            emit(&doc, cli, out)?;
            Ok(true)
        }
        Command::Classify { n, u, v, dzeta } => {
            let ring = QuotientRing::cyclotomic(*n)?;
            let coords = parse_coords(dzeta, totient(*n) as usize)?;
            let a = innerness::cyclotomic_matrix(*n, *u, *v)?;
            let c = a.classify(&ring.element(coords)?)?;
            let doc = ClassifyDoc {
                n: *n,
                u: *u,
                v: *v,
                kind: c.kind,
                witness: c.witness,
                det_abs: c.det_abs,
            };
            emit(&doc, cli, out)?;
            Ok(true)
        }
        Command::Sweep { form, r, p, k } => {
            let form = match form {
                FormTag::TwoPowerTimesPrime => {
                    let r = r.ok_or_else(|| Failure::Usage("--form 2rp needs --r".into()))?;
                    RingForm::two_power_times_prime(r, *p)?
                }
                FormTag::PrimePower => {
                    let k = k.ok_or_else(|| Failure::Usage("--form pk needs --k".into()))?;
                    RingForm::prime_power(*p, k)?
                }
            };
            let config = SweepConfig {
                seed: cli.seed,
                cap: cli.cap,
            };
            let report = harness::sweep(&form, &config)?;
            let _ = writeln!(
                err,
                "sweep n = {}: {}/{} matches in {:.2?}",
                form.n(),
                report.summary.matches,
                report.summary.pairs,
                report.elapsed
            );
            emit(&report, cli, out)?;
            Ok(report.all_match() && report.all_roundtrips_pass())
        }
        Command::VerifyTheorem { n, u, v, trials } => {
            let summary = harness::verify_theorem(*n, *u, *v, *trials, cli.seed)?;
            emit(&summary, cli, out)?;
            Ok(summary.all_passed())
        }
        Command::Tables { n } => {
            let artifact = harness::reproduce_tables(*n, cli.cap)?;
            emit(&artifact, cli, out)?;
            Ok(artifact.consistent_with_published())
        }
        Command::Counterexamples => {
            let summary = harness::counterexample_suite()?;
            emit(&summary, cli, out)?;
            Ok(summary.all_ok)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
