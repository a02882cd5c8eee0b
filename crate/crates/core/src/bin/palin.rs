//! Command-line front end. All results go to stdout as JSON; diagnostics go
//! to stderr. Exit status: 0 success, 1 negative verdict, 2 invalid input,
//! 3 resource cap.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use palin_cf::cf_core::{is_symmetry, properness_checked, AlgebraicCF, SymmetryKind};
use palin_cf::classifier4::{self, DEFAULT_MAX_ITER};
use palin_cf::exactmath::ExactMatrix;
use palin_cf::numberfield::gaussian_period_field;
use palin_cf::palindrome::construct_palindromic;
use palin_cf::sail2d::{self, QuadraticSurd};
use palin_cf::Error;

#[derive(Parser)]
#[command(name = "palin", version, about = "Palindromic algebraic continued fractions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and certify a palindromic fraction of degree N.
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        /// Also search for a hyperbolic operator with the fraction as eigenvector.
        #[arg(long = "with-A")]
        with_a: bool,
        /// Sup-norm bound for the operator search.
        #[arg(long, default_value_t = 4, requires = "with_a")]
        bound: u32,
    },
    /// Decide whether G permutes the eigenlines of a fraction.
    CheckSymmetry {
        #[arg(long)]
        cf: PathBuf,
        #[arg(long)]
        g: PathBuf,
    },
    /// Conjugate a proper cyclic symmetry of a quartic fraction to canonical form.
    Classify4 {
        #[arg(long)]
        cf: PathBuf,
        #[arg(long)]
        g: PathBuf,
    },
    /// A fraction of class I (1..=7) over a quartic Gaussian period field.
    ClassExample {
        #[arg(long = "class", value_parser = clap::value_parser!(u8).range(1..=7))]
        class: u8,
        /// Prime p ≡ 1 (mod 8) defining the field.
        #[arg(long, default_value_t = 17)]
        p: u64,
    },
    /// Expand (P + √D)/Q as a periodic continued fraction.
    #[command(name = "sail2d", allow_negative_numbers = true)]
    Sail2d { p: i64, d: i64, q: i64 },
    /// Print the seven canonical matrices G₁ … G₇.
    Canonical,
}

enum Failure {
    /// A negative mathematical verdict: a short tag plus detail.
    Negative(&'static str, String),
    Invalid(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap(_) => Failure::Cap(e.to_string()),
            Error::Verification(_) | Error::NotSymmetry => Failure::Negative("verification-failed", e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn json<T: Serialize>(value: &T) -> Outcome {
    serde_json::to_string_pretty(value).map_err(|e| Failure::Invalid(e.to_string()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn max_iter() -> Result<usize, Failure> {
    match std::env::var("PALIN_MAX_ITER") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Invalid(format!("PALIN_MAX_ITER={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_ITER),
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Construct { n, with_a, bound } => {
            let cert = construct_palindromic(n as usize, with_a.then_some(bound))?;
            if with_a && cert.a.is_none() {
                return Err(Failure::Cap(format!(
                    "no hyperbolic operator with entries up to {bound}"
                )));
            }
            json(&cert)
        }
        Command::CheckSymmetry { cf, g } => {
            let cf: AlgebraicCF = read_json(&cf)?;
            let g: ExactMatrix = read_json(&g)?;
            match is_symmetry(&cf, &g)? {
                Some(report) => json(&report),
                None => Err(Failure::Negative(
                    "not-a-symmetry",
                    "G does not permute the eigenlines".into(),
                )),
            }
        }
        Command::Classify4 { cf, g } => {
            let cf: AlgebraicCF = read_json(&cf)?;
            let g: ExactMatrix = read_json(&g)?;
            if cf.degree() != 4 {
                return Err(Failure::Invalid("classify4 needs a quartic fraction".into()));
            }
            let report = is_symmetry(&cf, &g)?
                .ok_or_else(|| Failure::Negative("not-a-symmetry", "G does not permute the eigenlines".into()))?;
            if report.kind != SymmetryKind::Cyclic || !properness_checked(&report, &g)? {
                return Err(Failure::Negative(
                    "not-proper-cyclic",
                    format!(
                        "G is a {} symmetry with multiplier product {}, not a proper cyclic one",
                        report.kind,
                        palin_cf::exactmath::rational::to_string(&report.mu_product)
                    ),
                ));
            }
            json(&classifier4::classify(&g, max_iter()?)?)
        }
        Command::ClassExample { class, p } => {
            let (field, omega) = gaussian_period_field(p, 4)?;
            json(&classifier4::make_class_example(class as usize, &field, &omega)?)
        }
        Command::Sail2d { p, d, q } => {
            let s = QuadraticSurd::canonical(p, d, q)?;
            json(&sail2d::summarize(&s))
        }
        Command::Canonical => json(classifier4::canonical_matrices()),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(verdict, msg)) => {
            emit(&serde_json::json!({ "verdict": verdict }).to_string());
            eprintln!("palin: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("palin: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("palin: {msg}");
            ExitCode::from(3)
        }
    }
}
