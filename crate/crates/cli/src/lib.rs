//! The `fwe` command line. [`run`] does everything `main` does, against
//! caller-supplied streams, so it can be driven from tests.

pub mod commands;
pub mod config;
pub mod render;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};

use commands::{PolySource, Report};
use config::{Format, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(fwe_core::Error),
}

impl From<fwe_core::Error> for Failure {
    fn from(e: fwe_core::Error) -> Self {
        Failure::Domain(e)
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "fwe",
    version,
    about = "MacWilliams duality, zeta polynomials and extremal formal weight enumerators",
    after_help = "Polynomials use the text syntax `x^6 + 5/2 x^3y^3 - 1/8 y^6`. Without --poly, \
                  a JSON polynomial {\"degree\": n, \"terms\": [{\"i\": k, \"coeff\": \"a/b\"}]} \
                  is read from stdin."
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Parameter q of the transform, as an exact rational such as 3/2.
    #[arg(long, global = true)]
    pub q: Option<String>,
    /// Binary precision for numerical root finding.
    #[arg(long, global = true, env = "FWE_PRECISION", default_value_t = 256,
          value_parser = clap::value_parser!(u32).range(53..=16384))]
    pub precision: u32,
    /// Largest accepted radial deviation, as a positive decimal.
    #[arg(long, global = true, default_value = fwe_core::rhcheck::DEFAULT_TOLERANCE)]
    pub tolerance: String,
    /// Refuse inputs above this degree (at most 512).
    #[arg(long, global = true, default_value_t = 512)]
    pub max_degree: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Invariant, anti-invariant or neither under the MacWilliams transform.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Basis of the polynomials of a degree, supported on multiples of the
    /// divisor, fixed (or negated with --anti) by the transform.
    InvariantSpace {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        divisor: usize,
        #[arg(long)]
        anti: bool,
    },
    /// Zeta polynomial of an enumerator.
    Zeta {
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Numerical Riemann hypothesis check on a zeta polynomial.
    Rh {
        /// Enumerator whose zeta polynomial is checked.
        #[arg(long, conflicts_with = "zeta", allow_hyphen_values = true)]
        poly: Option<String>,
        /// Zeta coefficients in ascending powers of T, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        zeta: Option<String>,
        /// Also run the exact unit-circle certificate.
        #[arg(long)]
        exact: bool,
    },
    /// Search for q admitting an invariant of the given degree and divisor
    /// through its binomial moments.
    MomentSearch {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        divisor: usize,
    },
    /// Extremal element of a ring at a degree.
    Extremal { ring: String, degree: usize },
    /// Extremal minimum weight against the bound for every degree up to --max.
    Survey {
        ring: String,
        #[arg(long)]
        max: usize,
        /// Report Riemann hypothesis verdicts instead of bounds.
        #[arg(long)]
        rh: bool,
    },
    /// Apply the degree-lowering operator to the extremal element.
    Okuda { ring: String, degree: usize },
    /// Divisibility check on the extremal element.
    Prop21 { ring: String, degree: usize },
    /// Ring catalogue.
    Ring {
        #[command(subcommand)]
        action: RingAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum RingAction {
    /// All rings with q, divisor and generators.
    List,
    /// Generators of one ring.
    Gen { name: String },
}

fn src<'a>(text: &'a Option<String>, stdin: &'a mut dyn Read) -> PolySource<'a> {
    PolySource {
        text: text.as_deref(),
        stdin,
    }
}

/// Runs the mapped operation. `None` in `--poly` falls back to stdin.
pub fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Report, Failure> {
    let cfg = RunConfig::new(
        cli.q.as_deref(),
        cli.precision as usize,
        &cli.tolerance,
        cli.format,
        cli.max_degree,
    )?;
    match &cli.command {
        Command::Classify { poly } => commands::classify_cmd(&cfg, src(poly, stdin)),
        Command::InvariantSpace { degree, divisor, anti } => {
            commands::invariant_space_cmd(&cfg, *degree, *divisor, *anti)
        }
        Command::Zeta { poly } => commands::zeta_cmd(&cfg, src(poly, stdin)),
        Command::Rh { poly, zeta, exact } => {
            commands::rh_cmd(&cfg, src(poly, stdin), zeta.as_deref(), *exact)
        }
        Command::MomentSearch { degree, divisor } => commands::moment_search_cmd(&cfg, *degree, *divisor),
        Command::Extremal { ring, degree } => commands::extremal_cmd(&cfg, ring, *degree),
        Command::Survey { ring, max, rh } => commands::survey_cmd(&cfg, ring, *max, *rh),
        Command::Okuda { ring, degree } => commands::okuda_cmd(&cfg, ring, *degree),
        Command::Prop21 { ring, degree } => commands::prop21_cmd(&cfg, ring, *degree),
        Command::Ring { action } => match action {
            RingAction::List => commands::ring_list_cmd(),
            RingAction::Gen { name } => commands::ring_gen_cmd(name),
        },
    }
}

/// The machine-readable error object written to stderr.
pub fn error_object(e: &fwe_core::Error) -> serde_json::Value {
    serde_json::json!({
        "module": e.module(),
        "kind": e.kind(),
        "message": e.to_string(),
    })
}

/// Parses `args`, runs the command and writes its report; returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, stdin) {
        Ok(report) => {
            let body = match cli.format {
                Format::Json => format!("{}\n", report.json),
                Format::Table => report.table,
            };
            let _ = out.write_all(body.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "{}", error_object(&e));
            EXIT_DOMAIN
        }
    }
}
