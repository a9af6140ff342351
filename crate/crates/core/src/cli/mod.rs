//! The `cyclic` command-line front end.
//!
//! ```text
//! cyclic validate <file|@builtin:name>
//! cyclic sweep --mode {decompose|pole|darboux|accel} [--order R] --t0 <f> --t1 <f> -n <int> [--out <path>] <file|@builtin:name>
//! cyclic demo <ex41|ex51>
//! ```
//!
//! Exit codes: 0 ok, 1 usage or parse error, 2 curve not admissible,
//! 3 curve through the origin, 4 singular rows in a sweep, 5 mode
//! precondition failed (e.g. `darboux` on a non-spherical curve).

mod demo;
mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::curve::{self, parse_curve, CrossSumStatus, Curve};
use crate::error::Error;

pub use sweep::{format_float, sweep, SweepConfig, SweepTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_ADMISSIBLE: i32 = 2;
pub const EXIT_ORIGIN: i32 = 3;
pub const EXIT_SINGULAR_ROWS: i32 = 4;
pub const EXIT_PRECONDITION: i32 = 5;

/// Samples used by `validate` when a curve is not rational.
pub const VALIDATE_SAMPLES: usize = 401;

#[derive(Debug, Parser)]
#[command(
    name = "cyclic",
    version,
    about = "Kinematics of circulant-matrix motions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the cross-sum and origin conditions of a curve.
    Validate {
        /// Curve file, or `@builtin:<name>`.
        source: String,
        #[arg(long, default_value_t = VALIDATE_SAMPLES)]
        samples: usize,
    },
    /// Evaluate the motion over a range of t and write CSV.
    Sweep {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Derivative order; the acceleration order r in `accel` mode.
        #[arg(long, default_value_t = 1)]
        order: usize,
        #[arg(long, allow_negative_numbers = true)]
        t0: f64,
        #[arg(long, allow_negative_numbers = true)]
        t1: f64,
        #[arg(short = 'n')]
        n: usize,
        /// Output path; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        source: String,
    },
    /// Walk through one of the built-in worked examples.
    Demo { name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Decompose,
    Pole,
    Darboux,
    Accel,
}

/// Loads `@builtin:<name>` (or `@<name>`) or a curve file.
pub fn load_curve(source: &str) -> Result<Curve, Error> {
    if let Some(name) = source.strip_prefix('@') {
        let name = name.strip_prefix("builtin:").unwrap_or(name);
        return curve::builtin(name);
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| Error::Schema(format!("cannot read `{source}`: {e}")))?;
    parse_curve(&text)
}

/// Maps a curve-level error to its exit code.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotAdmissible { .. } => EXIT_NOT_ADMISSIBLE,
        Error::Origin { .. } => EXIT_ORIGIN,
        Error::NotSpherical { .. } => EXIT_PRECONDITION,
        Error::Singular { .. } | Error::SingularPole { .. } => EXIT_SINGULAR_ROWS,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Validate { source, samples } => cmd_validate(&source, samples, out),
        Command::Sweep {
            mode,
            order,
            t0,
            t1,
            n,
            out: path,
            source,
        } => {
            let config = SweepConfig {
                t0,
                t1,
                n,
                order,
                out: path,
            };
            cmd_sweep(&source, &config, mode, out, err)
        }
        Command::Demo { name } => demo::run(&name, out),
    };
    match result {
        Ok(code) => code,
        Err((code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn fail(err: Error) -> (i32, String) {
    (exit_code(&err), err.to_string())
}

fn io_fail(e: impl std::fmt::Display) -> (i32, String) {
    (EXIT_USAGE, e.to_string())
}

fn cmd_validate(source: &str, samples: usize, out: &mut dyn Write) -> CmdResult {
    let curve = load_curve(source).map_err(fail)?;
    let report = curve::validate(&curve, samples).map_err(fail)?;
    writeln!(out, "{report}").map_err(io_fail)?;
    Ok(match report.cross_sum {
        CrossSumStatus::Violated { .. } => EXIT_NOT_ADMISSIBLE,
        _ => EXIT_OK,
    })
}

fn cmd_sweep(
    source: &str,
    config: &SweepConfig,
    mode: Mode,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let curve = load_curve(source).map_err(fail)?;
    let table = sweep(&curve, config, mode).map_err(fail)?;
    match &config.out {
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| io_fail(format!("cannot create `{}`: {e}", path.display())))?;
            table.write_csv(file).map_err(fail)?;
        }
        None => table.write_csv(&mut *out).map_err(fail)?,
    }
    if table.not_ok > 0 {
        let _ = writeln!(err, "{} of {} rows not ok", table.not_ok, table.rows.len());
        return Ok(EXIT_SINGULAR_ROWS);
    }
    Ok(EXIT_OK)
}
