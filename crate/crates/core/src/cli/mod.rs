//! The `fracwave` command line.
//!
//! [`run`] takes the raw arguments and two writers and returns the process
//! exit code, so the whole CLI can be driven in-process.

mod commands;
mod config;
mod figures;
mod verify;

use std::fs::File;
use std::io::{BufWriter, Write};

use clap::{Parser, Subcommand};

pub use commands::{eval, extrema, median, moments};
pub use config::{parse_nu_list, CommonArgs, Grid, OutputFormat, RunConfig, DEFAULT_NU};
pub use figures::{figure, GRAVITY_NU, GREEN_NU};
pub use verify::{run_checks, Check, VERIFY_NU};

use crate::error::Error;
use crate::special::FractionalOrder;
use crate::table::{FigureId, FigureTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fracwave", version, about = "Green functions of the time-fractional diffusion-wave equation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate M_ν, F_ν, G_c and G_s on the ν × t × x grid
    Eval,
    /// Emit the data behind one figure
    Figure {
        /// One of: green-profiles, max-velocity-cauchy, max-hyperbola-cauchy,
        /// max-loc-val-prod-cauchy, max-velocity-signaling,
        /// max-loc-val-signaling, gravity-cauchy, gravity-signaling,
        /// median-table
        id: FigureId,
    },
    /// Maximum locations and values per ν
    Extrema,
    /// Mellin moments and centers of gravity per ν
    Moments,
    /// Median coefficients per ν
    Median,
    /// Run the oracle suite; exits 1 if any check fails
    Verify,
}

/// An error on its way to the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_convergence() { EXIT_NO_CONVERGENCE } else { EXIT_USAGE };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl Failure {
    pub fn at(e: Error, nu: FractionalOrder, x: f64, t: f64) -> Self {
        let mut f = Self::from(e);
        f.message = format!("at (nu = {nu}, x = {x}, t = {t}): {}", f.message);
        f
    }

    pub fn at_nu(e: Error, nu: FractionalOrder) -> Self {
        let mut f = Self::from(e);
        f.message = format!("at nu = {nu}: {}", f.message);
        f
    }
}

fn render(table: &FigureTable, format: OutputFormat) -> Result<String, Failure> {
    Ok(match format {
        OutputFormat::Csv => table.to_csv()?,
        OutputFormat::Json => table.to_json()?,
    })
}

fn emit(text: &str, cfg: &RunConfig, out: &mut dyn Write) -> Result<(), Failure> {
    match &cfg.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            w.write_all(text.as_bytes()).map_err(Error::from)?;
            w.flush().map_err(Error::from)?;
        }
        None => out.write_all(text.as_bytes()).map_err(Error::from)?,
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let cfg = RunConfig::from_args(&cli.common)?;
    if let Some(list) = &cfg.nu_list {
        if let Some(nu) = list.iter().find(|n| n.is_ill_conditioned()) {
            let _ = writeln!(
                err,
                "warning: nu = {nu} is close to the wave limit; M_nu is sharply peaked and results lose accuracy"
            );
        }
    }
    let table = match &cli.command {
        Command::Eval => eval(&cfg)?,
        Command::Figure { id } => figure(*id, &cfg)?,
        Command::Extrema => extrema(&cfg)?,
        Command::Moments => moments(&cfg)?,
        Command::Median => median(&cfg)?,
        Command::Verify => {
            let checks = run_checks(&cfg)?;
            let text = verify::render(&checks, cfg.format)?;
            emit(&text, &cfg, out)?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                let _ = writeln!(err, "{failed} of {} checks failed", checks.len());
                return Ok(EXIT_VERIFY_FAILED);
            }
            return Ok(EXIT_OK);
        }
    };
    emit(&render(&table, cfg.format)?, &cfg, out)?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("fracwave").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["eval", "--nu", "0.45"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["eval", "--seed-free"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["eval", "--x-range", "0:1:0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["figure", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
        assert_eq!(run_str(&[]).0, EXIT_USAGE);
    }

    #[test]
    fn errors_name_the_point() {
        let (code, _, err) = run_str(&["eval", "--nu", "1", "--x-range", "0.5:0.5:1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("nu = 1"), "{err}");
        assert!(err.contains("x = 0.5"), "{err}");
    }

    #[test]
    fn failure_codes() {
        assert_eq!(Failure::from(Error::SolverFailure("x".into())).code, EXIT_NO_CONVERGENCE);
        assert_eq!(Failure::from(Error::Domain("x".into())).code, EXIT_USAGE);
    }

    #[test]
    fn eval_csv_has_units() {
        let (code, out, _) = run_str(&["eval", "--nu", "0.5", "--x-range", "0:1:3"]);
        assert_eq!(code, EXIT_OK);
        let header = out.lines().next().unwrap();
        assert!(header.starts_with("nu [1],t [time],x [length]"), "{header}");
        assert_eq!(out.lines().count(), 4);
    }
}
