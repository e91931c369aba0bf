use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::FractionalOrder;
use crate::tolerances::Tolerances;

/// ν values used when `--nu` is not given.
pub const DEFAULT_NU: [f64; 5] = [0.5, 0.625, 0.75, 0.875, 0.95];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Comma-separated orders ν in [1/2, 1], e.g. `0.5,0.75,0.9`
    #[arg(long, global = true, value_name = "LIST")]
    pub nu: Option<String>,

    /// Time grid `min:max:n` (linear, `min > 0`)
    #[arg(long, global = true, value_name = "MIN:MAX:N", allow_hyphen_values = true)]
    pub t_range: Option<String>,

    /// Space grid `min:max:n` (linear)
    #[arg(long, global = true, value_name = "MIN:MAX:N", allow_hyphen_values = true)]
    pub x_range: Option<String>,

    /// Relative tolerance for series and quadrature
    #[arg(long, global = true, value_name = "REL")]
    pub tol: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,

    /// Write to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Reserved. Output never depends on a random seed, so this is rejected.
    #[arg(long, global = true)]
    pub seed_free: bool,
}

/// `min:max:n` with `n` evenly spaced points (just `min` when `n = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl Grid {
    pub fn new(min: f64, max: f64, n: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(Error::Usage(format!("grid bounds must be finite, got {min}:{max}")));
        }
        if n == 0 {
            return Err(Error::Usage("grid is empty (n = 0)".into()));
        }
        if n > 1 && min >= max {
            return Err(Error::Usage(format!("grid needs min < max, got {min}:{max}")));
        }
        Ok(Self { min, max, n })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        let bad = || Error::Usage(format!("expected min:max:n, got '{text}'"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let min: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let max: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
        Self::new(min, max, n)
    }

    pub fn points(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.min];
        }
        let h = (self.max - self.min) / (self.n - 1) as f64;
        (0..self.n)
            .map(|i| if i + 1 == self.n { self.max } else { self.min + h * i as f64 })
            .collect()
    }
}

/// Everything a subcommand needs, resolved from the flags.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// `None` lets each subcommand pick its own default grid.
    pub nu_list: Option<Vec<FractionalOrder>>,
    pub t_grid: Option<Grid>,
    pub x_grid: Option<Grid>,
    pub tolerances: Tolerances,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

pub fn parse_nu_list(text: &str) -> Result<Vec<FractionalOrder>> {
    let list = text
        .split(',')
        .map(|s| {
            let v: f64 = s
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("'{s}' is not a number in --nu")))?;
            FractionalOrder::new(v)
        })
        .collect::<Result<Vec<_>>>()?;
    if list.is_empty() {
        return Err(Error::Usage("--nu list is empty".into()));
    }
    Ok(list)
}

impl RunConfig {
    pub fn from_args(args: &CommonArgs) -> Result<Self> {
        if args.seed_free {
            return Err(Error::Usage(
                "--seed-free is reserved: fracwave uses no randomness, output is always deterministic".into(),
            ));
        }
        let nu_list = args.nu.as_deref().map(parse_nu_list).transpose()?;
        let t_grid = args.t_range.as_deref().map(Grid::parse).transpose()?;
        if let Some(g) = t_grid {
            if g.min <= 0.0 {
                return Err(Error::Usage(format!("--t-range needs min > 0, got {}", g.min)));
            }
        }
        let x_grid = args.x_range.as_deref().map(Grid::parse).transpose()?;
        let mut tolerances = Tolerances::default();
        if let Some(tol) = args.tol {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(Error::Usage(format!("--tol must be positive, got {tol}")));
            }
            tolerances = tolerances.with_rel_tol(tol);
        }
        tolerances.validate()?;
        Ok(Self {
            nu_list,
            t_grid,
            x_grid,
            tolerances,
            format: args.format,
            out: args.out.clone(),
        })
    }

    pub fn nu_or(&self, default: &[f64]) -> Vec<FractionalOrder> {
        self.nu_list.clone().unwrap_or_else(|| {
            default
                .iter()
                .map(|&v| FractionalOrder::new(v).expect("default grid is in range"))
                .collect()
        })
    }

    pub fn t_or(&self, default: Grid) -> Vec<f64> {
        self.t_grid.unwrap_or(default).points()
    }

    pub fn x_or(&self, default: Grid) -> Vec<f64> {
        self.x_grid.unwrap_or(default).points()
    }
}
