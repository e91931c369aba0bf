//! Fundamental solutions of the time-fractional diffusion-wave equation.
//!
//! With the similarity variable `r = |x| / t^ν`,
//!
//! ```text
//! G_c(x, t; ν) = M_ν(r) / (2 t^ν)           Cauchy problem, x ∈ ℝ
//! G_s(x, t; ν) = F_ν(r) / t                 signaling problem, x > 0
//! ```
//!
//! and the two are linked by `2ν x G_c = t G_s`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{mainardi_m, wright_f, EvalResult, FractionalOrder, Method, SeriesPolicy};
use crate::table::{Column, FigureTable, Metadata};
use crate::tolerances::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpaceTimePoint {
    pub x: f64,
    pub t: f64,
}

impl SpaceTimePoint {
    pub fn new(x: f64, t: f64) -> Result<Self> {
        check_t(t)?;
        if !x.is_finite() {
            return Err(Error::Domain(format!("x must be finite, got {x}")));
        }
        Ok(Self { x, t })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GreenSample {
    pub point: SpaceTimePoint,
    pub nu: FractionalOrder,
    pub value: f64,
    pub similarity_r: f64,
    pub abs_err_estimate: f64,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    Cauchy,
    Signaling,
}

fn check_t(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("t must be finite and positive, got {t}")))
    }
}

/// `r = |x| / t^ν`.
pub fn similarity(x: f64, t: f64, nu: FractionalOrder) -> Result<f64> {
    let p = SpaceTimePoint::new(x, t)?;
    Ok(p.x.abs() / p.t.powf(nu.nu()))
}

fn sample(point: SpaceTimePoint, nu: FractionalOrder, r: f64, e: EvalResult) -> GreenSample {
    GreenSample {
        point,
        nu,
        value: e.value,
        similarity_r: r,
        abs_err_estimate: e.abs_err_estimate,
        method: e.method,
    }
}

/// `G_c(x, t; ν) = M_ν(|x|/t^ν) / (2 t^ν)`, even in `x`.
pub fn green_cauchy(x: f64, t: f64, nu: FractionalOrder, policy: &SeriesPolicy) -> Result<GreenSample> {
    let point = SpaceTimePoint::new(x, t)?;
    let nu = nu.require_pointwise()?;
    let tn = t.powf(nu.nu());
    let r = x.abs() / tn;
    let m = mainardi_m(nu, r, policy)?;
    Ok(sample(point, nu, r, m.scaled(0.5 / tn)))
}

/// `G_s(x, t; ν) = F_ν(x/t^ν) / t = ν x t^{-ν-1} M_ν(x/t^ν)`, `x > 0`.
pub fn green_signaling(x: f64, t: f64, nu: FractionalOrder, policy: &SeriesPolicy) -> Result<GreenSample> {
    let point = SpaceTimePoint::new(x, t)?;
    if x <= 0.0 {
        return Err(Error::Domain(format!("the signaling problem needs x > 0, got {x}")));
    }
    let nu = nu.require_pointwise()?;
    let r = x / t.powf(nu.nu());
    let f = wright_f(nu, r, policy)?;
    Ok(sample(point, nu, r, f.scaled(1.0 / t)))
}

/// `G(x, t; ν)` on `x_grid` at fixed `t`, evaluated in parallel and
/// returned in grid order. A point that fails is kept as a row with
/// `ok = 0` and NaN value.
pub fn profile(
    problem: Problem,
    t: f64,
    nu: FractionalOrder,
    x_grid: &[f64],
    tol: &Tolerances,
) -> Result<FigureTable> {
    check_t(t)?;
    nu.require_pointwise()?;
    if x_grid.is_empty() {
        return Err(Error::Usage("x grid is empty".into()));
    }
    let rows: Vec<Result<GreenSample>> = x_grid
        .par_iter()
        .map(|&x| match problem {
            Problem::Cauchy => green_cauchy(x, t, nu, &tol.series),
            Problem::Signaling => green_signaling(x, t, nu, &tol.series),
        })
        .collect();

    let (name, err_name, unit) = match problem {
        Problem::Cauchy => ("G_c", "G_c_err", "1/length"),
        Problem::Signaling => ("G_s", "G_s_err", "1/time"),
    };
    let mut value = Vec::with_capacity(rows.len());
    let mut err = Vec::with_capacity(rows.len());
    let mut ok = Vec::with_capacity(rows.len());
    let mut notes = Vec::new();
    for (x, row) in x_grid.iter().zip(&rows) {
        match row {
            Ok(s) => {
                value.push(s.value);
                err.push(s.abs_err_estimate);
                ok.push(1.0);
            }
            Err(e) => {
                value.push(f64::NAN);
                err.push(f64::NAN);
                ok.push(0.0);
                notes.push(format!("x = {x}: {e}"));
            }
        }
    }
    let mut metadata = Metadata::new(vec![nu.nu()], vec![t], *tol);
    metadata.notes = notes;
    FigureTable::new(
        None,
        format!("{} profile", name),
        metadata,
        vec![
            Column::new("x", "length", x_grid.to_vec()),
            Column::new(name, unit, value),
            Column::new(err_name, unit, err),
            Column::new("ok", "flag", ok),
        ],
    )
}
