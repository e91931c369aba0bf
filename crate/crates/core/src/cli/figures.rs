use rayon::prelude::*;

use super::commands::Builder;
use super::config::{Grid, RunConfig, DEFAULT_NU};
use super::Failure;
use crate::extrema::{max_location_cauchy, max_location_cauchy_with_limits, max_location_signaling};
use crate::green::{green_cauchy, green_signaling};
use crate::moments::{
    gravity_coefficient_cauchy, gravity_coefficient_signaling, gravity_velocity_cauchy, gravity_velocity_signaling,
    median_coefficient, MEDIAN_COEFFICIENT_WAVE,
};
use crate::special::{mainardi_m, FractionalOrder};
use crate::table::{FigureId, FigureTable, Metadata};
use crate::tolerances::Tolerances;

/// ν grid for the center-of-gravity figures, which include the wave limit.
pub const GRAVITY_NU: [f64; 11] = [0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 1.0];

/// ν grid for the Green function profiles.
pub const GREEN_NU: [f64; 4] = [0.5, 0.75, 0.875, 0.95];

const T_GRID: Grid = Grid { min: 0.1, max: 10.0, n: 100 };
const X_GRID: Grid = Grid { min: -5.0, max: 5.0, n: 201 };

const CLOSED_FORM_NOTE: &str =
    "columns other than *_err are closed-form expressions in the located maxima, medians or gamma values";

/// `(c_ν, m_ν)` including `ν = 1/2`, where the peak sits at the origin.
fn cauchy_peak(nu: FractionalOrder, tol: &Tolerances) -> crate::Result<(f64, f64)> {
    if nu.is_diffusion() {
        let m0 = mainardi_m(nu, 0.0, &tol.series)?.value;
        return Ok((0.0, 0.5 * m0));
    }
    let rec = max_location_cauchy(nu, tol)?.require_converged()?;
    Ok((rec.location, 0.5 * rec.value))
}

fn per_nu<T: Send, F>(nu_list: &[FractionalOrder], f: F) -> Result<Vec<T>, Failure>
where
    F: Fn(FractionalOrder) -> crate::Result<T> + Sync,
{
    nu_list
        .par_iter()
        .map(|&nu| f(nu).map_err(|e| Failure::at_nu(e, nu)))
        .collect()
}

pub fn figure(id: FigureId, cfg: &RunConfig) -> Result<FigureTable, Failure> {
    let tol = &cfg.tolerances;
    let default_nu: &[f64] = match id {
        FigureId::GravityCauchy | FigureId::GravitySignaling => &GRAVITY_NU,
        FigureId::GreenProfiles => &GREEN_NU,
        _ => &DEFAULT_NU,
    };
    let nu_list = cfg.nu_or(default_nu);
    let nu_values: Vec<f64> = nu_list.iter().map(|n| n.nu()).collect();
    let ts = match id {
        FigureId::GreenProfiles => cfg.t_or(Grid { min: 1.0, max: 1.0, n: 1 }),
        FigureId::MaxLocValProdCauchy | FigureId::MaxLocValSignaling | FigureId::MedianTable => Vec::new(),
        _ => cfg.t_or(T_GRID),
    };
    let mut md = Metadata::new(nu_values, ts.clone(), *tol);

    let b = match id {
        FigureId::GreenProfiles => {
            let xs = cfg.x_or(X_GRID);
            md.x_grid = xs.clone();
            md.notes.push("G_s is defined for x > 0 only; other rows hold NaN".into());
            let blocks = per_nu(&nu_list, |nu| {
                let mut rows = Vec::with_capacity(ts.len() * xs.len());
                for &t in &ts {
                    for &x in &xs {
                        let gc = green_cauchy(x, t, nu, &tol.series)?;
                        let (gs, gs_err) = if x > 0.0 {
                            let g = green_signaling(x, t, nu, &tol.series)?;
                            (g.value, g.abs_err_estimate)
                        } else {
                            (f64::NAN, f64::NAN)
                        };
                        rows.push([nu.nu(), t, x, gc.value, gc.abs_err_estimate, gs, gs_err]);
                    }
                }
                Ok(rows)
            })?;
            let mut b = Builder::new(&[
                ("nu", "1"),
                ("t", "time"),
                ("x", "length"),
                ("G_c", "1/length"),
                ("G_c_err", "1/length"),
                ("G_s", "1/time"),
                ("G_s_err", "1/time"),
            ]);
            blocks.iter().flatten().for_each(|r| b.push(r));
            b
        }
        FigureId::MaxVelocityCauchy => {
            let cs = per_nu(&nu_list, |nu| max_location_cauchy_with_limits(nu, tol))?;
            let mut b = Builder::new(&[("nu", "1"), ("t", "time"), ("c_nu", "1"), ("V_c", "length/time")]);
            for (nu, c) in nu_list.iter().zip(cs) {
                let v = nu.nu();
                for &t in &ts {
                    b.push(&[v, t, c, v * c * t.powf(v - 1.0)]);
                }
            }
            b
        }
        FigureId::MaxHyperbolaCauchy => {
            let peaks = per_nu(&nu_list, |nu| cauchy_peak(nu, tol))?;
            let mut b = Builder::new(&[
                ("nu", "1"),
                ("t", "time"),
                ("x_star", "length"),
                ("G_star", "1/length"),
                ("x_star_G_star", "1"),
            ]);
            for (nu, (c, m)) in nu_list.iter().zip(peaks) {
                let v = nu.nu();
                for &t in &ts {
                    let x = c * t.powf(v);
                    let y = m * t.powf(-v);
                    b.push(&[v, t, x, y, x * y]);
                }
            }
            b
        }
        FigureId::MaxLocValProdCauchy => {
            let peaks = per_nu(&nu_list, |nu| cauchy_peak(nu, tol))?;
            let mut b = Builder::new(&[("nu", "1"), ("c_nu", "1"), ("m_nu", "1"), ("c_m", "1")]);
            for (nu, (c, m)) in nu_list.iter().zip(peaks) {
                b.push(&[nu.nu(), c, m, c * m]);
            }
            b
        }
        FigureId::MaxVelocitySignaling => {
            let ds = per_nu(&nu_list, |nu| Ok(max_location_signaling(nu, tol)?.require_converged()?.location))?;
            let mut b = Builder::new(&[("nu", "1"), ("t", "time"), ("d_nu", "1"), ("V_s", "length/time")]);
            for (nu, d) in nu_list.iter().zip(ds) {
                let v = nu.nu();
                for &t in &ts {
                    b.push(&[v, t, d, v * d * t.powf(v - 1.0)]);
                }
            }
            b
        }
        FigureId::MaxLocValSignaling => {
            let recs = per_nu(&nu_list, |nu| max_location_signaling(nu, tol)?.require_converged())?;
            let mut b = Builder::new(&[("nu", "1"), ("d_nu", "1"), ("n_nu", "1"), ("d_n", "1")]);
            for r in recs {
                b.push(&[r.nu.nu(), r.location, r.value, r.location * r.value]);
            }
            b
        }
        FigureId::GravityCauchy => {
            let mut b = Builder::new(&[
                ("nu", "1"),
                ("t", "time"),
                ("g_c", "1"),
                ("r_c", "length"),
                ("V_c_g", "length/time"),
            ]);
            for &nu in &nu_list {
                let g = gravity_coefficient_cauchy(nu);
                for &t in &ts {
                    let v = gravity_velocity_cauchy(t, nu).map_err(|e| Failure::at_nu(e, nu))?;
                    b.push(&[nu.nu(), t, g, g * t.powf(nu.nu()), v]);
                }
            }
            b
        }
        FigureId::GravitySignaling => {
            let mut b = Builder::new(&[
                ("nu", "1"),
                ("t", "time"),
                ("g_s", "1"),
                ("r_s", "length"),
                ("V_s_g", "length/time"),
            ]);
            for &nu in &nu_list {
                let g = gravity_coefficient_signaling(nu);
                for &t in &ts {
                    let v = gravity_velocity_signaling(t, nu).map_err(|e| Failure::at_nu(e, nu))?;
                    b.push(&[nu.nu(), t, g, g * t.powf(nu.nu()), v]);
                }
            }
            b
        }
        FigureId::MedianTable => {
            let rows = per_nu(&nu_list, |nu| {
                let c = max_location_cauchy_with_limits(nu, tol)?;
                let g = gravity_coefficient_cauchy(nu);
                if nu.is_wave() {
                    let m = MEDIAN_COEFFICIENT_WAVE;
                    return Ok([nu.nu(), m, m, 0.0, c, g]);
                }
                let rec = median_coefficient(nu, tol)?;
                Ok([nu.nu(), rec.m_c, rec.m_s, rec.residual, c, g])
            })?;
            md.notes.push("nu = 1 uses the limits m_c = m_s = 1".into());
            let mut b = Builder::new(&[
                ("nu", "1"),
                ("m_c", "1"),
                ("m_s", "1"),
                ("residual", "1"),
                ("c_nu", "1"),
                ("g_c", "1"),
            ]);
            rows.iter().for_each(|r| b.push(r));
            b
        }
    };
    md.notes.push(CLOSED_FORM_NOTE.into());
    let mut table = b.finish(id.as_str(), md)?;
    table.figure_id = Some(id);
    Ok(table)
}
