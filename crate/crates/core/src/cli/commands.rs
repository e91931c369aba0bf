use rayon::prelude::*;

use super::config::{Grid, RunConfig, DEFAULT_NU};
use super::Failure;
use crate::extrema::{
    max_location_cauchy, max_location_signaling, max_value_cauchy_integral, max_value_signaling_integral,
    MAX_LOCATION_DIFFUSION,
};
use crate::green::{green_cauchy, green_signaling, similarity};
use crate::moments::{gravity_coefficient_cauchy, gravity_coefficient_signaling, median_coefficient, mellin_moment_record};
use crate::special::{mainardi_m, wright_f, FractionalOrder, Method};
use crate::table::{Column, FigureTable, Metadata};

pub(crate) const METHOD_NOTE: &str = "method codes: 0 closed_form, 1 series, 2 quadrature, 3 asymptotic";

pub(crate) fn method_code(m: Method) -> f64 {
    match m {
        Method::ClosedForm => 0.0,
        Method::Series => 1.0,
        Method::Quadrature => 2.0,
        Method::Asymptotic => 3.0,
    }
}

/// Row-wise assembly of a columnar table.
pub(crate) struct Builder {
    cols: Vec<Column>,
}

impl Builder {
    pub(crate) fn new(layout: &[(&str, &str)]) -> Self {
        Self {
            cols: layout.iter().map(|(n, u)| Column::new(*n, *u, Vec::new())).collect(),
        }
    }

    pub(crate) fn push(&mut self, row: &[f64]) {
        debug_assert_eq!(row.len(), self.cols.len());
        for (c, v) in self.cols.iter_mut().zip(row) {
            c.values.push(*v);
        }
    }

    pub(crate) fn finish(self, title: &str, metadata: Metadata) -> Result<FigureTable, Failure> {
        Ok(FigureTable::new(None, title, metadata, self.cols)?)
    }
}

fn nus(v: &[FractionalOrder]) -> Vec<f64> {
    v.iter().map(|n| n.nu()).collect()
}

/// `M_ν`, `F_ν`, `G_c`, `G_s` on the `ν × t × x` grid.
pub fn eval(cfg: &RunConfig) -> Result<FigureTable, Failure> {
    let nu_list = cfg.nu_or(&DEFAULT_NU);
    let ts = cfg.t_or(Grid { min: 1.0, max: 1.0, n: 1 });
    let xs = cfg.x_or(Grid { min: 0.0, max: 5.0, n: 51 });
    let tol = &cfg.tolerances;
    let mut points: Vec<(FractionalOrder, f64, f64)> = Vec::with_capacity(nu_list.len() * ts.len() * xs.len());
    for &nu in &nu_list {
        for &t in &ts {
            points.extend(xs.iter().map(|&x| (nu, t, x)));
        }
    }

    let rows: Vec<Result<[f64; 13], Failure>> = points
        .par_iter()
        .map(|&(nu, t, x)| {
            let at = |e| Failure::at(e, nu, x, t);
            let r = similarity(x, t, nu).map_err(at)?;
            let m = mainardi_m(nu, r, &tol.series).map_err(at)?;
            let f = wright_f(nu, r, &tol.series).map_err(at)?;
            let gc = green_cauchy(x, t, nu, &tol.series).map_err(at)?;
            let (gs, gs_err) = if x > 0.0 {
                let g = green_signaling(x, t, nu, &tol.series).map_err(at)?;
                (g.value, g.abs_err_estimate)
            } else {
                (f64::NAN, f64::NAN)
            };
            Ok([
                nu.nu(),
                t,
                x,
                r,
                m.value,
                m.abs_err_estimate,
                method_code(m.method),
                f.value,
                f.abs_err_estimate,
                gc.value,
                gc.abs_err_estimate,
                gs,
                gs_err,
            ])
        })
        .collect();

    let mut b = Builder::new(&[
        ("nu", "1"),
        ("t", "time"),
        ("x", "length"),
        ("r", "1"),
        ("M", "1"),
        ("M_err", "1"),
        ("M_method", "code"),
        ("F", "1"),
        ("F_err", "1"),
        ("G_c", "1/length"),
        ("G_c_err", "1/length"),
        ("G_s", "1/time"),
        ("G_s_err", "1/time"),
    ]);
    for row in rows {
        b.push(&row?);
    }
    let mut md = Metadata::new(nus(&nu_list), ts, *tol);
    md.x_grid = xs;
    md.notes.push(METHOD_NOTE.into());
    md.notes.push("G_s is defined for x > 0 only; other rows hold NaN".into());
    b.finish("function values", md)
}

/// Maximum locations, values, their product and the integral forms of the
/// maximum values, one row per ν.
pub fn extrema(cfg: &RunConfig) -> Result<FigureTable, Failure> {
    let nu_list = cfg.nu_or(&DEFAULT_NU);
    let tol = &cfg.tolerances;
    let rows: Vec<Result<[f64; 13], Failure>> = nu_list
        .par_iter()
        .map(|&nu| {
            let ctx = |e| Failure::at_nu(e, nu);
            nu.require_pointwise().map_err(ctx)?;
            let (c, m, m_int, m_int_err) = if nu.is_diffusion() {
                let m0 = mainardi_m(nu, 0.0, &tol.series).map_err(ctx)?.value;
                (MAX_LOCATION_DIFFUSION, 0.5 * m0, f64::NAN, f64::NAN)
            } else {
                let rec = max_location_cauchy(nu, tol).and_then(|r| r.require_converged()).map_err(ctx)?;
                let q = max_value_cauchy_integral(nu, rec.location, tol).map_err(ctx)?;
                (rec.location, 0.5 * rec.value, q.value, q.err_estimate)
            };
            let s = max_location_signaling(nu, tol).and_then(|r| r.require_converged()).map_err(ctx)?;
            let q = max_value_signaling_integral(nu, s.location, tol).map_err(ctx)?;
            let v = nu.nu();
            Ok([
                v,
                c,
                m,
                c * m,
                m_int,
                m_int_err,
                s.location,
                s.value,
                s.location * s.value,
                q.value,
                q.err_estimate,
                v * c,
                v * s.location,
            ])
        })
        .collect();
    let mut b = Builder::new(&[
        ("nu", "1"),
        ("c_nu", "1"),
        ("m_nu", "1"),
        ("c_m", "1"),
        ("m_nu_integral", "1"),
        ("m_nu_integral_err", "1"),
        ("d_nu", "1"),
        ("n_nu", "1"),
        ("d_n", "1"),
        ("n_nu_integral", "1"),
        ("n_nu_integral_err", "1"),
        ("V_c_t1", "length/time"),
        ("V_s_t1", "length/time"),
    ]);
    for row in rows {
        b.push(&row?);
    }
    let mut md = Metadata::new(nus(&nu_list), vec![1.0], *tol);
    md.notes
        .push("nu = 1/2: c_nu = 0 by convention, the Cauchy integral form is not defined (NaN)".into());
    b.finish("maxima", md)
}

/// Mellin moments of `M_ν` for `s = 1, 2, 3` against quadrature, with the
/// gravity coefficients.
pub fn moments(cfg: &RunConfig) -> Result<FigureTable, Failure> {
    let nu_list = cfg.nu_or(&DEFAULT_NU);
    let tol = &cfg.tolerances;
    let jobs: Vec<(FractionalOrder, f64)> = nu_list
        .iter()
        .flat_map(|&nu| [1.0, 2.0, 3.0].into_iter().map(move |s| (nu, s)))
        .collect();
    let rows: Vec<Result<[f64; 7], Failure>> = jobs
        .par_iter()
        .map(|&(nu, s)| {
            let rec = mellin_moment_record(nu, s, tol).map_err(|e| Failure::at_nu(e, nu))?;
            Ok([
                nu.nu(),
                s,
                rec.closed_form,
                rec.oracle,
                rec.abs_discrepancy,
                gravity_coefficient_cauchy(nu),
                gravity_coefficient_signaling(nu),
            ])
        })
        .collect();
    let mut b = Builder::new(&[
        ("nu", "1"),
        ("s", "1"),
        ("mellin_closed_form", "1"),
        ("mellin_quadrature", "1"),
        ("abs_discrepancy", "1"),
        ("g_c", "1"),
        ("g_s", "1"),
    ]);
    for row in rows {
        b.push(&row?);
    }
    b.finish("Mellin moments", Metadata::new(nus(&nu_list), Vec::new(), *tol))
}

/// Median coefficients and the Cauchy median `m_c t^ν` on the `ν × t` grid.
pub fn median(cfg: &RunConfig) -> Result<FigureTable, Failure> {
    let nu_list = cfg.nu_or(&DEFAULT_NU);
    let ts = cfg.t_or(Grid { min: 1.0, max: 1.0, n: 1 });
    let tol = &cfg.tolerances;
    let recs: Vec<_> = nu_list
        .par_iter()
        .map(|&nu| median_coefficient(nu, tol).map_err(|e| Failure::at_nu(e, nu)))
        .collect();
    let mut b = Builder::new(&[
        ("nu", "1"),
        ("t", "time"),
        ("m_c", "1"),
        ("m_s", "1"),
        ("residual", "1"),
        ("x_median", "length"),
    ]);
    for rec in recs {
        let rec = rec?;
        for &t in &ts {
            b.push(&[rec.nu.nu(), t, rec.m_c, rec.m_s, rec.residual, rec.m_c * t.powf(rec.nu.nu())]);
        }
    }
    b.finish("medians", Metadata::new(nus(&nu_list), ts, *tol))
}
