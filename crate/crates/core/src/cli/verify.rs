use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use super::config::{OutputFormat, RunConfig};
use super::Failure;
use crate::error::{Error, Result};
use crate::extrema::{
    argmax_green, max_location_cauchy, max_location_cauchy_with_limits, max_location_signaling,
    max_value_cauchy_integral, max_value_signaling_integral, velocity_cauchy, velocity_signaling,
};
use crate::green::{green_cauchy, green_signaling, Problem};
use crate::moments::{
    gravity_cauchy, gravity_cauchy_quadrature, gravity_coefficient_cauchy, gravity_coefficient_signaling,
    gravity_signaling, gravity_signaling_quadrature, gravity_velocity_cauchy, gravity_velocity_signaling,
    median_coefficient, mellin_moment_record, signaling_mass_quadrature,
};
use crate::special::{gamma, mainardi_m, mainardi_m_cdf, verify_wright_f, FractionalOrder};
use crate::tolerances::Tolerances;

/// ν values checked when `--nu` is not given.
pub const VERIFY_NU: [f64; 3] = [0.6, 0.75, 0.9];

/// One line of the verification report. `nu` is NaN for checks that do
/// not depend on a single order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub nu: f64,
    pub discrepancy: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl Check {
    fn new(name: &str, nu: f64, discrepancy: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            nu,
            discrepancy,
            threshold,
            passed: discrepancy <= threshold,
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn central<F: Fn(f64) -> Result<f64>>(f: F, t: f64, h: f64) -> Result<f64> {
    Ok((f(t + h)? - f(t - h)?) / (2.0 * h))
}

fn global_checks(tol: &Tolerances) -> Result<Vec<Check>> {
    let half = FractionalOrder::DIFFUSION;
    let one = FractionalOrder::WAVE;
    let mut out = vec![
        Check::new("c_1/2 = 0", f64::NAN, max_location_cauchy_with_limits(half, tol)?.abs(), 0.0),
        Check::new("c_1 = 1", f64::NAN, (max_location_cauchy_with_limits(one, tol)? - 1.0).abs(), 0.0),
    ];
    let vs = velocity_signaling(2.0, half, tol)?;
    out.push(Check::new("V_s(t, 1/2) = (sqrt2/2)/sqrt t", f64::NAN, rel(vs, 0.5), 1e-12));
    out.push(Check::new("g_c(1/2) = 2/sqrt pi", f64::NAN, (gravity_coefficient_cauchy(half) - 2.0 / PI.sqrt()).abs(), 1e-10));
    out.push(Check::new("g_c(1) = 1", f64::NAN, (gravity_coefficient_cauchy(one) - 1.0).abs(), 1e-10));
    out.push(Check::new("g_s(1/2) = sqrt pi", f64::NAN, (gravity_coefficient_signaling(half) - PI.sqrt()).abs(), 1e-10));
    out.push(Check::new("g_s(1) = 1", f64::NAN, (gravity_coefficient_signaling(one) - 1.0).abs(), 1e-10));

    let mut heat: f64 = 0.0;
    let mut levy: f64 = 0.0;
    for t in [0.5, 1.0, 2.0] {
        for i in 1..=12 {
            let x = 0.5 * i as f64;
            let k = (-x * x / (4.0 * t)).exp() / (2.0 * (PI * t).sqrt());
            heat = heat.max(rel(green_cauchy(x, t, half, &tol.series)?.value, k));
            let l = x / (2.0 * (PI * t.powi(3)).sqrt()) * (-x * x / (4.0 * t)).exp();
            levy = levy.max(rel(green_signaling(x, t, half, &tol.series)?.value, l));
        }
    }
    out.push(Check::new("G_c(nu = 1/2) is the heat kernel", f64::NAN, heat, 1e-12));
    out.push(Check::new("G_s(nu = 1/2) is the Levy-Smirnov density", f64::NAN, levy, 1e-12));

    let mc = median_coefficient(half, tol)?.m_c;
    out.push(Check::new("m_c(1/2) = 2 erfinv(1/2)", f64::NAN, (mc - 0.953_872_552_408_939_7).abs(), 1e-8));
    Ok(out)
}

fn order_checks(nu: FractionalOrder, tol: &Tolerances) -> Result<Vec<Check>> {
    let v = nu.nu();
    let p = &tol.series;
    let mut out = Vec::new();

    for s in [1.0, 2.0, 3.0] {
        let rec = mellin_moment_record(nu, s, tol)?;
        let name = if s == 1.0 { "normalization of M_nu".to_string() } else { format!("Mellin moment s = {s}") };
        out.push(Check::new(&name, v, rec.abs_discrepancy, 1e-8));
    }
    let mass = signaling_mass_quadrature(1.0, nu, tol)?;
    out.push(Check::new("spatial mass of G_s at t = 1", v, (mass - 1.0 / gamma(v)?).abs(), 1e-8));

    let mut recip: f64 = 0.0;
    for i in 1..=20 {
        let r = 0.25 * i as f64;
        let direct = verify_wright_f(nu, r, p)?.value;
        recip = recip.max(rel(direct, v * r * mainardi_m(nu, r, p)?.value));
    }
    out.push(Check::new("F_nu = nu r M_nu", v, recip, 1e-12));

    let mut scaling: f64 = 0.0;
    for (x, t) in [(0.3, 0.5), (1.0, 1.0), (2.5, 2.0), (0.7, 3.0)] {
        let lambda: f64 = 2.0;
        let lhs = green_cauchy(lambda.powf(v) * x, lambda * t, nu, p)?.value;
        let rhs = lambda.powf(-v) * green_cauchy(x, t, nu, p)?.value;
        scaling = scaling.max(rel(lhs, rhs));
    }
    out.push(Check::new("self-similarity of G_c", v, scaling, 1e-12));

    let c = max_location_cauchy(nu, tol)?.require_converged()?;
    let m = 0.5 * c.value;
    let m_int = max_value_cauchy_integral(nu, c.location, tol)?.value;
    out.push(Check::new("m_nu: peak value vs cosine integral", v, (m - m_int).abs(), 1e-6));
    let d = max_location_signaling(nu, tol)?.require_converged()?;
    let n_int = max_value_signaling_integral(nu, d.location, tol)?.value;
    out.push(Check::new("n_nu: peak value vs sine integral", v, (d.value - n_int).abs(), 1e-6));

    let x_star = |problem: Problem| move |t: f64| argmax_green(problem, t, nu, tol)?.require_converged().map(|r| r.location);
    let h = 1e-3;
    let (mut vc, mut vsig, mut vgc, mut vgs): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for t in [0.5, 2.0] {
        vc = vc.max(rel(velocity_cauchy(t, nu, tol)?, central(x_star(Problem::Cauchy), t, h)?));
        vsig = vsig.max(rel(velocity_signaling(t, nu, tol)?, central(x_star(Problem::Signaling), t, h)?));
        vgc = vgc.max(rel(gravity_velocity_cauchy(t, nu)?, central(|t| gravity_cauchy(t, nu), t, h)?));
        vgs = vgs.max(rel(gravity_velocity_signaling(t, nu)?, central(|t| gravity_signaling(t, nu), t, h)?));
    }
    out.push(Check::new("V_c vs finite difference of the peak", v, vc, 1e-6));
    out.push(Check::new("V_s vs finite difference of the peak", v, vsig, 1e-6));
    out.push(Check::new("V_c^g vs finite difference", v, vgc, 1e-6));
    out.push(Check::new("V_s^g vs finite difference", v, vgs, 1e-6));

    let mut hyper: f64 = 0.0;
    let cm = c.location * m;
    for t in [0.5, 1.0, 2.0, 10.0] {
        let r = argmax_green(Problem::Cauchy, t, nu, tol)?.require_converged()?;
        hyper = hyper.max(rel(r.location * r.value, cm));
    }
    out.push(Check::new("x_* G_c^* = c_nu m_nu", v, hyper, 1e-10));

    let gc = gravity_cauchy_quadrature(1.0, nu, tol)?;
    out.push(Check::new("center of gravity of G_c", v, rel(gc, gravity_coefficient_cauchy(nu)), 1e-8));
    let gs = gravity_signaling_quadrature(1.0, nu, tol)?;
    out.push(Check::new("center of gravity of G_s", v, rel(gs, gravity_coefficient_signaling(nu)), 1e-8));

    let med = median_coefficient(nu, tol)?;
    let cdf = mainardi_m_cdf(nu, med.m_c, p)?.value;
    out.push(Check::new("CDF of M_nu at m_c", v, (cdf - 0.5).abs(), 1e-10));
    out.push(Check::new("m_s m_c^(1/nu) = 1", v, (med.m_s * med.m_c.powf(1.0 / v) - 1.0).abs(), 1e-12));
    Ok(out)
}

/// Runs the oracle suite. Numerical failures abort the run; a check that
/// merely misses its threshold is reported with `passed = false`.
pub fn run_checks(cfg: &RunConfig) -> std::result::Result<Vec<Check>, Failure> {
    let tol = &cfg.tolerances;
    let nu_list = cfg.nu_or(&VERIFY_NU);
    let mut checks = global_checks(tol)?;
    let per: Vec<std::result::Result<Vec<Check>, Failure>> = nu_list
        .par_iter()
        .filter(|nu| !nu.is_diffusion() && !nu.is_wave())
        .map(|&nu| order_checks(nu, tol).map_err(|e| Failure::at_nu(e, nu)))
        .collect();
    for block in per {
        checks.extend(block?);
    }
    Ok(checks)
}

pub(crate) fn render(checks: &[Check], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(checks).map_err(|e| Error::Io(e.to_string())),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check", "nu", "discrepancy", "threshold", "status"])
                .map_err(|e| Error::Io(e.to_string()))?;
            for c in checks {
                let nu = if c.nu.is_nan() { String::new() } else { c.nu.to_string() };
                w.write_record([
                    c.name.clone(),
                    nu,
                    format!("{:.3e}", c.discrepancy),
                    format!("{:.0e}", c.threshold),
                    if c.passed { "pass" } else { "FAIL" }.to_string(),
                ])
                .map_err(|e| Error::Io(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}
