//! Centers of gravity and medians.
//!
//! The Mellin transform of the Mainardi function,
//!
//! ```text
//! ∫_0^∞ u^{s-1} M_ν(u) du = Γ(s) / Γ(1 - ν + νs),
//! ```
//!
//! gives the centers of gravity of both Green functions in closed form:
//! `g_c(ν) t^ν` with `g_c = 1/Γ(1+ν)` and `g_s(ν) t^ν` with
//! `g_s = Γ(ν)/Γ(2ν) = √π 2^{1-2ν} / Γ(ν + 1/2)`. The median `m_c(ν) t^ν` of
//! `G_c` solves `∫_0^{m_c} M_ν = 1/2`, and the signaling median in time is
//! `m_s(ν) x^{1/ν}` with `m_s = m_c^{-1/ν}`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::integrate_semi_infinite;
use crate::special::{
    gamma, mainardi_m, mainardi_m_cdf, mainardi_m_tail, mainardi_moment_tail_bound, reciprocal_gamma,
    FractionalOrder,
};
use crate::tolerances::Tolerances;

/// `m_c(1)`: the wave pulse carries all its mass at `r = 1`.
pub const MEDIAN_COEFFICIENT_WAVE: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentRecord {
    pub nu: FractionalOrder,
    pub s: f64,
    pub closed_form: f64,
    pub oracle: f64,
    pub abs_discrepancy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MedianRecord {
    pub nu: FractionalOrder,
    pub m_c: f64,
    pub m_s: f64,
    /// `∫_0^{m_c} M_ν/2 - 1/4`.
    pub residual: f64,
}

fn check_t(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("t must be finite and positive, got {t}")))
    }
}

/// `Γ(s) / Γ(1 - ν + νs)`, `s > 0`, `ν < 1`.
pub fn mellin_moment(nu: FractionalOrder, s: f64) -> Result<f64> {
    let nu = nu.require_pointwise()?;
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Domain(format!("Mellin order must be positive, got {s}")));
    }
    Ok(gamma(s)? * reciprocal_gamma(1.0 - nu.nu() + nu.nu() * s))
}

/// `∫_0^∞ u^{s-1} M_ν(u) du` by adaptive quadrature, truncated where the
/// asymptotic envelope certifies the remainder.
pub fn mellin_moment_quadrature(nu: FractionalOrder, s: f64, tol: &Tolerances) -> Result<f64> {
    let nu = nu.require_pointwise()?;
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Domain(format!("Mellin order must be positive, got {s}")));
    }
    let f = |u: f64| {
        if u == 0.0 {
            return 0.0;
        }
        mainardi_m(nu, u, &tol.series)
            .map(|m| u.powf(s - 1.0) * m.value)
            .unwrap_or(f64::NAN)
    };
    Ok(integrate_semi_infinite(f, |t| mainardi_moment_tail_bound(nu, s, t), &tol.quad)?.value)
}

pub fn mellin_moment_record(nu: FractionalOrder, s: f64, tol: &Tolerances) -> Result<MomentRecord> {
    let closed_form = mellin_moment(nu, s)?;
    let oracle = mellin_moment_quadrature(nu, s, tol)?;
    Ok(MomentRecord {
        nu,
        s,
        closed_form,
        oracle,
        abs_discrepancy: (closed_form - oracle).abs(),
    })
}

/// `g_c(ν) = 1/Γ(1+ν)`.
pub fn gravity_coefficient_cauchy(nu: FractionalOrder) -> f64 {
    reciprocal_gamma(1.0 + nu.nu())
}

/// `g_s(ν) = Γ(ν)/Γ(2ν)`.
pub fn gravity_coefficient_signaling(nu: FractionalOrder) -> f64 {
    let v = nu.nu();
    let g = gamma(v).unwrap_or(f64::NAN) * reciprocal_gamma(2.0 * v);
    debug_assert!(
        (g - gravity_coefficient_signaling_duplication(nu)).abs() <= 1e-13 * g,
        "duplication formula mismatch at nu = {v}"
    );
    g
}

/// `g_s(ν) = √π 2^{1-2ν} / Γ(ν + 1/2)`.
pub fn gravity_coefficient_signaling_duplication(nu: FractionalOrder) -> f64 {
    let v = nu.nu();
    PI.sqrt() * 2f64.powf(1.0 - 2.0 * v) * reciprocal_gamma(v + 0.5)
}

/// `r_c(t) = g_c(ν) t^ν`.
pub fn gravity_cauchy(t: f64, nu: FractionalOrder) -> Result<f64> {
    check_t(t)?;
    Ok(gravity_coefficient_cauchy(nu) * t.powf(nu.nu()))
}

/// `dr_c/dt = t^{ν-1} / Γ(ν)`.
pub fn gravity_velocity_cauchy(t: f64, nu: FractionalOrder) -> Result<f64> {
    check_t(t)?;
    Ok(t.powf(nu.nu() - 1.0) * reciprocal_gamma(nu.nu()))
}

/// `r_s(t) = g_s(ν) t^ν`.
pub fn gravity_signaling(t: f64, nu: FractionalOrder) -> Result<f64> {
    check_t(t)?;
    Ok(gravity_coefficient_signaling(nu) * t.powf(nu.nu()))
}

/// `dr_s/dt = √π 2^{1-2ν} ν / Γ(ν + 1/2) · t^{ν-1}`.
pub fn gravity_velocity_signaling(t: f64, nu: FractionalOrder) -> Result<f64> {
    check_t(t)?;
    let v = nu.nu();
    Ok(PI.sqrt() * 2f64.powf(1.0 - 2.0 * v) * v * reciprocal_gamma(v + 0.5) * t.powf(v - 1.0))
}

/// `∫_0^∞ x^k G(x, t; ν) dx` for the first two `k`, by quadrature in `x`.
fn green_moments(signaling: bool, t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<(f64, f64)> {
    check_t(t)?;
    let nu = nu.require_pointwise()?;
    let tn = t.powf(nu.nu());
    let green = |x: f64| {
        let g = if signaling {
            if x == 0.0 {
                return 0.0;
            }
            crate::green::green_signaling(x, t, nu, &tol.series)
        } else {
            crate::green::green_cauchy(x, t, nu, &tol.series)
        };
        g.map(|g| g.value).unwrap_or(f64::NAN)
    };
    // ∫_X^∞ x^k G dx in terms of ∫_{X/t^ν}^∞ r^{s-1} M_ν dr
    let shift = if signaling { 2.0 } else { 1.0 };
    let scale = |k: f64| {
        if signaling {
            nu.nu() / t * tn.powf(k + 1.0)
        } else {
            0.5 * tn.powf(k)
        }
    };
    let mut out = [0.0; 2];
    for (k, slot) in out.iter_mut().enumerate() {
        let k = k as f64;
        let bound = |x: f64| scale(k) * mainardi_moment_tail_bound(nu, k + shift, x / tn);
        *slot = integrate_semi_infinite(|x| x.powf(k) * green(x), bound, &tol.quad)?.value;
    }
    Ok((out[0], out[1]))
}

/// `∫ x G_c dx / ∫ G_c dx` over `x > 0`, by quadrature.
pub fn gravity_cauchy_quadrature(t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    let (m0, m1) = green_moments(false, t, nu, tol)?;
    Ok(m1 / m0)
}

/// `∫ x G_s dx / ∫ G_s dx` over `x > 0`, by quadrature.
pub fn gravity_signaling_quadrature(t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    let (m0, m1) = green_moments(true, t, nu, tol)?;
    Ok(m1 / m0)
}

/// `∫_0^∞ G_s(x, t; ν) dx`, by quadrature; equals `ν t^{ν-1} / Γ(1+ν)`.
pub fn signaling_mass_quadrature(t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    Ok(green_moments(true, t, nu, tol)?.0)
}

/// Solves `∫_0^{m_c} M_ν = 1/2` by bisection to width `1e-12` and one
/// secant step; `m_s = m_c^{-1/ν}`.
pub fn median_coefficient(nu: FractionalOrder, tol: &Tolerances) -> Result<MedianRecord> {
    let nu = nu.require_pointwise()?;
    let p = &tol.series;
    let g = |m: f64| mainardi_m_cdf(nu, m, p).map(|c| c.value - 0.5);

    let mut hi = 1.0;
    let mut guard = 0;
    while mainardi_m_tail(nu, hi, p)?.value > 0.01 {
        hi *= 2.0;
        guard += 1;
        if guard > 60 {
            return Err(Error::SolverFailure("no bracket for the median".into()));
        }
    }
    let mut lo = 0.0;
    let (mut g_lo, mut g_hi) = (-0.5, g(hi)?);
    let mut iterations = 0;
    while hi - lo > 1e-12 {
        if iterations >= tol.solver.max_iter {
            return Err(Error::SolverFailure(format!(
                "median bisection for nu = {nu} stopped at width {:e} after {iterations} iterations",
                hi - lo
            )));
        }
        let mid = 0.5 * (lo + hi);
        let g_mid = g(mid)?;
        if g_mid < 0.0 {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
            g_hi = g_mid;
        }
        iterations += 1;
    }
    let mut m = if g_hi != g_lo { lo - g_lo * (hi - lo) / (g_hi - g_lo) } else { 0.5 * (lo + hi) };
    if !(m >= lo && m <= hi) {
        m = 0.5 * (lo + hi);
    }
    let cdf = mainardi_m_cdf(nu, m, p)?;
    let residual = 0.5 * (cdf.value - 0.5);
    if residual.abs() > tol.solver.value_tol.max(cdf.abs_err_estimate) {
        return Err(Error::SolverFailure(format!(
            "median residual {residual:e} for nu = {nu} exceeds tolerance"
        )));
    }
    Ok(MedianRecord {
        nu,
        m_c: m,
        m_s: m.powf(-1.0 / nu.nu()),
        residual,
    })
}

/// `x_m^c(t) = m_c(ν) t^ν`.
pub fn median_cauchy(t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    check_t(t)?;
    Ok(median_coefficient(nu, tol)?.m_c * t.powf(nu.nu()))
}

/// `t_m^s(x) = m_s(ν) x^{1/ν}`.
pub fn median_signaling(x: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Domain(format!("x must be finite and positive, got {x}")));
    }
    Ok(median_coefficient(nu, tol)?.m_s * x.powf(1.0 / nu.nu()))
}
