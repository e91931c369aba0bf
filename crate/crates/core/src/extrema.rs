//! Maxima of the Green functions and how they move.
//!
//! At fixed `t` the Cauchy Green function peaks at `x_* = ±c_ν t^ν` with
//! height `m_ν t^{-ν}`, where `c_ν` is the maximum point of `M_ν` and
//! `m_ν = M_ν(c_ν)/2`. The signaling Green function peaks at `x_* = d_ν t^ν`
//! with height `n_ν / t`, `d_ν` the maximum point of `F_ν` and
//! `n_ν = F_ν(d_ν)`. Both heights also have integral representations in
//! terms of Mittag-Leffler functions:
//!
//! ```text
//! m_ν = (1/π) ∫_0^∞ E_{2ν}(-τ²) cos(c_ν τ) dτ
//! n_ν = (2/π) ∫_0^∞ τ E_{2ν,2ν}(-τ²) sin(d_ν τ) dτ
//! ```
//!
//! Maxima are located by a coarse scan, golden-section refinement and a
//! final bisection on the sign of the derivative.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::green::Problem;
use crate::quadrature::{integrate_oscillatory_from, Oscillation, QuadResult};
use crate::special::{
    mainardi_m, mainardi_m_derivative, mittag_leffler, wright_f, wright_f_derivative, FractionalOrder,
};
use crate::tolerances::{SolverPolicy, Tolerances};

/// `c_{1/2}`: the heat kernel peaks at the origin.
pub const MAX_LOCATION_DIFFUSION: f64 = 0.0;
/// `c_1`: the wave pulse sits at `x = t`.
pub const MAX_LOCATION_WAVE: f64 = 1.0;

/// Where the scan stops, in terms of the decay exponent `Y` of `M_ν`.
const SCAN_Y: f64 = 12.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremumRecord {
    pub nu: FractionalOrder,
    pub location: f64,
    pub value: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub converged: bool,
}

impl ExtremumRecord {
    pub fn require_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::SolverFailure(format!(
                "maximum for nu = {} not located to tolerance: bracket [{}, {}] after {} iterations",
                self.nu, self.bracket.0, self.bracket.1, self.iterations
            )))
        }
    }
}

struct Search {
    location: f64,
    value: f64,
    bracket: (f64, f64),
    iterations: usize,
    converged: bool,
}

fn maximize<F, D>(f: F, df: D, hi_start: f64, policy: &SolverPolicy) -> Result<Search>
where
    F: Fn(f64) -> Result<f64>,
    D: Fn(f64) -> Result<f64>,
{
    policy.validate()?;
    let n = policy.scan_points;
    let mut r_hi = hi_start;
    let mut best = (0, f64::NEG_INFINITY);
    for _ in 0..8 {
        best = (0, f64::NEG_INFINITY);
        for i in 0..=n {
            let v = f(r_hi * i as f64 / n as f64)?;
            if v > best.1 {
                best = (i, v);
            }
        }
        // the envelope at the end of the scan must be far below the peak
        if best.0 < n && f(r_hi)? < 1e-3 * best.1 {
            break;
        }
        r_hi *= 2.0;
    }
    let h = r_hi / n as f64;
    let mut lo = best.0.saturating_sub(1) as f64 * h;
    let mut hi = (best.0 + 1) as f64 * h;
    let scan_bracket = (lo, hi);

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let coarse = policy.location_tol.max(1e-7 * r_hi);
    let mut iterations = 0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    while hi - lo > coarse && iterations < policy.max_iter {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
        }
        iterations += 1;
    }

    // value differences are at rounding level now; the derivative sign is not
    let mut widen = hi - lo;
    while !(df(lo)? > 0.0 && df(hi)? < 0.0) {
        if lo <= scan_bracket.0 && hi >= scan_bracket.1 {
            return Err(Error::SolverFailure(format!(
                "no interior maximum in [{}, {}]",
                scan_bracket.0, scan_bracket.1
            )));
        }
        lo = (lo - widen).max(scan_bracket.0);
        hi = (hi + widen).min(scan_bracket.1);
        widen *= 2.0;
    }
    while hi - lo >= policy.location_tol && iterations < policy.max_iter {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if df(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let location = 0.5 * (lo + hi);
    Ok(Search {
        location,
        value: f(location)?,
        bracket: (lo, hi),
        iterations,
        converged: hi - lo < policy.location_tol,
    })
}

fn scan_end(nu: FractionalOrder) -> f64 {
    let v = nu.nu();
    (SCAN_Y / (1.0 - v)).powf(1.0 - v) / v.powf(v)
}

fn record(nu: FractionalOrder, s: Search) -> ExtremumRecord {
    ExtremumRecord {
        nu,
        location: s.location,
        value: s.value,
        bracket: s.bracket,
        iterations: s.iterations,
        converged: s.converged,
    }
}

fn require_open_cauchy(nu: FractionalOrder) -> Result<()> {
    if nu.is_diffusion() || nu.is_wave() {
        Err(Error::Domain(format!(
            "the Cauchy maximum is interior only for 1/2 < nu < 1, got {nu}"
        )))
    } else {
        Ok(())
    }
}

fn require_signaling(nu: FractionalOrder) -> Result<()> {
    if nu.is_wave() {
        Err(Error::Domain("the signaling maximum needs nu < 1".into()))
    } else {
        Ok(())
    }
}

fn check_t(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("t must be finite and positive, got {t}")))
    }
}

/// `c_ν = argmax M_ν`, `1/2 < ν < 1`; `value` is `M_ν(c_ν)`.
pub fn max_location_cauchy(nu: FractionalOrder, tol: &Tolerances) -> Result<ExtremumRecord> {
    require_open_cauchy(nu)?;
    let p = &tol.series;
    let s = maximize(
        |r| mainardi_m(nu, r, p).map(|e| e.value),
        |r| mainardi_m_derivative(nu, r, p).map(|e| e.value),
        scan_end(nu),
        &tol.solver,
    )?;
    Ok(record(nu, s))
}

/// `c_ν` on the closed range, with `c_{1/2} = 0` and `c_1 = 1`.
pub fn max_location_cauchy_with_limits(nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    if nu.is_diffusion() {
        Ok(MAX_LOCATION_DIFFUSION)
    } else if nu.is_wave() {
        Ok(MAX_LOCATION_WAVE)
    } else {
        Ok(max_location_cauchy(nu, tol)?.require_converged()?.location)
    }
}

/// `d_ν = argmax F_ν`, `1/2 ≤ ν < 1`; `value` is `n_ν = F_ν(d_ν)`.
pub fn max_location_signaling(nu: FractionalOrder, tol: &Tolerances) -> Result<ExtremumRecord> {
    require_signaling(nu)?;
    let p = &tol.series;
    let s = maximize(
        |r| wright_f(nu, r, p).map(|e| e.value),
        |r| wright_f_derivative(nu, r, p).map(|e| e.value),
        scan_end(nu),
        &tol.solver,
    )?;
    Ok(record(nu, s))
}

/// Checks `f'(loc - δ) > 0 > f'(loc + δ)` with `δ = 10·location_tol`, for
/// `f = M_ν` (Cauchy) or `F_ν` (signaling).
pub fn is_local_max(problem: Problem, rec: &ExtremumRecord, tol: &Tolerances) -> Result<bool> {
    let delta = 10.0 * tol.solver.location_tol;
    let p = &tol.series;
    let d = |r: f64| match problem {
        Problem::Cauchy => mainardi_m_derivative(rec.nu, r, p).map(|e| e.value),
        Problem::Signaling => wright_f_derivative(rec.nu, r, p).map(|e| e.value),
    };
    Ok(d(rec.location - delta)? > 0.0 && d(rec.location + delta)? < 0.0)
}

/// Maximum of `x ↦ G(x, t; ν)` over `x > 0`, located directly in `x`.
pub fn argmax_green(problem: Problem, t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<ExtremumRecord> {
    check_t(t)?;
    let tn = t.powf(nu.nu());
    let p = &tol.series;
    let s = match problem {
        Problem::Cauchy => {
            require_open_cauchy(nu)?;
            maximize(
                |x| crate::green::green_cauchy(x, t, nu, p).map(|g| g.value),
                |x| mainardi_m_derivative(nu, x / tn, p).map(|e| e.value),
                scan_end(nu) * tn,
                &tol.solver,
            )?
        }
        Problem::Signaling => {
            require_signaling(nu)?;
            maximize(
                |x| {
                    if x == 0.0 {
                        Ok(0.0)
                    } else {
                        crate::green::green_signaling(x, t, nu, p).map(|g| g.value)
                    }
                },
                |x| wright_f_derivative(nu, x / tn, p).map(|e| e.value),
                scan_end(nu) * tn,
                &tol.solver,
            )?
        }
    };
    Ok(record(nu, s))
}

/// `m_ν = M_ν(c_ν)/2`.
pub fn max_value_coefficient_cauchy(nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    Ok(0.5 * max_location_cauchy(nu, tol)?.require_converged()?.value)
}

/// `G_c^*(t; ν) = m_ν t^{-ν}`.
pub fn max_value_cauchy(t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    check_t(t)?;
    Ok(max_value_coefficient_cauchy(nu, tol)? * t.powf(-nu.nu()))
}

/// `n_ν = F_ν(d_ν)`.
pub fn max_value_coefficient_signaling(nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    Ok(max_location_signaling(nu, tol)?.require_converged()?.value)
}

/// `G_s^*(t; ν) = n_ν / t`.
pub fn max_value_signaling(t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    check_t(t)?;
    Ok(max_value_coefficient_signaling(nu, tol)? / t)
}

/// Past this `τ` the exponentially small part of `E_{2ν}(-τ²)` is below
/// `e^{-40}` and the amplitude decays monotonically.
fn monotone_from(nu: f64) -> f64 {
    (40.0 / cos_over(nu)).powf(nu)
}

fn cos_over(nu: f64) -> f64 {
    (PI / (2.0 * nu)).cos().abs().max(1e-3)
}

/// `m_ν = (1/π) ∫_0^∞ E_{2ν}(-τ²) cos(c τ) dτ` evaluated at a given `c`.
pub fn max_value_cauchy_integral(nu: FractionalOrder, c: f64, tol: &Tolerances) -> Result<QuadResult> {
    require_open_cauchy(nu)?;
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::Domain(format!("c must be positive, got {c}")));
    }
    let alpha = nu.beta();
    let amp = |tau: f64| {
        mittag_leffler(alpha, 1.0, -tau * tau, &tol.series)
            .map(|e| e.value)
            .unwrap_or(f64::NAN)
    };
    let mut q = integrate_oscillatory_from(amp, c, Oscillation::Cosine, monotone_from(nu.nu()), &tol.quad)?;
    q.value /= PI;
    q.err_estimate /= PI;
    Ok(q)
}

/// `n_ν = (2/π) ∫_0^∞ τ E_{2ν,2ν}(-τ²) sin(d τ) dτ` evaluated at a given `d`.
pub fn max_value_signaling_integral(nu: FractionalOrder, d: f64, tol: &Tolerances) -> Result<QuadResult> {
    require_signaling(nu)?;
    if !(d.is_finite() && d > 0.0) {
        return Err(Error::Domain(format!("d must be positive, got {d}")));
    }
    let alpha = nu.beta();
    let amp = |tau: f64| {
        mittag_leffler(alpha, alpha, -tau * tau, &tol.series)
            .map(|e| tau * e.value)
            .unwrap_or(f64::NAN)
    };
    let mut q = integrate_oscillatory_from(amp, d, Oscillation::Sine, monotone_from(nu.nu()), &tol.quad)?;
    q.value *= 2.0 / PI;
    q.err_estimate *= 2.0 / PI;
    Ok(q)
}

/// `V_c(t, ν) = ν c_ν t^{ν-1}`, including `ν = 1/2` (zero) and `ν = 1` (one).
pub fn velocity_cauchy(t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    check_t(t)?;
    let c = max_location_cauchy_with_limits(nu, tol)?;
    Ok(nu.nu() * c * t.powf(nu.nu() - 1.0))
}

/// `V_s(t, ν) = ν d_ν t^{ν-1}`.
pub fn velocity_signaling(t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    check_t(t)?;
    let d = max_location_signaling(nu, tol)?.require_converged()?.location;
    Ok(nu.nu() * d * t.powf(nu.nu() - 1.0))
}

/// `c_ν m_ν`, the constant value of `x_*(t) G_c^*(t; ν)`.
pub fn product_cauchy(nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    let rec = max_location_cauchy(nu, tol)?.require_converged()?;
    Ok(rec.location * 0.5 * rec.value)
}

/// `p_ν(t) = d_ν n_ν t^{ν-1} = x_*(t) G_s^*(t; ν)`.
pub fn product_signaling(t: f64, nu: FractionalOrder, tol: &Tolerances) -> Result<f64> {
    check_t(t)?;
    let rec = max_location_signaling(nu, tol)?.require_converged()?;
    Ok(rec.location * rec.value * t.powf(nu.nu() - 1.0))
}
