//! Two-parameter Mittag-Leffler function `E_{α,β}(z) = Σ z^k / Γ(αk + β)`
//! on the non-positive real axis, `0 < α ≤ 2`, `β > 0`.
//!
//! With `z = -x` and `ρ = x^{1/α}`:
//!
//! * `ρ ≤ 5`: the power series.
//! * `5 < ρ < 50`: the branch-cut integral plus, for `α > 1`, the pair of
//!   residues at `u = ρ e^{±iπ/α}`,
//!
//!   ```text
//!   (1/π) ∫_0^∞ e^{-u} u^{α-β} (u^α sin πβ - x sin π(α-β))
//!                 / (u^{2α} + 2x u^α cos πα + x²) du
//!   + (2/α) ρ^{1-β} e^{ρ cos(π/α)} cos((1-β)π/α + ρ sin(π/α))
//!   ```
//!
//! * `ρ ≥ 50`: the same residues plus the algebraic expansion
//!   `Σ_{k≥1} (-1)^{k+1} x^{-k} / Γ(β - αk)`.
//!
//! The residues decay only like `e^{-ρ|cos(π/α)|}`, which is slow for `α`
//! near 2, so they are never dropped.

use std::f64::consts::PI;

use super::gamma::{cos_pi, ln_gamma, reciprocal_gamma, sin_pi, GAMMA_REL_ERR};
use super::{EvalResult, Method, SeriesPolicy};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_points, CompensatedSum, QuadPolicy};

const SERIES_RHO: f64 = 5.0;
const ASYMPTOTIC_RHO: f64 = 50.0;
const ASYMPTOTIC_TERMS: usize = 20;
const EXP_SERIES_X: f64 = 5.0;

/// `E_{α,β}(z)` for `z ≤ 0`.
pub fn mittag_leffler(alpha: f64, beta: f64, z: f64, policy: &SeriesPolicy) -> Result<EvalResult> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(Error::Domain(format!("alpha must lie in (0, 2], got {alpha}")));
    }
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    if !(z <= 0.0 && z.is_finite()) {
        return Err(Error::Domain(format!("z must be finite and non-positive, got {z}")));
    }
    policy.validate()?;
    if z == 0.0 {
        let v = reciprocal_gamma(beta);
        return Ok(EvalResult::new(v, GAMMA_REL_ERR * v.abs(), Method::ClosedForm));
    }
    let x = -z;
    if alpha == 1.0 {
        return exponential_family(beta, x, policy);
    }
    if beta >= alpha + 1.0 {
        // E_{α,β}(z) = (E_{α,β-α}(z) - 1/Γ(β-α)) / z
        let lower = mittag_leffler(alpha, beta - alpha, z, policy)?;
        let v = (lower.value - reciprocal_gamma(beta - alpha)) / z;
        let err = (lower.abs_err_estimate + f64::EPSILON * lower.value.abs()) / x + f64::EPSILON * v.abs();
        return Ok(EvalResult::new(v, err, lower.method));
    }
    let rho = x.powf(1.0 / alpha);
    if rho <= SERIES_RHO {
        let (v, e) = series(alpha, beta, x, policy)?;
        Ok(EvalResult::new(v, e, Method::Series))
    } else if rho < ASYMPTOTIC_RHO {
        let (i, ie) = branch_cut(alpha, beta, x, rho, policy)?;
        let (r, re) = residues(alpha, beta, rho);
        Ok(EvalResult::new(i + r, ie + re, Method::Quadrature))
    } else {
        let (a, ae) = algebraic(alpha, beta, x);
        let (r, re) = residues(alpha, beta, rho);
        Ok(EvalResult::new(a + r, ae + re, Method::Asymptotic))
    }
}

fn series(alpha: f64, beta: f64, x: f64, policy: &SeriesPolicy) -> Result<(f64, f64)> {
    let ln_x = x.ln();
    let mut xk = 1.0;
    let mut sum = CompensatedSum::default();
    let mut abs_sum = 0.0;
    let mut small_run = 0;
    let mut prev = f64::INFINITY;
    for k in 0..policy.max_terms {
        if k > 0 {
            xk *= x;
        }
        let arg = alpha * k as f64 + beta;
        let mag = if arg < 170.0 && xk.is_finite() {
            xk * reciprocal_gamma(arg)
        } else {
            (k as f64 * ln_x - ln_gamma(arg)).exp()
        };
        let term = if k % 2 == 0 { mag } else { -mag };
        sum.add(term);
        abs_sum += mag;
        if mag <= policy.rel_tol * sum.value().abs() && mag < prev {
            small_run += 1;
            if small_run >= 3 {
                let err = (4.0 * f64::EPSILON + GAMMA_REL_ERR) * abs_sum + mag;
                return Ok((sum.value(), err));
            }
        } else {
            small_run = 0;
        }
        prev = mag;
    }
    Err(Error::PolicyExhausted {
        r: x,
        rel_tol: policy.rel_tol,
        max_terms: policy.max_terms,
    })
}

fn branch_cut(alpha: f64, beta: f64, x: f64, rho: f64, policy: &SeriesPolicy) -> Result<(f64, f64)> {
    let s_beta = sin_pi(beta);
    let s_ab = sin_pi(alpha - beta);
    if s_beta == 0.0 && s_ab == 0.0 {
        return Ok((0.0, 0.0));
    }
    let c_a = cos_pi(alpha);
    let f = |u: f64| {
        if u == 0.0 {
            return if alpha > beta { 0.0 } else { -x * s_ab / (x * x) };
        }
        let ua = u.powf(alpha);
        let num = ua * s_beta - x * s_ab;
        let den = ua * ua + 2.0 * x * ua * c_a + x * x;
        (-u).exp() * u.powf(alpha - beta) * num / den
    };
    // the denominator is smallest near u = ρ
    let end = 2.0 * rho + 60.0;
    let points = [0.0, 0.5 * rho, rho, 1.5 * rho, 2.0 * rho, end];
    let quad = QuadPolicy::new(f64::MIN_POSITIVE, policy.rel_tol.max(1e-13), 2000, 1e-14)?;
    let res = integrate_points(f, &points, &quad)?;
    let scale = 1.0 / PI;
    Ok((scale * res.value, scale * res.err_estimate + 4.0 * f64::EPSILON * (scale * res.value).abs()))
}

fn residues(alpha: f64, beta: f64, rho: f64) -> (f64, f64) {
    if alpha <= 1.0 {
        return (0.0, 0.0);
    }
    let amp = (2.0 / alpha) * ((1.0 - beta) * rho.ln() + rho * cos_pi(1.0 / alpha)).exp();
    let phase = (1.0 - beta) * PI / alpha + rho * sin_pi(1.0 / alpha);
    (amp * phase.cos(), 4.0 * f64::EPSILON * (1.0 + rho) * amp)
}

fn algebraic(alpha: f64, beta: f64, x: f64) -> (f64, f64) {
    // |1/Γ(β-αk)| ≤ Γ(1-β+αk)/π: the envelope decides truncation, since
    // single terms can be tiny near the poles of Γ
    let envelope = |k: usize| (ln_gamma(1.0 - beta + alpha * k as f64) - k as f64 * x.ln()).exp() / PI;
    let mut sum = CompensatedSum::default();
    let mut err = envelope(1);
    for k in 1..=ASYMPTOTIC_TERMS {
        let t = reciprocal_gamma(beta - alpha * k as f64) / x.powi(k as i32);
        sum.add(if k % 2 == 1 { t } else { -t });
        let next = envelope(k + 1);
        err = next;
        if next > envelope(k) {
            break;
        }
    }
    let v = sum.value();
    (v, err + 4.0 * f64::EPSILON * v.abs())
}

/// `α = 1`: `E_{1,1}(-x) = e^{-x}`; for `β > 1`
/// `E_{1,β}(-x) = (1/Γ(β)) ∫_0^1 exp(-x(1 - w^{1/(β-1)})) dw`;
/// for `β < 1` one step of `E_{1,β}(z) = 1/Γ(β) + z E_{1,β+1}(z)`.
fn exponential_family(beta: f64, x: f64, policy: &SeriesPolicy) -> Result<EvalResult> {
    if beta == 1.0 {
        let v = (-x).exp();
        return Ok(EvalResult::new(v, f64::EPSILON * v, Method::ClosedForm));
    }
    if beta == 2.0 {
        let v = -(-x).exp_m1() / x;
        return Ok(EvalResult::new(v, 2.0 * f64::EPSILON * v, Method::ClosedForm));
    }
    if x <= EXP_SERIES_X {
        let (v, e) = series(1.0, beta, x, policy)?;
        return Ok(EvalResult::new(v, e, Method::Series));
    }
    if beta < 1.0 {
        let upper = exponential_family(beta + 1.0, x, policy)?;
        let v = reciprocal_gamma(beta) - x * upper.value;
        let err = x * upper.abs_err_estimate + 2.0 * f64::EPSILON * reciprocal_gamma(beta).abs();
        return Ok(EvalResult::new(v, err, upper.method));
    }
    let p = 1.0 / (beta - 1.0);
    let f = |w: f64| (-x * (1.0 - w.powf(p))).exp();
    // the mass sits within ~ (β-1)/x of w = 1
    let width = ((beta - 1.0) / x).min(0.25);
    let points = [0.0, 1.0 - 4.0 * width, 1.0 - width, 1.0];
    let quad = QuadPolicy::new(f64::MIN_POSITIVE, policy.rel_tol.max(1e-13), 2000, 1e-14)?;
    let res = integrate_points(f, &points, &quad)?;
    let g = reciprocal_gamma(beta);
    Ok(EvalResult::new(
        g * res.value,
        g * res.err_estimate + 4.0 * f64::EPSILON * (g * res.value).abs(),
        Method::Quadrature,
    ))
}
