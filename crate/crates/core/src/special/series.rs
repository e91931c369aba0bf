//! Power series of Wright type,
//!
//! ```text
//! Σ_{n≥n0} (-r)^n / n! · 1/Γ(1 - (a + νn)),
//! ```
//!
//! evaluated through the reflection `1/Γ(1-x) = Γ(x) sin(πx) / π` so that
//! every coefficient is a product of well-scaled positive factors.
//! `a = ν` gives `M_ν`, `a = 2ν` gives `-M_ν'`, `a = 0` (from `n = 1`)
//! gives `-∫_0^r M_ν`, and `a = 1` (from `n = 1`) gives `F_ν`.

use std::f64::consts::PI;

use super::gamma::{gamma, ln_gamma, sin_pi, GAMMA_REL_ERR};
use super::SeriesPolicy;
use crate::error::{Error, Result};
use crate::quadrature::CompensatedSum;

#[derive(Debug, Clone, Copy)]
pub(crate) struct SeriesSum {
    pub value: f64,
    pub err: f64,
    /// Σ|term|, the conditioning denominator.
    pub abs_sum: f64,
}

pub(crate) fn wright_series(nu: f64, r: f64, a: f64, n0: usize, policy: &SeriesPolicy) -> Result<SeriesSum> {
    let coef = |n: usize| {
        let x = a + nu * n as f64;
        (x, sin_pi(x) / PI)
    };
    if r == 0.0 {
        let value = if n0 == 0 {
            let (x, s) = coef(0);
            gamma(x).map(|g| g * s).unwrap_or(0.0)
        } else {
            0.0
        };
        return Ok(SeriesSum {
            value,
            err: f64::EPSILON * value.abs(),
            abs_sum: value.abs(),
        });
    }

    let ln_r = r.ln();
    let mut rn_fact = 1.0; // r^n / n!
    let mut sum = CompensatedSum::default();
    let mut abs_sum = 0.0;
    let mut small_run = 0;
    let mut prev_mag = f64::INFINITY;
    let mut last = 0.0;

    for n in 0..n0 + policy.max_terms {
        if n > 0 {
            rn_fact *= r / n as f64;
        }
        if n < n0 {
            continue;
        }
        let (x, s) = coef(n);
        let mag = if x < 170.0 && rn_fact > 1e-250 && rn_fact.is_finite() {
            rn_fact * gamma(x).unwrap_or(f64::INFINITY)
        } else {
            (n as f64 * ln_r - ln_gamma(n as f64 + 1.0) + ln_gamma(x)).exp()
        };
        let term = if n % 2 == 0 { mag * s } else { -mag * s };
        sum.add(term);
        abs_sum += term.abs();
        if term != 0.0 {
            last = term.abs();
        }

        let partial = sum.value();
        if term.abs() <= policy.rel_tol * partial.abs() {
            small_run += 1;
        } else {
            small_run = 0;
        }
        let decreasing = mag < prev_mag || mag == 0.0;
        prev_mag = mag;
        if small_run >= 3 && decreasing {
            let err = (4.0 * f64::EPSILON + GAMMA_REL_ERR) * abs_sum + last;
            return Ok(SeriesSum {
                value: partial,
                err,
                abs_sum,
            });
        }
        if !partial.is_finite() {
            break;
        }
    }
    Err(Error::PolicyExhausted {
        r,
        rel_tol: policy.rel_tol,
        max_terms: policy.max_terms,
    })
}

/// Cancellation factor `Σ|term| / |sum|`.
#[allow(dead_code)]
pub(crate) fn condition(s: &SeriesSum) -> f64 {
    if s.value == 0.0 {
        f64::INFINITY
    } else {
        s.abs_sum / s.value.abs()
    }
}
