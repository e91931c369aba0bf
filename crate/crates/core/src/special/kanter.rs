//! Positive integral representations of `M_ν` and its tail.
//!
//! `M_ν` is the density of `X^{-ν}` for a one-sided stable variable `X` of
//! index `ν`, and Kanter's representation of the stable law gives, with
//! `p = ν/(1-ν)`, `q = 1/(1-ν)`, `k = r^q`,
//!
//! ```text
//! A(φ)     = sin(νφ)^p · sin((1-ν)φ) / sin(φ)^q,       φ ∈ (0, π)
//! M_ν(r)   = r^p / (π(1-ν)) ∫_0^π A(φ) e^{-k A(φ)} dφ
//! ∫_r^∞ M_ν = (1/π) ∫_0^π e^{-k A(φ)} dφ
//! ```
//!
//! `A` increases from `A(0) = ν^p (1-ν)` to `+∞`, so `k A(0)` is exactly the
//! asymptotic variable `Y`. The integrands are positive, which makes these
//! forms accurate where the power series cancels catastrophically.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::Result;
use crate::quadrature::{integrate_points, QuadPolicy};

/// `ln(sin x / x)` for `x ∈ [0, π]`, with small relative error also near 0.
fn ln_sinc(x: f64) -> f64 {
    if x < 1.0 {
        // (sin x - x)/x = Σ_{k≥1} (-1)^k x^{2k} / (2k+1)!
        let x2 = x * x;
        let mut term = 1.0;
        let mut sum = 0.0;
        for k in 1..12 {
            term *= -x2 / ((2 * k) as f64 * (2 * k + 1) as f64);
            sum += term;
        }
        sum.ln_1p()
    } else {
        (x.sin() / x).ln()
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Kanter {
    nu: f64,
    p: f64,
    q: f64,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Moment {
    pub value: f64,
    pub err: f64,
}

impl Kanter {
    pub(crate) fn new(nu: f64) -> Self {
        debug_assert!(nu > 0.0 && nu < 1.0);
        Self {
            nu,
            p: nu / (1.0 - nu),
            q: 1.0 / (1.0 - nu),
        }
    }

    /// `ln A(φ) - ln A(0)`, non-negative and increasing.
    fn excess(&self, phi: f64) -> f64 {
        self.p * ln_sinc(self.nu * phi) + ln_sinc((1.0 - self.nu) * phi) - self.q * ln_sinc(phi)
    }

    /// `Y = k A(0) = (1-ν)(ν^ν r)^{1/(1-ν)}`.
    pub(crate) fn y(&self, r: f64) -> f64 {
        (1.0 - self.nu) * (self.nu.powf(self.nu) * r).powf(self.q)
    }

    /// `J_j(Y) = ∫_0^π e^{j·e(φ)} exp(-Y·(e^{e(φ)} - 1)) dφ` with `e = excess`.
    fn j_integral(&self, j: f64, y: f64, rel_tol: f64) -> Result<Moment> {
        let f = |phi: f64| {
            let e = self.excess(phi);
            if !e.is_finite() || e > 700.0 {
                return 0.0;
            }
            (j * e - y * e.exp_m1()).exp()
        };
        // for large Y the mass sits in a Gaussian layer of width ~ 1/sqrt(νY) at φ = 0
        let width = 1.0 / (self.nu * y.max(1e-300)).sqrt();
        let mut points = vec![0.0];
        if 4.0 * width < FRAC_PI_2 {
            points.push(width);
            points.push(4.0 * width);
        }
        points.push(FRAC_PI_2);
        points.push(PI);
        let policy = QuadPolicy::new(f64::MIN_POSITIVE, rel_tol, 1000, 1e-14)?;
        let res = integrate_points(f, &points, &policy)?;
        Ok(Moment {
            value: res.value,
            err: res.err_estimate,
        })
    }

    /// `(νr)^p e^{-Y} / π`, the common prefactor of `M_ν` and `M_ν'`.
    fn prefactor(&self, r: f64, y: f64) -> f64 {
        (self.p * (self.nu * r).ln() - y).exp() / PI
    }

    fn rounding(&self, y: f64) -> f64 {
        // relative error from evaluating the exponent Y·(e^e - 1)
        8.0 * f64::EPSILON * (y + 10.0)
    }

    pub(crate) fn mainardi(&self, r: f64, rel_tol: f64) -> Result<(f64, f64)> {
        let y = self.y(r);
        let j1 = self.j_integral(1.0, y, rel_tol)?;
        let c = self.prefactor(r, y);
        let value = c * j1.value;
        Ok((value, c * j1.err + self.rounding(y) * value))
    }

    pub(crate) fn mainardi_derivative(&self, r: f64, rel_tol: f64) -> Result<(f64, f64)> {
        let y = self.y(r);
        let j1 = self.j_integral(1.0, y, rel_tol)?;
        let j2 = self.j_integral(2.0, y, rel_tol)?;
        let c = self.prefactor(r, y) / r;
        let value = c * (self.p * j1.value - self.q * y * j2.value);
        let err = c * (self.p * j1.err + self.q * y * j2.err)
            + self.rounding(y) * c * (self.p * j1.value + self.q * y * j2.value);
        Ok((value, err))
    }

    /// `∫_r^∞ M_ν(u) du`.
    pub(crate) fn tail(&self, r: f64, rel_tol: f64) -> Result<(f64, f64)> {
        let y = self.y(r);
        let j0 = self.j_integral(0.0, y, rel_tol)?;
        let c = (-y).exp() / PI;
        let value = c * j0.value;
        Ok((value, c * j0.err + self.rounding(y) * value))
    }
}
