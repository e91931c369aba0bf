//! Special functions of the Wright type on the non-negative real axis.
//!
//! The Mainardi function
//!
//! ```text
//! M_ν(r) = Σ_{n≥0} (-r)^n / (n! Γ(1 - ν - νn))
//! ```
//!
//! is evaluated by its power series while the series is well conditioned
//! (cancellation grows like `e^{2Y}` with `Y = (1-ν)(ν^ν r)^{1/(1-ν)}`), by
//! a positive integral representation over `φ ∈ (0, π)` beyond that, and
//! by its leading asymptotic term once the value is below `e^{-500}`.

mod gamma;
mod kanter;
mod mainardi;
mod mittag_leffler;
mod series;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use gamma::{cos_pi, gamma, ln_gamma, reciprocal_gamma, sin_pi};
pub use mainardi::{
    asymptotic_prefactor, asymptotic_variable, crossover_r, mainardi_m, mainardi_m_asymptotic, mainardi_m_cdf,
    mainardi_m_derivative, mainardi_m_tail, mainardi_moment_tail_bound, verify_wright_f, wright_f,
    wright_f_derivative, ASYMPTOTIC_Y, CROSSOVER_Y,
};
pub use mittag_leffler::mittag_leffler;

/// The order `ν = β/2` of the diffusion-wave equation, restricted to
/// `[1/2, 1]` (diffusion at `1/2`, waves at `1`).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    pub const DIFFUSION: FractionalOrder = FractionalOrder(0.5);
    pub const WAVE: FractionalOrder = FractionalOrder(1.0);

    pub fn new(nu: f64) -> Result<Self> {
        if (0.5..=1.0).contains(&nu) {
            Ok(Self(nu))
        } else {
            Err(Error::OrderOutOfRange(nu))
        }
    }

    #[inline]
    pub fn nu(self) -> f64 {
        self.0
    }

    /// Order of the time derivative, `2ν ∈ [1, 2]`.
    #[inline]
    pub fn beta(self) -> f64 {
        2.0 * self.0
    }

    pub fn is_wave(self) -> bool {
        self.0 == 1.0
    }

    pub fn is_diffusion(self) -> bool {
        self.0 == 0.5
    }

    /// Rejects `ν = 1`, where `M_ν` degenerates to `δ(r - 1)`.
    pub fn require_pointwise(self) -> Result<Self> {
        if self.is_wave() {
            Err(Error::DegenerateOrder)
        } else {
            Ok(self)
        }
    }

    /// The series conditioning degrades and the pulse sharpens as `ν → 1`.
    pub fn is_ill_conditioned(self) -> bool {
        self.0 > 0.95
    }
}

impl TryFrom<f64> for FractionalOrder {
    type Error = Error;

    fn try_from(nu: f64) -> Result<Self> {
        Self::new(nu)
    }
}

impl From<FractionalOrder> for f64 {
    fn from(nu: FractionalOrder) -> f64 {
        nu.0
    }
}

impl fmt::Display for FractionalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Series,
    Asymptotic,
    Quadrature,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Asymptotic => "asymptotic",
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A function value with its estimated absolute error and the method that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_err_estimate: f64,
    pub method: Method,
}

impl EvalResult {
    pub(crate) fn new(value: f64, abs_err_estimate: f64, method: Method) -> Self {
        debug_assert!(abs_err_estimate.is_finite() && abs_err_estimate >= 0.0);
        Self {
            value,
            abs_err_estimate,
            method,
        }
    }

    /// Multiplies value and error estimate by `factor`.
    pub fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            abs_err_estimate: self.abs_err_estimate * factor.abs() + f64::EPSILON * (self.value * factor).abs(),
            method: self.method,
        }
    }
}

/// Governs series truncation and the switch away from the power series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesPolicy {
    pub rel_tol: f64,
    pub max_terms: usize,
    /// Fixed crossover `r*` above which the power series is abandoned.
    /// `None` selects the per-ν default from [`crossover_r`].
    pub asymptotic_crossover: Option<f64>,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        Self {
            rel_tol: 1e-14,
            max_terms: 500,
            asymptotic_crossover: None,
        }
    }
}

impl SeriesPolicy {
    pub fn new(rel_tol: f64, max_terms: usize, asymptotic_crossover: Option<f64>) -> Result<Self> {
        let p = Self {
            rel_tol,
            max_terms,
            asymptotic_crossover,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol.is_finite() && self.rel_tol > 0.0) {
            return Err(Error::InvalidPolicy(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if self.max_terms < 10 {
            return Err(Error::InvalidPolicy(format!("max_terms must be at least 10, got {}", self.max_terms)));
        }
        if let Some(r) = self.asymptotic_crossover {
            if !(r.is_finite() && r > 0.0) {
                return Err(Error::InvalidPolicy(format!("crossover must be positive, got {r}")));
            }
        }
        Ok(())
    }
}
