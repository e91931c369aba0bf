use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::QuadPolicy;
use crate::special::SeriesPolicy;

/// Controls the one-dimensional maximizations and root solves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverPolicy {
    pub location_tol: f64,
    pub value_tol: f64,
    pub max_iter: usize,
    pub scan_points: usize,
}

impl Default for SolverPolicy {
    fn default() -> Self {
        Self {
            location_tol: 1e-13,
            value_tol: 1e-12,
            max_iter: 200,
            scan_points: 256,
        }
    }
}

impl SolverPolicy {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !(positive(self.location_tol) && positive(self.value_tol)) || self.max_iter < 10 || self.scan_points < 3 {
            return Err(Error::InvalidPolicy(format!("invalid solver policy: {self:?}")));
        }
        Ok(())
    }
}

/// Every tolerance that influences a computation, bundled so that it can be
/// passed around and recorded in output metadata.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Tolerances {
    pub series: SeriesPolicy,
    pub solver: SolverPolicy,
    pub quad: QuadPolicy,
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        self.series.validate()?;
        self.solver.validate()?;
        self.quad.validate()
    }

    /// Tightens (or loosens) the series and quadrature targets to `tol`.
    pub fn with_rel_tol(mut self, tol: f64) -> Self {
        self.series.rel_tol = tol;
        self.quad.rel_tol = tol;
        self.quad.abs_tol = tol;
        self
    }
}
