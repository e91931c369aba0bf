use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function has a pole at x = {0}")]
    Pole(f64),

    #[error("fractional order nu = {0} is outside the supported range [1/2, 1]")]
    OrderOutOfRange(f64),

    #[error("nu = 1 is degenerate: M_1 is the delta distribution at r = 1 and has no pointwise value")]
    DegenerateOrder,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid policy: {0}")]
    InvalidPolicy(String),

    #[error("series did not reach rel_tol {rel_tol:e} within {max_terms} terms (r = {r})")]
    PolicyExhausted { r: f64, rel_tol: f64, max_terms: usize },

    #[error("quadrature did not converge: value {value:e}, error estimate {err_estimate:e} after {subdivisions} subdivisions")]
    QuadratureFailure {
        value: f64,
        err_estimate: f64,
        subdivisions: usize,
    },

    #[error("no truncation point found for the semi-infinite integral below T = {cap:e}")]
    TruncationFailure { cap: f64 },

    #[error("solver failed: {0}")]
    SolverFailure(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// True for failures of an iterative numerical method, as opposed to
    /// arguments outside a function's domain.
    pub fn is_convergence(&self) -> bool {
        matches!(
            self,
            Error::PolicyExhausted { .. }
                | Error::QuadratureFailure { .. }
                | Error::TruncationFailure { .. }
                | Error::SolverFailure(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
