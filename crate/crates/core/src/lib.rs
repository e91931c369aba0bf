//! Green functions of the one-dimensional time-fractional diffusion-wave
//! equation of order `β = 2ν`, `1/2 ≤ ν ≤ 1`, and the quantities that
//! describe how their pulses travel: maximum locations and values,
//! propagation velocities, centers of gravity and medians.
//!
//! Everything is built on the Mainardi function `M_ν` and the Wright
//! function `F_ν(r) = ν r M_ν(r)`:
//!
//! * [`special`] evaluates `Γ`, `M_ν`, `F_ν`, the cumulative integral of
//!   `M_ν` and two-parameter Mittag-Leffler functions on the negative axis.
//! * [`green`] turns those into `G_c` (Cauchy problem) and `G_s`
//!   (signaling problem) through the similarity variable `r = |x| / t^ν`.
//! * [`extrema`] locates the maxima `c_ν`, `d_ν` and their values.
//! * [`moments`] holds the closed-form centers of gravity and the medians.
//! * [`quadrature`] is the adaptive integrator used both internally and as
//!   the independent oracle in verification.
//! * [`cli`] drives the `fracwave` executable and emits figure data.
//!
//! ```
//! use fracwave::{green, FractionalOrder, SeriesPolicy};
//!
//! let nu = FractionalOrder::new(0.5).unwrap();
//! let g = green::green_cauchy(0.0, 1.0, nu, &SeriesPolicy::default()).unwrap();
//! // heat kernel at the origin
//! assert!((g.value - 0.5 / std::f64::consts::PI.sqrt()).abs() < 1e-14);
//! ```

pub mod cli;
pub mod error;
pub mod extrema;
pub mod green;
pub mod moments;
pub mod quadrature;
pub mod special;
pub mod table;
pub mod tolerances;

pub use error::{Error, Result};
pub use quadrature::{QuadPolicy, QuadResult};
pub use special::{EvalResult, FractionalOrder, Method, SeriesPolicy};
pub use table::{FigureId, FigureTable};
pub use tolerances::{SolverPolicy, Tolerances};
