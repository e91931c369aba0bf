use std::f64::consts::PI;

use super::gamma::{ln_gamma, reciprocal_gamma};
use super::kanter::Kanter;
use super::series::wright_series;
use super::{EvalResult, FractionalOrder, Method, SeriesPolicy};
use crate::error::{Error, Result};

/// Default crossover in the asymptotic variable `Y`: the power series loses
/// a factor of about `e^{2Y}` to cancellation, so at `Y = 3.5` about three
/// digits are gone.
pub const CROSSOVER_Y: f64 = 3.5;

/// Beyond this `Y` the value is below `e^{-500}` and the leading asymptotic
/// term (relative error ≈ 0.04/Y) is returned.
pub const ASYMPTOTIC_Y: f64 = 500.0;

fn check_r(r: f64, what: &str) -> Result<()> {
    if r.is_finite() && r >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be finite and non-negative, got {r}")))
    }
}

/// `Y = (1-ν)(ν^ν r)^{1/(1-ν)}`, the exponent in the decay `M_ν ~ e^{-Y}`.
pub fn asymptotic_variable(nu: FractionalOrder, r: f64) -> f64 {
    let nu = nu.nu();
    (1.0 - nu) * (nu.powf(nu) * r).powf(1.0 / (1.0 - nu))
}

/// Inverse of [`asymptotic_variable`].
fn r_from_y(nu: f64, y: f64) -> f64 {
    (y / (1.0 - nu)).powf(1.0 - nu) / nu.powf(nu)
}

/// `A₀ = ν^{ν-1/2} / (√(2π) (1-ν)^ν)`.
///
/// The constant is fixed by Laplace's method on the integral representation
/// and checked against high-precision series values; at `ν = 1/2` it makes
/// the asymptotic form exact.
pub fn asymptotic_prefactor(nu: FractionalOrder) -> f64 {
    let nu = nu.nu();
    nu.powf(nu - 0.5) / ((2.0 * PI).sqrt() * (1.0 - nu).powf(nu))
}

/// Leading term `A₀ Y^{ν-1/2} e^{-Y}` of `M_ν(r)` as `r → ∞`.
pub fn mainardi_m_asymptotic(nu: FractionalOrder, r: f64) -> Result<f64> {
    let nu = nu.require_pointwise()?;
    check_r(r, "r")?;
    let y = asymptotic_variable(nu, r);
    let ln = asymptotic_prefactor(nu).ln() + (nu.nu() - 0.5) * y.ln() - y;
    Ok(ln.exp())
}

/// The point `r*(ν)` above which the power series is not used.
///
/// It is the smaller of the `r` at which `Y = CROSSOVER_Y` and the largest
/// `r` for which the terms provably drop below `rel_tol` within
/// `max_terms` (this bound binds only as `ν → 1`).
pub fn crossover_r(nu: FractionalOrder, policy: &SeriesPolicy) -> f64 {
    if let Some(r) = policy.asymptotic_crossover {
        return r;
    }
    let nu = nu.nu();
    let r_cancel = r_from_y(nu, CROSSOVER_Y);
    // |term_N| ≤ r^N Γ(ν(N+1)) / (π N!) must fall below rel_tol/100
    let n = (policy.max_terms.saturating_sub(10)).max(10) as f64;
    let budget = (policy.rel_tol.max(1e-16) * 1e-2 * PI).ln();
    let ln_r = (budget + ln_gamma(n + 1.0) - ln_gamma(nu * (n + 1.0))) / n;
    r_cancel.min(ln_r.exp())
}

enum Route {
    Series,
    Integral,
    Asymptotic,
}

fn route(nu: FractionalOrder, r: f64, policy: &SeriesPolicy) -> Route {
    if r < crossover_r(nu, policy) {
        Route::Series
    } else if asymptotic_variable(nu, r) < ASYMPTOTIC_Y {
        Route::Integral
    } else {
        Route::Asymptotic
    }
}

fn integral_tol(policy: &SeriesPolicy) -> f64 {
    policy.rel_tol.max(1e-13)
}

/// The Mainardi function `M_ν(r)`, `r ≥ 0`, `1/2 ≤ ν < 1`.
pub fn mainardi_m(nu: FractionalOrder, r: f64, policy: &SeriesPolicy) -> Result<EvalResult> {
    let nu = nu.require_pointwise()?;
    check_r(r, "r")?;
    policy.validate()?;
    if r == 0.0 {
        let v = reciprocal_gamma(1.0 - nu.nu());
        return Ok(EvalResult::new(v, 2.0 * f64::EPSILON * v, Method::ClosedForm));
    }
    match route(nu, r, policy) {
        Route::Series => {
            let s = wright_series(nu.nu(), r, nu.nu(), 0, policy)?;
            Ok(EvalResult::new(s.value, s.err, Method::Series))
        }
        Route::Integral => {
            let (v, e) = Kanter::new(nu.nu()).mainardi(r, integral_tol(policy))?;
            Ok(EvalResult::new(v, e, Method::Quadrature))
        }
        Route::Asymptotic => {
            let v = mainardi_m_asymptotic(nu, r)?;
            let y = asymptotic_variable(nu, r);
            Ok(EvalResult::new(v, 0.05 / y * v, Method::Asymptotic))
        }
    }
}

/// `M_ν'(r) = -Σ (-r)^n / (n! Γ(1 - 2ν - νn))`.
pub fn mainardi_m_derivative(nu: FractionalOrder, r: f64, policy: &SeriesPolicy) -> Result<EvalResult> {
    let nu = nu.require_pointwise()?;
    check_r(r, "r")?;
    policy.validate()?;
    match route(nu, r, policy) {
        Route::Series => {
            let s = wright_series(nu.nu(), r, 2.0 * nu.nu(), 0, policy)?;
            let method = if r == 0.0 { Method::ClosedForm } else { Method::Series };
            Ok(EvalResult::new(-s.value, s.err, method))
        }
        Route::Integral => {
            let (v, e) = Kanter::new(nu.nu()).mainardi_derivative(r, integral_tol(policy))?;
            Ok(EvalResult::new(v, e, Method::Quadrature))
        }
        Route::Asymptotic => {
            // d/dr of A₀Y^{ν-1/2}e^{-Y}, with dY/dr = Y/((1-ν) r)
            let m = mainardi_m_asymptotic(nu, r)?;
            let y = asymptotic_variable(nu, r);
            let dy = y / ((1.0 - nu.nu()) * r);
            let v = m * ((nu.nu() - 0.5) / y - 1.0) * dy;
            Ok(EvalResult::new(v, 0.05 / y * v.abs(), Method::Asymptotic))
        }
    }
}

/// `F_ν(r) = ν r M_ν(r)`.
pub fn wright_f(nu: FractionalOrder, r: f64, policy: &SeriesPolicy) -> Result<EvalResult> {
    let m = mainardi_m(nu, r, policy)?;
    if r == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0, Method::ClosedForm));
    }
    Ok(m.scaled(nu.nu() * r))
}

/// `F_ν'(r) = ν (M_ν(r) + r M_ν'(r))`.
pub fn wright_f_derivative(nu: FractionalOrder, r: f64, policy: &SeriesPolicy) -> Result<EvalResult> {
    let m = mainardi_m(nu, r, policy)?;
    let dm = mainardi_m_derivative(nu, r, policy)?;
    let value = nu.nu() * (m.value + r * dm.value);
    let err = nu.nu() * (m.abs_err_estimate + r * dm.abs_err_estimate);
    let method = if dm.method == Method::ClosedForm { m.method } else { dm.method };
    Ok(EvalResult::new(value, err, method))
}

/// `F_ν(r)` from its own series `Σ_{n≥1} (-r)^n / (n! Γ(-νn))`, independent
/// of the `M_ν` coefficients. Past the series crossover the integral form
/// `ν r^{1/(1-ν)} / (π(1-ν)) ∫ A e^{-kA}` is used.
pub fn verify_wright_f(nu: FractionalOrder, r: f64, policy: &SeriesPolicy) -> Result<EvalResult> {
    let nu = nu.require_pointwise()?;
    check_r(r, "r")?;
    policy.validate()?;
    match route(nu, r, policy) {
        Route::Series => {
            let s = wright_series(nu.nu(), r, 1.0, 1, policy)?;
            Ok(EvalResult::new(s.value, s.err, Method::Series))
        }
        Route::Integral => {
            let (m, e) = Kanter::new(nu.nu()).mainardi(r, integral_tol(policy))?;
            Ok(EvalResult::new(nu.nu() * r * m, nu.nu() * r * e, Method::Quadrature))
        }
        Route::Asymptotic => {
            let v = nu.nu() * r * mainardi_m_asymptotic(nu, r)?;
            let y = asymptotic_variable(nu, r);
            Ok(EvalResult::new(v, 0.05 / y * v, Method::Asymptotic))
        }
    }
}

/// `C(x) = ∫_0^x M_ν(u) du`, rising from 0 to 1.
pub fn mainardi_m_cdf(nu: FractionalOrder, x: f64, policy: &SeriesPolicy) -> Result<EvalResult> {
    let nu = nu.require_pointwise()?;
    check_r(x, "x")?;
    policy.validate()?;
    if x == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0, Method::ClosedForm));
    }
    if x < crossover_r(nu, policy) {
        // Σ_{n≥0} (-1)^n x^{n+1} / ((n+1)! Γ(1 - ν(n+1)))
        let s = wright_series(nu.nu(), x, 0.0, 1, policy)?;
        return Ok(EvalResult::new(-s.value, s.err, Method::Series));
    }
    let tail = mainardi_m_tail(nu, x, policy)?;
    Ok(EvalResult::new(
        1.0 - tail.value,
        tail.abs_err_estimate + f64::EPSILON,
        tail.method,
    ))
}

/// `∫_x^∞ M_ν(u) du = 1 - C(x)`, computed directly so that it keeps full
/// relative accuracy in the far tail.
pub fn mainardi_m_tail(nu: FractionalOrder, x: f64, policy: &SeriesPolicy) -> Result<EvalResult> {
    let nu = nu.require_pointwise()?;
    check_r(x, "x")?;
    policy.validate()?;
    if x == 0.0 {
        return Ok(EvalResult::new(1.0, 0.0, Method::ClosedForm));
    }
    if x < crossover_r(nu, policy) {
        let c = mainardi_m_cdf(nu, x, policy)?;
        return Ok(EvalResult::new(1.0 - c.value, c.abs_err_estimate + f64::EPSILON, c.method));
    }
    let (v, e) = Kanter::new(nu.nu()).tail(x, integral_tol(policy))?;
    Ok(EvalResult::new(v, e, Method::Quadrature))
}

/// Upper bound on `∫_T^∞ u^{s-1} M_ν(u) du`, from the asymptotic envelope
/// integrated in closed form (an incomplete gamma function in `Y`). Returns
/// `+∞` while `T` is too small for the envelope to be trusted.
pub fn mainardi_moment_tail_bound(nu: FractionalOrder, s: f64, t: f64) -> f64 {
    if nu.is_wave() || !(t > 0.0) {
        return f64::INFINITY;
    }
    let v = nu.nu();
    let y = asymptotic_variable(nu, t);
    // u = κ Y^{1-ν}, du/u = (1-ν) dY/Y
    let a = (1.0 - v) * s + v - 0.5;
    if y < 1.0 || y < 2.0 * (a - 1.0) {
        return f64::INFINITY;
    }
    let ln_kappa = -(1.0 - v) * (1.0 - v).ln() - v * v.ln();
    // Γ(a, y) ≤ y^{a-1} e^{-y} / (1 - (a-1)/y) for y > a - 1
    let ratio = if a > 1.0 { 1.0 / (1.0 - (a - 1.0) / y) } else { 1.0 };
    let ln_bound = asymptotic_prefactor(nu).ln() + (1.0 - v).ln() + s * ln_kappa + (a - 1.0) * y.ln() - y;
    2.0 * ratio * ln_bound.exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(nu: f64) -> FractionalOrder {
        FractionalOrder::new(nu).unwrap()
    }

    #[test]
    fn value_at_origin() {
        let p = SeriesPolicy::default();
        for nu in [0.5, 0.6, 0.75, 0.9] {
            let m = mainardi_m(order(nu), 0.0, &p).unwrap();
            assert_eq!(m.method, Method::ClosedForm);
            assert!((m.value - reciprocal_gamma(1.0 - nu)).abs() < 1e-15);
        }
    }

    #[test]
    fn degenerate_and_domain_errors() {
        let p = SeriesPolicy::default();
        assert_eq!(mainardi_m(FractionalOrder::WAVE, 1.0, &p), Err(Error::DegenerateOrder));
        assert!(matches!(mainardi_m(order(0.7), -1.0, &p), Err(Error::Domain(_))));
        assert!(matches!(mainardi_m_cdf(order(0.7), f64::NAN, &p), Err(Error::Domain(_))));
    }

    #[test]
    fn routes_are_tagged() {
        let p = SeriesPolicy::default();
        let nu = order(0.75);
        assert_eq!(mainardi_m(nu, 0.5, &p).unwrap().method, Method::Series);
        assert_eq!(mainardi_m(nu, 4.0, &p).unwrap().method, Method::Quadrature);
        assert_eq!(mainardi_m(nu, 40.0, &p).unwrap().method, Method::Asymptotic);
    }

    #[test]
    fn fixed_crossover_beyond_convergence_exhausts_the_series() {
        // ν close to 1: at r = 1.5 the terms have not decayed after 20 terms
        let p = SeriesPolicy::new(1e-14, 20, Some(10.0)).unwrap();
        let e = mainardi_m(order(0.9), 1.5, &p).unwrap_err();
        assert!(matches!(e, Error::PolicyExhausted { .. }));
    }

    #[test]
    fn crossover_bound_binds_near_wave_limit() {
        let p = SeriesPolicy::default();
        let r_half = crossover_r(order(0.5), &p);
        assert!((r_half - (4.0 * CROSSOVER_Y).sqrt()).abs() < 1e-12);
        let r99 = crossover_r(order(0.99), &p);
        assert!(r99 < r_from_y(0.99, CROSSOVER_Y));
    }

    #[test]
    fn tail_bound_dominates_gaussian_tail() {
        // ν = 1/2: ∫_T^∞ M = erfc(T/2)
        let nu = order(0.5);
        for t in [3.0, 5.0, 8.0] {
            let bound = mainardi_moment_tail_bound(nu, 1.0, t);
            let exact = statrs::function::erf::erfc(t / 2.0);
            assert!(bound >= exact && bound < 10.0 * exact, "T = {t}: {bound} vs {exact}");
        }
        assert!(mainardi_moment_tail_bound(nu, 1.0, 0.1).is_infinite());
    }
}
