//! The adaptive integrator on its own: finite, semi-infinite and oscillatory.

use std::f64::consts::PI;

use fracwave::quadrature::{integrate, integrate_oscillatory, integrate_semi_infinite, Oscillation};
use fracwave::QuadPolicy;

fn main() -> Result<(), fracwave::Error> {
    let p = QuadPolicy::default();

    let q = integrate(|x| x.sin(), 0.0, PI, &p)?;
    println!("int_0^pi sin      = {:.16} (err {:.1e}, {} panels)", q.value, q.err_estimate, q.subdivisions);

    let q = integrate_semi_infinite(|x| (-x * x).exp(), |t| (-t * t).exp() / (2.0 * t), &p)?;
    println!(
        "int_0^inf e^-x^2  = {:.16} vs {:.16}, cut at {:?}",
        q.value,
        0.5 * PI.sqrt(),
        q.truncation_point
    );

    let q = integrate_oscillatory(|t| 1.0 / (1.0 + t * t), 1.0, Oscillation::Cosine, &p)?;
    println!(
        "int_0^inf cos t/(1+t^2) = {:.14} vs {:.14} (err {:.1e})",
        q.value,
        0.5 * PI / 1f64.exp(),
        q.err_estimate
    );
    Ok(())
}
