use std::f64::consts::{PI, SQRT_2};

use fracwave::quadrature::{integrate, integrate_oscillatory, integrate_semi_infinite, Oscillation};
use fracwave::special::mainardi_m;
use fracwave::{FractionalOrder, QuadPolicy, SeriesPolicy};

#[test]
fn finite_intervals() {
    let p = QuadPolicy::default();
    assert!((integrate(|_| 1.0, 0.0, 1.0, &p).unwrap().value - 1.0).abs() < 1e-15);
    assert!((integrate(|x| (-x).exp(), 0.0, 40.0, &p).unwrap().value - 1.0).abs() < 1e-10);
    let half = FractionalOrder::DIFFUSION;
    let q = integrate(|u| mainardi_m(half, u, &SeriesPolicy::default()).unwrap().value, 0.0, 6.0, &p).unwrap();
    assert!((q.value - 0.99997790950300141456).abs() < 1e-10);
}

#[test]
fn semi_infinite() {
    let p = QuadPolicy::default();
    let q = integrate_semi_infinite(|x| (-x * x).exp(), |t| (-t * t).exp() / (2.0 * t), &p).unwrap();
    assert!((q.value - 0.5 * PI.sqrt()).abs() < 1e-10);
    assert!(q.truncation_point.is_some());
}

#[test]
fn oscillatory_against_plain_integration() {
    let p = QuadPolicy::default();
    let osc = integrate_oscillatory(|t| (-t * t).exp(), SQRT_2, Oscillation::Sine, &p).unwrap();
    let plain = integrate(|t| (-t * t).exp() * (SQRT_2 * t).sin(), 0.0, 40.0, &p).unwrap();
    assert!((osc.value - plain.value).abs() < 1e-10);

    let zero = integrate_oscillatory(|_| 0.0, 1.0, Oscillation::Cosine, &p).unwrap();
    assert_eq!(zero.value, 0.0);

    // n_{1/2} through E_{1,1}(-τ²) = e^{-τ²}
    let n = integrate_oscillatory(|t| t * (-t * t).exp(), SQRT_2, Oscillation::Sine, &p).unwrap();
    let expected = 0.5 * SQRT_2 * (-0.5f64).exp() / PI.sqrt();
    assert!((2.0 / PI * n.value - expected).abs() < 1e-9);
}
