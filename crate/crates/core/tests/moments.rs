use std::f64::consts::PI;

use approx::assert_relative_eq;
use fracwave::moments::{
    gravity_cauchy, gravity_cauchy_quadrature, gravity_coefficient_cauchy, gravity_coefficient_signaling,
    gravity_coefficient_signaling_duplication, gravity_signaling, gravity_signaling_quadrature,
    gravity_velocity_cauchy, gravity_velocity_signaling, median_cauchy, median_coefficient, median_signaling,
    mellin_moment, mellin_moment_quadrature, signaling_mass_quadrature,
};
use fracwave::quadrature::integrate;
use fracwave::special::{gamma, mainardi_m_tail};
use fracwave::{FractionalOrder, Tolerances};

fn order(nu: f64) -> FractionalOrder {
    FractionalOrder::new(nu).unwrap()
}

// m_c(ν) from 60-digit series and a secant root solve.
const MEDIANS: [(f64, f64); 3] = [
    (0.6, 1.0129790704618989212),
    (0.75, 1.0898753560657708509),
    (0.9, 1.1142176483507381933),
];

#[test]
fn mellin_moments() {
    let tol = Tolerances::default();
    for nu in [0.6, 0.75, 0.9] {
        let nu = order(nu);
        assert_relative_eq!(mellin_moment(nu, 1.0).unwrap(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(mellin_moment(nu, 2.0).unwrap(), 1.0 / gamma(1.0 + nu.nu()).unwrap(), max_relative = 1e-15);
        assert!((mellin_moment_quadrature(nu, 1.0, &tol).unwrap() - 1.0).abs() < 1e-8);
    }
    let nu = order(0.75);
    assert!((mellin_moment_quadrature(nu, 3.0, &tol).unwrap() - mellin_moment(nu, 3.0).unwrap()).abs() < 1e-8);
    assert_relative_eq!(mellin_moment_quadrature(nu, 2.0, &tol).unwrap(), 1.0880652521310177, max_relative = 1e-9);
}

#[test]
fn gravity_endpoints() {
    let half = FractionalOrder::DIFFUSION;
    let one = FractionalOrder::WAVE;
    assert_relative_eq!(gravity_coefficient_cauchy(half), 2.0 / PI.sqrt(), max_relative = 1e-14);
    assert_eq!(gravity_coefficient_cauchy(one), 1.0);
    assert_relative_eq!(gravity_coefficient_signaling(half), PI.sqrt(), max_relative = 1e-14);
    assert_relative_eq!(gravity_coefficient_signaling(one), 1.0, max_relative = 1e-15);
    for t in [0.25, 1.0, 9.0] {
        assert_relative_eq!(gravity_cauchy(t, half).unwrap(), 2.0 * t.sqrt() / PI.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(gravity_cauchy(t, one).unwrap(), t, max_relative = 1e-15);
        assert_relative_eq!(gravity_signaling(t, half).unwrap(), PI.sqrt() * t.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(gravity_signaling(t, one).unwrap(), t, max_relative = 1e-15);
        assert_relative_eq!(gravity_velocity_cauchy(t, one).unwrap(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(gravity_velocity_signaling(t, one).unwrap(), 1.0, max_relative = 1e-15);
    }
    assert_relative_eq!(gravity_velocity_cauchy(1.0, half).unwrap(), 1.0 / PI.sqrt(), max_relative = 1e-14);
    assert_relative_eq!(gravity_velocity_signaling(1.0, half).unwrap(), PI.sqrt() / 2.0, max_relative = 1e-14);
}

#[test]
fn duplication_form_agrees() {
    for i in 0..=20 {
        let nu = order(0.5 + 0.025 * i as f64);
        assert_relative_eq!(
            gravity_coefficient_signaling(nu),
            gravity_coefficient_signaling_duplication(nu),
            max_relative = 1e-13
        );
    }
}

#[test]
fn gravity_against_quadrature() {
    let tol = Tolerances::default();
    let g = gravity_cauchy_quadrature(2.0, order(0.7), &tol).unwrap();
    assert_relative_eq!(g, gravity_cauchy(2.0, order(0.7)).unwrap(), max_relative = 1e-8);
    let g = gravity_signaling_quadrature(1.0, order(0.8), &tol).unwrap();
    assert_relative_eq!(g, gravity_signaling(1.0, order(0.8)).unwrap(), max_relative = 1e-8);
    let mass = signaling_mass_quadrature(1.0, order(0.8), &tol).unwrap();
    assert_relative_eq!(mass, 0.8 / gamma(1.8).unwrap(), max_relative = 1e-8);
}

#[test]
fn gravity_velocity_finite_difference() {
    let nu = order(0.75);
    let (t, h) = (3.0, 1e-4);
    let fd = (gravity_cauchy(t + h, nu).unwrap() - gravity_cauchy(t - h, nu).unwrap()) / (2.0 * h);
    assert_relative_eq!(gravity_velocity_cauchy(t, nu).unwrap(), fd, max_relative = 1e-8);
    let fd = (gravity_signaling(t + h, nu).unwrap() - gravity_signaling(t - h, nu).unwrap()) / (2.0 * h);
    assert_relative_eq!(gravity_velocity_signaling(t, nu).unwrap(), fd, max_relative = 1e-8);
}

#[test]
fn medians() {
    let tol = Tolerances::default();
    let half = median_coefficient(FractionalOrder::DIFFUSION, &tol).unwrap();
    assert!((half.m_c - 0.9538725524089397468).abs() < 1e-8);
    assert!((half.m_s - 1.0990546691588654).abs() < 1e-8);
    for (nu, m_c) in MEDIANS {
        let nu = order(nu);
        let rec = median_coefficient(nu, &tol).unwrap();
        assert_relative_eq!(rec.m_c, m_c, max_relative = 1e-12);
        assert!((rec.m_s * rec.m_c.powf(1.0 / nu.nu()) - 1.0).abs() < 1e-12);
        assert!(rec.residual.abs() < 1e-12);

        assert_relative_eq!(median_cauchy(1.0, nu, &tol).unwrap(), rec.m_c);
        assert_relative_eq!(
            median_cauchy(16.0, nu, &tol).unwrap() / rec.m_c,
            16f64.powf(nu.nu()),
            max_relative = 1e-14
        );
        let x = 1.3;
        let ts = median_signaling(x, nu, &tol).unwrap();
        let tail = mainardi_m_tail(nu, x / ts.powf(nu.nu()), &tol.series).unwrap().value;
        assert!((tail - 0.5).abs() < 1e-8);
        let ratio = median_signaling(2f64.powf(nu.nu()) * x, nu, &tol).unwrap() / ts;
        assert_relative_eq!(ratio, 2.0, max_relative = 1e-13);
    }
}

#[test]
fn half_mass_of_the_cauchy_pulse() {
    let tol = Tolerances::default();
    let nu = order(0.75);
    let t = 2.0;
    let xm = median_cauchy(t, nu, &tol).unwrap();
    let q = integrate(
        |x| fracwave::green::green_cauchy(x, t, nu, &tol.series).unwrap().value,
        0.0,
        xm,
        &tol.quad,
    )
    .unwrap();
    assert!((q.value - 0.25).abs() < 1e-8);
}

#[test]
fn gravity_coefficients_decrease() {
    let mut last = (f64::INFINITY, f64::INFINITY);
    for i in 0..=20 {
        let nu = order(0.5 + 0.025 * i as f64);
        let g = (gravity_coefficient_cauchy(nu), gravity_coefficient_signaling(nu));
        assert!(g.0 < last.0 && g.1 < last.1);
        last = g;
    }
}
