use std::f64::consts::SQRT_2;

use approx::assert_relative_eq;
use fracwave::extrema::{
    argmax_green, is_local_max, max_location_cauchy, max_location_cauchy_with_limits, max_location_signaling,
    max_value_cauchy, max_value_cauchy_integral, max_value_coefficient_cauchy, max_value_signaling,
    max_value_signaling_integral, product_cauchy, product_signaling, velocity_cauchy, velocity_signaling,
};
use fracwave::green::{green_cauchy, Problem};
use fracwave::special::mainardi_m;
use fracwave::{FractionalOrder, Tolerances};

fn order(nu: f64) -> FractionalOrder {
    FractionalOrder::new(nu).unwrap()
}

// (ν, c_ν, m_ν, d_ν, n_ν) from 60-digit series and a secant root solve.
const MAXIMA: [(f64, f64, f64, f64, f64); 3] = [
    (0.6, 0.61762969286402657316, 0.25492345405281529403, 1.4639174976290734826, 0.33963148173828970823),
    (0.75, 1.1717804713088199995, 0.31187239438863957916, 1.4505158555217269948, 0.61994767061040166216),
    (0.9, 1.2478108535106080147, 0.75170927702915168868, 1.2809124279399622156, 1.7116861956410881049),
];

#[test]
fn maxima_against_high_precision() {
    let tol = Tolerances::default();
    for (nu, c, m, d, n) in MAXIMA {
        let nu = order(nu);
        let rc = max_location_cauchy(nu, &tol).unwrap();
        assert!(rc.converged);
        assert!(rc.bracket.0 < rc.location && rc.location < rc.bracket.1);
        assert_relative_eq!(rc.location, c, max_relative = 1e-11);
        assert_relative_eq!(0.5 * rc.value, m, max_relative = 1e-13);
        assert!(is_local_max(Problem::Cauchy, &rc, &tol).unwrap());

        let rs = max_location_signaling(nu, &tol).unwrap();
        assert_relative_eq!(rs.location, d, max_relative = 1e-11);
        assert_relative_eq!(rs.value, n, max_relative = 1e-13);
        assert!(is_local_max(Problem::Signaling, &rs, &tol).unwrap());
    }
}

#[test]
fn location_matches_grid_search() {
    let tol = Tolerances::default();
    let nu = order(0.75);
    let m = |r: f64| mainardi_m(nu, r, &tol.series).unwrap().value;
    let n = 100_000;
    let (mut best, mut arg) = (f64::NEG_INFINITY, 0.0);
    for i in 1..=n {
        let r = 3.0 * i as f64 / n as f64;
        let v = m(r);
        if v > best {
            best = v;
            arg = r;
        }
    }
    let (mut lo, mut hi) = (arg - 3e-5, arg + 3e-5);
    while hi - lo > 1e-9 {
        let a = lo + (hi - lo) / 3.0;
        let b = hi - (hi - lo) / 3.0;
        if m(a) < m(b) {
            lo = a;
        } else {
            hi = b;
        }
    }
    let c = max_location_cauchy(nu, &tol).unwrap().location;
    assert!((c - 0.5 * (lo + hi)).abs() < 1e-6);
}

#[test]
fn boundary_orders() {
    let tol = Tolerances::default();
    assert_eq!(max_location_cauchy_with_limits(FractionalOrder::DIFFUSION, &tol).unwrap(), 0.0);
    assert_eq!(max_location_cauchy_with_limits(FractionalOrder::WAVE, &tol).unwrap(), 1.0);
    assert!(max_location_cauchy(FractionalOrder::DIFFUSION, &tol).is_err());

    let half = FractionalOrder::DIFFUSION;
    let d = max_location_signaling(half, &tol).unwrap();
    assert_relative_eq!(d.location, SQRT_2, max_relative = 1e-13);
    let n_half = 0.5 * SQRT_2 * (-0.5f64).exp() / std::f64::consts::PI.sqrt();
    assert_relative_eq!(d.value, n_half, max_relative = 1e-14);
    assert_relative_eq!(max_value_signaling(1.0, half, &tol).unwrap(), n_half, max_relative = 1e-14);
    let q = max_value_signaling_integral(half, SQRT_2, &tol).unwrap();
    assert!((q.value - n_half).abs() < 1e-9);

    for t in [0.5, 1.0, 3.0] {
        assert_eq!(velocity_cauchy(t, half, &tol).unwrap(), 0.0);
        assert_eq!(velocity_cauchy(t, FractionalOrder::WAVE, &tol).unwrap(), 1.0);
        assert_relative_eq!(velocity_signaling(t, half, &tol).unwrap(), 0.5 * SQRT_2 / t.sqrt(), max_relative = 1e-12);
        assert_relative_eq!(product_signaling(t, half, &tol).unwrap(), SQRT_2 * n_half / t.sqrt(), max_relative = 1e-12);
    }
}

#[test]
fn integral_forms_agree_with_peak_values() {
    let tol = Tolerances::default();
    for (nu, c, m, d, n) in MAXIMA {
        let nu = order(nu);
        assert!((max_value_cauchy_integral(nu, c, &tol).unwrap().value - m).abs() < 1e-6);
        assert!((max_value_signaling_integral(nu, d, &tol).unwrap().value - n).abs() < 1e-6);
    }
}

#[test]
fn time_scaling_of_the_peak() {
    let tol = Tolerances::default();
    for nu in [0.6, 0.75, 0.9] {
        let nu = order(nu);
        let v1 = max_value_cauchy(1.0, nu, &tol).unwrap();
        assert_relative_eq!(v1, max_value_coefficient_cauchy(nu, &tol).unwrap());
        assert_relative_eq!(max_value_cauchy(4.0, nu, &tol).unwrap() / v1, 4f64.powf(-nu.nu()), max_relative = 1e-14);
        let s1 = max_value_signaling(1.0, nu, &tol).unwrap();
        assert_relative_eq!(max_value_signaling(2.0, nu, &tol).unwrap() / s1, 0.5, max_relative = 1e-14);
        let rec = max_location_signaling(nu, &tol).unwrap();
        assert_relative_eq!(velocity_signaling(1.0, nu, &tol).unwrap(), nu.nu() * rec.location, max_relative = 1e-15);
    }
}

#[test]
fn argmax_in_x_follows_the_similarity_law() {
    let tol = Tolerances::default();
    for nu in [0.6, 0.9] {
        let nu = order(nu);
        let c = max_location_cauchy(nu, &tol).unwrap().location;
        let pc = product_cauchy(nu, &tol).unwrap();
        for t in [0.5, 1.0, 2.0, 10.0] {
            let r = argmax_green(Problem::Cauchy, t, nu, &tol).unwrap();
            assert_relative_eq!(r.location, c * t.powf(nu.nu()), max_relative = 1e-10);
            assert!((r.location * r.value - pc).abs() <= 1e-10 * pc);
            // brute-force grid near the peak
            let grid_best = (0..=2000)
                .map(|i| r.location * (0.9 + 1e-4 * i as f64))
                .map(|x| green_cauchy(x, t, nu, &tol.series).unwrap().value)
                .fold(f64::NEG_INFINITY, f64::max);
            assert!(r.value >= grid_best - 1e-14);

            let s = argmax_green(Problem::Signaling, t, nu, &tol).unwrap();
            let ps = product_signaling(t, nu, &tol).unwrap();
            assert!((s.location * s.value - ps).abs() <= 1e-10 * ps);
        }
    }
}

#[test]
fn velocity_matches_finite_difference() {
    let tol = Tolerances::default();
    let nu = order(0.75);
    let c = max_location_cauchy(nu, &tol).unwrap().location;
    let t: f64 = 2.0;
    let h = 1e-4;
    let fd = c * ((t + h).powf(0.75) - (t - h).powf(0.75)) / (2.0 * h);
    assert_relative_eq!(velocity_cauchy(t, nu, &tol).unwrap(), fd, max_relative = 1e-6);
}

#[test]
fn product_increases_with_order() {
    let tol = Tolerances::default();
    let mut last = 0.0;
    for i in 1..20 {
        let nu = order(0.5 + 0.025 * i as f64);
        let p = product_cauchy(nu, &tol).unwrap();
        assert!(p > last, "nu = {nu}");
        last = p;
    }
}
