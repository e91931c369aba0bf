//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::f64::consts::{PI, SQRT_2};
use std::process::Command;
use std::time::{Duration, Instant};

use fracwave::extrema::{
    argmax_green, max_location_cauchy, max_location_cauchy_with_limits, max_location_signaling,
    max_value_cauchy_integral, max_value_signaling_integral, product_cauchy, velocity_cauchy, velocity_signaling,
};
use fracwave::green::{green_cauchy, green_signaling, Problem};
use fracwave::moments::{
    gravity_cauchy, gravity_coefficient_cauchy, gravity_coefficient_signaling, gravity_signaling,
    gravity_velocity_cauchy, gravity_velocity_signaling, median_coefficient, mellin_moment, mellin_moment_quadrature,
};
use fracwave::special::mainardi_m_cdf;
use fracwave::table::FigureTable;
use fracwave::{FigureId, FractionalOrder, Tolerances};

type Outcome = Result<String, String>;

fn order(nu: f64) -> FractionalOrder {
    FractionalOrder::new(nu).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn within(what: &str, worst: f64, bound: f64) -> Outcome {
    if worst <= bound {
        Ok(format!("{what}: worst {worst:.2e} <= {bound:.0e}"))
    } else {
        Err(format!("{what}: worst {worst:.2e} > {bound:.0e}"))
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for p in parts {
        match p {
            Ok(s) => ok.push(s),
            Err(s) => bad.push(s),
        }
    }
    if bad.is_empty() {
        Ok(ok.join("; "))
    } else {
        Err(bad.join("; "))
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn boundary_constants(tol: &Tolerances) -> Outcome {
    let half = FractionalOrder::DIFFUSION;
    let c_half = e(max_location_cauchy_with_limits(half, tol))?;
    let c_one = e(max_location_cauchy_with_limits(FractionalOrder::WAVE, tol))?;
    if c_half != 0.0 || c_one != 1.0 {
        return Err(format!("c_1/2 = {c_half}, c_1 = {c_one}"));
    }
    let d = e(max_location_signaling(half, tol))?.location;
    let mut worst = rel(d, SQRT_2);
    for t in [0.5, 1.0, 2.0, 10.0] {
        worst = worst.max(rel(e(velocity_signaling(t, half, tol))?, 0.5 * SQRT_2 / t.sqrt()));
    }
    within("c_1/2 = 0, c_1 = 1, d_1/2 and V_s(t, 1/2)", worst, 1e-12)
}

fn gravity_endpoints() -> Outcome {
    let half = FractionalOrder::DIFFUSION;
    let one = FractionalOrder::WAVE;
    let worst = [
        (gravity_coefficient_cauchy(half) - 2.0 / PI.sqrt()).abs(),
        (gravity_coefficient_cauchy(one) - 1.0).abs(),
        (gravity_coefficient_signaling(half) - PI.sqrt()).abs(),
        (gravity_coefficient_signaling(one) - 1.0).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    within("g_c and g_s at nu = 1/2 and 1", worst, 1e-10)
}

fn mellin_oracle(tol: &Tolerances) -> Outcome {
    let mut worst: f64 = 0.0;
    for nu in [0.55, 0.7, 0.85, 0.95] {
        for s in [1.0, 2.0, 3.0] {
            let q = e(mellin_moment_quadrature(order(nu), s, tol))?;
            worst = worst.max((q - e(mellin_moment(order(nu), s))?).abs());
        }
    }
    within("12 Mellin moments vs quadrature", worst, 1e-8)
}

fn reciprocity_and_similarity(tol: &Tolerances) -> Outcome {
    let p = &tol.series;
    let mut recip: f64 = 0.0;
    let mut scale: f64 = 0.0;
    let mut n = 0;
    for nu in [0.55, 0.65, 0.75, 0.85, 0.95] {
        let nu = order(nu);
        for x in [0.1, 0.5, 1.0, 2.0, 3.5] {
            for t in [0.3, 1.0, 2.5, 7.0] {
                n += 1;
                let gc = e(green_cauchy(x, t, nu, p))?.value;
                let gs = e(green_signaling(x, t, nu, p))?.value;
                recip = recip.max(rel(2.0 * nu.nu() * x * gc, t * gs));
                let lambda: f64 = 3.0;
                let scaled = e(green_cauchy(lambda.powf(nu.nu()) * x, lambda * t, nu, p))?.value;
                scale = scale.max(rel(scaled, lambda.powf(-nu.nu()) * gc));
            }
        }
    }
    assert_eq!(n, 100);
    all(vec![
        within("2 nu x G_c = t G_s on 100 points", recip, 1e-12),
        within("G_c t-scaling on 100 points", scale, 1e-12),
    ])
}

fn representation_agreement(tol: &Tolerances) -> Outcome {
    let mut worst_m: f64 = 0.0;
    let mut worst_n: f64 = 0.0;
    for nu in [0.6, 0.75, 0.9] {
        let nu = order(nu);
        let c = e(max_location_cauchy(nu, tol))?;
        worst_m = worst_m.max((0.5 * c.value - e(max_value_cauchy_integral(nu, c.location, tol))?.value).abs());
        let d = e(max_location_signaling(nu, tol))?;
        worst_n = worst_n.max((d.value - e(max_value_signaling_integral(nu, d.location, tol))?.value).abs());
    }
    all(vec![
        within("m_nu: M_nu(c)/2 vs cosine integral", worst_m, 1e-6),
        within("n_nu: F_nu(d) vs sine integral", worst_n, 1e-6),
    ])
}

fn hyperbola(tol: &Tolerances) -> Outcome {
    let mut spread: f64 = 0.0;
    let mut signaling: f64 = 0.0;
    for nu in [0.6, 0.75, 0.9] {
        let nu = order(nu);
        let products: Vec<f64> = [0.5, 1.0, 2.0, 10.0]
            .into_iter()
            .map(|t| e(argmax_green(Problem::Cauchy, t, nu, tol)).map(|r| r.location * r.value))
            .collect::<Result<_, _>>()?;
        for p in &products {
            spread = spread.max(rel(*p, products[0]));
        }
        let d = e(max_location_signaling(nu, tol))?;
        for t in [0.5, 1.0, 2.0] {
            let r = e(argmax_green(Problem::Signaling, t, nu, tol))?;
            signaling = signaling.max(rel(r.location * r.value, d.location * d.value * t.powf(nu.nu() - 1.0)));
        }
    }
    all(vec![
        within("x_* G_c^* across t", spread, 1e-10),
        within("x_* G_s^* vs d n t^(nu-1)", signaling, 1e-10),
    ])
}

fn velocities(tol: &Tolerances) -> Outcome {
    let h = 1e-3;
    let mut worst = [0.0f64; 4];
    for nu in [0.6, 0.75, 0.9] {
        let nu = order(nu);
        let peak = |problem, t| e(argmax_green(problem, t, nu, tol)).map(|r| r.location);
        for t in [0.5, 2.0] {
            let fd_c = (peak(Problem::Cauchy, t + h)? - peak(Problem::Cauchy, t - h)?) / (2.0 * h);
            let fd_s = (peak(Problem::Signaling, t + h)? - peak(Problem::Signaling, t - h)?) / (2.0 * h);
            let fd_gc = (e(gravity_cauchy(t + h, nu))? - e(gravity_cauchy(t - h, nu))?) / (2.0 * h);
            let fd_gs = (e(gravity_signaling(t + h, nu))? - e(gravity_signaling(t - h, nu))?) / (2.0 * h);
            worst[0] = worst[0].max(rel(e(velocity_cauchy(t, nu, tol))?, fd_c));
            worst[1] = worst[1].max(rel(e(velocity_signaling(t, nu, tol))?, fd_s));
            worst[2] = worst[2].max(rel(e(gravity_velocity_cauchy(t, nu))?, fd_gc));
            worst[3] = worst[3].max(rel(e(gravity_velocity_signaling(t, nu))?, fd_gs));
        }
    }
    all(vec![
        within("V_c vs argmax sweep", worst[0], 1e-6),
        within("V_s vs argmax sweep", worst[1], 1e-6),
        within("V_c^g", worst[2], 1e-6),
        within("V_s^g", worst[3], 1e-6),
    ])
}

fn medians(tol: &Tolerances) -> Outcome {
    let mut cdf: f64 = 0.0;
    let mut link: f64 = 0.0;
    for i in 0..10 {
        let nu = order(0.5 + 0.05 * i as f64);
        let rec = e(median_coefficient(nu, tol))?;
        cdf = cdf.max((e(mainardi_m_cdf(nu, rec.m_c, &tol.series))?.value - 0.5).abs());
        link = link.max((rec.m_s * rec.m_c.powf(1.0 / nu.nu()) - 1.0).abs());
    }
    let half = e(median_coefficient(FractionalOrder::DIFFUSION, tol))?.m_c;
    all(vec![
        within("CDF(m_c) = 1/2", cdf, 1e-10),
        within("m_c(1/2) = 2 erfinv(1/2)", (half - 0.953_872_552_408_939_7).abs(), 1e-8),
        within("m_s m_c^(1/nu) = 1", link, 1e-12),
    ])
}

fn diffusion_suite(tol: &Tolerances) -> Outcome {
    let half = FractionalOrder::DIFFUSION;
    let mut heat: f64 = 0.0;
    let mut levy: f64 = 0.0;
    for t in [0.5, 1.0, 2.0] {
        for i in 1..=120 {
            let x = 0.05 * i as f64;
            let g = (-x * x / (4.0 * t)).exp();
            heat = heat.max(rel(e(green_cauchy(x, t, half, &tol.series))?.value, g / (2.0 * (PI * t).sqrt())));
            let l = x / (2.0 * PI.sqrt() * t.powf(1.5)) * g;
            levy = levy.max(rel(e(green_signaling(x, t, half, &tol.series))?.value, l));
        }
    }
    all(vec![
        within("G_c = heat kernel", heat, 1e-12),
        within("G_s = Levy-Smirnov", levy, 1e-12),
    ])
}

fn monotonicity(tol: &Tolerances) -> Outcome {
    let grid: Vec<FractionalOrder> = (0..=20).map(|i| order(0.5 + 0.025 * i as f64)).collect();
    let mut gc = Vec::new();
    let mut gs = Vec::new();
    let mut cm = Vec::new();
    for &nu in &grid {
        gc.push(gravity_coefficient_cauchy(nu));
        gs.push(gravity_coefficient_signaling(nu));
        cm.push(if nu.is_diffusion() {
            0.0
        } else if nu.is_wave() {
            f64::INFINITY
        } else {
            e(product_cauchy(nu, tol))?
        });
    }
    let falls = |v: &[f64]| v.windows(2).all(|w| w[1] < w[0]);
    let rises = |v: &[f64]| v.windows(2).all(|w| w[1] > w[0]);
    let checks = [
        ("g_c strictly decreasing", falls(&gc)),
        ("g_s strictly decreasing", falls(&gs)),
        ("c_nu m_nu strictly increasing (0 at 1/2, +inf at 1)", rises(&cm)),
    ];
    all(checks
        .iter()
        .map(|(name, ok)| if *ok { Ok(name.to_string()) } else { Err(format!("{name} violated")) })
        .collect())
}

fn figure_regeneration() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_fracwave");
    let run = |args: &[&str]| Command::new(bin).args(args).output().map_err(|e| e.to_string());
    for id in FigureId::ALL {
        let a = run(&["figure", id.as_str(), "--format", "csv"])?;
        if !a.status.success() {
            return Err(format!("{id}: {}", String::from_utf8_lossy(&a.stderr)));
        }
        let b = run(&["figure", id.as_str(), "--format", "csv"])?;
        if a.stdout != b.stdout {
            return Err(format!("{id}: output differs between runs"));
        }
        let text = String::from_utf8(a.stdout).map_err(|e| e.to_string())?;
        let cols = e(FigureTable::columns_from_csv(&text))?;
        if cols.is_empty() || cols.iter().any(|c| c.values.len() != cols[0].values.len() || c.values.is_empty()) {
            return Err(format!("{id}: ragged or empty table"));
        }
    }
    let v = run(&["verify"])?;
    match v.status.code() {
        Some(0) => Ok("9 figures deterministic and schema-valid; verify exits 0".into()),
        code => Err(format!("verify exited {code:?}: {}", String::from_utf8_lossy(&v.stdout))),
    }
}

fn main() {
    let tol = Tolerances::default();
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Outcome>)> = vec![
        ("boundary constants", Duration::from_secs(1), Box::new(move || boundary_constants(&tol))),
        ("gravity endpoints", Duration::from_secs(1), Box::new(gravity_endpoints)),
        ("Mellin-moment oracle", Duration::from_secs(10), Box::new(move || mellin_oracle(&tol))),
        ("reciprocity and self-similarity", Duration::from_secs(1), Box::new(move || reciprocity_and_similarity(&tol))),
        ("representation agreement", Duration::from_secs(30), Box::new(move || representation_agreement(&tol))),
        ("hyperbola constancy", Duration::from_secs(5), Box::new(move || hyperbola(&tol))),
        ("velocities vs finite differences", Duration::from_secs(30), Box::new(move || velocities(&tol))),
        ("median equations", Duration::from_secs(10), Box::new(move || medians(&tol))),
        ("nu = 1/2 closed forms", Duration::from_secs(1), Box::new(move || diffusion_suite(&tol))),
        ("monotonicity", Duration::from_secs(60), Box::new(move || monotonicity(&tol))),
        ("figure-data regeneration", Duration::from_secs(120), Box::new(figure_regeneration)),
    ];

    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > *budget {
            outcome = Err(format!("took {elapsed:.2?}, budget {budget:?}"));
        }
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
