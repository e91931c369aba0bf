//! Spatial profiles of the Cauchy and signaling Green functions at t = 1,
//! written as CSV to stdout.

use fracwave::green::{profile, Problem};
use fracwave::{FractionalOrder, Tolerances};

fn main() -> Result<(), fracwave::Error> {
    let tol = Tolerances::default();
    let nu = FractionalOrder::new(0.75)?;
    let xs: Vec<f64> = (0..=40).map(|i| -4.0 + 0.2 * i as f64).collect();

    let cauchy = profile(Problem::Cauchy, 1.0, nu, &xs, &tol)?;
    print!("{}", cauchy.to_csv()?);

    let positive: Vec<f64> = xs.iter().copied().filter(|x| *x > 0.0).collect();
    let signaling = profile(Problem::Signaling, 1.0, nu, &positive, &tol)?;
    let g = signaling.column("G_s").unwrap_or_default();
    let peak = positive
        .iter()
        .zip(g)
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(x, _)| *x)
        .unwrap_or(f64::NAN);
    eprintln!("signaling peak on this grid near x = {peak}");
    Ok(())
}
