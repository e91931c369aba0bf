//! Medians of the Cauchy pulse in space and of the signaling pulse in time.

use fracwave::moments::{median_cauchy, median_coefficient, median_signaling};
use fracwave::special::mainardi_m_cdf;
use fracwave::{FractionalOrder, Tolerances};

fn main() -> Result<(), fracwave::Error> {
    let tol = Tolerances::default();
    println!("{:>5} {:>20} {:>20} {:>10}", "nu", "m_c", "m_s", "residual");
    for i in 0..10 {
        let nu = FractionalOrder::new(0.5 + 0.05 * i as f64)?;
        let rec = median_coefficient(nu, &tol)?;
        println!("{:5.2} {:20.16} {:20.16} {:10.1e}", nu.nu(), rec.m_c, rec.m_s, rec.residual);
    }

    let nu = FractionalOrder::new(0.75)?;
    let x = median_cauchy(3.0, nu, &tol)?;
    let t = median_signaling(1.0, nu, &tol)?;
    let half = mainardi_m_cdf(nu, median_coefficient(nu, &tol)?.m_c, &tol.series)?.value;
    println!("\nnu = 0.75: x_med(t=3) = {x:.12}, t_med(x=1) = {t:.12}, cdf at m_c = {half:.15}");
    Ok(())
}
