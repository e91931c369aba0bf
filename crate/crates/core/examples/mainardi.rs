//! Evaluate the Mainardi function, its cumulative integral and the Wright
//! function on a few radii, showing which method handled each point.

use fracwave::special::{mainardi_m, mainardi_m_cdf, mainardi_m_tail, wright_f};
use fracwave::{FractionalOrder, SeriesPolicy};

fn main() -> Result<(), fracwave::Error> {
    let policy = SeriesPolicy::default();
    for nu in [0.5, 0.75, 0.9] {
        let nu = FractionalOrder::new(nu)?;
        println!("nu = {nu}");
        for r in [0.0, 0.5, 1.0, 2.0, 4.0, 8.0] {
            let m = mainardi_m(nu, r, &policy)?;
            let f = wright_f(nu, r, &policy)?;
            let cdf = mainardi_m_cdf(nu, r, &policy)?;
            let tail = mainardi_m_tail(nu, r, &policy)?;
            println!(
                "  r = {r:4}  M = {:.15e} ({:>10}, err {:.1e})  F = {:.6e}  cdf = {:.12}  tail = {:.3e}",
                m.value, m.method, m.abs_err_estimate, f.value, cdf.value, tail.value
            );
        }
    }
    Ok(())
}
