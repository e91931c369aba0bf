//! Two-parameter Mittag-Leffler functions on the negative real axis.
//! E_{2,1}(-τ²) = cos τ and E_{1,1}(-τ) = e^{-τ} make easy sanity checks.

use fracwave::special::mittag_leffler;
use fracwave::SeriesPolicy;

fn main() -> Result<(), fracwave::Error> {
    let p = SeriesPolicy::default();
    println!("{:>6} {:>22} {:>22}", "tau", "E_2,1(-tau^2)", "cos tau");
    for tau in [0.5, 1.0, 3.0, 6.0] {
        let e = mittag_leffler(2.0, 1.0, -tau * tau, &p)?;
        println!("{tau:6} {:22.15e} {:22.15e}", e.value, f64::cos(tau));
    }

    println!();
    for alpha in [1.0, 1.25, 1.5, 1.75] {
        let row: Vec<String> = [0.5, 2.0, 10.0, 40.0]
            .iter()
            .map(|&z| mittag_leffler(alpha, alpha, -z, &p).map(|e| format!("{:+.6e} ({})", e.value, e.method)))
            .collect::<Result<_, _>>()?;
        println!("E_{{{alpha},{alpha}}}  {}", row.join("  "));
    }
    Ok(())
}
