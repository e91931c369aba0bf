//! Locate the maxima of both Green functions and the related coefficients.

use fracwave::extrema::{
    is_local_max, max_location_cauchy_with_limits, max_location_signaling, max_value_coefficient_cauchy,
    max_value_signaling_integral, product_cauchy,
};
use fracwave::green::Problem;
use fracwave::{FractionalOrder, Tolerances};

fn main() -> Result<(), fracwave::Error> {
    let tol = Tolerances::default();
    println!("{:>5} {:>18} {:>18} {:>18} {:>18} {:>12}", "nu", "c", "m", "d", "n", "c*m");
    for i in 1..10 {
        let nu = FractionalOrder::new(0.5 + 0.05 * i as f64)?;
        let c = max_location_cauchy_with_limits(nu, &tol)?;
        let m = max_value_coefficient_cauchy(nu, &tol)?;
        let rec = max_location_signaling(nu, &tol)?;
        assert!(is_local_max(Problem::Signaling, &rec, &tol)?);
        let cm = product_cauchy(nu, &tol)?;
        println!("{:5.2} {c:18.15} {m:18.15} {:18.15} {:18.15} {cm:12.9}", nu.nu(), rec.location, rec.value);
    }
    for end in [FractionalOrder::DIFFUSION, FractionalOrder::WAVE] {
        println!("limit nu = {end}: c = {}", max_location_cauchy_with_limits(end, &tol)?);
    }

    // the peak value again, this time as an oscillatory integral
    let nu = FractionalOrder::new(0.75)?;
    let d = max_location_signaling(nu, &tol)?;
    let q = max_value_signaling_integral(nu, d.location, &tol)?;
    println!("\nnu = 0.75: n = {:.12} from the series, {:.12} by quadrature", d.value, q.value);
    Ok(())
}
