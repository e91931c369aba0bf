//! Propagation velocities of the maxima and the products x* G(x*, t).

use fracwave::extrema::{argmax_green, product_signaling, velocity_cauchy, velocity_signaling};
use fracwave::green::Problem;
use fracwave::{FractionalOrder, Tolerances};

fn main() -> Result<(), fracwave::Error> {
    let tol = Tolerances::default();
    for nu in [0.6, 0.75, 0.9] {
        let nu = FractionalOrder::new(nu)?;
        println!("nu = {nu}");
        println!("  {:>6} {:>14} {:>14} {:>14} {:>14}", "t", "V_c", "V_s", "x*", "x* G_s*");
        for t in [0.1, 0.5, 1.0, 5.0, 20.0] {
            let vc = velocity_cauchy(t, nu, &tol)?;
            let vs = velocity_signaling(t, nu, &tol)?;
            let peak = argmax_green(Problem::Signaling, t, nu, &tol)?;
            let prod = product_signaling(t, nu, &tol)?;
            println!("  {t:6} {vc:14.9} {vs:14.9} {:14.9} {prod:14.9}", peak.location);
        }
    }
    Ok(())
}
