//! Centers of gravity of the Green functions, in closed form and checked
//! against direct quadrature.

use fracwave::moments::{
    gravity_cauchy, gravity_cauchy_quadrature, gravity_coefficient_cauchy, gravity_coefficient_signaling,
    gravity_signaling, gravity_signaling_quadrature, gravity_velocity_cauchy,
};
use fracwave::{FractionalOrder, Tolerances};

fn main() -> Result<(), fracwave::Error> {
    let tol = Tolerances::default();
    println!("{:>5} {:>14} {:>14}", "nu", "g_c", "g_s");
    for i in 0..=10 {
        let nu = FractionalOrder::new(0.5 + 0.05 * i as f64)?;
        println!("{:5.2} {:14.10} {:14.10}", nu.nu(), gravity_coefficient_cauchy(nu), gravity_coefficient_signaling(nu));
    }

    let nu = FractionalOrder::new(0.8)?;
    let t = 2.5;
    let rc = gravity_cauchy(t, nu)?;
    let rs = gravity_signaling(t, nu)?;
    println!("\nnu = 0.8, t = {t}");
    println!("  r_c = {rc:.12}  quadrature {:.12}", gravity_cauchy_quadrature(t, nu, &tol)?);
    println!("  r_s = {rs:.12}  quadrature {:.12}", gravity_signaling_quadrature(t, nu, &tol)?);
    println!("  dr_c/dt = {:.12}", gravity_velocity_cauchy(t, nu)?);
    Ok(())
}
