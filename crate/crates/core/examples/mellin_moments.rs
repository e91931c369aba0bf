//! Mellin moments of M_ν in closed form next to a quadrature oracle.

use fracwave::moments::mellin_moment_record;
use fracwave::{FractionalOrder, Tolerances};

fn main() -> Result<(), fracwave::Error> {
    let tol = Tolerances::default();
    for nu in [0.6, 0.75, 0.9] {
        let nu = FractionalOrder::new(nu)?;
        for s in [1.0, 1.5, 2.0, 3.0, 4.0] {
            let m = mellin_moment_record(nu, s, &tol)?;
            println!(
                "nu = {nu}  s = {s}  closed form {:.15}  quadrature {:.15}  |diff| {:.1e}",
                m.closed_form, m.oracle, m.abs_discrepancy
            );
        }
    }
    Ok(())
}
