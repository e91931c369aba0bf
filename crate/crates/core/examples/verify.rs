//! Run the built-in self-checks and print the ones closest to their limit.

use fracwave::cli::{run_checks, OutputFormat, RunConfig};
use fracwave::Tolerances;

fn main() {
    let cfg = RunConfig {
        nu_list: None,
        t_grid: None,
        x_grid: None,
        tolerances: Tolerances::default(),
        format: OutputFormat::Csv,
        out: None,
    };
    let mut checks = match run_checks(&cfg) {
        Ok(c) => c,
        Err(f) => {
            eprintln!("{}", f.message);
            std::process::exit(f.code);
        }
    };
    let failed = checks.iter().filter(|c| !c.passed).count();
    checks.sort_by(|a, b| (b.discrepancy / b.threshold).total_cmp(&(a.discrepancy / a.threshold)));
    for c in checks.iter().take(8) {
        println!("{:<32} nu={:<5} {:.2e} / {:.0e}", c.name, c.nu, c.discrepancy, c.threshold);
    }
    println!("{} checks, {failed} failed", checks.len());
}
