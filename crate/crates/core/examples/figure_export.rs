//! Build a figure table in process and round-trip it through CSV and JSON.

use fracwave::cli::{figure, Grid, OutputFormat, RunConfig};
use fracwave::{FigureId, FigureTable, FractionalOrder, Tolerances};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = RunConfig {
        nu_list: Some(vec![FractionalOrder::new(0.6)?, FractionalOrder::new(0.9)?]),
        t_grid: Some(Grid::new(0.5, 4.0, 8)?),
        x_grid: None,
        tolerances: Tolerances::default(),
        format: OutputFormat::Json,
        out: None,
    };
    let table = figure(FigureId::MaxVelocitySignaling, &cfg).map_err(|f| f.message)?;

    let csv = table.to_csv()?;
    print!("{csv}");
    let json = table.to_json()?;
    let back = FigureTable::from_json(&json)?;
    assert_eq!(back.to_json()?, json);
    let cols = FigureTable::columns_from_csv(&csv)?;
    for (c, original) in cols.iter().zip(&table.columns) {
        assert!(c.values.iter().zip(&original.values).all(|(a, b)| a.to_bits() == b.to_bits()));
    }
    eprintln!("{} rows, {} columns, lossless in both formats", table.rows(), table.columns.len());

    for id in FigureId::ALL {
        eprintln!("available: {id}");
    }
    Ok(())
}
