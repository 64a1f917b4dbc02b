use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{io_err, CliError};

/// One line of `solution.csv`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolutionRow {
    pub t: f64,
    pub x: f64,
    pub u: f64,
}

// 17 significant digits
fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes rows under the header `t,x,u`.
pub fn write_rows(path: &Path, rows: &[SolutionRow]) -> Result<(), CliError> {
    let file = std::fs::File::create(path).map_err(io_err(path))?;
    let mut w = csv::Writer::from_writer(std::io::BufWriter::new(file));
    w.write_record(["t", "x", "u"])?;
    for r in rows {
        w.write_record([fmt(r.t), fmt(r.x), fmt(r.u)])?;
    }
    w.flush().map_err(io_err(path))?;
    Ok(())
}

/// Writes `values[i][j] = u(t_i, x_j)` row-major over t then x.
pub fn write_solution_csv(path: &Path, t: &[f64], x: &[f64], values: &[Vec<f64>]) -> Result<(), CliError> {
    let rows: Vec<SolutionRow> = t
        .iter()
        .zip(values)
        .flat_map(|(&ti, row)| x.iter().zip(row).map(move |(&xj, &u)| SolutionRow { t: ti, x: xj, u }))
        .collect();
    write_rows(path, &rows)
}

pub fn read_solution_csv(path: &Path) -> Result<Vec<SolutionRow>, CliError> {
    let mut r = csv::Reader::from_path(path)?;
    let header = r.headers()?.clone();
    if header.iter().collect::<Vec<_>>() != ["t", "x", "u"] {
        return Err(CliError::Data {
            path: path.to_path_buf(),
            message: "expected header t,x,u".into(),
        });
    }
    Ok(r.deserialize().collect::<Result<Vec<SolutionRow>, _>>()?)
}
