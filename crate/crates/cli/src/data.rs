//! Sampled data files.
//!
//! `phi`/`psi`: columns `x,value`, interpolated by PCHIP. `source`: columns
//! `t,x,f` on a tensor grid. Each time slice is interpolated in x and
//! projected onto the sine modes; the mode histories are then fitted by
//! least-squares polynomials in time on [0, a] and [a, b] separately, so
//! the forcing convolutions stay in closed form.

use std::collections::BTreeMap;
use std::path::Path;

use fracwave::interp::Pchip;
use fracwave::specfun::laplace::PowerSum;
use fracwave::spectral::{sine_analyze, ModeForcing, OrderSet, ProblemSpec, SourceTerm, TimeDomain};

use crate::CliError;

/// Highest polynomial degree used for a mode history.
const MAX_TIME_DEGREE: usize = 6;

fn data_err(path: &Path, message: impl Into<String>) -> CliError {
    CliError::Data {
        path: path.to_path_buf(),
        message: message.into(),
    }
}

fn read_columns(path: &Path, width: usize) -> Result<Vec<Vec<f64>>, CliError> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_path(path)?;
    let mut rows = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec?;
        if rec.len() != width {
            return Err(data_err(path, format!("row {}: expected {width} columns, got {}", i + 1, rec.len())));
        }
        let row = rec
            .iter()
            .map(|s| s.parse::<f64>().map_err(|e| data_err(path, format!("row {}: '{s}': {e}", i + 1))))
            .collect::<Result<Vec<f64>, _>>()?;
        if row.iter().any(|v| !v.is_finite()) {
            return Err(data_err(path, format!("row {}: non-finite value", i + 1)));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Samples (x_i, g_i), sorted by x.
pub fn read_profile_csv(path: &Path) -> Result<(Vec<f64>, Vec<f64>), CliError> {
    let mut rows = read_columns(path, 2)?;
    rows.sort_by(|p, q| p[0].total_cmp(&q[0]));
    if rows.first().map_or(true, |r| r[0] < 0.0) || rows.last().map_or(true, |r| r[0] > 1.0) {
        return Err(data_err(path, "abscissae must lie in [0, 1]"));
    }
    Ok(rows.into_iter().map(|r| (r[0], r[1])).unzip())
}

/// Tensor-grid samples of f(t, x).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSource {
    pub t: Vec<f64>,
    pub x: Vec<f64>,
    /// values[i][j] = f(t_i, x_j)
    pub values: Vec<Vec<f64>>,
}

pub fn read_source_csv(path: &Path) -> Result<SampledSource, CliError> {
    let rows = read_columns(path, 3)?;
    let key = |v: f64| v.to_bits();
    let mut grid: BTreeMap<u64, (f64, BTreeMap<u64, (f64, f64)>)> = BTreeMap::new();
    for r in &rows {
        let slice = grid.entry(key(r[0])).or_insert((r[0], BTreeMap::new()));
        if slice.1.insert(key(r[1]), (r[1], r[2])).is_some() {
            return Err(data_err(path, format!("duplicate sample at t = {}, x = {}", r[0], r[1])));
        }
    }
    let mut slices: Vec<(f64, Vec<(f64, f64)>)> =
        grid.into_values().map(|(t, s)| (t, s.into_values().collect())).collect();
    slices.sort_by(|p, q| p.0.total_cmp(&q.0));
    for s in &mut slices {
        s.1.sort_by(|p, q| p.0.total_cmp(&q.0));
    }
    let x: Vec<f64> = slices.first().map(|s| s.1.iter().map(|p| p.0).collect()).unwrap_or_default();
    if slices.iter().any(|s| s.1.iter().map(|p| p.0).ne(x.iter().copied())) {
        return Err(data_err(path, "samples do not form a tensor grid"));
    }
    if slices.len() < 2 || x.len() < 2 {
        return Err(data_err(path, "need at least 2 distinct t and 2 distinct x values"));
    }
    Ok(SampledSource {
        t: slices.iter().map(|s| s.0).collect(),
        x,
        values: slices.into_iter().map(|s| s.1.into_iter().map(|p| p.1).collect()).collect(),
    })
}

/// Least-squares polynomial through (τ_k, y_k), as a power sum in τ.
/// Columns are scaled to [0, 1] and orthogonalised by modified Gram–Schmidt.
fn poly_fit(tau: &[f64], y: &[f64], len: f64) -> PowerSum {
    let degree = (tau.len() - 1).min(MAX_TIME_DEGREE);
    let m = degree + 1;
    let s: Vec<f64> = tau.iter().map(|t| t / len).collect();
    let mut q: Vec<Vec<f64>> = (0..m).map(|k| s.iter().map(|v| v.powi(k as i32)).collect()).collect();
    let mut r = vec![vec![0.0; m]; m];
    for k in 0..m {
        for j in 0..k {
            let d: f64 = q[j].iter().zip(&q[k]).map(|(a, b)| a * b).sum();
            r[j][k] = d;
            let qj = q[j].clone();
            q[k].iter_mut().zip(&qj).for_each(|(a, b)| *a -= d * b);
        }
        let norm = q[k].iter().map(|v| v * v).sum::<f64>().sqrt();
        r[k][k] = norm;
        if norm > 0.0 {
            q[k].iter_mut().for_each(|v| *v /= norm);
        }
    }
    let qty: Vec<f64> = q.iter().map(|col| col.iter().zip(y).map(|(a, b)| a * b).sum()).collect();
    let mut c = vec![0.0; m];
    for k in (0..m).rev() {
        let rest: f64 = (k + 1..m).map(|j| r[k][j] * c[j]).sum();
        c[k] = if r[k][k] > 1e-12 * r[0][0] { (qty[k] - rest) / r[k][k] } else { 0.0 };
    }
    PowerSum::new(
        c.iter()
            .enumerate()
            .filter(|(_, &v)| v != 0.0)
            .map(|(k, &v)| (v / len.powi(k as i32), k as f64))
            .collect(),
    )
}

fn modal_source(src: &SampledSource, domain: TimeDomain, modes: usize, path: &Path) -> Result<SourceTerm, CliError> {
    let (a, b) = (domain.a, domain.b);
    if src.t[0] > 0.0 || *src.t.last().unwrap() < b {
        return Err(data_err(path, format!("time samples must cover [0, {b}]")));
    }
    let coeffs = src
        .values
        .iter()
        .map(|row| {
            let p = Pchip::new(src.x.clone(), row.clone())?;
            Ok(sine_analyze(|x| p.eval(x), modes)?.coeffs)
        })
        .collect::<Result<Vec<Vec<f64>>, fracwave::Error>>()?;
    let pick = |keep: &dyn Fn(f64) -> bool| -> Vec<usize> { (0..src.t.len()).filter(|&i| keep(src.t[i])).collect() };
    let left = pick(&|t| t <= a);
    let right = pick(&|t| t >= a && t <= b);
    if left.len() < 2 || right.len() < 2 {
        return Err(data_err(path, "need at least 2 time samples on each side of the interface"));
    }
    let forcing = (0..modes)
        .map(|n| {
            let fit = |idx: &[usize], origin: f64, len: f64| {
                let tau: Vec<f64> = idx.iter().map(|&i| src.t[i] - origin).collect();
                let y: Vec<f64> = idx.iter().map(|&i| coeffs[i][n]).collect();
                poly_fit(&tau, &y, len).simplified()
            };
            ModeForcing {
                omega1: fit(&left, 0.0, a),
                omega2: fit(&right, a, b - a),
            }
        })
        .collect();
    Ok(SourceTerm::Modal(forcing))
}

/// Problem built from sampled data files.
pub fn load_problem(
    orders: OrderSet,
    domain: TimeDomain,
    modes: usize,
    phi: &Path,
    psi: &Path,
    source: Option<&Path>,
) -> Result<ProblemSpec, CliError> {
    let profile = |path: &Path| -> Result<Pchip, CliError> {
        let (x, y) = read_profile_csv(path)?;
        Pchip::new(x, y).map_err(|e| data_err(path, e.to_string()))
    };
    let p = profile(phi)?;
    let q = profile(psi)?;
    let f = match source {
        Some(path) => modal_source(&read_source_csv(path)?, domain, modes, path)?,
        None => SourceTerm::Zero,
    };
    Ok(ProblemSpec::new(orders, domain, move |x| p.eval(x), move |x| q.eval(x), f, modes)?)
}
