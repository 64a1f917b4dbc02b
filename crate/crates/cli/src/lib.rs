//! Library side of the `fracwave` command: configuration, data loading and
//! artifact emission. `main.rs` only parses flags and maps errors to exit
//! codes.

pub mod config;
mod data;
mod output;

use std::fs;
use std::path::{Path, PathBuf};

use fracwave::cauchy::{CP1Spec, CP2Spec, Cp1Solution, Cp2Solution, Forcing, FormulaReading, QuadratureConfig};
use fracwave::fracops::UniformGridFn;
use fracwave::spectral::{assemble, catalog_with, linspace, ProblemSpec};
use fracwave::specfun::{ml2_with, ML2Params, TruncationPolicy};
use fracwave::verify::{decay_diagnostics, pde_residual};
use serde_json::json;

pub use config::{parse_config, CauchyKind, RunConfig, Subcommand};
pub use data::{load_problem, read_profile_csv, read_source_csv, SampledSource};
pub use output::{read_solution_csv, write_rows, write_solution_csv, SolutionRow};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config {path}: {message}")]
    Config { path: String, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Data { path: PathBuf, message: String },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Core(#[from] fracwave::Error),
}

impl CliError {
    /// 2 for a degenerate mode, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(fracwave::Error::DegenerateMode { .. }) => 2,
            _ => 1,
        }
    }

    /// Short tag used in the one-line diagnostic.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Config { .. } => "config",
            CliError::Io { .. } => "io",
            CliError::Data { .. } => "data",
            CliError::Csv(_) => "csv",
            CliError::Json(_) => "json",
            CliError::Core(fracwave::Error::DegenerateMode { .. }) => "degenerate",
            CliError::Core(_) => "numeric",
        }
    }

    /// `error[kind]: message` on one line.
    pub fn diagnostic(&self) -> String {
        let msg = self.to_string().replace(['\n', '\r'], " ");
        format!("error[{}]: {}", self.kind(), msg)
    }
}

pub(crate) fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Builds the mixed problem selected by the configuration.
pub fn build_problem(cfg: &RunConfig) -> Result<ProblemSpec, CliError> {
    let mut spec = match &cfg.data {
        config::DataSelection::Catalog(name) => {
            catalog_with(name, cfg.orders, cfg.domain, cfg.modes)
                .map_err(|e| CliError::Config {
                    path: "problem".into(),
                    message: e.to_string(),
                })?
                .spec
        }
        config::DataSelection::Files { phi, psi, source } => {
            load_problem(cfg.orders, cfg.domain, cfg.modes, phi, psi, source.as_deref())?
        }
    };
    spec.quad = QuadratureConfig {
        abs_tol: cfg.abs_tol,
        ..spec.quad
    };
    Ok(spec)
}

/// Step of the residual check: the finer of the two spacings of the
/// residual grid.
pub fn residual_step(cfg: &RunConfig) -> f64 {
    let dt = cfg.domain.b / (cfg.residual_grid.t - 1) as f64;
    let dx = 1.0 / (cfg.residual_grid.x - 1) as f64;
    dt.min(dx)
}

/// Runs the selected subcommand and returns the paths written.
pub fn run(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let sub = cfg.subcommand.ok_or_else(|| CliError::Config {
        path: "subcommand".into(),
        message: "no subcommand given (ml, cauchy, solve or verify)".into(),
    })?;
    fs::create_dir_all(&cfg.out).map_err(io_err(&cfg.out))?;
    match sub {
        Subcommand::Ml => run_ml(cfg),
        Subcommand::Cauchy => run_cauchy(cfg),
        Subcommand::Solve => run_solve(cfg),
        Subcommand::Verify => run_verify(cfg),
    }
}

fn write_json(path: PathBuf, value: &serde_json::Value) -> Result<PathBuf, CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(&path, text).map_err(io_err(&path))?;
    Ok(path)
}

fn run_ml(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let job = cfg.ml.as_ref().ok_or_else(|| CliError::Config {
        path: "ml".into(),
        message: "missing required key".into(),
    })?;
    let params = ML2Params::new(job.alpha, job.beta)?;
    let policy = TruncationPolicy::new(cfg.series_tol, TruncationPolicy::default().max_terms)?;
    let values = job
        .z
        .iter()
        .map(|&z| ml2_with(params, z, policy))
        .collect::<Result<Vec<f64>, _>>()?;
    let doc = json!({
        "alpha": job.alpha,
        "beta": job.beta,
        "z": job.z,
        "values": values,
    });
    Ok(vec![write_json(cfg.out.join("ml.json"), &doc)?])
}

/// Linear interpolation of oracle nodes at `t`.
fn oracle_at(g: &UniformGridFn, t: f64) -> Option<f64> {
    let s = (t - g.origin) / g.step;
    if s < -1e-9 || s > (g.values.len() - 1) as f64 + 1e-9 {
        return None;
    }
    let i = (s.floor().max(0.0) as usize).min(g.values.len() - 2);
    let w = (s - i as f64).clamp(0.0, 1.0);
    Some((1.0 - w) * g.values[i] + w * g.values[i + 1])
}

fn run_cauchy(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let job = cfg.cauchy.as_ref().ok_or_else(|| CliError::Config {
        path: "cauchy".into(),
        message: "missing required key".into(),
    })?;
    let quad = QuadratureConfig {
        abs_tol: cfg.abs_tol,
        ..QuadratureConfig::default()
    };
    let forcing = Forcing::constant(job.forcing);
    let horizon_end = job.times.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let (values, oracle) = match job.kind {
        CauchyKind::Cp1 => {
            let spec = CP1Spec {
                alpha1: cfg.orders.alpha1,
                alpha2: cfg.orders.alpha2,
                mu: cfg.orders.mu,
                lambda: job.lambda,
                a: job.initial[0],
                b: job.initial[1],
                forcing,
            };
            let sol = Cp1Solution::new(spec.clone(), FormulaReading::default(), quad)?;
            let v = job.times.iter().map(|&t| sol.eval(t)).collect::<Result<Vec<_>, _>>()?;
            let o = match job.oracle_step {
                Some(h) => Some(fracwave::cauchy::oracle_cp1(&spec, horizon_end, h)?),
                None => None,
            };
            (v, o)
        }
        CauchyKind::Cp2 => {
            let spec = CP2Spec {
                beta: cfg.orders.beta,
                lambda: job.lambda,
                origin: cfg.domain.a,
                c: job.initial[0],
                g: job.initial[1],
                forcing,
            };
            let sol = Cp2Solution::new(spec.clone(), FormulaReading::default(), quad)?;
            let v = job.times.iter().map(|&t| sol.eval(t)).collect::<Result<Vec<_>, _>>()?;
            let o = match job.oracle_step {
                Some(h) => Some(fracwave::cauchy::oracle_cp2(&spec, horizon_end - cfg.domain.a, h)?),
                None => None,
            };
            (v, o)
        }
    };
    let mut doc = json!({
        "problem": match job.kind { CauchyKind::Cp1 => "cp1", CauchyKind::Cp2 => "cp2" },
        "lambda": job.lambda,
        "initial": job.initial,
        "forcing": job.forcing,
        "times": job.times,
        "values": values,
    });
    if let Some(g) = oracle {
        let ov: Vec<Option<f64>> = job.times.iter().map(|&t| oracle_at(&g, t)).collect();
        doc["oracle_step"] = json!(g.step);
        doc["oracle"] = json!(ov);
    }
    Ok(vec![write_json(cfg.out.join("cauchy.json"), &doc)?])
}

fn run_solve(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let spec = build_problem(cfg)?;
    let t = linspace(0.0, cfg.domain.b, cfg.grid.t);
    let x = linspace(0.0, 1.0, cfg.grid.x);
    let field = assemble(&spec, &t, &x)?;
    let csv_path = cfg.out.join("solution.csv");
    write_solution_csv(&csv_path, &field.t, &field.x, &field.values)?;
    let doc = json!({
        "orders": cfg.orders,
        "domain": cfg.domain,
        "truncation": cfg.modes,
        "modes": field.coefficient_table(),
    });
    let json_path = write_json(cfg.out.join("modes.json"), &doc)?;
    Ok(vec![csv_path, json_path])
}

fn run_verify(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let spec = build_problem(cfg)?;
    let step = residual_step(cfg);
    let t = linspace(0.0, cfg.domain.b, cfg.grid.t);
    let x = linspace(0.0, 1.0, cfg.grid.x);
    let field = assemble(&spec, &t, &x)?;
    let report = pde_residual(&field, &spec, step)?;
    // the decay fit needs at least 8 modes
    let decay = if cfg.modes >= 8 { Some(decay_diagnostics(&spec, cfg.modes)?) } else { None };
    let doc = json!({
        "residual": report,
        "decay": decay,
    });
    Ok(vec![write_json(cfg.out.join("report.json"), &doc)?])
}
