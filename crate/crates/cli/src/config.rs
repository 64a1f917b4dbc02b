//! JSON run configuration.
//!
//! ```json
//! {
//!   "orders": {"alpha1": 1.5, "alpha2": 0.5, "beta": 1.25, "mu": 1.0},
//!   "domain": {"a": 1.0, "b": 2.0},
//!   "problem": "polynomial",
//!   "modes": 16
//! }
//! ```
//!
//! Instead of `problem`, `data` may name CSV files: `phi` and `psi` with
//! columns (x, value), and optionally `source` with columns (t, x, f) on a
//! tensor grid.

use std::path::{Path, PathBuf};

use fracwave::spectral::{OrderSet, TimeDomain};
use serde_json::{Map, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subcommand {
    Ml,
    Cauchy,
    Solve,
    Verify,
}

impl Subcommand {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "ml" => Some(Self::Ml),
            "cauchy" => Some(Self::Cauchy),
            "solve" => Some(Self::Solve),
            "verify" => Some(Self::Verify),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DataSelection {
    Catalog(String),
    Files {
        phi: PathBuf,
        psi: PathBuf,
        source: Option<PathBuf>,
    },
}

/// Points of a tensor grid over [0, b] × [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub t: usize,
    pub x: usize,
}

/// Evaluation points for the `ml` subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct MlJob {
    pub alpha: f64,
    pub beta: f64,
    pub z: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CauchyKind {
    Cp1,
    Cp2,
}

/// A single Cauchy problem for the `cauchy` subcommand. CP1 uses α₁, α₂,
/// μ from `orders`; CP2 uses β and starts at `domain.a`.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchyJob {
    pub kind: CauchyKind,
    pub lambda: f64,
    pub initial: [f64; 2],
    /// Constant right-hand side.
    pub forcing: f64,
    pub times: Vec<f64>,
    /// Step of the time-stepping oracle run alongside, if any.
    pub oracle_step: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub subcommand: Option<Subcommand>,
    pub orders: OrderSet,
    pub domain: TimeDomain,
    pub data: DataSelection,
    pub modes: usize,
    pub grid: Grid,
    pub residual_grid: Grid,
    pub abs_tol: f64,
    pub series_tol: f64,
    pub out: PathBuf,
    pub ml: Option<MlJob>,
    pub cauchy: Option<CauchyJob>,
}

pub const DEFAULT_MODES: usize = 32;
pub const DEFAULT_ABS_TOL: f64 = 1e-10;
pub const DEFAULT_SERIES_TOL: f64 = 1e-18;

fn schema(path: &str, message: impl Into<String>) -> CliError {
    CliError::Config {
        path: path.to_string(),
        message: message.into(),
    }
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, CliError> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn required<'a>(m: &'a Map<String, Value>, prefix: &str, key: &str) -> Result<&'a Value, CliError> {
    m.get(key).ok_or_else(|| schema(&join(prefix, key), "missing required key"))
}

fn number(v: &Value, path: &str) -> Result<f64, CliError> {
    v.as_f64().ok_or_else(|| schema(path, "expected a number"))
}

fn req_f64(m: &Map<String, Value>, prefix: &str, key: &str) -> Result<f64, CliError> {
    number(required(m, prefix, key)?, &join(prefix, key))
}

fn opt_f64(m: &Map<String, Value>, prefix: &str, key: &str, default: f64) -> Result<f64, CliError> {
    m.get(key).map_or(Ok(default), |v| number(v, &join(prefix, key)))
}

fn count(v: &Value, path: &str) -> Result<usize, CliError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn opt_count(m: &Map<String, Value>, prefix: &str, key: &str, default: usize) -> Result<usize, CliError> {
    m.get(key).map_or(Ok(default), |v| count(v, &join(prefix, key)))
}

fn string<'a>(v: &'a Value, path: &str) -> Result<&'a str, CliError> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn numbers(v: &Value, path: &str) -> Result<Vec<f64>, CliError> {
    v.as_array()
        .ok_or_else(|| schema(path, "expected an array of numbers"))?
        .iter()
        .enumerate()
        .map(|(i, x)| number(x, &format!("{path}[{i}]")))
        .collect()
}

fn grid(m: &Map<String, Value>, key: &str, default: Grid) -> Result<Grid, CliError> {
    let Some(v) = m.get(key) else { return Ok(default) };
    let g = object(v, key)?;
    let out = Grid {
        t: opt_count(g, key, "t", default.t)?,
        x: opt_count(g, key, "x", default.x)?,
    };
    if out.t < 2 || out.x < 2 {
        return Err(schema(key, "grids need at least 2 points per axis"));
    }
    Ok(out)
}

fn check_known(m: &Map<String, Value>, prefix: &str, known: &[&str]) -> Result<(), CliError> {
    for k in m.keys() {
        if !known.contains(&k.as_str()) {
            return Err(schema(&join(prefix, k), "unknown key"));
        }
    }
    Ok(())
}

/// Resolves a data path relative to the configuration file's directory.
fn resolve(base: Option<&Path>, p: &str) -> PathBuf {
    let p = PathBuf::from(p);
    match base {
        Some(dir) if p.is_relative() => dir.join(p),
        _ => p,
    }
}

/// Parses and validates a configuration document. Relative data paths are
/// taken relative to `base_dir` when given.
pub fn parse_config(text: &str, base_dir: Option<&Path>) -> Result<RunConfig, CliError> {
    let root: Value = serde_json::from_str(text).map_err(|e| schema("", format!("invalid JSON: {e}")))?;
    let m = object(&root, "")?;
    check_known(
        m,
        "",
        &[
            "subcommand",
            "orders",
            "domain",
            "problem",
            "data",
            "modes",
            "grid",
            "residual_grid",
            "abs_tol",
            "series_tol",
            "out",
            "ml",
            "cauchy",
        ],
    )?;

    let subcommand = match m.get("subcommand") {
        None => None,
        Some(v) => {
            let s = string(v, "subcommand")?;
            Some(Subcommand::parse(s).ok_or_else(|| schema("subcommand", format!("unknown subcommand '{s}'")))?)
        }
    };

    let o = object(required(m, "", "orders")?, "orders")?;
    check_known(o, "orders", &["alpha1", "alpha2", "beta", "mu"])?;
    let orders = OrderSet {
        alpha1: req_f64(o, "orders", "alpha1")?,
        alpha2: req_f64(o, "orders", "alpha2")?,
        beta: req_f64(o, "orders", "beta")?,
        mu: req_f64(o, "orders", "mu")?,
    };
    orders.validate().map_err(|e| schema("orders", e.to_string()))?;

    let d = object(required(m, "", "domain")?, "domain")?;
    check_known(d, "domain", &["a", "b"])?;
    let domain = TimeDomain {
        a: req_f64(d, "domain", "a")?,
        b: req_f64(d, "domain", "b")?,
    };
    domain.validate().map_err(|e| schema("domain", e.to_string()))?;

    let data = match (m.get("problem"), m.get("data")) {
        (Some(_), Some(_)) => return Err(schema("data", "give either `problem` or `data`, not both")),
        (Some(p), None) => DataSelection::Catalog(string(p, "problem")?.to_string()),
        (None, Some(v)) => {
            let f = object(v, "data")?;
            check_known(f, "data", &["phi", "psi", "source"])?;
            let path = |key: &str| -> Result<PathBuf, CliError> {
                let p = resolve(base_dir, string(required(f, "data", key)?, &join("data", key))?);
                if !p.is_file() {
                    return Err(schema(&join("data", key), format!("file not found: {}", p.display())));
                }
                Ok(p)
            };
            DataSelection::Files {
                phi: path("phi")?,
                psi: path("psi")?,
                source: if f.contains_key("source") { Some(path("source")?) } else { None },
            }
        }
        (None, None) => DataSelection::Catalog("polynomial".into()),
    };

    let modes = opt_count(m, "", "modes", DEFAULT_MODES)?;
    if modes == 0 {
        return Err(schema("modes", "N >= 1"));
    }
    let abs_tol = opt_f64(m, "", "abs_tol", DEFAULT_ABS_TOL)?;
    if !(abs_tol > 0.0) {
        return Err(schema("abs_tol", "must be positive"));
    }
    let series_tol = opt_f64(m, "", "series_tol", DEFAULT_SERIES_TOL)?;
    if !(series_tol > 0.0) {
        return Err(schema("series_tol", "must be positive"));
    }
    let out = match m.get("out") {
        Some(v) => PathBuf::from(string(v, "out")?),
        None => PathBuf::from("."),
    };

    let ml = match m.get("ml") {
        None => None,
        Some(v) => {
            let j = object(v, "ml")?;
            check_known(j, "ml", &["alpha", "beta", "z"])?;
            Some(MlJob {
                alpha: req_f64(j, "ml", "alpha")?,
                beta: opt_f64(j, "ml", "beta", 1.0)?,
                z: numbers(required(j, "ml", "z")?, "ml.z")?,
            })
        }
    };

    let cauchy = match m.get("cauchy") {
        None => None,
        Some(v) => {
            let j = object(v, "cauchy")?;
            check_known(j, "cauchy", &["problem", "lambda", "initial", "forcing", "times", "oracle_step"])?;
            let kind = match string(required(j, "cauchy", "problem")?, "cauchy.problem")? {
                "cp1" => CauchyKind::Cp1,
                "cp2" => CauchyKind::Cp2,
                other => return Err(schema("cauchy.problem", format!("expected \"cp1\" or \"cp2\", got '{other}'"))),
            };
            let init = numbers(required(j, "cauchy", "initial")?, "cauchy.initial")?;
            if init.len() != 2 {
                return Err(schema("cauchy.initial", "expected [value, slope]"));
            }
            let oracle_step = match j.get("oracle_step") {
                None => None,
                Some(v) => Some(number(v, "cauchy.oracle_step")?),
            };
            Some(CauchyJob {
                kind,
                lambda: req_f64(j, "cauchy", "lambda")?,
                initial: [init[0], init[1]],
                forcing: opt_f64(j, "cauchy", "forcing", 0.0)?,
                times: numbers(required(j, "cauchy", "times")?, "cauchy.times")?,
                oracle_step,
            })
        }
    };

    Ok(RunConfig {
        subcommand,
        orders,
        domain,
        data,
        modes,
        grid: grid(m, "grid", Grid { t: 201, x: 101 })?,
        residual_grid: grid(m, "residual_grid", Grid { t: 201, x: 101 })?,
        abs_tol,
        series_tol,
        out,
        ml,
        cauchy,
    })
}
