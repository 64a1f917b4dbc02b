//! Fourier-sine solution of the mixed problem.
//!
//! Each mode T_n solves the two-term equation on (0, a) and the one-term
//! equation on (a, b). Three constants tie the pieces together: the initial
//! slope B_n, and C_n = T_n(a), G_n = T_n′(a+). They are fixed by
//! continuity at a, the flux condition D^β_a T_n(a+) = T_n′(a−), and the
//! terminal value T_n(b) = ψ_n:
//!
//! ```text
//! B_n = [f_n(a+) − λφ_nP(a) − λF₁(a) − φ_nP′(a) − F₁′(a)] / (Q′(a) + λQ(a))
//! C_n = φ_nP(a) + B_nQ(a) + F₁(a)
//! G_n = [ψ_n − F₂(b) − C_nE_{β,1}(−λ(b−a)^β)] / ((b−a)·E_{β,2}(−λ(b−a)^β))
//! ```
//!
//! where P, Q, F₁ are the Ω₁ responses to unit initial value, unit initial
//! slope and the forcing (see [`crate::cauchy`]), and F₂ is the Ω₂ forcing
//! response. With Q′ = E₁ and Q = tE₂ the B_n denominator is
//! E₁(a) + λaE₂(a).

mod catalog;
mod mode;

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cauchy::QuadratureConfig;
use crate::error::{check, Error, Result};
use crate::interp::chebyshev_fit_vec;
use crate::quad::{self, Tolerance};
use crate::specfun::laplace::PowerSum;
use crate::specfun::{ml2, BivariateKernel, KernelParams, ML2Params};

pub use catalog::{catalog, catalog_names, catalog_with, manufactured_single_mode, CatalogProblem, Manufactured};
pub use mode::{solve_mode, solve_mode_data, solve_mode_with, ModeCoefficients, ModeSolution};

/// Fractional orders and damping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrderSet {
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta: f64,
    pub mu: f64,
}

impl OrderSet {
    pub fn new(alpha1: f64, alpha2: f64, beta: f64, mu: f64) -> Result<Self> {
        let o = Self {
            alpha1,
            alpha2,
            beta,
            mu,
        };
        o.validate()?;
        Ok(o)
    }

    pub fn validate(&self) -> Result<()> {
        const C: &str = "0<α₂<1, 1<α₁, β<2";
        check(self.alpha2 > 0.0 && self.alpha2 < 1.0, "alpha2", self.alpha2, C)?;
        check(self.alpha1 > 1.0 && self.alpha1 < 2.0, "alpha1", self.alpha1, C)?;
        check(self.beta > 1.0 && self.beta < 2.0, "beta", self.beta, C)?;
        check(self.mu >= 0.0 && self.mu.is_finite(), "mu", self.mu, "mu >= 0")
    }

    /// Whether E_{β,2}(−z) is guaranteed zero-free on z > 0 (β ≤ 4/3).
    pub fn delta_star_positive_guaranteed(&self) -> bool {
        self.beta <= 4.0 / 3.0
    }

    pub(crate) fn kernel_params(&self) -> KernelParams {
        KernelParams {
            alpha1: self.alpha1,
            alpha2: self.alpha2,
            mu: self.mu,
        }
    }
}

/// Ω₁ = (0, a), Ω₂ = (a, b).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeDomain {
    pub a: f64,
    pub b: f64,
}

impl TimeDomain {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        let d = Self { a, b };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        check(self.a > 0.0 && self.a.is_finite(), "a", self.a, "b>a>0")?;
        check(self.b > self.a && self.b.is_finite(), "b", self.b, "b>a>0")
    }
}

/// λ_n = (nπ)².
pub fn eigenvalue(n: usize) -> f64 {
    (n as f64 * std::f64::consts::PI).powi(2)
}

/// Coefficients c_1..c_N of Σ c_n sin(nπx).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SineSeries {
    pub coeffs: Vec<f64>,
}

impl SineSeries {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("a sine series needs at least one term".into()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("sine coefficients must be finite".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// c_n for 1-based n (0 beyond the truncation).
    pub fn coeff(&self, n: usize) -> f64 {
        self.coeffs.get(n.wrapping_sub(1)).copied().unwrap_or(0.0)
    }
}

/// c_n = 2∫₀¹ g(x) sin(nπx) dx for n = 1..N, all modes from one adaptive
/// vector quadrature starting from 4N panels.
pub fn sine_analyze(g: impl Fn(f64) -> f64, n: usize) -> Result<SineSeries> {
    sine_analyze_with(g, n, Tolerance::new(1e-14, 1e-13, 20_000))
}

pub fn sine_analyze_with(g: impl Fn(f64) -> f64, n: usize, tol: Tolerance) -> Result<SineSeries> {
    if n == 0 {
        return Err(Error::Domain("sine analysis needs N >= 1".into()));
    }
    let pi = std::f64::consts::PI;
    let coeffs = quad::integrate_vec(
        |x, out: &mut [f64]| {
            let v = 2.0 * g(x);
            // sin(kπx) by the Chebyshev recurrence
            let (s1, c1) = (pi * x).sin_cos();
            let mut prev = 0.0;
            let mut cur = s1;
            for o in out.iter_mut() {
                *o = v * cur;
                let next = 2.0 * c1 * cur - prev;
                prev = cur;
                cur = next;
            }
        },
        n,
        0.0,
        1.0,
        4 * n.max(4),
        tol,
    )?;
    SineSeries::new(coeffs)
}

/// Σ c_n sin(nπx); exactly 0 at x ∈ {0, 1}.
pub fn sine_synthesize(s: &SineSeries, x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    let pi = std::f64::consts::PI;
    s.coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c * ((k + 1) as f64 * pi * x).sin())
        .sum()
}

/// The Δ_n determinant in both readings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaN {
    /// E₁ − 1 + λaE₂, the determinant of the printed bracket form.
    pub printed: f64,
    /// E₁ + λaE₂, the determinant the B_n solve actually divides by.
    pub matching: f64,
    /// |matching| < 1e−12·(1 + λa).
    pub degenerate: bool,
}

/// Δ for an arbitrary λ ≥ 0 (λ_n for mode n).
pub fn delta_for_lambda(orders: &OrderSet, domain: &TimeDomain, lambda: f64) -> Result<DeltaN> {
    orders.validate()?;
    domain.validate()?;
    let kern = BivariateKernel::new(orders.kernel_params(), lambda)?;
    let a = domain.a;
    let e1 = kern.eval(1.0, a)?;
    let e2 = kern.eval(2.0, a)?;
    let matching = e1 + lambda * a * e2;
    Ok(DeltaN {
        printed: matching - 1.0,
        matching,
        degenerate: matching.abs() < 1e-12 * (1.0 + lambda * a),
    })
}

pub fn delta_n(orders: &OrderSet, domain: &TimeDomain, n: usize) -> Result<DeltaN> {
    delta_for_lambda(orders, domain, eigenvalue(n))
}

/// Δ*_n = E_{β,2}(−λ_n(b−a)^β) with its sign diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaStar {
    pub value: f64,
    /// value ≤ 0.
    pub nonpositive: bool,
    /// Nonpositive although β ≤ 4/3 guarantees positivity.
    pub hypothesis_violation: bool,
}

pub fn delta_star_for_lambda(orders: &OrderSet, domain: &TimeDomain, lambda: f64) -> Result<DeltaStar> {
    orders.validate()?;
    domain.validate()?;
    let z = -lambda * (domain.b - domain.a).powf(orders.beta);
    let value = ml2(ML2Params::new(orders.beta, 2.0)?, z)?;
    let nonpositive = value <= 0.0;
    Ok(DeltaStar {
        value,
        nonpositive,
        hypothesis_violation: nonpositive && orders.delta_star_positive_guaranteed(),
    })
}

pub fn delta_n_star(orders: &OrderSet, domain: &TimeDomain, n: usize) -> Result<DeltaStar> {
    delta_star_for_lambda(orders, domain, eigenvalue(n))
}

/// One row of a nondegeneracy sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub delta: DeltaN,
    pub delta_star: DeltaStar,
}

/// Δ_n and Δ*_n for n = 1..=n_max, with the modes where Δ*_n changes sign
/// relative to mode n−1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    pub rows: Vec<SweepRow>,
    pub delta_star_sign_changes: Vec<usize>,
    pub degenerate_modes: Vec<usize>,
}

pub fn nondegeneracy_sweep(orders: &OrderSet, domain: &TimeDomain, n_max: usize) -> Result<Sweep> {
    let rows: Vec<SweepRow> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            Ok(SweepRow {
                n,
                delta: delta_n(orders, domain, n)?,
                delta_star: delta_n_star(orders, domain, n)?,
            })
        })
        .collect::<Result<_>>()?;
    let delta_star_sign_changes = rows
        .windows(2)
        .filter(|w| (w[0].delta_star.value > 0.0) != (w[1].delta_star.value > 0.0))
        .map(|w| w[1].n)
        .collect();
    let degenerate_modes = rows.iter().filter(|r| r.delta.degenerate).map(|r| r.n).collect();
    Ok(Sweep {
        rows,
        delta_star_sign_changes,
        degenerate_modes,
    })
}

/// x ↦ value.
pub type Profile = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
/// (t, x) ↦ value.
pub type Source = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// f_n on each subdomain as a power sum in local time (t on Ω₁, t − a on Ω₂).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ModeForcing {
    pub omega1: PowerSum,
    pub omega2: PowerSum,
}

impl ModeForcing {
    /// f_n(t); the Ω₁ piece is used up to and including t = a.
    pub fn eval(&self, t: f64, a: f64) -> f64 {
        if t <= a {
            eval_powers(&self.omega1, t)
        } else {
            eval_powers(&self.omega2, t - a)
        }
    }

    /// f_n(a+).
    pub fn right_limit_at_interface(&self) -> f64 {
        eval_powers(&self.omega2, 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.omega1.is_zero() && self.omega2.is_zero()
    }

    fn scaled(&self, c: f64) -> Self {
        let s = |p: &PowerSum| PowerSum::new(p.terms.iter().map(|&(k, q)| (c * k, q)).collect());
        Self {
            omega1: s(&self.omega1),
            omega2: s(&self.omega2),
        }
    }
}

pub(crate) fn eval_powers(p: &PowerSum, tau: f64) -> f64 {
    p.terms
        .iter()
        .map(|&(c, g)| if g == 0.0 { c } else { c * tau.max(0.0).powf(g) })
        .sum()
}

/// Right-hand side f(t, x).
#[derive(Clone, Default)]
pub enum SourceTerm {
    #[default]
    Zero,
    /// f = Σ_n f_n(t) sin(nπx) with f_n given exactly; entry k is mode k+1.
    Modal(Vec<ModeForcing>),
    /// A general evaluator; f_n is fitted by Chebyshev interpolation in t.
    Function(Source),
}

impl fmt::Debug for SourceTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceTerm::Zero => write!(f, "Zero"),
            SourceTerm::Modal(m) => write!(f, "Modal({} modes)", m.len()),
            SourceTerm::Function(_) => write!(f, "Function(..)"),
        }
    }
}

impl SourceTerm {
    pub fn function(f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        SourceTerm::Function(Arc::new(f))
    }

    /// f(t, x); at t = a the Ω₁ side is used for modal data.
    pub fn eval(&self, t: f64, x: f64, a: f64) -> f64 {
        match self {
            SourceTerm::Zero => 0.0,
            SourceTerm::Modal(modes) => {
                if x <= 0.0 || x >= 1.0 {
                    return 0.0;
                }
                let pi = std::f64::consts::PI;
                modes
                    .iter()
                    .enumerate()
                    .map(|(k, m)| m.eval(t, a) * ((k + 1) as f64 * pi * x).sin())
                    .sum()
            }
            SourceTerm::Function(f) => f(t, x),
        }
    }
}

/// Relative accuracy of the Chebyshev fits of f_n(t).
const FORCING_FIT_TOL: f64 = 1e-11;

/// The complete mixed problem.
#[derive(Clone)]
pub struct ProblemSpec {
    pub orders: OrderSet,
    pub domain: TimeDomain,
    pub phi: Profile,
    pub psi: Profile,
    pub source: SourceTerm,
    /// Truncation N.
    pub modes: usize,
    pub quad: QuadratureConfig,
}

impl fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("orders", &self.orders)
            .field("domain", &self.domain)
            .field("source", &self.source)
            .field("modes", &self.modes)
            .finish_non_exhaustive()
    }
}

impl ProblemSpec {
    pub fn new(
        orders: OrderSet,
        domain: TimeDomain,
        phi: impl Fn(f64) -> f64 + Send + Sync + 'static,
        psi: impl Fn(f64) -> f64 + Send + Sync + 'static,
        source: SourceTerm,
        modes: usize,
    ) -> Result<Self> {
        let s = Self {
            orders,
            domain,
            phi: Arc::new(phi),
            psi: Arc::new(psi),
            source,
            modes,
            quad: QuadratureConfig::default(),
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        self.orders.validate()?;
        self.domain.validate()?;
        self.quad.validate()?;
        check(self.modes >= 1, "N", self.modes as f64, "N >= 1")
    }

    /// Boundary values of the data that should vanish; each entry names the
    /// offending quantity and its value.
    pub fn boundary_violations(&self, tol: f64) -> Vec<(String, f64)> {
        let mut out = Vec::new();
        for (name, v) in [
            ("phi(0)", (self.phi)(0.0)),
            ("phi(1)", (self.phi)(1.0)),
            ("psi(0)", (self.psi)(0.0)),
            ("psi(1)", (self.psi)(1.0)),
        ] {
            if v.abs() > tol {
                out.push((name.to_string(), v));
            }
        }
        if let SourceTerm::Function(f) = &self.source {
            let b = self.domain.b;
            let mut worst = (0.0f64, 0.0f64, 0.0f64);
            for i in 0..=64 {
                let t = b * i as f64 / 64.0;
                for x in [0.0, 1.0] {
                    let v = f(t, x);
                    if v.abs() > worst.0.abs() {
                        worst = (v, t, x);
                    }
                }
            }
            if worst.0.abs() > tol {
                out.push((format!("f({}, {})", worst.1, worst.2), worst.0));
            }
        }
        out
    }

    /// Sine coefficients of φ, ψ and the per-mode forcing for modes 1..=n.
    pub fn prepare(&self, n: usize) -> Result<PreparedData> {
        self.validate()?;
        let phi = sine_analyze(|x| (self.phi)(x), n)?;
        let psi = sine_analyze(|x| (self.psi)(x), n)?;
        let forcing = self.mode_forcing(n)?;
        Ok(PreparedData { phi, psi, forcing })
    }

    fn mode_forcing(&self, n: usize) -> Result<Vec<ModeForcing>> {
        match &self.source {
            SourceTerm::Zero => Ok(vec![ModeForcing::default(); n]),
            SourceTerm::Modal(m) => Ok((0..n).map(|k| m.get(k).cloned().unwrap_or_default()).collect()),
            SourceTerm::Function(f) => {
                let (a, b) = (self.domain.a, self.domain.b);
                let fit = |origin: f64, len: f64| {
                    chebyshev_fit_vec(
                        |tau| Ok(sine_analyze(|x| f(origin + tau, x), n)?.coeffs),
                        n,
                        len,
                        FORCING_FIT_TOL,
                        20,
                    )
                };
                let w1 = fit(0.0, a)?;
                let w2 = fit(a, b - a)?;
                Ok(w1
                    .into_iter()
                    .zip(w2)
                    .map(|(p1, p2)| ModeForcing {
                        omega1: p1.powers,
                        omega2: p2.powers,
                    })
                    .collect())
            }
        }
    }
}

/// Data shared by all mode solves.
#[derive(Debug, Clone)]
pub struct PreparedData {
    pub phi: SineSeries,
    pub psi: SineSeries,
    pub forcing: Vec<ModeForcing>,
}

impl PreparedData {
    /// Linear combination of two prepared data sets (same truncation).
    pub fn combine(&self, ca: f64, other: &PreparedData, cb: f64) -> PreparedData {
        let lin = |x: &SineSeries, y: &SineSeries| SineSeries {
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(p, q)| ca * p + cb * q).collect(),
        };
        PreparedData {
            phi: lin(&self.phi, &other.phi),
            psi: lin(&self.psi, &other.psi),
            forcing: self
                .forcing
                .iter()
                .zip(&other.forcing)
                .map(|(x, y)| {
                    let (x, y) = (x.scaled(ca), y.scaled(cb));
                    ModeForcing {
                        omega1: PowerSum::new([x.omega1.terms, y.omega1.terms].concat()).simplified(),
                        omega2: PowerSum::new([x.omega2.terms, y.omega2.terms].concat()).simplified(),
                    }
                })
                .collect(),
        }
    }
}

/// Truncated series solution together with a sampled grid.
#[derive(Debug, Clone)]
pub struct SolutionField {
    pub orders: OrderSet,
    pub domain: TimeDomain,
    pub modes: Vec<ModeSolution>,
    /// Modes left out because they were degenerate (lenient assembly only).
    pub skipped: Vec<(usize, String)>,
    pub t: Vec<f64>,
    pub x: Vec<f64>,
    /// values[i][j] = u(t_i, x_j).
    pub values: Vec<Vec<f64>>,
}

impl SolutionField {
    /// u(t, x) from the mode solutions.
    pub fn eval(&self, t: f64, x: f64) -> Result<f64> {
        if x <= 0.0 || x >= 1.0 {
            return Ok(0.0);
        }
        let pi = std::f64::consts::PI;
        let mut u = 0.0;
        for m in &self.modes {
            u += m.eval(t)? * (m.n as f64 * pi * x).sin();
        }
        Ok(u)
    }

    /// Mode values T_n(t) for all modes, in order.
    pub fn mode_values(&self, t: f64) -> Result<Vec<f64>> {
        self.modes.iter().map(|m| m.eval(t)).collect()
    }

    /// Samples u on a tensor grid.
    pub fn sample(&self, t: &[f64], x: &[f64]) -> Result<Vec<Vec<f64>>> {
        let pi = std::f64::consts::PI;
        let sines: Vec<Vec<f64>> = self
            .modes
            .iter()
            .map(|m| {
                x.iter()
                    .map(|&xj| if xj <= 0.0 || xj >= 1.0 { 0.0 } else { (m.n as f64 * pi * xj).sin() })
                    .collect()
            })
            .collect();
        t.par_iter()
            .map(|&ti| {
                let tn = self.mode_values(ti)?;
                Ok((0..x.len())
                    .map(|j| tn.iter().zip(&sines).map(|(v, s)| v * s[j]).sum())
                    .collect())
            })
            .collect()
    }

    pub fn coefficient_table(&self) -> Vec<ModeCoefficients> {
        self.modes.iter().map(|m| m.coefficients()).collect()
    }
}

/// Evenly spaced grid with `points` nodes on [lo, hi].
pub fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![lo];
    }
    (0..points)
        .map(|i| {
            if i + 1 == points {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (points - 1) as f64
            }
        })
        .collect()
}

/// Solves modes 1..=N and samples u on `t_grid` × `x_grid`. Any degenerate
/// mode is an error.
pub fn assemble(spec: &ProblemSpec, t_grid: &[f64], x_grid: &[f64]) -> Result<SolutionField> {
    let data = spec.prepare(spec.modes)?;
    assemble_prepared(spec, &data, t_grid, x_grid, false)
}

/// As [`assemble`], but degenerate modes are dropped and listed in
/// [`SolutionField::skipped`].
pub fn assemble_lenient(spec: &ProblemSpec, t_grid: &[f64], x_grid: &[f64]) -> Result<SolutionField> {
    let data = spec.prepare(spec.modes)?;
    assemble_prepared(spec, &data, t_grid, x_grid, true)
}

pub fn assemble_prepared(
    spec: &ProblemSpec,
    data: &PreparedData,
    t_grid: &[f64],
    x_grid: &[f64],
    lenient: bool,
) -> Result<SolutionField> {
    let (a, b) = (spec.domain.a, spec.domain.b);
    if let Some(&t) = t_grid.iter().find(|&&t| !(0.0..=b).contains(&t)) {
        return Err(Error::Domain(format!("time {t} outside [0, {b}] (a = {a})")));
    }
    if let Some(&x) = x_grid.iter().find(|&&x| !(0.0..=1.0).contains(&x)) {
        return Err(Error::Domain(format!("x = {x} outside [0, 1]")));
    }
    let results: Vec<(usize, Result<ModeSolution>)> = (1..=spec.modes)
        .into_par_iter()
        .map(|n| (n, solve_mode_with(spec, data, n)))
        .collect();
    let mut modes = Vec::new();
    let mut skipped = Vec::new();
    for (n, r) in results {
        match r {
            Ok(m) => modes.push(m),
            Err(e @ Error::DegenerateMode { .. }) if lenient => skipped.push((n, e.to_string())),
            Err(e) => return Err(e),
        }
    }
    let mut field = SolutionField {
        orders: spec.orders,
        domain: spec.domain,
        modes,
        skipped,
        t: t_grid.to_vec(),
        x: x_grid.to_vec(),
        values: Vec::new(),
    };
    field.values = field.sample(t_grid, x_grid)?;
    Ok(field)
}
