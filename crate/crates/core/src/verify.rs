//! Verification harness for assembled solutions: PDE residuals from the
//! discrete fractional operators, the side conditions, and coefficient
//! decay diagnostics.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fracops::CaputoOperator;
use crate::spectral::{eigenvalue, sine_analyze, ModeSolution, ProblemSpec, SolutionField};

/// Nodes excluded next to t = 0, t = a and x ∈ {0, 1}.
pub const BOUNDARY_LAYER: usize = 2;

/// At most this many correction exponents per operator.
const MAX_CORRECTIONS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeOdeSummary {
    pub n: usize,
    pub omega1: f64,
    pub omega2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub grid_step: f64,
    pub modes: usize,
    pub max_residual_omega1: f64,
    pub max_residual_omega2: f64,
    /// max |u(0,x) − Σφ_n sin nπx|
    pub initial_error: f64,
    /// max |u(b,x) − Σψ_n sin nπx|
    pub terminal_error: f64,
    /// max |u(t,0)|, |u(t,1)|
    pub boundary_error: f64,
    /// max |u(a−,x) − u(a+,x)|
    pub transmission_jump: f64,
    /// max |D^β u(a+,x) − u_t(a−,x)|, worst of the closed-form and finite-difference slopes
    pub transmission_flux_error: f64,
    /// max |u(0,x) − φ(x)|, the truncation error of the initial data
    pub initial_truncation: f64,
    /// max |u(b,x) − ψ(x)|
    pub terminal_truncation: f64,
    pub per_mode_ode_residuals: Vec<ModeOdeSummary>,
}

impl ResidualReport {
    /// Largest of the five side-condition errors.
    pub fn max_side_condition_error(&self) -> f64 {
        [
            self.initial_error,
            self.terminal_error,
            self.boundary_error,
            self.transmission_jump,
            self.transmission_flux_error,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Uniform grid of `len` intervals covering [0, span].
fn intervals(span: f64, step: f64) -> Result<(usize, f64)> {
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::Resolution(format!("grid step must be positive, got {step}")));
    }
    let m = (span / step - 1e-9).ceil().max(1.0) as usize;
    if m < 2 * BOUNDARY_LAYER + 2 {
        return Err(Error::Resolution(format!(
            "grid step {step} leaves only {m} intervals on a span of {span}"
        )));
    }
    Ok((m, span / m as f64))
}

fn is_integer(s: f64) -> bool {
    (s - s.round()).abs() < 1e-9
}

/// Non-integer exponents below `cutoff` among base + i·p + j·q (i, j ≥ 0).
fn lattice(bases: &[f64], p: f64, q: f64, cutoff: f64, out: &mut Vec<f64>) {
    for &base in bases {
        let mut i = 0.0;
        while base + i * p < cutoff {
            let mut j = 0.0;
            while base + i * p + j * q < cutoff {
                let s = base + i * p + j * q;
                if s > 0.0 && !is_integer(s) && out.iter().all(|&e| (e - s).abs() > 1e-9) {
                    out.push(s);
                }
                j += 1.0;
                if q <= 0.0 {
                    break;
                }
            }
            i += 1.0;
            if p <= 0.0 {
                break;
            }
        }
    }
}

fn forcing_exponents<'a>(modes: impl Iterator<Item = &'a crate::specfun::laplace::PowerSum>) -> Vec<f64> {
    let mut g: Vec<f64> = Vec::new();
    for p in modes {
        for &(c, e) in &p.terms {
            if c != 0.0 && g.iter().all(|&x| (x - e).abs() > 1e-12) {
                g.push(e);
            }
        }
    }
    g
}

/// Sorted and capped, with the integer powers 2, 3 below `cutoff` added:
/// the corrections are sized like h^{−α}, so a smooth t^m outside the
/// exact set would pick up an O(h^{m−α}) error from them.
fn finish(mut e: Vec<f64>) -> Vec<f64> {
    e.sort_by(f64::total_cmp);
    e.truncate(MAX_CORRECTIONS);
    e
}

/// Non-integer powers t^σ, σ < α₁ + 1, present in the Ω₁ closed forms:
/// α₁ + i·d + j·α₁ (unit initial value), 1 + i·d + j·α₁ (slope) and
/// α₁ + γ + … (forcing t^γ), d = α₁ − α₂. Higher powers are left to the
/// base scheme: their error is not confined to the first nodes, and
/// starting weights fitted to it grow along the grid.
pub fn omega1_exponents(spec: &ProblemSpec, modes: &[ModeSolution]) -> Vec<f64> {
    let o = spec.orders;
    let d = if o.mu != 0.0 { o.alpha1 - o.alpha2 } else { 0.0 };
    let mut bases = vec![o.alpha1, 1.0];
    for g in forcing_exponents(modes.iter().map(|m| &m.forcing.omega1)) {
        bases.push(o.alpha1 + g);
    }
    let mut out = Vec::new();
    lattice(&bases, d, o.alpha1, o.alpha1 + 1.0, &mut out);
    finish(out)
}

/// The same for Ω₂ in τ = t − a: jβ, 1 + jβ and β + γ + jβ, below β + 1.
pub fn omega2_exponents(spec: &ProblemSpec, modes: &[ModeSolution]) -> Vec<f64> {
    let beta = spec.orders.beta;
    let mut bases = vec![beta, 1.0];
    for g in forcing_exponents(modes.iter().map(|m| &m.forcing.omega2)) {
        bases.push(beta + g);
    }
    let mut out = Vec::new();
    lattice(&bases, 0.0, beta, beta + 1.0, &mut out);
    finish(out)
}

/// Adds t²: the corrections are sized like h^{−α}, so without it a smooth
/// quadratic would pick up an O(h^{2−α}) error from them. Only for α > 1
/// with known slope, where the base scheme is already exact on t².
fn with_quadratic(mut e: Vec<f64>) -> Vec<f64> {
    e.push(2.0);
    e
}

/// Discrete operators and grids for one residual evaluation.
struct Operators {
    m1: usize,
    h1: f64,
    m2: usize,
    h2: f64,
    d_a1: CaputoOperator,
    d_a2: CaputoOperator,
    d_b: CaputoOperator,
}

impl Operators {
    fn new(spec: &ProblemSpec, modes: &[ModeSolution], step: f64) -> Result<Self> {
        let (a, b) = (spec.domain.a, spec.domain.b);
        let o = spec.orders;
        let (m1, h1) = intervals(a, step)?;
        let (m2, h2) = intervals(b - a, step)?;
        let e1 = omega1_exponents(spec, modes);
        let e2 = omega2_exponents(spec, modes);
        Ok(Self {
            m1,
            h1,
            m2,
            h2,
            d_a1: CaputoOperator::new(o.alpha1, h1, m1 + 1, true, &with_quadratic(e1.clone()))?,
            d_a2: CaputoOperator::new(o.alpha2, h1, m1 + 1, false, &e1)?,
            d_b: CaputoOperator::new(o.beta, h2, m2 + 1, true, &with_quadratic(e2))?,
        })
    }

    fn t1(&self, k: usize) -> f64 {
        k as f64 * self.h1
    }

    fn t2(&self, a: f64, k: usize) -> f64 {
        a + k as f64 * self.h2
    }
}

/// Samples of one mode and its discrete time operator on both subdomains.
struct ModeSamples {
    v1: Vec<f64>,
    lhs1: Vec<f64>,
    v2: Vec<f64>,
    lhs2: Vec<f64>,
}

fn sample_mode(mode: &ModeSolution, ops: &Operators, mu: f64, a: f64) -> Result<ModeSamples> {
    let v1: Vec<f64> = (0..=ops.m1).map(|k| mode.eval(ops.t1(k))).collect::<Result<_>>()?;
    // node 0 of Ω₂ is t = a, which takes the Ω₁ value
    let v2: Vec<f64> = (0..=ops.m2).map(|k| mode.eval(ops.t2(a, k))).collect::<Result<_>>()?;
    let d1 = ops.d_a1.apply(&v1, Some(mode.b))?;
    let d2 = ops.d_a2.apply(&v1, None)?;
    let lhs1 = d1.iter().zip(&d2).map(|(x, y)| x + mu * y).collect();
    let lhs2 = ops.d_b.apply(&v2, Some(mode.g))?;
    Ok(ModeSamples { v1, lhs1, v2, lhs2 })
}

/// Residual curves |lhs − f_n| of one mode's ordinary equations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeOdeResidual {
    pub n: usize,
    pub t1: Vec<f64>,
    pub omega1: Vec<f64>,
    pub t2: Vec<f64>,
    pub omega2: Vec<f64>,
}

impl ModeOdeResidual {
    /// Maxima over each subdomain, skipping the boundary layer.
    pub fn summary(&self) -> ModeOdeSummary {
        let mx = |v: &[f64]| v.iter().skip(BOUNDARY_LAYER).fold(0.0f64, |m, x| m.max(*x));
        ModeOdeSummary {
            n: self.n,
            omega1: mx(&self.omega1),
            omega2: mx(&self.omega2),
        }
    }
}

fn ode_residual(mode: &ModeSolution, ops: &Operators, s: &ModeSamples, a: f64) -> ModeOdeResidual {
    let lam = mode.lambda;
    let t1: Vec<f64> = (0..=ops.m1).map(|k| ops.t1(k)).collect();
    let t2: Vec<f64> = (0..=ops.m2).map(|k| ops.t2(a, k)).collect();
    let omega1 = (0..=ops.m1)
        .map(|k| {
            if k == 0 {
                0.0
            } else {
                (s.lhs1[k] + lam * s.v1[k] - mode.forcing.eval(t1[k], a)).abs()
            }
        })
        .collect();
    let omega2 = (0..=ops.m2)
        .map(|k| {
            if k == 0 {
                0.0
            } else {
                (s.lhs2[k] + lam * s.v2[k] - mode.forcing.eval(t2[k], a)).abs()
            }
        })
        .collect();
    ModeOdeResidual {
        n: mode.n,
        t1,
        omega1,
        t2,
        omega2,
    }
}

/// Applies the discretized mode operators to sampled T_n on grids of the
/// given step. The origin nodes carry 0; the node at t = a on the Ω₂ grid
/// uses T_n(a−), so an inconsistent C_n shows up as a residual spike.
pub fn check_mode_ode(mode: &ModeSolution, spec: &ProblemSpec, step: f64) -> Result<ModeOdeResidual> {
    let ops = Operators::new(spec, std::slice::from_ref(mode), step)?;
    let a = spec.domain.a;
    let s = sample_mode(mode, &ops, spec.orders.mu, a)?;
    Ok(ode_residual(mode, &ops, &s, a))
}

/// Interface diagnostics of one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Transmission {
    pub n: usize,
    /// |T_n(a−) − T_n(a+)|
    pub jump: f64,
    /// |(f_n(a+) − λ_nC_n) − T_n′(a−)| with the closed-form slope
    pub flux_error: f64,
    /// the same with a one-sided finite-difference slope
    pub flux_error_fd: f64,
    pub slope_closed_form: f64,
    pub slope_fd: f64,
    pub fd_step: f64,
}

/// Default step of the one-sided difference for T_n′(a−).
pub const TRANSMISSION_FD_STEP: f64 = 1e-4;

pub fn check_transmission(mode: &ModeSolution, spec: &ProblemSpec) -> Result<Transmission> {
    check_transmission_with(mode, spec, TRANSMISSION_FD_STEP)
}

pub fn check_transmission_with(mode: &ModeSolution, spec: &ProblemSpec, fd_step: f64) -> Result<Transmission> {
    let a = spec.domain.a;
    if !(fd_step > 0.0 && 2.0 * fd_step < a) {
        return Err(Error::Resolution(format!("finite-difference step {fd_step} does not fit in (0, a)")));
    }
    let left = mode.eval_left(a)?;
    let right = mode.right_value_at_interface()?;
    let target = mode.forcing.right_limit_at_interface() - mode.lambda * right;
    let closed = mode.left_derivative_at_interface()?;
    let h = fd_step;
    let fd = (3.0 * left - 4.0 * mode.eval_left(a - h)? + mode.eval_left(a - 2.0 * h)?) / (2.0 * h);
    Ok(Transmission {
        n: mode.n,
        jump: (left - right).abs(),
        flux_error: (target - closed).abs(),
        flux_error_fd: (target - fd).abs(),
        slope_closed_form: closed,
        slope_fd: fd,
        fd_step: h,
    })
}

/// Full residual and side-condition report for an assembled field, on
/// uniform grids of the given step in t (per subdomain) and in x.
///
/// The discrete time operators are linear, so they are applied to the
/// sampled modes and synthesized; u_xx is the second central difference of
/// the synthesized samples. The time operators carry the exact initial
/// slopes Σ B_n sin nπx and Σ G_n sin nπx and starting corrections for
/// the non-smooth powers of the closed forms.
pub fn pde_residual(field: &SolutionField, spec: &ProblemSpec, grid_step: f64) -> Result<ResidualReport> {
    spec.validate()?;
    let (a, b) = (spec.domain.a, spec.domain.b);
    let modes = &field.modes;
    let ops = Operators::new(spec, modes, grid_step)?;
    let (mx, dx) = intervals(1.0, grid_step)?;
    let xs: Vec<f64> = (0..=mx).map(|j| j as f64 * dx).collect();
    let sines: Vec<Vec<f64>> = modes
        .iter()
        .map(|m| {
            xs.iter()
                .enumerate()
                .map(|(j, &x)| if j == 0 || j == mx { 0.0 } else { (m.n as f64 * PI * x).sin() })
                .collect()
        })
        .collect();

    let samples: Vec<ModeSamples> = modes
        .par_iter()
        .map(|m| sample_mode(m, &ops, spec.orders.mu, a))
        .collect::<Result<_>>()?;
    let per_mode_ode_residuals = modes
        .iter()
        .zip(&samples)
        .map(|(m, s)| ode_residual(m, &ops, s, a).summary())
        .collect();

    let synth = |coeffs: &dyn Fn(usize) -> f64, j: usize| -> f64 {
        (0..modes.len()).map(|i| coeffs(i) * sines[i][j]).sum()
    };
    let inner = BOUNDARY_LAYER..=mx - BOUNDARY_LAYER;
    let residual = |len: usize, vals: &(dyn Fn(usize, usize) -> (f64, f64) + Sync), t: &(dyn Fn(usize) -> f64 + Sync)| -> f64 {
        (BOUNDARY_LAYER..=len)
            .into_par_iter()
            .map(|k| {
                let row: Vec<(f64, f64)> = (0..=mx).map(|j| vals(k, j)).collect();
                let mut worst = 0.0f64;
                for j in inner.clone() {
                    let uxx = (row[j + 1].0 - 2.0 * row[j].0 + row[j - 1].0) / (dx * dx);
                    let r = row[j].1 - uxx - spec.source.eval(t(k), xs[j], a);
                    worst = worst.max(r.abs());
                }
                worst
            })
            .reduce(|| 0.0, f64::max)
    };
    let max_residual_omega1 = residual(
        ops.m1,
        &|k, j| (synth(&|i| samples[i].v1[k], j), synth(&|i| samples[i].lhs1[k], j)),
        &|k| ops.t1(k),
    );
    let max_residual_omega2 = residual(
        ops.m2,
        &|k, j| (synth(&|i| samples[i].v2[k], j), synth(&|i| samples[i].lhs2[k], j)),
        &|k| ops.t2(a, k),
    );

    let max_over_x = |f: &dyn Fn(usize) -> f64| (0..=mx).map(|j| f(j).abs()).fold(0.0, f64::max);
    let u0: Vec<f64> = modes.iter().map(|m| m.eval(0.0)).collect::<Result<_>>()?;
    let ub: Vec<f64> = modes.iter().map(|m| m.eval(b)).collect::<Result<_>>()?;
    let initial_error = max_over_x(&|j| synth(&|i| u0[i] - modes[i].phi, j));
    let terminal_error = max_over_x(&|j| synth(&|i| ub[i] - modes[i].psi, j));
    let initial_truncation = max_over_x(&|j| synth(&|i| u0[i], j) - (spec.phi)(xs[j]));
    let terminal_truncation = max_over_x(&|j| synth(&|i| ub[i], j) - (spec.psi)(xs[j]));

    let mut boundary_error = 0.0f64;
    for t in field.t.iter().copied().chain([0.0, a, b]) {
        boundary_error = boundary_error.max(field.eval(t, 0.0)?.abs()).max(field.eval(t, 1.0)?.abs());
    }
    for row in &field.values {
        if let (Some(first), Some(last)) = (row.first(), row.last()) {
            if field.x.first() == Some(&0.0) {
                boundary_error = boundary_error.max(first.abs());
            }
            if field.x.last() == Some(&1.0) {
                boundary_error = boundary_error.max(last.abs());
            }
        }
    }

    let tr: Vec<Transmission> = modes.iter().map(|m| check_transmission(m, spec)).collect::<Result<_>>()?;
    let jumps: Vec<f64> = modes
        .iter()
        .map(|m| Ok(m.eval_left(a)? - m.right_value_at_interface()?))
        .collect::<Result<_>>()?;
    let transmission_jump = max_over_x(&|j| synth(&|i| jumps[i], j));
    let flux = |slope: &dyn Fn(&Transmission) -> f64| {
        max_over_x(&|j| {
            synth(
                &|i| modes[i].forcing.right_limit_at_interface() - modes[i].lambda * modes[i].c - slope(&tr[i]),
                j,
            )
        })
    };
    let transmission_flux_error = flux(&|t| t.slope_closed_form).max(flux(&|t| t.slope_fd));

    Ok(ResidualReport {
        grid_step,
        modes: modes.len(),
        max_residual_omega1,
        max_residual_omega2,
        initial_error,
        terminal_error,
        boundary_error,
        transmission_jump,
        transmission_flux_error,
        initial_truncation,
        terminal_truncation,
        per_mode_ode_residuals,
    })
}

/// Residual report of a problem at a given step, assembling the field first.
pub fn verify_problem(spec: &ProblemSpec, grid_step: f64) -> Result<ResidualReport> {
    let t = crate::spectral::linspace(0.0, spec.domain.b, 5);
    let x = crate::spectral::linspace(0.0, 1.0, 5);
    let field = crate::spectral::assemble(spec, &t, &x)?;
    pde_residual(&field, spec, grid_step)
}

/// Residuals at `step` and `step/2` with observed orders.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Refinement {
    pub coarse: ResidualReport,
    pub fine: ResidualReport,
    pub order_omega1: f64,
    pub order_omega2: f64,
}

pub fn residual_refinement(field: &SolutionField, spec: &ProblemSpec, step: f64) -> Result<Refinement> {
    let coarse = pde_residual(field, spec, step)?;
    let fine = pde_residual(field, spec, step / 2.0)?;
    let order = |c: f64, f: f64| (c / f).log2();
    Ok(Refinement {
        order_omega1: order(coarse.max_residual_omega1, fine.max_residual_omega1),
        order_omega2: order(coarse.max_residual_omega2, fine.max_residual_omega2),
        coarse,
        fine,
    })
}

/// Sine-coefficient magnitudes, partial sums and fitted decay rates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayTable {
    pub n: Vec<usize>,
    pub phi: Vec<f64>,
    pub psi: Vec<f64>,
    /// sup over a time grid of |f_n(t)|
    pub f_sup: Vec<f64>,
    pub partial_phi: Vec<f64>,
    pub partial_psi: Vec<f64>,
    pub partial_lambda_phi: Vec<f64>,
    pub partial_f: Vec<f64>,
    /// p in |c_n| ~ n^{−p}, least squares over the non-negligible entries
    pub phi_exponent: Option<f64>,
    pub psi_exponent: Option<f64>,
    pub f_exponent: Option<f64>,
    /// Nonzero boundary values of φ, ψ or f, with their values.
    pub violations: Vec<(String, f64)>,
    pub hypothesis_violation: bool,
}

/// Tolerance for treating a boundary value of the data as nonzero.
pub const BOUNDARY_TOL: f64 = 1e-10;

fn partial_sums(v: &[f64]) -> Vec<f64> {
    v.iter()
        .scan(0.0, |s, x| {
            *s += x;
            Some(*s)
        })
        .collect()
}

/// Least-squares slope of −log|c_n| against log n over entries above
/// 1e−12·max|c|; None with fewer than two such entries.
pub fn fit_decay_exponent(c: &[f64]) -> Option<f64> {
    let top = c.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if top == 0.0 {
        return None;
    }
    let pts: Vec<(f64, f64)> = c
        .iter()
        .enumerate()
        .filter(|(_, v)| v.abs() > 1e-12 * top)
        .map(|(i, v)| (((i + 1) as f64).ln(), v.abs().ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some(-sxy / sxx)
}

pub fn decay_diagnostics(spec: &ProblemSpec, n: usize) -> Result<DecayTable> {
    if n < 8 {
        return Err(Error::Domain(format!("decay diagnostics need N >= 8, got {n}")));
    }
    spec.validate()?;
    let data = spec.prepare(n)?;
    let phi: Vec<f64> = data.phi.coeffs.iter().map(|c| c.abs()).collect();
    let psi: Vec<f64> = data.psi.coeffs.iter().map(|c| c.abs()).collect();
    let (a, b) = (spec.domain.a, spec.domain.b);
    let times: Vec<f64> = (0..=32).map(|i| b * i as f64 / 32.0).collect();
    let f_sup: Vec<f64> = data
        .forcing
        .iter()
        .map(|m| times.iter().map(|&t| m.eval(t, a).abs()).fold(0.0, f64::max))
        .collect();
    let lambda_phi: Vec<f64> = phi.iter().enumerate().map(|(i, p)| eigenvalue(i + 1) * p).collect();
    let violations = spec.boundary_violations(BOUNDARY_TOL);
    Ok(DecayTable {
        n: (1..=n).collect(),
        partial_phi: partial_sums(&phi),
        partial_psi: partial_sums(&psi),
        partial_lambda_phi: partial_sums(&lambda_phi),
        partial_f: partial_sums(&f_sup),
        phi_exponent: fit_decay_exponent(&phi),
        psi_exponent: fit_decay_exponent(&psi),
        f_exponent: fit_decay_exponent(&f_sup),
        hypothesis_violation: !violations.is_empty(),
        violations,
        phi,
        psi,
        f_sup,
    })
}

/// Sine coefficients of an arbitrary profile with their fitted decay rate.
pub fn profile_decay(g: impl Fn(f64) -> f64, n: usize) -> Result<(Vec<f64>, Option<f64>)> {
    let c = sine_analyze(g, n)?.coeffs;
    let e = fit_decay_exponent(&c);
    Ok((c, e))
}
