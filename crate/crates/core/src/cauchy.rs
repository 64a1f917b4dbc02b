//! Closed-form solutions of the two fractional Cauchy problems
//!
//! ```text
//! D^{α₁}y + μD^{α₂}y + λy = f,  y(0) = A, y′(0) = B      (CP1, origin 0)
//! D^{β}_a y + λy = f,           y(a) = C, y′(a) = G      (CP2, origin a)
//! ```
//!
//! and time-stepping oracles for both, which never touch Mittag-Leffler
//! functions.
//!
//! The default ([`FormulaReading::Laplace`]) CP1 solution is
//!
//! ```text
//! y(t) = A[1 − λt^{α₁}E_{α₁+1}(t)] + B·t·E_2(t) + ∫_0^t (t−s)^{α₁−1}E_{α₁}(t−s) f(s) ds
//! ```
//!
//! with E_ρ(t) = E_{(α₁−α₂,α₁),ρ}(−μt^{α₁−α₂}, −λt^{α₁}). The other readings
//! keep the literature form of the brackets for comparison.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{check, Error, Result};
use crate::fracops::{ProductTrapezoid, UniformGridFn};
use crate::interp::Pchip;
use crate::quad::{self, Tolerance};
use crate::specfun::laplace::PowerSum;
use crate::specfun::{gamma, ml2, rgamma, BivariateKernel, KernelParams, ML2Params};

/// Right-hand side of a Cauchy problem.
#[derive(Clone, Default)]
pub enum Forcing {
    #[default]
    Zero,
    /// Σ c (t − origin)^γ, γ ≥ 0; convolutions are taken in closed form.
    Powers(PowerSum),
    /// Arbitrary evaluator of absolute time t.
    Function(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for Forcing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Forcing::Zero => write!(f, "Zero"),
            Forcing::Powers(p) => write!(f, "Powers({:?})", p.terms),
            Forcing::Function(_) => write!(f, "Function(..)"),
        }
    }
}

impl Forcing {
    pub fn constant(c: f64) -> Self {
        Forcing::Powers(PowerSum::monomial(c, 0.0))
    }

    pub fn function(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Forcing::Function(Arc::new(f))
    }

    /// Monotone-cubic interpolant of samples (t_i, f_i) in absolute time.
    pub fn sampled(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        let p = Pchip::new(times, values)?;
        Ok(Forcing::function(move |t| p.eval(t)))
    }

    /// Value at absolute time `t` for a problem with the given origin.
    pub fn eval(&self, t: f64, origin: f64) -> f64 {
        match self {
            Forcing::Zero => 0.0,
            Forcing::Powers(p) => {
                let tau = t - origin;
                p.terms
                    .iter()
                    .map(|&(c, g)| if g == 0.0 { c } else { c * tau.max(0.0).powf(g) })
                    .sum()
            }
            Forcing::Function(f) => f(t),
        }
    }

    fn validate(&self) -> Result<()> {
        if let Forcing::Powers(p) = self {
            for &(c, g) in &p.terms {
                check(c.is_finite(), "forcing coefficient", c, "finite")?;
                check(g >= 0.0, "forcing exponent", g, "exponent >= 0")?;
            }
        }
        Ok(())
    }
}

/// How the CP1/CP2 closed forms are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaReading {
    /// Brackets and convolutions exactly as in the literature form:
    /// y(0) = A + B, so any B ≠ 0 fails the initial-value self-check.
    AsPrinted,
    /// As printed with the B-bracket multiplied by t.
    TimeFactor,
    /// The inverse Laplace transform of the problem (default).
    #[default]
    Laplace,
}

/// Budget for the convolution quadratures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_panels: 2000,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        check(self.abs_tol > 0.0, "abs_tol", self.abs_tol, "abs_tol > 0")?;
        check(self.max_panels >= 1, "max_panels", self.max_panels as f64, "max_panels >= 1")
    }

    fn tolerance(&self) -> Tolerance {
        Tolerance::new(self.abs_tol, self.abs_tol, self.max_panels)
    }
}

#[derive(Debug, Clone)]
pub struct CP1Spec {
    pub alpha1: f64,
    pub alpha2: f64,
    pub mu: f64,
    pub lambda: f64,
    /// y(0)
    pub a: f64,
    /// y′(0)
    pub b: f64,
    pub forcing: Forcing,
}

impl CP1Spec {
    pub fn validate(&self) -> Result<()> {
        check(self.alpha1 > 1.0 && self.alpha1 < 2.0, "alpha1", self.alpha1, "1 < alpha1 < 2")?;
        check(self.alpha2 > 0.0 && self.alpha2 < 1.0, "alpha2", self.alpha2, "0 < alpha2 < 1")?;
        check(self.mu.is_finite(), "mu", self.mu, "finite")?;
        check(self.lambda.is_finite(), "lambda", self.lambda, "finite")?;
        check(self.a.is_finite(), "A", self.a, "finite")?;
        check(self.b.is_finite(), "B", self.b, "finite")?;
        self.forcing.validate()
    }
}

#[derive(Debug, Clone)]
pub struct CP2Spec {
    pub beta: f64,
    pub lambda: f64,
    /// Origin a.
    pub origin: f64,
    /// y(a)
    pub c: f64,
    /// y′(a)
    pub g: f64,
    pub forcing: Forcing,
}

impl CP2Spec {
    pub fn validate(&self) -> Result<()> {
        check(self.beta > 1.0 && self.beta <= 2.0, "beta", self.beta, "1 < beta <= 2")?;
        check(self.lambda.is_finite(), "lambda", self.lambda, "finite")?;
        check(self.origin >= 0.0, "a", self.origin, "a >= 0")?;
        check(self.c.is_finite(), "C", self.c, "finite")?;
        check(self.g.is_finite(), "G", self.g, "finite")?;
        self.forcing.validate()
    }
}

/// Reusable CP1 solution (kernel poles are located once).
#[derive(Debug, Clone)]
pub struct Cp1Solution {
    spec: CP1Spec,
    reading: FormulaReading,
    quad: QuadratureConfig,
    kernel: BivariateKernel,
}

impl Cp1Solution {
    pub fn new(spec: CP1Spec, reading: FormulaReading, quad: QuadratureConfig) -> Result<Self> {
        spec.validate()?;
        quad.validate()?;
        // At t = 0 every bracket reduces to its leading constant; the printed
        // reading gives y(0) = A + B.
        if reading == FormulaReading::AsPrinted && spec.b != 0.0 {
            return Err(Error::FormulaReading(format!(
                "as-printed CP1 solution gives y(0) = A + B = {} instead of A = {}",
                spec.a + spec.b,
                spec.a
            )));
        }
        let kernel = BivariateKernel::new(
            KernelParams {
                alpha1: spec.alpha1,
                alpha2: spec.alpha2,
                mu: spec.mu,
            },
            spec.lambda,
        )?;
        Ok(Self {
            spec,
            reading,
            quad,
            kernel,
        })
    }

    pub fn spec(&self) -> &CP1Spec {
        &self.spec
    }

    pub fn kernel(&self) -> &BivariateKernel {
        &self.kernel
    }

    fn e(&self, rho: f64, t: f64) -> Result<f64> {
        self.kernel.eval(rho, t)
    }

    /// G(τ) = τ^{α₁−1}E_{α₁}(τ), the impulse response.
    pub fn impulse(&self, tau: f64) -> Result<f64> {
        if tau <= 0.0 {
            return Ok(0.0);
        }
        Ok(tau.powf(self.spec.alpha1 - 1.0) * self.e(self.spec.alpha1, tau)?)
    }

    /// Replaces the initial data, keeping the kernel.
    pub fn with_initial_data(&self, a: f64, b: f64) -> Result<Self> {
        if self.reading == FormulaReading::AsPrinted && b != 0.0 {
            return Err(Error::FormulaReading("as-printed CP1 solution gives y(0) = A + B".into()));
        }
        let mut out = self.clone();
        out.spec.a = a;
        out.spec.b = b;
        Ok(out)
    }

    /// The three parts [P, Q, F] of y = A·P + B·Q + F at t ≥ 0: the
    /// responses to unit initial value, unit initial slope, and the forcing.
    pub fn parts(&self, t: f64) -> Result<[f64; 3]> {
        check(t >= 0.0, "t", t, "t >= 0")?;
        let s = &self.spec;
        let d = s.alpha1 - s.alpha2;
        let (p, q) = match self.reading {
            FormulaReading::Laplace => (
                1.0 - s.lambda * t.powf(s.alpha1) * self.e(s.alpha1 + 1.0, t)?,
                t * self.e(2.0, t)?,
            ),
            FormulaReading::AsPrinted | FormulaReading::TimeFactor => {
                let p = 1.0 - s.mu * t.powf(d) * self.e(d + 1.0, t)?;
                let mut q = 1.0 - s.mu * t.powf(d) * self.e(d + 2.0, t)? - s.lambda * t.powf(s.alpha1) * self.e(s.alpha1 + 2.0, t)?;
                if self.reading == FormulaReading::TimeFactor {
                    q *= t;
                }
                (p, q)
            }
        };
        Ok([p, q, self.forced(t, false)?])
    }

    /// Time derivatives [P′, Q′, F′] at t > 0 (Laplace reading only).
    pub fn derivative_parts(&self, t: f64) -> Result<[f64; 3]> {
        check(t > 0.0, "t", t, "t > 0")?;
        if self.reading != FormulaReading::Laplace {
            return Err(Error::FormulaReading("derivative is only available for the Laplace reading".into()));
        }
        let s = &self.spec;
        Ok([
            -s.lambda * t.powf(s.alpha1 - 1.0) * self.e(s.alpha1, t)?,
            self.e(1.0, t)?,
            self.forced(t, true)?,
        ])
    }

    /// y(t) for t ≥ 0.
    pub fn eval(&self, t: f64) -> Result<f64> {
        check(t >= 0.0, "t", t, "t >= 0")?;
        let s = &self.spec;
        if s.a == 0.0 && s.b == 0.0 {
            return self.forced(t, false);
        }
        let [p, q, f] = self.parts(t)?;
        Ok(s.a * p + s.b * q + f)
    }

    /// y′(t) for t > 0 (Laplace reading).
    pub fn derivative(&self, t: f64) -> Result<f64> {
        let [p, q, f] = self.derivative_parts(t)?;
        Ok(self.spec.a * p + self.spec.b * q + f)
    }

    /// Forcing contribution, or its time derivative.
    fn forced(&self, t: f64, derivative: bool) -> Result<f64> {
        let s = &self.spec;
        if t == 0.0 {
            return Ok(0.0);
        }
        let a1 = s.alpha1;
        match (&s.forcing, self.reading) {
            (Forcing::Zero, _) => Ok(0.0),
            (Forcing::Powers(p), FormulaReading::Laplace) => {
                // G ∗ τ^γ = Γ(γ+1) t^{α₁+γ} E_{α₁+γ+1}(t)
                let mut acc = 0.0;
                for &(c, g) in &p.terms {
                    if c == 0.0 {
                        continue;
                    }
                    let r = a1 + g + if derivative { 0.0 } else { 1.0 };
                    acc += c * gamma(g + 1.0)? * t.powf(r - 1.0) * self.e(r, t)?;
                }
                Ok(acc)
            }
            (f, FormulaReading::Laplace) => {
                let tol = self.quad.tolerance();
                let r = if derivative {
                    // G′(τ) = τ^{α₁−2}E_{α₁−1}(τ), integrable at τ = 0
                    integrate_result(
                        |u| {
                            let tau = t - u;
                            if tau <= 0.0 {
                                return Ok(0.0);
                            }
                            Ok(tau.powf(a1 - 2.0) * self.e(a1 - 1.0, tau)? * f.eval(u, 0.0))
                        },
                        &[0.0, t],
                        tol,
                    )?
                } else {
                    integrate_result(|u| Ok(self.impulse(t - u)? * f.eval(u, 0.0)), &[0.0, t], tol)?
                };
                Ok(r)
            }
            (f, _) => {
                if derivative {
                    return Err(Error::FormulaReading("derivative is only available for the Laplace reading".into()));
                }
                integrate_result(|u| Ok(self.impulse(u)? * f.eval(u, 0.0)), &[0.0, t], self.quad.tolerance())
            }
        }
    }
}

/// Adaptive quadrature of a fallible integrand; the first error wins.
fn integrate_result(mut f: impl FnMut(f64) -> Result<f64>, points: &[f64], tol: Tolerance) -> Result<f64> {
    let mut err: Option<Error> = None;
    let r = quad::integrate(
        |x| match f(x) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                0.0
            }
        },
        points,
        tol,
    );
    if let Some(e) = err {
        return Err(e);
    }
    Ok(r?.value)
}

/// Reusable CP2 solution.
#[derive(Debug, Clone)]
pub struct Cp2Solution {
    spec: CP2Spec,
    reading: FormulaReading,
    quad: QuadratureConfig,
}

impl Cp2Solution {
    pub fn new(spec: CP2Spec, reading: FormulaReading, quad: QuadratureConfig) -> Result<Self> {
        spec.validate()?;
        quad.validate()?;
        Ok(Self { spec, reading, quad })
    }

    pub fn spec(&self) -> &CP2Spec {
        &self.spec
    }

    /// E_{β,ρ}(−λτ^β).
    fn e(&self, rho: f64, tau: f64) -> Result<f64> {
        if tau == 0.0 {
            return Ok(rgamma(rho));
        }
        let b = self.spec.beta;
        ml2(ML2Params::new(b, rho)?, -self.spec.lambda * tau.powf(b))
    }

    /// τ^{β−1}E_{β,β}(−λτ^β).
    pub fn impulse(&self, tau: f64) -> Result<f64> {
        if tau <= 0.0 {
            return Ok(0.0);
        }
        Ok(tau.powf(self.spec.beta - 1.0) * self.e(self.spec.beta, tau)?)
    }

    /// Replaces the data at the origin, keeping everything else.
    pub fn with_initial_data(&self, c: f64, g: f64) -> Self {
        let mut out = self.clone();
        out.spec.c = c;
        out.spec.g = g;
        out
    }

    /// [E_{β,1}, τE_{β,2}, F] at t ≥ a, so that y = C·e₁ + G·e₂ + F.
    pub fn parts(&self, t: f64) -> Result<[f64; 3]> {
        let s = &self.spec;
        check(t >= s.origin, "t", t, "t >= a")?;
        let tau = t - s.origin;
        Ok([self.e(1.0, tau)?, tau * self.e(2.0, tau)?, self.forced(tau, false)?])
    }

    /// Time derivatives of [`parts`](Self::parts) at t > a (Laplace reading).
    pub fn derivative_parts(&self, t: f64) -> Result<[f64; 3]> {
        let s = &self.spec;
        check(t > s.origin, "t", t, "t > a")?;
        if self.reading != FormulaReading::Laplace {
            return Err(Error::FormulaReading("derivative is only available for the Laplace reading".into()));
        }
        let tau = t - s.origin;
        let b = s.beta;
        Ok([
            -s.lambda * tau.powf(b - 1.0) * self.e(b, tau)?,
            self.e(1.0, tau)?,
            self.forced(tau, true)?,
        ])
    }

    /// y(t) for t ≥ a.
    pub fn eval(&self, t: f64) -> Result<f64> {
        let s = &self.spec;
        check(t >= s.origin, "t", t, "t >= a")?;
        if s.c == 0.0 && s.g == 0.0 {
            return self.forced(t - s.origin, false);
        }
        let [e1, e2, f] = self.parts(t)?;
        Ok(s.c * e1 + s.g * e2 + f)
    }

    /// y′(t) for t > a.
    pub fn derivative(&self, t: f64) -> Result<f64> {
        let [e1, e2, f] = self.derivative_parts(t)?;
        Ok(self.spec.c * e1 + self.spec.g * e2 + f)
    }

    fn forced(&self, tau: f64, derivative: bool) -> Result<f64> {
        let s = &self.spec;
        if tau == 0.0 {
            return Ok(0.0);
        }
        let (b, a) = (s.beta, s.origin);
        match (&s.forcing, self.reading) {
            (Forcing::Zero, _) => Ok(0.0),
            (Forcing::Powers(p), FormulaReading::Laplace) => {
                let mut acc = 0.0;
                for &(c, g) in &p.terms {
                    if c == 0.0 {
                        continue;
                    }
                    let r = b + g + if derivative { 0.0 } else { 1.0 };
                    acc += c * gamma(g + 1.0)? * tau.powf(r - 1.0) * self.e(r, tau)?;
                }
                Ok(acc)
            }
            (f, FormulaReading::Laplace) => {
                let tol = self.quad.tolerance();
                if derivative {
                    integrate_result(
                        |u| {
                            let w = tau - u;
                            if w <= 0.0 {
                                return Ok(0.0);
                            }
                            Ok(w.powf(b - 2.0) * self.e(b - 1.0, w)? * f.eval(a + u, a))
                        },
                        &[0.0, tau],
                        tol,
                    )
                } else {
                    integrate_result(|u| Ok(self.impulse(tau - u)? * f.eval(a + u, a)), &[0.0, tau], tol)
                }
            }
            (f, _) => {
                if derivative {
                    return Err(Error::FormulaReading("derivative is only available for the Laplace reading".into()));
                }
                integrate_result(|u| Ok(self.impulse(u)? * f.eval(a + u, a)), &[0.0, tau], self.quad.tolerance())
            }
        }
    }
}

/// CP1 solution at `t` under the default reading and quadrature budget.
pub fn solve_cp1(spec: &CP1Spec, t: f64) -> Result<f64> {
    Cp1Solution::new(spec.clone(), FormulaReading::default(), QuadratureConfig::default())?.eval(t)
}

/// CP2 solution at `t` under the default reading and quadrature budget.
pub fn solve_cp2(spec: &CP2Spec, t: f64) -> Result<f64> {
    Cp2Solution::new(spec.clone(), FormulaReading::default(), QuadratureConfig::default())?.eval(t)
}

fn oracle_grid(horizon: f64, step: f64) -> Result<usize> {
    check(horizon > 0.0, "horizon", horizon, "horizon > 0")?;
    check(
        step > 0.0 && step <= horizon / 100.0,
        "step",
        step,
        "0 < step <= horizon/100",
    )?;
    Ok((horizon / step).round() as usize + 1)
}

/// Implicit product-trapezoid stepping of the Volterra form of CP1,
/// y = A + Bt − μI^{α₁−α₂}(y − A) − λI^{α₁}y + I^{α₁}f, on [0, horizon].
pub fn oracle_cp1(spec: &CP1Spec, horizon: f64, step: f64) -> Result<UniformGridFn> {
    spec.validate()?;
    let n = oracle_grid(horizon, step)?;
    let d = spec.alpha1 - spec.alpha2;
    let wd = ProductTrapezoid::new(d, step, n)?;
    let wa = ProductTrapezoid::new(spec.alpha1, step, n)?;
    let f: Vec<f64> = (0..n).map(|k| spec.forcing.eval(k as f64 * step, 0.0)).collect();
    let mut y = vec![0.0; n];
    let mut shifted = vec![0.0; n];
    y[0] = spec.a;
    for k in 1..n {
        let t = k as f64 * step;
        let pivot = 1.0 + spec.mu * wd.diagonal(k) + spec.lambda * wa.diagonal(k);
        if pivot.abs() < 1e-14 {
            return Err(Error::LinearSolve {
                step: k,
                h: step,
                order: spec.alpha1,
                pivot,
            });
        }
        let rhs = spec.a + spec.b * t - spec.mu * (wd.history(k, &shifted) - wd.diagonal(k) * spec.a)
            - spec.lambda * wa.history(k, &y)
            + wa.history(k, &f)
            + wa.diagonal(k) * f[k];
        y[k] = rhs / pivot;
        shifted[k] = y[k] - spec.a;
    }
    UniformGridFn::new(0.0, step, y)
}

/// As [`oracle_cp1`] for CP2 on [a, a + horizon]:
/// y = C + G(t−a) − λI^β_a y + I^β_a f.
pub fn oracle_cp2(spec: &CP2Spec, horizon: f64, step: f64) -> Result<UniformGridFn> {
    spec.validate()?;
    let n = oracle_grid(horizon, step)?;
    let a = spec.origin;
    let w = ProductTrapezoid::new(spec.beta, step, n)?;
    let f: Vec<f64> = (0..n).map(|k| spec.forcing.eval(a + k as f64 * step, a)).collect();
    let mut y = vec![0.0; n];
    y[0] = spec.c;
    for k in 1..n {
        let tau = k as f64 * step;
        let pivot = 1.0 + spec.lambda * w.diagonal(k);
        if pivot.abs() < 1e-14 {
            return Err(Error::LinearSolve {
                step: k,
                h: step,
                order: spec.beta,
                pivot,
            });
        }
        let rhs = spec.c + spec.g * tau - spec.lambda * w.history(k, &y) + w.history(k, &f) + w.diagonal(k) * f[k];
        y[k] = rhs / pivot;
    }
    UniformGridFn::new(a, step, y)
}
