//! Gamma, two-parameter and bivariate Mittag-Leffler functions.
//!
//! Small arguments are summed directly. Large negative arguments, where the
//! alternating series cancels catastrophically in double precision, are
//! evaluated by inverting the Laplace transform of the function along a
//! keyhole contour (see [`laplace`]).

pub mod gamma;
pub mod laplace;
pub mod series;

use serde::{Deserialize, Serialize};

use crate::error::{check, Error, Result};
pub use gamma::{gamma, ln_gamma_signed, rgamma};
use laplace::{find_poles, invert_unit, PoleSet, PowerSum};
use series::SeriesSum;

/// Radius (in s) of the dominant singularity below which summation is used.
const SERIES_RADIUS: f64 = 3.0;
/// Largest acceptable Σ|term| / max(1, |sum|) for a series result.
const MAX_AMPLIFICATION: f64 = 100.0;

/// Parameters of E_{α,β}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ML2Params {
    pub alpha: f64,
    pub beta: f64,
}

impl ML2Params {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let p = Self { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        check(self.alpha > 0.0 && self.alpha.is_finite(), "alpha", self.alpha, "alpha > 0")?;
        check(self.beta.is_finite(), "beta", self.beta, "finite beta")
    }
}

/// Parameters of E_{(α,β),ρ}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MLBVParams {
    pub alpha: f64,
    pub beta: f64,
    pub rho: f64,
}

impl MLBVParams {
    pub fn new(alpha: f64, beta: f64, rho: f64) -> Result<Self> {
        let p = Self { alpha, beta, rho };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        check(self.alpha > 0.0 && self.alpha.is_finite(), "alpha", self.alpha, "alpha > 0")?;
        check(self.beta > 0.0 && self.beta.is_finite(), "beta", self.beta, "beta > 0")?;
        check(self.rho > 0.0 && self.rho.is_finite(), "rho", self.rho, "rho > 0")
    }
}

/// When to stop summing: the magnitude of the current block (one term for
/// E_{α,β}, all terms of total degree n for the bivariate function) must
/// fall below `tol` after three consecutive decreases.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationPolicy {
    pub tol: f64,
    pub max_terms: usize,
}

impl TruncationPolicy {
    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        check(tol > 0.0 && tol < 1.0, "tol", tol, "0 < tol < 1")?;
        check(max_terms >= 16, "max_terms", max_terms as f64, "max_terms >= 16")?;
        Ok(Self { tol, max_terms })
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            tol: 1e-18,
            max_terms: 5000,
        }
    }
}

/// Which Γ argument pairs with the power x^k y^{n−k} in the double sum.
///
/// * `Multinomial`: Γ(ρ + αk + β(n−k)), α tied to x. Symmetric under
///   (α,x) ↔ (β,y) and the kernel of two-term fractional equations.
/// * `AsPrinted`: Γ(ρ + αn + βk); equals `Multinomial` with exponents
///   (α+β, α).
/// * `Transposed`: Γ(ρ + α(n−k) + βk); equals `Multinomial` with (β, α).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaConvention {
    #[default]
    Multinomial,
    AsPrinted,
    Transposed,
}

impl GammaConvention {
    /// Exponents (a_x, a_y) of the equivalent multinomial series.
    pub fn exponents(self, alpha: f64, beta: f64) -> (f64, f64) {
        match self {
            GammaConvention::Multinomial => (alpha, beta),
            GammaConvention::AsPrinted => (alpha + beta, alpha),
            GammaConvention::Transposed => (beta, alpha),
        }
    }
}

fn accept_series(s: &SeriesSum) -> bool {
    s.abs_sum <= MAX_AMPLIFICATION * s.value.abs().max(1.0)
}

fn cancellation(s: &SeriesSum) -> Error {
    Error::Cancellation {
        abs_sum: s.abs_sum,
        partial_sum: s.value,
    }
}

/// E_{α,β}(z) with the default truncation policy.
pub fn ml2(p: ML2Params, z: f64) -> Result<f64> {
    ml2_with(p, z, TruncationPolicy::default())
}

/// E_{α,β}(z) = Σ_k z^k/Γ(αk+β).
pub fn ml2_with(p: ML2Params, z: f64, policy: TruncationPolicy) -> Result<f64> {
    p.validate()?;
    if !z.is_finite() {
        return Err(Error::Domain(format!("ml2 argument must be finite, got {z}")));
    }
    if z == 0.0 {
        return Ok(rgamma(p.beta));
    }
    if z < 0.0 && p.alpha == 1.0 {
        return ml1_negative(p.beta, z, policy);
    }
    if z > 0.0 || z.abs() <= SERIES_RADIUS.powf(p.alpha) {
        let s = series::ml2_sum(p.alpha, p.beta, z, policy)?;
        if z > 0.0 || accept_series(&s) {
            return Ok(s.value);
        }
    }
    ml2_contour(p, z)
}

/// Raw truncated series for E_{α,β}(z), without routing.
pub fn ml2_series(p: ML2Params, z: f64, policy: TruncationPolicy) -> Result<SeriesSum> {
    p.validate()?;
    series::ml2_sum(p.alpha, p.beta, z, policy)
}

/// E_{α,β}(z) for z < 0 by inversion of s^{α−β}/(s^α − z).
pub fn ml2_contour(p: ML2Params, z: f64) -> Result<f64> {
    p.validate()?;
    if !(z < 0.0) {
        return Err(Error::Domain(format!("contour route needs z < 0, got {z}")));
    }
    let num = PowerSum::monomial(1.0, p.alpha - p.beta);
    let den = PowerSum::new(vec![(1.0, p.alpha), (-z, 0.0)]);
    let poles = find_poles(&den)?;
    invert_unit(&num, &den, &poles)
}

/// E_{1,β}(z), z < 0: Kummer's transformation for moderate |z| and the
/// algebraic expansion −Σ z^{−k}/Γ(β−k) once e^{z} is negligible.
fn ml1_negative(beta: f64, z: f64, policy: TruncationPolicy) -> Result<f64> {
    if beta < 1.0 {
        // E_{1,β}(z) = 1/Γ(β) + z E_{1,β+1}(z)
        return Ok(rgamma(beta) + z * ml1_negative(beta + 1.0, z, policy)?);
    }
    let w = -z;
    if w > 45.0 {
        let mut acc = series::Accumulator::default();
        let mut prev = f64::INFINITY;
        for k in 1..policy.max_terms {
            let t = -term_pow(z, -(k as i32)) * rgamma(beta - k as f64);
            if t.abs() > prev && k > 2 {
                break;
            }
            acc.add(t);
            if t.abs() < 1e-17 * acc.value().abs().max(1e-300) {
                break;
            }
            if t != 0.0 {
                prev = t.abs();
            }
        }
        return Ok(acc.value());
    }
    // ₁F₁(β−1; β; w) = Σ (β−1)/(β−1+k) w^k/k!
    let mut acc = series::Accumulator::default();
    let mut pw = 1.0;
    acc.add(1.0);
    for k in 1..policy.max_terms {
        pw *= w / k as f64;
        let c = if beta == 1.0 { 0.0 } else { (beta - 1.0) / (beta - 1.0 + k as f64) };
        let t = c * pw;
        acc.add(t);
        if pw < 1e-17 * acc.value() && k as f64 > w {
            return Ok(z.exp() * acc.value() * rgamma(beta));
        }
    }
    Err(Error::NonConvergence {
        terms: policy.max_terms,
        last_block: pw,
        partial_sum: acc.value(),
    })
}

fn term_pow(z: f64, k: i32) -> f64 {
    z.powi(k)
}

/// E_{(α,β),ρ}(x, y) with the default convention and policy.
pub fn mlbv(p: MLBVParams, x: f64, y: f64) -> Result<f64> {
    mlbv_with(p, x, y, GammaConvention::default(), TruncationPolicy::default())
}

/// E_{(α,β),ρ}(x, y) under an explicit Γ-argument convention.
pub fn mlbv_with(p: MLBVParams, x: f64, y: f64, convention: GammaConvention, policy: TruncationPolicy) -> Result<f64> {
    p.validate()?;
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::Domain(format!("mlbv arguments must be finite, got ({x}, {y})")));
    }
    let (ax, ay) = convention.exponents(p.alpha, p.beta);
    bivariate(ax, ay, p.rho, x, y, policy, None)
}

/// Raw truncated double sum, without routing.
pub fn mlbv_series(p: MLBVParams, x: f64, y: f64, convention: GammaConvention, policy: TruncationPolicy) -> Result<SeriesSum> {
    p.validate()?;
    let (ax, ay) = convention.exponents(p.alpha, p.beta);
    series::bivariate_sum(ax, ay, p.rho, x, y, policy)
}

/// Contour evaluation of the multinomial-convention function for x, y ≤ 0.
pub fn mlbv_contour(p: MLBVParams, x: f64, y: f64) -> Result<f64> {
    p.validate()?;
    bivariate_contour(p.alpha, p.beta, p.rho, x, y, None)
}

/// The same function evaluated with swapped parameter and argument pairs,
/// E_{(β,α),ρ}(y, x), as an independent path.
pub fn mlbv_symmetric(p: MLBVParams, x: f64, y: f64) -> Result<f64> {
    mlbv_symmetric_with(p, x, y, GammaConvention::default(), TruncationPolicy::default())
}

pub fn mlbv_symmetric_with(
    p: MLBVParams,
    x: f64,
    y: f64,
    convention: GammaConvention,
    policy: TruncationPolicy,
) -> Result<f64> {
    let swapped = MLBVParams::new(p.beta, p.alpha, p.rho)?;
    mlbv_with(swapped, y, x, convention, policy)
}

fn bivariate(ax: f64, ay: f64, rho: f64, x: f64, y: f64, policy: TruncationPolicy, poles: Option<&PoleSet>) -> Result<f64> {
    if x == 0.0 && y == 0.0 {
        return Ok(rgamma(rho));
    }
    if x == 0.0 {
        return ml2_with(ML2Params { alpha: ay, beta: rho }, y, policy);
    }
    if y == 0.0 {
        return ml2_with(ML2Params { alpha: ax, beta: rho }, x, policy);
    }
    let nonpositive = x <= 0.0 && y <= 0.0;
    let near = x.abs() * SERIES_RADIUS.powf(-ax) + y.abs() * SERIES_RADIUS.powf(-ay) <= 1.0;
    if near || !nonpositive {
        let s = series::bivariate_sum(ax, ay, rho, x, y, policy)?;
        if accept_series(&s) || (x >= 0.0 && y >= 0.0) {
            return Ok(s.value);
        }
        if !nonpositive {
            if s.abs_sum * f64::EPSILON <= 1e-10 * s.value.abs().max(1.0) {
                return Ok(s.value);
            }
            return Err(cancellation(&s));
        }
    }
    bivariate_contour(ax, ay, rho, x, y, poles)
}

fn bivariate_contour(ax: f64, ay: f64, rho: f64, x: f64, y: f64, poles: Option<&PoleSet>) -> Result<f64> {
    if x > 0.0 || y > 0.0 {
        return Err(Error::Domain(format!(
            "contour route needs nonpositive arguments, got ({x}, {y})"
        )));
    }
    let num = PowerSum::monomial(1.0, -rho);
    let den = PowerSum::new(vec![(1.0, 0.0), (-x, -ax), (-y, -ay)]).simplified();
    match poles {
        Some(p) => invert_unit(&num, &den, p),
        None => invert_unit(&num, &den, &find_poles(&den)?),
    }
}

/// Orders and damping that fix the solution kernel of
/// D^{α₁}y + μD^{α₂}y + λy = f.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelParams {
    pub alpha1: f64,
    pub alpha2: f64,
    pub mu: f64,
}

/// E_{(α₁−α₂, α₁),ρ}(−μt^{α₁−α₂}, −λt^{α₁}) as a function of (ρ, t) for
/// fixed (α₁, α₂, μ, λ). Poles of the underlying transform are found once.
/// Negative μ or λ give growing kernels that are summed directly.
#[derive(Debug, Clone)]
pub struct BivariateKernel {
    params: KernelParams,
    lambda: f64,
    poles: Option<PoleSet>,
}

impl BivariateKernel {
    pub fn new(params: KernelParams, lambda: f64) -> Result<Self> {
        check(params.alpha1 > 0.0, "alpha1", params.alpha1, "alpha1 > 0")?;
        check(
            params.alpha2 > 0.0 && params.alpha2 < params.alpha1,
            "alpha2",
            params.alpha2,
            "0 < alpha2 < alpha1",
        )?;
        check(params.mu.is_finite(), "mu", params.mu, "finite mu")?;
        check(lambda.is_finite(), "lambda", lambda, "finite lambda")?;
        let a1 = params.alpha1 - params.alpha2;
        let poles = if params.mu >= 0.0 && lambda >= 0.0 {
            let den = PowerSum::new(vec![(1.0, 0.0), (params.mu, -a1), (lambda, -params.alpha1)]).simplified();
            Some(find_poles(&den)?)
        } else {
            None
        };
        Ok(Self {
            params,
            lambda,
            poles,
        })
    }

    pub fn params(&self) -> KernelParams {
        self.params
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The two arguments (−μt^{α₁−α₂}, −λt^{α₁}).
    pub fn arguments(&self, t: f64) -> (f64, f64) {
        let a1 = self.params.alpha1 - self.params.alpha2;
        (-self.params.mu * t.powf(a1), -self.lambda * t.powf(self.params.alpha1))
    }

    pub fn eval(&self, rho: f64, t: f64) -> Result<f64> {
        check(rho > 0.0, "rho", rho, "rho > 0")?;
        check(t >= 0.0, "t", t, "t >= 0")?;
        if t == 0.0 {
            return Ok(rgamma(rho));
        }
        let a1 = self.params.alpha1 - self.params.alpha2;
        let (x, y) = self.arguments(t);
        let poles = self.poles.as_ref().map(|p| p.rescaled(t));
        bivariate(a1, self.params.alpha1, rho, x, y, TruncationPolicy::default(), poles.as_ref())
    }
}

/// E_{(α₁−α₂, α₁),ρ}(−μt^{α₁−α₂}, −λt^{α₁}).
pub fn kernel_e(params: KernelParams, rho: f64, lambda: f64, t: f64) -> Result<f64> {
    BivariateKernel::new(params, lambda)?.eval(rho, t)
}
