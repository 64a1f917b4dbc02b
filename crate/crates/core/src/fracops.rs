//! Grid-based Riemann–Liouville integral and Riemann–Liouville / Caputo
//! derivatives on uniform grids.
//!
//! The integral uses product integration against the piecewise-linear
//! interpolant of the samples (exact for piecewise-linear data). The Caputo
//! derivative uses the L1 scheme for orders in (0,1); for orders in (1,2)
//! the L1 scheme of order α−1 is applied to derivative samples, which makes
//! it a second-difference scheme.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::rgamma;

/// Samples `values[i] = f(origin + i·step)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniformGridFn {
    pub origin: f64,
    pub step: f64,
    pub values: Vec<f64>,
}

impl UniformGridFn {
    pub fn new(origin: f64, step: f64, values: Vec<f64>) -> Result<Self> {
        if !(step > 0.0) || !step.is_finite() {
            return Err(Error::InvalidParameter {
                name: "step",
                value: step,
                constraint: "step > 0",
            });
        }
        if values.len() < 3 {
            return Err(Error::Resolution(format!(
                "grid function needs at least 3 nodes, got {}",
                values.len()
            )));
        }
        Ok(Self { origin, step, values })
    }

    /// Samples `f` at `n` nodes.
    pub fn sample(origin: f64, step: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = (0..n).map(|i| f(origin + i as f64 * step)).collect();
        Self::new(origin, step, values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Abscissa of node i.
    pub fn node(&self, i: usize) -> f64 {
        self.origin + i as f64 * self.step
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |i| self.node(i))
    }

    fn with_values(&self, values: Vec<f64>) -> Self {
        Self {
            origin: self.origin,
            step: self.step,
            values,
        }
    }
}

/// Generalized binomial coefficient C(p, i).
fn binom(p: f64, i: usize) -> f64 {
    let mut c = 1.0;
    for j in 0..i {
        c *= (p - j as f64) / (j as f64 + 1.0);
    }
    c
}

/// (m+1)^q − m^q, without cancellation for large m.
pub(crate) fn pow_diff1(m: f64, q: f64) -> f64 {
    if m < 16.0 {
        return (m + 1.0).powf(q) - m.powf(q);
    }
    let x = 1.0 / m;
    let mut s = 0.0;
    let mut xi = 1.0;
    for i in 1..24 {
        xi *= x;
        s += binom(q, i) * xi;
    }
    m.powf(q) * s
}

/// (m+1)^p − 2m^p + (m−1)^p for m ≥ 1.
fn pow_diff2(m: f64, p: f64) -> f64 {
    if m < 16.0 {
        return (m + 1.0).powf(p) - 2.0 * m.powf(p) + (m - 1.0).powf(p);
    }
    let x2 = 1.0 / (m * m);
    let mut s = 0.0;
    let mut xi = 1.0;
    for j in 1..12 {
        xi *= x2;
        s += binom(p, 2 * j) * xi;
    }
    2.0 * m.powf(p) * s
}

/// (k−1)^{α+1} − (k−α−1)k^α for k ≥ 1.
fn start_weight(k: f64, alpha: f64) -> f64 {
    let p = alpha + 1.0;
    if k < 16.0 {
        return (k - 1.0).powf(p) - (k - p) * k.powf(alpha);
    }
    // k^p [(1 − 1/k)^p − 1 + p/k]
    let x = -1.0 / k;
    let mut s = 0.0;
    let mut xi = x;
    for i in 2..26 {
        xi *= x;
        s += binom(p, i) * xi * k;
    }
    k.powf(alpha) * s
}

/// Product-trapezoid weights of I^α on a uniform grid:
/// (I^α f)(t_k) ≈ Σ_j w_{k,j} f_j.
#[derive(Debug, Clone)]
pub struct ProductTrapezoid {
    alpha: f64,
    scale: f64,
    diag: Vec<f64>,
    start: Vec<f64>,
}

impl ProductTrapezoid {
    pub fn new(alpha: f64, step: f64, n: usize) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Domain(format!("fractional integral needs alpha > 0, got {alpha}")));
        }
        let scale = step.powf(alpha) * rgamma(alpha + 2.0);
        let diag = (0..n)
            .map(|m| if m == 0 { 1.0 } else { pow_diff2(m as f64, alpha + 1.0) })
            .collect();
        let start = (0..n)
            .map(|k| if k == 0 { 0.0 } else { start_weight(k as f64, alpha) })
            .collect();
        Ok(Self {
            alpha,
            scale,
            diag,
            start,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// w_{k,j} for 0 ≤ j ≤ k.
    pub fn weight(&self, k: usize, j: usize) -> f64 {
        if k == 0 {
            0.0
        } else if j == 0 {
            self.scale * self.start[k]
        } else {
            self.scale * self.diag[k - j]
        }
    }

    /// Σ_{j<k} w_{k,j} f_j (the history part of node k).
    pub fn history(&self, k: usize, f: &[f64]) -> f64 {
        if k == 0 {
            return 0.0;
        }
        let mut s = self.start[k] * f[0];
        for j in 1..k {
            s += self.diag[k - j] * f[j];
        }
        self.scale * s
    }

    /// w_{k,k}.
    pub fn diagonal(&self, k: usize) -> f64 {
        if k == 0 {
            0.0
        } else {
            self.scale
        }
    }
}

/// I^α f on the grid of `f`, with the operator's origin at `f.origin`.
pub fn rl_integral(f: &UniformGridFn, alpha: f64) -> Result<UniformGridFn> {
    let n = f.len();
    let w = ProductTrapezoid::new(alpha, f.step, n)?;
    let values = (0..n)
        .map(|k| w.history(k, &f.values) + w.diagonal(k) * f.values[k])
        .collect();
    Ok(f.with_values(values))
}

fn check_order(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 2.0) || alpha == 1.0 {
        return Err(Error::Domain(format!(
            "fractional derivative order must lie in (0,1) ∪ (1,2), got {alpha}"
        )));
    }
    Ok(())
}

/// L1 weights b_m = (m+1)^{1−q} − m^{1−q}, m < n.
fn l1_weights(q: f64, n: usize) -> Vec<f64> {
    (0..n).map(|m| pow_diff1(m as f64, 1.0 - q)).collect()
}

/// L1 sum c Σ_{j<k} b_{k−1−j}(g_{j+1} − g_j) at every node.
fn l1(g: &[f64], b: &[f64], c: f64) -> Vec<f64> {
    let n = g.len();
    let d: Vec<f64> = g.windows(2).map(|w| w[1] - w[0]).collect();
    (0..n)
        .map(|k| {
            let mut s = 0.0;
            for j in 0..k {
                s += b[k - 1 - j] * d[j];
            }
            c * s
        })
        .collect()
}

/// Derivative samples: central differences inside, second-order one-sided
/// at the right end, and at the left end either `slope` or a one-sided
/// estimate.
fn derivative_samples(f: &[f64], h: f64, slope: Option<f64>) -> Vec<f64> {
    let n = f.len();
    let mut v = vec![0.0; n];
    v[0] = slope.unwrap_or((-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h));
    for j in 1..n - 1 {
        v[j] = (f[j + 1] - f[j - 1]) / (2.0 * h);
    }
    v[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    v
}

/// Solves the small dense system m·x = r in place (partial pivoting).
fn solve_dense(mut m: Vec<Vec<f64>>, mut r: Vec<f64>) -> Option<Vec<f64>> {
    let n = r.len();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs()))?;
        if m[p][c].abs() < 1e-300 {
            return None;
        }
        m.swap(c, p);
        r.swap(c, p);
        for i in c + 1..n {
            let f = m[i][c] / m[c][c];
            for j in c..n {
                m[i][j] -= f * m[c][j];
            }
            r[i] -= f * r[c];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| m[i][j] * x[j]).sum();
        x[i] = (r[i] - s) / m[i][i];
    }
    Some(x)
}

/// Discrete Caputo operator of order α ∈ (0,1) ∪ (1,2) on a fixed uniform
/// grid, optionally with starting corrections.
///
/// Polynomial-interpolation schemes are not exact for (t−origin)^σ with
/// non-integer σ, and for σ close to α the resulting error near the origin
/// does not shrink with h. Listing such exponents adds starting weights on
/// the first few samples that make the operator exact for them (together
/// with 1 and t). The origin node itself is left at 0.
#[derive(Debug, Clone)]
pub struct CaputoOperator {
    alpha: f64,
    step: f64,
    len: usize,
    known_slope: bool,
    b: Vec<f64>,
    c: f64,
    /// corr[k][j]: weight of sample j at node k.
    corr: Vec<Vec<f64>>,
}

impl CaputoOperator {
    /// `known_slope` selects whether [`apply`](Self::apply) is given the
    /// exact f′(origin) (only used when α > 1).
    pub fn new(alpha: f64, step: f64, len: usize, known_slope: bool, exponents: &[f64]) -> Result<Self> {
        check_order(alpha)?;
        if len < 3 {
            return Err(Error::Resolution("Caputo derivative needs at least 3 nodes".into()));
        }
        let known_slope = known_slope && alpha > 1.0;
        let q = if alpha < 1.0 { alpha } else { alpha - 1.0 };
        let mut op = Self {
            alpha,
            step,
            len,
            known_slope,
            b: l1_weights(q, len),
            c: step.powf(-q) * rgamma(2.0 - q),
            corr: Vec::new(),
        };
        let mut basis = vec![0.0, 1.0];
        for &s in exponents {
            if !(s > 0.0) || !s.is_finite() {
                return Err(Error::Domain(format!("correction exponent must be positive, got {s}")));
            }
            if basis.iter().all(|&e: &f64| (e - s).abs() > 1e-9) {
                basis.push(s);
            }
        }
        if basis.len() > 2 {
            op.corr = op.starting_weights(&basis)?;
        }
        Ok(op)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn base(&self, values: &[f64], slope: Option<f64>) -> Vec<f64> {
        if self.alpha < 1.0 {
            l1(values, &self.b, self.c)
        } else {
            let v = derivative_samples(values, self.step, if self.known_slope { slope } else { None });
            l1(&v, &self.b, self.c)
        }
    }

    fn starting_weights(&self, basis: &[f64]) -> Result<Vec<Vec<f64>>> {
        let m = basis.len();
        if self.len < m + 2 {
            return Err(Error::Resolution(format!(
                "{m} starting weights need at least {} nodes",
                m + 2
            )));
        }
        let h = self.step;
        let pw = |j: usize, s: f64| if s == 0.0 { 1.0 } else { (j as f64).powf(s) };
        // error of the base scheme on g(t) = ((t−origin)/h)^σ
        let errors: Vec<Vec<f64>> = basis
            .iter()
            .map(|&s| {
                let g: Vec<f64> = (0..self.len).map(|j| pw(j, s)).collect();
                let slope = if s == 1.0 { 1.0 / h } else { 0.0 };
                let approx = self.base(&g, Some(slope));
                let c = h.powf(-self.alpha) * gamma_ratio(s, self.alpha);
                approx
                    .iter()
                    .enumerate()
                    .map(|(k, a)| if k == 0 { 0.0 } else { a - c * (k as f64).powf(s - self.alpha) })
                    .collect()
            })
            .collect();
        let matrix: Vec<Vec<f64>> = basis.iter().map(|&s| (0..m).map(|j| pw(j, s)).collect()).collect();
        (0..self.len)
            .map(|k| {
                if k == 0 {
                    return Ok(vec![0.0; m]);
                }
                let rhs: Vec<f64> = errors.iter().map(|e| -e[k]).collect();
                solve_dense(matrix.clone(), rhs)
                    .ok_or_else(|| Error::Resolution("singular starting-weight system".into()))
            })
            .collect()
    }

    /// Applies the operator to samples on the operator's grid. `slope` is
    /// f′(origin); it is used only if the operator was built with
    /// `known_slope` and α > 1.
    pub fn apply(&self, values: &[f64], slope: Option<f64>) -> Result<Vec<f64>> {
        if values.len() != self.len {
            return Err(Error::Resolution(format!(
                "operator built for {} nodes, got {}",
                self.len,
                values.len()
            )));
        }
        if self.known_slope && slope.is_none() {
            return Err(Error::Domain("operator expects the initial slope".into()));
        }
        let mut out = self.base(values, slope);
        for (k, w) in self.corr.iter().enumerate().skip(1) {
            out[k] += w.iter().zip(values).map(|(w, v)| w * v).sum::<f64>();
        }
        Ok(out)
    }
}

/// Γ(σ+1)/Γ(σ+1−α), zero when the Caputo derivative of t^σ vanishes.
fn gamma_ratio(s: f64, alpha: f64) -> f64 {
    if s == 0.0 || (alpha > 1.0 && s == 1.0) {
        return 0.0;
    }
    crate::specfun::gamma(s + 1.0).map(|g| g * rgamma(s + 1.0 - alpha)).unwrap_or(0.0)
}

/// Caputo derivative of order α ∈ (0,1) ∪ (1,2) with origin `f.origin`.
/// For α > 1 the initial slope is estimated from the samples. The origin
/// node is set to 0.
pub fn caputo_derivative(f: &UniformGridFn, alpha: f64) -> Result<UniformGridFn> {
    caputo_derivative_with(f, alpha, None, &[])
}

/// As [`caputo_derivative`], with the slope f′(origin) supplied when known
/// and starting corrections for the listed exponents of (t−origin)^σ.
pub fn caputo_derivative_with(f: &UniformGridFn, alpha: f64, slope: Option<f64>, exponents: &[f64]) -> Result<UniformGridFn> {
    let op = CaputoOperator::new(alpha, f.step, f.len(), slope.is_some(), exponents)?;
    Ok(f.with_values(op.apply(&f.values, slope)?))
}

/// Riemann–Liouville derivative d^n/dt^n I^{n−α} f, n = ⌈α⌉. Values near
/// the origin are meaningless when the exact derivative is singular there.
pub fn rl_derivative(f: &UniformGridFn, alpha: f64) -> Result<UniformGridFn> {
    check_order(alpha)?;
    let n = f.len();
    let h = f.step;
    if alpha < 1.0 {
        let g = rl_integral(f, 1.0 - alpha)?.values;
        let mut d = vec![0.0; n];
        d[0] = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h);
        for j in 1..n - 1 {
            d[j] = (g[j + 1] - g[j - 1]) / (2.0 * h);
        }
        d[n - 1] = (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * h);
        Ok(f.with_values(d))
    } else {
        if n < 4 {
            return Err(Error::Resolution("second-order RL derivative needs at least 4 nodes".into()));
        }
        let g = rl_integral(f, 2.0 - alpha)?.values;
        let h2 = h * h;
        let mut d = vec![0.0; n];
        d[0] = (2.0 * g[0] - 5.0 * g[1] + 4.0 * g[2] - g[3]) / h2;
        for j in 1..n - 1 {
            d[j] = (g[j + 1] - 2.0 * g[j] + g[j - 1]) / h2;
        }
        d[n - 1] = (2.0 * g[n - 1] - 5.0 * g[n - 2] + 4.0 * g[n - 3] - g[n - 4]) / h2;
        Ok(f.with_values(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_expansions_match_direct_formulas_at_the_switch() {
        for &a in &[0.3, 0.8, 1.25, 1.7] {
            let m = 16.0;
            let direct2 = (m + 1.0f64).powf(a + 1.0) - 2.0 * m.powf(a + 1.0) + (m - 1.0f64).powf(a + 1.0);
            assert!((pow_diff2(m, a + 1.0) - direct2).abs() < 1e-11 * direct2.abs());
            let direct1 = (m + 1.0f64).powf(1.0 - a) - m.powf(1.0 - a);
            assert!((pow_diff1(m, 1.0 - a) - direct1).abs() < 1e-12 * direct1.abs().max(1e-3));
            let ds = (m - 1.0f64).powf(a + 1.0) - (m - a - 1.0) * m.powf(a);
            assert!((start_weight(m, a) - ds).abs() < 1e-11 * ds.abs());
        }
    }

    #[test]
    fn order_one_is_rejected() {
        let f = UniformGridFn::sample(0.0, 0.1, 5, |t| t).unwrap();
        assert!(matches!(caputo_derivative(&f, 1.0), Err(Error::Domain(_))));
        assert!(matches!(caputo_derivative(&f, 2.5), Err(Error::Domain(_))));
        assert!(matches!(rl_integral(&f, 0.0), Err(Error::Domain(_))));
    }
}
