//! Interpolation of sampled data: monotone piecewise-cubic (PCHIP) for
//! user-supplied samples, and Chebyshev interpolation converted to
//! power sums for forcing terms whose convolutions are taken in closed form.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::laplace::PowerSum;

/// Fritsch–Carlson monotone cubic Hermite interpolant.
#[derive(Debug, Clone, PartialEq)]
pub struct Pchip {
    x: Vec<f64>,
    y: Vec<f64>,
    d: Vec<f64>,
}

impl Pchip {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        let n = x.len();
        if n < 2 || y.len() != n {
            return Err(Error::Domain(format!(
                "PCHIP needs at least 2 matching samples, got {} abscissae and {} values",
                n,
                y.len()
            )));
        }
        if x.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Domain("PCHIP abscissae must be strictly increasing".into()));
        }
        let h: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
        let del: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();
        let mut d = vec![0.0; n];
        if n == 2 {
            d[0] = del[0];
            d[1] = del[0];
            return Ok(Self { x, y, d });
        }
        for i in 1..n - 1 {
            if del[i - 1] * del[i] > 0.0 {
                let w1 = 2.0 * h[i] + h[i - 1];
                let w2 = h[i] + 2.0 * h[i - 1];
                d[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
            }
        }
        d[0] = end_slope(h[0], h[1], del[0], del[1]);
        d[n - 1] = end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
        Ok(Self { x, y, d })
    }

    /// Value at `t`; constant extrapolation outside the sample range.
    pub fn eval(&self, t: f64) -> f64 {
        let n = self.x.len();
        if t <= self.x[0] {
            return self.y[0];
        }
        if t >= self.x[n - 1] {
            return self.y[n - 1];
        }
        let i = self.x.partition_point(|&v| v <= t) - 1;
        let h = self.x[i + 1] - self.x[i];
        let s = (t - self.x[i]) / h;
        let s2 = s * s;
        let s3 = s2 * s;
        let h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
        let h10 = s3 - 2.0 * s2 + s;
        let h01 = -2.0 * s3 + 3.0 * s2;
        let h11 = s3 - s2;
        h00 * self.y[i] + h10 * h * self.d[i] + h01 * self.y[i + 1] + h11 * h * self.d[i + 1]
    }
}

/// Three-point end slope, clipped to preserve shape.
fn end_slope(h0: f64, h1: f64, del0: f64, del1: f64) -> f64 {
    let d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
    if d.signum() != del0.signum() {
        0.0
    } else if del0.signum() != del1.signum() && d.abs() > 3.0 * del0.abs() {
        3.0 * del0
    } else {
        d
    }
}

/// Polynomial approximation of `f` on [0, len] found by Chebyshev
/// interpolation of increasing degree, returned as a power sum in τ.
#[derive(Debug, Clone)]
pub struct PolynomialFit {
    pub powers: PowerSum,
    pub degree: usize,
    /// Max deviation from `f` on a check grid.
    pub error: f64,
}

/// Fits `f` on [0, len] until the deviation on a check grid is below
/// `tol·max(1, max|f|)`. Degrees above ~20 lose accuracy in the monomial
/// basis, so `max_degree` is capped there.
pub fn chebyshev_fit(f: impl Fn(f64) -> f64, len: f64, tol: f64, max_degree: usize) -> Result<PolynomialFit> {
    let mut fits = chebyshev_fit_vec(|t| Ok(vec![f(t)]), 1, len, tol, max_degree)?;
    Ok(fits.remove(0))
}

/// Componentwise [`chebyshev_fit`] of a vector-valued function; all
/// components share the interpolation nodes and the degree.
pub fn chebyshev_fit_vec(
    f: impl Fn(f64) -> Result<Vec<f64>>,
    dim: usize,
    len: f64,
    tol: f64,
    max_degree: usize,
) -> Result<Vec<PolynomialFit>> {
    if !(len > 0.0) {
        return Err(Error::Domain(format!("fit interval length must be positive, got {len}")));
    }
    let max_degree = max_degree.min(20);
    const CHECKS: usize = 64;
    // check points avoid the Chebyshev nodes of every degree
    let check: Vec<(f64, Vec<f64>)> = (0..=CHECKS)
        .map(|i| {
            let t = len * (i as f64 + 0.37) / (CHECKS as f64 + 0.74);
            f(t).map(|v| (t, v))
        })
        .collect::<Result<_>>()?;
    let scale = check
        .iter()
        .flat_map(|p| p.1.iter())
        .map(|v| v.abs())
        .fold(1.0, f64::max);
    let mut best: Option<(f64, Vec<PolynomialFit>)> = None;
    for degree in 0..=max_degree {
        let m = degree + 1;
        let nodes: Vec<f64> = (0..m)
            .map(|j| 0.5 * len * ((PI * (j as f64 + 0.5) / m as f64).cos() + 1.0))
            .collect();
        let samples: Vec<Vec<f64>> = nodes.iter().map(|&t| f(t)).collect::<Result<_>>()?;
        let mut fits = Vec::with_capacity(dim);
        let mut worst = 0.0f64;
        for c in 0..dim {
            let vals: Vec<f64> = samples.iter().map(|s| s[c]).collect();
            let coeffs = monomial_coefficients(&vals, len);
            let error = check
                .iter()
                .map(|(t, v)| (horner(&coeffs, *t) - v[c]).abs())
                .fold(0.0, f64::max);
            worst = worst.max(error);
            let powers = PowerSum::new(
                coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0.0)
                    .map(|(k, &c)| (c, k as f64))
                    .collect(),
            );
            fits.push(PolynomialFit { powers, degree, error });
        }
        if worst <= tol * scale {
            return Ok(fits);
        }
        if best.as_ref().map_or(true, |b| worst < b.0) {
            best = Some((worst, fits));
        }
    }
    let worst = best.map_or(f64::NAN, |b| b.0);
    Err(Error::Resolution(format!(
        "polynomial fit of degree ≤ {max_degree} reached error {worst:e}, above {:e}",
        tol * scale
    )))
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * t + v)
}

/// Monomial coefficients (in τ) of the interpolant through values at the
/// first-kind Chebyshev nodes of [0, len] (node j at cos(π(j+½)/m)).
fn monomial_coefficients(vals: &[f64], len: f64) -> Vec<f64> {
    let m = vals.len();
    // Chebyshev coefficients a_k in u ∈ [−1, 1]
    let a: Vec<f64> = (0..m)
        .map(|k| {
            let s: f64 = (0..m)
                .map(|j| vals[j] * (PI * k as f64 * (j as f64 + 0.5) / m as f64).cos())
                .sum();
            if k == 0 {
                s / m as f64
            } else {
                2.0 * s / m as f64
            }
        })
        .collect();
    // T_k(2v − 1) in v = τ/len
    let mut out = vec![0.0; m];
    let mut prev = vec![1.0];
    let mut cur = vec![-1.0, 2.0];
    for (k, &ak) in a.iter().enumerate() {
        let poly = match k {
            0 => prev.clone(),
            1 => cur.clone(),
            _ => {
                let mut next = vec![0.0; k + 1];
                for (i, &c) in cur.iter().enumerate() {
                    next[i] -= 2.0 * c;
                    next[i + 1] += 4.0 * c;
                }
                for (i, &c) in prev.iter().enumerate() {
                    next[i] -= c;
                }
                prev = std::mem::replace(&mut cur, next);
                cur.clone()
            }
        };
        for (i, &c) in poly.iter().enumerate() {
            out[i] += ak * c;
        }
    }
    let mut scale = 1.0;
    for c in out.iter_mut() {
        *c *= scale;
        scale /= len;
    }
    out
}
