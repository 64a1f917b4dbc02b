//! Globally adaptive Gauss–Kronrod (7/15) quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Stopping rule: stop once the summed error estimate is below
/// `max(abs, rel * ∫|f|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64, max_intervals: usize) -> Self {
        Self {
            abs,
            rel,
            max_intervals,
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::new(1e-12, 1e-12, 2000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    /// Integral of |f|, used for relative tolerances.
    pub abs_integral: f64,
    pub intervals: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    abs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut e = err.abs();
    if res_asc != 0.0 && e != 0.0 {
        let scale = (200.0 * e / res_asc).powf(1.5);
        e = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        e = e.max(50.0 * f64::EPSILON * res_abs);
    }
    e
}

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = fc.abs() * WGK[7];
    let mut fv = [0.0f64; 14];
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[2 * j] - mean).abs() + (fv[2 * j + 1] - mean).abs());
    }
    let err = rescale_error((res_k - res_g) * h, res_abs * h.abs(), res_asc * h.abs());
    Panel {
        a,
        b,
        value: res_k * h,
        error: err,
        abs: res_abs * h.abs(),
    }
}

/// Integrates `f` over the piecewise interval given by sorted `points`
/// (at least two). Interior points are used as initial breakpoints.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, points: &[f64], tol: Tolerance) -> Result<QuadResult> {
    assert!(points.len() >= 2, "need at least two points");
    let mut heap = BinaryHeap::new();
    let mut value = 0.0;
    let mut error = 0.0;
    let mut abs = 0.0;
    for w in points.windows(2) {
        if w[1] == w[0] {
            continue;
        }
        let p = gk15(&mut f, w[0], w[1]);
        value += p.value;
        error += p.error;
        abs += p.abs;
        heap.push(p);
    }
    loop {
        if error <= tol.abs.max(tol.rel * abs) || heap.is_empty() {
            return Ok(QuadResult {
                value,
                error,
                abs_integral: abs,
                intervals: heap.len(),
            });
        }
        if heap.len() >= tol.max_intervals {
            return Err(Error::Quadrature {
                intervals: heap.len(),
                error,
            });
        }
        let worst = heap.pop().expect("nonempty heap");
        let m = 0.5 * (worst.a + worst.b);
        if m <= worst.a || m >= worst.b {
            // Interval exhausted at machine resolution; keep its estimate.
            return Ok(QuadResult {
                value,
                error,
                abs_integral: abs,
                intervals: heap.len() + 1,
            });
        }
        let left = gk15(&mut f, worst.a, m);
        let right = gk15(&mut f, m, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        abs += left.abs + right.abs - worst.abs;
        heap.push(left);
        heap.push(right);
    }
}

/// Vector-valued variant: `f(x, out)` fills `out` with the integrand
/// components. Panels are refined on the largest component error, and the
/// tolerance applies component-wise in absolute terms.
pub fn integrate_vec<F: FnMut(f64, &mut [f64])>(
    mut f: F,
    dim: usize,
    a: f64,
    b: f64,
    initial_panels: usize,
    tol: Tolerance,
) -> Result<Vec<f64>> {
    struct VPanel {
        a: f64,
        b: f64,
        value: Vec<f64>,
        error: f64,
    }
    let mut buf1 = vec![0.0; dim];
    let mut buf2 = vec![0.0; dim];
    let mut rule = |f: &mut F, a: f64, b: f64| -> VPanel {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let mut k = vec![0.0; dim];
        let mut g = vec![0.0; dim];
        f(c, &mut buf1);
        for i in 0..dim {
            k[i] = buf1[i] * WGK[7];
            g[i] = buf1[i] * WG[3];
        }
        for j in 0..7 {
            let x = h * XGK[j];
            f(c - x, &mut buf1);
            f(c + x, &mut buf2);
            for i in 0..dim {
                let s = buf1[i] + buf2[i];
                k[i] += WGK[j] * s;
                if j % 2 == 1 {
                    g[i] += WG[j / 2] * s;
                }
            }
        }
        let mut err = 0.0f64;
        for i in 0..dim {
            err = err.max(((k[i] - g[i]) * h).abs());
            k[i] *= h;
        }
        VPanel { a, b, value: k, error: err }
    };
    let n0 = initial_panels.max(1);
    let mut done: Vec<VPanel> = Vec::new();
    let mut work: Vec<VPanel> = (0..n0)
        .map(|i| {
            let x0 = a + (b - a) * i as f64 / n0 as f64;
            let x1 = a + (b - a) * (i + 1) as f64 / n0 as f64;
            rule(&mut f, x0, x1)
        })
        .collect();
    // Each panel receives a share of the tolerance proportional to its width.
    let width = (b - a).abs();
    let mut count = work.len();
    while let Some(p) = work.pop() {
        let share = tol.abs * ((p.b - p.a).abs() / width).max(1e-6);
        if p.error <= share || (p.b - p.a).abs() < 1e-12 * width {
            done.push(p);
            continue;
        }
        if count >= tol.max_intervals {
            return Err(Error::Quadrature {
                intervals: count,
                error: p.error,
            });
        }
        let m = 0.5 * (p.a + p.b);
        work.push(rule(&mut f, p.a, m));
        work.push(rule(&mut f, m, p.b));
        count += 1;
    }
    done.sort_by(|x, y| x.a.total_cmp(&y.a));
    let mut out = vec![0.0; dim];
    for p in &done {
        for i in 0..dim {
            out[i] += p.value[i];
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let r = integrate(|x| x * x * x - 2.0 * x, &[0.0, 2.0], Tolerance::default()).unwrap();
        assert!((r.value - 0.0).abs() < 1e-14);
    }

    #[test]
    fn endpoint_singularity_converges() {
        let r = integrate(|x: f64| x.powf(-0.5), &[0.0, 1.0], Tolerance::new(1e-12, 0.0, 500)).unwrap();
        assert!((r.value - 2.0).abs() < 1e-10);
    }

    #[test]
    fn vector_rule_matches_scalar() {
        let v = integrate_vec(
            |x, out| {
                out[0] = x.sin();
                out[1] = x.exp();
            },
            2,
            0.0,
            1.0,
            4,
            Tolerance::new(1e-14, 0.0, 1000),
        )
        .unwrap();
        assert!((v[0] - (1.0 - 1f64.cos())).abs() < 1e-14);
        assert!((v[1] - (1f64.exp() - 1.0)).abs() < 1e-14);
    }
}
