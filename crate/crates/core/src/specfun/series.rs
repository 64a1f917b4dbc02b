//! Direct power-series summation of the Mittag-Leffler functions.

use super::gamma::{ln_gamma_signed, rgamma};
use super::TruncationPolicy;
use crate::error::{Error, Result};

/// Neumaier-compensated sum that also tracks Σ|term|.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Accumulator {
    sum: f64,
    comp: f64,
    pub abs_sum: f64,
}

impl Accumulator {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs_sum += x.abs();
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Result of a truncated summation.
#[derive(Debug, Clone, Copy)]
pub struct SeriesSum {
    pub value: f64,
    /// Σ|term|; `abs_sum · ε` bounds the rounding error.
    pub abs_sum: f64,
    pub blocks: usize,
}

/// Tracks the stopping rule: block magnitude below tol after the block
/// magnitudes have decreased three times in a row.
struct Stopper {
    history: [f64; 4],
    seen: usize,
}

impl Stopper {
    fn new() -> Self {
        Self {
            history: [f64::INFINITY; 4],
            seen: 0,
        }
    }

    fn push(&mut self, block: f64, tol: f64) -> bool {
        self.history.rotate_left(1);
        self.history[3] = block;
        self.seen += 1;
        if self.seen < 4 || block >= tol {
            return false;
        }
        let h = &self.history;
        (h[0] > h[1] && h[1] > h[2] && h[2] > h[3]) || h.iter().all(|&b| b == 0.0)
    }
}

/// x^k·y^j·c/Γ(arg) with overflow-safe fallback to logarithms.
fn term(c: f64, x: f64, k: i32, y: f64, j: i32, arg: f64) -> f64 {
    if arg <= 170.0 {
        let v = c * x.powi(k) * y.powi(j) * rgamma(arg);
        if v.is_finite() && (v != 0.0 || c == 0.0 || rgamma(arg) == 0.0) {
            return v;
        }
    }
    let (lg, sg) = ln_gamma_signed(arg);
    if sg == 0.0 || c == 0.0 {
        return 0.0;
    }
    let mut sign = sg * c.signum();
    let mut l = c.abs().ln() - lg;
    if k > 0 {
        if x == 0.0 {
            return 0.0;
        }
        l += k as f64 * x.abs().ln();
        if x < 0.0 && k % 2 == 1 {
            sign = -sign;
        }
    }
    if j > 0 {
        if y == 0.0 {
            return 0.0;
        }
        l += j as f64 * y.abs().ln();
        if y < 0.0 && j % 2 == 1 {
            sign = -sign;
        }
    }
    sign * l.exp()
}

/// Σ_k z^k/Γ(αk+β).
pub fn ml2_sum(alpha: f64, beta: f64, z: f64, policy: TruncationPolicy) -> Result<SeriesSum> {
    let mut acc = Accumulator::default();
    let mut stop = Stopper::new();
    let mut last = 0.0;
    for k in 0..policy.max_terms {
        let t = term(1.0, z, k as i32, 1.0, 0, alpha * k as f64 + beta);
        acc.add(t);
        last = t.abs();
        if stop.push(last, policy.tol) {
            return Ok(SeriesSum {
                value: acc.value(),
                abs_sum: acc.abs_sum,
                blocks: k + 1,
            });
        }
    }
    Err(Error::NonConvergence {
        terms: policy.max_terms,
        last_block: last,
        partial_sum: acc.value(),
    })
}

/// Σ_n Σ_{k≤n} C(n,k) x^k y^{n−k} / Γ(ρ + a_x k + a_y (n−k)), summed in
/// blocks of fixed total degree n.
pub fn bivariate_sum(a_x: f64, a_y: f64, rho: f64, x: f64, y: f64, policy: TruncationPolicy) -> Result<SeriesSum> {
    let mut acc = Accumulator::default();
    let mut stop = Stopper::new();
    let mut row: Vec<f64> = vec![1.0];
    let mut last = 0.0;
    for n in 0..policy.max_terms {
        if n > 0 {
            let mut next = vec![1.0; n + 1];
            for k in 1..n {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
        }
        let mut block = 0.0;
        let mut bsum = Accumulator::default();
        let k_range: Box<dyn Iterator<Item = usize>> = if x == 0.0 {
            Box::new(std::iter::once(0))
        } else if y == 0.0 {
            Box::new(std::iter::once(n))
        } else {
            Box::new(0..=n)
        };
        for k in k_range {
            let arg = rho + a_x * k as f64 + a_y * (n - k) as f64;
            let c = row[k];
            let t = if c.is_finite() {
                term(c, x, k as i32, y, (n - k) as i32, arg)
            } else {
                let lc = ln_gamma_signed(n as f64 + 1.0).0
                    - ln_gamma_signed(k as f64 + 1.0).0
                    - ln_gamma_signed((n - k) as f64 + 1.0).0;
                term(1.0, x, k as i32, y, (n - k) as i32, arg) * lc.exp()
            };
            bsum.add(t);
            block += t.abs();
        }
        acc.add(bsum.value());
        acc.abs_sum += block - bsum.value().abs();
        last = block;
        if stop.push(block, policy.tol) {
            return Ok(SeriesSum {
                value: acc.value(),
                abs_sum: acc.abs_sum,
                blocks: n + 1,
            });
        }
    }
    Err(Error::NonConvergence {
        terms: policy.max_terms,
        last_block: last,
        partial_sum: acc.value(),
    })
}
