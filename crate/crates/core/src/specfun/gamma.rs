//! Gamma function: Stirling series for x ≥ 10, upward recurrence below,
//! reflection for x < 1/2.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// Largest argument for which Γ(x) is finite in f64.
pub const GAMMA_MAX_ARG: f64 = 171.624_376_956_302_7;

/// B_{2k}/(2k(2k−1)) for k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// ln Γ(x) − [(x−½)ln x − x + ½ln 2π] for x ≥ 10.
fn stirling_correction(x: f64) -> f64 {
    let r = 1.0 / (x * x);
    let mut acc = 0.0;
    for c in STIRLING.iter().rev() {
        acc = acc * r + c;
    }
    acc / x
}

/// sin(πx) with exact argument reduction.
pub fn sinpi(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).round();
    // r in [-1, 1]; fold onto [-1/2, 1/2] using sin(πr) = sin(π(±1 − r))
    let r = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    (PI * r).sin()
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Γ(x) for 0.5 ≤ x ≤ GAMMA_MAX_ARG.
fn gamma_right(x: f64) -> f64 {
    if x == x.floor() && x <= 23.0 {
        return factorial(x as usize - 1);
    }
    if x < 10.0 {
        let mut p = 1.0;
        let mut y = x;
        while y < 10.0 {
            p *= y;
            y += 1.0;
        }
        return gamma_right(y) / p;
    }
    // x^{x−½}e^{−x} split in two halves so that neither factor overflows
    let h = x.powf(0.5 * (x - 0.5));
    SQRT_2PI * h * (h * (-x).exp()) * stirling_correction(x).exp()
}

/// n! for n ≤ 22, where every product is exact.
fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// The gamma function. Fails at poles and on overflow.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite argument {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::GammaPole(x));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::GammaOverflow(x));
    }
    if x >= 0.5 {
        return Ok(gamma_right(x));
    }
    let s = sinpi(x);
    let y = 1.0 - x;
    if y <= GAMMA_MAX_ARG {
        Ok(PI / (s * gamma_right(y)))
    } else {
        let sign = s.signum();
        let lg = LN_PI - s.abs().ln() - ln_gamma_right(y);
        Ok(sign * lg.exp())
    }
}

const LN_PI: f64 = 1.144_729_885_849_400_2;

fn ln_gamma_right(x: f64) -> f64 {
    if x < 10.0 {
        return gamma_right(x).ln();
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + stirling_correction(x)
}

/// ln|Γ(x)| together with the sign of Γ(x). Poles give `(+inf, 0.0)`.
pub fn ln_gamma_signed(x: f64) -> (f64, f64) {
    if is_nonpositive_integer(x) {
        return (f64::INFINITY, 0.0);
    }
    if x >= 0.5 {
        if x < 20.0 {
            let g = gamma_right(x);
            return (g.ln(), 1.0);
        }
        return (ln_gamma_right(x), 1.0);
    }
    let s = sinpi(x);
    let (lg, _) = ln_gamma_signed(1.0 - x);
    (LN_PI - s.abs().ln() - lg, s.signum())
}

/// 1/Γ(x), which is entire: zero at the poles of Γ, no overflow.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x >= 0.5 && x <= GAMMA_MAX_ARG {
        return 1.0 / gamma_right(x);
    }
    if x < 0.5 && 1.0 - x <= GAMMA_MAX_ARG {
        return sinpi(x) * gamma_right(1.0 - x) / PI;
    }
    let (lg, s) = ln_gamma_signed(x);
    s * (-lg).exp()
}
