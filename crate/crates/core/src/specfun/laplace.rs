//! Numerical inversion of Laplace transforms that are ratios of sums of
//! real powers of `s`, such as s^{α−β}/(s^α − z).
//!
//! The Bromwich line is folded onto a keyhole around the negative real
//! axis: residues of the poles outside a small circle of radius r0, plus the
//! circle itself, plus the jump across the branch cut,
//!
//!   f(1) = Σ Res + (1/π)∫_0^π Re[e^s s F(s)] dθ + (1/π)∫_{r0}^∞ e^{−r} Im F(r e^{−iπ}) dr.
//!
//! Other times are reached by rescaling, f(t) = L⁻¹[F(σ/t)/t](1), so the
//! inversion itself always runs at unit time. Denominators must have
//! positive coefficients, which rules out poles on the positive axis.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::{self, Tolerance};

/// Σ c_j s^{q_j} with real coefficients and real exponents.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PowerSum {
    /// `(coefficient, exponent)` pairs.
    pub terms: Vec<(f64, f64)>,
}

impl PowerSum {
    pub fn new(terms: Vec<(f64, f64)>) -> Self {
        Self { terms }
    }

    pub fn monomial(c: f64, q: f64) -> Self {
        Self::new(vec![(c, q)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|&(c, _)| c == 0.0)
    }

    /// Value at s = e^{ln_r + iθ} on the principal branch.
    pub fn eval_polar(&self, ln_r: f64, theta: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &(c, q) in &self.terms {
            if c == 0.0 {
                continue;
            }
            let m = c * (q * ln_r).exp();
            let (s, co) = (q * theta).sin_cos();
            acc += Complex64::new(m * co, m * s);
        }
        acc
    }

    /// Value at a positive real point (all exponents allowed).
    pub fn eval_real(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .filter(|t| t.0 != 0.0)
            .map(|&(c, q)| c * x.powf(q))
            .sum()
    }

    /// d/ds of the sum.
    pub fn derivative(&self) -> PowerSum {
        PowerSum::new(
            self.terms
                .iter()
                .filter(|&&(c, q)| c != 0.0 && q != 0.0)
                .map(|&(c, q)| (c * q, q - 1.0))
                .collect(),
        )
    }

    /// Coefficients of s ↦ P(s/t)·factor.
    pub fn rescaled(&self, t: f64, factor: f64) -> PowerSum {
        let lt = t.ln();
        PowerSum::new(
            self.terms
                .iter()
                .map(|&(c, q)| (c * factor * (-q * lt).exp(), q))
                .collect(),
        )
    }

    /// Multiplies every term by s^p.
    pub fn shifted(&self, p: f64) -> PowerSum {
        PowerSum::new(self.terms.iter().map(|&(c, q)| (c, q + p)).collect())
    }

    /// Sum with terms of equal exponent merged and zero terms removed.
    pub fn simplified(&self) -> PowerSum {
        let mut t: Vec<(f64, f64)> = self.terms.iter().copied().filter(|t| t.0 != 0.0).collect();
        t.sort_by(|a, b| a.1.total_cmp(&b.1));
        let mut out: Vec<(f64, f64)> = Vec::with_capacity(t.len());
        for (c, q) in t {
            match out.last_mut() {
                Some(last) if (last.1 - q).abs() <= 1e-14 * (1.0 + q.abs()) => last.0 += c,
                _ => out.push((c, q)),
            }
        }
        out.retain(|t| t.0 != 0.0);
        PowerSum::new(out)
    }

    fn max_exponent(&self) -> f64 {
        self.terms
            .iter()
            .filter(|t| t.0 != 0.0)
            .map(|t| t.1)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Zeros of a positive-coefficient denominator on the principal sheet,
/// stored in logarithmic coordinates w = ln|s| + i·arg(s), upper half only.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PoleSet {
    pub upper: Vec<Complex64>,
    /// ln|s| of zeros sitting exactly on the negative axis.
    pub on_cut: Vec<f64>,
}

impl PoleSet {
    /// Poles of the rescaled denominator D(σ/t): σ = t·s.
    pub fn rescaled(&self, t: f64) -> PoleSet {
        let lt = t.ln();
        PoleSet {
            upper: self.upper.iter().map(|w| w + lt).collect(),
            on_cut: self.on_cut.iter().map(|u| u + lt).collect(),
        }
    }
}

/// Terms as (ln c, q), merged and sorted by exponent.
fn log_terms(den: &PowerSum) -> Result<Vec<(f64, f64)>> {
    let d = den.simplified();
    if d.terms.iter().any(|t| t.0 < 0.0) {
        return Err(Error::Domain(
            "contour inversion requires a denominator with positive coefficients".into(),
        ));
    }
    Ok(d.terms.iter().map(|&(c, q)| (c.ln(), q)).collect())
}

/// g(w) and g'(w) for g(w) = Σ c_j e^{q_j w}, both divided by the largest
/// term magnitude (arguments and Newton steps are unaffected).
fn g_scaled(lt: &[(f64, f64)], w: Complex64) -> (Complex64, Complex64) {
    let m = lt
        .iter()
        .map(|&(lc, q)| lc + q * w.re)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut g = Complex64::new(0.0, 0.0);
    let mut dg = Complex64::new(0.0, 0.0);
    for &(lc, q) in lt {
        let mag = (lc + q * w.re - m).exp();
        let (s, c) = (q * w.im).sin_cos();
        let term = Complex64::new(mag * c, mag * s);
        g += term;
        dg += term * q;
    }
    (g, dg)
}

/// ln-radius bounds outside of which a single term dominates all others.
fn dominance_bounds(lt: &[(f64, f64)]) -> (f64, f64) {
    let dominated = |u: f64, idx: usize| -> bool {
        let md = lt[idx].0 + lt[idx].1 * u;
        let rest: f64 = lt
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, &(lc, q))| (lc + q * u - md).exp())
            .sum();
        rest < 0.4
    };
    let mut lo = 0.0;
    while !dominated(lo, 0) {
        lo -= 1.0;
        if lo < -800.0 {
            break;
        }
    }
    let last = lt.len() - 1;
    let mut hi = 0.0;
    while !dominated(hi, last) {
        hi += 1.0;
        if hi > 800.0 {
            break;
        }
    }
    (lo - 1.0, hi + 1.0)
}

fn wrap(d: f64) -> f64 {
    let mut d = d;
    while d > PI {
        d -= 2.0 * PI;
    }
    while d < -PI {
        d += 2.0 * PI;
    }
    d
}

/// Change of arg g along the segment w0 → w1, tracked adaptively.
/// Returns None if g comes numerically close to zero on the path.
fn arg_change(lt: &[(f64, f64)], w0: Complex64, w1: Complex64) -> Option<f64> {
    fn rec(lt: &[(f64, f64)], a: Complex64, b: Complex64, ga: Complex64, gb: Complex64, depth: u32) -> Option<f64> {
        let m = 0.5 * (a + b);
        let gm = g_scaled(lt, m).0;
        if gm.norm() < 1e-13 {
            return None;
        }
        let d1 = wrap(gm.arg() - ga.arg());
        let d2 = wrap(gb.arg() - gm.arg());
        if (d1.abs() < 0.3 && d2.abs() < 0.3) || depth > 48 {
            return Some(d1 + d2);
        }
        Some(rec(lt, a, m, ga, gm, depth + 1)? + rec(lt, m, b, gm, gb, depth + 1)?)
    }
    let pieces = 64;
    let mut total = 0.0;
    let mut prev = w0;
    let mut gprev = g_scaled(lt, w0).0;
    if gprev.norm() < 1e-13 {
        return None;
    }
    for k in 1..=pieces {
        let w = w0 + (w1 - w0) * (k as f64 / pieces as f64);
        let gw = g_scaled(lt, w).0;
        if gw.norm() < 1e-13 {
            return None;
        }
        total += rec(lt, prev, w, gprev, gw, 0)?;
        prev = w;
        gprev = gw;
    }
    Some(total)
}

/// Number of zeros inside the log-rectangle [lo, hi] × (0, π).
fn winding_count(lt: &[(f64, f64)], lo: f64, hi: f64) -> Option<i64> {
    let c = |u: f64, th: f64| Complex64::new(u, th);
    let total = arg_change(lt, c(lo, 0.0), c(hi, 0.0))?
        + arg_change(lt, c(hi, 0.0), c(hi, PI))?
        + arg_change(lt, c(hi, PI), c(lo, PI))?
        + arg_change(lt, c(lo, PI), c(lo, 0.0))?;
    Some((total / (2.0 * PI)).round() as i64)
}

fn newton(lt: &[(f64, f64)], mut w: Complex64) -> Option<Complex64> {
    for _ in 0..200 {
        let (g, dg) = g_scaled(lt, w);
        if dg.norm() == 0.0 {
            return None;
        }
        let mut step = g / dg;
        if step.norm() > 1.0 {
            step /= step.norm();
        }
        w -= step;
        if !w.re.is_finite() || !w.im.is_finite() {
            return None;
        }
        if step.norm() < 1e-15 * (1.0 + w.norm()) {
            break;
        }
    }
    let (g, _) = g_scaled(lt, w);
    if g.norm() < 1e-11 {
        Some(w)
    } else {
        None
    }
}

/// Finds all zeros of `den` with 0 < arg s ≤ π.
pub fn find_poles(den: &PowerSum) -> Result<PoleSet> {
    let lt = log_terms(den)?;
    let mut set = PoleSet::default();
    if lt.len() <= 1 {
        return Ok(set);
    }
    if lt.len() == 2 {
        // c_hi s^{q_hi} = −c_lo s^{q_lo}  ⇒  s^Δ = (c_lo/c_hi) e^{iπ(1+2m)}
        let (lc_lo, q_lo) = lt[0];
        let (lc_hi, q_hi) = lt[1];
        let delta = q_hi - q_lo;
        let u = (lc_lo - lc_hi) / delta;
        let mut m = 0;
        loop {
            let th = PI * (1 + 2 * m) as f64 / delta;
            if (th - PI).abs() <= 1e-12 {
                set.on_cut.push(u);
            } else if th < PI {
                set.upper.push(Complex64::new(u, th));
            } else {
                break;
            }
            m += 1;
        }
        return Ok(set);
    }

    let (lo, hi) = dominance_bounds(&lt);
    let mut seeds: Vec<Complex64> = Vec::new();
    for i in 0..lt.len() {
        for j in (i + 1)..lt.len() {
            let delta = lt[j].1 - lt[i].1;
            let u = (lt[i].0 - lt[j].0) / delta;
            let mut m = 0;
            loop {
                let th = PI * (1 + 2 * m) as f64 / delta;
                if th > PI + 1.0 {
                    break;
                }
                seeds.push(Complex64::new(u, th.min(PI - 1e-3)));
                m += 1;
            }
        }
    }
    let expected_guess = winding_count(&lt, lo, hi);
    for attempt in 0..3 {
        if attempt > 0 {
            let nu = 12 * (attempt + 1);
            let nth = 6 * (attempt + 1);
            for a in 0..nu {
                for b in 0..nth {
                    let u = lo + (hi - lo) * (a as f64 + 0.5) / nu as f64;
                    let th = PI * (b as f64 + 0.5) / nth as f64;
                    seeds.push(Complex64::new(u, th));
                }
            }
        }
        let mut found: Vec<Complex64> = Vec::new();
        let mut on_cut: Vec<f64> = Vec::new();
        for s in &seeds {
            if let Some(w) = newton(&lt, *s) {
                if (w.im - PI).abs() <= 1e-10 {
                    if !on_cut.iter().any(|u| (u - w.re).abs() < 1e-8) {
                        on_cut.push(w.re);
                    }
                } else if w.im > 1e-12 && w.im < PI {
                    if !found.iter().any(|f| (f - w).norm() < 1e-8 * (1.0 + w.norm())) {
                        found.push(w);
                    }
                }
            }
        }
        match expected_guess {
            Some(n) if n as usize == found.len() => {
                found.sort_by(|a, b| a.re.total_cmp(&b.re));
                set.upper = found;
                set.on_cut = on_cut;
                return Ok(set);
            }
            None if attempt == 2 => {
                // A zero on the contour itself: trust the Newton search.
                found.sort_by(|a, b| a.re.total_cmp(&b.re));
                set.upper = found;
                set.on_cut = on_cut;
                return Ok(set);
            }
            _ => {}
        }
    }
    Err(Error::PoleSearch(format!(
        "zero count mismatch for denominator {:?} (argument principle gives {:?})",
        den.terms, expected_guess
    )))
}

/// Tolerances of the inner quadratures.
const INNER_TOL: Tolerance = Tolerance {
    abs: 1e-17,
    rel: 2e-14,
    max_intervals: 4000,
};

/// Keyhole radius: away from all poles, enclosing near-cut poles of small
/// modulus, and as close to 1 as allowed.
fn keyhole_radius(poles: &PoleSet) -> Result<f64> {
    let mut best: Option<(f64, f64)> = None;
    for k in -24..=12 {
        let lr = k as f64 * 0.25 * std::f64::consts::LN_2;
        let r = lr.exp();
        let mut ok = true;
        for w in &poles.upper {
            let d = (w.re - lr).abs();
            if d < 0.34 {
                ok = false;
            }
            if PI - w.im < 0.3 && w.re.exp() < 5.0 && w.re > lr - 0.34 {
                ok = false;
            }
        }
        for &u in &poles.on_cut {
            if u.exp() < 40.0 && u > lr - 0.34 {
                ok = false;
            }
        }
        if ok {
            let score = lr.abs();
            if best.map_or(true, |b| score < b.0) {
                best = Some((score, r));
            }
        }
    }
    best.map(|b| b.1).ok_or_else(|| {
        Error::PoleSearch("no admissible keyhole radius (pole on or near the branch cut)".into())
    })
}

/// Inverse transform of num/den at unit time, given the poles of den.
pub fn invert_unit(num: &PowerSum, den: &PowerSum, poles: &PoleSet) -> Result<f64> {
    let r0 = keyhole_radius(poles)?;
    let lr0 = r0.ln();
    let dden = den.derivative();

    let mut residues = 0.0;
    for w in &poles.upper {
        if w.re <= lr0 {
            continue;
        }
        let p = w.exp();
        let n = num.eval_polar(w.re, w.im);
        let d = dden.eval_polar(w.re, w.im);
        residues += 2.0 * (p.exp() * n / d).re;
    }

    let circle = quad::integrate(
        |th| {
            let s = Complex64::from_polar(r0, th);
            let f = num.eval_polar(lr0, th) / den.eval_polar(lr0, th);
            (s.exp() * s * f).re
        },
        &[0.0, 0.5 * PI, PI],
        INNER_TOL,
    )?;

    // Growth of F at infinity sets how far the cut integral has to run.
    let growth = (num.max_exponent() - den.max_exponent()).max(0.0);
    let upper = r0 + 46.0 + 6.0 * growth;
    let mut pts = vec![r0];
    let mut bps: Vec<f64> = poles
        .upper
        .iter()
        .filter(|w| PI - w.im < 0.5)
        .map(|w| w.re.exp())
        .filter(|&r| r > r0 && r < upper)
        .collect();
    bps.extend(
        poles
            .on_cut
            .iter()
            .map(|u| u.exp())
            .filter(|&r| r > r0 && r < upper),
    );
    bps.sort_by(f64::total_cmp);
    pts.extend(bps);
    let mut r = 2.0 * r0;
    while r < upper {
        if pts.iter().all(|&p| (p - r).abs() > 1e-9) {
            pts.push(r);
        }
        r *= 2.0;
    }
    pts.push(upper);
    pts.sort_by(f64::total_cmp);
    let cut = quad::integrate(
        |r| {
            let lr = r.ln();
            let f = num.eval_polar(lr, -PI) / den.eval_polar(lr, -PI);
            (-r).exp() * f.im
        },
        &pts,
        INNER_TOL,
    )?;

    Ok(residues + (circle.value + cut.value) / PI)
}

/// Precomputed inverse of a fixed transform, evaluated at arbitrary t > 0.
#[derive(Debug, Clone)]
pub struct LaplaceInverse {
    num: PowerSum,
    den: PowerSum,
    poles: PoleSet,
}

impl LaplaceInverse {
    pub fn new(num: PowerSum, den: PowerSum) -> Result<Self> {
        let den = den.simplified();
        let poles = find_poles(&den)?;
        Ok(Self {
            num: num.simplified(),
            den,
            poles,
        })
    }

    pub fn poles(&self) -> &PoleSet {
        &self.poles
    }

    /// f(t) for t > 0.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Err(Error::Domain(format!("inverse Laplace transform needs t > 0, got {t}")));
        }
        if self.num.is_zero() {
            return Ok(0.0);
        }
        if t == 1.0 {
            return invert_unit(&self.num, &self.den, &self.poles);
        }
        let num = self.num.rescaled(t, 1.0 / t);
        let den = self.den.rescaled(t, 1.0);
        invert_unit(&num, &den, &self.poles.rescaled(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_decay() {
        // 1/(s+1) ↔ e^{-t}; pole exactly on the cut at radius 1
        let inv = LaplaceInverse::new(PowerSum::monomial(1.0, 0.0), PowerSum::new(vec![(1.0, 1.0), (1.0, 0.0)])).unwrap();
        for &t in &[0.1, 0.5, 1.0, 3.0] {
            assert!((inv.eval(t).unwrap() - (-t as f64).exp()).abs() < 1e-13, "t={t}");
        }
    }

    #[test]
    fn cosine_from_two_poles() {
        // s/(s²+4) ↔ cos 2t
        let inv = LaplaceInverse::new(PowerSum::monomial(1.0, 1.0), PowerSum::new(vec![(1.0, 2.0), (4.0, 0.0)])).unwrap();
        for &t in &[0.2, 1.0, 2.5] {
            assert!((inv.eval(t).unwrap() - (2.0 * t as f64).cos()).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn three_term_poles_are_zeros() {
        let den = PowerSum::new(vec![(1.0, 1.5), (1.0, 0.5), (9.8696, 0.0)]);
        let set = find_poles(&den).unwrap();
        assert_eq!(set.upper.len(), 1);
        for w in &set.upper {
            let v = den.eval_polar(w.re, w.im);
            assert!(v.norm() < 1e-10);
        }
    }
}
