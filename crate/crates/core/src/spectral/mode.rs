use serde::{Deserialize, Serialize};

use super::{delta_for_lambda, delta_star_for_lambda, eigenvalue, DeltaN, DeltaStar, ModeForcing, PreparedData, ProblemSpec};
use crate::cauchy::{CP1Spec, CP2Spec, Cp1Solution, Cp2Solution, Forcing, FormulaReading};
use crate::error::{check, Error, Result};
use crate::specfun::gamma;
use crate::specfun::laplace::{LaplaceInverse, PowerSum};

/// |Δ*_n| below this is treated as a vanishing terminal determinant.
const DELTA_STAR_FLOOR: f64 = 1e-13;

/// One mode T_n of the series solution.
#[derive(Debug, Clone)]
pub struct ModeSolution {
    pub n: usize,
    pub lambda: f64,
    pub phi: f64,
    pub psi: f64,
    /// T_n′(0)
    pub b: f64,
    /// T_n(a)
    pub c: f64,
    /// T_n′(a+)
    pub g: f64,
    pub delta: DeltaN,
    pub delta_star: DeltaStar,
    pub forcing: ModeForcing,
    a: f64,
    cp1: Cp1Solution,
    cp2: Cp2Solution,
}

/// Serializable summary of one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeCoefficients {
    pub n: usize,
    pub lambda: f64,
    pub phi: f64,
    pub psi: f64,
    pub b: f64,
    pub c: f64,
    pub g: f64,
    pub delta_printed: f64,
    pub delta_matching: f64,
    pub delta_star: f64,
}

fn forcing_of(p: &PowerSum) -> Forcing {
    if p.is_zero() {
        Forcing::Zero
    } else {
        Forcing::Powers(p.clone())
    }
}

/// Solves mode `n` from scratch (sine coefficients computed for modes 1..=n).
pub fn solve_mode(spec: &ProblemSpec, n: usize) -> Result<ModeSolution> {
    check(n >= 1, "n", n as f64, "n >= 1")?;
    let data = spec.prepare(n)?;
    solve_mode_with(spec, &data, n)
}

/// Solves mode `n` from prepared sine data.
pub fn solve_mode_with(spec: &ProblemSpec, data: &PreparedData, n: usize) -> Result<ModeSolution> {
    check(n >= 1, "n", n as f64, "n >= 1")?;
    let forcing = data.forcing.get(n - 1).cloned().unwrap_or_default();
    solve_mode_data(spec, n, data.phi.coeff(n), data.psi.coeff(n), forcing)
}

/// Solves one mode with explicitly given data φ_n, ψ_n, f_n.
pub fn solve_mode_data(spec: &ProblemSpec, n: usize, phi: f64, psi: f64, forcing: ModeForcing) -> Result<ModeSolution> {
    let lambda = eigenvalue(n);
    let o = spec.orders;
    let (a, b) = (spec.domain.a, spec.domain.b);
    let delta = delta_for_lambda(&o, &spec.domain, lambda)?;
    if delta.degenerate {
        return Err(Error::DegenerateMode {
            n,
            which: "delta_n",
            value: delta.matching,
        });
    }
    let delta_star = delta_star_for_lambda(&o, &spec.domain, lambda)?;
    if delta_star.value.abs() < DELTA_STAR_FLOOR {
        return Err(Error::DegenerateMode {
            n,
            which: "delta_n_star",
            value: delta_star.value,
        });
    }

    let cp1 = Cp1Solution::new(
        CP1Spec {
            alpha1: o.alpha1,
            alpha2: o.alpha2,
            mu: o.mu,
            lambda,
            a: phi,
            b: 0.0,
            forcing: forcing_of(&forcing.omega1),
        },
        FormulaReading::Laplace,
        spec.quad,
    )?;
    let [p, q, f1] = cp1.parts(a)?;
    let [dp, dq, df1] = cp1.derivative_parts(a)?;
    let fa = forcing.right_limit_at_interface();
    let bn = (fa - lambda * phi * p - lambda * f1 - phi * dp - df1) / (dq + lambda * q);
    let cn = phi * p + bn * q + f1;
    let cp1 = cp1.with_initial_data(phi, bn)?;

    let cp2 = Cp2Solution::new(
        CP2Spec {
            beta: o.beta,
            lambda,
            origin: a,
            c: cn,
            g: 0.0,
            forcing: forcing_of(&forcing.omega2),
        },
        FormulaReading::Laplace,
        spec.quad,
    )?;
    let [e1, e2, f2] = cp2.parts(b)?;
    let gn = (psi - f2 - cn * e1) / e2;
    let cp2 = cp2.with_initial_data(cn, gn);
    for (name, v) in [("B_n", bn), ("C_n", cn), ("G_n", gn)] {
        if !v.is_finite() {
            return Err(Error::Domain(format!("mode {n}: {name} is not finite")));
        }
    }
    Ok(ModeSolution {
        n,
        lambda,
        phi,
        psi,
        b: bn,
        c: cn,
        g: gn,
        delta,
        delta_star,
        forcing,
        a,
        cp1,
        cp2,
    })
}

impl ModeSolution {
    pub fn interface(&self) -> f64 {
        self.a
    }

    /// T_n(t); the Ω₁ formula is used up to and including t = a.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if t <= self.a {
            self.cp1.eval(t)
        } else {
            self.cp2.eval(t)
        }
    }

    /// T_n′(t) for t ≠ a; t = a gives the left derivative.
    pub fn derivative(&self, t: f64) -> Result<f64> {
        if t <= self.a {
            if t == 0.0 {
                return Ok(self.b);
            }
            self.cp1.derivative(t)
        } else {
            self.cp2.derivative(t)
        }
    }

    /// T_n′(a−) from the closed form.
    pub fn left_derivative_at_interface(&self) -> Result<f64> {
        self.cp1.derivative(self.a)
    }

    /// T_n(a+) from the Ω₂ formula (equals C_n by construction).
    pub fn right_value_at_interface(&self) -> Result<f64> {
        self.cp2.eval(self.a)
    }

    /// Value from the Ω₁ formula, extended to any t ≥ 0.
    pub fn eval_left(&self, t: f64) -> Result<f64> {
        self.cp1.eval(t)
    }

    /// Value from the Ω₂ formula, for any t ≥ a.
    pub fn eval_right(&self, t: f64) -> Result<f64> {
        self.cp2.eval(t)
    }

    /// The same mode with B_n, C_n, G_n replaced (for perturbation probes).
    pub fn with_coefficients(&self, b: f64, c: f64, g: f64) -> Result<Self> {
        let mut out = self.clone();
        out.cp1 = self.cp1.with_initial_data(self.phi, b)?;
        out.cp2 = self.cp2.with_initial_data(c, g);
        out.b = b;
        out.c = c;
        out.g = g;
        Ok(out)
    }

    pub fn cp1(&self) -> &Cp1Solution {
        &self.cp1
    }

    pub fn cp2(&self) -> &Cp2Solution {
        &self.cp2
    }

    /// T_n(t) by direct numerical inversion of the Laplace transform on each
    /// subdomain, independent of the Mittag-Leffler closed forms.
    pub fn eval_transform(&self, t: f64) -> Result<f64> {
        if t == 0.0 {
            return Ok(self.phi);
        }
        if t <= self.a {
            self.transform_left()?.eval(t)
        } else {
            Ok(self.transform_right()?.eval(t - self.a)?)
        }
    }

    fn transform_left(&self) -> Result<LaplaceInverse> {
        let s = self.cp1.spec();
        let (a1, a2, mu) = (s.alpha1, s.alpha2, s.mu);
        let mut num = vec![(self.phi, a1 - 1.0), (self.phi * mu, a2 - 1.0), (self.b, a1 - 2.0)];
        num.extend(forcing_transform(&self.forcing.omega1)?);
        LaplaceInverse::new(
            PowerSum::new(num),
            PowerSum::new(vec![(1.0, a1), (mu, a2), (self.lambda, 0.0)]),
        )
    }

    fn transform_right(&self) -> Result<LaplaceInverse> {
        let beta = self.cp2.spec().beta;
        let mut num = vec![(self.c, beta - 1.0), (self.g, beta - 2.0)];
        num.extend(forcing_transform(&self.forcing.omega2)?);
        LaplaceInverse::new(PowerSum::new(num), PowerSum::new(vec![(1.0, beta), (self.lambda, 0.0)]))
    }

    pub fn coefficients(&self) -> ModeCoefficients {
        ModeCoefficients {
            n: self.n,
            lambda: self.lambda,
            phi: self.phi,
            psi: self.psi,
            b: self.b,
            c: self.c,
            g: self.g,
            delta_printed: self.delta.printed,
            delta_matching: self.delta.matching,
            delta_star: self.delta_star.value,
        }
    }
}

/// L[τ^γ] = Γ(γ+1)s^{−γ−1}, term by term.
fn forcing_transform(p: &PowerSum) -> Result<Vec<(f64, f64)>> {
    p.terms
        .iter()
        .filter(|t| t.0 != 0.0)
        .map(|&(c, g)| Ok((c * gamma(g + 1.0)?, -g - 1.0)))
        .collect()
}
