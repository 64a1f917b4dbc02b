//! Ready-made problems used by the tests and the command-line tool.

use std::f64::consts::PI;

use super::{ModeForcing, OrderSet, ProblemSpec, SourceTerm, TimeDomain};
use crate::error::{Error, Result};
use crate::specfun::laplace::PowerSum;
use crate::specfun::rgamma;

#[derive(Debug, Clone)]
pub struct CatalogProblem {
    pub name: &'static str,
    pub description: &'static str,
    pub spec: ProblemSpec,
}

const NAMES: [&str; 3] = ["homogeneous", "single_mode", "polynomial"];

pub fn catalog_names() -> &'static [&'static str] {
    &NAMES
}

fn default_orders() -> OrderSet {
    OrderSet {
        alpha1: 1.5,
        alpha2: 0.5,
        beta: 1.25,
        mu: 1.0,
    }
}

fn default_domain() -> TimeDomain {
    TimeDomain { a: 1.0, b: 2.0 }
}

/// Catalog problem with the default orders (α₁ = 1.5, α₂ = 0.5, β = 1.25,
/// μ = 1), domain a = 1, b = 2, and its default truncation.
pub fn catalog(name: &str) -> Result<CatalogProblem> {
    let modes = if name == "polynomial" { 16 } else { 8 };
    catalog_with(name, default_orders(), default_domain(), modes)
}

/// Catalog data with caller-chosen orders, domain and truncation.
pub fn catalog_with(name: &str, orders: OrderSet, domain: TimeDomain, modes: usize) -> Result<CatalogProblem> {
    match name {
        "homogeneous" => Ok(CatalogProblem {
            name: "homogeneous",
            description: "phi = sin(pi x), psi = 0, f = 0",
            spec: ProblemSpec::new(orders, domain, |x| (PI * x).sin(), |_| 0.0, SourceTerm::Zero, modes)?,
        }),
        "single_mode" => {
            let mut spec = manufactured_single_mode(orders, domain, 2, 0.7, 0.4, -0.3, 0.25)?.spec;
            spec.modes = modes.max(2);
            Ok(CatalogProblem {
                name: "single_mode",
                description: "manufactured mode-2 solution, piecewise quadratic in time",
                spec,
            })
        }
        "polynomial" => Ok(CatalogProblem {
            name: "polynomial",
            description: "phi = x(1-x), psi = x(1-x)/2, f = (1+t) sin(pi x)",
            spec: ProblemSpec::new(
                orders,
                domain,
                |x| x * (1.0 - x),
                |x| 0.5 * x * (1.0 - x),
                SourceTerm::Modal(vec![ModeForcing {
                    omega1: PowerSum::new(vec![(1.0, 0.0), (1.0, 1.0)]),
                    omega2: PowerSum::new(vec![(1.0 + domain.a, 0.0), (1.0, 1.0)]),
                }]),
                modes,
            )?,
        }),
        other => Err(Error::Domain(format!(
            "unknown catalog problem '{other}' (known: {})",
            NAMES.join(", ")
        ))),
    }
}

/// A problem whose exact solution is u = T(t) sin(nπx) with
/// T = φ + Bt + c₂t² on [0, a] (c₂ = −B/2a, so T′(a−) = 0) and
/// T = C + G(t−a) + e₂(t−a)² on [a, b].
#[derive(Debug, Clone)]
pub struct Manufactured {
    pub spec: ProblemSpec,
    pub n: usize,
    pub phi: f64,
    pub b: f64,
    pub c: f64,
    pub g: f64,
    c2: f64,
    e2: f64,
    a: f64,
}

impl Manufactured {
    /// Exact T(t).
    pub fn mode(&self, t: f64) -> f64 {
        if t <= self.a {
            self.phi + self.b * t + self.c2 * t * t
        } else {
            let tau = t - self.a;
            self.c + self.g * tau + self.e2 * tau * tau
        }
    }

    /// Exact T′(t); the left derivative at t = a.
    pub fn mode_derivative(&self, t: f64) -> f64 {
        if t <= self.a {
            self.b + 2.0 * self.c2 * t
        } else {
            self.g + 2.0 * self.e2 * (t - self.a)
        }
    }

    /// Exact u(t, x).
    pub fn exact(&self, t: f64, x: f64) -> f64 {
        self.mode(t) * (self.n as f64 * PI * x).sin()
    }
}

pub fn manufactured_single_mode(
    orders: OrderSet,
    domain: TimeDomain,
    n: usize,
    phi: f64,
    b: f64,
    g: f64,
    e2: f64,
) -> Result<Manufactured> {
    orders.validate()?;
    domain.validate()?;
    if n == 0 {
        return Err(Error::Domain("mode index starts at 1".into()));
    }
    let a = domain.a;
    let lambda = (n as f64 * PI).powi(2);
    let c2 = -b / (2.0 * a);
    let c = phi + b * a + c2 * a * a;
    let OrderSet { alpha1, alpha2, beta, mu } = orders;
    // D^{α₁}T + μD^{α₂}T + λT on [0, a]
    let omega1 = PowerSum::new(vec![
        (lambda * phi, 0.0),
        (lambda * b, 1.0),
        (lambda * c2, 2.0),
        (2.0 * c2 * rgamma(3.0 - alpha1), 2.0 - alpha1),
        (mu * b * rgamma(2.0 - alpha2), 1.0 - alpha2),
        (mu * 2.0 * c2 * rgamma(3.0 - alpha2), 2.0 - alpha2),
    ])
    .simplified();
    // D^β_a T + λT on [a, b]
    let omega2 = PowerSum::new(vec![
        (lambda * c, 0.0),
        (lambda * g, 1.0),
        (lambda * e2, 2.0),
        (2.0 * e2 * rgamma(3.0 - beta), 2.0 - beta),
    ])
    .simplified();
    let tau = domain.b - a;
    let terminal = c + g * tau + e2 * tau * tau;
    let mut modal = vec![ModeForcing::default(); n];
    modal[n - 1] = ModeForcing { omega1, omega2 };
    let k = n as f64 * PI;
    let spec = ProblemSpec::new(
        orders,
        domain,
        move |x| phi * (k * x).sin(),
        move |x| terminal * (k * x).sin(),
        SourceTerm::Modal(modal),
        n,
    )?;
    Ok(Manufactured {
        spec,
        n,
        phi,
        b,
        c,
        g,
        c2,
        e2,
        a,
    })
}
