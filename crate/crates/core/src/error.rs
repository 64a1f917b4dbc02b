//! Error type shared by all modules.

use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: requires {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("gamma function pole at x = {0}")]
    GammaPole(f64),

    #[error("gamma function overflows at x = {0}")]
    GammaOverflow(f64),

    #[error(
        "series did not converge after {terms} blocks (last block magnitude {last_block:.3e}, \
         partial sum {partial_sum:.6e})"
    )]
    NonConvergence {
        terms: usize,
        last_block: f64,
        partial_sum: f64,
    },

    #[error(
        "series evaluation lost precision to cancellation (sum of |terms| {abs_sum:.3e}, \
         partial sum {partial_sum:.6e}) and no contour route applies"
    )]
    Cancellation { abs_sum: f64, partial_sum: f64 },

    #[error("pole search failed: {0}")]
    PoleSearch(String),

    #[error("quadrature budget exceeded after {intervals} intervals (error estimate {error:.3e})")]
    Quadrature { intervals: usize, error: f64 },

    #[error("formula reading unresolved: {0}")]
    FormulaReading(String),

    #[error("insufficient resolution: {0}")]
    Resolution(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("linear solve failed at step {step} (h = {h:e}, order {order}): pivot {pivot:e}")]
    LinearSolve {
        step: usize,
        h: f64,
        order: f64,
        pivot: f64,
    },

    #[error("mode n={n} is degenerate: {which} = {value:e}")]
    DegenerateMode {
        n: usize,
        which: &'static str,
        value: f64,
    },

    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check(cond: bool, name: &'static str, value: f64, constraint: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            constraint,
        })
    }
}
