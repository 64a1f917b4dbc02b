//! Mittag-Leffler functions, fractional Cauchy problems and a Fourier-sine
//! solver for a time-fractional wave equation whose damping switches off at
//! an interface time `t = a`.
//!
//! The mixed problem on (0,1) × (0,b) reads
//!
//! ```text
//! D^{α₁}u + μ D^{α₂}u − u_xx = f     0 < t < a   (Caputo, origin 0)
//! D^{β}_a u − u_xx = f               a < t < b   (Caputo, origin a)
//! u(0,x) = φ(x),  u(b,x) = ψ(x),  u(t,0) = u(t,1) = 0
//! u(a−,x) = u(a+,x),  D^{β}_a u(a+,x) = u_t(a−,x)
//! ```
//!
//! with 0 < α₂ < 1 < α₁, β < 2.

pub mod error;
pub mod cauchy;
pub mod fracops;
pub mod interp;
pub mod quad;
pub mod specfun;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
