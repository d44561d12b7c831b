//! Special functions on complex arguments.
//!
//! Everything the secular functions and boundary operators need: cotangent,
//! cosecant and tangent that stay finite for large imaginary parts, scaled
//! sine/cosine pairs, Bessel functions of the first kind with real order and
//! complex argument (plain, scaled, and as the ratio `J_{m+1}/J_m`), and
//! real zeros of `J_m`.
//!
//! Scaling convention: "scaled" values carry the factor `exp(-|Im z|)` so
//! that nothing overflows until `|Im z|` exceeds the f64 exponent range;
//! ratios of values with equal scaling, and the argument of a scaled value,
//! are those of the unscaled function.

pub mod bessel;
pub mod gamma;
pub mod trig;
pub mod zeros;

use num_complex::Complex64 as C64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("argument {at} is within {distance:e} of a pole")]
    PoleProximity { at: C64, distance: f64 },
    #[error("result would overflow: |Im z| = {im} exceeds the exponent range")]
    Overflow { im: f64 },
    #[error("{what} did not converge within the iteration budget")]
    NonConvergence { what: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub use bessel::{bessel_j, bessel_j_pair_scaled, bessel_j_ratio, bessel_j_scaled, ScaledPair};
pub use gamma::ln_gamma;
pub use trig::{cot, csc, sincos_scaled, tan};
pub use zeros::bessel_zero;
