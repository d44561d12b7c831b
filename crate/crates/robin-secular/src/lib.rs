//! Secular functions for the Robin eigenvalue problem and a certified
//! complex root search.
//!
//! Each symmetry branch has an entire secular function `F(z)`, even in `z`,
//! whose zeros are exactly the square roots of the Robin eigenvalues for
//! the branch:
//!
//! * interval, even parity: `F(z) = z sin(z a) - alpha cos(z a)`,
//! * interval, odd parity: `F(z) = cos(z a) + alpha sin(z a) / z`,
//! * ball, harmonic degree l: `F(z) = Gamma(m+1) (z/2)^{-m}
//!   (z J_{m+1}(z) - (l + alpha) J_m(z))`, `m = d/2 + l - 1`.
//!
//! The odd and ball forms divide out the trivial zero structure at the
//! origin (the odd secular determinant vanishes at z = 0 for every alpha,
//! and the raw ball function carries the factor `z^m` with its half-integer
//! branch cut), so what remains vanishes only at genuine eigenvalues and is
//! single-valued on any region. Evaluation is scaled by a positive factor
//! `exp(-sigma(z))` chosen per regime so nothing overflows; windings and
//! Newton steps see the true function.
//!
//! Roots are located by adaptive-argument winding counts over rectangle
//! boundaries, refined by quadtree subdivision plus Newton, with per-root
//! multiplicities confirmed by a small winding circle and residuals
//! certified against the median boundary magnitude.

pub mod function;
pub mod search;
pub mod winding;

use num_complex::Complex64 as C64;
use robin_specfun::SpecFunError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SecularError {
    #[error("secular function vanishes on the search boundary at {at}")]
    BoundaryZero { at: C64 },
    #[error("cluster of zeros near {center} not separable above diameter {diameter:e}")]
    UnresolvedCluster { center: C64, diameter: f64 },
    #[error("winding count {total} but located multiplicities sum to {located}")]
    WindingMismatch { total: i64, located: i64 },
    #[error("sampling budget exhausted after {samples} boundary evaluations")]
    SampleBudget { samples: usize },
    #[error("{0} did not converge")]
    NonConvergence(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

pub use function::{SecularFunction, SecularPartials};
pub use search::{find_roots, SecularRoot};
pub use winding::{winding_count, winding_on_circle};
