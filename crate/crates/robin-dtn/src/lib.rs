//! Dirichlet-to-Neumann maps for the Robin eigenvalue problem on model
//! domains.
//!
//! On each symmetry branch the boundary operator reduces to a scalar
//! meromorphic function `alpha(lambda)`: a point `lambda` is a Robin
//! eigenvalue for parameter `alpha` exactly when `alpha(lambda) = alpha`.
//! This crate evaluates those scalar maps, the full 2x2 interval boundary
//! matrix, the real poles of each branch with their residues, and the
//! eigenvalue multiplicities carried by spherical-harmonic sectors.

pub mod alpha;
pub mod ball;
pub mod interval;
pub mod residue;

use num_complex::Complex64 as C64;
use robin_specfun::SpecFunError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DtnError {
    #[error("{at} is within {distance:e} of a boundary-operator pole")]
    PoleProximity { at: C64, distance: f64 },
    #[error("integration contour around {at} comes too close to a pole")]
    ContourTouchesPole { at: f64 },
    #[error("contour quadrature disagrees with itself by {disagreement:e}")]
    ContourNonConvergence { disagreement: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

pub use alpha::{dtn_alpha, dtn_alpha_z};
pub use ball::ball_multiplicity;
pub use interval::interval_dtn_matrix;
pub use residue::{dtn_poles, dtn_residue};
