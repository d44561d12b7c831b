//! Model domains and solver branches.
//!
//! The toolkit computes spectra on three families: a symmetric interval
//! `(-a, a)`, a hyperrectangle (product of such intervals), and the unit
//! ball in dimension `d >= 2`. A [`Branch`] names one one-dimensional
//! reduction of the eigenvalue problem: interval eigenfunctions split by
//! parity, ball eigenfunctions by spherical-harmonic degree `l`.

use thiserror::Error;

use crate::region::ball_trace_constants_impl;

#[derive(Debug, Error, PartialEq)]
pub enum DomainError {
    #[error("interval half-width must be positive and finite, got {0}")]
    BadHalfWidth(f64),
    #[error("hyperrectangle needs at least one edge")]
    EmptyHyperrectangle,
    #[error("ball dimension must be at least 2, got {0}")]
    BadBallDimension(u32),
}

/// A model domain.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    /// The interval `(-a, a)`.
    Interval { half_width: f64 },
    /// A product of intervals `(-a_j, a_j)`, one entry per axis.
    Hyperrectangle { half_widths: Vec<f64> },
    /// The unit ball in `R^dim`, `dim >= 2`.
    Ball { dim: u32 },
}

impl DomainSpec {
    pub fn validate(&self) -> Result<(), DomainError> {
        match self {
            DomainSpec::Interval { half_width } => {
                if !(half_width.is_finite() && *half_width > 0.0) {
                    return Err(DomainError::BadHalfWidth(*half_width));
                }
            }
            DomainSpec::Hyperrectangle { half_widths } => {
                if half_widths.is_empty() {
                    return Err(DomainError::EmptyHyperrectangle);
                }
                for &a in half_widths {
                    if !(a.is_finite() && a > 0.0) {
                        return Err(DomainError::BadHalfWidth(a));
                    }
                }
            }
            DomainSpec::Ball { dim } => {
                if *dim < 2 {
                    return Err(DomainError::BadBallDimension(*dim));
                }
            }
        }
        Ok(())
    }
}

/// One one-dimensional branch of the eigenvalue problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Branch {
    /// Even interval eigenfunctions `cos(z x)` on `(-a, a)`.
    IntervalEven { half_width: f64 },
    /// Odd interval eigenfunctions `sin(z x)` on `(-a, a)`.
    IntervalOdd { half_width: f64 },
    /// Ball eigenfunctions with angular degree `l` in dimension `dim`.
    Ball { dim: u32, l: u32 },
}

impl Branch {
    /// The Bessel order `dim/2 + l - 1` attached to a ball branch.
    pub fn ball_order(dim: u32, l: u32) -> f64 {
        dim as f64 / 2.0 + l as f64 - 1.0
    }
}

/// Trace constants (c1, c2) for the unit ball in dimension `dim`:
/// c1 = 2, c2 = dim + 2 sqrt(dim - 1).
pub fn ball_trace_constants(dim: u32) -> (f64, f64) {
    ball_trace_constants_impl(dim)
}
