//! Shared numeric conventions for the spectral toolkit.
//!
//! Everything downstream agrees on the contents of this crate: the principal
//! square root used to pass between an eigenvalue `lambda` and its frequency
//! `z = sqrt(lambda)`, open sectors of the complex plane, rectangular search
//! regions in the z-plane, the quadratic-form range used for containment
//! checks, domain descriptions, and the record types produced by the solvers
//! and the tracer.

pub mod complex;
pub mod domain;
pub mod parallel;
pub mod records;
pub mod region;
pub mod sector;

pub use complex::{principal_arg, principal_sqrt, C64};
pub use domain::{ball_trace_constants, Branch, DomainError, DomainSpec};
pub use records::{CurveTrace, EigenvalueRecord, Symmetry, TraceEvent, TraceSample};
pub use region::{LambdaRegion, RegionSpec};
pub use sector::Sector;
