//! The full 2x2 Dirichlet-to-Neumann matrix of the interval (-a, a).
//!
//! Columns map boundary values (u(-a), u(a)) to outward normal derivatives.
//! In closed form, with z = sqrt(lambda) and w = 2 z a,
//!
//! ```text
//! M(lambda) = z [  cot w   -csc w ]
//!               [ -csc w    cot w ]
//! ```
//!
//! Its eigenvectors are the parity modes: on (1, 1) the eigenvalue is
//! `-z tan(z a)`, on (1, -1) it is `z cot(z a)`, so the scalar branch maps
//! of [`crate::dtn_alpha`] are minus these eigenvalues.

use num_complex::Complex64 as C64;
use robin_core::principal_sqrt;
use robin_specfun::{cot, csc};

use crate::alpha::{check_half_width, POLE_GUARD};
use crate::DtnError;

/// Below this |2 z a| both entries switch to even power series in w.
const SMALL_W: f64 = 1e-2;

/// DtN matrix at spectral parameter `lambda` for half-width `a`.
///
/// Entries have poles where `sin(2 z a) = 0` (z nonzero); evaluation within
/// [`POLE_GUARD`] of one (z-plane distance) is refused. The apparent
/// singularity at `lambda = 0` is removable: `M(0) = (1/(2a)) [[1, -1], [-1, 1]]`.
pub fn interval_dtn_matrix(lambda: C64, a: f64) -> Result<[[C64; 2]; 2], DtnError> {
    check_half_width(a)?;
    if !lambda.is_finite() {
        return Err(DtnError::InvalidInput(format!("lambda must be finite, got {lambda}")));
    }
    let z = principal_sqrt(lambda);
    let w = z * (2.0 * a);
    let (diag, off) = if w.norm() < SMALL_W {
        let w2 = w * w;
        // w cot w and w csc w as even series; next terms are O(w^8).
        let wcot = C64::new(1.0, 0.0) - w2 / 3.0 - w2 * w2 / 45.0 - 2.0 * w2 * w2 * w2 / 945.0;
        let wcsc = C64::new(1.0, 0.0) + w2 / 6.0 + 7.0 * w2 * w2 / 360.0
            + 31.0 * w2 * w2 * w2 / 15120.0;
        (wcot / (2.0 * a), -wcsc / (2.0 * a))
    } else {
        let k = (w.re / std::f64::consts::PI).round();
        let d = (w.re - k * std::f64::consts::PI).hypot(w.im);
        if d < POLE_GUARD * 2.0 * a {
            return Err(DtnError::PoleProximity { at: z, distance: d / (2.0 * a) });
        }
        (z * cot(w)?, -z * csc(w)?)
    };
    Ok([[diag, off], [off, diag]])
}
