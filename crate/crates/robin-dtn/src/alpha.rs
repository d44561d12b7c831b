//! Scalar boundary maps `alpha(lambda)` per symmetry branch.
//!
//! A point `lambda` is a Robin eigenvalue for the parameter `alpha` on a
//! branch exactly when the branch map takes the value `alpha` there:
//!
//! * interval, even parity: `alpha = z tan(z a)`,
//! * interval, odd parity: `alpha = -z cot(z a)`,
//! * ball, harmonic degree l: `alpha = z J_{m+1}(z)/J_m(z) - l` with
//!   `m = d/2 + l - 1`,
//!
//! all with `z = sqrt(lambda)` (principal branch; every map is even in z,
//! so the branch choice cannot matter).

use num_complex::Complex64 as C64;
use robin_core::{principal_sqrt, Branch};
use robin_specfun::{bessel_j_ratio, cot, tan, SpecFunError};

use crate::DtnError;

/// Distance in the z plane below which evaluation near a pole is refused.
pub const POLE_GUARD: f64 = 1e-8;

/// Below this |z a| the odd map switches to its even power series in
/// `w = z a`; the cotangent pole at zero is removable.
const SMALL_W: f64 = 1e-2;

pub(crate) fn check_half_width(a: f64) -> Result<(), DtnError> {
    if !(a.is_finite() && a > 0.0) {
        return Err(DtnError::InvalidInput(format!("half-width must be positive, got {a}")));
    }
    Ok(())
}

/// Distance from w to the nearest real lattice point `offset + k step`.
fn lattice_distance(w: C64, step: f64, offset: f64) -> f64 {
    let k = ((w.re - offset) / step).round();
    (w.re - offset - k * step).hypot(w.im)
}

/// `w cot w` as an even series, for |w| below [`SMALL_W`].
fn w_cot_w_series(w: C64) -> C64 {
    let w2 = w * w;
    // 1 - w^2/3 - w^4/45 - 2 w^6/945; next term ~ w^8/4725 < 1e-19.
    C64::new(1.0, 0.0) - w2 / 3.0 - w2 * w2 / 45.0 - 2.0 * w2 * w2 * w2 / 945.0
}

/// The branch map evaluated directly in the z plane.
pub fn dtn_alpha_z(branch: &Branch, z: C64) -> Result<C64, DtnError> {
    if !z.is_finite() {
        return Err(DtnError::InvalidInput(format!("argument must be finite, got {z}")));
    }
    match *branch {
        Branch::IntervalEven { half_width: a } => {
            check_half_width(a)?;
            let w = z * a;
            // Poles where cos(z a) = 0.
            let d = lattice_distance(w, std::f64::consts::PI, std::f64::consts::FRAC_PI_2);
            if d < POLE_GUARD * a {
                return Err(DtnError::PoleProximity { at: z, distance: d / a });
            }
            Ok(z * tan(w)?)
        }
        Branch::IntervalOdd { half_width: a } => {
            check_half_width(a)?;
            let w = z * a;
            if w.norm() < SMALL_W {
                return Ok(-w_cot_w_series(w) / a);
            }
            // Poles where sin(z a) = 0, except the removable one at zero.
            let d = lattice_distance(w, std::f64::consts::PI, 0.0);
            if d < POLE_GUARD * a {
                return Err(DtnError::PoleProximity { at: z, distance: d / a });
            }
            Ok(-z * cot(w)?)
        }
        Branch::Ball { dim, l } => {
            if dim < 2 {
                return Err(DtnError::InvalidInput(format!("ball dimension must be >= 2, got {dim}")));
            }
            let m = Branch::ball_order(dim, l);
            match bessel_j_ratio(m, z) {
                Ok(r) => Ok(z * r - l as f64),
                Err(SpecFunError::PoleProximity { at, distance }) => {
                    Err(DtnError::PoleProximity { at, distance })
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

/// The branch map as a function of the spectral parameter `lambda`.
pub fn dtn_alpha(branch: &Branch, lambda: C64) -> Result<C64, DtnError> {
    dtn_alpha_z(branch, principal_sqrt(lambda))
}
