//! Real poles of the branch maps and their residues.
//!
//! Each scalar branch map `alpha(z)` has simple real poles: at odd
//! half-multiples or multiples of `pi/a` on the interval branches, at the
//! zeros of `J_m` on a ball branch. Residues are computed by trapezoid
//! quadrature of `alpha` on a small circle around the pole, with two node
//! counts cross-checked against each other; for an analytic integrand the
//! trapezoid rule converges geometrically, so disagreement flags a contour
//! that strayed too close to something singular.

use num_complex::Complex64 as C64;
use robin_core::Branch;
use robin_specfun::bessel_zero;

use crate::alpha::{check_half_width, dtn_alpha_z};
use crate::DtnError;

use std::f64::consts::PI;

/// Trapezoid node counts for the residue contour; the finer count is the
/// returned value, the coarser one the cross-check.
const NODES: (usize, usize) = (256, 512);

/// Relative agreement required between the two quadratures.
const CONTOUR_TOL: f64 = 1e-8;

/// Real poles of the branch map in `(0, z_max]`, in increasing order.
pub fn dtn_poles(branch: &Branch, z_max: f64) -> Result<Vec<f64>, DtnError> {
    if !(z_max.is_finite() && z_max > 0.0) {
        return Err(DtnError::InvalidInput(format!("z_max must be positive, got {z_max}")));
    }
    match *branch {
        Branch::IntervalEven { half_width: a } => {
            check_half_width(a)?;
            Ok(lattice_upto(PI / a, PI / (2.0 * a), z_max))
        }
        Branch::IntervalOdd { half_width: a } => {
            check_half_width(a)?;
            Ok(lattice_upto(PI / a, PI / a, z_max))
        }
        Branch::Ball { dim, l } => {
            let m = Branch::ball_order(dim, l);
            let mut poles = Vec::new();
            // Zeros of J_m all sit above m.
            if m >= z_max {
                return Ok(poles);
            }
            for p in 1.. {
                let j = bessel_zero(m, p)?;
                if j > z_max {
                    break;
                }
                poles.push(j);
            }
            Ok(poles)
        }
    }
}

fn lattice_upto(step: f64, first: f64, z_max: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut x = first;
    while x <= z_max {
        out.push(x);
        x += step;
    }
    out
}

/// Residue of the branch map at the real pole `z_p`.
///
/// The contour radius is `min(1e-2, 0.45 z_p)`; branch poles are spaced at
/// least `pi / a` (interval) or `pi` (ball) apart, so the circle encloses
/// exactly one pole whenever `z_p` actually is one.
pub fn dtn_residue(branch: &Branch, z_p: f64) -> Result<C64, DtnError> {
    if !(z_p.is_finite() && z_p > 0.0) {
        return Err(DtnError::InvalidInput(format!("pole must be positive, got {z_p}")));
    }
    let radius = 1e-2f64.min(0.45 * z_p);
    let integrate = |n: usize| -> Result<C64, DtnError> {
        let mut acc = C64::new(0.0, 0.0);
        for k in 0..n {
            let theta = 2.0 * PI * k as f64 / n as f64;
            let dir = C64::from_polar(1.0, theta);
            let value = dtn_alpha_z(branch, C64::new(z_p, 0.0) + radius * dir).map_err(|e| {
                match e {
                    DtnError::PoleProximity { .. } => DtnError::ContourTouchesPole { at: z_p },
                    other => other,
                }
            })?;
            acc += value * dir;
        }
        Ok(acc * radius / n as f64)
    };
    let coarse = integrate(NODES.0)?;
    let fine = integrate(NODES.1)?;
    let disagreement = (fine - coarse).norm() / fine.norm().max(1.0);
    if disagreement > CONTOUR_TOL {
        return Err(DtnError::ContourNonConvergence { disagreement });
    }
    Ok(fine)
}
