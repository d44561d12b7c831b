//! Positive real zeros j_{m,p} of the Bessel function J_m, m >= 0.
//!
//! Seeds come from the McMahon expansion (small order, or index well past
//! the order) or the large-order first-zero expansion, continued zero by
//! zero with the local spacing estimate `pi / sqrt(1 - m^2/x^2)`; each seed
//! is polished by Newton using `J_m' = (m/z) J_m - J_{m+1}`.

use num_complex::Complex64 as C64;

use crate::bessel::bessel_j_pair_scaled;
use crate::SpecFunError;

use std::f64::consts::PI;

/// Newton iteration budget; seeds land within a fraction of the spacing,
/// so hitting this means something is wrong with the inputs.
const MAX_NEWTON: usize = 100;

/// McMahon asymptotic approximation of j_{m,p}.
fn mcmahon(m: f64, p: u32) -> f64 {
    let beta = (p as f64 + m / 2.0 - 0.25) * PI;
    let mu = 4.0 * m * m;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8.powi(5))
}

/// First-zero expansion in the order, accurate for m >= 1.
fn first_zero_seed(m: f64) -> f64 {
    let c = m.cbrt();
    m + 1.8557571 * c + 1.033150 / c
}

/// One Newton polish from `seed`; steps clamped to the local spacing scale.
///
/// Near the turning point of a large order the ascending series carries
/// intrinsic cancellation noise, so steps stagnate slightly above machine
/// precision; a stagnating small step is accepted as converged.
fn newton(m: f64, seed: f64) -> Result<f64, SpecFunError> {
    let mut x = seed;
    let mut prev_step = f64::INFINITY;
    for _ in 0..MAX_NEWTON {
        let pair = bessel_j_pair_scaled(m, C64::new(x, 0.0))?;
        let jm = pair.jm.re;
        let jprime = (m / x) * jm - pair.jm1.re;
        if jprime == 0.0 {
            break;
        }
        let mut step = -jm / jprime;
        let clamp = 1.5;
        if step.abs() > clamp {
            step = clamp.copysign(step);
        }
        x += step;
        if step.abs() <= 1e-14 * x || (step.abs() >= prev_step && step.abs() <= 1e-6 * x) {
            return Ok(x);
        }
        prev_step = step.abs();
    }
    Err(SpecFunError::NonConvergence { what: format!("Newton for zero of J_{m} from seed {seed}") })
}

/// Spacing between consecutive zeros near x, from the phase derivative.
fn spacing(m: f64, x: f64) -> f64 {
    let ratio = m / x;
    if ratio >= 0.95 {
        // Right above the turning point the phase estimate degenerates.
        return PI / (1.0 - 0.95f64 * 0.95).sqrt();
    }
    PI / (1.0 - ratio * ratio).sqrt()
}

/// The p-th positive zero of J_m (p counts from 1).
pub fn bessel_zero(m: f64, p: u32) -> Result<f64, SpecFunError> {
    if !(m.is_finite() && m >= 0.0) {
        return Err(SpecFunError::InvalidInput(format!("order must be >= 0, got {m}")));
    }
    if p == 0 {
        return Err(SpecFunError::InvalidInput("zero index counts from 1".into()));
    }
    // McMahon is reliable once the zero sits well past the order.
    let p_direct = if m < 1.0 { 1 } else { (1.1 * m + 2.0).ceil() as u32 };
    if p >= p_direct {
        return newton(m, mcmahon(m, p));
    }
    // Transition region: walk up from the first zero.
    let mut x = newton(m, first_zero_seed(m))?;
    for _ in 1..p {
        x = newton(m, x + spacing(m, x))?;
    }
    Ok(x)
}

/// Zero of J_m within `tol` of `x >= 0`, if any. Serves the ratio pole guard.
pub(crate) fn nearest_real_zero_within(m: f64, x: f64, tol: f64) -> Option<f64> {
    if !x.is_finite() || x <= tol {
        return None;
    }
    let p_est = (x / PI - m / 2.0 + 0.25).round();
    let lo = (p_est - 1.0).max(1.0) as u32;
    for p in lo..lo + 3 {
        if let Ok(j) = bessel_zero(m, p) {
            if (j - x).abs() <= tol {
                return Some(j);
            }
        }
    }
    None
}
