//! Bessel functions of the first kind: real order m >= 0, complex argument.
//!
//! Two evaluation branches, selected by `|z|` against the switch radius
//! `r_switch = max(12, 1.5 m)`:
//!
//! * ascending power series `J_m(z) = (z/2)^m sum_k (-z^2/4)^k / (k! (m+1)_k
//!   Gamma(m+1))` below the switch, where it is cancellation-safe;
//! * Hankel asymptotic expansion `J_m(z) = sqrt(2/(pi z)) (P cos w - Q sin w)`
//!   with `w = z - (2m+1) pi/4` above it, with the P/Q sums truncated
//!   adaptively at their smallest term.
//!
//! All paths produce the scaled value `J_m(z) exp(-|Im z|)` alongside the
//! exponent, so nothing overflows until `|Im z|` exhausts the f64 exponent
//! range; `bessel_j` itself refuses (with `Overflow`) once rescaling would.

use num_complex::Complex64 as C64;

use crate::gamma::ln_gamma;
use crate::trig::sincos_scaled;
use crate::zeros::nearest_real_zero_within;
use crate::SpecFunError;

/// Largest |z| accepted; beyond this the asymptotic phase loses accuracy.
pub const Z_MAX: f64 = 1e5;

/// Distance to a real zero of J_m below which the ratio refuses to evaluate.
pub const RATIO_POLE_GUARD: f64 = 1e-8;

/// Rescaling bessel_j beyond this exponent would overflow f64.
const RESCALE_LIMIT: f64 = 700.0;

/// `J_m(z)` and `J_{m+1}(z)`, both scaled by `exp(-exponent)`.
#[derive(Debug, Clone, Copy)]
pub struct ScaledPair {
    pub jm: C64,
    pub jm1: C64,
    /// Always `|Im z|`.
    pub exponent: f64,
}

fn check_inputs(m: f64, z: C64) -> Result<(), SpecFunError> {
    if !(m.is_finite() && m >= 0.0) {
        return Err(SpecFunError::InvalidInput(format!("order must be >= 0, got {m}")));
    }
    if !z.is_finite() {
        return Err(SpecFunError::InvalidInput(format!("argument must be finite, got {z}")));
    }
    if z.norm() > Z_MAX {
        return Err(SpecFunError::InvalidInput(format!(
            "|z| = {} exceeds the supported range {Z_MAX}",
            z.norm()
        )));
    }
    Ok(())
}

/// Switch radius between the power series and the asymptotic expansion.
pub(crate) fn r_switch(m: f64) -> f64 {
    12.0f64.max(1.5 * m)
}

/// Power-series sum `sum_k (-z^2/4)^k / (k! (m+1)_k)` (unit leading term).
fn series_sum(m: f64, z: C64) -> C64 {
    let w = -z * z / 4.0;
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..400u32 {
        term *= w / ((k as f64 + 1.0) * (m + k as f64 + 1.0));
        sum += term;
        if term.norm() <= 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

/// Series-branch scaled pair. Requires z != 0.
pub(crate) fn series_pair(m: f64, z: C64) -> ScaledPair {
    let sm = series_sum(m, z);
    let sm1 = series_sum(m + 1.0, z);
    let half = z / 2.0;
    let log_half = C64::new(half.norm().ln(), robin_core::principal_arg(half));
    let exponent = z.im.abs();
    // log of the leading coefficient (z/2)^m / Gamma(m+1), minus the scaling.
    let lm = log_half * m - ln_gamma(m + 1.0) - exponent;
    let lead_m = lm.exp();
    let lead_m1 = (lm + log_half - (m + 1.0).ln()).exp();
    ScaledPair { jm: lead_m * sm, jm1: lead_m1 * sm1, exponent }
}

/// Hankel P and Q sums for one order, truncated at the smallest term.
///
/// Term magnitudes are allowed to grow while `(2j+1)^2 < 4m^2` (an initial
/// hump for moderate orders); only growth past that point marks the
/// asymptotic tail, where summation stops.
fn pq_sums(m: f64, z: C64) -> (C64, C64) {
    let mu = 4.0 * m * m;
    let mut p = C64::new(0.0, 0.0);
    let mut q = C64::new(0.0, 0.0);
    let mut term = C64::new(1.0, 0.0); // a_j / z^j
    let mut last_norm = f64::INFINITY;
    for j in 0..60u32 {
        let t = term.norm();
        let jf = j as f64;
        if t > last_norm && jf > m {
            break;
        }
        last_norm = t;
        match j % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
        term *= (mu - (2.0 * jf + 1.0) * (2.0 * jf + 1.0)) / (8.0 * (jf + 1.0) * z);
        if t <= 1e-17 * (p.norm() + q.norm()) {
            break;
        }
    }
    (p, q)
}

/// Asymptotic-branch scaled pair. Requires |arg z| < pi (off the negative
/// real axis) and |z| above the switch radius.
pub(crate) fn hankel_pair(m: f64, z: C64) -> ScaledPair {
    let (p0, q0) = pq_sums(m, z);
    let (p1, q1) = pq_sums(m + 1.0, z);
    let omega = z - C64::new((2.0 * m + 1.0) * std::f64::consts::FRAC_PI_4, 0.0);
    let (s, c, exponent) = sincos_scaled(omega);
    let amp = robin_core::principal_sqrt(C64::new(2.0 / std::f64::consts::PI, 0.0) / z);
    // Order m+1 shifts the phase by -pi/2: cos -> sin, sin -> -cos.
    ScaledPair {
        jm: amp * (p0 * c - q0 * s),
        jm1: amp * (p1 * s + q1 * c),
        exponent,
    }
}

/// `(J_m(z), J_{m+1}(z))` scaled by `exp(-|Im z|)`.
pub fn bessel_j_pair_scaled(m: f64, z: C64) -> Result<ScaledPair, SpecFunError> {
    check_inputs(m, z)?;
    if z == C64::new(0.0, 0.0) {
        let jm = if m == 0.0 { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
        return Ok(ScaledPair { jm, jm1: C64::new(0.0, 0.0), exponent: 0.0 });
    }
    if z.norm() <= r_switch(m) {
        Ok(series_pair(m, z))
    } else {
        Ok(hankel_pair(m, z))
    }
}

/// `J_m(z) exp(-|Im z|)` together with the exponent `|Im z|`.
pub fn bessel_j_scaled(m: f64, z: C64) -> Result<(C64, f64), SpecFunError> {
    let pair = bessel_j_pair_scaled(m, z)?;
    Ok((pair.jm, pair.exponent))
}

/// `J_m(z)`; fails with `Overflow` when `exp(|Im z|)` does not fit in f64
/// (use [`bessel_j_scaled`] there).
pub fn bessel_j(m: f64, z: C64) -> Result<C64, SpecFunError> {
    let (v, e) = bessel_j_scaled(m, z)?;
    if e > RESCALE_LIMIT {
        return Err(SpecFunError::Overflow { im: z.im });
    }
    Ok(v * e.exp())
}

/// `J_{m+1}(z) / J_m(z)`, scale-free.
///
/// Near the real axis the real zeros of `J_m` are poles of the ratio; inputs
/// within [`RATIO_POLE_GUARD`] of one are rejected.
pub fn bessel_j_ratio(m: f64, z: C64) -> Result<C64, SpecFunError> {
    check_inputs(m, z)?;
    if z == C64::new(0.0, 0.0) {
        return Ok(C64::new(0.0, 0.0));
    }
    if z.im.abs() < RATIO_POLE_GUARD {
        if let Some(zero) = nearest_real_zero_within(m, z.re.abs(), RATIO_POLE_GUARD) {
            let distance = (z.re.abs() - zero).hypot(z.im);
            return Err(SpecFunError::PoleProximity { at: z, distance });
        }
    }
    if z.norm() <= r_switch(m) {
        // Leading factors cancel exactly: ratio = z/(2(m+1)) * S_{m+1}/S_m.
        let sm = series_sum(m, z);
        let sm1 = series_sum(m + 1.0, z);
        if sm == C64::new(0.0, 0.0) {
            return Err(SpecFunError::PoleProximity { at: z, distance: 0.0 });
        }
        Ok(z / (2.0 * (m + 1.0)) * (sm1 / sm))
    } else {
        let pair = hankel_pair(m, z);
        if pair.jm == C64::new(0.0, 0.0) {
            return Err(SpecFunError::PoleProximity { at: z, distance: 0.0 });
        }
        Ok(pair.jm1 / pair.jm)
    }
}
