//! Overflow-safe trigonometric kernels.
//!
//! Direct `cos/sin` quotients overflow once `|Im w|` passes ~710 and lose
//! accuracy well before that. For `|Im w| > 1` these kernels switch to
//! exponential forms in `q = exp(2iw)` (upper half-plane; the lower
//! half-plane goes through conjugation symmetry), which decay to the
//! asymptotic limits `cot -> -i`, `tan -> i`, `csc -> 0` as `Im w -> +inf`
//! with no intermediate quantity larger than O(1).

use num_complex::Complex64 as C64;

use crate::SpecFunError;

/// Below this distance from a pole the kernels refuse to evaluate.
pub const TRIG_POLE_GUARD: f64 = 1e-12;

/// Switch from direct quotients to exponential forms beyond this |Im w|.
const IM_SWITCH: f64 = 1.0;

const I: C64 = C64::new(0.0, 1.0);

fn guard(w: C64, pole_re: f64) -> Result<(), SpecFunError> {
    let distance = (w.re - pole_re).hypot(w.im);
    if distance < TRIG_POLE_GUARD {
        Err(SpecFunError::PoleProximity { at: w, distance })
    } else {
        Ok(())
    }
}

fn nearest_multiple(x: f64, step: f64, offset: f64) -> f64 {
    ((x - offset) / step).round() * step + offset
}

/// cot(w); poles at integer multiples of pi.
pub fn cot(w: C64) -> Result<C64, SpecFunError> {
    guard(w, nearest_multiple(w.re, std::f64::consts::PI, 0.0))?;
    if w.im > IM_SWITCH {
        // cot w = i (q + 1)/(q - 1), q = exp(2iw), |q| < exp(-2).
        let q = (2.0 * I * w).exp();
        Ok(I * (q + 1.0) / (q - 1.0))
    } else if w.im < -IM_SWITCH {
        Ok(cot(w.conj())?.conj())
    } else {
        Ok(w.cos() / w.sin())
    }
}

/// csc(w); poles at integer multiples of pi.
pub fn csc(w: C64) -> Result<C64, SpecFunError> {
    guard(w, nearest_multiple(w.re, std::f64::consts::PI, 0.0))?;
    if w.im > IM_SWITCH {
        // csc w = -2i e^{iw} / (1 - e^{2iw}); both exponentials decay.
        let e = (I * w).exp();
        Ok(-2.0 * I * e / (1.0 - e * e))
    } else if w.im < -IM_SWITCH {
        Ok(csc(w.conj())?.conj())
    } else {
        Ok(1.0 / w.sin())
    }
}

/// tan(w); poles at odd multiples of pi/2.
pub fn tan(w: C64) -> Result<C64, SpecFunError> {
    let half_pi = std::f64::consts::FRAC_PI_2;
    guard(w, nearest_multiple(w.re, std::f64::consts::PI, half_pi))?;
    if w.im > IM_SWITCH {
        // tan w = i (1 - q)/(1 + q), q = exp(2iw).
        let q = (2.0 * I * w).exp();
        Ok(I * (1.0 - q) / (1.0 + q))
    } else if w.im < -IM_SWITCH {
        Ok(tan(w.conj())?.conj())
    } else {
        Ok(w.sin() / w.cos())
    }
}

/// `(sin w, cos w)` scaled by `exp(-|Im w|)`, plus the exponent `|Im w|`.
///
/// Never overflows; the two values share the (positive real) scale factor,
/// so quotients and arguments built from them are exact.
pub fn sincos_scaled(w: C64) -> (C64, C64, f64) {
    if w.im.abs() <= IM_SWITCH {
        let s = w.im.abs();
        let f = (-s).exp();
        return (w.sin() * f, w.cos() * f, s);
    }
    if w.im < 0.0 {
        let (s, c, e) = sincos_scaled(w.conj());
        return (s.conj(), c.conj(), e);
    }
    // Im w > 1: sin w = (e^{iw} - e^{-iw})/(2i). After scaling by
    // exp(-Im w), the dominant e^{-iw} term has modulus exactly 1.
    let small = (I * w).exp() * (-w.im).exp(); // e^{iw - Im w}, modulus e^{-2 Im w}
    let big = (-I * C64::new(w.re, 0.0)).exp(); // e^{-iw}e^{-Im w} = e^{-i Re w}
    let s = (small - big) / (2.0 * I);
    let c = (small + big) / 2.0;
    (s, c, w.im)
}
