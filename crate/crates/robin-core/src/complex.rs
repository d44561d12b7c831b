//! Principal branch conventions for complex square roots and arguments.
//!
//! Every module passes between an eigenvalue `lambda` and its frequency
//! `z = sqrt(lambda)` through [`principal_sqrt`], so the branch choice is
//! pinned here once: cut along the negative real axis, `Re sqrt >= 0`, and a
//! negative real input maps to the positive imaginary axis.

/// Complex double used throughout the workspace.
pub type C64 = num_complex::Complex64;

/// Principal argument in (-pi, pi].
///
/// A negative real input returns +pi regardless of the sign of its zero
/// imaginary part; `principal_arg(C64::ZERO)` is 0.
pub fn principal_arg(z: C64) -> f64 {
    // atan2(-0.0, x<0) would give -pi; normalize so the cut maps upward.
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    im.atan2(z.re)
}

/// Principal square root: branch cut on the negative real axis, result in
/// the closed right half-plane, negative reals mapping to +i sqrt(|x|).
///
/// Uses the real/imaginary decomposition (rather than polar form) so the
/// result stays within a few ulp of the exact value.
pub fn principal_sqrt(z: C64) -> C64 {
    if z.im == 0.0 {
        return if z.re >= 0.0 {
            C64::new(z.re.sqrt(), 0.0)
        } else {
            C64::new(0.0, (-z.re).sqrt())
        };
    }
    let r = z.re.hypot(z.im);
    if z.re >= 0.0 {
        let w = ((r + z.re) / 2.0).sqrt();
        C64::new(w, z.im / (2.0 * w))
    } else {
        let v = ((r - z.re) / 2.0).sqrt();
        C64::new(z.im.abs() / (2.0 * v), if z.im >= 0.0 { v } else { -v })
    }
}
