//! Open sectors of the complex plane.
//!
//! Four families, all parametrized by a half-angle `theta` in (0, pi/2):
//! `SPlus` opens around the positive imaginary axis, `TPlus` around the
//! positive real axis, and `SMinus`/`TMinus` are their images under
//! `z -> -z`. Membership is strict (boundary rays excluded, 0 excluded).

use crate::complex::{principal_arg, C64};

/// An open sector with apex at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sector {
    /// `theta < arg z < pi - theta`: opens around the positive imaginary axis.
    SPlus(f64),
    /// `-pi + theta < arg z < -theta`: reflection of `SPlus` through 0.
    SMinus(f64),
    /// `|arg z| < theta`: opens around the positive real axis.
    TPlus(f64),
    /// `|arg(-z)| < theta`: opens around the negative real axis.
    TMinus(f64),
}

impl Sector {
    fn theta(self) -> f64 {
        let t = match self {
            Sector::SPlus(t) | Sector::SMinus(t) | Sector::TPlus(t) | Sector::TMinus(t) => t,
        };
        assert!(
            t > 0.0 && t < std::f64::consts::FRAC_PI_2,
            "sector half-angle must lie in (0, pi/2), got {t}"
        );
        t
    }

    /// Strict membership; `z = 0` is never contained.
    pub fn contains(self, z: C64) -> bool {
        let t = self.theta();
        if z == C64::new(0.0, 0.0) {
            return false;
        }
        let phi = principal_arg(z);
        let pi = std::f64::consts::PI;
        match self {
            Sector::SPlus(_) => phi > t && phi < pi - t,
            Sector::SMinus(_) => phi > -pi + t && phi < -t,
            Sector::TPlus(_) => phi.abs() < t,
            Sector::TMinus(_) => pi - phi.abs() < t,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: f64 = 0.3;

    #[test]
    fn axis_membership() {
        let i = C64::new(0.0, 1.0);
        let one = C64::new(1.0, 0.0);
        assert!(Sector::SPlus(T).contains(i));
        assert!(!Sector::SPlus(T).contains(-i));
        assert!(!Sector::SPlus(T).contains(one));
        assert!(Sector::SMinus(T).contains(-i));
        assert!(Sector::TPlus(T).contains(one));
        assert!(!Sector::TPlus(T).contains(-one));
        assert!(Sector::TMinus(T).contains(-one));
        // The negative real axis has arg = +pi by convention; TMinus must
        // contain it whichever zero sign the imaginary part carries.
        assert!(Sector::TMinus(T).contains(C64::new(-2.0, -0.0)));
    }

    #[test]
    fn boundaries_are_excluded() {
        let on_ray = C64::from_polar(2.0, T);
        assert!(!Sector::TPlus(T).contains(on_ray));
        assert!(!Sector::SPlus(T).contains(on_ray));
        assert!(!Sector::TPlus(T).contains(C64::new(0.0, 0.0)));
    }

    #[test]
    fn minus_sectors_are_reflections() {
        for k in 0..64 {
            let z = C64::from_polar(1.7, -3.1 + 0.1 * k as f64);
            assert_eq!(Sector::SMinus(T).contains(z), Sector::SPlus(T).contains(-z));
            assert_eq!(Sector::TMinus(T).contains(z), Sector::TPlus(T).contains(-z));
        }
    }

    #[test]
    #[should_panic]
    fn invalid_half_angle_panics() {
        Sector::TPlus(2.0).contains(C64::new(1.0, 0.0));
    }
}
