//! Scaled evaluation of the secular functions and their partials.

use num_complex::Complex64 as C64;
use robin_core::{principal_arg, Branch};
use robin_specfun::{bessel_j_pair_scaled, ln_gamma, sincos_scaled};

use crate::SecularError;

/// Below this |z a| (interval) or never (ball series covers its regime)
/// the odd form switches to its even power series.
const SMALL_W: f64 = 1e-2;

/// Value and partial derivatives of a secular function at one point, all
/// carrying the same positive scale factor `exp(-sigma(z))`.
#[derive(Debug, Clone, Copy)]
pub struct SecularPartials {
    /// `F(z) exp(-sigma)`.
    pub value: C64,
    /// `dF/dz exp(-sigma)`.
    pub d_z: C64,
    /// `dF/dalpha exp(-sigma)`.
    pub d_alpha: C64,
}

/// One secular function: a branch plus a Robin parameter.
#[derive(Debug, Clone)]
pub struct SecularFunction {
    branch: Branch,
    alpha: C64,
}

impl SecularFunction {
    pub fn new(branch: Branch, alpha: C64) -> Result<Self, SecularError> {
        if !alpha.is_finite() {
            return Err(SecularError::InvalidInput(format!("alpha must be finite, got {alpha}")));
        }
        match branch {
            Branch::IntervalEven { half_width } | Branch::IntervalOdd { half_width } => {
                if !(half_width.is_finite() && half_width > 0.0) {
                    return Err(SecularError::InvalidInput(format!(
                        "half-width must be positive, got {half_width}"
                    )));
                }
            }
            Branch::Ball { dim, .. } => {
                if dim < 2 {
                    return Err(SecularError::InvalidInput(format!(
                        "ball dimension must be >= 2, got {dim}"
                    )));
                }
            }
        }
        Ok(Self { branch, alpha })
    }

    pub fn branch(&self) -> &Branch {
        &self.branch
    }

    pub fn alpha(&self) -> C64 {
        self.alpha
    }

    /// Scaled value, for winding counts and residuals.
    pub fn eval(&self, z: C64) -> Result<C64, SecularError> {
        Ok(self.partials(z)?.value)
    }

    /// Scaled value and partial derivatives.
    pub fn partials(&self, z: C64) -> Result<SecularPartials, SecularError> {
        if !z.is_finite() {
            return Err(SecularError::InvalidInput(format!("argument must be finite, got {z}")));
        }
        let alpha = self.alpha;
        match self.branch {
            Branch::IntervalEven { half_width: a } => {
                let w = z * a;
                let (s, c, _) = sincos_scaled(w);
                Ok(SecularPartials {
                    value: z * s - alpha * c,
                    d_z: s * (1.0 + alpha * a) + c * (a * z),
                    d_alpha: -c,
                })
            }
            Branch::IntervalOdd { half_width: a } => {
                let w = z * a;
                if w.norm() < SMALL_W {
                    // cos w + (alpha a) sinc w as an even series in w.
                    let scale = (-w.im.abs()).exp();
                    let w2 = w * w;
                    let aa = alpha * a;
                    let c0 = C64::new(1.0, 0.0) + aa;
                    let c1 = -(C64::new(0.5, 0.0) + aa / 6.0);
                    let c2 = C64::new(1.0 / 24.0, 0.0) + aa / 120.0;
                    let c3 = -(C64::new(1.0 / 720.0, 0.0) + aa / 5040.0);
                    let value = c0 + w2 * (c1 + w2 * (c2 + w2 * c3));
                    // d/dz = 2 a^2 z (c1 + 2 c2 w^2 + 3 c3 w^4).
                    let d_z = 2.0 * a * a * z * (c1 + w2 * (2.0 * c2 + w2 * 3.0 * c3));
                    // d/dalpha = a sinc w.
                    let sinc = C64::new(1.0, 0.0) - w2 / 6.0 + w2 * w2 / 120.0
                        - w2 * w2 * w2 / 5040.0;
                    Ok(SecularPartials {
                        value: value * scale,
                        d_z: d_z * scale,
                        d_alpha: a * sinc * scale,
                    })
                } else {
                    let (s, c, _) = sincos_scaled(w);
                    Ok(SecularPartials {
                        value: c + alpha * s / z,
                        d_z: -a * s + alpha * (a * z * c - s) / (z * z),
                        d_alpha: s / z,
                    })
                }
            }
            Branch::Ball { dim, l } => {
                let m = Branch::ball_order(dim, l);
                let la = C64::new(l as f64, 0.0) + alpha;
                if z.norm() <= 12.0f64.max(1.5 * m) {
                    Ok(self.ball_series(m, la, z))
                } else {
                    Ok(self.ball_asymptotic(m, la, z)?)
                }
            }
        }
    }

    /// Ball secular function through the even power series
    /// `F = z^2 S_{m+1} / (2(m+1)) - (l+alpha) S_m`, scale `exp(-|Im z|)`.
    fn ball_series(&self, m: f64, la: C64, z: C64) -> SecularPartials {
        let u = z * z;
        let (sm, dsm) = series_with_derivative(m, u);
        let (sm1, dsm1) = series_with_derivative(m + 1.0, u);
        let scale = (-z.im.abs()).exp();
        let value = u / (2.0 * (m + 1.0)) * sm1 - la * sm;
        // d/dz = 2z d/du.
        let du = (sm1 + u * dsm1) / (2.0 * (m + 1.0)) - la * dsm;
        SecularPartials {
            value: value * scale,
            d_z: 2.0 * z * du * scale,
            d_alpha: -sm * scale,
        }
    }

    /// Ball secular function through scaled Bessel pairs; the scale is
    /// `exp(-|Im z|) |z/2|^m / Gamma(m+1)`, continuous in z and positive,
    /// so windings and Newton ratios are unaffected.
    fn ball_asymptotic(&self, m: f64, la: C64, z: C64) -> Result<SecularPartials, SecularError> {
        let pair = bessel_j_pair_scaled(m, z)?;
        // Remove the phase of (z/2)^m; its magnitude stays in the scale.
        let phase = C64::from_polar(1.0, -m * principal_arg(z / 2.0));
        let g = z * pair.jm1 - la * pair.jm;
        // dG/dz via J_m' = (m/z) J_m - J_{m+1}, J_{m+1}' = J_m - (m+1)/z J_{m+1}.
        let dg = pair.jm * (z - la * m / z) + pair.jm1 * (la - m);
        Ok(SecularPartials {
            value: g * phase,
            d_z: (dg - m / z * g) * phase,
            d_alpha: -pair.jm * phase,
        })
    }

    /// The scale exponent sigma(z), for diagnostics: the true function value
    /// is `eval(z) * exp(sigma(z))`.
    pub fn scale_exponent(&self, z: C64) -> f64 {
        match self.branch {
            Branch::IntervalEven { half_width: a } | Branch::IntervalOdd { half_width: a } => {
                (z * a).im.abs()
            }
            Branch::Ball { dim, l } => {
                let m = Branch::ball_order(dim, l);
                if z.norm() <= 12.0f64.max(1.5 * m) || z.norm() == 0.0 {
                    z.im.abs()
                } else {
                    z.im.abs() + ln_gamma(m + 1.0) - m * (z / 2.0).norm().ln()
                }
            }
        }
    }
}

/// `S(u) = sum_k c_k u^k` with `c_0 = 1`,
/// `c_{k+1} = -c_k / (4 (k+1)(m+k+1))`, and its u-derivative.
fn series_with_derivative(m: f64, u: C64) -> (C64, C64) {
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    let mut dsum = C64::new(0.0, 0.0);
    for k in 0..400u32 {
        let kf = k as f64;
        // (k+1) c_{k+1} u^k, from the current term c_k u^k.
        let dterm = term * (-0.25) / (m + kf + 1.0);
        dsum += dterm;
        term *= -u / (4.0 * (kf + 1.0) * (m + kf + 1.0));
        sum += term;
        if term.norm() <= 1e-18 * sum.norm() {
            break;
        }
    }
    (sum, dsum)
}
