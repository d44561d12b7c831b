//! Search rectangles in the z-plane and the quadratic-form range.
//!
//! [`RegionSpec`] is the axis-aligned rectangle the certified root search
//! subdivides. [`LambdaRegion`] is the set `{t + alpha*s : t >= 0,
//! 0 <= s <= c1*sqrt(t) + c2}` that contains every eigenvalue and every
//! quadratic-form value for boundary parameter `alpha`; membership testing
//! reduces to a one-dimensional feasibility check.

use crate::complex::C64;

/// Closed axis-aligned rectangle `[re_min, re_max] x [im_min, im_max]` in
/// the z = sqrt(lambda) plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionSpec {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl RegionSpec {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Self {
        assert!(
            re_min < re_max && im_min < im_max,
            "degenerate region [{re_min}, {re_max}] x [{im_min}, {im_max}]"
        );
        assert!(
            re_min.is_finite() && re_max.is_finite() && im_min.is_finite() && im_max.is_finite(),
            "region bounds must be finite"
        );
        RegionSpec { re_min, re_max, im_min, im_max }
    }

    pub fn center(&self) -> C64 {
        C64::new((self.re_min + self.re_max) / 2.0, (self.im_min + self.im_max) / 2.0)
    }

    pub fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    pub fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    pub fn diameter(&self) -> f64 {
        self.width().hypot(self.height())
    }

    /// Closed containment.
    pub fn contains(&self, z: C64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }

    /// Expand every side outward by `amount`.
    pub fn dilated(&self, amount: f64) -> RegionSpec {
        RegionSpec::new(
            self.re_min - amount,
            self.re_max + amount,
            self.im_min - amount,
            self.im_max + amount,
        )
    }

    /// Split into four congruent quadrants (for the search quadtree).
    pub fn quadrants(&self) -> [RegionSpec; 4] {
        let c = self.center();
        [
            RegionSpec::new(self.re_min, c.re, self.im_min, c.im),
            RegionSpec::new(c.re, self.re_max, self.im_min, c.im),
            RegionSpec::new(self.re_min, c.re, c.im, self.im_max),
            RegionSpec::new(c.re, self.re_max, c.im, self.im_max),
        ]
    }

    /// Corners in counterclockwise order starting from the bottom-left.
    pub fn corners(&self) -> [C64; 4] {
        [
            C64::new(self.re_min, self.im_min),
            C64::new(self.re_max, self.im_min),
            C64::new(self.re_max, self.im_max),
            C64::new(self.re_min, self.im_max),
        ]
    }
}

/// The range `{t + alpha*s : t >= 0, 0 <= s <= c1*sqrt(t) + c2}`.
///
/// `t` plays the role of gradient energy and `s` of boundary mass, both per
/// unit of L^2 mass, so `c1`, `c2` are trace constants of the domain.
#[derive(Debug, Clone, Copy)]
pub struct LambdaRegion {
    pub alpha: C64,
    pub c1: f64,
    pub c2: f64,
}

impl LambdaRegion {
    pub fn new(alpha: C64, c1: f64, c2: f64) -> Self {
        assert!(c1 >= 0.0 && c2 >= 0.0, "trace constants must be nonnegative");
        LambdaRegion { alpha, c1, c2 }
    }

    /// Exact (closed) membership.
    pub fn contains(&self, lambda: C64) -> bool {
        self.contains_with_margin(lambda, 0.0)
    }

    /// Membership with a relative slack: the trace constants grow by the
    /// factor `1 + margin` and the decomposition residual may be as large as
    /// `margin * (1 + |lambda|)`. Used when `lambda` comes from a
    /// discretization rather than exact arithmetic.
    pub fn contains_with_margin(&self, lambda: C64, margin: f64) -> bool {
        let c1 = self.c1 * (1.0 + margin);
        let c2 = self.c2 * (1.0 + margin);
        let slack = margin * (1.0 + lambda.norm());
        if self.alpha.im != 0.0 {
            // s is pinned by the imaginary parts, t by what remains.
            let s = lambda.im / self.alpha.im;
            let s = s.max(0.0);
            let t = (lambda.re - s * self.alpha.re).max(0.0);
            let residual = (lambda - C64::new(t, 0.0) - self.alpha * s).norm();
            return residual <= slack && s <= c1 * t.sqrt() + c2 + margin;
        }
        // Real alpha: lambda must be (nearly) real.
        if lambda.im.abs() > slack {
            return false;
        }
        let x = lambda.re;
        let a = self.alpha.re;
        if a >= 0.0 {
            // t = x - a*s <= x, so feasibility needs x >= 0.
            return x >= -slack;
        }
        // a < 0: with u = sqrt(t), feasibility over u >= sqrt(max(x, 0)) of
        // u^2 - x <= |a| (c1 u + c2); the parabola's minimum gives the
        // closed-form left edge x >= -(c1^2/4) a^2 - c2 |a|.
        x >= -(c1 * c1 / 4.0) * a * a - c2 * a.abs() - slack
    }
}

/// Trace constants (c1, c2) for the unit ball in dimension `dim >= 2`:
/// c1 = 2 and c2 = dim + 2 sqrt(dim - 1), valid for the inequality
/// `||u||^2_boundary <= c1 ||grad u|| ||u|| + c2 ||u||^2`.
pub fn ball_trace_constants_impl(dim: u32) -> (f64, f64) {
    assert!(dim >= 2, "ball dimension must be at least 2");
    let d = dim as f64;
    (2.0, d + 2.0 * (d - 1.0).sqrt())
}
