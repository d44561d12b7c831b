//! Winding numbers by adaptive argument tracking.
//!
//! The argument of an analytic function along a closed curve is followed by
//! sampling: a step between consecutive samples is trusted only when the
//! principal argument of the value ratio stays below pi/2, otherwise the
//! step is bisected. The trusted increments sum to exactly 2 pi times the
//! number of enclosed zeros.

use num_complex::Complex64 as C64;
use robin_core::{principal_arg, RegionSpec};

use crate::SecularError;

use std::f64::consts::{FRAC_PI_2, PI};

/// Hard cap on function evaluations per winding computation.
pub(crate) const SAMPLE_BUDGET: usize = 1 << 20;

/// Below this magnitude a sample counts as a zero on the curve.
const ZERO_FLOOR: f64 = 1e-290;

/// Steps narrower than this parameter width that still cannot be trusted
/// indicate a zero on (or hugging) the curve.
const MIN_STEP: f64 = 1e-12;

/// Winding number of `f` along the positively oriented boundary of `region`.
pub fn winding_count<F>(f: F, region: &RegionSpec) -> Result<i64, SecularError>
where
    F: Fn(C64) -> Result<C64, SecularError>,
{
    let corners = region.corners();
    let path = |t: f64| -> C64 {
        // Four edges, equal parameter share each, counterclockwise.
        let s = (t.rem_euclid(1.0)) * 4.0;
        let k = (s.floor() as usize).min(3);
        let frac = s - k as f64;
        let a = corners[k];
        let b = corners[(k + 1) % 4];
        a + (b - a) * frac
    };
    winding_over_path(&f, &path, 64)
}

/// Winding number of `f` along the circle of given center and radius.
pub fn winding_on_circle<F>(
    f: F,
    center: C64,
    radius: f64,
) -> Result<i64, SecularError>
where
    F: Fn(C64) -> Result<C64, SecularError>,
{
    if !(radius.is_finite() && radius > 0.0) {
        return Err(SecularError::InvalidInput(format!("radius must be positive, got {radius}")));
    }
    let path = |t: f64| center + C64::from_polar(radius, 2.0 * PI * t);
    winding_over_path(&f, &path, 32)
}

fn winding_over_path<F, P>(f: &F, path: &P, initial: usize) -> Result<i64, SecularError>
where
    F: Fn(C64) -> Result<C64, SecularError>,
    P: Fn(f64) -> C64,
{
    let mut used = 0usize;
    let mut sample = |t: f64| -> Result<C64, SecularError> {
        if used >= SAMPLE_BUDGET {
            return Err(SecularError::SampleBudget { samples: used });
        }
        used += 1;
        let z = path(t);
        let v = f(z)?;
        if !v.is_finite() || v.norm() < ZERO_FLOOR {
            return Err(SecularError::BoundaryZero { at: z });
        }
        Ok(v)
    };

    // Closed polyline of (t, value) nodes; segments refine on a stack.
    let mut total = 0.0f64;
    let mut nodes = Vec::with_capacity(initial + 1);
    for k in 0..initial {
        let t = k as f64 / initial as f64;
        nodes.push((t, sample(t)?));
    }
    nodes.push((1.0, nodes[0].1));

    let mut stack: Vec<((f64, C64), (f64, C64))> =
        nodes.windows(2).map(|w| (w[0], w[1])).collect();
    while let Some(((t0, v0), (t1, v1))) = stack.pop() {
        let delta = principal_arg(v1 / v0);
        if delta.abs() <= FRAC_PI_2 {
            total += delta;
            continue;
        }
        if t1 - t0 < MIN_STEP {
            return Err(SecularError::BoundaryZero { at: path(0.5 * (t0 + t1)) });
        }
        let tm = 0.5 * (t0 + t1);
        let vm = sample(tm)?;
        stack.push(((t0, v0), (tm, vm)));
        stack.push(((tm, vm), (t1, v1)));
    }

    let turns = total / (2.0 * PI);
    let rounded = turns.round();
    if (turns - rounded).abs() > 0.25 {
        return Err(SecularError::NonConvergence(format!(
            "argument sum {total:.6} is not an integer number of turns"
        )));
    }
    Ok(rounded as i64)
}
