//! Certified root search: quadtree winding subdivision plus Newton.

use num_complex::Complex64 as C64;
use robin_core::RegionSpec;

use crate::function::SecularFunction;
use crate::winding::{winding_count, winding_on_circle};
use crate::SecularError;

/// Two located roots within this distance are the same root.
fn merge_tol(z: C64) -> f64 {
    1e-7 * (1.0 + z.norm())
}

/// Subdivision stops and reports an unresolvable cluster below this.
const CLUSTER_FLOOR: f64 = 1e-10;

/// Relative residual bound for certification, against the median boundary
/// magnitude of the search region.
const CERTIFY_TOL: f64 = 1e-9;

/// Cells with winding at most this attempt Newton resolution directly.
const DIRECT_WINDING: i64 = 3;

/// Boundary-zero dilation retries (factor per attempt).
const DILATE_RETRIES: usize = 3;
const DILATE_STEP: f64 = 1e-6;

/// A located zero of a secular function, in the z plane.
#[derive(Debug, Clone, Copy)]
pub struct SecularRoot {
    pub z: C64,
    /// Multiplicity as a zero of F(z). A zero at the origin carries twice
    /// the multiplicity of the eigenvalue it represents, F being even in z.
    pub multiplicity: u32,
    /// |F(z)| in the scaled evaluation, divided by the boundary scale.
    pub residual: f64,
    /// Residual within [`CERTIFY_TOL`] of zero.
    pub certified: bool,
}

/// All zeros of `f` in `region`, each with a winding-confirmed multiplicity.
///
/// `extra_seeds` are optional Newton starting points (asymptotic
/// predictions, continuation data); the search succeeds without them, they
/// only accelerate it. Roots within the boundary-dilation band (1e-6 of the
/// region diameter) may be included even when marginally outside.
pub fn find_roots(
    f: &SecularFunction,
    region: &RegionSpec,
    extra_seeds: &[C64],
) -> Result<Vec<SecularRoot>, SecularError> {
    let eval = |z: C64| f.eval(z);
    let scale = boundary_scale(f, region)?;
    let total = winding_with_dilation(&eval, region)?;
    if total == 0 {
        return Ok(Vec::new());
    }

    let mut found: Vec<(C64, u32)> = Vec::new();
    let mut queue: Vec<RegionSpec> = vec![region.clone()];
    let mut processed = 0usize;
    while let Some(cell) = queue.pop() {
        processed += 1;
        if processed > 100_000 {
            return Err(SecularError::NonConvergence("quadtree subdivision".into()));
        }
        let w = match winding_with_dilation(&eval, &cell) {
            Ok(w) => w,
            // A cluster can pin a zero arbitrarily close to every nearby
            // subdivision line; treat a hopeless boundary as unresolved.
            Err(SecularError::BoundaryZero { at }) => {
                return Err(SecularError::UnresolvedCluster {
                    center: at,
                    diameter: cell.diameter(),
                })
            }
            Err(e) => return Err(e),
        };
        if w == 0 {
            continue;
        }
        if w <= DIRECT_WINDING {
            if let Some(resolved) = resolve_cell(f, &cell, w, extra_seeds)? {
                found.extend(resolved);
                continue;
            }
        }
        if cell.diameter() < CLUSTER_FLOOR {
            return Err(SecularError::UnresolvedCluster {
                center: cell.center(),
                diameter: cell.diameter(),
            });
        }
        queue.extend(cell.quadrants());
    }

    // Roots caught twice through overlapping dilation bands collapse here.
    let mut merged: Vec<(C64, u32)> = Vec::new();
    for (z, mult) in found {
        if let Some(existing) = merged
            .iter_mut()
            .find(|(ze, _)| (*ze - z).norm() <= merge_tol(z))
        {
            existing.1 = existing.1.max(mult);
        } else {
            merged.push((z, mult));
        }
    }

    let located: i64 = merged.iter().map(|&(_, m)| m as i64).sum();
    if located != total {
        return Err(SecularError::WindingMismatch { total, located });
    }

    let mut roots = Vec::with_capacity(merged.len());
    for (z, multiplicity) in merged {
        let residual = f.eval(z)?.norm() / scale;
        roots.push(SecularRoot {
            z,
            multiplicity,
            residual,
            certified: residual <= CERTIFY_TOL,
        });
    }
    roots.sort_by(|a, b| {
        (a.z.re, a.z.im)
            .partial_cmp(&(b.z.re, b.z.im))
            .expect("finite root coordinates")
    });
    Ok(roots)
}

/// Median |F| over 64 boundary samples: the certification scale.
fn boundary_scale(f: &SecularFunction, region: &RegionSpec) -> Result<f64, SecularError> {
    let corners = region.corners();
    let mut mags = Vec::with_capacity(64);
    for k in 0..64 {
        let s = k as f64 / 64.0 * 4.0;
        let e = (s.floor() as usize).min(3);
        let frac = s - e as f64;
        let z = corners[e] + (corners[(e + 1) % 4] - corners[e]) * frac;
        mags.push(f.eval(z)?.norm());
    }
    mags.sort_by(|a, b| a.partial_cmp(b).expect("finite magnitudes"));
    let median = 0.5 * (mags[31] + mags[32]);
    if median <= 0.0 || !median.is_finite() {
        return Err(SecularError::BoundaryZero { at: region.center() });
    }
    Ok(median)
}

fn winding_with_dilation<F>(eval: &F, region: &RegionSpec) -> Result<i64, SecularError>
where
    F: Fn(C64) -> Result<C64, SecularError>,
{
    let step = DILATE_STEP * (1.0 + region.diameter());
    let mut last = None;
    for attempt in 0..=DILATE_RETRIES {
        let r = if attempt == 0 {
            region.clone()
        } else {
            region.dilated(attempt as f64 * step)
        };
        match winding_count(eval, &r) {
            Err(SecularError::BoundaryZero { at }) => last = Some(at),
            other => return other,
        }
    }
    Err(SecularError::BoundaryZero { at: last.expect("retried at least once") })
}

/// Try to fully account for a low-winding cell: Newton from a seed grid,
/// then confirm each candidate's multiplicity on a small circle. `None`
/// means the cell could not be resolved and needs subdivision.
#[allow(clippy::type_complexity)]
fn resolve_cell(
    f: &SecularFunction,
    cell: &RegionSpec,
    w: i64,
    extra_seeds: &[C64],
) -> Result<Option<Vec<(C64, u32)>>, SecularError> {
    let catch = cell.dilated(1e-6 * (1.0 + cell.diameter()));
    let mut candidates: Vec<C64> = Vec::new();
    let mut push = |z: C64, candidates: &mut Vec<C64>| {
        if catch.contains(z)
            && !candidates.iter().any(|c| (*c - z).norm() <= merge_tol(z))
        {
            candidates.push(z);
        }
    };

    let mut seeds: Vec<C64> = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            seeds.push(C64::new(
                cell.re_min + cell.width() * i as f64 / 4.0,
                cell.im_min + cell.height() * j as f64 / 4.0,
            ));
        }
    }
    seeds.extend(extra_seeds.iter().copied().filter(|z| catch.contains(*z)));

    for seed in seeds {
        if let Some(z) = newton(f, seed, cell)? {
            push(z, &mut candidates);
        }
    }
    if candidates.is_empty() {
        return Ok(None);
    }

    let mut resolved = Vec::with_capacity(candidates.len());
    let mut accounted = 0i64;
    for (i, &z) in candidates.iter().enumerate() {
        let nearest_other = candidates
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &o)| (o - z).norm())
            .fold(f64::INFINITY, f64::min);
        let to_boundary = distance_to_boundary(cell, z);
        let radius = (1e-6 * (1.0 + z.norm()))
            .min(0.25 * nearest_other)
            .min(0.5 * to_boundary.max(0.0))
            .max(1e-11 * (1.0 + z.norm()));
        let mult = match winding_on_circle(|p| f.eval(p), z, radius) {
            Ok(m) if m >= 1 => m,
            // Zero on the circle or no zero inside: unresolved geometry.
            _ => return Ok(None),
        };
        accounted += mult;
        resolved.push((z, mult as u32));
    }
    if accounted == w {
        Ok(Some(resolved))
    } else {
        Ok(None)
    }
}

fn distance_to_boundary(cell: &RegionSpec, z: C64) -> f64 {
    let dx = (z.re - cell.re_min).min(cell.re_max - z.re);
    let dy = (z.im - cell.im_min).min(cell.im_max - z.im);
    dx.min(dy)
}

/// Newton iteration on the scaled secular function. Returns a converged
/// point (which may sit slightly outside `home`), or None.
fn newton(
    f: &SecularFunction,
    seed: C64,
    home: &RegionSpec,
) -> Result<Option<C64>, SecularError> {
    let escape = 2.0 * (1.0 + home.diameter());
    let mut z = seed;
    for _ in 0..50 {
        let p = f.partials(z)?;
        if p.d_z.norm() == 0.0 {
            // Critical point: nudge off it.
            z += C64::new(1e-9, 2e-9) * (1.0 + z.norm());
            continue;
        }
        let step = p.value / p.d_z;
        z -= step;
        if (z - home.center()).norm() > escape || !z.is_finite() {
            return Ok(None);
        }
        if step.norm() <= 1e-13 * (1.0 + z.norm()) {
            return Ok(Some(z));
        }
    }
    Ok(None)
}
