//! Spherical-harmonic multiplicities for the ball.

/// Dimension of the space of spherical harmonics of degree `l` on the unit
/// sphere in `R^dim`: every ball eigenvalue found on harmonic branch `l`
/// carries this multiplicity.
pub fn ball_multiplicity(dim: u32, l: u32) -> u64 {
    assert!(dim >= 2, "harmonic sectors need dim >= 2, got {dim}");
    let full = binomial(dim as u64 + l as u64 - 1, l as u64);
    let lower = if l >= 2 {
        binomial(dim as u64 + l as u64 - 3, l as u64 - 2)
    } else {
        0
    };
    full - lower
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("multiplicity fits in u64")
}
