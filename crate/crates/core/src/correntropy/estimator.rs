use std::f64::consts::PI;

use super::{ComplexSeries, KernelSpec, PolarComplex};
use crate::sum::pairwise_mean_by;
use crate::{Error, Result};

/// Sample complex correntropy: the mean kernel value over all pairs.
///
/// The result lies in `[0, 1/(2πσ²)]` and reaches the upper bound exactly
/// when every pair is equal. Swapping `c1` and `c2` gives a bit-identical
/// result.
pub fn complex_correntropy(series: &ComplexSeries, spec: &KernelSpec) -> f64 {
    let two_var = 2.0 * spec.sigma().powi(2);
    let (c1, c2) = (series.c1(), series.c2());
    // Averaging the unnormalized exponentials keeps the all-equal case exact.
    pairwise_mean_by(series.len(), |i| (-(c1[i] - c2[i]).norm_sqr() / two_var).exp()) * spec.peak()
}

/// Conventional correntropy of two real sequences with the 1-D Gaussian
/// kernel `exp(−x²/2σ²) / (√(2π)σ)`.
pub fn real_correntropy(x: &[f64], y: &[f64], spec: &KernelSpec) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::domain(format!("lengths differ: {} vs {}", x.len(), y.len())));
    }
    if x.is_empty() {
        return Err(Error::domain("real correntropy needs at least one pair"));
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(Error::domain("non-finite sample"));
    }
    let sigma = spec.sigma();
    let two_var = 2.0 * sigma * sigma;
    let mean = pairwise_mean_by(x.len(), |i| {
        let d = x[i] - y[i];
        (-(d * d) / two_var).exp()
    });
    Ok(mean / ((2.0 * PI).sqrt() * sigma))
}

/// Complex correntropy evaluated from polar coordinates.
///
/// Uses `|C₁ − C₂|² = |C₁|² + |C₂|² − 2|C₁||C₂|cos(θ − φ)`, so it agrees with
/// [`complex_correntropy`] on the rectangular conversion of the same data.
pub fn complex_correntropy_polar(
    pairs: &[(PolarComplex, PolarComplex)],
    spec: &KernelSpec,
) -> Result<f64> {
    if pairs.is_empty() {
        return Err(Error::domain("polar series must contain at least one pair"));
    }
    let two_var = 2.0 * spec.sigma().powi(2);
    Ok(pairwise_mean_by(pairs.len(), |i| {
        let (a, b) = pairs[i];
        let (r1, r2) = (a.magnitude(), b.magnitude());
        // Clamp tiny negative values produced by cancellation when a ≈ b.
        let dist_sqr = (r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * (a.angle() - b.angle()).cos()).max(0.0);
        (-dist_sqr / two_var).exp()
    }) * spec.peak())
}
