use std::f64::consts::PI;

use super::KernelSpec;
use crate::{Complex64, Error, Result};

/// Complex Gaussian kernel `exp(−|δ|²/2σ²) / (2πσ²)`.
///
/// Underflows to exactly zero once `|δ|²/2σ²` exceeds roughly 745.
pub fn complex_gaussian_kernel(delta: Complex64, spec: &KernelSpec) -> Result<f64> {
    if !delta.is_finite() {
        return Err(Error::domain(format!("kernel argument is not finite: {delta}")));
    }
    Ok(kernel_unchecked(delta.norm_sqr(), spec.sigma()))
}

/// One-dimensional Gaussian density `exp(−x²/2σ²) / (√(2π)σ)`.
pub fn gaussian_kernel_1d(x: f64, sigma: f64) -> f64 {
    (-(x * x) / (2.0 * sigma * sigma)).exp() / ((2.0 * PI).sqrt() * sigma)
}

#[inline]
pub(crate) fn kernel_unchecked(norm_sqr: f64, sigma: f64) -> f64 {
    let two_var = 2.0 * sigma * sigma;
    (-norm_sqr / two_var).exp() / (PI * two_var)
}
