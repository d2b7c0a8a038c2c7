//! Complex correntropy estimators.
//!
//! For complex random variables `C₁ = X + jZ` and `C₂ = Y + jS`, complex
//! correntropy with the complex Gaussian kernel is
//!
//! ```text
//! V(C₁, C₂) = E[ G(C₁ − C₂) ],   G(δ) = exp(−|δ|² / 2σ²) / (2πσ²)
//! ```
//!
//! and its sample estimate is the mean of `G` over paired samples.

mod estimator;
mod kernel;
mod limits;
mod parzen;

use crate::{Complex64, Error, Result};

pub use estimator::{complex_correntropy, complex_correntropy_polar, real_correntropy};
pub use kernel::{complex_gaussian_kernel, gaussian_kernel_1d};
pub use limits::{small_sigma_limit, taylor_decompose};
pub use parzen::{parzen_joint_density, plane_integral_check, QuadratureSettings};

/// Paired complex samples `(c1ₙ, c2ₙ)` compared by correntropy.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeries {
    c1: Vec<Complex64>,
    c2: Vec<Complex64>,
}

impl ComplexSeries {
    pub fn new(c1: Vec<Complex64>, c2: Vec<Complex64>) -> Result<Self> {
        if c1.len() != c2.len() {
            return Err(Error::domain(format!(
                "series lengths differ: {} vs {}",
                c1.len(),
                c2.len()
            )));
        }
        if c1.is_empty() {
            return Err(Error::domain("series must contain at least one pair"));
        }
        if let Some(i) = c1.iter().chain(&c2).position(|c| !c.is_finite()) {
            return Err(Error::domain(format!("non-finite sample at flat index {i}")));
        }
        Ok(Self { c1, c2 })
    }

    /// Builds a series from two real sequences (imaginary parts zero).
    pub fn from_real(x: &[f64], y: &[f64]) -> Result<Self> {
        Self::new(
            x.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
            y.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        )
    }

    pub fn c1(&self) -> &[Complex64] {
        &self.c1
    }

    pub fn c2(&self) -> &[Complex64] {
        &self.c2
    }

    pub fn len(&self) -> usize {
        self.c1.len()
    }

    /// Always false; a valid series holds at least one pair.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The same pairs with the roles of `c1` and `c2` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            c1: self.c2.clone(),
            c2: self.c1.clone(),
        }
    }

    /// Differences `c1ₙ − c2ₙ`.
    pub fn differences(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.c1.iter().zip(&self.c2).map(|(a, b)| a - b)
    }

    pub(crate) fn pairs(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        self.c1.iter().copied().zip(self.c2.iter().copied())
    }
}

/// Positive-definite kernel families usable in the correntropy definition.
///
/// Only the complex Gaussian is provided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KernelFamily {
    #[default]
    ComplexGaussian,
}

/// Kernel family plus bandwidth `σ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    sigma: f64,
    family: KernelFamily,
}

impl KernelSpec {
    pub fn gaussian(sigma: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::domain(format!("kernel size must be positive and finite, got {sigma}")));
        }
        Ok(Self {
            sigma,
            family: KernelFamily::ComplexGaussian,
        })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn family(&self) -> KernelFamily {
        self.family
    }

    /// `1 / (2πσ²)`, the kernel's peak value.
    pub fn peak(&self) -> f64 {
        kernel::kernel_unchecked(0.0, self.sigma)
    }
}

/// A complex number in magnitude/angle form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarComplex {
    magnitude: f64,
    angle: f64,
}

impl PolarComplex {
    pub fn new(magnitude: f64, angle: f64) -> Result<Self> {
        if !(magnitude >= 0.0) || !magnitude.is_finite() || !angle.is_finite() {
            return Err(Error::domain(format!(
                "polar value needs finite magnitude ≥ 0 and finite angle, got ({magnitude}, {angle})"
            )));
        }
        Ok(Self { magnitude, angle })
    }

    pub fn from_rect(c: Complex64) -> Self {
        let (magnitude, angle) = c.to_polar();
        Self { magnitude, angle }
    }

    pub fn to_rect(self) -> Complex64 {
        Complex64::from_polar(self.magnitude, self.angle)
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }
}

/// Split of the estimator into its large-`σ` expansion terms.
///
/// `leading + correlation_term + remainder` reproduces the estimator; the
/// remainder is defined as the exact residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaylorDiagnostics {
    /// `1 / (2πσ²)`.
    pub leading: f64,
    /// `−mean(|c1 − c2|²) / (2σ²) / (2πσ²)`.
    pub correlation_term: f64,
    /// Everything of order `σ⁻⁴` and higher.
    pub remainder: f64,
}

impl TaylorDiagnostics {
    pub fn total(&self) -> f64 {
        self.leading + self.correlation_term + self.remainder
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_rejects_bad_input() {
        let z = Complex64::new(0.0, 0.0);
        assert!(ComplexSeries::new(vec![z], vec![z, z]).is_err());
        assert!(ComplexSeries::new(vec![], vec![]).is_err());
        assert!(ComplexSeries::new(vec![Complex64::new(f64::NAN, 0.0)], vec![z]).is_err());
        assert!(ComplexSeries::new(vec![z], vec![Complex64::new(0.0, f64::INFINITY)]).is_err());
        assert!(ComplexSeries::new(vec![z], vec![z]).is_ok());
    }

    #[test]
    fn kernel_spec_rejects_non_positive_sigma() {
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(KernelSpec::gaussian(bad).is_err());
        }
    }

    #[test]
    fn polar_rejects_negative_magnitude() {
        assert!(PolarComplex::new(-1e-300, 0.0).is_err());
        assert!(PolarComplex::new(0.0, 1.0).is_ok());
    }

    #[test]
    fn polar_round_trip() {
        for &(re, im) in &[(1.0, 2.0), (-3.5, 0.25), (0.0, -7.0), (1e-8, 1e8)] {
            let c = Complex64::new(re, im);
            let back = PolarComplex::from_rect(c).to_rect();
            assert!((back - c).norm() <= 1e-12 * c.norm());
        }
    }
}
