//! The Parzen view of complex correntropy.
//!
//! With a product-Gaussian Parzen estimate `f̂` of the joint density of
//! `(x, y, z, s)`, integrating `f̂` over the plane `x = y = u₁, z = s = u₂`
//! reproduces the correntropy estimate at bandwidth `σ√2`.

use super::kernel::gaussian_kernel_1d;
use super::{complex_correntropy, ComplexSeries, KernelSpec};
use crate::sum::pairwise_sum;
use crate::{Error, Result};

/// Parzen estimate of the joint density of `(Re c1, Re c2, Im c1, Im c2)`
/// evaluated at `point = (x, y, z, s)`.
pub fn parzen_joint_density(series: &ComplexSeries, spec: &KernelSpec, point: [f64; 4]) -> f64 {
    let sigma = spec.sigma();
    let [x, y, z, s] = point;
    let terms: Vec<f64> = series
        .pairs()
        .map(|(a, b)| {
            gaussian_kernel_1d(x - a.re, sigma)
                * gaussian_kernel_1d(y - b.re, sigma)
                * gaussian_kernel_1d(z - a.im, sigma)
                * gaussian_kernel_1d(s - b.im, sigma)
        })
        .collect();
    pairwise_sum(&terms) / series.len() as f64
}

/// Trapezoid-rule settings for [`plane_integral_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    /// Margin added beyond the extreme samples, in units of `σ`.
    pub margin_sigmas: f64,
    /// Starting step, in units of `σ`.
    pub initial_step_sigmas: f64,
    /// Stop once two successive halvings of the step differ by less than this.
    pub tolerance: f64,
    pub max_refinements: u32,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self {
            margin_sigmas: 8.0,
            initial_step_sigmas: 1.0,
            tolerance: 1e-7,
            max_refinements: 6,
        }
    }
}

/// Compares the estimator at bandwidth `σ√2` (`lhs`) with the numeric
/// integral of the bandwidth-`σ` Parzen density over the plane
/// `x = y = u₁, z = s = u₂` (`rhs`).
pub fn plane_integral_check(
    series: &ComplexSeries,
    sigma: f64,
    grid: &QuadratureSettings,
) -> Result<(f64, f64)> {
    let spec = KernelSpec::gaussian(sigma)?;
    if !(grid.tolerance > 0.0 && grid.initial_step_sigmas > 0.0 && grid.margin_sigmas >= 0.0) {
        return Err(Error::domain("quadrature settings must be positive"));
    }
    let lhs = complex_correntropy(series, &KernelSpec::gaussian(sigma * std::f64::consts::SQRT_2)?);

    let margin = grid.margin_sigmas * sigma;
    let span = |vals: &mut dyn Iterator<Item = f64>| {
        let (lo, hi) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
        (lo - margin, hi + margin)
    };
    let re = span(&mut series.pairs().flat_map(|(a, b)| [a.re, b.re]));
    let im = span(&mut series.pairs().flat_map(|(a, b)| [a.im, b.im]));

    let step = grid.initial_step_sigmas * sigma;
    let mut n = (((re.1 - re.0).max(im.1 - im.0)) / step).ceil().max(2.0) as usize;
    let mut prev = trapezoid_on_plane(series, &spec, re, im, n);
    let mut change = f64::INFINITY;
    for _ in 0..grid.max_refinements {
        n *= 2;
        let next = trapezoid_on_plane(series, &spec, re, im, n);
        change = (next - prev).abs();
        prev = next;
        if change < grid.tolerance {
            return Ok((lhs, prev));
        }
    }
    Err(Error::Accuracy {
        estimate: change,
        tolerance: grid.tolerance,
    })
}

/// Composite trapezoid with `n` intervals per axis of
/// `f̂(u₁, u₁, u₂, u₂)` over `re × im`.
fn trapezoid_on_plane(
    series: &ComplexSeries,
    spec: &KernelSpec,
    re: (f64, f64),
    im: (f64, f64),
    n: usize,
) -> f64 {
    let h1 = (re.1 - re.0) / n as f64;
    let h2 = (im.1 - im.0) / n as f64;
    let weight = |i: usize| if i == 0 || i == n { 0.5 } else { 1.0 };
    let rows: Vec<f64> = (0..=n)
        .map(|i| {
            let u1 = re.0 + i as f64 * h1;
            let row: Vec<f64> = (0..=n)
                .map(|k| {
                    let u2 = im.0 + k as f64 * h2;
                    weight(k) * parzen_joint_density(series, spec, [u1, u1, u2, u2])
                })
                .collect();
            weight(i) * pairwise_sum(&row)
        })
        .collect();
    pairwise_sum(&rows) * h1 * h2
}
