use super::{complex_correntropy, ComplexSeries, KernelSpec, TaylorDiagnostics};
use crate::sum::pairwise_mean_by;
use crate::{Error, Result};

/// Splits the estimator into `1/(2πσ²)`, the second-moment correction and
/// the exact higher-order remainder.
pub fn taylor_decompose(series: &ComplexSeries, spec: &KernelSpec) -> TaylorDiagnostics {
    let sigma = spec.sigma();
    let leading = spec.peak();
    let diffs: Vec<_> = series.differences().collect();
    let second_moment = pairwise_mean_by(diffs.len(), |i| diffs[i].norm_sqr());
    let correlation_term = -leading * second_moment / (2.0 * sigma * sigma);
    let estimate = complex_correntropy(series, spec);
    TaylorDiagnostics {
        leading,
        correlation_term,
        remainder: estimate - leading - correlation_term,
    }
}

/// Normalized estimator `2πσ²·V̂` for each bandwidth in `sigmas`.
///
/// On discrete data this tends to the fraction of exactly equal pairs as `σ`
/// shrinks. `sigmas` must be strictly decreasing and positive.
pub fn small_sigma_limit(series: &ComplexSeries, sigmas: &[f64]) -> Result<Vec<f64>> {
    if sigmas.is_empty() {
        return Err(Error::domain("need at least one kernel size"));
    }
    if sigmas.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(Error::domain("kernel sizes must be strictly decreasing"));
    }
    sigmas
        .iter()
        .map(|&sigma| {
            let spec = KernelSpec::gaussian(sigma)?;
            Ok(complex_correntropy(series, &spec) / spec.peak())
        })
        .collect()
}
