//! Numeric checks of the estimator's analytic properties.
//!
//! Each check draws seeded random data, evaluates the estimators and returns
//! a pass/fail verdict with the measured quantity, so the same suite backs
//! the `validate-properties` command and the acceptance tests.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::correntropy::{
    complex_correntropy, complex_correntropy_polar, plane_integral_check, real_correntropy, small_sigma_limit,
    taylor_decompose, QuadratureSettings,
};
use crate::{Complex64, ComplexSeries, KernelSpec, PolarComplex, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyCheck {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for PropertyCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict}  property {} ({}): {}", self.id, self.name, self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random datasets for the exact identities (symmetry, boundedness, real relation, polar form).
    pub datasets: usize,
    /// Random datasets for the plane-integral identity.
    pub plane_datasets: usize,
    /// Resamples per sample size for the variance-decay check.
    pub resamples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            seed: 2017,
            datasets: 1000,
            plane_datasets: 20,
            resamples: 2000,
        }
    }
}

/// Runs all seven checks in order.
pub fn run_property_suite(opts: &SuiteOptions) -> Vec<PropertyCheck> {
    vec![
        check_symmetry(opts),
        check_boundedness(opts),
        check_large_sigma(),
        check_small_sigma(opts),
        check_consistency(opts),
        check_real_relation(opts),
        check_polar_form(opts),
    ]
}

fn rng_for(opts: &SuiteOptions, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(id);
    rng
}

/// Uniform complex value in `[-scale, scale]²`.
pub fn random_complex<R: Rng>(rng: &mut R, scale: f64) -> Complex64 {
    Complex64::new(rng.random_range(-scale..=scale), rng.random_range(-scale..=scale))
}

/// Random series of `n` pairs with components in `[-scale, scale]`.
pub fn random_series<R: Rng>(rng: &mut R, n: usize, scale: f64) -> ComplexSeries {
    let c1 = (0..n).map(|_| random_complex(rng, scale)).collect();
    let c2 = (0..n).map(|_| random_complex(rng, scale)).collect();
    ComplexSeries::new(c1, c2).expect("finite equal-length samples")
}

fn random_sigma<R: Rng>(rng: &mut R) -> KernelSpec {
    KernelSpec::gaussian(rng.random_range(0.2..5.0)).expect("positive")
}

/// Symmetry: swapping the series gives a bit-identical estimate.
pub fn check_symmetry(opts: &SuiteOptions) -> PropertyCheck {
    let mut rng = rng_for(opts, 1);
    let mismatches = (0..opts.datasets)
        .filter(|_| {
            let n = rng.random_range(1..=64);
            let s = random_series(&mut rng, n, 3.0);
            let spec = random_sigma(&mut rng);
            complex_correntropy(&s, &spec).to_bits() != complex_correntropy(&s.swapped(), &spec).to_bits()
        })
        .count();
    PropertyCheck {
        id: 1,
        name: "symmetry",
        passed: mismatches == 0,
        detail: format!("{mismatches} of {} datasets differ after swapping", opts.datasets),
    }
}

/// Boundedness: `0 < V ≤ 1/(2πσ²)`, with equality exactly for equal series.
pub fn check_boundedness(opts: &SuiteOptions) -> PropertyCheck {
    let mut rng = rng_for(opts, 2);
    let mut failures = 0;
    for _ in 0..opts.datasets {
        let n = rng.random_range(1..=64);
        let s = random_series(&mut rng, n, 3.0);
        let spec = random_sigma(&mut rng);
        let v = complex_correntropy(&s, &spec);
        // Strict positivity is only guaranteed before the exponential underflows.
        let min_exponent = s
            .differences()
            .map(|d| d.norm_sqr() / (2.0 * spec.sigma().powi(2)))
            .fold(f64::INFINITY, f64::min);
        let positive_ok = v > 0.0 || min_exponent >= 700.0;
        let unequal = s.c1() != s.c2();
        if !(positive_ok && v <= spec.peak() && (!unequal || v < spec.peak())) {
            failures += 1;
        }
        let same = ComplexSeries::new(s.c1().to_vec(), s.c1().to_vec()).expect("valid");
        if complex_correntropy(&same, &spec) != spec.peak() {
            failures += 1;
        }
    }
    PropertyCheck {
        id: 2,
        name: "boundedness",
        passed: failures == 0,
        detail: format!("{failures} violations over {} datasets (and their self-pairs)", opts.datasets),
    }
}

/// Normalized Taylor remainder `|2πσ²·V − (1 − E|Δ|²/2σ²)|` at each `sigma`.
pub fn taylor_remainders(series: &ComplexSeries, sigmas: &[f64]) -> Result<Vec<f64>> {
    sigmas
        .iter()
        .map(|&sigma| {
            let spec = KernelSpec::gaussian(sigma)?;
            Ok((taylor_decompose(series, &spec).remainder / spec.peak()).abs())
        })
        .collect()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let cov: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let var: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    cov / var
}

/// Fixed dataset used for the large-kernel decay check.
pub fn large_sigma_dataset() -> ComplexSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    random_series(&mut rng, 32, 1.0)
}

/// Large-kernel limit: the remainder after the second-moment term decays as `σ⁻⁴`.
pub fn check_large_sigma() -> PropertyCheck {
    let sigmas = [4.0, 8.0, 16.0, 32.0];
    let s = large_sigma_dataset();
    match taylor_remainders(&s, &sigmas) {
        Ok(r) => {
            let slope = log_log_slope(&sigmas, &r);
            PropertyCheck {
                id: 3,
                name: "large-sigma limit",
                passed: (slope + 4.0).abs() <= 0.3,
                detail: format!("log-log remainder slope {slope:.4} over sigma 4..32 (target -4 ± 0.3)"),
            }
        }
        Err(e) => PropertyCheck {
            id: 3,
            name: "large-sigma limit",
            passed: false,
            detail: e.to_string(),
        },
    }
}

/// Small-kernel limit: at tiny `σ` the normalized estimate is the fraction of equal
/// pairs, and the plane integral of the Parzen density equals the estimate
/// at `σ√2`.
pub fn check_small_sigma(opts: &SuiteOptions) -> PropertyCheck {
    let mut rng = rng_for(opts, 4);
    let mut worst_fraction_err = 0.0f64;
    for _ in 0..100 {
        let n = rng.random_range(1..=40);
        let mut s = random_series(&mut rng, n, 2.0);
        let equal = rng.random_range(0..=n);
        let mut c2 = s.c2().to_vec();
        c2[..equal].copy_from_slice(&s.c1()[..equal]);
        s = ComplexSeries::new(s.c1().to_vec(), c2).expect("valid");
        let got = small_sigma_limit(&s, &[1e-6]).expect("valid sigma")[0];
        worst_fraction_err = worst_fraction_err.max((got - equal as f64 / n as f64).abs());
    }
    let (worst_plane, plane_err) = match worst_plane_gap(opts) {
        Ok(gap) => (gap, None),
        Err(e) => (f64::INFINITY, Some(e.to_string())),
    };
    PropertyCheck {
        id: 4,
        name: "small-sigma limit",
        passed: worst_fraction_err <= 1e-12 && worst_plane <= 1e-6,
        detail: match plane_err {
            None => format!(
                "equal-pair fraction error {worst_fraction_err:.2e} at sigma=1e-6; plane-integral gap {worst_plane:.2e} over {} datasets",
                opts.plane_datasets
            ),
            Some(e) => format!("plane integral failed: {e}"),
        },
    }
}

/// Largest `|lhs − rhs|` of the plane-integral identity over random datasets
/// with `N ≤ 32`, `σ = 1`.
pub fn worst_plane_gap(opts: &SuiteOptions) -> Result<f64> {
    let mut rng = rng_for(opts, 41);
    let grid = QuadratureSettings::default();
    let mut worst = 0.0f64;
    for _ in 0..opts.plane_datasets {
        let n = rng.random_range(1..=32);
        let s = random_series(&mut rng, n, 2.0);
        let (lhs, rhs) = plane_integral_check(&s, 1.0, &grid)?;
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// Sample variance of the estimator over `resamples` i.i.d. datasets of `n`
/// pairs with independent uniform components, at `σ = 0.5`.
pub fn estimator_variance(n: usize, resamples: usize, rng: &mut impl Rng) -> f64 {
    let spec = KernelSpec::gaussian(0.5).expect("positive");
    let values: Vec<f64> = (0..resamples)
        .map(|_| complex_correntropy(&random_series(rng, n, 1.0), &spec))
        .collect();
    crate::harness::mean_std(&values).1.powi(2)
}

/// Consistency: the estimator's variance falls as `1/N`.
pub fn check_consistency(opts: &SuiteOptions) -> PropertyCheck {
    let mut rng = rng_for(opts, 5);
    let small = estimator_variance(50, opts.resamples, &mut rng);
    let large = estimator_variance(200, opts.resamples, &mut rng);
    let ratio = small / large;
    PropertyCheck {
        id: 5,
        name: "consistency",
        passed: (3.0..=5.0).contains(&ratio),
        detail: format!("variance ratio N=50 vs N=200: {ratio:.3} (target within [3, 5])"),
    }
}

/// Real-data relation: on real data, `V·√(2π)σ` is the real correntropy.
pub fn check_real_relation(opts: &SuiteOptions) -> PropertyCheck {
    let mut rng = rng_for(opts, 6);
    let mut worst = 0.0f64;
    for _ in 0..opts.datasets {
        let n = rng.random_range(1..=64);
        let x: Vec<f64> = (0..n).map(|_| rng.random_range(-3.0..3.0)).collect();
        let y: Vec<f64> = (0..n).map(|_| rng.random_range(-3.0..3.0)).collect();
        let spec = random_sigma(&mut rng);
        let complex = complex_correntropy(&ComplexSeries::from_real(&x, &y).expect("valid"), &spec);
        let real = real_correntropy(&x, &y, &spec).expect("valid");
        let scaled = complex * (2.0 * PI).sqrt() * spec.sigma();
        worst = worst.max(relative_gap(scaled, real));
    }
    PropertyCheck {
        id: 6,
        name: "real-data relation",
        passed: worst <= 1e-12,
        detail: format!("max relative gap {worst:.2e} over {} datasets (tol 1e-12)", opts.datasets),
    }
}

/// Polar form: the polar-coordinate form matches the rectangular estimator.
pub fn check_polar_form(opts: &SuiteOptions) -> PropertyCheck {
    let mut rng = rng_for(opts, 7);
    let mut worst = 0.0f64;
    for _ in 0..opts.datasets {
        let n = rng.random_range(1..=64);
        let s = random_series(&mut rng, n, 3.0);
        let spec = random_sigma(&mut rng);
        let polar: Vec<(PolarComplex, PolarComplex)> = s
            .pairs()
            .map(|(a, b)| (PolarComplex::from_rect(a), PolarComplex::from_rect(b)))
            .collect();
        let p = complex_correntropy_polar(&polar, &spec).expect("non-empty");
        worst = worst.max(relative_gap(p, complex_correntropy(&s, &spec)));
    }
    PropertyCheck {
        id: 7,
        name: "polar form",
        passed: worst <= 1e-12,
        detail: format!("max relative gap {worst:.2e} over {} datasets (tol 1e-12)", opts.datasets),
    }
}

fn relative_gap(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
