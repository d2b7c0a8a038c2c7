//! Fixed-point solver for the maximum complex correntropy criterion.
//!
//! Setting the Wirtinger derivative of `(1/N) Σ G(dₙ − wᴴxₙ)` with respect
//! to `w*` to zero gives
//!
//! ```text
//! w = [Σ G(eₙ) xₙxₙᴴ]⁻¹ [Σ G(eₙ) dₙ* xₙ]
//! ```
//!
//! which is iterated from a starting point, re-evaluating the kernel
//! weights `G(eₙ)` at each step. Each iteration is a kernel-weighted least
//! squares solve.
//!
//! The matrix is regularized proximally: the step solves
//! `(M + εI) w' = v + ε w` with `ε = ridge · trace(M) / L`. This keeps the
//! system invertible while the window is rank deficient, yet leaves the
//! fixed points of the map unchanged (`M w = v` at a fixed point).

use std::collections::VecDeque;

use nalgebra::{DMatrix, DVector};

use super::linalg::solve_hermitian;
use super::{norm2, wrong_algorithm, Aux, FilterState, Regressor, SolverReport};
use crate::correntropy::complex_gaussian_kernel;
use crate::sum::pairwise_mean_by;
use crate::{Complex64, Error, KernelSpec, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPointOptions {
    /// Stop once `‖w_{t+1} − w_t‖₂ ≤ tol`.
    pub tol: f64,
    pub max_iter: usize,
    /// Relative proximal ridge; `ε = ridge · trace(M) / L`.
    pub ridge: f64,
}

impl Default for FixedPointOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 100,
            ridge: 1e-8,
        }
    }
}

/// Sample objective `(1/N) Σ G(dₙ − wᴴxₙ)`.
pub fn mccc_objective(batch: &[Regressor], spec: &KernelSpec, w: &[Complex64]) -> Result<f64> {
    if batch.is_empty() {
        return Err(Error::domain("empty batch"));
    }
    let values = batch
        .iter()
        .map(|r| complex_gaussian_kernel(r.error(w), spec))
        .collect::<Result<Vec<_>>>()?;
    Ok(pairwise_mean_by(values.len(), |i| values[i]))
}

/// One unregularized application of the fixed-point map at `w`.
pub fn fixed_point_map(batch: &[Regressor], spec: &KernelSpec, w: &[Complex64]) -> Result<Vec<Complex64>> {
    validate_batch(batch, w.len())?;
    proximal_step(batch.iter(), w.len(), spec.sigma(), w, 0.0)
}

/// Iterates the fixed-point map from `init_w` until the weight change drops
/// to `opts.tol` or `opts.max_iter` iterations have run.
///
/// The returned state is an MCCC filter state whose window holds `batch`.
pub fn mccc_fixed_point(
    batch: &[Regressor],
    spec: &KernelSpec,
    init_w: &[Complex64],
    opts: &FixedPointOptions,
) -> Result<(FilterState, SolverReport)> {
    let taps = init_w.len();
    validate_batch(batch, taps)?;
    if batch.len() < taps {
        return Err(Error::domain(format!(
            "batch of {} samples cannot determine {} weights",
            batch.len(),
            taps
        )));
    }
    if !(opts.tol > 0.0) || !(opts.ridge >= 0.0) {
        return Err(Error::domain("tolerance must be positive and ridge non-negative"));
    }

    let floor = 1e-12 * spec.peak();
    let mut w = init_w.to_vec();
    let mut objective = mccc_objective(batch, spec, &w)?;
    let mut report = SolverReport {
        iterations: 0,
        final_weight_delta: f64::INFINITY,
        converged: false,
        ascent_violations: 0,
    };
    while report.iterations < opts.max_iter {
        let next = proximal_step(batch.iter(), taps, spec.sigma(), &w, opts.ridge)?;
        let delta: Vec<_> = next.iter().zip(&w).map(|(a, b)| a - b).collect();
        report.iterations += 1;
        report.final_weight_delta = norm2(&delta);
        w = next;

        let updated = mccc_objective(batch, spec, &w)?;
        if updated < objective - floor {
            report.ascent_violations += 1;
        }
        objective = updated;

        if !report.final_weight_delta.is_finite() || norm2(&w) > super::DIVERGENCE_LIMIT {
            return Err(Error::Diverged { norm: norm2(&w) });
        }
        if report.final_weight_delta <= opts.tol {
            report.converged = true;
            break;
        }
    }

    let state = FilterState {
        w,
        aux: Aux::Mccc {
            kernel: *spec,
            ridge: opts.ridge,
            window: batch.iter().cloned().collect(),
            capacity: None,
            inner_iterations: 1,
        },
    };
    Ok((state, report))
}

/// Streaming update: append `r` to the sliding window and run the configured
/// number of warm-started fixed-point iterations over it.
pub(crate) fn mccc_step(state: &mut FilterState, r: &Regressor) -> Result<()> {
    state.check_regressor(r)?;
    let taps = state.w.len();
    let Aux::Mccc {
        kernel,
        ridge,
        window,
        capacity,
        inner_iterations,
    } = &mut state.aux
    else {
        return Err(wrong_algorithm("MCCC", state));
    };
    push_window(window, *capacity, r.clone());
    let mut w = std::mem::take(&mut state.w);
    for _ in 0..*inner_iterations {
        w = match proximal_step(window.iter(), taps, kernel.sigma(), &w, *ridge) {
            Ok(next) => next,
            Err(e) => {
                state.w = w;
                return Err(e);
            }
        };
    }
    state.w = w;
    state.check_divergence()
}

fn push_window(window: &mut VecDeque<Regressor>, capacity: Option<usize>, r: Regressor) {
    if let Some(cap) = capacity {
        while window.len() >= cap.max(1) {
            window.pop_front();
        }
    }
    window.push_back(r);
}

fn validate_batch(batch: &[Regressor], taps: usize) -> Result<()> {
    if batch.is_empty() {
        return Err(Error::domain("empty batch"));
    }
    if taps == 0 {
        return Err(Error::domain("need at least one weight"));
    }
    if let Some(i) = batch.iter().position(|r| r.len() != taps) {
        return Err(Error::domain(format!("regressor {i} has {} taps, expected {taps}", batch[i].len())));
    }
    Ok(())
}

/// Solves `(M + εI) w' = v + εw` with kernel weights evaluated at `w`.
///
/// Kernel weights are rescaled so the largest equals one. The solve is
/// invariant to that common factor and it keeps every weight from
/// underflowing together when all errors are large relative to `σ`.
fn proximal_step<'a>(
    batch: impl Iterator<Item = &'a Regressor> + Clone,
    taps: usize,
    sigma: f64,
    w: &[Complex64],
    ridge: f64,
) -> Result<Vec<Complex64>> {
    let errors: Vec<f64> = batch.clone().map(|r| r.error(w).norm_sqr()).collect();
    let min_err = errors.iter().copied().fold(f64::INFINITY, f64::min);
    let two_var = 2.0 * sigma * sigma;

    let mut m = DMatrix::<Complex64>::zeros(taps, taps);
    let mut v = DVector::<Complex64>::zeros(taps);
    for (r, &err) in batch.zip(&errors) {
        let g = (-(err - min_err) / two_var).exp();
        if g == 0.0 {
            continue;
        }
        let dc = r.d.conj();
        for i in 0..taps {
            let gx = r.x[i] * g;
            v[i] += gx * dc;
            for j in 0..taps {
                m[(i, j)] += gx * r.x[j].conj();
            }
        }
    }
    let eps = ridge * m.trace().re / taps as f64;
    if eps > 0.0 {
        for i in 0..taps {
            m[(i, i)] += eps;
            v[i] += w[i] * eps;
        }
    }
    Ok(solve_hermitian(m, &v)?.iter().copied().collect())
}
