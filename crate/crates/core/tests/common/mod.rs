#![allow(dead_code)]

use ccorr_core::filters::{output, Regressor};
use ccorr_core::{Complex64, ComplexSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_complex(rng: &mut impl Rng) -> Complex64 {
    use rand_distr::{Distribution, StandardNormal};
    c(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn dist(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

/// `n` regressors with unit-variance Gaussian inputs and `d = w_trueᴴx + noise(k)`.
pub fn linear_batch(
    rng: &mut impl Rng,
    w_true: &[Complex64],
    n: usize,
    mut noise: impl FnMut(&mut dyn rand::RngCore, usize) -> Complex64,
) -> Vec<Regressor> {
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x: Vec<Complex64> = (0..w_true.len()).map(|_| gaussian_complex(rng)).collect();
        let d = output(w_true, &x) + noise(rng, k);
        out.push(Regressor::new(x, d).unwrap());
    }
    out
}

/// Dense complex solve by Gaussian elimination with partial pivoting.
pub fn solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Vec<Complex64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm())).unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                let sub = f * a[col][k];
                a[row][k] -= sub;
            }
            let sub = f * b[col];
            b[row] -= sub;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let s: Complex64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

/// Weighted ridge least squares for `d ≈ wᴴx`:
/// `(Σ gₙ xxᴴ + εI) w = Σ gₙ x d*`.
pub fn weighted_ridge_ls(batch: &[Regressor], weights: &[f64], eps: f64) -> Vec<Complex64> {
    let l = batch[0].x.len();
    let mut r = vec![vec![Complex64::new(0.0, 0.0); l]; l];
    let mut p = vec![Complex64::new(0.0, 0.0); l];
    for (reg, &g) in batch.iter().zip(weights) {
        for i in 0..l {
            for j in 0..l {
                r[i][j] += g * reg.x[i] * reg.x[j].conj();
            }
            p[i] += g * reg.x[i] * reg.d.conj();
        }
    }
    for (i, row) in r.iter_mut().enumerate() {
        row[i] += eps;
    }
    solve(r, p)
}

pub fn ls(batch: &[Regressor]) -> Vec<Complex64> {
    weighted_ridge_ls(batch, &vec![1.0; batch.len()], 0.0)
}

/// Trace of `Σ xxᴴ` divided by the tap count.
pub fn mean_diagonal(batch: &[Regressor]) -> f64 {
    let l = batch[0].x.len() as f64;
    batch.iter().map(|r| r.x.iter().map(|z| z.norm_sqr()).sum::<f64>()).sum::<f64>() / l
}

/// Independent plane integral: the Parzen density written out by hand,
/// integrated over `x = y = u₁`, `z = s = u₂` on a fixed fine grid.
pub fn plane_integral_oracle(s: &ComplexSeries, sigma: f64) -> f64 {
    let g = |t: f64| (-t * t / (2.0 * sigma * sigma)).exp() / ((2.0 * std::f64::consts::PI).sqrt() * sigma);
    let density = |u1: f64, u2: f64| {
        s.c1()
            .iter()
            .zip(s.c2())
            .map(|(a, b)| g(u1 - a.re) * g(u1 - b.re) * g(u2 - a.im) * g(u2 - b.im))
            .sum::<f64>()
            / s.len() as f64
    };
    let pts = s.c1().iter().chain(s.c2());
    let (lo1, hi1, lo2, hi2) = pts.fold(
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
        |(a, b, c, d), z: &Complex64| (a.min(z.re), b.max(z.re), c.min(z.im), d.max(z.im)),
    );
    let h = sigma / 8.0;
    let pad = 10.0 * sigma;
    let n1 = ((hi1 - lo1 + 2.0 * pad) / h).ceil() as usize;
    let n2 = ((hi2 - lo2 + 2.0 * pad) / h).ceil() as usize;
    let mut total = 0.0;
    for i in 0..=n1 {
        for j in 0..=n2 {
            total += density(lo1 - pad + i as f64 * h, lo2 - pad + j as f64 * h);
        }
    }
    total * h * h
}

