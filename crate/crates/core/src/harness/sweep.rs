use rayon::prelude::*;

use super::{Scenario, SweepConfig};
use crate::filters::Algorithm;
use crate::sum::pairwise_sum;
use crate::{Error, Result};

/// Mean and spread of test BER over the trials of one sweep cell.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateRow {
    pub algo: String,
    /// Kernel size, for MCCC rows only.
    pub sigma: Option<f64>,
    pub alpha: f64,
    pub gsnr_db: f64,
    /// Mean over non-divergent trials; NaN if every trial diverged.
    pub ber_mean: f64,
    /// Sample standard deviation over non-divergent trials.
    pub ber_std: f64,
    /// Trials run, divergent ones included.
    pub trials: usize,
    pub divergent: usize,
}

impl AggregateRow {
    /// `ber_std / √(trials − divergent)`.
    pub fn standard_error(&self) -> f64 {
        self.ber_std / ((self.trials - self.divergent) as f64).sqrt()
    }
}

/// Outcome of one algorithm on one trial of one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    /// Index into [`SweepConfig::algorithms`].
    pub algorithm: usize,
    pub alpha: f64,
    pub gsnr_db: f64,
    pub trial: usize,
    pub seed: u64,
    /// `None` when the filter diverged or its solve failed.
    pub ber: Option<f64>,
    pub ser: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub rows: Vec<AggregateRow>,
    pub log: Vec<TrialRecord>,
}

/// BER surface of MCCC over kernel size × GSNR at one `alpha`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelSurface {
    pub alpha: f64,
    pub sigmas: Vec<f64>,
    pub gsnr_db: Vec<f64>,
    /// `ber_mean[i][j]` is the mean BER at `sigmas[i]`, `gsnr_db[j]`.
    pub ber_mean: Vec<Vec<f64>>,
}

/// Seed of trial `trial`: `master_seed ⊕ trial`.
///
/// Independent of algorithm and cell, so every algorithm in every cell sees
/// the same symbols and the same underlying noise draws for a given trial.
pub fn trial_seed(master_seed: u64, trial: usize) -> u64 {
    master_seed ^ trial as u64
}

/// Runs every (algorithm, alpha, GSNR) cell of `cfg` and aggregates test BER.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<AggregateRow>> {
    Ok(run_sweep_logged(cfg, None)?.rows)
}

/// [`run_sweep`] keeping the per-trial log, optionally on a dedicated pool of
/// `threads` workers. Results do not depend on `threads`.
pub fn run_sweep_logged(cfg: &SweepConfig, threads: Option<usize>) -> Result<SweepOutcome> {
    cfg.validate()?;
    let scenario = Scenario::from_config(cfg)?;
    let job = || sweep_cells(cfg, &scenario);
    match threads {
        None => job(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::config("threads", e.to_string()))?
            .install(job),
    }
}

fn sweep_cells(cfg: &SweepConfig, scenario: &Scenario) -> Result<SweepOutcome> {
    let mut log = Vec::new();
    for &alpha in &cfg.alpha {
        for &gsnr_db in &cfg.gsnr_db {
            let per_trial: Vec<Vec<TrialRecord>> = (0..cfg.trials)
                .into_par_iter()
                .map(|trial| {
                    let seed = trial_seed(cfg.master_seed, trial);
                    let data = scenario.realize(alpha, gsnr_db, seed)?;
                    Ok(cfg
                        .algorithms
                        .iter()
                        .enumerate()
                        .map(|(algorithm, &algo)| {
                            let run = scenario.equalize(&data, algo).ok();
                            TrialRecord {
                                algorithm,
                                alpha,
                                gsnr_db,
                                trial,
                                seed,
                                ber: run.as_ref().map(|r| r.ber),
                                ser: run.as_ref().map(|r| r.ser),
                            }
                        })
                        .collect())
                })
                .collect::<Result<_>>()?;
            log.extend(per_trial.into_iter().flatten());
        }
    }
    let rows = aggregate(&cfg.algorithms, &log);
    Ok(SweepOutcome { rows, log })
}

/// Folds a trial log into rows ordered by algorithm, then alpha, then GSNR,
/// in order of first appearance. Trials are reduced in log order.
pub fn aggregate(algorithms: &[Algorithm], log: &[TrialRecord]) -> Vec<AggregateRow> {
    let mut cells: Vec<(usize, f64, f64)> = Vec::new();
    for r in log {
        let key = (r.algorithm, r.alpha, r.gsnr_db);
        if !cells.contains(&key) {
            cells.push(key);
        }
    }
    cells.sort_by_key(|&(algorithm, _, _)| algorithm);
    cells
        .into_iter()
        .map(|(algorithm, alpha, gsnr_db)| {
            let records: Vec<_> = log
                .iter()
                .filter(|r| r.algorithm == algorithm && r.alpha == alpha && r.gsnr_db == gsnr_db)
                .collect();
            let bers: Vec<f64> = records.iter().filter_map(|r| r.ber).collect();
            let (ber_mean, ber_std) = mean_std(&bers);
            let algo = &algorithms[algorithm];
            AggregateRow {
                algo: algo.name().to_string(),
                sigma: algo.sigma(),
                alpha,
                gsnr_db,
                ber_mean,
                ber_std,
                trials: records.len(),
                divergent: records.len() - bers.len(),
            }
        })
        .collect()
}

/// Mean and sample standard deviation (`n − 1` denominator; zero for a
/// single value).
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = values.len() as f64;
    let mean = pairwise_sum(values) / n;
    if values.len() == 1 {
        return (mean, 0.0);
    }
    let sq: Vec<f64> = values.iter().map(|v| (v - mean).powi(2)).collect();
    (mean, (pairwise_sum(&sq) / (n - 1.0)).sqrt())
}

/// Sweeps MCCC over `sigmas × gsnr_db` for each `alpha` of `cfg`.
///
/// Returns one surface per alpha plus the long-form rows behind them.
pub fn kernel_surface(
    cfg: &SweepConfig,
    sigmas: &[f64],
    gsnr_db: &[f64],
    threads: Option<usize>,
) -> Result<(Vec<KernelSurface>, Vec<AggregateRow>)> {
    if sigmas.is_empty() {
        return Err(Error::config("surface.sigma", "list must not be empty"));
    }
    let ridge = cfg
        .algorithms
        .iter()
        .find_map(|a| match a {
            Algorithm::Mccc { ridge, .. } => Some(*ridge),
            _ => None,
        })
        .unwrap_or(Algorithm::DEFAULT_RIDGE);
    let restricted = SweepConfig {
        algorithms: sigmas.iter().map(|&sigma| Algorithm::Mccc { sigma, ridge }).collect(),
        gsnr_db: gsnr_db.to_vec(),
        ..cfg.clone()
    };
    let rows = run_sweep_logged(&restricted, threads)?.rows;
    let surfaces = restricted
        .alpha
        .iter()
        .map(|&alpha| {
            let ber_mean = sigmas
                .iter()
                .enumerate()
                .map(|(i, _)| {
                    gsnr_db
                        .iter()
                        .map(|&g| {
                            rows.iter()
                                .filter(|r| r.alpha == alpha && r.gsnr_db == g)
                                .nth(i)
                                .map_or(f64::NAN, |r| r.ber_mean)
                        })
                        .collect()
                })
                .collect();
            KernelSurface {
                alpha,
                sigmas: sigmas.to_vec(),
                gsnr_db: gsnr_db.to_vec(),
                ber_mean,
            }
        })
        .collect();
    Ok((surfaces, rows))
}
