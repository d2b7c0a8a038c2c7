//! Seeded Monte-Carlo reproduction of the equalization benchmark.
//!
//! Each trial draws a fresh training and test sequence from
//! `master_seed ⊕ trial`, trains every configured algorithm on the training
//! segment, and scores the final weights on the test segment. Trials run in
//! parallel; aggregation is an ordered reduction over trial index, so output
//! does not depend on thread count or scheduling.

mod config;
mod demo;
mod output;
mod scenario;
mod sweep;

pub use config::{OutputFormat, PowerReference, SweepConfig};
pub use demo::demo_report;
pub use output::{emit_results, parse_results, read_results, write_results, CSV_HEADER};
pub use scenario::{EqualizationRun, LinkData, Scenario, Stages};
pub use sweep::{
    aggregate, kernel_surface, mean_std, run_sweep, run_sweep_logged, trial_seed, AggregateRow, KernelSurface,
    SweepOutcome, TrialRecord,
};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "HARNESS_THREADS";

/// Reads [`THREADS_ENV`]; `Ok(None)` when unset.
pub fn threads_from_env() -> crate::Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(crate::Error::config(THREADS_ENV, format!("expected an integer ≥ 1, got `{v}`"))),
        },
    }
}
