use super::{Algorithm, FilterState, Regressor};
use crate::{Complex64, Error, Result};

/// Per-sample processing schedule for the MCCC filter.
///
/// Gradient and RLS baselines ignore it: they take one step per sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Schedule {
    /// Sliding window cap; `None` keeps every sample seen so far.
    pub window_length: Option<usize>,
    /// Warm-started fixed-point iterations per new sample.
    pub inner_iterations: usize,
}

impl Default for Schedule {
    fn default() -> Self {
        Self {
            window_length: None,
            inner_iterations: 1,
        }
    }
}

/// Trains `algo` from zero weights over `stream`, one sample at a time, and
/// returns the weights after every sample.
pub fn run_training(algo: Algorithm, stream: &[Regressor], schedule: &Schedule) -> Result<Vec<Vec<Complex64>>> {
    let first = stream.first().ok_or_else(|| Error::domain("training stream is empty"))?;
    let mut state = FilterState::with_schedule(algo, first.len(), schedule)?;
    stream
        .iter()
        .map(|r| {
            state.update(r)?;
            Ok(state.weights().to_vec())
        })
        .collect()
}
