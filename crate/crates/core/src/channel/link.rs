use crate::filters::Regressor;
use crate::{Complex64, Error, Result};

/// Complex FIR channel `Bₖ = Σᵢ tapᵢ·Aₖ₋ᵢ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelModel {
    taps: Vec<Complex64>,
}

impl ChannelModel {
    /// Taps `[1.1 − 1.1j, 0.9 − 0.2j]` of the reference equalization setup.
    pub const REFERENCE_TAPS: [Complex64; 2] = [Complex64::new(1.1, -1.1), Complex64::new(0.9, -0.2)];

    pub fn new(taps: Vec<Complex64>) -> Result<Self> {
        if taps.iter().any(|t| !t.is_finite()) {
            return Err(Error::domain("channel taps must be finite"));
        }
        if taps.iter().all(|t| t.norm_sqr() == 0.0) {
            return Err(Error::domain("channel needs at least one nonzero tap"));
        }
        Ok(Self { taps })
    }

    pub fn reference() -> Self {
        Self {
            taps: Self::REFERENCE_TAPS.to_vec(),
        }
    }

    pub fn identity() -> Self {
        Self {
            taps: vec![Complex64::new(1.0, 0.0)],
        }
    }

    pub fn taps(&self) -> &[Complex64] {
        &self.taps
    }

    /// `Σ |tapᵢ|²`, the power gain for an uncorrelated input.
    pub fn power_gain(&self) -> f64 {
        self.taps.iter().map(|t| t.norm_sqr()).sum()
    }
}

/// Filters `symbols` through the channel with zero initial state; the output
/// has the same length as the input.
pub fn apply_channel(symbols: &[Complex64], ch: &ChannelModel) -> Vec<Complex64> {
    (0..symbols.len())
        .map(|k| {
            ch.taps
                .iter()
                .enumerate()
                .filter(|(i, _)| *i <= k)
                .map(|(i, t)| t * symbols[k - i])
                .sum()
        })
        .collect()
}

/// Delay-line regressors `x = [Cₖ, Cₖ₋₁, …, Cₖ₋ₗ₊₁]` (zero before the start)
/// paired with `d = Aₖ`.
pub fn build_regressors(received: &[Complex64], training: &[Complex64], taps: usize) -> Result<Vec<Regressor>> {
    if received.len() != training.len() {
        return Err(Error::domain(format!(
            "received and training lengths differ: {} vs {}",
            received.len(),
            training.len()
        )));
    }
    if taps == 0 {
        return Err(Error::domain("equalizer needs at least one tap"));
    }
    (0..received.len())
        .map(|k| Regressor::new(delay_line(received, k, taps), training[k]))
        .collect()
}

pub(crate) fn delay_line(signal: &[Complex64], k: usize, taps: usize) -> Vec<Complex64> {
    (0..taps)
        .map(|i| if i <= k { signal[k - i] } else { Complex64::new(0.0, 0.0) })
        .collect()
}
