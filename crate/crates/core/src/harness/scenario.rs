use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SweepConfig;
use crate::channel::{
    apply_channel, ber, build_regressors, decide, sample_alpha_stable, ser, ChannelModel, Constellation, NoiseSpec,
};
use crate::filters::{output, Algorithm, FilterState, Regressor, Schedule};
use crate::{Complex64, Result};

/// Everything about one equalization experiment except the noise level and
/// the random draw.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub constellation: Constellation,
    pub channel: ChannelModel,
    pub equalizer_taps: usize,
    pub train_len: usize,
    pub test_len: usize,
    pub schedule: Schedule,
    /// Mean signal power the GSNR is referenced to.
    pub signal_power: f64,
}

/// Training-segment signals at each stage of the link.
#[derive(Debug, Clone)]
pub struct Stages {
    /// Transmitted symbols.
    pub a: Vec<Complex64>,
    /// Channel output.
    pub b: Vec<Complex64>,
    /// Channel output plus noise.
    pub c: Vec<Complex64>,
}

/// One random realization of the link: training regressors and a separate
/// test segment.
#[derive(Debug, Clone)]
pub struct LinkData {
    pub seed: u64,
    pub noise: NoiseSpec,
    pub train: Vec<Regressor>,
    pub test: Vec<Regressor>,
    pub test_symbols: Vec<usize>,
    pub test_bits: Vec<bool>,
    pub stages: Stages,
}

/// Result of training one algorithm on one [`LinkData`] and scoring it on
/// the test segment.
#[derive(Debug, Clone)]
pub struct EqualizationRun {
    pub algorithm: Algorithm,
    pub seed: u64,
    pub training_length: usize,
    /// Weights after every training sample.
    pub snapshots: Vec<Vec<Complex64>>,
    pub ber: f64,
    pub ser: f64,
}

impl EqualizationRun {
    pub fn final_weights(&self) -> &[Complex64] {
        self.snapshots.last().map(Vec::as_slice).unwrap_or(&[])
    }
}

impl Scenario {
    pub fn from_config(cfg: &SweepConfig) -> Result<Self> {
        Ok(Self {
            constellation: cfg.constellation()?,
            channel: cfg.channel.clone(),
            equalizer_taps: cfg.equalizer_taps,
            train_len: cfg.train_len,
            test_len: cfg.test_len,
            schedule: cfg.schedule,
            signal_power: cfg.signal_power()?,
        })
    }

    /// Draws symbols and noise for one trial.
    ///
    /// Symbol draws come first and do not depend on `alpha` or the GSNR, so
    /// every cell of a sweep sees the same symbols for a given seed.
    pub fn realize(&self, alpha: f64, gsnr_db: f64, seed: u64) -> Result<LinkData> {
        let noise = NoiseSpec::calibrated(alpha, self.signal_power, gsnr_db)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = self.constellation.len();
        let train_idx: Vec<usize> = (0..self.train_len).map(|_| rng.random_range(0..m)).collect();
        let test_idx: Vec<usize> = (0..self.test_len).map(|_| rng.random_range(0..m)).collect();
        let train_noise = sample_alpha_stable(&noise, self.train_len, &mut rng);
        let test_noise = sample_alpha_stable(&noise, self.test_len, &mut rng);

        let points = self.constellation.points();
        let a: Vec<_> = train_idx.iter().map(|&i| points[i]).collect();
        let b = apply_channel(&a, &self.channel);
        let c: Vec<_> = b.iter().zip(&train_noise).map(|(b, n)| b + n).collect();
        let train = build_regressors(&c, &a, self.equalizer_taps)?;

        let test_a: Vec<_> = test_idx.iter().map(|&i| points[i]).collect();
        let test_c: Vec<_> = apply_channel(&test_a, &self.channel)
            .iter()
            .zip(&test_noise)
            .map(|(b, n)| b + n)
            .collect();
        let test = build_regressors(&test_c, &test_a, self.equalizer_taps)?;
        let test_bits = test_idx.iter().flat_map(|&i| self.constellation.bits(i)).collect();

        Ok(LinkData {
            seed,
            noise,
            train,
            test,
            test_symbols: test_idx,
            test_bits,
            stages: Stages { a, b, c },
        })
    }

    /// Trains `algo` on the training segment and scores the final weights on
    /// the test segment.
    pub fn equalize(&self, data: &LinkData, algo: Algorithm) -> Result<EqualizationRun> {
        let mut state = FilterState::with_schedule(algo, self.equalizer_taps, &self.schedule)?;
        let mut snapshots = Vec::with_capacity(data.train.len());
        for r in &data.train {
            state.update(r)?;
            snapshots.push(state.weights().to_vec());
        }
        let (ber, ser) = self.score(data, state.weights())?;
        Ok(EqualizationRun {
            algorithm: algo,
            seed: data.seed,
            training_length: data.train.len(),
            snapshots,
            ber,
            ser,
        })
    }

    /// BER and SER of fixed weights `w` on the test segment.
    pub fn score(&self, data: &LinkData, w: &[Complex64]) -> Result<(f64, f64)> {
        let estimates: Vec<_> = data.test.iter().map(|r| output(w, &r.x)).collect();
        let (decisions, bits) = decide(&estimates, &self.constellation)?;
        Ok((ber(&data.test_bits, &bits)?, ser(&data.test_symbols, &decisions)?))
    }
}
