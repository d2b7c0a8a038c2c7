//! Seeded inputs shared by the benchmarks.

use ccorr_core::channel::{make_16qam, ChannelModel, NoiseSpec};
use ccorr_core::harness::{LinkData, Scenario, SweepConfig};
use ccorr_core::properties::random_series;
use ccorr_core::ComplexSeries;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn series(n: usize) -> ComplexSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    random_series(&mut rng, n, 3.0)
}

/// Reference link at alpha 1.5, 15 dB with `train_len` training samples.
pub fn link(train_len: usize) -> (Scenario, LinkData) {
    let cfg = SweepConfig {
        train_len,
        test_len: 1000,
        channel: ChannelModel::reference(),
        ..SweepConfig::default()
    };
    let scenario = Scenario::from_config(&cfg).expect("default config is valid");
    let data = scenario.realize(1.5, 15.0, 1).expect("valid noise");
    (scenario, data)
}

pub fn noise(alpha: f64) -> NoiseSpec {
    NoiseSpec::calibrated(alpha, make_16qam().average_power(), 15.0).expect("valid alpha")
}
