//! Channel equalization experiment.
//!
//! A QAM source `A` passes through a short complex FIR channel to give `B`,
//! symmetric alpha-stable noise is added to give `C`, and an adaptive
//! equalizer fed with `[Cₖ, Cₖ₋₁]` is trained to reproduce `Aₖ`. Its output is
//! sliced back onto the constellation and scored by bit and symbol error
//! rates.

mod constellation;
mod decision;
mod link;
mod noise;

pub use constellation::{make_16qam, Constellation};
pub use decision::{ber, decide, ser, Decision};
pub use link::{apply_channel, build_regressors, ChannelModel};
pub use noise::{calibrate_gamma, gsnr, sample_alpha_stable, NoiseSpec};
