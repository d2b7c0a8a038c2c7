use std::fmt::Write;

use super::{Scenario, SweepConfig};
use crate::channel::gsnr;
use crate::filters::{norm2, Algorithm};
use crate::Result;

/// Single-trial walk through the link, one section per stage:
/// source (A), channel output (B), noisy input (C) and equalizer output (D)
/// for every algorithm in `cfg`. Deterministic for a given `seed`.
pub fn demo_report(cfg: &SweepConfig, alpha: f64, gsnr_db: f64, seed: u64) -> Result<String> {
    let scenario = Scenario::from_config(cfg)?;
    let data = scenario.realize(alpha, gsnr_db, seed)?;
    let stages = &data.stages;
    let power = |v: &[crate::Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>() / v.len() as f64;
    let noise: Vec<_> = stages.c.iter().zip(&stages.b).map(|(c, b)| c - b).collect();
    let peak_noise = noise.iter().map(|z| z.norm()).fold(0.0, f64::max);

    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "seed {seed}, alpha {alpha}, target GSNR {gsnr_db} dB");
    let _ = writeln!(
        w,
        "[A] source: {} training + {} test symbols, {}-point constellation, mean power {:.4}",
        scenario.train_len,
        scenario.test_len,
        scenario.constellation.len(),
        power(&stages.a)
    );
    let taps: Vec<String> = scenario.channel.taps().iter().map(|t| format!("{t:.3}")).collect();
    let _ = writeln!(w, "[B] channel taps [{}], output mean power {:.4}", taps.join(", "), power(&stages.b));
    let _ = writeln!(
        w,
        "[C] alpha-stable noise: dispersion {:.6}, GSNR vs reference power {:.3} dB, vs measured B {:.3} dB, peak |noise| {:.3}",
        data.noise.gamma(),
        10.0 * (scenario.signal_power / data.noise.gamma()).log10(),
        gsnr(&stages.b, data.noise.gamma())?,
        peak_noise
    );
    for &algo in &cfg.algorithms {
        let label = match algo {
            Algorithm::Mccc { sigma, .. } => format!("mccc(sigma={sigma})"),
            other => other.name().to_string(),
        };
        match scenario.equalize(&data, algo) {
            Ok(run) => {
                let wts: Vec<String> = run.final_weights().iter().map(|t| format!("{t:.4}")).collect();
                let _ = writeln!(
                    w,
                    "[D] {label:<18} w = [{}], |w| = {:.4}, BER {:.5}, SER {:.5}",
                    wts.join(", "),
                    norm2(run.final_weights()),
                    run.ber,
                    run.ser
                );
            }
            Err(e) => {
                let _ = writeln!(w, "[D] {label:<18} failed: {e}");
            }
        }
    }
    Ok(out)
}
