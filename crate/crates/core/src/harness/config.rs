//! Flat `key = value` sweep configuration.
//!
//! One setting per line, `#` starts a comment, list values are comma
//! separated and complex numbers are written `a+bj` / `a-bj`. Every key is
//! optional; unknown keys are rejected. See the README for the full table.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::channel::{ChannelModel, Constellation};
use crate::filters::{Algorithm, Schedule};
use crate::{Complex64, Error, Result};

/// Output encoding for result rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::config("output.format", format!("expected csv or json, got `{other}`"))),
        }
    }
}

/// Which signal's mean power the GSNR is referenced to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PowerReference {
    /// The noiseless channel output `B`: `E[|A|²]·Σ|tapᵢ|²`.
    #[default]
    ChannelOutput,
    /// The transmitted symbols `A`: the constellation's average power.
    Source,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Algorithms in output order; MCCC appears once per kernel size.
    pub algorithms: Vec<Algorithm>,
    pub gsnr_db: Vec<f64>,
    pub alpha: Vec<f64>,
    pub trials: usize,
    pub train_len: usize,
    pub test_len: usize,
    pub master_seed: u64,
    pub channel: ChannelModel,
    pub levels: Vec<f64>,
    pub equalizer_taps: usize,
    pub schedule: Schedule,
    pub power_reference: PowerReference,
    pub output_path: Option<PathBuf>,
    pub output_format: OutputFormat,
    /// Kernel-size grid for the MCCC surface.
    pub surface_sigmas: Vec<f64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            algorithms: vec![
                Algorithm::mccc(1.0),
                Algorithm::mccc(10.0),
                Algorithm::mccc(100.0),
                Algorithm::crls(),
                Algorithm::clms(),
                Algorithm::lad(),
            ],
            gsnr_db: vec![10.0, 12.0, 14.0, 16.0, 18.0, 20.0],
            alpha: vec![1.5],
            trials: 1000,
            train_len: 500,
            test_len: 10_000,
            master_seed: 0x5EED,
            channel: ChannelModel::reference(),
            levels: vec![-3.0, -1.0, 1.0, 3.0],
            equalizer_taps: 2,
            schedule: Schedule::default(),
            power_reference: PowerReference::default(),
            output_path: None,
            output_format: OutputFormat::Csv,
            surface_sigmas: vec![1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0],
        }
    }
}

impl SweepConfig {
    /// Trial count used by `--full` runs.
    pub const FULL_TRIALS: usize = 100_000;

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::config(format!("line {}", lineno + 1), "expected `key = value`"))?;
            let key = key.trim().to_string();
            if raw.insert(key.clone(), value.trim().to_string()).is_some() {
                return Err(Error::config(key, "duplicate key"));
            }
        }
        let mut fields = Fields(raw);
        let defaults = SweepConfig::default();

        let names = fields.list("algorithms", |s| Ok(s.to_ascii_lowercase()))?;
        let sigmas = fields.list("mccc.sigma", parse_f64)?.unwrap_or_else(|| vec![1.0, 10.0, 100.0]);
        let ridge = fields.scalar("mccc.ridge", parse_f64)?.unwrap_or(Algorithm::DEFAULT_RIDGE);
        let clms_mu = fields.scalar("clms.mu", parse_f64)?.unwrap_or(Algorithm::DEFAULT_MU);
        let lad_mu = fields.scalar("lad.mu", parse_f64)?.unwrap_or(Algorithm::DEFAULT_MU);
        let lambda = fields.scalar("crls.lambda", parse_f64)?.unwrap_or(1.0);
        let delta = fields.scalar("crls.delta", parse_f64)?.unwrap_or(Algorithm::DEFAULT_CRLS_DELTA);

        let mut algorithms = Vec::new();
        for name in names.unwrap_or_else(|| ["mccc", "crls", "clms", "lad"].map(String::from).to_vec()) {
            match name.as_str() {
                "mccc" => algorithms.extend(sigmas.iter().map(|&sigma| Algorithm::Mccc { sigma, ridge })),
                "crls" => algorithms.push(Algorithm::Crls { lambda, delta }),
                "clms" => algorithms.push(Algorithm::Clms { mu: clms_mu }),
                "lad" => algorithms.push(Algorithm::Lad { mu: lad_mu }),
                other => return Err(Error::config("algorithms", format!("unknown algorithm `{other}`"))),
            }
        }

        let window = fields.scalar("mccc.window", parse_usize)?;
        let schedule = Schedule {
            window_length: window.filter(|&w| w > 0),
            inner_iterations: fields
                .scalar("mccc.inner_iterations", parse_usize)?
                .unwrap_or(defaults.schedule.inner_iterations),
        };

        let cfg = SweepConfig {
            algorithms,
            gsnr_db: fields.list("gsnr_db", parse_f64)?.unwrap_or(defaults.gsnr_db),
            alpha: fields.list("alpha", parse_f64)?.unwrap_or(defaults.alpha),
            trials: fields.scalar("trials", parse_usize)?.unwrap_or(defaults.trials),
            train_len: fields.scalar("train_len", parse_usize)?.unwrap_or(defaults.train_len),
            test_len: fields.scalar("test_len", parse_usize)?.unwrap_or(defaults.test_len),
            master_seed: fields.scalar("master_seed", parse_u64)?.unwrap_or(defaults.master_seed),
            channel: match fields.list("channel.taps", parse_complex)? {
                Some(taps) => ChannelModel::new(taps).map_err(|e| Error::config("channel.taps", e.to_string()))?,
                None => defaults.channel,
            },
            levels: fields.list("constellation.levels", parse_f64)?.unwrap_or(defaults.levels),
            equalizer_taps: fields.scalar("equalizer.taps", parse_usize)?.unwrap_or(defaults.equalizer_taps),
            schedule,
            power_reference: fields
                .scalar("noise.power_reference", |s| match s {
                    "channel_output" => Ok(PowerReference::ChannelOutput),
                    "source" => Ok(PowerReference::Source),
                    other => Err(format!("expected channel_output or source, got `{other}`")),
                })?
                .unwrap_or_default(),
            output_path: fields.scalar("output.path", |s| Ok(PathBuf::from(s)))?,
            output_format: fields
                .scalar("output.format", |s| s.parse::<OutputFormat>().map_err(|e| e.to_string()))?
                .unwrap_or_default(),
            surface_sigmas: fields.list("surface.sigma", parse_f64)?.unwrap_or(defaults.surface_sigmas),
        };
        if let Some(key) = fields.0.keys().next() {
            return Err(Error::config(key.clone(), "unknown key"));
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks every invariant of the configuration, naming the offending key.
    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            return Err(Error::config("algorithms", "list must not be empty"));
        }
        for algo in &self.algorithms {
            let (field, ok) = match *algo {
                Algorithm::Mccc { sigma, ridge } => {
                    if !(sigma > 0.0 && sigma.is_finite()) {
                        return Err(Error::config("mccc.sigma", format!("kernel size must be positive, got {sigma}")));
                    }
                    ("mccc.ridge", ridge >= 0.0 && ridge.is_finite())
                }
                Algorithm::Clms { mu } => ("clms.mu", mu > 0.0 && mu.is_finite()),
                Algorithm::Lad { mu } => ("lad.mu", mu > 0.0 && mu.is_finite()),
                Algorithm::Crls { lambda, delta } => {
                    if !(lambda > 0.0 && lambda <= 1.0) {
                        return Err(Error::config("crls.lambda", format!("must lie in (0, 1], got {lambda}")));
                    }
                    ("crls.delta", delta > 0.0 && delta.is_finite())
                }
            };
            if !ok {
                return Err(Error::config(field, "out of range"));
            }
        }
        if self.gsnr_db.is_empty() || self.gsnr_db.iter().any(|g| !g.is_finite()) {
            return Err(Error::config("gsnr_db", "need at least one finite value"));
        }
        if self.alpha.is_empty() || self.alpha.iter().any(|&a| !(a > 0.0 && a <= 2.0)) {
            return Err(Error::config("alpha", "values must lie in (0, 2]"));
        }
        for (field, n) in [
            ("trials", self.trials),
            ("train_len", self.train_len),
            ("test_len", self.test_len),
            ("equalizer.taps", self.equalizer_taps),
            ("mccc.inner_iterations", self.schedule.inner_iterations),
        ] {
            if n == 0 {
                return Err(Error::config(field, "must be at least 1"));
            }
        }
        if self.surface_sigmas.is_empty() || self.surface_sigmas.iter().any(|&s| !(s > 0.0 && s.is_finite())) {
            return Err(Error::config("surface.sigma", "need at least one positive kernel size"));
        }
        self.constellation()
            .map_err(|e| Error::config("constellation.levels", e.to_string()))?;
        Ok(())
    }

    pub fn constellation(&self) -> Result<Constellation> {
        Constellation::square(&self.levels)
    }

    /// Mean signal power the GSNR is referenced to.
    pub fn signal_power(&self) -> Result<f64> {
        let source = self.constellation()?.average_power();
        Ok(match self.power_reference {
            PowerReference::ChannelOutput => source * self.channel.power_gain(),
            PowerReference::Source => source,
        })
    }
}

struct Fields(BTreeMap<String, String>);

impl Fields {
    fn scalar<T>(&mut self, key: &str, parse: impl Fn(&str) -> Result<T, String>) -> Result<Option<T>> {
        match self.0.remove(key) {
            None => Ok(None),
            Some(v) => parse(&v).map(Some).map_err(|m| Error::config(key, m)),
        }
    }

    fn list<T>(&mut self, key: &str, parse: impl Fn(&str) -> Result<T, String>) -> Result<Option<Vec<T>>> {
        match self.0.remove(key) {
            None => Ok(None),
            Some(v) => {
                let items: Vec<T> = v
                    .split(',')
                    .map(|s| parse(s.trim()).map_err(|m| Error::config(key, m)))
                    .collect::<Result<_>>()?;
                if items.is_empty() {
                    return Err(Error::config(key, "list must not be empty"));
                }
                Ok(Some(items))
            }
        }
    }
}

fn parse_f64(s: &str) -> Result<f64, String> {
    s.parse::<f64>().map_err(|e| format!("`{s}`: {e}"))
}

fn parse_usize(s: &str) -> Result<usize, String> {
    let v = s.parse::<f64>().map_err(|e| format!("`{s}`: {e}"))?;
    if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
        Ok(v as usize)
    } else {
        Err(format!("`{s}` is not a non-negative integer"))
    }
}

fn parse_u64(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse::<u64>(),
    }
    .map_err(|e| format!("`{s}`: {e}"))
}

/// Parses `a`, `bj`, `a+bj` or `a-bj` (also `i` for the imaginary unit).
pub(crate) fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("`{s}` is not a complex number");
    let Some(body) = t.strip_suffix('j').or_else(|| t.strip_suffix('i')) else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // Split at the last sign that is not the leading one and not an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    let im = im.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_gives_defaults() {
        let cfg = SweepConfig::parse("# nothing\n\n").unwrap();
        assert_eq!(cfg, SweepConfig::default());
    }

    #[test]
    fn full_example_parses() {
        let text = "
            algorithms = mccc, crls
            mccc.sigma = 1, 100   # two kernel sizes
            mccc.window = 200
            gsnr_db = 10,15,20
            alpha = 1.5
            trials = 50
            train_len = 300
            test_len = 2000
            master_seed = 0xff
            channel.taps = 1.1-1.1j, 0.9-0.2j
            constellation.levels = -3,-1,1,3
            noise.power_reference = source
            output.path = out.json
            output.format = json
        ";
        let cfg = SweepConfig::parse(text).unwrap();
        assert_eq!(cfg.algorithms.len(), 3);
        assert_eq!(cfg.algorithms[1].sigma(), Some(100.0));
        assert_eq!(cfg.algorithms[2].name(), "crls");
        assert_eq!(cfg.schedule.window_length, Some(200));
        assert_eq!(cfg.master_seed, 255);
        assert_eq!(cfg.channel, ChannelModel::reference());
        assert_eq!(cfg.output_format, OutputFormat::Json);
        assert_eq!(cfg.power_reference, PowerReference::Source);
        assert_eq!(cfg.signal_power().unwrap(), 10.0);
    }

    #[test]
    fn errors_name_the_field() {
        let cases = [
            ("trials = 0", "trials"),
            ("mccc.sigma = 1, -2", "mccc.sigma"),
            ("alpha = 2.5", "alpha"),
            ("gsnr_db = 10, inf", "gsnr_db"),
            ("algorithms = mccc, cmod", "algorithms"),
            ("bogus.key = 1", "bogus.key"),
            ("trials = 1\ntrials = 2", "trials"),
            ("constellation.levels = 1,2,3", "constellation.levels"),
            ("crls.lambda = 0", "crls.lambda"),
            ("just a line", "line 1"),
        ];
        for (text, field) in cases {
            match SweepConfig::parse(text) {
                Err(Error::Config { field: f, .. }) => assert_eq!(f, field, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn complex_literals() {
        let c = Complex64::new;
        assert_eq!(parse_complex("1.1-1.1j").unwrap(), c(1.1, -1.1));
        assert_eq!(parse_complex(" 0.9 - 0.2j").unwrap(), c(0.9, -0.2));
        assert_eq!(parse_complex("-2").unwrap(), c(-2.0, 0.0));
        assert_eq!(parse_complex("3j").unwrap(), c(0.0, 3.0));
        assert_eq!(parse_complex("-j").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1e-3+2e+1i").unwrap(), c(1e-3, 20.0));
        assert!(parse_complex("abc").is_err());
    }
}
