//! CSV and JSON result files.
//!
//! CSV header: `algo,sigma,alpha,gsnr_db,ber_mean,ber_std,trials,divergent`.
//! Floats use 17 significant digits (`{:.16e}`) so they read back exactly;
//! `sigma` is empty for non-MCCC rows. JSON is an array of objects with the
//! same keys, `sigma` null where absent and `ber_mean`/`ber_std` null when a
//! cell had no non-divergent trial.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{AggregateRow, OutputFormat};
use crate::{Error, Result};

pub const CSV_HEADER: [&str; 8] = ["algo", "sigma", "alpha", "gsnr_db", "ber_mean", "ber_std", "trials", "divergent"];

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRow {
    algo: String,
    sigma: Option<f64>,
    alpha: f64,
    gsnr_db: f64,
    ber_mean: Option<f64>,
    ber_std: Option<f64>,
    trials: usize,
    divergent: usize,
}

impl From<&AggregateRow> for JsonRow {
    fn from(r: &AggregateRow) -> Self {
        let finite = |v: f64| v.is_finite().then_some(v);
        JsonRow {
            algo: r.algo.clone(),
            sigma: r.sigma,
            alpha: r.alpha,
            gsnr_db: r.gsnr_db,
            ber_mean: finite(r.ber_mean),
            ber_std: finite(r.ber_std),
            trials: r.trials,
            divergent: r.divergent,
        }
    }
}

impl From<JsonRow> for AggregateRow {
    fn from(r: JsonRow) -> Self {
        AggregateRow {
            algo: r.algo,
            sigma: r.sigma,
            alpha: r.alpha,
            gsnr_db: r.gsnr_db,
            ber_mean: r.ber_mean.unwrap_or(f64::NAN),
            ber_std: r.ber_std.unwrap_or(f64::NAN),
            trials: r.trials,
            divergent: r.divergent,
        }
    }
}

fn float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes `rows` to `path` in `format`.
pub fn emit_results(rows: &[AggregateRow], format: OutputFormat, path: &Path) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::domain("no result rows to write"));
    }
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io)?;
    let mut out = BufWriter::new(file);
    write_results(rows, format, &mut out).map_err(|e| match e {
        Error::Io { source, .. } => io(source),
        other => other,
    })?;
    out.flush().map_err(io)
}

/// Writes `rows` to any writer (e.g. stdout).
pub fn write_results<W: Write>(rows: &[AggregateRow], format: OutputFormat, out: W) -> Result<()> {
    let io = |source| Error::Io {
        path: "<writer>".into(),
        source,
    };
    match format {
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            let csv_err = |e: csv::Error| io(e.into());
            w.write_record(CSV_HEADER).map_err(csv_err)?;
            for r in rows {
                w.write_record([
                    r.algo.clone(),
                    r.sigma.map(float).unwrap_or_default(),
                    float(r.alpha),
                    float(r.gsnr_db),
                    float(r.ber_mean),
                    float(r.ber_std),
                    r.trials.to_string(),
                    r.divergent.to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(io)
        }
        OutputFormat::Json => {
            let json: Vec<JsonRow> = rows.iter().map(JsonRow::from).collect();
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, &json).map_err(|e| io(e.into()))?;
            out.write_all(b"\n").map_err(io)
        }
    }
}

/// Reads rows written by [`emit_results`].
pub fn read_results(path: &Path, format: OutputFormat) -> Result<Vec<AggregateRow>> {
    let mut text = String::new();
    File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
    parse_results(&text, format)
}

pub fn parse_results(text: &str, format: OutputFormat) -> Result<Vec<AggregateRow>> {
    match format {
        OutputFormat::Json => {
            let rows: Vec<JsonRow> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(rows.into_iter().map(AggregateRow::from).collect())
        }
        OutputFormat::Csv => {
            let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
            let header = reader.headers().map_err(|e| Error::Parse(e.to_string()))?;
            if header.iter().ne(CSV_HEADER) {
                return Err(Error::Parse(format!("unexpected header {header:?}")));
            }
            reader
                .records()
                .map(|rec| {
                    let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
                    let f = |i: usize| -> Result<f64> {
                        rec[i]
                            .parse::<f64>()
                            .map_err(|e| Error::Parse(format!("column {}: {e}", CSV_HEADER[i])))
                    };
                    let n = |i: usize| -> Result<usize> {
                        rec[i]
                            .parse::<usize>()
                            .map_err(|e| Error::Parse(format!("column {}: {e}", CSV_HEADER[i])))
                    };
                    Ok(AggregateRow {
                        algo: rec[0].to_string(),
                        sigma: if rec[1].is_empty() { None } else { Some(f(1)?) },
                        alpha: f(2)?,
                        gsnr_db: f(3)?,
                        ber_mean: f(4)?,
                        ber_std: f(5)?,
                        trials: n(6)?,
                        divergent: n(7)?,
                    })
                })
                .collect()
        }
    }
}
