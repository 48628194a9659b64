//! Interchange formats: signals and single reports as JSON, tables as CSV.
//!
//! A signal is `{"n": N, "values": [[re, im], ...]}` in index order
//! `m = -N/2+1 ..= N/2`. JSON floats use the shortest representation that
//! parses back to the same `f64`; CSV floats carry 17 significant digits.

use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::experiments::{CircleRow, SweepRow};
use crate::grid::GridSpec;
use crate::optimize::OptimizerTrace;
use crate::signal::Signal;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed signal JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid signal: {0}")]
    Signal(#[from] Error),
}

#[derive(Serialize, Deserialize)]
struct SignalJson {
    n: usize,
    values: Vec<[f64; 2]>,
}

pub fn signal_to_json(x: &Signal) -> String {
    let doc = SignalJson {
        n: x.len(),
        values: x.values().iter().map(|v| [v.re, v.im]).collect(),
    };
    serde_json::to_string(&doc).expect("signal serializes")
}

pub fn signal_from_json(text: &str) -> Result<Signal, IoError> {
    let doc: SignalJson = serde_json::from_str(text)?;
    let grid = GridSpec::new(doc.n)?;
    let values = doc
        .values
        .into_iter()
        .map(|[re, im]| Complex64::new(re, im))
        .collect();
    Ok(Signal::new(grid, values)?)
}

/// Floats in tables: 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

pub const SWEEP_HEADER: [&str; 14] = [
    "n",
    "c",
    "function_label",
    "epsilon",
    "continuous_product",
    "discrete_product",
    "sandwich_low",
    "sandwich_high",
    "lower_bound",
    "sandwich_pass",
    "bound_pass",
    "vacuous",
    "continuous_time",
    "error",
];

pub fn write_sweep_csv<W: Write>(out: W, rows: &[SweepRow]) -> Result<(), IoError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for row in rows {
        let record: Vec<String> = match &row.report {
            Ok(r) => vec![
                row.n.to_string(),
                fmt_f64(row.c),
                r.function_label.clone(),
                fmt_f64(r.epsilon),
                fmt_f64(r.continuous_product),
                fmt_opt(r.discrete_product),
                fmt_f64(r.sandwich_low),
                fmt_f64(r.sandwich_high),
                fmt_f64(r.lower_bound),
                r.sandwich_pass.to_string(),
                r.bound_pass.to_string(),
                r.vacuous.to_string(),
                fmt_f64(r.continuous_time),
                String::new(),
            ],
            Err(e) => {
                let mut rec = vec![row.n.to_string(), fmt_f64(row.c)];
                rec.extend(std::iter::repeat_n(String::new(), 11));
                rec.push(e.clone());
                rec
            }
        };
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

pub const CIRCLE_HEADER: [&str; 8] = [
    "a",
    "n_coeffs",
    "angular_variance",
    "coeff_variance",
    "time_spread",
    "freq_spread",
    "product",
    "circle_product",
];

pub fn write_circle_csv<W: Write>(out: W, rows: &[CircleRow]) -> Result<(), IoError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CIRCLE_HEADER)?;
    for r in rows {
        w.write_record([
            fmt_f64(r.a),
            r.n_coeffs.to_string(),
            fmt_f64(r.angular_variance),
            fmt_f64(r.coeff_variance),
            fmt_f64(r.time_spread),
            fmt_f64(r.freq_spread),
            fmt_f64(r.product),
            fmt_f64(r.circle_product),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_trace_csv<W: Write>(out: W, trace: &OptimizerTrace) -> Result<(), IoError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["iteration", "product"])?;
    for (i, p) in &trace.history {
        w.write_record([i.to_string(), fmt_f64(*p)])?;
    }
    w.flush()?;
    Ok(())
}
