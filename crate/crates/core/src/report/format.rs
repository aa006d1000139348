use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Six significant digits: fixed notation for magnitudes in [1e-3, 1e6),
/// scientific otherwise. Locale-free.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "NaN".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-3..6).contains(&exp) {
        format!("{:.*}", (5 - exp) as usize, x)
    } else {
        format!("{x:.5e}")
    }
}

fn cell(v: &Value) -> Result<String> {
    Ok(match v {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) if n.is_f64() => sig6(n.as_f64().unwrap_or(f64::NAN)),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(_) | Value::Object(_) => {
            return Err(Error::domain("write_records", "records must be flat"));
        }
    })
}

/// Writes `records` to `out`. CSV always carries a header, even with no rows,
/// when `headers` is given.
pub fn write_records<T: Serialize, W: Write>(
    out: W,
    records: &[T],
    format: OutputFormat,
    headers: &[&str],
) -> Result<()> {
    match format {
        OutputFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, records).map_err(io_err)?;
            writeln!(out).map_err(io_err)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(headers).map_err(io_err)?;
            for r in records {
                let Value::Object(map) = serde_json::to_value(r).map_err(io_err)? else {
                    return Err(Error::domain("write_records", "records must serialize as objects"));
                };
                let row = map.values().map(cell).collect::<Result<Vec<_>>>()?;
                w.write_record(&row).map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
    }
    Ok(())
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::domain("write_records", e.to_string())
}
