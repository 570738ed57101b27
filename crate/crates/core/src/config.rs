//! Flat `key = value` parameter files and `key=value` overrides.
//!
//! Keys are the [`Param`] names. Values are plain numbers or multiples of
//! the reference coupling written with a trailing `g` (`0.1g`, `2g`).
//! Blank lines and `#` comments are ignored; unknown or repeated keys are
//! errors.

use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{ModelParams, Param, G_REF};

pub fn parse_value(raw: &str) -> Result<f64> {
    let raw = raw.trim();
    let (number, scale) = match raw.strip_suffix('g') {
        Some(n) if !n.is_empty() => (n.trim(), G_REF),
        _ => (raw, 1.0),
    };
    let v: f64 = number
        .parse()
        .map_err(|_| Error::Config(format!("cannot parse {raw:?} as a number")))?;
    if !v.is_finite() {
        return Err(Error::Config(format!("{raw:?} is not finite")));
    }
    Ok(v * scale)
}

/// Parses one `key=value` assignment.
pub fn parse_assignment(line: &str) -> Result<(Param, f64)> {
    let (key, value) = line
        .split_once('=')
        .ok_or_else(|| Error::Config(format!("expected key = value, got {line:?}")))?;
    Ok((key.trim().parse()?, parse_value(value)?))
}

pub fn parse_config(text: &str) -> Result<Vec<(Param, f64)>> {
    let mut out: Vec<(Param, f64)> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (p, v) =
            parse_assignment(line).map_err(|e| Error::Config(format!("line {}: {e}", n + 1)))?;
        if out.iter().any(|(q, _)| *q == p) {
            return Err(Error::Config(format!(
                "line {}: key {p} given twice",
                n + 1
            )));
        }
        out.push((p, v));
    }
    Ok(out)
}

/// Defaults, then the file (if any), then command-line overrides; the result
/// is validated.
pub fn load_params(file: Option<&Path>, overrides: &[String]) -> Result<ModelParams> {
    let mut params = ModelParams::default();
    if let Some(path) = file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        for (p, v) in parse_config(&text)? {
            p.set(&mut params, v);
        }
    }
    for o in overrides {
        let (p, v) = parse_assignment(o)?;
        p.set(&mut params, v);
    }
    params
        .validate()
        .map_err(|e| Error::Config(e.to_string()))?;
    Ok(params)
}
