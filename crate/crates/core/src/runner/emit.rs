//! CSV and JSON writers for [`SweepResult`].
//!
//! CSV header: `sweep_param,sweep_value,t,ergotropy,power,coherence,steering,energy`.
//! Unselected or undefined observables are left empty (`null` in JSON).
//! Numbers carry 12 significant digits. Rows are ordered by sweep index,
//! then time.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::{Observable, SweepResult};
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "sweep_param,sweep_value,t,ergotropy,power,coherence,steering,energy";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!("unknown format `{other}` (expected csv or json)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Destination {
    Stdout,
    File(PathBuf),
}

/// `x` with 12 significant digits, `%.12g` style. Non-finite values map to
/// the empty string.
pub fn format_sig12(x: f64) -> String {
    if !x.is_finite() {
        return String::new();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let fixed = format!("{:.*}", (11 - exp) as usize, x);
        trim_fraction(&fixed).to_string()
    } else {
        format!("{}e{exp}", trim_fraction(mantissa))
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Value rounded to 12 significant digits, as stored in JSON output.
fn rounded(x: f64) -> Value {
    if x.is_finite() {
        let v: f64 = format_sig12(x).parse().expect("formatted float parses");
        json!(v)
    } else {
        Value::Null
    }
}

fn cell(result: &SweepResult, obs: Observable, value: f64) -> Option<f64> {
    (result.observables.contains(&obs) && value.is_finite()).then_some(value)
}

pub fn write_csv<W: Write>(result: &SweepResult, mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    let param = result.sweep_param.as_deref().unwrap_or("");
    for series in &result.series {
        let sweep_value = series.sweep_value.map(format_sig12).unwrap_or_default();
        for r in &series.records {
            write!(w, "{param},{sweep_value},{}", format_sig12(r.t))?;
            for obs in Observable::ALL {
                let v = cell(result, obs, obs.value(r));
                write!(w, ",{}", v.map(format_sig12).unwrap_or_default())?;
            }
            writeln!(w)?;
        }
    }
    w.flush()
}

pub fn to_json_value(result: &SweepResult) -> Value {
    let param = result.sweep_param.clone().map(Value::String).unwrap_or(Value::Null);
    let mut records = Vec::new();
    let mut peaks = Vec::new();
    for series in &result.series {
        let sweep_value = series.sweep_value.map(rounded).unwrap_or(Value::Null);
        for r in &series.records {
            let mut obj = Map::new();
            obj.insert("sweep_param".into(), param.clone());
            obj.insert("sweep_value".into(), sweep_value.clone());
            obj.insert("t".into(), rounded(r.t));
            for obs in Observable::ALL {
                let v = cell(result, obs, obs.value(r)).map(rounded).unwrap_or(Value::Null);
                obj.insert(obs.name().into(), v);
            }
            records.push(Value::Object(obj));
        }
        for peak in [&series.ergotropy_peak, &series.power_peak] {
            peaks.push(json!({
                "sweep_param": param.clone(),
                "sweep_value": sweep_value.clone(),
                "kind": peak.kind.name(),
                "t_peak": rounded(peak.t_peak),
                "value_peak": rounded(peak.value_peak),
            }));
        }
    }
    json!({
        "label": result.label,
        "records": records,
        "peaks": peaks,
    })
}

pub fn write_json<W: Write>(result: &SweepResult, mut w: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut w, &to_json_value(result))?;
    writeln!(w)?;
    w.flush()
}

fn write_to<W: Write>(result: &SweepResult, format: OutputFormat, w: W) -> io::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(result, w),
        OutputFormat::Json => write_json(result, w),
    }
}

/// Writes `result` to a file or standard output.
pub fn emit(result: &SweepResult, format: OutputFormat, destination: &Destination) -> Result<()> {
    match destination {
        Destination::Stdout => {
            let stdout = io::stdout();
            write_to(result, format, BufWriter::new(stdout.lock()))
                .map_err(|e| Error::io("<stdout>", e))
        }
        Destination::File(path) => {
            let file = File::create(path).map_err(|e| Error::io(path, e))?;
            write_to(result, format, BufWriter::new(file)).map_err(|e| Error::io(path, e))
        }
    }
}

/// Writes to `path`, creating parent directories as needed.
pub(crate) fn emit_file(result: &SweepResult, format: OutputFormat, path: &Path) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
    }
    emit(result, format, &Destination::File(path.to_path_buf()))
}
