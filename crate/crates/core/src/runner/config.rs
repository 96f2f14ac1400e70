//! JSON scenario files.
//!
//! ```json
//! {
//!   "label": "ising-dm",
//!   "model": "ising",
//!   "params": { "J": 1.0, "D": 0.0, "omega": 1.0, "omega0": 1.0 },
//!   "grid": { "t_start": 0.0, "t_end": 1.5707963267948966, "steps": 2001 },
//!   "observables": ["ergotropy", "power"],
//!   "sweep": { "parameter": "D", "values": [0, 3, 6, 9] }
//! }
//! ```
//!
//! Every key is optional. Defaults: `model = custom`, `J = 1`, `D = 0`,
//! `omega = 1`, `omega0 = omega`, `t_start = 0`, `steps = 2001`, all
//! observables. `t_end` defaults to `π/(2Ω)` for `ising`/`custom` and four
//! times that for `xxz`/`xyz`. `ising` fills `gamma = 1, delta = 0`; `xxz`
//! fills `gamma = 0` and needs `delta`; `xyz` needs both `gamma` and `delta`;
//! `custom` defaults both to 0.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Observable, ScenarioConfig, Sweep, SweepParameter};
use crate::dynamics::{t_min, TimeGrid};
use crate::error::{Error, Result};
use crate::model::{ModelParams, ModelPreset};

pub const DEFAULT_STEPS: usize = 2001;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsSpec {
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega0: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_start: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_end: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub parameter: String,
    pub values: Vec<f64>,
}

/// A scenario file as written by a user; [`ConfigFile::resolve`] fills
/// defaults and validates.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    #[serde(default)]
    pub params: ParamsSpec,
    #[serde(default)]
    pub grid: GridSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observables: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSpec>,
}

impl ConfigFile {
    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Config(format!("malformed config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json_str(&text)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Writes every field of `cfg` explicitly.
    pub fn from_scenario(cfg: &ScenarioConfig) -> Self {
        let p = &cfg.params;
        Self {
            label: Some(cfg.label.clone()),
            model: Some(cfg.preset.name().to_string()),
            params: ParamsSpec {
                j: Some(p.j),
                gamma: Some(p.gamma),
                delta: Some(p.delta),
                d: Some(p.d),
                omega: Some(p.omega),
                omega0: Some(p.omega0),
            },
            grid: GridSpec {
                t_start: Some(cfg.grid.t_start),
                t_end: Some(cfg.grid.t_end),
                steps: Some(cfg.grid.steps),
            },
            observables: Some(cfg.observables.iter().map(|o| o.name().to_string()).collect()),
            sweep: cfg.sweep.as_ref().map(|s| SweepSpec {
                parameter: s.parameter.name().to_string(),
                values: s.values.clone(),
            }),
        }
    }

    pub fn resolve(&self) -> Result<ScenarioConfig> {
        let preset: ModelPreset = match &self.model {
            Some(m) => m.parse()?,
            None => ModelPreset::Custom,
        };
        let spec = &self.params;
        let swept = self
            .sweep
            .as_ref()
            .map(|s| s.parameter.parse::<SweepParameter>())
            .transpose()?;
        // a swept parameter may be left out of `params`
        let need = |value: Option<f64>, name: &'static str, which: SweepParameter| {
            value.or_else(|| (swept == Some(which)).then_some(f64::NAN)).ok_or_else(|| {
                Error::Config(format!("{name} is required for the {preset} model"))
            })
        };
        let (gamma, delta) = match preset {
            ModelPreset::Ising => (spec.gamma.unwrap_or(1.0), spec.delta.unwrap_or(0.0)),
            ModelPreset::Xxz => (
                spec.gamma.unwrap_or(0.0),
                need(spec.delta, "delta", SweepParameter::Delta)?,
            ),
            ModelPreset::Xyz => (
                need(spec.gamma, "gamma", SweepParameter::Gamma)?,
                need(spec.delta, "delta", SweepParameter::Delta)?,
            ),
            ModelPreset::Custom => (spec.gamma.unwrap_or(0.0), spec.delta.unwrap_or(0.0)),
        };
        let omega = spec.omega.unwrap_or(1.0);
        let mut params = ModelParams {
            j: spec.j.unwrap_or(1.0),
            gamma,
            delta,
            d: spec.d.unwrap_or(0.0),
            omega,
            omega0: spec.omega0.unwrap_or(omega),
        };
        let sweep = match (&self.sweep, swept) {
            (Some(s), Some(parameter)) => {
                // placeholder for an omitted swept value; every point overrides it
                let base = match parameter {
                    SweepParameter::D => &mut params.d,
                    SweepParameter::Delta => &mut params.delta,
                    SweepParameter::Gamma => &mut params.gamma,
                };
                if base.is_nan() {
                    *base = s.values.first().copied().unwrap_or(0.0);
                }
                Some(Sweep {
                    parameter,
                    values: s.values.clone(),
                })
            }
            _ => None,
        };

        let t_end = match self.grid.t_end {
            Some(t) => t,
            None => {
                let tm = t_min(omega)?;
                match preset {
                    ModelPreset::Xxz | ModelPreset::Xyz => 4.0 * tm,
                    ModelPreset::Ising | ModelPreset::Custom => tm,
                }
            }
        };
        let grid = TimeGrid {
            t_start: self.grid.t_start.unwrap_or(0.0),
            t_end,
            steps: self.grid.steps.unwrap_or(DEFAULT_STEPS),
        };
        let observables = match &self.observables {
            Some(names) => names
                .iter()
                .map(|n| n.parse())
                .collect::<Result<Vec<Observable>>>()?,
            None => Observable::ALL.to_vec(),
        };
        let cfg = ScenarioConfig {
            label: self.label.clone().unwrap_or_else(|| preset.name().to_string()),
            preset,
            params,
            grid,
            observables,
            sweep,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}
