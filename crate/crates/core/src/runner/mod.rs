//! Scenario execution: single runs, parameter sweeps and the
//! parallel-vs-collective comparison.

mod config;
mod emit;
mod figures;

pub use config::{ConfigFile, GridSpec, ParamsSpec, SweepSpec, DEFAULT_STEPS};
pub use emit::{emit, format_sig12, write_csv, write_json, Destination, OutputFormat};
pub use figures::{figure_jobs, run_figures, FigureJob, FigureOutput, XYZ_FIGURE_GAMMA};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::{evolve, parallel_ergotropy, TimeGrid};
use crate::error::{Error, Result};
use crate::model::{build_all, initial_state, ModelParams, ModelPreset};
use crate::observables::{find_peak, power, record_trajectory, ObservableRecord, PeakKind, PeakReport};

/// Columns that can be selected for output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Observable {
    Ergotropy,
    Power,
    Coherence,
    Steering,
    Energy,
}

impl Observable {
    pub const ALL: [Observable; 5] = [
        Observable::Ergotropy,
        Observable::Power,
        Observable::Coherence,
        Observable::Steering,
        Observable::Energy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Observable::Ergotropy => "ergotropy",
            Observable::Power => "power",
            Observable::Coherence => "coherence",
            Observable::Steering => "steering",
            Observable::Energy => "energy",
        }
    }

    pub fn value(self, r: &ObservableRecord) -> f64 {
        match self {
            Observable::Ergotropy => r.ergotropy,
            Observable::Power => r.power,
            Observable::Coherence => r.coherence,
            Observable::Steering => r.steering,
            Observable::Energy => r.mean_energy,
        }
    }

    /// Parses a comma-separated list such as `ergotropy,power`.
    pub fn parse_list(s: &str) -> Result<Vec<Observable>> {
        s.split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl FromStr for Observable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Observable::ALL
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Config(format!("unknown observable `{s}`")))
    }
}

/// Parameter varied across a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SweepParameter {
    #[serde(rename = "D")]
    D,
    #[serde(rename = "delta")]
    Delta,
    #[serde(rename = "gamma")]
    Gamma,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::D => "D",
            SweepParameter::Delta => "delta",
            SweepParameter::Gamma => "gamma",
        }
    }

    pub fn apply(self, params: &ModelParams, value: f64) -> ModelParams {
        let mut p = *params;
        match self {
            SweepParameter::D => p.d = value,
            SweepParameter::Delta => p.delta = value,
            SweepParameter::Gamma => p.gamma = value,
        }
        p
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "D" | "d" => Ok(SweepParameter::D),
            "delta" | "Delta" => Ok(SweepParameter::Delta),
            "gamma" | "Gamma" => Ok(SweepParameter::Gamma),
            other => Err(Error::Config(format!(
                "unknown sweep parameter `{other}` (expected D, delta or gamma)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sweep {
    pub parameter: SweepParameter,
    pub values: Vec<f64>,
}

/// A fully resolved run description.
#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioConfig {
    pub label: String,
    pub preset: ModelPreset,
    pub params: ModelParams,
    pub grid: TimeGrid,
    pub observables: Vec<Observable>,
    pub sweep: Option<Sweep>,
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.grid.validate()?;
        if self.observables.is_empty() {
            return Err(Error::Config("observables: at least one must be selected".into()));
        }
        match &self.sweep {
            None => self.preset.check(&self.params)?,
            Some(sweep) => {
                if sweep.values.is_empty() {
                    return Err(Error::Config("sweep.values: must not be empty".into()));
                }
                for &v in &sweep.values {
                    if !v.is_finite() {
                        return Err(Error::Config(format!("sweep.values: {v} is not finite")));
                    }
                    self.preset.check(&sweep.parameter.apply(&self.params, v))?;
                }
            }
        }
        Ok(())
    }

    /// The parameter points this scenario visits, in order.
    pub fn points(&self) -> Vec<(Option<f64>, ModelParams)> {
        match &self.sweep {
            None => vec![(None, self.params)],
            Some(s) => s
                .values
                .iter()
                .map(|&v| (Some(v), s.parameter.apply(&self.params, v)))
                .collect(),
        }
    }
}

/// Records and peaks for one parameter point.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesResult {
    pub sweep_value: Option<f64>,
    pub params: ModelParams,
    pub records: Vec<ObservableRecord>,
    pub ergotropy_peak: PeakReport,
    pub power_peak: PeakReport,
}

/// Output of a scenario: one series per sweep value, in input order.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub label: String,
    /// Column name written to `sweep_param`; `None` for a single run.
    pub sweep_param: Option<String>,
    pub observables: Vec<Observable>,
    pub series: Vec<SeriesResult>,
}

/// Builds, evolves and measures one parameter point.
pub fn run_point(
    params: &ModelParams,
    preset: ModelPreset,
    grid: &TimeGrid,
    sweep_value: Option<f64>,
) -> Result<SeriesResult> {
    let set = build_all(params, preset)?;
    let traj = evolve(&set.h_total, &initial_state(), grid)?;
    let records = record_trajectory(&traj, &set.h_free)?;
    Ok(SeriesResult {
        sweep_value,
        params: *params,
        ergotropy_peak: find_peak(&records, PeakKind::Ergotropy)?,
        power_peak: find_peak(&records, PeakKind::Power)?,
        records,
    })
}

/// Runs every point of `cfg`. Points are evaluated concurrently; the result
/// keeps the input order.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let series = cfg
        .points()
        .into_par_iter()
        .map(|(value, params)| run_point(&params, cfg.preset, &cfg.grid, value))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult {
        label: cfg.label.clone(),
        sweep_param: cfg.sweep.as_ref().map(|s| s.parameter.name().to_string()),
        observables: cfg.observables.clone(),
        series,
    })
}

/// Charging mode codes used in the `sweep_value` column of comparison output.
pub mod charging_mode {
    pub const COLUMN: &str = "charging_mode";
    pub const COLLECTIVE: f64 = 0.0;
    pub const PARALLEL: f64 = 1.0;
    /// Closed-form parallel reference; only ergotropy and power are filled.
    pub const ANALYTIC_PARALLEL: f64 = 2.0;
}

/// Collective charging next to the uncoupled baseline on one grid.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargingComparison {
    pub collective: SeriesResult,
    pub parallel: SeriesResult,
    /// `4ω₀ sin²(Ωt)` at each grid time.
    pub analytic_ergotropy: Vec<f64>,
}

impl ChargingComparison {
    /// Packs the three series into the common output schema, keyed by
    /// [`charging_mode`].
    pub fn to_sweep_result(&self, label: &str, observables: &[Observable]) -> SweepResult {
        let analytic_records: Vec<ObservableRecord> = self
            .parallel
            .records
            .iter()
            .zip(&self.analytic_ergotropy)
            .map(|(r, &z)| ObservableRecord {
                t: r.t,
                ergotropy: z,
                power: power(z, r.t).unwrap_or(f64::NAN),
                coherence: f64::NAN,
                steering: f64::NAN,
                mean_energy: f64::NAN,
            })
            .collect();
        let analytic = SeriesResult {
            sweep_value: Some(charging_mode::ANALYTIC_PARALLEL),
            params: self.parallel.params,
            ergotropy_peak: find_peak(&analytic_records, PeakKind::Ergotropy)
                .expect("grid has at least two points"),
            power_peak: find_peak(&analytic_records, PeakKind::Power)
                .expect("grid has at least two points"),
            records: analytic_records,
        };
        let mut collective = self.collective.clone();
        collective.sweep_value = Some(charging_mode::COLLECTIVE);
        let mut parallel = self.parallel.clone();
        parallel.sweep_value = Some(charging_mode::PARALLEL);
        SweepResult {
            label: label.to_string(),
            sweep_param: Some(charging_mode::COLUMN.to_string()),
            observables: observables.to_vec(),
            series: vec![collective, parallel, analytic],
        }
    }
}

/// Runs `params` (collective) and its `J = D = 0` counterpart (parallel).
pub fn compare_charging(params: &ModelParams, grid: &TimeGrid) -> Result<ChargingComparison> {
    let collective = run_point(params, ModelPreset::Custom, grid, None)?;
    let parallel = run_point(&params.parallel(), ModelPreset::Custom, grid, None)?;
    let analytic_ergotropy = grid
        .times()
        .map(|t| parallel_ergotropy(t, params.omega, params.omega0))
        .collect();
    Ok(ChargingComparison {
        collective,
        parallel,
        analytic_ergotropy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::t_min;

    fn ising_sweep() -> ScenarioConfig {
        ScenarioConfig {
            label: "ising".into(),
            preset: ModelPreset::Ising,
            params: ModelParams::ising(0.0),
            grid: TimeGrid::from_zero(t_min(1.0).unwrap(), 201).unwrap(),
            observables: Observable::ALL.to_vec(),
            sweep: Some(Sweep {
                parameter: SweepParameter::D,
                values: vec![0.0, 3.0, 6.0, 9.0],
            }),
        }
    }

    #[test]
    fn observable_list_parsing() {
        assert_eq!(
            Observable::parse_list("ergotropy, Power").unwrap(),
            vec![Observable::Ergotropy, Observable::Power]
        );
        assert!(Observable::parse_list("ergotropy,entropy").is_err());
    }

    #[test]
    fn sweep_keeps_input_order() {
        let mut cfg = ising_sweep();
        cfg.sweep.as_mut().unwrap().values = vec![9.0, 0.0, 3.0];
        let res = run_scenario(&cfg).unwrap();
        let values: Vec<_> = res.series.iter().map(|s| s.sweep_value.unwrap()).collect();
        assert_eq!(values, vec![9.0, 0.0, 3.0]);
        assert_eq!(res.series[0].params.d, 9.0);
    }

    #[test]
    fn single_value_sweep_matches_plain_run() {
        let mut swept = ising_sweep();
        swept.sweep.as_mut().unwrap().values = vec![3.0];
        let mut plain = ising_sweep();
        plain.sweep = None;
        plain.params.d = 3.0;
        let a = run_scenario(&swept).unwrap();
        let b = run_scenario(&plain).unwrap();
        assert_eq!(a.series[0].records, b.series[0].records);
        assert_eq!(a.series[0].ergotropy_peak, b.series[0].ergotropy_peak);
    }

    #[test]
    fn sweep_checks_every_value_against_preset() {
        let mut cfg = ising_sweep();
        cfg.sweep = Some(Sweep {
            parameter: SweepParameter::Delta,
            values: vec![0.0, 0.5],
        });
        assert!(matches!(run_scenario(&cfg), Err(Error::PresetViolation { .. })));

        let mut cfg = ising_sweep();
        cfg.sweep.as_mut().unwrap().values = vec![];
        assert!(matches!(run_scenario(&cfg), Err(Error::Config(_))));

        let mut cfg = ising_sweep();
        cfg.sweep.as_mut().unwrap().values = vec![f64::INFINITY];
        assert!(run_scenario(&cfg).is_err());

        let mut cfg = ising_sweep();
        cfg.observables.clear();
        assert!(matches!(run_scenario(&cfg), Err(Error::Config(_))));
    }

    #[test]
    fn comparison_reference_columns_agree() {
        let grid = TimeGrid::from_zero(t_min(1.0).unwrap(), 101).unwrap();
        let cmp = compare_charging(&ModelParams::ising(0.0), &grid).unwrap();
        for (r, z) in cmp.parallel.records.iter().zip(&cmp.analytic_ergotropy) {
            assert!((r.ergotropy - z).abs() < 1e-9);
        }
        let packed = cmp.to_sweep_result("fig2", &Observable::ALL);
        assert_eq!(packed.series.len(), 3);
        assert_eq!(packed.sweep_param.as_deref(), Some("charging_mode"));
        assert!(packed.series[2].records[5].coherence.is_nan());
    }
}
