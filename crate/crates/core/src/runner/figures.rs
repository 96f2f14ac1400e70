//! Built-in parameter studies, one output file per figure panel group.
//!
//! All presets hold `J = Ω = ω₀ = 1`. The XYZ studies need a `γ` that the
//! original study does not report; [`XYZ_FIGURE_GAMMA`] is used unless the
//! caller supplies one.

use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::emit::emit_file;
use super::{compare_charging, run_scenario, Observable, OutputFormat, ScenarioConfig, Sweep, SweepParameter, SweepResult};
use crate::dynamics::{t_min, TimeGrid};
use crate::error::Result;
use crate::model::{ModelParams, ModelPreset};

/// Default anisotropy `γ` for the XYZ studies.
pub const XYZ_FIGURE_GAMMA: f64 = 0.32;

#[derive(Clone, Debug, PartialEq)]
pub enum FigureJob {
    Scenario(ScenarioConfig),
    Compare {
        label: String,
        params: ModelParams,
        grid: TimeGrid,
        observables: Vec<Observable>,
    },
}

impl FigureJob {
    pub fn label(&self) -> &str {
        match self {
            FigureJob::Scenario(cfg) => &cfg.label,
            FigureJob::Compare { label, .. } => label,
        }
    }

    pub fn run(&self) -> Result<SweepResult> {
        match self {
            FigureJob::Scenario(cfg) => run_scenario(cfg),
            FigureJob::Compare {
                label,
                params,
                grid,
                observables,
            } => Ok(compare_charging(params, grid)?.to_sweep_result(label, observables)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureOutput {
    pub label: String,
    pub path: PathBuf,
}

fn sweep_d(
    label: &str,
    preset: ModelPreset,
    params: ModelParams,
    grid: TimeGrid,
    observables: &[Observable],
    values: &[f64],
) -> FigureJob {
    FigureJob::Scenario(ScenarioConfig {
        label: label.to_string(),
        preset,
        params,
        grid,
        observables: observables.to_vec(),
        sweep: Some(Sweep {
            parameter: SweepParameter::D,
            values: values.to_vec(),
        }),
    })
}

/// The seven studies with `steps` grid points each.
pub fn figure_jobs(xyz_gamma: f64, steps: usize) -> Result<Vec<FigureJob>> {
    let tm = t_min(1.0)?;
    let short = TimeGrid::from_zero(tm, steps)?;
    let long = TimeGrid::from_zero(4.0 * tm, steps)?;
    let energetics = [Observable::Ergotropy, Observable::Power];
    let correlations = [Observable::Coherence, Observable::Steering];

    Ok(vec![
        FigureJob::Compare {
            label: "fig2_ising_parallel_vs_collective".into(),
            params: ModelParams::ising(0.0),
            grid: short,
            observables: energetics.to_vec(),
        },
        sweep_d(
            "fig3_ising_dm",
            ModelPreset::Ising,
            ModelParams::ising(0.0),
            short,
            &energetics,
            &[0.0, 3.0, 6.0, 9.0],
        ),
        sweep_d(
            "fig4_xxz_dm",
            ModelPreset::Xxz,
            ModelParams::xxz(2.0, 0.0),
            long,
            &energetics,
            &[0.0, 1.7],
        ),
        sweep_d(
            "fig5_xxz_correlations",
            ModelPreset::Xxz,
            ModelParams::xxz(2.0, 0.0),
            long,
            &correlations,
            &[0.0, 0.8, 1.2, 1.7],
        ),
        FigureJob::Scenario(ScenarioConfig {
            label: "fig6_xyz_anisotropy".into(),
            preset: ModelPreset::Xyz,
            params: ModelParams::xyz(xyz_gamma, 2.5, 0.0),
            grid: long,
            observables: energetics.to_vec(),
            sweep: Some(Sweep {
                parameter: SweepParameter::Delta,
                values: vec![2.5, 3.0],
            }),
        }),
        sweep_d(
            "fig7_xyz_delta2.5_dm",
            ModelPreset::Xyz,
            ModelParams::xyz(xyz_gamma, 2.5, 0.0),
            long,
            &energetics,
            &[0.0, 0.5, 1.0],
        ),
        sweep_d(
            "fig7_xyz_delta3_dm",
            ModelPreset::Xyz,
            ModelParams::xyz(xyz_gamma, 3.0, 0.0),
            long,
            &energetics,
            &[0.0, 0.5, 1.0],
        ),
    ])
}

/// Runs every study and writes `<label>.<ext>` files into `dir`.
pub fn run_figures(
    dir: &Path,
    format: OutputFormat,
    xyz_gamma: f64,
    steps: usize,
) -> Result<Vec<FigureOutput>> {
    let jobs = figure_jobs(xyz_gamma, steps)?;
    let results = jobs
        .par_iter()
        .map(FigureJob::run)
        .collect::<Result<Vec<_>>>()?;
    jobs.iter()
        .zip(&results)
        .map(|(job, result)| {
            let path = dir.join(format!("{}.{}", job.label(), format.extension()));
            emit_file(result, format, &path)?;
            Ok(FigureOutput {
                label: job.label().to_string(),
                path,
            })
        })
        .collect()
}
