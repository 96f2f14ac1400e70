use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qbattery::dynamics::t_min;
use qbattery::runner::{
    compare_charging, emit, run_figures, run_scenario, ConfigFile, Destination, OutputFormat,
    ScenarioConfig, SweepSpec, DEFAULT_STEPS, XYZ_FIGURE_GAMMA,
};
use qbattery::Error;

/// Two-cell quantum battery simulator.
#[derive(Debug, Parser)]
#[command(name = "qbattery", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one scenario (any sweep block in the config is ignored)
    Simulate(ScenarioArgs),
    /// Run a scenario over the values of one parameter
    Sweep {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Parameter to sweep: D, delta or gamma
        #[arg(long)]
        sweep_param: Option<String>,
        /// Comma-separated sweep values
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        sweep_values: Option<Vec<f64>>,
    },
    /// Collective charging next to the uncoupled (J = D = 0) baseline
    Compare(ScenarioArgs),
    /// Write the built-in parameter studies, one file each
    Figures {
        /// Output directory
        #[arg(long, default_value = "figures")]
        out: PathBuf,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        /// Anisotropy used by the XYZ studies
        #[arg(long, default_value_t = XYZ_FIGURE_GAMMA, allow_hyphen_values = true)]
        gamma: f64,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
    },
}

#[derive(Debug, Args)]
struct ScenarioArgs {
    /// JSON scenario file; command-line values override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// ising, xxz, xyz or custom
    #[arg(long)]
    model: Option<String>,
    #[arg(long = "J", allow_hyphen_values = true)]
    j: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    #[arg(long = "D", allow_hyphen_values = true)]
    d: Option<f64>,
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long)]
    omega0: Option<f64>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    /// Comma-separated subset of ergotropy,power,coherence,steering,energy
    #[arg(long, value_delimiter = ',')]
    observables: Option<Vec<String>>,
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    /// Output file; standard output when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

impl ScenarioArgs {
    fn config_file(&self) -> Result<ConfigFile, Error> {
        let mut file = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        if self.model.is_some() {
            file.model = self.model.clone();
        }
        let p = &mut file.params;
        p.j = self.j.or(p.j);
        p.gamma = self.gamma.or(p.gamma);
        p.delta = self.delta.or(p.delta);
        p.d = self.d.or(p.d);
        p.omega = self.omega.or(p.omega);
        p.omega0 = self.omega0.or(p.omega0);
        file.grid.t_end = self.t_end.or(file.grid.t_end);
        file.grid.steps = self.steps.or(file.grid.steps);
        if self.observables.is_some() {
            file.observables = self.observables.clone();
        }
        Ok(file)
    }

    fn destination(&self) -> Destination {
        match &self.out {
            Some(path) => Destination::File(path.clone()),
            None => Destination::Stdout,
        }
    }
}

fn simulate(args: &ScenarioArgs) -> Result<(), Error> {
    let mut cfg = args.config_file()?.resolve()?;
    cfg.sweep = None;
    emit(&run_scenario(&cfg)?, args.format, &args.destination())
}

fn sweep(
    args: &ScenarioArgs,
    sweep_param: &Option<String>,
    sweep_values: &Option<Vec<f64>>,
) -> Result<(), Error> {
    let mut file = args.config_file()?;
    let from_config = file.sweep.take();
    let spec = match (sweep_param, sweep_values, from_config) {
        (Some(parameter), Some(values), _) => SweepSpec {
            parameter: parameter.clone(),
            values: values.clone(),
        },
        (None, None, Some(spec)) => spec,
        (param, values, Some(spec)) => SweepSpec {
            parameter: param.clone().unwrap_or(spec.parameter),
            values: values.clone().unwrap_or(spec.values),
        },
        (_, _, None) => {
            return Err(Error::Config(
                "sweep needs --sweep-param and --sweep-values or a sweep block in --config".into(),
            ))
        }
    };
    file.sweep = Some(spec);
    let cfg = file.resolve()?;
    emit(&run_scenario(&cfg)?, args.format, &args.destination())
}

fn compare(args: &ScenarioArgs) -> Result<(), Error> {
    let file = args.config_file()?;
    let explicit_end = file.grid.t_end.is_some();
    let ScenarioConfig {
        label,
        params,
        mut grid,
        observables,
        ..
    } = file.resolve()?;
    if !explicit_end {
        grid.t_end = t_min(params.omega)?;
        grid.validate()?;
    }
    let result = compare_charging(&params, &grid)?.to_sweep_result(&label, &observables);
    emit(&result, args.format, &args.destination())
}

fn run(cli: Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Simulate(args) => simulate(args),
        Command::Sweep {
            scenario,
            sweep_param,
            sweep_values,
        } => sweep(scenario, sweep_param, sweep_values),
        Command::Compare(args) => compare(args),
        Command::Figures {
            out,
            format,
            gamma,
            steps,
        } => {
            for written in run_figures(out, *format, *gamma, *steps)? {
                println!("{}", written.path.display());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_io() { 2 } else { 1 })
        }
    }
}
