//! `anisorabi` command line: grid sweeps of the anisotropic Rabi model written
//! as CSV.
//!
//! Settings resolve as built-in defaults, then a JSON file given by
//! `--config`, then command-line flags.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anisorabi::sweep::{
    run_bloch_siegert_surface, run_compare, run_lambda_surface, run_observables,
    run_spectrum_sweep, Axis, Dataset, Execution, GprimeRule, Method, SweepConfig, DEFAULT_STEPS,
};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

const EXIT_CONFIG: u8 = 2;
const EXIT_ALL_FAILED: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "anisorabi", version, about = "Anisotropic Rabi model sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lowest levels along a g line, analytic vs exact, matched by parity label.
    Spectrum(SweepArgs),
    /// λ₁ over a (g, g′) grid.
    LambdaSurface(SweepArgs),
    /// |Bloch-Siegert shift| of the E₁₋ → E_G transition over a (g, g′) grid.
    BlochSiegert(SweepArgs),
    /// Ground-state photon number, inversion and polariton statistics.
    Observables(SweepArgs),
    /// Per-point maximum level error and shift error.
    Compare(SweepArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Spectrum(_) => "spectrum",
            Command::LambdaSurface(_) => "lambda-surface",
            Command::BlochSiegert(_) => "bloch-siegert",
            Command::Observables(_) => "observables",
            Command::Compare(_) => "compare",
        }
    }

    fn args(&self) -> &SweepArgs {
        match self {
            Command::Spectrum(a)
            | Command::LambdaSurface(a)
            | Command::BlochSiegert(a)
            | Command::Observables(a)
            | Command::Compare(a) => a,
        }
    }

    fn uses_surface(&self) -> bool {
        matches!(self, Command::LambdaSurface(_) | Command::BlochSiegert(_))
    }
}

/// Every setting, all optional so that layers can be merged.
#[derive(Args, Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct Settings {
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long)]
    big_omega: Option<f64>,
    #[arg(long)]
    g_min: Option<f64>,
    #[arg(long)]
    g_max: Option<f64>,
    #[arg(long)]
    g_steps: Option<usize>,
    /// g′ = r·g
    #[arg(long, conflicts_with_all = ["gprime", "gprime_min", "gprime_max", "gprime_steps"])]
    gprime_ratio: Option<f64>,
    /// Fixed g′
    #[arg(long, conflicts_with_all = ["gprime_min", "gprime_max", "gprime_steps"])]
    gprime: Option<f64>,
    #[arg(long)]
    gprime_min: Option<f64>,
    #[arg(long)]
    gprime_max: Option<f64>,
    #[arg(long)]
    gprime_steps: Option<usize>,
    #[arg(long)]
    levels: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// analytic | numeric | both
    #[arg(long)]
    method: Option<String>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    settings: Settings,
    /// JSON file with the same keys as the flags (underscored)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output path; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Evaluate grid points one at a time
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug)]
enum CliError {
    Config(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "invalid configuration: {m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

impl Settings {
    fn has_gprime(&self) -> bool {
        self.gprime_ratio.is_some()
            || self.gprime.is_some()
            || self.gprime_min.is_some()
            || self.gprime_max.is_some()
            || self.gprime_steps.is_some()
    }

    fn gprime_rule(&self) -> Result<Option<GprimeRule>, CliError> {
        let axis =
            self.gprime_min.is_some() || self.gprime_max.is_some() || self.gprime_steps.is_some();
        let chosen = [self.gprime_ratio.is_some(), self.gprime.is_some(), axis];
        if chosen.iter().filter(|&&c| c).count() > 1 {
            return Err(CliError::Config(
                "choose one of gprime_ratio, gprime, or a gprime axis".into(),
            ));
        }
        Ok(if let Some(r) = self.gprime_ratio {
            Some(GprimeRule::Ratio(r))
        } else if let Some(v) = self.gprime {
            Some(GprimeRule::Fixed(v))
        } else if axis {
            Some(GprimeRule::Axis(Axis {
                min: self.gprime_min.unwrap_or(0.0),
                max: self.gprime_max.unwrap_or(0.5),
                steps: self.gprime_steps.unwrap_or(DEFAULT_STEPS),
            }))
        } else {
            None
        })
    }

    /// Overlay `self` onto `base`. A layer that mentions g′ at all replaces
    /// the g′ rule as a whole.
    fn apply(&self, base: &mut SweepConfig) -> Result<(), CliError> {
        macro_rules! set {
            ($src:ident => $($dst:tt)+) => {
                if let Some(v) = self.$src {
                    base.$($dst)+ = v;
                }
            };
        }
        set!(omega => omega);
        set!(big_omega => big_omega);
        set!(g_min => g_axis.min);
        set!(g_max => g_axis.max);
        set!(g_steps => g_axis.steps);
        set!(levels => n_levels);
        set!(n_max => n_max);
        if let Some(m) = &self.method {
            base.method = m
                .parse::<Method>()
                .map_err(|e| CliError::Config(e.to_string()))?;
        }
        if self.has_gprime() {
            base.gprime_rule = self.gprime_rule()?.expect("some g' setting present");
        }
        Ok(())
    }
}

fn load_file(path: &Path) -> Result<Settings, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

fn resolve(command: &Command) -> Result<SweepConfig, CliError> {
    let mut config = SweepConfig::default();
    if command.uses_surface() {
        config.gprime_rule = GprimeRule::Axis(Axis {
            min: 0.0,
            max: 0.5,
            steps: DEFAULT_STEPS,
        });
    }
    let args = command.args();
    if let Some(path) = &args.config {
        load_file(path)?.apply(&mut config)?;
    }
    args.settings.apply(&mut config)?;
    config
        .validate()
        .map_err(|e| CliError::Config(e.to_string()))?;
    Ok(config)
}

fn run(command: &Command) -> Result<Dataset, CliError> {
    let config = resolve(command)?;
    let exec = if command.args().sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let result = match command {
        Command::Spectrum(_) => run_spectrum_sweep(&config, exec),
        Command::LambdaSurface(_) => run_lambda_surface(&config, exec),
        Command::BlochSiegert(_) => run_bloch_siegert_surface(&config, exec),
        Command::Observables(_) => run_observables(&config, exec),
        Command::Compare(_) => run_compare(&config, exec),
    };
    result.map_err(|e| CliError::Config(e.to_string()))
}

fn write_output(data: &Dataset, out: Option<&Path>) -> Result<(), CliError> {
    let io_err = |e: io::Error| CliError::Io(e.to_string());
    match out {
        Some(path) => {
            let file =
                File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            data.write_csv(BufWriter::new(file)).map_err(io_err)
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            data.write_csv(&mut lock).map_err(io_err)?;
            lock.flush().map_err(io_err)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli.command).and_then(|data| {
        write_output(&data, cli.command.args().out.as_deref())?;
        Ok(data)
    });
    match outcome {
        Ok(data) if data.all_points_failed() => {
            eprintln!(
                "anisorabi {}: no grid point admits an analytic solution",
                cli.command.name()
            );
            ExitCode::from(EXIT_ALL_FAILED)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("anisorabi {}: {e}", cli.command.name());
            ExitCode::from(e.exit_code())
        }
    }
}
