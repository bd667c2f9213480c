use std::collections::HashMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, ValueEnum};

use wigner_osc::cli::{
    read_csv, run, write_csv, write_json, CliError, Command, OutputFormat, RunConfig,
};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CommandName {
    /// Ground-state survival curve under white noise (closed form)
    Survival,
    /// Phase density P(phi) at a fixed omega-t
    PhaseDist,
    /// Mean phase versus omega-t (quadrature)
    PhaseExpect,
    /// Eigenvalues of the truncated phase operator
    Spectrum,
    /// Parametric-resonance survival (closed form and quadrature form)
    Parametric,
    /// Full-ODE versus averaged motion for a slow frequency modulation
    Adiabatic,
    /// Propagator kernel covariance versus omega-t
    Kernel,
    /// Transition probabilities from one energy level
    Transition,
    /// Monte-Carlo cross-check of the survival curve
    McCheck,
}

impl From<CommandName> for Command {
    fn from(c: CommandName) -> Self {
        match c {
            CommandName::Survival => Command::Survival,
            CommandName::PhaseDist => Command::PhaseDist,
            CommandName::PhaseExpect => Command::PhaseExpect,
            CommandName::Spectrum => Command::Spectrum,
            CommandName::Parametric => Command::Parametric,
            CommandName::Adiabatic => Command::Adiabatic,
            CommandName::Kernel => Command::Kernel,
            CommandName::Transition => Command::Transition,
            CommandName::McCheck => Command::McCheck,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatName {
    Csv,
    Json,
}

/// Phase-space curves and tables for a noise- or parametrically-driven
/// quantum oscillator. Natural units (hbar = m = omega0 = 1) throughout;
/// times are phase angles omega*t in radians unless noted.
#[derive(Debug, Parser)]
#[command(name = "wigner-osc", version, about)]
struct Args {
    /// What to compute
    #[arg(value_enum)]
    command: CommandName,

    /// Dimensionless noise strength N = mu/(m omega^2 hbar)
    #[arg(long)]
    n_param: Option<f64>,

    /// Snapshot phase omega*t (rad) for phase-dist and transition
    #[arg(long)]
    omega_t: Option<f64>,

    /// Grid end omega*t (rad) for curves
    #[arg(long)]
    omega_t_max: Option<f64>,

    /// Number of grid rows (>= 2)
    #[arg(long)]
    grid_points: Option<usize>,

    /// Energy-basis truncation size
    #[arg(long)]
    dim: Option<usize>,

    /// Parametric growth rate u = ebar*omega0/4 (rad/s)
    #[arg(long)]
    u: Option<f64>,

    /// Parametric modulation amplitude (dimensionless, keep <= 0.2)
    #[arg(long)]
    ebar: Option<f64>,

    /// Parametric detuning f (rad/s); growth occurs for -2u < f < 2u
    #[arg(long, alias = "f")]
    detuning: Option<f64>,

    /// Adiabatic modulation amplitude (dimensionless)
    #[arg(long)]
    eps0: Option<f64>,

    /// Adiabatic modulation rate (rad/s)
    #[arg(long)]
    eps_rate: Option<f64>,

    /// Time horizon (s); defaults: 5/u (parametric), one slow period (adiabatic)
    #[arg(long)]
    t_max: Option<f64>,

    /// Initial energy level for transition tables
    #[arg(long)]
    initial: Option<usize>,

    /// Largest final energy level for transition tables
    #[arg(long)]
    final_max: Option<usize>,

    /// Monte-Carlo seed (results are bit-reproducible for a fixed seed)
    #[arg(long)]
    seed: Option<u64>,

    /// Monte-Carlo trajectory count
    #[arg(long)]
    trajectories: Option<usize>,

    /// Output file; standard output when omitted
    #[arg(long)]
    output: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum)]
    format: Option<FormatName>,

    /// Plain key=value defaults file (explicit flags win on conflict)
    #[arg(long)]
    config: Option<PathBuf>,

    /// Re-parse the emitted CSV as a self-check before exiting
    #[arg(long, default_value_t = false)]
    verify_round_trip: bool,
}

fn parse_config_file(path: &PathBuf) -> Result<HashMap<String, String>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::ConfigFile(format!("{}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            CliError::ConfigFile(format!(
                "{}:{}: expected key=value",
                path.display(),
                lineno + 1
            ))
        })?;
        map.insert(k.trim().replace('_', "-"), v.trim().to_string());
    }
    Ok(map)
}

fn from_file<T: FromStr>(map: &HashMap<String, String>, key: &str) -> Result<Option<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    match map.get(key) {
        None => Ok(None),
        Some(raw) => raw
            .parse::<T>()
            .map(Some)
            .map_err(|e| CliError::ConfigFile(format!("bad value for {key}: {e}"))),
    }
}

fn build_config(args: &Args) -> Result<RunConfig, CliError> {
    let file = match &args.config {
        Some(path) => parse_config_file(path)?,
        None => HashMap::new(),
    };
    let mut cfg = RunConfig::new(args.command.into());

    macro_rules! resolve {
        ($field:ident, $key:literal) => {
            if let Some(v) = args.$field {
                cfg.$field = v;
            } else if let Some(v) = from_file(&file, $key)? {
                cfg.$field = v;
            }
        };
    }
    resolve!(n_param, "n-param");
    resolve!(omega_t, "omega-t");
    resolve!(omega_t_max, "omega-t-max");
    resolve!(grid_points, "grid-points");
    resolve!(dim, "dim");
    resolve!(u, "u");
    resolve!(ebar, "ebar");
    resolve!(detuning, "detuning");
    resolve!(eps0, "eps0");
    resolve!(eps_rate, "eps-rate");
    resolve!(initial, "initial");
    resolve!(final_max, "final-max");
    resolve!(seed, "seed");
    resolve!(trajectories, "trajectories");
    if let Some(v) = args.t_max {
        cfg.t_max = Some(v);
    } else if let Some(v) = from_file::<f64>(&file, "t-max")? {
        cfg.t_max = Some(v);
    }
    cfg.format = match args.format {
        Some(FormatName::Csv) => OutputFormat::Csv,
        Some(FormatName::Json) => OutputFormat::Json,
        None => match file.get("format").map(String::as_str) {
            Some("json") => OutputFormat::Json,
            Some("csv") | None => OutputFormat::Csv,
            Some(other) => {
                return Err(CliError::ConfigFile(format!("unknown format '{other}'")));
            }
        },
    };
    if cfg.ebar.abs() > 0.2 {
        eprintln!(
            "warning: ebar = {} is outside the weak-modulation range (<= 0.2); averaged results degrade",
            cfg.ebar
        );
    }
    Ok(cfg)
}

fn emit(cfg: &RunConfig, args: &Args) -> Result<(), CliError> {
    let table = run(cfg)?;
    let mut bytes = Vec::new();
    match cfg.format {
        OutputFormat::Csv => write_csv(&table, &mut bytes)?,
        OutputFormat::Json => write_json(&table, &mut bytes)?,
    }
    if args.verify_round_trip && cfg.format == OutputFormat::Csv {
        let parsed = read_csv(io::Cursor::new(&bytes))?;
        if parsed.rows.len() != table.rows.len() {
            return Err(CliError::Parse("round-trip row count mismatch".into()));
        }
    }
    match &args.output {
        Some(path) => {
            fs::write(path, &bytes)?;
        }
        None => {
            io::stdout().write_all(&bytes)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = match build_config(&args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match emit(&cfg, &args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
