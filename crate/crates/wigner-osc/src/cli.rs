//! Command configuration, table emission (CSV/JSON), and the command
//! implementations behind the binary. Every command produces a [`Table`]
//! whose comment header records the full configuration, so each run is
//! reproducible from its own output.

use std::f64::consts::PI;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dynamics::{
    averaged_adiabatic, flow_matrix, integrate_ode, DriveSpec, DynamicsError, EpsilonProfile,
    FrequencyMod,
};
use crate::mc::{estimate_phase_moments, estimate_survival, EnsembleConfig, McError};
use crate::noise::{
    expect_angle_function, ground_survival_under_flow, kernel_moments, phase_density,
    survival_ground, transition_probability, NoiseError, NoiseSpec, SMatrices,
};
use crate::phase_op::{phi_spectrum, PhaseOpError};
use crate::quad::{adaptive_1d, QuadError};
use crate::weyl::{OscillatorSpec, PolarPoint};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("config file: {0}")]
    ConfigFile(String),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    PhaseOp(#[from] PhaseOpError),
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
    #[error(transparent)]
    Noise(#[from] NoiseError),
    #[error(transparent)]
    Mc(#[from] McError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Which curve or table to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Ground-state survival versus omega t (closed form).
    Survival,
    /// Phase density P(phi) at one omega t.
    PhaseDist,
    /// Mean phase versus omega t by quadrature (the reference curve runs
    /// N = 1, omega t in [0, 20]).
    PhaseExpect,
    /// Eigenvalues of the truncated phase operator.
    Spectrum,
    /// Parametric-resonance survival versus time, closed form and
    /// quadrature form.
    Parametric,
    /// Full-ODE versus averaged motion for a slow frequency modulation.
    Adiabatic,
    /// Propagator kernel covariance versus omega t.
    Kernel,
    /// Transition probabilities from one energy level at one omega t.
    Transition,
    /// Monte-Carlo cross-check of the survival curve.
    McCheck,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Survival => "survival",
            Command::PhaseDist => "phase-dist",
            Command::PhaseExpect => "phase-expect",
            Command::Spectrum => "spectrum",
            Command::Parametric => "parametric",
            Command::Adiabatic => "adiabatic",
            Command::Kernel => "kernel",
            Command::Transition => "transition",
            Command::McCheck => "mc-check",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Full run configuration; every field lands in the output header.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    /// Dimensionless noise strength N = mu/(m omega^2 hbar).
    pub n_param: f64,
    /// Snapshot time omega t (rad) for phase-dist and transition.
    pub omega_t: f64,
    /// Grid end omega t (rad) for curves.
    pub omega_t_max: f64,
    pub grid_points: usize,
    /// Energy-basis truncation.
    pub dim: usize,
    /// Parametric growth rate u (rad/s, natural units omega0 = 1).
    pub u: f64,
    /// Parametric modulation amplitude (dimensionless).
    pub ebar: f64,
    /// Parametric detuning f (rad/s).
    pub detuning: f64,
    /// Adiabatic modulation amplitude (dimensionless).
    pub eps0: f64,
    /// Adiabatic modulation rate (rad/s).
    pub eps_rate: f64,
    /// Time horizon (s); None picks a command-specific default.
    pub t_max: Option<f64>,
    /// Initial energy level for transition tables.
    pub initial: usize,
    /// Largest final energy level for transition tables.
    pub final_max: usize,
    pub seed: u64,
    pub trajectories: usize,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            n_param: 1.0,
            omega_t: 2.0,
            omega_t_max: 20.0,
            grid_points: 201,
            dim: 256,
            u: 1.0,
            ebar: 0.05,
            detuning: 0.0,
            eps0: 0.01,
            eps_rate: 0.01,
            t_max: None,
            initial: 0,
            final_max: 10,
            seed: 42,
            trajectories: 100_000,
            format: OutputFormat::Csv,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.grid_points < 2 {
            return Err(CliError::InvalidConfig(format!(
                "grid-points must be at least 2, got {}",
                self.grid_points
            )));
        }
        if self.omega_t_max.is_nan() || self.omega_t_max <= 0.0 {
            return Err(CliError::InvalidConfig(format!(
                "omega-t-max must be positive, got {}",
                self.omega_t_max
            )));
        }
        if self.n_param < 0.0 {
            return Err(CliError::InvalidConfig(format!(
                "n-param must be nonnegative, got {}",
                self.n_param
            )));
        }
        if self.command == Command::Spectrum && self.dim < 2 {
            return Err(CliError::InvalidConfig(format!(
                "spectrum needs dim >= 2, got {}",
                self.dim
            )));
        }
        Ok(())
    }
}

/// Emitted table: `# key=value` comments, named columns, numeric rows.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table {
    pub comments: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    fn new(columns: &[&str]) -> Self {
        Self {
            comments: Vec::new(),
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn comment(&mut self, key: &str, value: impl ToString) {
        self.comments.push((key.to_string(), value.to_string()));
    }

    fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Full-precision scientific notation (17 significant digits) so parsing
/// the CSV back reproduces the bits.
pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write>(table: &Table, out: &mut W) -> Result<(), CliError> {
    for (k, v) in &table.comments {
        writeln!(out, "# {k}={v}")?;
    }
    writeln!(out, "{}", table.columns.join(","))?;
    for row in &table.rows {
        let line: Vec<String> = row.iter().map(|v| format_number(*v)).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    Ok(())
}

pub fn write_json<W: Write>(table: &Table, out: &mut W) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, table).map_err(|e| CliError::Parse(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

/// Parse a table previously written by [`write_csv`].
pub fn read_csv<R: BufRead>(input: R) -> Result<Table, CliError> {
    let mut comments = Vec::new();
    let mut columns: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    for line in input.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            let rest = rest.trim();
            match rest.split_once('=') {
                Some((k, v)) => comments.push((k.trim().to_string(), v.trim().to_string())),
                None => comments.push((rest.to_string(), String::new())),
            }
            continue;
        }
        match &columns {
            None => columns = Some(trimmed.split(',').map(|s| s.trim().to_string()).collect()),
            Some(cols) => {
                let row: Result<Vec<f64>, _> = trimmed
                    .split(',')
                    .map(|s| s.trim().parse::<f64>())
                    .collect();
                let row = row.map_err(|e| CliError::Parse(format!("bad row '{trimmed}': {e}")))?;
                if row.len() != cols.len() {
                    return Err(CliError::Parse(format!(
                        "row has {} fields, header has {}",
                        row.len(),
                        cols.len()
                    )));
                }
                rows.push(row);
            }
        }
    }
    Ok(Table {
        comments,
        columns: columns.ok_or_else(|| CliError::Parse("missing header row".into()))?,
        rows,
    })
}

/// Survival probability of the ground state of a parametric oscillator at
/// zero detuning: `1/cosh(u t)`.
pub fn parametric_survival(u_t: f64) -> f64 {
    debug_assert!(u_t >= 0.0);
    1.0 / u_t.cosh()
}

/// The same survival evaluated from its pre-contour quadrature form
/// `int dphi'/pi [1 + e^{2ut} cos^2(phi' + pi/4)
///              + e^{-2ut} sin^2(phi' + pi/4)]^{-1}`,
/// kept as an independent verification path.
pub fn parametric_survival_quadrature(u_t: f64) -> Result<f64, QuadError> {
    let grow = (2.0 * u_t).exp();
    let shrink = (-2.0 * u_t).exp();
    let r = adaptive_1d(
        &mut |phi: f64| {
            let (s, c) = (phi + PI / 4.0).sin_cos();
            1.0 / (PI * (1.0 + grow * c * c + shrink * s * s))
        },
        -PI,
        PI,
        1e-13,
        60,
    )?;
    Ok(r.value)
}

fn grid(n: usize, max: f64) -> impl Iterator<Item = f64> {
    let step = max / (n - 1) as f64;
    (0..n).map(move |k| k as f64 * step)
}

fn base_table(cfg: &RunConfig, columns: &[&str]) -> Table {
    let mut t = Table::new(columns);
    t.comment("command", cfg.command.name());
    t.comment("version", env!("CARGO_PKG_VERSION"));
    t.comment("n_param", cfg.n_param);
    t.comment("omega_t", cfg.omega_t);
    t.comment("omega_t_max", cfg.omega_t_max);
    t.comment("grid_points", cfg.grid_points);
    t.comment("dim", cfg.dim);
    t.comment("u", cfg.u);
    t.comment("ebar", cfg.ebar);
    t.comment("detuning", cfg.detuning);
    t.comment("eps0", cfg.eps0);
    t.comment("eps_rate", cfg.eps_rate);
    if let Some(tm) = cfg.t_max {
        t.comment("t_max", tm);
    }
    t.comment("initial", cfg.initial);
    t.comment("final_max", cfg.final_max);
    t.comment("seed", cfg.seed);
    t.comment("trajectories", cfg.trajectories);
    t
}

/// Execute one command and return its table.
pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    cfg.validate()?;
    let spec = OscillatorSpec::natural();
    let noise = NoiseSpec::from_n(cfg.n_param, &spec);
    match cfg.command {
        Command::Survival => {
            let mut t = base_table(cfg, &["omega_t_rad", "survival"]);
            for wt in grid(cfg.grid_points, cfg.omega_t_max) {
                t.push(vec![wt, survival_ground(&noise, wt)]);
            }
            Ok(t)
        }
        Command::PhaseDist => {
            let mut t = base_table(cfg, &["phi_rad", "density_per_2pi"]);
            let n = cfg.grid_points;
            for k in 0..n {
                let phi = -PI + 2.0 * PI * k as f64 / n as f64;
                t.push(vec![phi, phase_density(&noise, cfg.omega_t, phi)]);
            }
            Ok(t)
        }
        Command::PhaseExpect => {
            let mut t = base_table(cfg, &["omega_t_rad", "mean_phi_rad"]);
            for wt in grid(cfg.grid_points, cfg.omega_t_max) {
                let mean = expect_angle_function(&noise, wt, |phi| phi)?;
                t.push(vec![wt, mean]);
            }
            Ok(t)
        }
        Command::Spectrum => {
            let rep = phi_spectrum(cfg.dim)?;
            let mut t = base_table(cfg, &["index", "eigenvalue_rad"]);
            t.comment("spread_rad", format_number(rep.spread));
            for (i, w) in rep.eigenvalues.iter().enumerate() {
                t.push(vec![i as f64, *w]);
            }
            Ok(t)
        }
        Command::Parametric => {
            let t_max = cfg.t_max.unwrap_or(5.0 / cfg.u.max(1e-12));
            let mut t = base_table(
                cfg,
                &["t_s", "u_t", "survival_closed", "survival_quadrature"],
            );
            for time in grid(cfg.grid_points, t_max) {
                let ut = cfg.u * time;
                t.push(vec![
                    time,
                    ut,
                    parametric_survival(ut),
                    parametric_survival_quadrature(ut)?,
                ]);
            }
            Ok(t)
        }
        Command::Adiabatic => {
            let freq = FrequencyMod {
                omega0: spec.omega,
                profile: EpsilonProfile::SlowSine {
                    amplitude: cfg.eps0,
                    rate: cfg.eps_rate,
                },
            };
            let t_max = cfg.t_max.unwrap_or(2.0 * PI / cfg.eps_rate.max(1e-12));
            let start = PolarPoint::new(1.0, 0.0);
            let dt = spec.period() / 1000.0;
            let traj = integrate_ode(start.to_phase(), &spec, &DriveSpec::None, &freq, t_max, dt)?;
            let mut t = base_table(
                cfg,
                &[
                    "t_s",
                    "phase_ode_rad",
                    "phase_avg_rad",
                    "phase_gap_rad",
                    "radius_ode",
                ],
            );
            let stride = (traj.points.len() / cfg.grid_points).max(1);
            for k in (0..traj.points.len()).step_by(stride) {
                let time = traj.times[k];
                let ode = traj.points[k].to_polar();
                let avg = averaged_adiabatic(start, &freq, time);
                let gap = crate::weyl::wrap_angle(ode.phi - avg.phi);
                t.push(vec![time, ode.phi, avg.phi, gap, ode.r]);
            }
            Ok(t)
        }
        Command::Kernel => {
            let mut t = base_table(cfg, &["omega_t_rad", "cov_xx", "cov_xy", "cov_yy", "det_a"]);
            for wt in grid(cfg.grid_points, cfg.omega_t_max) {
                let km = kernel_moments(&noise, wt);
                let s = SMatrices::new(cfg.n_param, wt);
                t.push(vec![
                    wt,
                    km.covariance.xx,
                    km.covariance.xy,
                    km.covariance.yy,
                    s.det_a,
                ]);
            }
            Ok(t)
        }
        Command::Transition => {
            let mut t = base_table(cfg, &["final_state", "probability"]);
            let mut total = 0.0;
            for f in 0..=cfg.final_max {
                let p = transition_probability(cfg.initial, f, &noise, cfg.omega_t)
                    .map_err(CliError::Quad)?;
                total += p;
                t.push(vec![f as f64, p]);
            }
            t.comment("probability_sum", format_number(total));
            Ok(t)
        }
        Command::McCheck => {
            let mc_cfg = EnsembleConfig {
                trajectories: cfg.trajectories,
                seed: cfg.seed,
                ..Default::default()
            };
            let mut t = base_table(
                cfg,
                &[
                    "omega_t_rad",
                    "survival_closed",
                    "survival_mc",
                    "mc_std_error",
                    "z_score",
                ],
            );
            for wt in grid(cfg.grid_points, cfg.omega_t_max) {
                let closed = survival_ground(&noise, wt);
                let est = estimate_survival(&noise, wt, &mc_cfg)?;
                t.push(vec![
                    wt,
                    closed,
                    est.value,
                    est.std_error,
                    est.sigma_from(closed),
                ]);
            }
            Ok(t)
        }
    }
}

/// Survival of the parametric ground state computed by driving the full
/// ODE flow through the phase-space overlap quadrature; used by the
/// acceptance checks and exposed for the parametric command's diagnostics.
pub fn parametric_survival_from_ode(ebar: f64, detuning: f64, t: f64) -> Result<f64, CliError> {
    let spec = OscillatorSpec::natural();
    let freq = FrequencyMod::parametric(spec.omega, ebar, detuning);
    let flow = flow_matrix(&spec, &freq, t, spec.period() / 1000.0)?;
    Ok(ground_survival_under_flow(&flow, 1e-9)?)
}

/// Phase-moment cross-check shared by the figure-reproduction test and the
/// mc-check command: quadrature mean phase and the Monte-Carlo estimate.
pub fn phase_mean_quadrature_and_mc(
    n_param: f64,
    omega_t: f64,
    trajectories: usize,
    seed: u64,
) -> Result<(f64, crate::mc::Estimate), CliError> {
    let spec = OscillatorSpec::natural();
    let noise = NoiseSpec::from_n(n_param, &spec);
    let quad_mean = expect_angle_function(&noise, omega_t, |phi| phi)?;
    let cfg = EnsembleConfig {
        trajectories,
        seed,
        ..Default::default()
    };
    let moments = estimate_phase_moments(&noise, omega_t, &cfg)?;
    Ok((quad_mean, moments.mean_phi))
}
