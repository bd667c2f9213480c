//! Classical phase-plane motion carrying the oscillator's evolution: exact
//! rotation, the closed-form resonantly driven solution, an RK4 integrator
//! for time-dependent frequencies, averaged (adiabatic and parametric)
//! systems, and the rotate-then-kick Langevin stepper.

use thiserror::Error;

use crate::noise::NoiseSpec;
use crate::weyl::{wrap_angle, OscillatorSpec, PhasePoint, PolarPoint};

#[derive(Debug, Error)]
pub enum DynamicsError {
    #[error("white-noise drive is stochastic; use the Langevin stepper instead")]
    StochasticDrive,
    #[error("drive kind not supported by this operation")]
    UnsupportedDrive,
    #[error("non-finite input: {what}")]
    NonFinite { what: &'static str },
    #[error("step size must be positive, got {dt}")]
    BadStep { dt: f64 },
}

/// External force profile `lambda(t)`.
#[derive(Debug, Clone)]
pub enum DriveSpec {
    None,
    /// `lambda(t) = lambda0 sin(omega t + theta)` at the oscillator frequency.
    Sinusoid {
        lambda0: f64,
        theta: f64,
    },
    /// White noise of strength `mu` (delta-correlated covariance).
    WhiteNoise {
        mu: f64,
    },
    /// Sampled `(t, lambda)` pairs, linearly interpolated, clamped outside.
    Table(Vec<(f64, f64)>),
}

impl DriveSpec {
    fn lambda_at(&self, omega: f64, t: f64) -> f64 {
        match self {
            DriveSpec::None => 0.0,
            DriveSpec::Sinusoid { lambda0, theta } => lambda0 * (omega * t + theta).sin(),
            DriveSpec::WhiteNoise { .. } => f64::NAN,
            DriveSpec::Table(points) => interp_table(points, t),
        }
    }
}

fn interp_table(points: &[(f64, f64)], t: f64) -> f64 {
    match points {
        [] => 0.0,
        [only] => only.1,
        _ => {
            if t <= points[0].0 {
                return points[0].1;
            }
            if t >= points[points.len() - 1].0 {
                return points[points.len() - 1].1;
            }
            let i = points.partition_point(|p| p.0 <= t) - 1;
            let (t0, v0) = points[i];
            let (t1, v1) = points[i + 1];
            v0 + (v1 - v0) * (t - t0) / (t1 - t0)
        }
    }
}

/// Relative frequency perturbation profile in
/// `omega^2(t) = omega0^2 (1 + epsilon(t))`.
#[derive(Debug, Clone)]
pub enum EpsilonProfile {
    Constant(f64),
    /// `epsilon(t) = amplitude sin(rate t)` with `rate << omega0`
    /// (the adiabatic regime).
    SlowSine {
        amplitude: f64,
        rate: f64,
    },
    /// `epsilon(t) = ebar cos(2 (omega0 + detuning) t)` (the parametric
    /// regime near twice the fundamental).
    ParametricCos {
        ebar: f64,
        detuning: f64,
    },
    /// Sampled `(t, epsilon)` pairs, linearly interpolated.
    Table(Vec<(f64, f64)>),
}

/// Time-dependent frequency description.
///
/// Amplitudes are meant to be small; `|ebar|` up to 0.2 is the working
/// range, see [`FrequencyMod::is_weak`].
#[derive(Debug, Clone)]
pub struct FrequencyMod {
    pub omega0: f64,
    pub profile: EpsilonProfile,
}

impl FrequencyMod {
    pub fn constant(omega0: f64) -> Self {
        Self {
            omega0,
            profile: EpsilonProfile::Constant(0.0),
        }
    }

    pub fn parametric(omega0: f64, ebar: f64, detuning: f64) -> Self {
        Self {
            omega0,
            profile: EpsilonProfile::ParametricCos { ebar, detuning },
        }
    }

    pub fn epsilon_at(&self, t: f64) -> f64 {
        match &self.profile {
            EpsilonProfile::Constant(e) => *e,
            EpsilonProfile::SlowSine { amplitude, rate } => amplitude * (rate * t).sin(),
            EpsilonProfile::ParametricCos { ebar, detuning } => {
                ebar * (2.0 * (self.omega0 + detuning) * t).cos()
            }
            EpsilonProfile::Table(points) => interp_table(points, t),
        }
    }

    /// Parametric growth rate `u = ebar omega0 / 4`; zero for the other
    /// profiles.
    pub fn growth_rate(&self) -> f64 {
        match &self.profile {
            EpsilonProfile::ParametricCos { ebar, .. } => ebar * self.omega0 / 4.0,
            _ => 0.0,
        }
    }

    /// Whether the modulation amplitude is inside the weak-modulation range
    /// the averaged solutions assume.
    pub fn is_weak(&self) -> bool {
        let amp = match &self.profile {
            EpsilonProfile::Constant(e) => e.abs(),
            EpsilonProfile::SlowSine { amplitude, .. } => amplitude.abs(),
            EpsilonProfile::ParametricCos { ebar, .. } => ebar.abs(),
            EpsilonProfile::Table(points) => {
                points.iter().map(|p| p.1.abs()).fold(0.0f64, f64::max)
            }
        };
        amp <= 0.2
    }

    /// Accumulated adiabatic phase `e(t) = (omega0/2) int_0^t epsilon(s) ds`,
    /// closed form where the profile allows it.
    pub fn adiabatic_phase(&self, t: f64) -> f64 {
        let half_omega = 0.5 * self.omega0;
        match &self.profile {
            EpsilonProfile::Constant(e) => half_omega * e * t,
            EpsilonProfile::SlowSine { amplitude, rate } => {
                if rate.abs() < f64::MIN_POSITIVE {
                    0.0
                } else {
                    half_omega * amplitude * (1.0 - (rate * t).cos()) / rate
                }
            }
            EpsilonProfile::ParametricCos { ebar, detuning } => {
                let two_omega = 2.0 * (self.omega0 + detuning);
                half_omega * ebar * (two_omega * t).sin() / two_omega
            }
            EpsilonProfile::Table(points) => half_omega * integrate_table(points, t),
        }
    }
}

/// Exact integral of the piecewise-linear interpolant from 0 to `t`.
fn integrate_table(points: &[(f64, f64)], t: f64) -> f64 {
    let mut acc = 0.0;
    let mut prev = 0.0f64;
    let value = |s: f64| interp_table(points, s);
    // walk the knots between 0 and t; trapezoid is exact on each piece
    let mut knots: Vec<f64> = points
        .iter()
        .map(|p| p.0)
        .filter(|&s| s > 0.0 && s < t)
        .collect();
    knots.push(t);
    for s in knots {
        acc += 0.5 * (value(prev) + value(s)) * (s - prev);
        prev = s;
    }
    acc
}

/// Integrated trajectory on the dimensionless phase plane.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub points: Vec<PhasePoint>,
    pub integrator: &'static str,
    pub dt: f64,
}

impl Trajectory {
    pub fn last(&self) -> PhasePoint {
        *self.points.last().expect("trajectory is never empty")
    }
}

/// Free rotation in the phase plane over the angle `omega_t`: the radius is
/// conserved and the polar angle advances, wrapped to [-pi, pi).
pub fn free_rotation(initial: PolarPoint, omega_t: f64) -> PolarPoint {
    PolarPoint {
        r: initial.r,
        phi: wrap_angle(initial.phi + omega_t),
    }
}

/// Rotate a Cartesian phase point by `theta`.
#[inline]
pub fn rotate_phase(v: PhasePoint, theta: f64) -> PhasePoint {
    let (s, c) = theta.sin_cos();
    PhasePoint {
        x: c * v.x - s * v.y,
        y: s * v.x + c * v.y,
    }
}

/// Closed-form solution under the resonant sinusoidal drive
/// `lambda(t) = lambda0 sin(omega t + theta)`:
///
/// `x + i y = R0 e^{i(omega t + theta0)}
///   + (i lambda0 / (2 alpha hbar omega)) (omega t e^{i(omega t + theta)}
///   - sin(omega t) e^{-i theta})`.
pub fn driven_closed_form(
    initial: PhasePoint,
    spec: &OscillatorSpec,
    drive: &DriveSpec,
    t: f64,
) -> Result<PhasePoint, DynamicsError> {
    let DriveSpec::Sinusoid { lambda0, theta } = drive else {
        return Err(DynamicsError::UnsupportedDrive);
    };
    let omega_t = spec.omega * t;
    let rotated = rotate_phase(initial, omega_t);
    let scale = lambda0 / (2.0 * spec.alpha() * spec.hbar * spec.omega);
    // i * (omega t e^{i(omega t + theta)} - sin(omega t) e^{-i theta})
    let (s1, c1) = (omega_t + theta).sin_cos();
    let (st, _) = omega_t.sin_cos();
    let (s2, c2) = (-theta).sin_cos();
    let re = omega_t * c1 - st * c2;
    let im = omega_t * s1 - st * s2;
    Ok(PhasePoint {
        x: rotated.x - scale * im,
        y: rotated.y + scale * re,
    })
}

fn rhs(
    spec: &OscillatorSpec,
    drive: &DriveSpec,
    freq: &FrequencyMod,
    t: f64,
    v: PhasePoint,
) -> PhasePoint {
    // x' = -(omega^2(t)/omega0) y - lambda(t)/(hbar alpha), y' = omega0 x
    let omega0 = freq.omega0;
    let omega_sq_over = omega0 * (1.0 + freq.epsilon_at(t));
    let force = drive.lambda_at(spec.omega, t) / (spec.hbar * spec.alpha());
    PhasePoint {
        x: -omega_sq_over * v.y - force,
        y: omega0 * v.x,
    }
}

/// Classic fixed-step RK4 for the linear system with time-dependent
/// coefficients. Deterministic drives only; white noise is rejected.
pub fn integrate_ode(
    initial: PhasePoint,
    spec: &OscillatorSpec,
    drive: &DriveSpec,
    freq: &FrequencyMod,
    t_final: f64,
    dt: f64,
) -> Result<Trajectory, DynamicsError> {
    if matches!(drive, DriveSpec::WhiteNoise { .. }) {
        return Err(DynamicsError::StochasticDrive);
    }
    if dt.is_nan() || dt <= 0.0 {
        return Err(DynamicsError::BadStep { dt });
    }
    if !(initial.x.is_finite() && initial.y.is_finite()) {
        return Err(DynamicsError::NonFinite {
            what: "initial point",
        });
    }
    if !t_final.is_finite() {
        return Err(DynamicsError::NonFinite { what: "final time" });
    }
    let steps = ((t_final / dt).ceil() as usize).max(1);
    let h = t_final / steps as f64;
    let mut times = Vec::with_capacity(steps + 1);
    let mut points = Vec::with_capacity(steps + 1);
    let mut v = initial;
    let mut t = 0.0;
    times.push(t);
    points.push(v);
    for k in 0..steps {
        let k1 = rhs(spec, drive, freq, t, v);
        let mid1 = PhasePoint::new(v.x + 0.5 * h * k1.x, v.y + 0.5 * h * k1.y);
        let k2 = rhs(spec, drive, freq, t + 0.5 * h, mid1);
        let mid2 = PhasePoint::new(v.x + 0.5 * h * k2.x, v.y + 0.5 * h * k2.y);
        let k3 = rhs(spec, drive, freq, t + 0.5 * h, mid2);
        let end = PhasePoint::new(v.x + h * k3.x, v.y + h * k3.y);
        let k4 = rhs(spec, drive, freq, t + h, end);
        v = PhasePoint::new(
            v.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
            v.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
        );
        t = (k + 1) as f64 * h;
        if !(v.x.is_finite() && v.y.is_finite()) {
            return Err(DynamicsError::NonFinite {
                what: "state blew up",
            });
        }
        times.push(t);
        points.push(v);
    }
    Ok(Trajectory {
        times,
        points,
        integrator: "rk4",
        dt: h,
    })
}

/// Fundamental matrix of the frequency-modulated oscillator at `t_final`:
/// columns are the RK4-propagated images of the unit initial conditions.
pub fn flow_matrix(
    spec: &OscillatorSpec,
    freq: &FrequencyMod,
    t_final: f64,
    dt: f64,
) -> Result<[[f64; 2]; 2], DynamicsError> {
    let e1 = integrate_ode(
        PhasePoint::new(1.0, 0.0),
        spec,
        &DriveSpec::None,
        freq,
        t_final,
        dt,
    )?;
    let e2 = integrate_ode(
        PhasePoint::new(0.0, 1.0),
        spec,
        &DriveSpec::None,
        freq,
        t_final,
        dt,
    )?;
    let a = e1.last();
    let b = e2.last();
    Ok([[a.x, b.x], [a.y, b.y]])
}

/// Dimensionless rotate-then-kick update shared by the Langevin stepper and
/// the Monte-Carlo engine: exact rotation by `dtheta`, then a momentum kick
/// of standard deviation `kick_scale` times the supplied normal draw.
#[inline]
pub fn rotate_kick(v: PhasePoint, dtheta: f64, kick_scale: f64, gauss: f64) -> PhasePoint {
    let mut out = rotate_phase(v, dtheta);
    out.x += kick_scale * gauss;
    out
}

/// White-noise momentum kick over `dt` in dimensionless coordinates:
/// `Delta x = sqrt(mu dt) / (hbar alpha) * gauss = sqrt(N omega dt) * gauss`.
pub fn noise_kick(
    state: PhasePoint,
    spec: &OscillatorSpec,
    noise: &NoiseSpec,
    dt: f64,
    gauss: f64,
) -> PhasePoint {
    let scale = (noise.n_param * spec.omega * dt).sqrt();
    PhasePoint {
        x: state.x + scale * gauss,
        y: state.y,
    }
}

/// One Langevin step: exact free rotation over `dt` followed by the noise
/// kick. For this linear system the only splitting error is the placement
/// of the noise inside the step, which vanishes in distribution as dt -> 0;
/// `omega dt <= 0.1` keeps that bias negligible.
pub fn langevin_step(
    state: PhasePoint,
    spec: &OscillatorSpec,
    noise: &NoiseSpec,
    dt: f64,
    gauss: f64,
) -> PhasePoint {
    debug_assert!(dt > 0.0 && spec.omega * dt <= 0.1 + 1e-12);
    let scale = (noise.n_param * spec.omega * dt).sqrt();
    rotate_kick(state, spec.omega * dt, scale, gauss)
}

/// Averaged slow motion for an adiabatically modulated frequency: the radius
/// is an adiabatic invariant and the phase advances by
/// `omega0 t + e(t)` with `e(t) = (omega0/2) int_0^t epsilon`.
pub fn averaged_adiabatic(initial: PolarPoint, freq: &FrequencyMod, t: f64) -> PolarPoint {
    PolarPoint {
        r: initial.r,
        phi: wrap_angle(initial.phi + freq.omega0 * t + freq.adiabatic_phase(t)),
    }
}

/// Averaged parametric motion at zero detuning, in closed form:
///
/// `r(t) = R0 sqrt(e^{2ut} cos^2(phi0 + pi/4) + e^{-2ut} sin^2(phi0 + pi/4))`
///
/// and the slow angle recovered continuously through the two-argument
/// arctangent of `(e^{-2ut} sin(phi0 + pi/4), cos(phi0 + pi/4))` minus pi/4,
/// which stays regular where the textbook tangent form is singular. The
/// returned angle includes the fast rotation `omega0 t`.
pub fn averaged_parametric(initial: PolarPoint, u_t: f64, omega0_t: f64) -> PolarPoint {
    let quarter = std::f64::consts::FRAC_PI_4;
    let shifted = initial.phi + quarter;
    let (s, c) = shifted.sin_cos();
    let grow = (2.0 * u_t).exp();
    let shrink = (-2.0 * u_t).exp();
    let r = initial.r * (grow * c * c + shrink * s * s).sqrt();
    let theta = (shrink * s).atan2(c) - quarter;
    PolarPoint {
        r,
        phi: wrap_angle(theta + omega0_t),
    }
}
