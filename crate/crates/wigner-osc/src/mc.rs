//! Monte-Carlo verification engine: samples initial points from the ground
//! Wigner density, evolves them with the Langevin splitting, and estimates
//! survival probabilities, phase moments, and kernel moments with reported
//! standard errors.
//!
//! Draws come from the counter-based [`TrajectoryRng`], so every estimate
//! is a pure function of `(seed, trajectories, dt)`. Work is split into
//! fixed-size chunks whose results are combined by a fixed pairwise tree,
//! which makes results bit-identical for any worker count.

use std::ops::Range;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use thiserror::Error;

use crate::dynamics::{rotate_kick, rotate_phase};
use crate::noise::NoiseSpec;
use crate::rng::TrajectoryRng;
use crate::weyl::{OscillatorSpec, PhasePoint};

#[derive(Debug, Error)]
pub enum McError {
    #[error("invalid ensemble config: {0}")]
    InvalidConfig(String),
}

/// Ensemble size, step size (as a fraction of the oscillator period), seed,
/// and worker count. Results never depend on `partitions`.
#[derive(Debug, Clone, Copy)]
pub struct EnsembleConfig {
    pub trajectories: usize,
    pub dt_frac: f64,
    pub seed: u64,
    pub partitions: usize,
}

impl Default for EnsembleConfig {
    fn default() -> Self {
        Self {
            trajectories: 100_000,
            dt_frac: 1.0 / 200.0,
            seed: 42,
            partitions: 1,
        }
    }
}

impl EnsembleConfig {
    pub fn validate(&self) -> Result<(), McError> {
        if self.trajectories < 1 {
            return Err(McError::InvalidConfig("trajectories must be >= 1".into()));
        }
        if !(self.dt_frac > 0.0 && self.dt_frac <= 1.0 / 20.0) {
            return Err(McError::InvalidConfig(format!(
                "dt fraction {} outside (0, 1/20]",
                self.dt_frac
            )));
        }
        if self.partitions < 1 {
            return Err(McError::InvalidConfig("partitions must be >= 1".into()));
        }
        Ok(())
    }
}

/// Monte-Carlo estimate with its standard error
/// (sample standard deviation over sqrt(trajectories)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub std_error: f64,
    pub trajectories: usize,
}

impl Estimate {
    fn from_sums(n: u64, s1: f64, s2: f64) -> Self {
        let nf = n as f64;
        let value = s1 / nf;
        let std_error = if n >= 2 {
            (((s2 - nf * value * value) / (nf - 1.0)).max(0.0) / nf).sqrt()
        } else {
            0.0
        };
        Estimate {
            value,
            std_error,
            trajectories: n as usize,
        }
    }

    /// Absolute deviation from `reference` in units of the standard error.
    pub fn sigma_from(&self, reference: f64) -> f64 {
        if self.std_error == 0.0 {
            if self.value == reference {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.value - reference).abs() / self.std_error
        }
    }
}

/// Map a ground-state Wigner density sample from two standard normal draws:
/// both coordinates are independent Gaussians of variance 1/2.
pub fn sample_ground_wigner(g1: f64, g2: f64) -> PhasePoint {
    PhasePoint {
        x: std::f64::consts::FRAC_1_SQRT_2 * g1,
        y: std::f64::consts::FRAC_1_SQRT_2 * g2,
    }
}

/// Trajectories per work chunk; fixed so that chunk boundaries (and hence
/// the reduction tree) do not depend on the worker count.
const CHUNK: u64 = 4096;

fn tree_fold<A>(mut items: Vec<A>, combine: &dyn Fn(A, A) -> A) -> Option<A> {
    while items.len() > 1 {
        let mut next = Vec::with_capacity(items.len().div_ceil(2));
        let mut it = items.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(combine(a, b)),
                None => next.push(a),
            }
        }
        items = next;
    }
    items.pop()
}

/// Run `chunk_fn` over fixed chunks of the trajectory range on
/// `partitions` workers and combine the per-chunk results in chunk order.
fn run_partitioned<A, F>(
    total: u64,
    partitions: usize,
    chunk_fn: F,
    combine: &dyn Fn(A, A) -> A,
) -> A
where
    A: Send,
    F: Fn(Range<u64>) -> A + Sync,
{
    let n_chunks = total.div_ceil(CHUNK) as usize;
    let slots: Vec<Mutex<Option<A>>> = (0..n_chunks).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = partitions.min(n_chunks).max(1);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::SeqCst);
                if k >= n_chunks {
                    break;
                }
                let lo = k as u64 * CHUNK;
                let hi = (lo + CHUNK).min(total);
                let a = chunk_fn(lo..hi);
                *slots[k].lock().unwrap() = Some(a);
            });
        }
    });
    let items: Vec<A> = slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("chunk computed"))
        .collect();
    tree_fold(items, combine).expect("at least one chunk")
}

/// Number of steps and exact step angle covering `omega_t`.
fn step_plan(omega_t: f64, dt_frac: f64) -> (u64, f64) {
    if omega_t <= 0.0 {
        return (0, 0.0);
    }
    let nominal = 2.0 * std::f64::consts::PI * dt_frac;
    let steps = (omega_t / nominal).ceil().max(1.0) as u64;
    (steps, omega_t / steps as f64)
}

/// Evolve one trajectory from a ground-Wigner sample through `steps`
/// rotate-then-kick updates.
fn evolve_ground(seed: u64, traj: u64, steps: u64, dtheta: f64, kick: f64) -> PhasePoint {
    let rng = TrajectoryRng::new(seed, traj);
    let (g1, g2) = rng.normal_pair(0);
    let mut v = sample_ground_wigner(g1, g2);
    let mut ctr = 1u64;
    let mut pending = None;
    for _ in 0..steps {
        let g = match pending.take() {
            Some(g) => g,
            None => {
                let (a, b) = rng.normal_pair(ctr);
                ctr += 1;
                pending = Some(b);
                a
            }
        };
        v = rotate_kick(v, dtheta, kick, g);
    }
    v
}

#[derive(Clone, Copy, Default)]
struct ScalarSums {
    n: u64,
    s1: f64,
    s2: f64,
}

fn add_scalar(a: ScalarSums, b: ScalarSums) -> ScalarSums {
    ScalarSums {
        n: a.n + b.n,
        s1: a.s1 + b.s1,
        s2: a.s2 + b.s2,
    }
}

/// Unbiased Monte-Carlo estimate of the ground-state survival probability:
/// the average of `2 exp(-R(t)^2)` over trajectories started from the
/// ground Wigner density.
pub fn estimate_survival(
    noise: &NoiseSpec,
    omega_t: f64,
    cfg: &EnsembleConfig,
) -> Result<Estimate, McError> {
    cfg.validate()?;
    let (steps, dtheta) = step_plan(omega_t, cfg.dt_frac);
    let kick = (noise.n_param * dtheta).sqrt();
    let sums = run_partitioned(
        cfg.trajectories as u64,
        cfg.partitions,
        |range| {
            let mut acc = ScalarSums::default();
            for traj in range {
                let v = evolve_ground(cfg.seed, traj, steps, dtheta, kick);
                let w = 2.0 * (-v.radius_sq()).exp();
                acc.n += 1;
                acc.s1 += w;
                acc.s2 += w * w;
            }
            acc
        },
        &add_scalar,
    );
    Ok(Estimate::from_sums(sums.n, sums.s1, sums.s2))
}

/// Estimates of the first two angle moments of the phase distribution for
/// the ground initial state. `var_phi` is the second moment about zero,
/// alias the phase variance once the mean has decayed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseMoments {
    pub mean_phi: Estimate,
    pub var_phi: Estimate,
}

#[derive(Clone, Copy, Default)]
struct PhaseSums {
    n: u64,
    s1: f64,
    s2: f64,
    s4: f64,
}

/// The endpoint angle of a ground-started trajectory is distributed exactly
/// as `P(phi, wt)/(2 pi)`: the isotropic ground width composed with the
/// kernel covariance reproduces the density behind the closed form (checked
/// against quadrature in the acceptance suite).
pub fn estimate_phase_moments(
    noise: &NoiseSpec,
    omega_t: f64,
    cfg: &EnsembleConfig,
) -> Result<PhaseMoments, McError> {
    cfg.validate()?;
    let (steps, dtheta) = step_plan(omega_t, cfg.dt_frac);
    let kick = (noise.n_param * dtheta).sqrt();
    let sums = run_partitioned(
        cfg.trajectories as u64,
        cfg.partitions,
        |range| {
            let mut acc = PhaseSums::default();
            for traj in range {
                let v = evolve_ground(cfg.seed, traj, steps, dtheta, kick);
                let phi = v.y.atan2(v.x);
                acc.n += 1;
                acc.s1 += phi;
                acc.s2 += phi * phi;
                acc.s4 += phi * phi * phi * phi;
            }
            acc
        },
        &|a: PhaseSums, b: PhaseSums| PhaseSums {
            n: a.n + b.n,
            s1: a.s1 + b.s1,
            s2: a.s2 + b.s2,
            s4: a.s4 + b.s4,
        },
    );
    Ok(PhaseMoments {
        mean_phi: Estimate::from_sums(sums.n, sums.s1, sums.s2),
        var_phi: Estimate::from_sums(sums.n, sums.s2, sums.s4),
    })
}

/// Sample mean and covariance of the propagator kernel from a fixed start.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelMomentsEstimate {
    pub mean_x: Estimate,
    pub mean_y: Estimate,
    pub cov_xx: Estimate,
    pub cov_xy: Estimate,
    pub cov_yy: Estimate,
}

#[derive(Clone, Copy, Default)]
struct KernelSums {
    n: u64,
    sx: f64,
    sy: f64,
    sxx: f64,
    syy: f64,
    sxy: f64,
    sx4: f64,
    sy4: f64,
    sx2y2: f64,
}

/// Evolve trajectories from `fixed_start` and report the sample mean (which
/// estimates the rotated start) and the sample covariance (which estimates
/// the kernel covariance), each with standard errors; the covariance errors
/// use fourth sample moments of the deviations.
pub fn estimate_kernel_moments(
    noise: &NoiseSpec,
    omega_t: f64,
    cfg: &EnsembleConfig,
    fixed_start: PhasePoint,
) -> Result<KernelMomentsEstimate, McError> {
    cfg.validate()?;
    let (steps, dtheta) = step_plan(omega_t, cfg.dt_frac);
    let kick = (noise.n_param * dtheta).sqrt();
    let center = rotate_phase(fixed_start, omega_t);
    let sums = run_partitioned(
        cfg.trajectories as u64,
        cfg.partitions,
        |range| {
            let mut acc = KernelSums::default();
            for traj in range {
                let rng = TrajectoryRng::new(cfg.seed, traj);
                let mut v = fixed_start;
                let mut ctr = 0u64;
                let mut pending = None;
                for _ in 0..steps {
                    let g = match pending.take() {
                        Some(g) => g,
                        None => {
                            let (a, b) = rng.normal_pair(ctr);
                            ctr += 1;
                            pending = Some(b);
                            a
                        }
                    };
                    v = rotate_kick(v, dtheta, kick, g);
                }
                let dx = v.x - center.x;
                let dy = v.y - center.y;
                acc.n += 1;
                acc.sx += dx;
                acc.sy += dy;
                acc.sxx += dx * dx;
                acc.syy += dy * dy;
                acc.sxy += dx * dy;
                acc.sx4 += dx * dx * dx * dx;
                acc.sy4 += dy * dy * dy * dy;
                acc.sx2y2 += dx * dx * dy * dy;
            }
            acc
        },
        &|a: KernelSums, b: KernelSums| KernelSums {
            n: a.n + b.n,
            sx: a.sx + b.sx,
            sy: a.sy + b.sy,
            sxx: a.sxx + b.sxx,
            syy: a.syy + b.syy,
            sxy: a.sxy + b.sxy,
            sx4: a.sx4 + b.sx4,
            sy4: a.sy4 + b.sy4,
            sx2y2: a.sx2y2 + b.sx2y2,
        },
    );
    let n = sums.n;
    let nf = n as f64;
    let mx = sums.sx / nf;
    let my = sums.sy / nf;
    let m2x = sums.sxx / nf;
    let m2y = sums.syy / nf;
    let var_estimate = |s2: f64, mean: f64, s4: f64, m2: f64| {
        let value = ((s2 - nf * mean * mean) / (nf - 1.0)).max(0.0);
        // Var(sample variance) ~ (m4 - m2^2)/n for near-centered deviations
        let se = (((s4 / nf - m2 * m2) / nf).max(0.0)).sqrt();
        (value, se)
    };
    let (vxx, se_xx) = var_estimate(sums.sxx, mx, sums.sx4, m2x);
    let (vyy, se_yy) = var_estimate(sums.syy, my, sums.sy4, m2y);
    let cxy = (sums.sxy - nf * mx * my) / (nf - 1.0);
    let se_xy = (((sums.sx2y2 / nf - cxy * cxy) / nf).max(0.0)).sqrt();
    let wrap = |value, se| Estimate {
        value,
        std_error: se,
        trajectories: n as usize,
    };
    Ok(KernelMomentsEstimate {
        mean_x: wrap(center.x + mx, (m2x - mx * mx).max(0.0).sqrt() / nf.sqrt()),
        mean_y: wrap(center.y + my, (m2y - my * my).max(0.0).sqrt() / nf.sqrt()),
        cov_xx: wrap(vxx, se_xx),
        cov_xy: wrap(cxy, se_xy),
        cov_yy: wrap(vyy, se_yy),
    })
}

/// Free-particle moment estimates in physical units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeParticleEstimate {
    pub mean_p: Estimate,
    pub mean_q: Estimate,
    pub var_p: Estimate,
    pub cov_pq: Estimate,
    pub var_q: Estimate,
}

/// Kicked free particle (no rotation): Strang drift-kick-drift splitting so
/// the second moments carry no O(dt) bias. `dt_frac` is interpreted as a
/// fraction of the total time here since there is no period.
pub fn estimate_free_particle_moments(
    noise: &NoiseSpec,
    spec: &OscillatorSpec,
    t: f64,
    p0: f64,
    q0: f64,
    cfg: &EnsembleConfig,
) -> Result<FreeParticleEstimate, McError> {
    cfg.validate()?;
    let steps = (1.0 / cfg.dt_frac).round().max(1.0) as u64;
    let dt = t / steps as f64;
    let kick = (noise.mu * dt).sqrt();
    let mass = spec.mass;
    let mean_q_exact = q0 + p0 * t / mass;
    let sums = run_partitioned(
        cfg.trajectories as u64,
        cfg.partitions,
        |range| {
            let mut acc = KernelSums::default();
            for traj in range {
                let rng = TrajectoryRng::new(cfg.seed, traj);
                let mut p = p0;
                let mut q = q0;
                let mut ctr = 0u64;
                let mut pending = None;
                for _ in 0..steps {
                    let g = match pending.take() {
                        Some(g) => g,
                        None => {
                            let (a, b) = rng.normal_pair(ctr);
                            ctr += 1;
                            pending = Some(b);
                            a
                        }
                    };
                    q += 0.5 * dt * p / mass;
                    p += kick * g;
                    q += 0.5 * dt * p / mass;
                }
                let dp = p - p0;
                let dq = q - mean_q_exact;
                acc.n += 1;
                acc.sx += dp;
                acc.sy += dq;
                acc.sxx += dp * dp;
                acc.syy += dq * dq;
                acc.sxy += dp * dq;
                acc.sx4 += dp * dp * dp * dp;
                acc.sy4 += dq * dq * dq * dq;
                acc.sx2y2 += dp * dp * dq * dq;
            }
            acc
        },
        &|a: KernelSums, b: KernelSums| KernelSums {
            n: a.n + b.n,
            sx: a.sx + b.sx,
            sy: a.sy + b.sy,
            sxx: a.sxx + b.sxx,
            syy: a.syy + b.syy,
            sxy: a.sxy + b.sxy,
            sx4: a.sx4 + b.sx4,
            sy4: a.sy4 + b.sy4,
            sx2y2: a.sx2y2 + b.sx2y2,
        },
    );
    let n = sums.n;
    let nf = n as f64;
    let mp = sums.sx / nf;
    let mq = sums.sy / nf;
    let m2p = sums.sxx / nf;
    let m2q = sums.syy / nf;
    let vp = ((sums.sxx - nf * mp * mp) / (nf - 1.0)).max(0.0);
    let vq = ((sums.syy - nf * mq * mq) / (nf - 1.0)).max(0.0);
    let cpq = (sums.sxy - nf * mp * mq) / (nf - 1.0);
    let wrap = |value, se| Estimate {
        value,
        std_error: se,
        trajectories: n as usize,
    };
    Ok(FreeParticleEstimate {
        mean_p: wrap(p0 + mp, (m2p - mp * mp).max(0.0).sqrt() / nf.sqrt()),
        mean_q: wrap(
            mean_q_exact + mq,
            (m2q - mq * mq).max(0.0).sqrt() / nf.sqrt(),
        ),
        var_p: wrap(vp, (((sums.sx4 / nf - m2p * m2p) / nf).max(0.0)).sqrt()),
        cov_pq: wrap(cpq, (((sums.sx2y2 / nf - cpq * cpq) / nf).max(0.0)).sqrt()),
        var_q: wrap(vq, (((sums.sy4 / nf - m2q * m2q) / nf).max(0.0)).sqrt()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::{kernel_moments, survival_ground};
    use std::f64::consts::PI;

    fn natural_noise(n: f64) -> NoiseSpec {
        NoiseSpec::from_n(n, &OscillatorSpec::natural())
    }

    fn cfg(trajectories: usize) -> EnsembleConfig {
        EnsembleConfig {
            trajectories,
            ..Default::default()
        }
    }

    #[test]
    fn config_validation() {
        assert!(cfg(0).validate().is_err());
        let bad = EnsembleConfig {
            dt_frac: 0.2,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        assert!(EnsembleConfig::default().validate().is_ok());
    }

    #[test]
    fn ground_sample_moments() {
        let n = 1_000_000u64;
        let mut sx = 0.0;
        let mut sxx = 0.0;
        let mut sr2 = 0.0;
        for traj in 0..n {
            let rng = TrajectoryRng::new(5, traj);
            let (g1, g2) = rng.normal_pair(0);
            let v = sample_ground_wigner(g1, g2);
            sx += v.x;
            sxx += v.x * v.x;
            sr2 += v.radius_sq();
        }
        let nf = n as f64;
        // Var(x) = 1/2, E[R^2] = 1
        assert!((sx / nf).abs() < 3.0 * (0.5f64 / nf).sqrt());
        assert!((sxx / nf - 0.5).abs() < 3.0 * (0.5f64 / nf).sqrt());
        assert!((sr2 / nf - 1.0).abs() < 3.0 * (1.0f64 / nf).sqrt());
    }

    #[test]
    fn survival_without_noise_is_unit() {
        let est = estimate_survival(&natural_noise(0.0), 2.0, &cfg(20_000)).unwrap();
        assert!(est.sigma_from(1.0) < 3.0, "{est:?}");
    }

    #[test]
    fn survival_matches_closed_form() {
        let noise = natural_noise(1.0);
        let est = estimate_survival(&noise, PI, &cfg(50_000)).unwrap();
        let want = survival_ground(&noise, PI);
        assert!(est.sigma_from(want) < 3.0, "{est:?} vs {want}");
    }

    #[test]
    fn estimates_are_partition_independent() {
        let noise = natural_noise(1.0);
        let base = EnsembleConfig {
            trajectories: 10_000,
            ..Default::default()
        };
        let reference = estimate_survival(&noise, 1.3, &base).unwrap();
        for partitions in [2usize, 8] {
            let cfg = EnsembleConfig { partitions, ..base };
            let est = estimate_survival(&noise, 1.3, &cfg).unwrap();
            assert_eq!(est.value.to_bits(), reference.value.to_bits());
            assert_eq!(est.std_error.to_bits(), reference.std_error.to_bits());
        }
    }

    #[test]
    fn standard_error_scales_inverse_root() {
        let noise = natural_noise(1.0);
        let mut se = Vec::new();
        for n in [1_000usize, 10_000, 100_000] {
            se.push(estimate_survival(&noise, 1.0, &cfg(n)).unwrap().std_error);
        }
        let root10 = 10.0f64.sqrt();
        for pair in se.windows(2) {
            let ratio = pair[0] / pair[1];
            assert!(
                (ratio / root10 - 1.0).abs() < 0.2,
                "SE ratio {ratio} vs sqrt(10)"
            );
        }
    }

    #[test]
    fn halving_dt_stays_within_one_standard_error() {
        let noise = natural_noise(1.0);
        let base = EnsembleConfig {
            trajectories: 100_000,
            ..Default::default()
        };
        let fine = EnsembleConfig {
            dt_frac: base.dt_frac / 2.0,
            ..base
        };
        let a = estimate_survival(&noise, PI, &base).unwrap();
        let b = estimate_survival(&noise, PI, &fine).unwrap();
        assert!(
            (a.value - b.value).abs() < a.std_error,
            "{} vs {} (se {})",
            a.value,
            b.value,
            a.std_error
        );
    }

    #[test]
    fn phase_moments_at_zero_time_are_uniform() {
        let est = estimate_phase_moments(&natural_noise(1.0), 0.0, &cfg(100_000)).unwrap();
        assert!(est.mean_phi.sigma_from(0.0) < 3.0, "{:?}", est.mean_phi);
        assert!(
            est.var_phi.sigma_from(PI * PI / 3.0) < 3.0,
            "{:?}",
            est.var_phi
        );
    }

    #[test]
    fn kernel_moments_match_closed_form() {
        // ensemble second moments against the closed-form kernel covariance
        // across slow, moderate, and long times
        let noise = natural_noise(1.0);
        let start = PhasePoint::new(0.9, -0.4);
        let cfg = EnsembleConfig {
            trajectories: 20_000,
            dt_frac: 1.0 / 2000.0,
            ..Default::default()
        };
        for wt in [0.5, 2.0, 10.0] {
            let est = estimate_kernel_moments(&noise, wt, &cfg, start).unwrap();
            let km = kernel_moments(&noise, wt);
            let center = rotate_phase(start, wt);
            assert!(est.mean_x.sigma_from(center.x) < 3.0, "wt {wt}");
            assert!(est.mean_y.sigma_from(center.y) < 3.0, "wt {wt}");
            for (e, want) in [
                (est.cov_xx, km.covariance.xx),
                (est.cov_xy, km.covariance.xy),
                (est.cov_yy, km.covariance.yy),
            ] {
                assert!(e.sigma_from(want) < 3.0, "wt {wt}: {e:?} vs {want}");
            }
        }
    }

    #[test]
    fn kernel_moments_without_noise_are_exact() {
        let noise = natural_noise(0.0);
        let start = PhasePoint::new(1.1, 0.3);
        let cfg = EnsembleConfig {
            trajectories: 500,
            ..Default::default()
        };
        let est = estimate_kernel_moments(&noise, 2.3, &cfg, start).unwrap();
        let center = rotate_phase(start, 2.3);
        assert_eq!(est.cov_xx.value, 0.0);
        assert_eq!(est.cov_xy.value, 0.0);
        assert_eq!(est.cov_yy.value, 0.0);
        assert!((est.mean_x.value - center.x).abs() < 1e-12);
        assert!((est.mean_y.value - center.y).abs() < 1e-12);
    }

    #[test]
    fn free_particle_moments_match_closed_form() {
        let spec = OscillatorSpec::natural();
        let noise = NoiseSpec::from_mu(2.0, &spec);
        let est =
            estimate_free_particle_moments(&noise, &spec, 1.0, 0.0, 0.0, &cfg(50_000)).unwrap();
        assert!(est.var_p.sigma_from(2.0) < 3.0, "{:?}", est.var_p);
        assert!(est.cov_pq.sigma_from(1.0) < 3.0, "{:?}", est.cov_pq);
        assert!(est.var_q.sigma_from(2.0 / 3.0) < 3.0, "{:?}", est.var_q);
    }
}
