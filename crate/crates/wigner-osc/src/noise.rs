//! Ensemble-averaged results for white-noise forcing: the Gaussian kernel
//! moments of the averaged propagator, ground-state survival, the phase
//! density and its expectations, long-time limits, the free-particle
//! kernel, and a quadrature engine for energy-basis transition
//! probabilities.
//!
//! Everything is expressed in the dimensionless pair `(N, omega t)`;
//! physical units enter only through [`OscillatorSpec`] conversions.

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::sym2_eigen;
use crate::phase_op::{PhaseOpError, PhiSquaredRadialAverage, DEFAULT_TAIL_TERMS};
use crate::quad::{adaptive_1d, adaptive_2d, QuadError};
use crate::special::laguerre_scaled;
use crate::weyl::OscillatorSpec;

#[derive(Debug, Error)]
pub enum NoiseError {
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    PhaseOp(#[from] PhaseOpError),
}

/// White-noise strength in physical units and the dimensionless
/// `N = mu / (m omega^2 hbar)` that all closed forms depend on.
#[derive(Debug, Clone, Copy)]
pub struct NoiseSpec {
    pub mu: f64,
    pub n_param: f64,
}

impl NoiseSpec {
    pub fn from_mu(mu: f64, spec: &OscillatorSpec) -> Self {
        debug_assert!(mu >= 0.0);
        Self {
            mu,
            n_param: mu / (spec.mass * spec.omega * spec.omega * spec.hbar),
        }
    }

    pub fn from_n(n_param: f64, spec: &OscillatorSpec) -> Self {
        debug_assert!(n_param >= 0.0);
        Self {
            mu: n_param * spec.mass * spec.omega * spec.omega * spec.hbar,
            n_param,
        }
    }
}

/// Symmetric 2x2 covariance on the dimensionless phase plane.
#[derive(Debug, Clone, Copy)]
pub struct Cov2 {
    pub xx: f64,
    pub xy: f64,
    pub yy: f64,
}

impl Cov2 {
    pub fn to_matrix(self) -> [[f64; 2]; 2] {
        [[self.xx, self.xy], [self.xy, self.yy]]
    }

    pub fn max_abs(self) -> f64 {
        self.xx.abs().max(self.yy.abs()).max(self.xy.abs())
    }

    /// Eigenvalues (ascending) and the orthonormal eigenvector columns.
    pub fn eigen(self) -> ([f64; 2], [[f64; 2]; 2]) {
        sym2_eigen(self.xx, self.xy, self.yy)
    }
}

/// The trigonometric integrals entering the averaged propagator and the
/// Gaussian matrix built from them.
#[derive(Debug, Clone, Copy)]
pub struct SMatrices {
    pub s11: f64,
    pub s22: f64,
    pub s12: f64,
    pub a_matrix: [[f64; 2]; 2],
    pub det_a: f64,
}

impl SMatrices {
    /// Closed forms of `s11 = int_0^{wt} cos^2`, `s22 = int_0^{wt} sin^2`,
    /// `s12 = int_0^{wt} sin 2theta`; `A = I/2 + N [[s11, s12/2], [s12/2, s22]]`.
    pub fn new(n_param: f64, omega_t: f64) -> Self {
        let s11 = 0.5 * omega_t + 0.25 * (2.0 * omega_t).sin();
        let s22 = 0.5 * omega_t - 0.25 * (2.0 * omega_t).sin();
        let sin_wt = omega_t.sin();
        let s12 = sin_wt * sin_wt; // (1 - cos 2wt)/2
        let a = [
            [0.5 + n_param * s11, 0.5 * n_param * s12],
            [0.5 * n_param * s12, 0.5 + n_param * s22],
        ];
        let det_a = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        Self {
            s11,
            s22,
            s12,
            a_matrix: a,
            det_a,
        }
    }
}

/// Rotation plus Gaussian spread fully describing the ensemble-averaged
/// propagator at dimensionless time `omega t`.
#[derive(Debug, Clone, Copy)]
pub struct KernelMoments {
    pub rotation_angle: f64,
    pub covariance: Cov2,
}

/// Covariance `N [[s11, s12/2], [s12/2, s22]]` of the averaged propagator.
pub fn kernel_moments(noise: &NoiseSpec, omega_t: f64) -> KernelMoments {
    debug_assert!(omega_t >= 0.0);
    let s = SMatrices::new(noise.n_param, omega_t);
    KernelMoments {
        rotation_angle: omega_t,
        covariance: Cov2 {
            xx: noise.n_param * s.s11,
            xy: 0.5 * noise.n_param * s.s12,
            yy: noise.n_param * s.s22,
        },
    }
}

/// Probability that the noise-driven oscillator is still in its ground
/// state after `omega t`:
/// `1 / sqrt((1 + N wt / 2)^2 - (N/2)^2 sin^2 wt)`.
pub fn survival_ground(noise: &NoiseSpec, omega_t: f64) -> f64 {
    let n = noise.n_param;
    let a = 1.0 + 0.5 * n * omega_t;
    let b = 0.5 * n * omega_t.sin();
    1.0 / (a * a - b * b).sqrt()
}

/// Phase density `P(phi, wt)` for the ground initial state:
/// `sqrt((1+N wt)^2 - N^2 sin^2 wt) / ((1+N wt) - N sin wt cos(2 phi - wt))`.
/// `P/(2 pi)` is a probability density on [-pi, pi); it is identically 1
/// whenever `sin wt = 0`.
pub fn phase_density(noise: &NoiseSpec, omega_t: f64, phi: f64) -> f64 {
    let n = noise.n_param;
    let a = 1.0 + n * omega_t;
    let b = n * omega_t.sin();
    (a * a - b * b).sqrt() / (a - b * (2.0 * phi - omega_t).cos())
}

/// `int dphi/(2 pi) f(phi) P(phi, wt)` by adaptive quadrature to absolute
/// tolerance 1e-9 (the ground state is the initial condition the density
/// assumes).
pub fn expect_angle_function<F: FnMut(f64) -> f64>(
    noise: &NoiseSpec,
    omega_t: f64,
    mut f: F,
) -> Result<f64, QuadError> {
    use std::f64::consts::PI;
    let r = adaptive_1d(
        &mut |phi| f(phi) * phase_density(noise, omega_t, phi) / (2.0 * PI),
        -PI,
        PI,
        1e-10,
        48,
    )?;
    Ok(r.value)
}

/// Long-time expectation of a radial operator:
/// `Tr(rho(t) Omega) -> int_0^infty dx e^{-x} Omega(sqrt(x N wt))`.
///
/// Valid once `N wt` is large (a limit statement, not an error bound; the regime is
/// documented, not guarded). The integrand is cut off at x = 60 where the
/// weight is ~1e-26, and integrated adaptively; this handles steeply
/// decaying `g` (thermal transforms at large `N wt`) that a fixed
/// Gauss-Laguerre rule cannot.
pub fn longtime_radial_expectation<G: FnMut(f64) -> f64>(
    noise: &NoiseSpec,
    omega_t: f64,
    mut g: G,
) -> Result<f64, QuadError> {
    let scale = (noise.n_param * omega_t).sqrt();
    let r = adaptive_1d(
        &mut |x: f64| (-x).exp() * g((x.max(0.0)).sqrt() * scale),
        0.0,
        60.0,
        1e-11,
        52,
    )?;
    Ok(r.value)
}

/// Long-time limit of the squared-phase expectation, composed from the
/// radial average of the squared phase operator at truncation `dim`; tends
/// to pi^2/3.
pub fn longtime_phi_squared(
    noise: &NoiseSpec,
    omega_t: f64,
    dim: usize,
) -> Result<f64, NoiseError> {
    let avg = PhiSquaredRadialAverage::new(dim, DEFAULT_TAIL_TERMS)?;
    let v = longtime_radial_expectation(noise, omega_t, |r| avg.eval(r).value)?;
    Ok(v)
}

/// First and second moments of the free-particle kernel (`omega -> 0`
/// limit) in physical units.
#[derive(Debug, Clone, Copy)]
pub struct FreeParticleMoments {
    pub mean_p: f64,
    pub mean_q: f64,
    pub var_p: f64,
    pub cov_pq: f64,
    pub var_q: f64,
}

/// Kicked free particle: mean follows the drift, and
/// `Var(p) = mu t`, `Cov(p, q) = mu t^2 / (2m)`, `Var(q) = mu t^3 / (3m^2)`.
pub fn free_particle_kernel_moments(
    noise: &NoiseSpec,
    spec: &OscillatorSpec,
    t: f64,
    p0: f64,
    q0: f64,
) -> FreeParticleMoments {
    debug_assert!(t >= 0.0);
    let m = spec.mass;
    let mu = noise.mu;
    FreeParticleMoments {
        mean_p: p0,
        mean_q: q0 + p0 * t / m,
        var_p: mu * t,
        cov_pq: mu * t * t / (2.0 * m),
        var_q: mu * t * t * t / (3.0 * m * m),
    }
}

/// Diagonal projector transform `(|h_n><h_n|)(R) = 2 (-1)^n e^{-R^2}
/// L_n(2 R^2)` as a function of `R^2`, through the scaled recurrence so
/// large radii cannot overflow.
#[inline]
fn projector_transform(n: usize, r_sq: f64) -> f64 {
    let sign = if n.is_multiple_of(2) { 2.0 } else { -2.0 };
    sign * laguerre_scaled(n, 2.0 * r_sq)
}

/// Gaussian convolution of the final projector transform, evaluated by a
/// contour sum over the Laguerre generating variable.
///
/// In the covariance eigenframe the generating function of
/// `int (|h_f><h_f|)(v) N(v; c, Sigma) dv` over f is
/// `2 prod_j A_j(z)^{-1/2} exp(-c_j^2 (1-z)/A_j(z))` with
/// `A_j(z) = (1 + 2 lam_j) + z (1 - 2 lam_j)`; its branch points sit
/// outside the unit disk for every `lam_j >= 0`, so the f-th coefficient is
/// recovered stably from a fixed circle of radius 0.8.
struct ConvolvedProjector {
    /// eigenvector columns of the covariance
    q: [[f64; 2]; 2],
    /// per-node: (coefficient-extraction prefactor, (1-z)/A_1, (1-z)/A_2)
    nodes: Vec<(Complex64, Complex64, Complex64)>,
}

const CIRCLE_POINTS: usize = 128;
const CIRCLE_RADIUS: f64 = 0.8;

impl ConvolvedProjector {
    fn new(final_index: usize, cov: Cov2) -> Self {
        use std::f64::consts::PI;
        let (lam, q) = cov.eigen();
        let m = CIRCLE_POINTS;
        let r = CIRCLE_RADIUS;
        let mut nodes = Vec::with_capacity(m);
        let rf = r.powi(final_index as i32);
        for k in 0..m {
            let theta = 2.0 * PI * k as f64 / m as f64;
            let z = Complex64::from_polar(r, theta);
            let a1 = Complex64::new(1.0 + 2.0 * lam[0], 0.0) + z * (1.0 - 2.0 * lam[0]);
            let a2 = Complex64::new(1.0 + 2.0 * lam[1], 0.0) + z * (1.0 - 2.0 * lam[1]);
            let one_minus_z = Complex64::new(1.0, 0.0) - z;
            let pref = 2.0 / (a1 * a2).sqrt()
                * Complex64::from_polar(1.0, -theta * final_index as f64)
                / (m as f64 * rf);
            nodes.push((pref, one_minus_z / a1, one_minus_z / a2));
        }
        Self { q, nodes }
    }

    /// Convolved transform at the phase-plane point `(x, y)`.
    fn eval(&self, x: f64, y: f64) -> f64 {
        let c1 = self.q[0][0] * x + self.q[1][0] * y;
        let c2 = self.q[0][1] * x + self.q[1][1] * y;
        let c1s = c1 * c1;
        let c2s = c2 * c2;
        let mut acc = 0.0;
        // nodes come in conjugate pairs; k and M-k contribute equal real parts
        let m = self.nodes.len();
        for (k, (pref, b1, b2)) in self.nodes.iter().enumerate().take(m / 2 + 1) {
            let v = (pref * (-(b1 * c1s) - b2 * c2s).exp()).re;
            if k == 0 || k == m / 2 {
                acc += v;
            } else {
                acc += 2.0 * v;
            }
        }
        acc
    }
}

/// Ensemble-averaged transition probability between energy eigenstates
/// under white noise, by 2-D adaptive quadrature over the initial phase
/// plane of the initial projector transform times the kernel-convolved
/// final projector transform.
pub fn transition_probability(
    initial: usize,
    final_state: usize,
    noise: &NoiseSpec,
    omega_t: f64,
) -> Result<f64, QuadError> {
    transition_probability_with_tol(initial, final_state, noise, omega_t, 1e-8)
}

/// `transition_probability` with an explicit quadrature tolerance.
pub fn transition_probability_with_tol(
    initial: usize,
    final_state: usize,
    noise: &NoiseSpec,
    omega_t: f64,
    abs_tol: f64,
) -> Result<f64, QuadError> {
    use std::f64::consts::PI;
    let cov = kernel_moments(noise, omega_t).covariance;
    let r_max = 12.0 + 3.0 * (noise.n_param * omega_t).sqrt();

    if cov.max_abs() < 1e-12 {
        // no spreading: the rotation conserves the radius, so the overlap
        // integral is the plain orthogonality integral
        let r = adaptive_2d(
            &mut |x, y| {
                let rsq = x * x + y * y;
                projector_transform(initial, rsq) * projector_transform(final_state, rsq)
                    / (2.0 * PI)
            },
            (-r_max, r_max),
            (-r_max, r_max),
            abs_tol,
            400_000,
        )?;
        return Ok(r.value);
    }

    let conv = ConvolvedProjector::new(final_state, cov);
    let r = adaptive_2d(
        &mut |x, y| projector_transform(initial, x * x + y * y) * conv.eval(x, y) / (2.0 * PI),
        (-r_max, r_max),
        (-r_max, r_max),
        abs_tol,
        400_000,
    )?;
    Ok(r.value)
}

/// Ground-state survival under an arbitrary linear flow, by phase-space
/// quadrature: `(1/2 pi) int dv (|h_0><h_0|)(F v) (|h_0><h_0|)(v)`.
pub fn ground_survival_under_flow(flow: &[[f64; 2]; 2], abs_tol: f64) -> Result<f64, QuadError> {
    use std::f64::consts::PI;
    let r = adaptive_2d(
        &mut |x, y| {
            let fx = flow[0][0] * x + flow[0][1] * y;
            let fy = flow[1][0] * x + flow[1][1] * y;
            4.0 * (-(x * x + y * y) - (fx * fx + fy * fy)).exp() / (2.0 * PI)
        },
        (-7.0, 7.0),
        (-7.0, 7.0),
        abs_tol,
        200_000,
    )?;
    Ok(r.value)
}

/// Closed form of [`ground_survival_under_flow`]: `2 / sqrt(det(I + F^T F))`.
pub fn ground_survival_under_flow_closed(flow: &[[f64; 2]; 2]) -> f64 {
    let [[a, b], [c, d]] = *flow;
    let g11 = 1.0 + a * a + c * c;
    let g22 = 1.0 + b * b + d * d;
    let g12 = a * b + c * d;
    2.0 / (g11 * g22 - g12 * g12).sqrt()
}
