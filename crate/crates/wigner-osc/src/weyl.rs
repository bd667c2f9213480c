//! Oscillator scales, phase-plane coordinates, and Weyl-transform
//! primitives: matrix elements of the phase-point operator on the energy
//! basis, the thermal transform, and the closed-form Gaussian integral.

use num_complex::Complex64;
use thiserror::Error;

use crate::special::{laguerre, laguerre_scaled, ln_factorial};

#[derive(Debug, Error)]
pub enum WeylError {
    #[error("oscillator constants must be positive: mass {mass}, omega {omega}, hbar {hbar}")]
    BadConstants { mass: f64, omega: f64, hbar: f64 },
    #[error("matrix is not positive definite (det = {det})")]
    NotPositiveDefinite { det: f64 },
    #[error("matrix is not symmetric (|a01 - a10| = {skew})")]
    NotSymmetric { skew: f64 },
}

/// Physical constants of one oscillator and the derived length scale.
///
/// `alpha_sq = mass * omega / hbar` converts between physical `(p, q)` and
/// the dimensionless phase plane `(x, y) = (p / (hbar alpha), alpha q)`.
#[derive(Debug, Clone, Copy)]
pub struct OscillatorSpec {
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
    pub alpha_sq: f64,
}

impl OscillatorSpec {
    pub fn new(mass: f64, omega: f64, hbar: f64) -> Result<Self, WeylError> {
        if !(mass > 0.0 && omega > 0.0 && hbar > 0.0) {
            return Err(WeylError::BadConstants { mass, omega, hbar });
        }
        Ok(Self {
            mass,
            omega,
            hbar,
            alpha_sq: mass * omega / hbar,
        })
    }

    /// Natural units: mass = omega = hbar = 1.
    pub fn natural() -> Self {
        Self::new(1.0, 1.0, 1.0).unwrap()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha_sq.sqrt()
    }

    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.omega
    }

    pub fn to_dimensionless(&self, p: f64, q: f64) -> PhasePoint {
        PhasePoint {
            x: p / (self.hbar * self.alpha()),
            y: self.alpha() * q,
        }
    }

    pub fn to_physical(&self, pt: PhasePoint) -> (f64, f64) {
        (pt.x * self.hbar * self.alpha(), pt.y / self.alpha())
    }
}

/// Dimensionless phase-plane point: `x` the momentum axis, `y` the position
/// axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub x: f64,
    pub y: f64,
}

impl PhasePoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn radius_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn to_polar(&self) -> PolarPoint {
        PolarPoint {
            r: self.x.hypot(self.y),
            phi: self.y.atan2(self.x),
        }
    }
}

/// Polar phase-plane point with `x + i y = r e^{i phi}` and phi in [-pi, pi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub phi: f64,
}

/// Wrap an angle to [-pi, pi).
pub fn wrap_angle(a: f64) -> f64 {
    use std::f64::consts::PI;
    let w = a - 2.0 * PI * ((a + PI) / (2.0 * PI)).floor();
    // floor rounding can land exactly on pi
    if w >= PI {
        w - 2.0 * PI
    } else {
        w
    }
}

impl PolarPoint {
    pub fn new(r: f64, phi: f64) -> Self {
        debug_assert!(r >= 0.0);
        Self {
            r,
            phi: wrap_angle(phi),
        }
    }

    pub fn to_phase(&self) -> PhasePoint {
        PhasePoint {
            x: self.r * self.phi.cos(),
            y: self.r * self.phi.sin(),
        }
    }
}

/// `i^k` as an exact unit complex number.
#[inline]
fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Matrix element `<h_m| Delta(R, phi) |h_n>` of the phase-point operator on
/// the energy basis:
///
/// `2 (-1)^n i^{|m-n|} 2^{|m-n|/2} sqrt(n_l!/n_g!) e^{i(n-m)phi} R^{|m-n|}
///  e^{-R^2} L^{|m-n|}_{n_l}(2R^2)`
///
/// with `n_l (n_g)` the lesser (greater) of the pair. The factorial ratio and
/// power factors are combined in log space so large indices do not overflow.
pub fn delta_matrix_element(m: usize, n: usize, pt: PolarPoint) -> Complex64 {
    let (low, high) = if m <= n { (m, n) } else { (n, m) };
    let d = high - low;
    let r = pt.r;
    let rsq = r * r;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };

    if d == 0 {
        // diagonal: 2 (-1)^n e^{-R^2} L_n(2R^2), scaled so large radii stay
        // finite
        return Complex64::new(sign * 2.0 * laguerre_scaled(low, 2.0 * rsq), 0.0);
    }
    if r == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let ln_mag = std::f64::consts::LN_2 * (1.0 + d as f64 / 2.0)
        + 0.5 * (ln_factorial(low) - ln_factorial(high))
        + d as f64 * r.ln()
        - rsq;
    let lag = laguerre(low, d, 2.0 * rsq);
    let phase = i_pow(d as i64) * Complex64::from_polar(1.0, (n as f64 - m as f64) * pt.phi);
    phase * (sign * ln_mag.exp() * lag)
}

/// Weyl transform of `exp(-beta H)` at radius `r`:
/// `cosh(hbar omega beta / 2)^{-1} exp(-r^2 tanh(hbar omega beta / 2))`.
pub fn thermal_weyl_transform(beta: f64, spec: &OscillatorSpec, r: f64) -> f64 {
    debug_assert!(beta >= 0.0);
    let h = 0.5 * spec.hbar * spec.omega * beta;
    (-r * r * h.tanh()).exp() / h.cosh()
}

/// Closed form of the two-dimensional Gaussian integral
/// `int dk exp(-1/2 k^T A k) exp(i J^T k) = sqrt((2 pi)^2 / det A)
///  exp(-1/2 J^T A^{-1} J)` for symmetric positive definite `A`.
pub fn gaussian_quadratic_integral(a: [[f64; 2]; 2], j: [f64; 2]) -> Result<f64, WeylError> {
    let skew = (a[0][1] - a[1][0]).abs();
    if skew > 1e-12 * (a[0][1].abs() + a[1][0].abs()).max(1.0) {
        return Err(WeylError::NotSymmetric { skew });
    }
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if det <= 0.0 || a[0][0] <= 0.0 {
        return Err(WeylError::NotPositiveDefinite { det });
    }
    // J^T A^{-1} J via the adjugate
    let quad = (a[1][1] * j[0] * j[0] - 2.0 * a[0][1] * j[0] * j[1] + a[0][0] * j[1] * j[1]) / det;
    Ok(2.0 * std::f64::consts::PI / det.sqrt() * (-0.5 * quad).exp())
}
