//! Phase-space treatment of a driven quantum harmonic oscillator.
//!
//! The library works in the Wigner-Weyl picture, where operators map to
//! functions on the phase plane and the oscillator's evolution is carried by
//! classical trajectories. It provides:
//!
//! * the Weyl-transform primitives (Laguerre polynomials, log-gamma,
//!   matrix elements of the phase-point operator, Gaussian integrals),
//! * the Weyl-quantized phase operator on a truncated energy basis, its
//!   spectrum, and the radial average of its square,
//! * classical propagation: exact rotation, closed-form driven motion, an
//!   RK4 integrator for modulated frequencies, and a Langevin stepper for
//!   white-noise forcing,
//! * closed-form ensemble-averaged quantities under white noise (survival
//!   probabilities, phase densities, long-time limits, transition
//!   probabilities), and
//! * a Monte-Carlo engine with a counter-based RNG that independently
//!   cross-checks every closed form with quantified statistical error.
//!
//! Everything dimensionless is expressed in the variables
//! `x = p/(hbar*alpha)`, `y = alpha*q` with `alpha^2 = m*omega/hbar`; the
//! noise strength enters only through `N = mu/(m*omega^2*hbar)` and time
//! through the phase angle `omega*t`.

pub mod cli;
pub mod dynamics;
pub mod linalg;
pub mod mc;
pub mod noise;
pub mod phase_op;
pub mod quad;
pub mod rng;
pub mod special;
pub mod weyl;

pub use weyl::{OscillatorSpec, PhasePoint, PolarPoint};
