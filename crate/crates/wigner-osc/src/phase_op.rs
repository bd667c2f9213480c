//! The Weyl-quantized phase operator on a truncated energy basis: its
//! matrix elements, the diagonal of its square, its spectrum versus
//! truncation, and the angle-averaged transform of its square.

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{skew_tridiagonalize, symtri_eigenvalues, DenseMatrix, LinalgError};
use crate::special::{laguerre_scaled_sequence, ln_factorial, ln_gamma};

pub const PI_SQ_OVER_3: f64 = std::f64::consts::PI * std::f64::consts::PI / 3.0;

/// Number of trailing partial sums averaged when the alternating Laguerre
/// series is evaluated (arithmetic-mean acceleration).
const CESARO_WINDOW: usize = 16;

/// Default tail length for the diagonal series of the squared phase
/// operator; the terms decay only like n^{-3/2}.
pub const DEFAULT_TAIL_TERMS: usize = 20_000;

#[derive(Debug, Error)]
pub enum PhaseOpError {
    #[error("truncation dimension must be at least {min}, got {dim}")]
    DimTooSmall { dim: usize, min: usize },
    #[error("diagonal series tail bound {tail_bound} exceeds tolerance {tol} after {terms} terms")]
    TailNotConverged {
        tail_bound: f64,
        tol: f64,
        terms: usize,
    },
    #[error("eigensolver failure: {0}")]
    Eigensolver(#[from] LinalgError),
}

/// Symmetric Gamma-ratio coefficient entering the phase-operator matrix
/// elements:
///
/// `g_{m,n} = 2^{-|m-n|/2} Gamma(n_l/2 + s_l)/Gamma(n_g/2 + s_l)
///  sqrt(n_g!/n_l!)`, `s_l = 1/2` for even `n_l` and `1` for odd `n_l`.
///
/// Computed through log-gamma differences; symmetric in (m, n) exactly
/// because only the ordered pair enters.
pub fn g_coefficient(m: usize, n: usize) -> f64 {
    let (low, high) = if m <= n { (m, n) } else { (n, m) };
    let s_low = if low % 2 == 0 { 0.5 } else { 1.0 };
    let ln = -((high - low) as f64) * 0.5 * std::f64::consts::LN_2
        + ln_gamma(low as f64 / 2.0 + s_low)
        - ln_gamma(high as f64 / 2.0 + s_low)
        + 0.5 * (ln_factorial(high) - ln_factorial(low));
    ln.exp()
}

/// Dense operator matrix on the truncated energy basis.
#[derive(Debug, Clone)]
pub struct FockMatrix {
    pub dim: usize,
    entries: Vec<Complex64>,
    pub hermitian: bool,
}

impl FockMatrix {
    #[inline]
    pub fn get(&self, m: usize, n: usize) -> Complex64 {
        self.entries[m * self.dim + n]
    }

    /// Largest deviation from Hermitian symmetry.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for m in 0..self.dim {
            for n in m..self.dim {
                let d = (self.get(m, n) - self.get(n, m).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// Matrix of the phase operator: `<h_m|phi|h_n> = (1 - delta_{mn})
/// i^{n-m+1}/(m-n) g_{m,n}`, Hermitian with an exactly zero diagonal.
pub fn phi_matrix(dim: usize) -> Result<FockMatrix, PhaseOpError> {
    if dim < 1 {
        return Err(PhaseOpError::DimTooSmall { dim, min: 1 });
    }
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for m in 0..dim {
        for n in m + 1..dim {
            let g = g_coefficient(m, n);
            let k = n - m; // > 0
            let scale = g / (m as f64 - n as f64);
            // i^{k+1} cycles through -1, -i, 1, i for k = 1, 2, 3, 0 (mod 4)
            let val = match (k + 1) % 4 {
                0 => Complex64::new(scale, 0.0),
                1 => Complex64::new(0.0, scale),
                2 => Complex64::new(-scale, 0.0),
                _ => Complex64::new(0.0, -scale),
            };
            entries[m * dim + n] = val;
            entries[n * dim + m] = val.conj();
        }
    }
    Ok(FockMatrix {
        dim,
        entries,
        hermitian: true,
    })
}

/// Diagonal `<h_m|phi^2|h_m>` computed from the g-series, together with the
/// integral-comparison remainder folded into the value.
#[derive(Debug, Clone, Copy)]
pub struct PhiSquaredDiagonal {
    /// Explicit partial sums plus the estimated remainder.
    pub value: f64,
    /// Magnitude of the remainder estimate; conservative uncertainty of
    /// `value`.
    pub tail_bound: f64,
    pub tail_terms: usize,
}

/// `<h_m|phi^2|h_m> = sum_{n=1}^{m} g_{m,m-n}^2/n^2
///                  + sum_{n>=1} g_{m+n,m}^2/n^2`.
///
/// The second sum is truncated after `tail_terms` terms; its remainder
/// decays like `c n^{-3/2}`, so integral comparison puts it at twice the
/// last retained term times `tail_terms`. That estimate is added to the
/// value (it is accurate to a few 1e-6 at the default length, where raw
/// truncation would still be off by 1e-2) and reported as the
/// uncertainty.
pub fn phi_squared_diagonal(m: usize, tail_terms: usize) -> PhiSquaredDiagonal {
    assert!(tail_terms >= 1);
    let mut value = 0.0;
    for n in 1..=m {
        let g = g_coefficient(m, m - n);
        value += g * g / (n * n) as f64;
    }
    let mut last = 0.0;
    for n in 1..=tail_terms {
        let g = g_coefficient(m + n, m);
        last = g * g / (n * n) as f64;
        value += last;
    }
    let remainder = 2.0 * last * tail_terms as f64;
    PhiSquaredDiagonal {
        value: value + remainder,
        tail_bound: remainder,
        tail_terms,
    }
}

/// `phi_squared_diagonal` that reports a convergence error when the tail
/// estimate exceeds `tol`.
pub fn phi_squared_diagonal_checked(
    m: usize,
    tail_terms: usize,
    tol: f64,
) -> Result<PhiSquaredDiagonal, PhaseOpError> {
    let d = phi_squared_diagonal(m, tail_terms);
    if d.tail_bound > tol {
        return Err(PhaseOpError::TailNotConverged {
            tail_bound: d.tail_bound,
            tol,
            terms: tail_terms,
        });
    }
    Ok(d)
}

/// Sorted spectrum of the truncated phase operator.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub dim: usize,
    pub eigenvalues: Vec<f64>,
    pub spread: f64,
}

/// Eigenvalues of `phi_matrix(dim)`.
///
/// Conjugating by diag(i^m) turns the matrix into i times a real
/// skew-symmetric matrix; Householder reduction of that skew matrix and a
/// second diag(i^m) conjugation leave a real symmetric tridiagonal problem,
/// so the whole solve runs in real arithmetic on one n x n matrix.
pub fn phi_spectrum(dim: usize) -> Result<SpectrumReport, PhaseOpError> {
    if dim < 2 {
        return Err(PhaseOpError::DimTooSmall { dim, min: 2 });
    }
    // K[m][n] = (-1)^{n-m} g_{m,n} / (m - n), real skew-symmetric
    let mut k = DenseMatrix::zeros(dim);
    for m in 0..dim {
        for n in m + 1..dim {
            let g = g_coefficient(m, n);
            let sign = if (n - m) % 2 == 0 { 1.0 } else { -1.0 };
            let v = sign * g / (m as f64 - n as f64);
            k.set(m, n, v);
            k.set(n, m, -v);
        }
    }
    let gamma = skew_tridiagonalize(&mut k);
    let eigenvalues = symtri_eigenvalues(vec![0.0; dim], gamma)?;
    let spread = eigenvalues[dim - 1] - eigenvalues[0];
    Ok(SpectrumReport {
        dim,
        eigenvalues,
        spread,
    })
}

/// Angle-averaged transform of the squared phase operator, evaluated from
/// cached diagonal values so sweeps over the radius are cheap.
#[derive(Debug, Clone)]
pub struct PhiSquaredRadialAverage {
    diag_minus_limit: Vec<f64>,
}

/// Value of the truncated radial average together with its convergence
/// diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct RadialAverage {
    pub value: f64,
    pub last_term: f64,
    pub converged: bool,
}

/// Last-term threshold below which the Laguerre series is reported as
/// converged.
pub const RADIAL_SERIES_TOL: f64 = 1e-3;

impl PhiSquaredRadialAverage {
    pub fn new(dim: usize, tail_terms: usize) -> Result<Self, PhaseOpError> {
        if dim < 1 {
            return Err(PhaseOpError::DimTooSmall { dim, min: 1 });
        }
        let diag_minus_limit = (0..dim)
            .map(|m| phi_squared_diagonal(m, tail_terms).value - PI_SQ_OVER_3)
            .collect();
        Ok(Self { diag_minus_limit })
    }

    /// `pi^2/3 + sum_m (<h_m|phi^2|h_m> - pi^2/3) 2 (-1)^m e^{-r^2}
    /// L_m(2 r^2)`, the partial sums stabilized by a trailing arithmetic
    /// mean. The series is Abel-summable; near the phase-plane origin it
    /// does not converge with truncation and the flag reports that.
    pub fn eval(&self, r: f64) -> RadialAverage {
        let dim = self.diag_minus_limit.len();
        let rsq = r * r;
        // e^{-R^2} L_m(2 R^2) computed as one bounded quantity
        let lag = laguerre_scaled_sequence(dim, 2.0 * rsq);
        let window = CESARO_WINDOW.min(dim);
        let mut partial = 0.0;
        let mut window_sum = 0.0;
        let mut last_term = 0.0;
        for (m, (dev, l)) in self.diag_minus_limit.iter().zip(&lag).enumerate() {
            let sign = if m % 2 == 0 { 2.0 } else { -2.0 };
            last_term = dev * sign * l;
            partial += last_term;
            if m + window >= dim {
                window_sum += partial;
            }
        }
        let value = PI_SQ_OVER_3 + window_sum / window as f64;
        RadialAverage {
            value,
            last_term,
            converged: last_term.abs() <= RADIAL_SERIES_TOL,
        }
    }
}

/// One-shot evaluation of the radial average at truncation `dim` with the
/// default diagonal tail length.
pub fn phi_squared_weyl_radial_average(r: f64, dim: usize) -> Result<RadialAverage, PhaseOpError> {
    Ok(PhiSquaredRadialAverage::new(dim, DEFAULT_TAIL_TERMS)?.eval(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn g_reference_values() {
        assert!((g_coefficient(0, 0) - 1.0).abs() < 1e-14);
        assert!((g_coefficient(0, 1) - (PI / 2.0).sqrt()).abs() < 1e-13);
        assert!((g_coefficient(200, 201) - 1.0).abs() < 2e-3);
    }

    #[test]
    fn g_symmetric_exactly() {
        for &(m, n) in &[(0usize, 5usize), (3, 17), (100, 101), (7, 200)] {
            assert_eq!(g_coefficient(m, n).to_bits(), g_coefficient(n, m).to_bits());
        }
    }

    #[test]
    fn phi_matrix_structure() {
        let phi = phi_matrix(6).unwrap();
        for m in 0..6 {
            assert_eq!(phi.get(m, m), Complex64::new(0.0, 0.0));
        }
        // entries[0][1] = i^2/(0-1) g = g(0,1), real and positive
        let e01 = phi.get(0, 1);
        assert!((e01.re - (PI / 2.0).sqrt()).abs() < 1e-13);
        assert!(e01.im == 0.0);
        assert!(phi.hermiticity_defect() < 1e-12);
        assert!(phi_matrix(0).is_err());
    }

    #[test]
    fn phi_matrix_hermitian_large_dims() {
        for dim in [2usize, 3, 25, 101, 256, 400] {
            let phi = phi_matrix(dim).unwrap();
            assert!(phi.hermiticity_defect() < 1e-12, "dim {dim}");
        }
    }

    #[test]
    fn two_state_spectrum() {
        let rep = phi_spectrum(2).unwrap();
        let want = (PI / 2.0).sqrt();
        assert!((rep.eigenvalues[0] + want).abs() < 1e-13);
        assert!((rep.eigenvalues[1] - want).abs() < 1e-13);
        assert!((rep.spread - 2.0 * want).abs() < 1e-13);
        assert!(phi_spectrum(1).is_err());
    }

    #[test]
    fn spectrum_spread_monotone_and_bounded() {
        let dims = [25usize, 50, 100, 200, 300, 400];
        let mut prev = 0.0;
        for dim in dims {
            let rep = phi_spectrum(dim).unwrap();
            assert!(rep.spread >= prev, "spread not monotone at dim {dim}");
            assert!(rep.spread < 2.0 * PI, "spread exceeds 2 pi at dim {dim}");
            for &w in &[rep.eigenvalues[0], rep.eigenvalues[dim - 1]] {
                assert!(w.abs() < 1.5 * PI, "eigenvalue outside 3 pi range");
                assert!(w.abs() < PI + 0.05, "eigenvalue outside empirical band");
            }
            prev = rep.spread;
        }
    }

    #[test]
    fn diagonal_series_first_term_and_positivity() {
        // m = 0: first tail term is g(1,0)^2 / 1 = pi/2
        let g10 = g_coefficient(1, 0);
        assert!((g10 * g10 - PI / 2.0).abs() < 1e-13);
        let d = phi_squared_diagonal(0, 2000);
        assert!(d.value > 0.0 && d.tail_bound > 0.0);
    }

    #[test]
    fn diagonal_approaches_random_phase_variance() {
        let d = phi_squared_diagonal(200, DEFAULT_TAIL_TERMS);
        assert!(
            (d.value - PI_SQ_OVER_3).abs() / PI_SQ_OVER_3 < 0.01,
            "d_200 = {}",
            d.value
        );
    }

    #[test]
    fn diagonal_checked_rejects_short_tail() {
        assert!(matches!(
            phi_squared_diagonal_checked(0, 10, 1e-2),
            Err(PhaseOpError::TailNotConverged { .. })
        ));
        assert!(phi_squared_diagonal_checked(0, 20_000, 5e-2).is_ok());
    }

    #[test]
    fn diagonal_matches_matrix_square() {
        // sum-of-squares identity: <h_m|phi^2|h_m> = sum_n |<h_m|phi|h_n>|^2
        let dim = 300;
        let phi = phi_matrix(dim).unwrap();
        for m in [0usize, 3, 10] {
            let mut row_sum = 0.0;
            for n in 0..dim {
                row_sum += phi.get(m, n).norm_sqr();
            }
            let series = phi_squared_diagonal(m, DEFAULT_TAIL_TERMS);
            // the matrix sum misses exactly the series terms with m+n >= dim
            // plus the estimated remainder beyond the explicit tail
            let mut residual = 0.0;
            for n in dim - m..=series.tail_terms {
                let g = g_coefficient(m + n, m);
                residual += g * g / (n * n) as f64;
            }
            let diff = (series.value - series.tail_bound - residual - row_sum).abs();
            assert!(diff <= 1e-10, "m = {m}: diff {diff}");
            assert!((series.value - (row_sum + residual)).abs() <= series.tail_bound + 1e-10);
        }
    }

    #[test]
    fn radial_average_far_from_origin() {
        let avg = PhiSquaredRadialAverage::new(128, DEFAULT_TAIL_TERMS).unwrap();
        // oracle: the same series summed at four times the truncation
        let oracle = PhiSquaredRadialAverage::new(512, DEFAULT_TAIL_TERMS).unwrap();
        let at_8 = avg.eval(8.0);
        let at_8_deep = oracle.eval(8.0);
        assert!(at_8.converged);
        assert!(
            (at_8.value - at_8_deep.value).abs() < 1e-3,
            "{} vs {}",
            at_8.value,
            at_8_deep.value
        );
        assert!((at_8_deep.value - PI_SQ_OVER_3).abs() < 1e-3);
    }

    #[test]
    fn radial_average_flags_origin() {
        // the angle is singular at the origin; truncated sums there cannot
        // converge and must say so
        let avg = PhiSquaredRadialAverage::new(128, DEFAULT_TAIL_TERMS).unwrap();
        assert!(!avg.eval(0.0).converged);
        let deeper = PhiSquaredRadialAverage::new(256, DEFAULT_TAIL_TERMS).unwrap();
        assert!(!deeper.eval(0.0).converged);
    }
}
