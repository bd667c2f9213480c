//! Dense real linear algebra pieces: a Householder reduction of
//! skew-symmetric matrices to tridiagonal form, eigenvalues of symmetric
//! tridiagonal matrices by implicit-shift QL, and a closed-form 2x2
//! symmetric eigendecomposition.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("QL iteration failed to converge at row {row}")]
    NoConvergence { row: usize },
}

/// Square dense matrix in row-major storage.
#[derive(Debug, Clone)]
pub struct DenseMatrix {
    pub n: usize,
    pub data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    #[inline(always)]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }

    #[inline(always)]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.n + c] = v;
    }
}

/// Reduce a skew-symmetric matrix to skew tridiagonal form by Householder
/// similarity transforms, returning the subdiagonal `gamma[j] = T[j+1][j]`.
///
/// Orthogonal similarity preserves skew-symmetry, and for skew `A` the
/// two-sided reflector update collapses to the rank-2 form
/// `A + tau (u v^T - v u^T)` with `v = A u`.
#[allow(clippy::needless_range_loop)] // indexed kernel loops mirror the matrix algebra
pub fn skew_tridiagonalize(k: &mut DenseMatrix) -> Vec<f64> {
    let n = k.n;
    if n < 2 {
        return Vec::new();
    }
    let mut u = vec![0.0; n];
    let mut v = vec![0.0; n];
    for j in 0..n - 2 {
        let mut norm2 = 0.0;
        for r in j + 1..n {
            let x = k.get(r, j);
            norm2 += x * x;
        }
        if norm2 == 0.0 {
            continue;
        }
        let x0 = k.get(j + 1, j);
        let alpha = -x0.signum() * norm2.sqrt();

        u[..n].fill(0.0);
        u[j + 1] = x0 - alpha;
        for r in j + 2..n {
            u[r] = k.get(r, j);
        }
        let unorm2: f64 = u[j + 1..].iter().map(|x| x * x).sum();
        if unorm2 <= f64::MIN_POSITIVE {
            continue;
        }
        let tau = 2.0 / unorm2;

        // v = K u; rows above j see only zeros in the columns u touches
        for r in j..n {
            let mut acc = 0.0;
            for c in j + 1..n {
                acc += k.get(r, c) * u[c];
            }
            v[r] = acc;
        }
        for r in j..n {
            let (ur, vr) = (u[r], v[r]);
            for c in j..n {
                let delta = tau * (ur * v[c] - vr * u[c]);
                if delta != 0.0 {
                    let val = k.get(r, c) + delta;
                    k.set(r, c, val);
                }
            }
        }
        // enforce the exact zeros the reflector produces
        k.set(j + 1, j, alpha);
        k.set(j, j + 1, -alpha);
        for r in j + 2..n {
            k.set(r, j, 0.0);
            k.set(j, r, 0.0);
        }
    }
    (0..n - 1).map(|j| k.get(j + 1, j)).collect()
}

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// off-diagonal `e` (`e[i]` couples rows i and i+1), sorted ascending.
///
/// Implicit-shift QL; the classic EISPACK tql1 sweep.
pub fn symtri_eigenvalues(mut d: Vec<f64>, mut e: Vec<f64>) -> Result<Vec<f64>, LinalgError> {
    let n = d.len();
    if n == 0 {
        return Ok(d);
    }
    assert!(e.len() + 1 >= n, "off-diagonal too short");
    e.resize(n, 0.0);
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(LinalgError::NoConvergence { row: l });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if i == l {
                    d[l] -= p;
                    e[l] = g;
                    e[m] = 0.0;
                }
            }
        }
    }
    d.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(d)
}

/// Eigendecomposition of `[[a, b], [b, c]]`: eigenvalues ascending together
/// with an orthonormal eigenvector matrix whose columns match them.
pub fn sym2_eigen(a: f64, b: f64, c: f64) -> ([f64; 2], [[f64; 2]; 2]) {
    let half_tr = 0.5 * (a + c);
    let half_diff = 0.5 * (a - c);
    let disc = half_diff.hypot(b);
    let lam = [half_tr - disc, half_tr + disc];
    if b.abs() <= f64::EPSILON * (a.abs() + c.abs()).max(f64::MIN_POSITIVE) {
        if a <= c {
            return (lam, [[1.0, 0.0], [0.0, 1.0]]);
        }
        return (lam, [[0.0, 1.0], [1.0, 0.0]]);
    }
    // eigenvector of the smaller eigenvalue; pick the better-conditioned form
    let v0 = if (lam[0] - a).abs() > (lam[0] - c).abs() {
        [b, lam[0] - a]
    } else {
        [lam[0] - c, b]
    };
    let norm = v0[0].hypot(v0[1]);
    let v0 = [v0[0] / norm, v0[1] / norm];
    // Q[row][col], columns are eigenvectors
    (lam, [[v0[0], -v0[1]], [v0[1], v0[0]]])
}
