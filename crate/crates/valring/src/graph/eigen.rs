//! Dense symmetric eigensolvers for the Gram matrix B·Bᵀ.
//!
//! The default path uses nalgebra (feature `dense-eigen`); the cyclic Jacobi
//! solver below is always compiled so the crate works without any numerical
//! dependency.

use crate::error::{Error, Result};

/// Which eigensolver backs `spectrum`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solver {
    /// nalgebra SymmetricEigen (tridiagonalization + implicit QL).
    #[cfg(feature = "dense-eigen")]
    Dense,
    /// In-crate cyclic Jacobi rotations; no external dependency.
    Jacobi,
}

impl Default for Solver {
    fn default() -> Self {
        #[cfg(feature = "dense-eigen")]
        {
            Solver::Dense
        }
        #[cfg(not(feature = "dense-eigen"))]
        {
            Solver::Jacobi
        }
    }
}

/// Eigenvalues of a symmetric matrix (row-major, n×n), descending.
pub fn symmetric_eigenvalues(mat: Vec<f64>, n: usize, solver: Solver) -> Result<Vec<f64>> {
    debug_assert_eq!(mat.len(), n * n);
    let mut eigs = match solver {
        #[cfg(feature = "dense-eigen")]
        Solver::Dense => dense_eigenvalues(mat, n)?,
        Solver::Jacobi => jacobi_eigenvalues(mat, n)?,
    };
    eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(eigs)
}

#[cfg(feature = "dense-eigen")]
fn dense_eigenvalues(mat: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    let m = nalgebra::DMatrix::from_row_slice(n, n, &mat);
    let max_iter = 30 * n.max(16);
    let eig = nalgebra::SymmetricEigen::try_new(m, f64::EPSILON, max_iter)
        .ok_or(Error::Numerical { iterations: max_iter })?;
    Ok(eig.eigenvalues.iter().copied().collect())
}

/// Cyclic Jacobi: rotate away the largest off-diagonal entries sweep by sweep
/// until the off-diagonal Frobenius mass is negligible.
fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    const MAX_SWEEPS: usize = 100;
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![a[0]]);
    }
    let scale: f64 = a
        .iter()
        .map(|x| x.abs())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    for sweep in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() <= 1e-14 * scale * n as f64 {
            let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            eigs.sort_by(|x, y| y.partial_cmp(x).unwrap());
            return Ok(eigs);
        }
        // threshold shrinks with the remaining off-diagonal mass
        let thresh = if sweep < 3 { 0.2 * off / (n * n) as f64 } else { 0.0 };
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq * apq <= thresh {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(Error::Numerical { iterations: MAX_SWEEPS })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{x} vs {y}");
        }
    }

    #[test]
    fn jacobi_known_spectrum() {
        // diag(3,1) rotated by 45°: [[2,1],[1,2]]
        let eigs = jacobi_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2).unwrap();
        assert_close(&eigs, &[3.0, 1.0], 1e-12);

        // 3x3 with known spectrum {2, 2-√2, 2+√2}: tridiag(1,2,1)
        let m = vec![2.0, 1.0, 0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 2.0];
        let eigs = jacobi_eigenvalues(m, 3).unwrap();
        let s2 = 2.0_f64.sqrt();
        assert_close(&eigs, &[2.0 + s2, 2.0, 2.0 - s2], 1e-12);
    }

    #[test]
    fn jacobi_handles_diagonal_and_empty() {
        assert_eq!(jacobi_eigenvalues(Vec::new(), 0).unwrap(), Vec::<f64>::new());
        let eigs = jacobi_eigenvalues(vec![5.0, 0.0, 0.0, -1.0], 2).unwrap();
        assert_close(&eigs, &[5.0, -1.0], 1e-14);
    }

    #[cfg(feature = "dense-eigen")]
    #[test]
    fn solvers_agree_on_random_symmetric() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in [4usize, 9, 17] {
            let mut m = vec![0.0f64; n * n];
            for i in 0..n {
                for j in 0..=i {
                    let v = (rng.random_range(-20i64..=20)) as f64;
                    m[i * n + j] = v;
                    m[j * n + i] = v;
                }
            }
            let a = symmetric_eigenvalues(m.clone(), n, Solver::Dense).unwrap();
            let b = symmetric_eigenvalues(m, n, Solver::Jacobi).unwrap();
            assert_close(&a, &b, 1e-8);
        }
    }
}
