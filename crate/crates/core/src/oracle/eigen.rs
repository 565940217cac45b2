//! Cyclic Jacobi diagonalization of dense symmetric matrices.
//!
//! Each rotation zeroes one off-diagonal pair; sweeps visit every pair
//! `(p, q)`, `p < q`, in row order. Only eigenvalues are produced, so the
//! rotations are not accumulated.

use alloc::vec::Vec;

use super::DenseSymmetricMatrix;
use crate::{Error, Result};

/// Stop once the off-diagonal Frobenius norm is at most
/// `tolerance · ‖A‖_F`.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_SWEEPS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiOptions {
    pub tolerance: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions { tolerance: DEFAULT_TOLERANCE, max_sweeps: DEFAULT_MAX_SWEEPS }
    }
}

/// All eigenvalues, nondecreasing.
pub fn symmetric_eigenvalues(m: &DenseSymmetricMatrix) -> Result<Vec<f64>> {
    symmetric_eigenvalues_with(m, JacobiOptions::default())
}

pub fn symmetric_eigenvalues_with(m: &DenseSymmetricMatrix, options: JacobiOptions) -> Result<Vec<f64>> {
    let n = m.order();
    let mut a = m.clone().into_row_major();
    let scale = libm::sqrt(a.iter().map(|x| x * x).sum::<f64>());
    let target = options.tolerance * scale;
    // Pairs this small are left alone; n² of them stay below the target.
    let skip = target / (n.max(1) as f64);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            break;
        }
        if sweeps == options.max_sweeps {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if libm::fabs(apq) <= skip {
                    continue;
                }
                rotate(&mut a, n, p, q, apq);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let x = a[i * n + j];
            sum += x * x;
        }
    }
    libm::sqrt(2.0 * sum)
}

fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, apq: f64) {
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = {
        let mag = 1.0 / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
        if theta < 0.0 { -mag } else { mag }
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;

    // Rows p and q are contiguous; update them, then mirror into columns.
    let (head, tail) = a.split_at_mut(q * n);
    let row_p = &mut head[p * n..(p + 1) * n];
    let row_q = &mut tail[..n];
    for k in 0..n {
        let x = row_p[k];
        let y = row_q[k];
        row_p[k] = c * x - s * y;
        row_q[k] = s * x + c * y;
    }
    row_p[p] = app - t * apq;
    row_q[q] = aqq + t * apq;
    row_p[q] = 0.0;
    row_q[p] = 0.0;
    for k in 0..n {
        if k != p && k != q {
            a[k * n + p] = a[p * n + k];
            a[k * n + q] = a[q * n + k];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| libm::fabs(x - y) <= tol)
    }

    #[test]
    fn identity_and_single_edge() {
        let eig = symmetric_eigenvalues(&DenseSymmetricMatrix::identity(3)).unwrap();
        assert_eq!(eig, vec![1.0, 1.0, 1.0]);
        let m = DenseSymmetricMatrix::from_row_major(2, vec![1.0, -1.0, -1.0, 1.0]).unwrap();
        assert!(close(&symmetric_eigenvalues(&m).unwrap(), &[0.0, 2.0], 1e-12));
    }

    #[test]
    fn zero_and_empty() {
        assert!(symmetric_eigenvalues(&DenseSymmetricMatrix::zeros(0)).unwrap().is_empty());
        assert_eq!(symmetric_eigenvalues(&DenseSymmetricMatrix::zeros(2)).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn tridiagonal_closed_form() {
        // path Laplacian-like tridiagonal(−1, 2, −1): eigenvalues 2 − 2cos(kπ/(n+1))
        let n = 12;
        let m = DenseSymmetricMatrix::from_fn(n, |i, j| match j - i {
            0 => 2.0,
            1 => -1.0,
            _ => 0.0,
        });
        let mut expected: Vec<f64> = (1..=n)
            .map(|k| 2.0 - 2.0 * libm::cos(k as f64 * core::f64::consts::PI / (n as f64 + 1.0)))
            .collect();
        expected.sort_by(f64::total_cmp);
        assert!(close(&symmetric_eigenvalues(&m).unwrap(), &expected, 1e-10));
    }

    #[test]
    fn reports_non_convergence() {
        let m = DenseSymmetricMatrix::from_fn(6, |i, j| 1.0 / (1.0 + i as f64 + j as f64));
        let opts = JacobiOptions { tolerance: 1e-15, max_sweeps: 1 };
        assert_eq!(symmetric_eigenvalues_with(&m, opts), Err(Error::NoConvergence { sweeps: 1 }));
    }
}
