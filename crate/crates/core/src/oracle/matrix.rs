use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A real symmetric matrix stored densely, row-major.
///
/// Every constructor writes `(i, j)` and `(j, i)` from the same value, so the
/// stored entries are exactly symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl DenseSymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        DenseSymmetricMatrix { order, data: vec![0.0; order * order] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.data[i * order + i] = 1.0;
        }
        m
    }

    /// Evaluates `f` on the upper triangle and mirrors it.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Rejects input that is not exactly symmetric.
    pub fn from_row_major(order: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != order * order {
            return Err(Error::SizeMismatch { expected: order * order, found: data.len() });
        }
        for i in 0..order {
            for j in i + 1..order {
                if data[i * order + j] != data[j * order + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(DenseSymmetricMatrix { order, data })
    }

    /// Symmetric part `(A + Aᵀ)/2` of an arbitrary square matrix.
    pub fn symmetrize(order: usize, data: &[f64]) -> Self {
        Self::from_fn(order, |i, j| 0.5 * (data[i * order + j] + data[j * order + i]))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    /// Adds to `(i, j)` and, off the diagonal, to `(j, i)`.
    pub fn add(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] += value;
        if i != j {
            self.data[j * self.order + i] += value;
        }
    }

    pub fn add_assign(&mut self, other: &DenseSymmetricMatrix) {
        assert_eq!(self.order, other.order);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn as_row_major(&self) -> &[f64] {
        &self.data
    }

    pub(crate) fn into_row_major(self) -> Vec<f64> {
        self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &x| libm::fmax(m, libm::fabs(x)))
    }

    pub fn max_abs_off_diagonal(&self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.order {
            for j in 0..self.order {
                if i != j {
                    m = libm::fmax(m, libm::fabs(self.get(i, j)));
                }
            }
        }
        m
    }

    /// Plain product of two square matrices, row-major.
    pub fn multiply(order: usize, a: &[f64], b: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; order * order];
        for i in 0..order {
            for k in 0..order {
                let aik = a[i * order + k];
                if aik == 0.0 {
                    continue;
                }
                let row_b = &b[k * order..(k + 1) * order];
                let row_out = &mut out[i * order..(i + 1) * order];
                for (o, &x) in row_out.iter_mut().zip(row_b) {
                    *o += aik * x;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_are_symmetric() {
        let m = DenseSymmetricMatrix::from_fn(3, |i, j| (i * 3 + j) as f64);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), m.get(j, i));
            }
        }
        assert!(DenseSymmetricMatrix::from_row_major(2, vec![1.0, 2.0, 2.5, 1.0]).is_err());
        assert!(DenseSymmetricMatrix::from_row_major(2, vec![1.0, 2.0, 2.0, 1.0]).is_ok());
        assert!(DenseSymmetricMatrix::from_row_major(2, vec![1.0]).is_err());
    }

    #[test]
    fn product_and_trace() {
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [0.0, 1.0, 1.0, 0.0];
        assert_eq!(DenseSymmetricMatrix::multiply(2, &a, &b), vec![2.0, 1.0, 4.0, 3.0]);
        assert_eq!(DenseSymmetricMatrix::identity(4).trace(), 4.0);
    }
}
