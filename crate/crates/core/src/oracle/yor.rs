//! Young's orthogonal form of the irreducible representation `[α]`.
//!
//! The basis is indexed by standard Young tableaux of shape `α`. For the
//! adjacent transposition `s_i = (i, i+1)` let `d = c(i+1) − c(i)`, where
//! `c(x) = col − row` of the box holding `x`. Then `s_i` fixes `e_T` when
//! `i, i+1` share a row, negates it when they share a column, and otherwise
//! acts on `{e_T, e_{s_i T}}` by `(1/d) e_T + √(1 − 1/d²) e_{s_i T}`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::DenseSymmetricMatrix;
use crate::Partition;

/// A standard Young tableau, stored as the row of each entry `1..=n`
/// (its Yamanouchi word). Columns follow from the rows.
pub type StandardTableau = Vec<usize>;

/// Standard Young tableaux of shape `alpha`, in lexicographic order of
/// their row words.
pub fn standard_tableaux(alpha: &Partition) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    let mut filled = vec![0usize; alpha.len()];
    let mut word = Vec::with_capacity(alpha.size());
    place(alpha, &mut filled, &mut word, &mut out);
    out
}

fn place(alpha: &Partition, filled: &mut [usize], word: &mut Vec<usize>, out: &mut Vec<StandardTableau>) {
    if word.len() == alpha.size() {
        out.push(word.clone());
        return;
    }
    for row in 0..alpha.len() {
        let fits = filled[row] < alpha.get(row) && (row == 0 || filled[row - 1] > filled[row]);
        if fits {
            filled[row] += 1;
            word.push(row);
            place(alpha, filled, word, out);
            word.pop();
            filled[row] -= 1;
        }
    }
}

/// `(row, col)` of every entry.
fn positions(word: &[usize]) -> Vec<(usize, usize)> {
    let mut filled: Vec<usize> = Vec::new();
    word.iter()
        .map(|&row| {
            if filled.len() <= row {
                filled.resize(row + 1, 0);
            }
            let col = filled[row];
            filled[row] += 1;
            (row, col)
        })
        .collect()
}

/// Matrices of `[α]` in Young's orthogonal form.
#[derive(Clone, Debug)]
pub struct YoungOrthogonalForm {
    n: usize,
    dim: usize,
    /// `generators[i]` represents `(i+1, i+2)` (1-based values), row-major.
    generators: Vec<Vec<f64>>,
}

impl YoungOrthogonalForm {
    pub fn new(alpha: &Partition) -> Self {
        let tableaux = standard_tableaux(alpha);
        let index: BTreeMap<&[usize], usize> =
            tableaux.iter().enumerate().map(|(k, t)| (t.as_slice(), k)).collect();
        let dim = tableaux.len();
        let n = alpha.size();
        let mut generators = Vec::with_capacity(n.saturating_sub(1));
        for i in 0..n.saturating_sub(1) {
            let mut m = vec![0.0; dim * dim];
            for (k, word) in tableaux.iter().enumerate() {
                let pos = positions(word);
                let (r1, c1) = pos[i];
                let (r2, c2) = pos[i + 1];
                if r1 == r2 {
                    m[k * dim + k] = 1.0;
                } else if c1 == c2 {
                    m[k * dim + k] = -1.0;
                } else {
                    let d = (c2 as f64 - r2 as f64) - (c1 as f64 - r1 as f64);
                    let mut swapped = word.clone();
                    swapped.swap(i, i + 1);
                    let other = index[swapped.as_slice()];
                    m[k * dim + k] = 1.0 / d;
                    m[k * dim + other] = libm::sqrt(1.0 - 1.0 / (d * d));
                }
            }
            generators.push(m);
        }
        YoungOrthogonalForm { n, dim, generators }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(i, i+1)`, 1-based, as a raw row-major matrix.
    pub fn adjacent(&self, i: usize) -> &[f64] {
        &self.generators[i - 1]
    }

    /// `(a b)` for `1 ≤ a < b ≤ n`, as `s_a ⋯ s_{b−2} s_{b−1} s_{b−2} ⋯ s_a`.
    pub fn transposition(&self, a: usize, b: usize) -> DenseSymmetricMatrix {
        assert!(1 <= a && a < b && b <= self.n, "need 1 <= a < b <= n");
        let mut m = self.adjacent(b - 1).to_vec();
        for i in (a..b - 1).rev() {
            let s = self.adjacent(i);
            m = DenseSymmetricMatrix::multiply(self.dim, s, &DenseSymmetricMatrix::multiply(self.dim, &m, s));
        }
        DenseSymmetricMatrix::symmetrize(self.dim, &m)
    }
}

/// `T^α((a b))` in Young's orthogonal form.
pub fn yor_matrix(alpha: &Partition, a: usize, b: usize) -> DenseSymmetricMatrix {
    YoungOrthogonalForm::new(alpha).transposition(a, b)
}
