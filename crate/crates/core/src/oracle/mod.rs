//! Brute-force matrices and a dense eigensolver, used to check the exact
//! spectra numerically.

mod eigen;
mod matrix;
mod permutation;
mod yor;

pub use eigen::{
    symmetric_eigenvalues, symmetric_eigenvalues_with, JacobiOptions, DEFAULT_MAX_SWEEPS,
    DEFAULT_TOLERANCE,
};
pub use matrix::DenseSymmetricMatrix;
pub use permutation::{compose, inverse, PermutationIndex};
pub use yor::{standard_tableaux, yor_matrix, StandardTableau, YoungOrthogonalForm};

use alloc::vec::Vec;

use crate::partitions::dimension;
use crate::spectra::{MultipartiteShape, SpectrumMultiset};
use crate::{Error, Partition, Result};

/// Largest graph accepted by [`graph_laplacian`].
pub const GRAPH_MAX_N: usize = 64;
/// Default cap on `n` for the `n! × n!` Cayley Laplacian.
pub const CAYLEY_MAX_N: usize = 6;
/// Opt-in cap (5040 × 5040).
pub const CAYLEY_MAX_N_OPT_IN: usize = 7;
/// Largest `f_α` accepted by [`rep_block_matrix`].
pub const REP_DIM_CAP: usize = 2000;
/// Default tolerance when comparing exact and numerical spectra.
pub const DEFAULT_COMPARE_TOLERANCE: f64 = 1e-8;

/// `Δ = D − A` of `K_η` on vertices `0..n` in block order.
pub fn graph_laplacian(shape: &MultipartiteShape) -> Result<DenseSymmetricMatrix> {
    let n = shape.n();
    if n > GRAPH_MAX_N {
        return Err(Error::CapExceeded { what: "n", value: n, cap: GRAPH_MAX_N });
    }
    let mut m = DenseSymmetricMatrix::zeros(n);
    for (a, b) in shape.edges() {
        m.add(a - 1, b - 1, -1.0);
        m.add(a - 1, a - 1, 1.0);
        m.add(b - 1, b - 1, 1.0);
    }
    Ok(m)
}

/// `(Δ f)(π) = Σ_e [f(π) − f(πe)]` over the edge transpositions `e` of `K_η`,
/// with permutations ordered by [`PermutationIndex`]. `n ≤ 6`, or `n ≤ 7`
/// when `allow_n7` is set.
pub fn cayley_laplacian(shape: &MultipartiteShape, allow_n7: bool) -> Result<DenseSymmetricMatrix> {
    let n = shape.n();
    let cap = if allow_n7 { CAYLEY_MAX_N_OPT_IN } else { CAYLEY_MAX_N };
    if n > cap {
        return Err(Error::CapExceeded { what: "n", value: n, cap });
    }
    let index = PermutationIndex::new(n);
    let edges = shape.edges();
    let degree = edges.len() as f64;
    let mut m = DenseSymmetricMatrix::zeros(index.len());
    for k in 0..index.len() {
        let pi = index.unrank(k);
        m.set(k, k, degree);
        for &(a, b) in &edges {
            let mut pe = pi.clone();
            pe.swap(a - 1, b - 1);
            let j = index.rank(&pe);
            // πe ranges over distinct neighbours; set() writes both (k, j)
            // and (j, k), which agree by symmetry of the edge relation.
            m.set(k, j, -1.0);
        }
    }
    Ok(m)
}

/// `T^α[W(K_η)] = Σ_{edges (a,b)} T^α((a b))` in Young's orthogonal form.
pub fn rep_block_matrix(alpha: &Partition, shape: &MultipartiteShape) -> Result<DenseSymmetricMatrix> {
    if alpha.size() != shape.n() {
        return Err(Error::SizeMismatch { expected: shape.n(), found: alpha.size() });
    }
    let f = dimension(alpha)?;
    if f > REP_DIM_CAP as u128 {
        return Err(Error::CapExceeded { what: "f_alpha", value: f as usize, cap: REP_DIM_CAP });
    }
    let yor = YoungOrthogonalForm::new(alpha);
    let mut m = DenseSymmetricMatrix::zeros(yor.dimension());
    for (a, b) in shape.edges() {
        m.add_assign(&yor.transposition(a, b));
    }
    Ok(m)
}

/// Outcome of pairing an exact spectrum with numerical eigenvalues.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumComparison {
    pub passed: bool,
    pub worst_deviation: f64,
    /// Position (after sorting) of the worst pair, `None` when empty.
    pub worst_index: Option<usize>,
    pub tolerance: f64,
}

/// Sorts both sides and pairs them positionally. Unequal lengths are an
/// error: they mean the dimension bookkeeping is wrong, not the values.
pub fn compare_spectra(exact: &SpectrumMultiset, numeric: &[f64], tol: f64) -> Result<SpectrumComparison> {
    let total = exact.total();
    if total != numeric.len() as u128 {
        return Err(Error::SizeMismatch { expected: total as usize, found: numeric.len() });
    }
    let mut sorted: Vec<f64> = numeric.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut worst = 0.0f64;
    let mut worst_index = None;
    for (i, (e, x)) in exact.expanded().into_iter().zip(&sorted).enumerate() {
        let dev = libm::fabs(e as f64 - x);
        if worst_index.is_none() || dev > worst || dev.is_nan() {
            worst = dev;
            worst_index = Some(i);
        }
    }
    Ok(SpectrumComparison { passed: worst <= tol, worst_deviation: worst, worst_index, tolerance: tol })
}

/// Maps block eigenvalues `λ` of `T^α[W(G)]` to Laplacian eigenvalues `|E| − λ`.
pub fn laplacian_from_generator(edges: i64, eigenvalues: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = eigenvalues.iter().map(|&x| edges as f64 - x).collect();
    out.sort_by(f64::total_cmp);
    out
}
