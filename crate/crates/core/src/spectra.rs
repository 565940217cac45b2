//! Exact spectra of `T^α[W(K_η)]`, the spectral gaps of `K_η` and of its
//! Cayley graph on `S_n`, and the per-instance check of Aldous's
//! spectral-gap identity.
//!
//! The complement of `K_η` is the disjoint union of the complete graphs
//! `K_{η_i}`, so on each component `[β¹]⊗⋯⊗[βᵖ]` of `[α]` restricted to the
//! Young subgroup `S_η` the matrix acts as the scalar `q_α − Σ q_{βⁱ}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::lr::{enumerate_admissible_star, AdmissibleTuple, LrCache, RelaxedTuple};
use crate::partitions::{dimension, enumerate_partitions, q_value, Partition};
use crate::{Error, Result};

/// Default cap on `n` for sweeps over every `α ⊢ n`.
pub const DEFAULT_MAX_N: usize = 8;

/// The complete multipartite graph `K_η` on `{1,…,n}`; block `k` holds the
/// vertices `η₁+⋯+η_{k−1}+1 ..= η₁+⋯+η_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultipartiteShape {
    eta: Partition,
}

impl MultipartiteShape {
    /// Requires a nonempty partition.
    pub fn new(eta: Partition) -> Result<Self> {
        if eta.is_empty() {
            return Err(Error::SizeMismatch { expected: 1, found: 0 });
        }
        Ok(MultipartiteShape { eta })
    }

    pub fn eta(&self) -> &Partition {
        &self.eta
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.eta.size()
    }

    /// Number of blocks.
    pub fn p(&self) -> usize {
        self.eta.len()
    }

    /// `|E| = Σ_{i<j} η_i η_j`.
    pub fn edge_count(&self) -> i64 {
        let n = self.n() as i64;
        let squares: i64 = self.eta.iter().map(|&x| (x * x) as i64).sum();
        (n * n - squares) / 2
    }

    /// `K_η = K_n`.
    pub fn is_complete_graph(&self) -> bool {
        self.eta.iter().all(|&x| x == 1)
    }

    /// Block index (0-based) of every vertex (0-based).
    pub fn block_of(&self) -> Vec<usize> {
        self.eta.iter().enumerate().flat_map(|(k, &len)| core::iter::repeat_n(k, len)).collect()
    }

    /// Edges `(a, b)` with `a < b`, 1-based, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let block = self.block_of();
        let n = self.n();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if block[a] != block[b] {
                    edges.push((a + 1, b + 1));
                }
            }
        }
        edges
    }

    fn require_edges(&self) -> Result<()> {
        if self.p() < 2 {
            return Err(Error::NoEdges);
        }
        Ok(())
    }
}

/// Exact integer eigenvalues with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SpectrumMultiset {
    entries: BTreeMap<i64, u128>,
}

impl SpectrumMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `multiplicity` copies of `eigenvalue`; zero is ignored.
    pub fn insert(&mut self, eigenvalue: i64, multiplicity: u128) -> Result<()> {
        if multiplicity == 0 {
            return Ok(());
        }
        let slot = self.entries.entry(eigenvalue).or_insert(0);
        *slot = slot.checked_add(multiplicity).ok_or(Error::Overflow("multiplicity"))?;
        Ok(())
    }

    /// `(eigenvalue, multiplicity)` in increasing eigenvalue order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u128)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn multiplicity(&self, eigenvalue: i64) -> u128 {
        self.entries.get(&eigenvalue).copied().unwrap_or(0)
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// Sum of multiplicities: the order of the underlying matrix.
    pub fn total(&self) -> u128 {
        self.entries.values().sum()
    }

    pub fn min(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    /// `Σ λ · mult`.
    pub fn trace(&self) -> i128 {
        self.entries.iter().map(|(&k, &v)| i128::from(k) * v as i128).sum()
    }

    /// Eigenvalues repeated by multiplicity, nondecreasing.
    pub fn expanded(&self) -> Vec<i64> {
        self.entries
            .iter()
            .flat_map(|(&k, &v)| core::iter::repeat_n(k, v as usize))
            .collect()
    }

    /// The smallest eigenvalue strictly above `floor`.
    pub fn next_above(&self, floor: i64) -> Option<i64> {
        self.entries.range(floor + 1..).next().map(|(&k, _)| k)
    }
}

fn check_sizes(alpha: &Partition, shape: &MultipartiteShape) -> Result<()> {
    if alpha.size() != shape.n() {
        return Err(Error::SizeMismatch { expected: shape.n(), found: alpha.size() });
    }
    Ok(())
}

fn check_cap(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        return Err(Error::CapExceeded { what: "n", value: n, cap: max_n });
    }
    Ok(())
}

/// `T^α[W(K_n)] = q_α · 1`: one eigenvalue `q_α` with multiplicity `f_α`.
pub fn complete_graph_block(alpha: &Partition) -> Result<SpectrumMultiset> {
    let mut s = SpectrumMultiset::new();
    s.insert(q_value(alpha)?, dimension(alpha)?)?;
    Ok(s)
}

/// `b^α_{γ¹,…,γᵖ} = q_α − Σ q_{γⁱ}` for arbitrary weak compositions.
pub fn b_value<P: AsRef<[usize]>>(alpha: &Partition, parts: &[P]) -> Result<i64> {
    let mut b = q_value(alpha)?;
    for part in parts {
        b = b.checked_sub(q_value(part.as_ref())?).ok_or(Error::Overflow("b"))?;
    }
    Ok(b)
}

/// `Σ_{i<j} γⁱ · γʲ`, equal to [`b_value`] whenever the `γⁱ` sum to `α`.
pub fn b_value_inner_product<P: AsRef<[usize]>>(parts: &[P]) -> Result<i64> {
    let mut total: i64 = 0;
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            let dot: usize = a.as_ref().iter().zip(b.as_ref()).map(|(x, y)| x * y).sum();
            total = total.checked_add(dot as i64).ok_or(Error::Overflow("b"))?;
        }
    }
    Ok(total)
}

/// Spectrum of `T^α[W(K_η)]`: each `(β¹,…,βᵖ) ∈ Adm(α,η)` contributes
/// `q_α − Σ q_{βⁱ}` with multiplicity `c^α_{β¹,…,βᵖ} · Π f_{βⁱ}`.
pub fn block_spectrum(alpha: &Partition, shape: &MultipartiteShape) -> Result<SpectrumMultiset> {
    block_spectrum_cached(&mut LrCache::new(), alpha, shape)
}

pub fn block_spectrum_cached(
    cache: &mut LrCache,
    alpha: &Partition,
    shape: &MultipartiteShape,
) -> Result<SpectrumMultiset> {
    check_sizes(alpha, shape)?;
    let mut s = SpectrumMultiset::new();
    for tuple in cache.admissible(alpha, shape.eta())? {
        let (eigenvalue, multiplicity) = tuple_contribution(alpha, &tuple)?;
        s.insert(eigenvalue, multiplicity)?;
    }
    Ok(s)
}

/// Eigenvalue and multiplicity contributed by one admissible tuple.
pub fn tuple_contribution(alpha: &Partition, tuple: &AdmissibleTuple) -> Result<(i64, u128)> {
    let eigenvalue = b_value(alpha, &tuple.parts)?;
    let mut multiplicity = u128::from(tuple.coefficient);
    for beta in &tuple.parts {
        multiplicity = multiplicity
            .checked_mul(dimension(beta)?)
            .ok_or(Error::Overflow("multiplicity"))?;
    }
    Ok((eigenvalue, multiplicity))
}

/// `λmax[α, W(K_η)] = B^α_η`, the largest `b` over `Adm(α,η)`.
pub fn lambda_max(alpha: &Partition, shape: &MultipartiteShape) -> Result<i64> {
    lambda_max_cached(&mut LrCache::new(), alpha, shape)
}

pub fn lambda_max_cached(cache: &mut LrCache, alpha: &Partition, shape: &MultipartiteShape) -> Result<i64> {
    check_sizes(alpha, shape)?;
    let mut best: Option<i64> = None;
    for tuple in cache.admissible(alpha, shape.eta())? {
        let b = b_value(alpha, &tuple.parts)?;
        best = Some(best.map_or(b, |m| m.max(b)));
    }
    Ok(best.expect("Adm(α,η) is never empty"))
}

/// `B̄^α_η`: the largest `Σ_{i<j} γⁱ·γʲ` over `Adm*(α,η)`.
pub fn b_bar(alpha: &Partition, shape: &MultipartiteShape) -> Result<i64> {
    check_sizes(alpha, shape)?;
    let mut best: Option<i64> = None;
    for RelaxedTuple { parts } in enumerate_admissible_star(alpha, shape.eta())? {
        let b = b_value_inner_product(&parts)?;
        best = Some(best.map_or(b, |m| m.max(b)));
    }
    Ok(best.expect("Adm*(α,η) is never empty"))
}

/// `λ₂(Δ_{K_η}) = |E| − λmax[(n−1,1), W(K_η)]`.
pub fn spectral_gap_graph(shape: &MultipartiteShape) -> Result<i64> {
    shape.require_edges()?;
    let hook = Partition::hook(shape.n());
    Ok(shape.edge_count() - lambda_max(&hook, shape)?)
}

/// `λ₂(Δ_Cay) = |E| − max_{α ≠ (n)} λmax[α, W(K_η)]`, swept over every
/// `α ⊢ n` (requires `n ≤ DEFAULT_MAX_N`).
pub fn spectral_gap_cayley(shape: &MultipartiteShape) -> Result<i64> {
    spectral_gap_cayley_capped(shape, DEFAULT_MAX_N)
}

pub fn spectral_gap_cayley_capped(shape: &MultipartiteShape, max_n: usize) -> Result<i64> {
    shape.require_edges()?;
    check_cap(shape.n(), max_n)?;
    let mut cache = LrCache::new();
    let trivial = Partition::row(shape.n());
    let mut best = i64::MIN;
    for alpha in enumerate_partitions(shape.n()) {
        if alpha != trivial {
            best = best.max(lambda_max_cached(&mut cache, &alpha, shape)?);
        }
    }
    Ok(shape.edge_count() - best)
}

/// Laplacian spectrum of `Cay(S_n, E(K_η))`: `|E| − λ` for every block
/// eigenvalue `λ`, each block counted `f_α` times. Total `n!`.
pub fn cayley_spectrum(shape: &MultipartiteShape) -> Result<SpectrumMultiset> {
    cayley_spectrum_capped(shape, DEFAULT_MAX_N)
}

pub fn cayley_spectrum_capped(shape: &MultipartiteShape, max_n: usize) -> Result<SpectrumMultiset> {
    check_cap(shape.n(), max_n)?;
    let mut cache = LrCache::new();
    let edges = shape.edge_count();
    let mut s = SpectrumMultiset::new();
    for alpha in enumerate_partitions(shape.n()) {
        let f = dimension(&alpha)?;
        for (lambda, mult) in block_spectrum_cached(&mut cache, &alpha, shape)?.iter() {
            s.insert(edges - lambda, mult.checked_mul(f).ok_or(Error::Overflow("multiplicity"))?)?;
        }
    }
    Ok(s)
}

/// `[n−1,1]` restricted to `S_η`, read off in closed form: the all-rows
/// tuple `Ψ₀` with coefficient `p − 1`, and `Ψ_i` (block `i` replaced by
/// `(η_i − 1, 1)`) with coefficient 1 for each `η_i ≥ 2`. Reverse
/// lexicographic order, matching [`LrCache::admissible`].
pub fn restriction_n_minus_1(shape: &MultipartiteShape) -> Result<Vec<AdmissibleTuple>> {
    if shape.n() < 2 {
        return Err(Error::SizeMismatch { expected: 2, found: shape.n() });
    }
    let rows: Vec<Partition> = shape.eta().iter().map(|&x| Partition::row(x)).collect();
    let mut out = Vec::new();
    if shape.p() > 1 {
        out.push(AdmissibleTuple { parts: rows.clone(), coefficient: (shape.p() - 1) as u64 });
    }
    for (i, &len) in shape.eta().iter().enumerate() {
        if len >= 2 {
            let mut parts = rows.clone();
            parts[i] = Partition::hook(len);
            out.push(AdmissibleTuple { parts, coefficient: 1 });
        }
    }
    out.sort_by(|a, b| b.parts.cmp(&a.parts));
    Ok(out)
}

/// `λmax` of one irreducible block, with its full spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaMax {
    pub alpha: Partition,
    pub lambda_max: i64,
    pub spectrum: SpectrumMultiset,
}

/// How the inequality `λmax[α] ≤ λmax[(n−1,1)]` is explained for this
/// shape; complete graphs and the rest take different routes and are kept
/// apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProofRoute {
    /// `K_n`: every block is the scalar `q_α`, and `q` is monotone in
    /// dominance. `holds` records `q_α ≤ q_{(n−1,1)}` for all `α ≠ (n)`.
    CompleteGraph { holds: bool },
    /// `η ≠ (1ⁿ)`: `B^α ≤ B̄^α ≤ B̄^{(n−1,1)} = B^{(n−1,1)}`. Each flag
    /// records one link of the chain over all `α ≠ (n)`.
    Relaxation { b_le_bbar: bool, bbar_le_hook: bool, hook_equal: bool },
}

impl ProofRoute {
    pub fn holds(&self) -> bool {
        match *self {
            ProofRoute::CompleteGraph { holds } => holds,
            ProofRoute::Relaxation { b_le_bbar, bbar_le_hook, hook_equal } => {
                b_le_bbar && bbar_le_hook && hook_equal
            }
        }
    }
}

/// Outcome of checking `λ₂(Δ_Cay(K_η)) = λ₂(Δ_{K_η})` for one shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AldousReport {
    pub shape: MultipartiteShape,
    /// `λ₂(Δ_{K_η})` from the `(n−1,1)` block.
    pub gap_graph: i64,
    /// `λ₂(Δ_Cay)` from the maximum over all nontrivial blocks.
    pub gap_cayley: i64,
    /// Every `α ⊢ n` except `(n)`, in reverse lexicographic order.
    pub per_alpha: Vec<AlphaMax>,
    /// All `α ≠ (n)` attaining the maximum `λmax`.
    pub argmax: Vec<Partition>,
    pub route: ProofRoute,
    /// `λmax[α] ≤ λmax[(n−1,1)]` for every `α ≠ (n)`.
    pub verdict: bool,
}

impl AldousReport {
    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn edge_count(&self) -> i64 {
        self.shape.edge_count()
    }
}

pub fn verify_aldous(shape: &MultipartiteShape) -> Result<AldousReport> {
    verify_aldous_capped(shape, DEFAULT_MAX_N)
}

pub fn verify_aldous_capped(shape: &MultipartiteShape, max_n: usize) -> Result<AldousReport> {
    shape.require_edges()?;
    check_cap(shape.n(), max_n)?;
    let n = shape.n();
    let trivial = Partition::row(n);
    let hook = Partition::hook(n);
    let mut cache = LrCache::new();

    let mut per_alpha = Vec::new();
    for alpha in enumerate_partitions(n) {
        if alpha == trivial {
            continue;
        }
        let spectrum = block_spectrum_cached(&mut cache, &alpha, shape)?;
        let lambda_max = spectrum.max().expect("nonempty block");
        per_alpha.push(AlphaMax { alpha, lambda_max, spectrum });
    }
    let hook_max = per_alpha
        .iter()
        .find(|a| a.alpha == hook)
        .map(|a| a.lambda_max)
        .expect("(n-1,1) is nontrivial for n >= 2");
    let best = per_alpha.iter().map(|a| a.lambda_max).max().expect("n >= 2");
    let argmax = per_alpha.iter().filter(|a| a.lambda_max == best).map(|a| a.alpha.clone()).collect();

    let route = if shape.is_complete_graph() {
        let q_hook = q_value(&hook)?;
        let mut holds = true;
        for a in &per_alpha {
            holds &= q_value(&a.alpha)? <= q_hook;
        }
        ProofRoute::CompleteGraph { holds }
    } else {
        let bbar_hook = b_bar(&hook, shape)?;
        let (mut b_le_bbar, mut bbar_le_hook) = (true, true);
        for a in &per_alpha {
            let bbar = b_bar(&a.alpha, shape)?;
            b_le_bbar &= a.lambda_max <= bbar;
            bbar_le_hook &= bbar <= bbar_hook;
        }
        ProofRoute::Relaxation { b_le_bbar, bbar_le_hook, hook_equal: bbar_hook == hook_max }
    };

    let edges = shape.edge_count();
    Ok(AldousReport {
        shape: shape.clone(),
        gap_graph: edges - hook_max,
        gap_cayley: edges - best,
        per_alpha,
        argmax,
        route,
        verdict: best <= hook_max,
    })
}
