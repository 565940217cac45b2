//! The dominance-minimal content `srt(α−β)` among LR tableaux of shape
//! `α/β`, and the greedy word that realizes it.
//!
//! For a composition `δ`, `Ω_δ` is the set of lattice words of length `|δ|`
//! that are nonincreasing on each block of `δ` (the first `δ₁` positions,
//! the next `δ₂`, and so on). Reading words of LR tableaux of shape `α/β`
//! land in `Ω_{α−β}`. The minimal sequence picks, position by position, the
//! largest symbol that keeps the prefix inside `Ω_δ`; its content is
//! `srt(δ)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::tableau::{SkewShape, SkewTableau};
use super::{is_lattice_word, ReadingWord};
use crate::partitions::{componentwise_leq, sort_to_partition, subtract, Partition};
use crate::{Error, Result};

/// Membership in `Ω_δ`: a lattice word of length `|δ|`, nonincreasing on
/// every block of `δ`. `δ` must have positive entries.
pub fn in_omega(word: &[usize], delta: &[usize]) -> bool {
    if word.len() != delta.iter().sum::<usize>() || delta.contains(&0) {
        return false;
    }
    let mut start = 0;
    for &len in delta {
        if word[start..start + len].windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        start += len;
    }
    is_lattice_word(word)
}

/// The minimal sequence `ω̂ ∈ Ω_δ`.
///
/// Rejects `δ` with a zero entry; drop rows with `α_i = β_i` first (or use
/// [`minimal_lr_tableau`], which does so).
pub fn minimal_sequence(delta: &[usize]) -> Result<ReadingWord> {
    if delta.contains(&0) {
        return Err(Error::ZeroEntry(join(delta)));
    }
    let mut word = Vec::with_capacity(delta.iter().sum());
    let mut counts: Vec<usize> = Vec::new();
    for &len in delta {
        for pos in 0..len {
            // Nonincreasing inside the block; a fresh block is unconstrained.
            // Padding a short prefix with 1's never adds a constraint.
            let cap = if pos == 0 { usize::MAX } else { *word.last().expect("pos > 0") };
            let top = cap.min(counts.len() + 1);
            let symbol = (1..=top)
                .rev()
                .find(|&s| s == 1 || counts.get(s - 1).copied().unwrap_or(0) < counts[s - 2])
                .expect("1 is always admissible");
            if counts.len() < symbol {
                counts.push(0);
            }
            counts[symbol - 1] += 1;
            word.push(symbol);
        }
    }
    Ok(ReadingWord(word))
}

/// `ν_i = |{ j ≤ i : ω_j = ω_i }|`.
pub fn running_multiplicity(word: &[usize]) -> Vec<usize> {
    let mut counts: Vec<usize> = Vec::new();
    word.iter()
        .map(|&x| {
            if counts.len() < x {
                counts.resize(x, 0);
            }
            counts[x - 1] += 1;
            counts[x - 1]
        })
        .collect()
}

/// `γ̂ = srt(α − β)`, the content every LR tableau of shape `α/β` dominates.
pub fn minimal_content(alpha: &Partition, beta: &Partition) -> Result<Partition> {
    if !componentwise_leq(beta, alpha) {
        return Err(Error::NotContained { inner: format!("{beta}"), outer: format!("{alpha}") });
    }
    if beta.size() >= alpha.size() {
        return Err(Error::SizeMismatch { expected: beta.size() + 1, found: alpha.size() });
    }
    Ok(sort_to_partition(&subtract(alpha, beta)?))
}

/// Rebuilds the LR tableau of shape `α/β` whose reading word is `word`.
///
/// The word is cut into blocks of lengths `δ = α − β` (rows with
/// `α_i = β_i` are skipped and come out empty); the blocks are stacked
/// left-aligned, row `ℓ` is shifted right by `α₁ − α_ℓ`, and the result is
/// flipped horizontally. The output is validated, so words whose blocks do
/// not stack into strictly increasing columns are rejected.
pub fn reconstruct_tableau(word: &[usize], alpha: &Partition, beta: &Partition) -> Result<SkewTableau> {
    if !componentwise_leq(beta, alpha) {
        return Err(Error::NotContained { inner: format!("{beta}"), outer: format!("{alpha}") });
    }
    let delta = subtract(alpha, beta)?;
    if word.len() != delta.size() {
        return Err(Error::SizeMismatch { expected: delta.size(), found: word.len() });
    }
    if !is_lattice_word(word) {
        return Err(Error::InvalidTableau(format!("{} is not a lattice word", join(word))));
    }
    let width = alpha.get(0);
    let rows = alpha.len();

    // Left-align the blocks, shift row ℓ right by α₁ − α_ℓ, flip every row.
    let mut shifted: Vec<Vec<Option<usize>>> = vec![vec![None; width]; rows];
    let mut start = 0;
    for (row, cells) in shifted.iter_mut().enumerate() {
        let len = delta.get(row);
        let offset = width - alpha.get(row);
        for (k, &x) in word[start..start + len].iter().enumerate() {
            cells[offset + k] = Some(x);
        }
        start += len;
    }
    let flipped: Vec<Vec<usize>> = shifted
        .into_iter()
        .map(|cells| cells.into_iter().rev().flatten().collect())
        .collect();

    let shape = SkewShape::new(alpha.clone(), beta.clone())?;
    SkewTableau::new(shape, flipped)
}

/// The LR tableau of shape `α/β` with content `srt(α − β)` built from the
/// minimal sequence of `α − β` with its zero entries removed.
pub fn minimal_lr_tableau(alpha: &Partition, beta: &Partition) -> Result<SkewTableau> {
    let delta = subtract(alpha, beta)?;
    let reduced: Vec<usize> = delta.iter().copied().filter(|&x| x != 0).collect();
    let word = minimal_sequence(&reduced)?;
    reconstruct_tableau(&word, alpha, beta)
}

fn join(parts: &[usize]) -> alloc::string::String {
    parts.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(",")
}
