use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::tableau::{SkewShape, SkewTableau};
use crate::partitions::{componentwise_leq, partitions_inside, Partition, WeakComposition};
use crate::{Error, Result};

/// Depth-first filler over the boxes of a skew shape in reading order
/// (right to left within a row, top row first). Each partial filling is a
/// prefix of the reading word, so semistandardness and the lattice condition
/// are both checked as boxes are placed.
struct Filler<'a> {
    shape: &'a SkewShape,
    filter: Option<&'a [usize]>,
    /// Boxes `(row, col)` in reading order.
    order: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a SkewShape, filter: Option<&'a [usize]>) -> Self {
        let order = (0..shape.rows())
            .flat_map(|i| shape.row_span(i).rev().map(move |j| (i, j)))
            .collect();
        let grid = (0..shape.rows()).map(|i| vec![0; shape.outer().get(i)]).collect();
        Filler { shape, filter, order, grid, counts: Vec::new() }
    }

    /// Calls `visit` for every LR filling, in lexicographic order of reading
    /// words.
    fn run(&mut self, visit: &mut dyn FnMut(&[Vec<usize>])) {
        self.step(0, visit);
    }

    fn step(&mut self, k: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if k == self.order.len() {
            visit(&self.grid);
            return;
        }
        let (i, j) = self.order[k];
        // Row weakly increases left to right: at most the right neighbour.
        let hi_row = if j + 1 < self.shape.outer().get(i) { self.grid[i][j + 1] } else { usize::MAX };
        // Column strictly increases downward when the box above is skew.
        let lo = if i > 0 && j >= self.shape.inner().get(i - 1) { self.grid[i - 1][j] + 1 } else { 1 };
        let hi = hi_row.min(self.counts.len() + 1);
        for v in lo..=hi {
            if v > 1 && self.counts[v - 1 - 1] <= self.counts.get(v - 1).copied().unwrap_or(0) {
                continue;
            }
            if let Some(gamma) = self.filter {
                if self.counts.get(v - 1).copied().unwrap_or(0) >= gamma.get(v - 1).copied().unwrap_or(0) {
                    continue;
                }
            }
            if self.counts.len() < v {
                self.counts.push(0);
            }
            self.counts[v - 1] += 1;
            self.grid[i][j] = v;
            self.step(k + 1, visit);
            self.grid[i][j] = 0;
            self.counts[v - 1] -= 1;
            if self.counts[v - 1] == 0 && self.counts.len() == v {
                self.counts.pop();
            }
        }
    }
}

fn grid_to_rows(shape: &SkewShape, grid: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..shape.rows()).map(|i| grid[i][shape.row_span(i)].to_vec()).collect()
}

/// All LR tableaux of the given shape, optionally restricted to one content
/// (compared modulo trailing zeros). Ordered lexicographically by reading
/// word.
pub fn enumerate_lr_tableaux(shape: &SkewShape, content: Option<&Partition>) -> Vec<SkewTableau> {
    let filter = content.map(|c| c.parts());
    if let Some(c) = content {
        if c.size() != shape.box_count() {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    Filler::new(shape, filter).run(&mut |grid| {
        out.push(SkewTableau::from_parts_unchecked(shape.clone(), grid_to_rows(shape, grid)));
    });
    out
}

fn count_lr(shape: &SkewShape, content: &Partition) -> u64 {
    let mut count = 0u64;
    Filler::new(shape, Some(content.parts())).run(&mut |_| count += 1);
    count
}

/// `c^α_{β,γ}`: the number of LR tableaux of shape `α/β` and content `γ`.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u64> {
    LrCache::new().lr(alpha, beta, gamma)
}

/// `c^α_{β¹,…,βᵖ}`, the multiplicity of `[β¹]⊗⋯⊗[βᵖ]` in `[α]` restricted
/// to `S_{|β¹|} × ⋯ × S_{|βᵖ|}`.
pub fn multi_lr_coefficient(alpha: &Partition, betas: &[Partition]) -> Result<u64> {
    LrCache::new().multi_lr(alpha, betas)
}

/// An `(α,η)`-admissible tuple together with its multi-LR coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleTuple {
    pub parts: Vec<Partition>,
    pub coefficient: u64,
}

/// A tuple of weak compositions `γⁱ ⊨₀ η_i` with `Σ γⁱ = α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelaxedTuple {
    pub parts: Vec<WeakComposition>,
}

/// `Adm(α,η)` with coefficients, in reverse lexicographic order of the tuple.
pub fn enumerate_admissible(alpha: &Partition, eta: &Partition) -> Result<Vec<AdmissibleTuple>> {
    LrCache::new().admissible(alpha, eta)
}

/// Memo tables for LR coefficients and admissible sets.
///
/// Results never depend on what the cache already holds; one cache may be
/// reused across any sequence of calls. Concurrent users should each hold
/// their own.
#[derive(Clone, Debug, Default)]
pub struct LrCache {
    pairs: BTreeMap<(Partition, Partition, Partition), u64>,
    multi: BTreeMap<(Partition, Vec<Partition>), u64>,
    admissible: BTreeMap<(Partition, Vec<usize>), Vec<AdmissibleTuple>>,
}

impl LrCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lr(&mut self, alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u64> {
        let found = beta.size() + gamma.size();
        if found != alpha.size() {
            return Err(Error::SizeMismatch { expected: alpha.size(), found });
        }
        if !componentwise_leq(beta, alpha) || !componentwise_leq(gamma, alpha) {
            return Ok(0);
        }
        if gamma.is_empty() {
            return Ok(u64::from(alpha == beta));
        }
        let key = (alpha.clone(), beta.clone(), gamma.clone());
        if let Some(&c) = self.pairs.get(&key) {
            return Ok(c);
        }
        let shape = SkewShape::new(alpha.clone(), beta.clone())?;
        let c = count_lr(&shape, gamma);
        self.pairs.insert(key, c);
        Ok(c)
    }

    /// `c^α_{β¹,…,βᵖ} = Σ_{δ ⊢ |β¹|+⋯+|βᵖ⁻¹|} c^α_{δ,βᵖ} · c^δ_{β¹,…,βᵖ⁻¹}`.
    pub fn multi_lr(&mut self, alpha: &Partition, betas: &[Partition]) -> Result<u64> {
        let found: usize = betas.iter().map(Partition::size).sum();
        if found != alpha.size() || betas.is_empty() {
            return Err(Error::SizeMismatch { expected: alpha.size(), found });
        }
        match betas {
            [only] => return Ok(u64::from(only == alpha)),
            [b1, b2] => return self.lr(alpha, b1, b2),
            _ => {}
        }
        let key = (alpha.clone(), betas.to_vec());
        if let Some(&c) = self.multi.get(&key) {
            return Ok(c);
        }
        let (last, head) = betas.split_last().expect("p > 2");
        let zeta1 = alpha.size() - last.size();
        let mut total = 0u64;
        for delta in partitions_inside(zeta1, alpha) {
            let outer = self.lr(alpha, &delta, last)?;
            if outer == 0 {
                continue;
            }
            let inner = self.multi_lr(&delta, head)?;
            total = outer
                .checked_mul(inner)
                .and_then(|t| total.checked_add(t))
                .ok_or(Error::Overflow("multi-LR coefficient"))?;
        }
        self.multi.insert(key, total);
        Ok(total)
    }

    /// `Adm(α,η)`: every tuple `(β¹,…,βᵖ)`, `βⁱ ⊢ η_i`, with positive multi-LR
    /// coefficient.
    ///
    /// Built by peeling off the last block: `[α]` restricted to
    /// `S_{ζ₁} × S_{ηₚ}` gives pairs `(δ, βᵖ)`, and `δ` is expanded
    /// recursively over `(η₁,…,ηₚ₋₁)`.
    pub fn admissible(&mut self, alpha: &Partition, eta: &Partition) -> Result<Vec<AdmissibleTuple>> {
        if alpha.size() != eta.size() {
            return Err(Error::SizeMismatch { expected: alpha.size(), found: eta.size() });
        }
        self.admissible_blocks(alpha, eta.parts())
    }

    fn admissible_blocks(&mut self, alpha: &Partition, blocks: &[usize]) -> Result<Vec<AdmissibleTuple>> {
        let key = (alpha.clone(), blocks.to_vec());
        if let Some(found) = self.admissible.get(&key) {
            return Ok(found.clone());
        }
        let result = match blocks {
            [] => Vec::new(),
            [_] => vec![AdmissibleTuple { parts: vec![alpha.clone()], coefficient: 1 }],
            _ => {
                let (&last, head) = blocks.split_last().expect("nonempty");
                let zeta1 = alpha.size() - last;
                let mut acc: BTreeMap<Vec<Partition>, u64> = BTreeMap::new();
                for delta in partitions_inside(zeta1, alpha) {
                    for beta_last in partitions_inside(last, alpha) {
                        let c = self.lr(alpha, &delta, &beta_last)?;
                        if c == 0 {
                            continue;
                        }
                        for sub in self.admissible_blocks(&delta, head)? {
                            let mut parts = sub.parts;
                            parts.push(beta_last.clone());
                            let add = c
                                .checked_mul(sub.coefficient)
                                .ok_or(Error::Overflow("multi-LR coefficient"))?;
                            let slot = acc.entry(parts).or_insert(0);
                            *slot = slot.checked_add(add).ok_or(Error::Overflow("multi-LR coefficient"))?;
                        }
                    }
                }
                let mut tuples: Vec<AdmissibleTuple> = acc
                    .into_iter()
                    .map(|(parts, coefficient)| AdmissibleTuple { parts, coefficient })
                    .collect();
                tuples.sort_by(|a, b| Reverse(&a.parts).cmp(&Reverse(&b.parts)));
                tuples
            }
        };
        self.admissible.insert(key, result.clone());
        Ok(result)
    }
}

/// `Adm*(α,η)`: tuples of weak compositions `γⁱ ⊨₀ η_i` summing to `α`
/// entry by entry. Reverse lexicographic order.
pub fn enumerate_admissible_star(alpha: &Partition, eta: &Partition) -> Result<Vec<RelaxedTuple>> {
    if alpha.size() != eta.size() {
        return Err(Error::SizeMismatch { expected: alpha.size(), found: eta.size() });
    }
    let p = eta.len();
    let rows = alpha.len();
    let mut out = Vec::new();
    if p == 0 {
        out.push(RelaxedTuple { parts: Vec::new() });
        return Ok(out);
    }
    // grid[i][k] = γⁱ_k; filled row k of α at a time, spreading α_k over the
    // p blocks without exceeding what each block still has to place.
    let mut grid = vec![vec![0usize; rows]; p];
    let mut remaining: Vec<usize> = eta.parts().to_vec();
    spread(alpha, 0, 0, alpha.get(0), &mut grid, &mut remaining, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

fn spread(
    alpha: &Partition,
    row: usize,
    block: usize,
    left_in_row: usize,
    grid: &mut Vec<Vec<usize>>,
    remaining: &mut Vec<usize>,
    out: &mut Vec<RelaxedTuple>,
) {
    let p = grid.len();
    if row == alpha.len() {
        if remaining.iter().all(|&r| r == 0) {
            out.push(RelaxedTuple {
                parts: grid.iter().map(|g| WeakComposition::new(g.clone())).collect(),
            });
        }
        return;
    }
    if block == p - 1 {
        if left_in_row > remaining[block] {
            return;
        }
        grid[block][row] = left_in_row;
        remaining[block] -= left_in_row;
        spread(alpha, row + 1, 0, alpha.get(row + 1), grid, remaining, out);
        remaining[block] += left_in_row;
        grid[block][row] = 0;
        return;
    }
    for x in 0..=left_in_row.min(remaining[block]) {
        grid[block][row] = x;
        remaining[block] -= x;
        spread(alpha, row, block + 1, left_in_row - x, grid, remaining, out);
        remaining[block] += x;
    }
    grid[block][row] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::content;
    use crate::partitions::enumerate_partitions;
    use crate::partitions::sort_to_partition;

    fn all_tuples(eta: &Partition) -> Vec<Vec<Partition>> {
        let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
        for &block in eta.iter() {
            let choices = enumerate_partitions(block);
            out = out
                .into_iter()
                .flat_map(|t| {
                    choices.iter().map(move |c| {
                        let mut t = t.clone();
                        t.push(c.clone());
                        t
                    })
                })
                .collect();
        }
        out
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn wc(parts: &[usize]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    #[test]
    fn lr_tableaux_of_6531_over_521() {
        let shape = SkewShape::new(p(&[6, 5, 3, 1]), p(&[5, 2, 1])).unwrap();
        let all = enumerate_lr_tableaux(&shape, None);
        assert_eq!(all.len(), 18);
        let only = enumerate_lr_tableaux(&shape, Some(&p(&[6, 1])));
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].rows(), &[vec![1], vec![1, 1, 1], vec![1, 2], vec![1]]);
        let words: Vec<_> = all.iter().map(|t| t.reading_word()).collect();
        assert!(words.windows(2).all(|w| w[0] < w[1]), "sorted by reading word");
        for t in &all {
            assert!(t.is_lr());
            assert!(SkewTableau::new(t.shape().clone(), t.rows().to_vec()).is_ok());
        }
    }

    #[test]
    fn single_box_shape() {
        for n in 1..6 {
            let shape = SkewShape::new(Partition::row(n), Partition::row(n - 1)).unwrap();
            let all = enumerate_lr_tableaux(&shape, None);
            assert_eq!(all.len(), 1);
            assert_eq!(all[0].rows()[0], vec![1]);
        }
    }

    #[test]
    fn coefficients_from_the_restriction_example() {
        let a = p(&[4, 2, 1]);
        assert_eq!(lr_coefficient(&a, &p(&[3, 1]), &p(&[2, 1])).unwrap(), 2);
        assert_eq!(lr_coefficient(&a, &p(&[4]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&a, &p(&[4]), &p(&[3])).unwrap(), 0);
        assert!(lr_coefficient(&a, &p(&[4]), &p(&[1])).is_err());
        // β not inside α
        assert_eq!(lr_coefficient(&a, &p(&[1, 1, 1, 1]), &p(&[3])).unwrap(), 0);
    }

    #[test]
    fn multi_lr_cases() {
        let a = p(&[4, 2, 1]);
        assert_eq!(multi_lr_coefficient(&a, &[p(&[3, 1]), p(&[2, 1])]).unwrap(), 2);
        assert_eq!(multi_lr_coefficient(&a, core::slice::from_ref(&a)).unwrap(), 1);
        assert_eq!(multi_lr_coefficient(&a, &[p(&[3, 1, 1, 1, 1])]).unwrap(), 0);
        assert_eq!(multi_lr_coefficient(&p(&[6, 1]), &[p(&[4]), p(&[2, 1])]).unwrap(), 1);
        assert!(multi_lr_coefficient(&a, &[p(&[3])]).is_err());
        assert!(multi_lr_coefficient(&a, &[]).is_err());
        // (2,1) restricted to S_1^3 is 2 copies of the trivial tuple
        assert_eq!(multi_lr_coefficient(&p(&[2, 1]), &[p(&[1]), p(&[1]), p(&[1])]).unwrap(), 2);
    }

    #[test]
    fn admissible_pairs_of_421_on_43() {
        let adm = enumerate_admissible(&p(&[4, 2, 1]), &p(&[4, 3])).unwrap();
        let expected = [
            (&[4][..], &[2, 1][..], 1),
            (&[3, 1], &[3], 1),
            (&[3, 1], &[2, 1], 2),
            (&[3, 1], &[1, 1, 1], 1),
            (&[2, 2], &[3], 1),
            (&[2, 2], &[2, 1], 1),
            (&[2, 1, 1], &[3], 1),
            (&[2, 1, 1], &[2, 1], 1),
        ];
        assert_eq!(adm.len(), expected.len());
        for (t, (b, g, c)) in adm.iter().zip(expected) {
            assert_eq!(t.parts, vec![p(b), p(g)]);
            assert_eq!(t.coefficient, c);
        }
    }

    #[test]
    fn admissible_for_defining_and_trivial() {
        let eta = p(&[3, 2, 2]);
        let adm = enumerate_admissible(&Partition::hook(7), &eta).unwrap();
        let mut expected = vec![
            AdmissibleTuple { parts: vec![p(&[3]), p(&[2]), p(&[2])], coefficient: 2 },
            AdmissibleTuple { parts: vec![p(&[2, 1]), p(&[2]), p(&[2])], coefficient: 1 },
            AdmissibleTuple { parts: vec![p(&[3]), p(&[1, 1]), p(&[2])], coefficient: 1 },
            AdmissibleTuple { parts: vec![p(&[3]), p(&[2]), p(&[1, 1])], coefficient: 1 },
        ];
        expected.sort_by(|a, b| b.parts.cmp(&a.parts));
        assert_eq!(adm, expected);

        let trivial = enumerate_admissible(&Partition::row(7), &eta).unwrap();
        assert_eq!(trivial, vec![AdmissibleTuple { parts: vec![p(&[3]), p(&[2]), p(&[2])], coefficient: 1 }]);
        assert!(enumerate_admissible(&Partition::row(6), &eta).is_err());
    }

    #[test]
    fn admissible_star_cases() {
        let star = enumerate_admissible_star(&Partition::hook(5), &p(&[3, 1, 1])).unwrap();
        assert_eq!(
            star,
            vec![
                RelaxedTuple { parts: vec![wc(&[3]), wc(&[1]), wc(&[0, 1])] },
                RelaxedTuple { parts: vec![wc(&[3]), wc(&[0, 1]), wc(&[1])] },
                RelaxedTuple { parts: vec![wc(&[2, 1]), wc(&[1]), wc(&[1])] },
            ]
        );
        let trivial = enumerate_admissible_star(&Partition::row(5), &p(&[3, 2])).unwrap();
        assert_eq!(trivial, vec![RelaxedTuple { parts: vec![wc(&[3]), wc(&[2])] }]);
        let square = enumerate_admissible_star(&p(&[2, 2]), &p(&[2, 2])).unwrap();
        assert_eq!(
            square,
            vec![
                RelaxedTuple { parts: vec![wc(&[2]), wc(&[0, 2])] },
                RelaxedTuple { parts: vec![wc(&[1, 1]), wc(&[1, 1])] },
                RelaxedTuple { parts: vec![wc(&[0, 2]), wc(&[2])] },
            ]
        );
    }

    #[test]
    fn admissible_agrees_with_brute_force_product() {
        let mut cache = LrCache::new();
        for n in 1..=7 {
            for eta in enumerate_partitions(n) {
                for alpha in enumerate_partitions(n) {
                    let adm = cache.admissible(&alpha, &eta).unwrap();
                    let mut brute: Vec<AdmissibleTuple> = all_tuples(&eta)
                        .into_iter()
                        .filter_map(|parts| {
                            let c = multi_lr_coefficient(&alpha, &parts).unwrap();
                            (c > 0).then_some(AdmissibleTuple { parts, coefficient: c })
                        })
                        .collect();
                    brute.sort_by(|a, b| b.parts.cmp(&a.parts));
                    assert_eq!(adm, brute, "alpha {alpha} eta {eta}");
                }
            }
        }
    }

    #[test]
    fn tableau_contents_dominate_minimum() {
        let shape = SkewShape::new(p(&[6, 5, 3, 1]), p(&[5, 2, 1])).unwrap();
        let minimum = sort_to_partition(&[1, 3, 2, 1]);
        for t in enumerate_lr_tableaux(&shape, None) {
            let c = content(&t.reading_word());
            assert!(crate::partitions::dominance_leq(&minimum, &c));
        }
    }
}
