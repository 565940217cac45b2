//! Ranking of permutations by the factorial number system.
//!
//! A permutation of `{0,…,n−1}` in one-line notation `π` has Lehmer code
//! `L_i = |{ j > i : π_j < π_i }|` and rank `Σ L_i · (n−1−i)!`. Rank 0 is
//! the identity, rank `n!−1` the reversal.

use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationIndex {
    n: usize,
    factorials: Vec<usize>,
}

impl PermutationIndex {
    /// Panics if `n!` does not fit in `usize`.
    pub fn new(n: usize) -> Self {
        let mut factorials = Vec::with_capacity(n + 1);
        factorials.push(1usize);
        for k in 1..=n {
            let next = factorials[k - 1].checked_mul(k).expect("n! overflows usize");
            factorials.push(next);
        }
        PermutationIndex { n, factorials }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n!`
    pub fn len(&self) -> usize {
        self.factorials[self.n]
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn rank(&self, perm: &[usize]) -> usize {
        debug_assert_eq!(perm.len(), self.n);
        let mut rank = 0;
        for i in 0..self.n {
            let smaller_after = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
            rank += smaller_after * self.factorials[self.n - 1 - i];
        }
        rank
    }

    pub fn unrank(&self, mut rank: usize) -> Vec<usize> {
        debug_assert!(rank < self.len());
        let mut pool: Vec<usize> = (0..self.n).collect();
        let mut perm = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let f = self.factorials[self.n - 1 - i];
            let digit = rank / f;
            rank %= f;
            perm.push(pool.remove(digit));
        }
        perm
    }
}

/// `(a ∘ b)(x) = a(b(x))`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inverse(a: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rank_unrank_round_trip() {
        for n in 0..=6 {
            let idx = PermutationIndex::new(n);
            let mut seen = alloc::collections::BTreeSet::new();
            for k in 0..idx.len() {
                let p = idx.unrank(k);
                assert_eq!(idx.rank(&p), k);
                seen.insert(p);
            }
            assert_eq!(seen.len(), idx.len());
        }
    }

    #[test]
    fn ends_of_the_order() {
        let idx = PermutationIndex::new(4);
        assert_eq!(idx.unrank(0), vec![0, 1, 2, 3]);
        assert_eq!(idx.unrank(23), vec![3, 2, 1, 0]);
        assert_eq!(idx.rank(&[1, 0, 2, 3]), 6);
    }

    #[test]
    fn group_laws() {
        let idx = PermutationIndex::new(5);
        for k in (0..idx.len()).step_by(7) {
            let a = idx.unrank(k);
            let b = idx.unrank((k * 31 + 5) % idx.len());
            let ab = compose(&a, &b);
            assert_eq!(compose(&inverse(&a), &ab), b);
            assert_eq!(compose(&a, &inverse(&a)), idx.unrank(0));
        }
    }
}
