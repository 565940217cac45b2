//! Littlewood–Richardson machinery.
//!
//! An LR tableau of shape `α/β` is a semistandard skew tableau whose reading
//! word (rows flipped right-to-left, then concatenated top to bottom) is a
//! lattice word. Their number with content `γ` is `c^α_{β,γ}`.

mod coefficients;
mod minimal;
mod tableau;

pub use coefficients::{
    enumerate_admissible, enumerate_admissible_star, enumerate_lr_tableaux, lr_coefficient,
    multi_lr_coefficient, AdmissibleTuple, LrCache, RelaxedTuple,
};
pub use minimal::{
    in_omega, minimal_content, minimal_lr_tableau, minimal_sequence, reconstruct_tableau,
    running_multiplicity,
};
pub use tableau::{SkewShape, SkewTableau};

use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::WeakComposition;

/// A word of positive integers, typically read off a tableau.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReadingWord(Vec<usize>);

impl ReadingWord {
    /// Panics if an entry is zero.
    pub fn new(entries: Vec<usize>) -> Self {
        assert!(entries.iter().all(|&x| x >= 1), "reading words hold positive integers");
        ReadingWord(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for ReadingWord {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for ReadingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Every prefix holds at least as many `a`s as `b`s whenever `a < b`.
///
/// It suffices to compare each symbol with its predecessor at the moment the
/// symbol is appended.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x > 1 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

/// `γ_i` = number of occurrences of `i`.
pub fn content(word: &[usize]) -> WeakComposition {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            continue;
        }
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
    }
    WeakComposition::new(counts)
}
