use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{content, is_lattice_word, ReadingWord};
use crate::partitions::{componentwise_leq, Partition, WeakComposition};
use crate::{Error, Result};

/// The skew diagram `outer/inner`: boxes of `outer` not in `inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// Requires `inner ≤ outer` componentwise and at least one box.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !componentwise_leq(&inner, &outer) {
            return Err(Error::NotContained { inner: format!("{inner}"), outer: format!("{outer}") });
        }
        if inner.size() == outer.size() {
            return Err(Error::SizeMismatch { expected: inner.size() + 1, found: outer.size() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows of the outer shape (some may be empty in the skew).
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Skew boxes in row `i`.
    pub fn row_len(&self, i: usize) -> usize {
        self.outer.get(i) - self.inner.get(i)
    }

    pub fn box_count(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Column range `[inner_i, outer_i)` occupied by row `i`.
    pub fn row_span(&self, i: usize) -> core::ops::Range<usize> {
        self.inner.get(i)..self.outer.get(i)
    }
}

/// A semistandard filling of a skew shape. `rows[i]` lists row `i` from left
/// to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    /// Validates row lengths, positivity, weakly increasing rows and strictly
    /// increasing columns.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::InvalidTableau(format!(
                "expected {} rows, found {}",
                shape.rows(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i) {
                return Err(Error::InvalidTableau(format!(
                    "row {} should hold {} entries, found {}",
                    i + 1,
                    shape.row_len(i),
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau(format!("row {} has a zero entry", i + 1)));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {} decreases", i + 1)));
            }
        }
        let tableau = SkewTableau { shape, rows };
        for i in 1..tableau.rows.len() {
            for col in tableau.shape.row_span(i) {
                if let (Some(above), Some(here)) = (tableau.entry(i - 1, col), tableau.entry(i, col)) {
                    if above >= here {
                        return Err(Error::InvalidTableau(format!(
                            "column {} does not increase strictly at row {}",
                            col + 1,
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(tableau)
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        SkewTableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at `(row, col)` in diagram coordinates, `None` off the skew shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let span = self.shape.row_span(row);
        if span.contains(&col) {
            Some(self.rows[row][col - span.start])
        } else {
            None
        }
    }

    /// Each row flipped right-to-left, rows concatenated top to bottom.
    pub fn reading_word(&self) -> ReadingWord {
        ReadingWord(self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect())
    }

    pub fn content(&self) -> WeakComposition {
        content(&self.reading_word())
    }

    /// Semistandard and the reading word is a lattice word.
    pub fn is_lr(&self) -> bool {
        is_lattice_word(&self.reading_word())
    }
}

/// One row per line: `:` for each erased inner box followed by the entries,
/// e.g. `:::::1` / `::112` / `:23` / `4`. Fillings using an entry above 9
/// separate every box by a space.
impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.rows.iter().flatten().any(|&x| x > 9);
        let sep = if wide { " " } else { "" };
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let mut first = true;
            for _ in 0..self.shape.inner.get(i) {
                if !first {
                    f.write_str(sep)?;
                }
                f.write_str(":")?;
                first = false;
            }
            for x in row {
                if !first {
                    f.write_str(sep)?;
                }
                write!(f, "{x}")?;
                first = false;
            }
        }
        Ok(())
    }
}
