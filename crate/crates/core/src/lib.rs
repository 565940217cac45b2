//! Exact spectra of the generator sums `T^α[W(K_η)]` of the symmetric group,
//! where `W(K_η)` sums the edge transpositions of a complete multipartite
//! graph `K_η`.
//!
//! The crate has two independent routes to every spectrum:
//!
//! * [`spectra`] evaluates eigenvalues exactly as `q_α − Σ q_{βⁱ}` over the
//!   admissible tuples produced by the Littlewood–Richardson machinery in
//!   [`lr`], built on the integer partition arithmetic in [`partitions`].
//! * [`oracle`] builds the matrices explicitly (graph and Cayley-graph
//!   Laplacians, Young's orthogonal form) and diagonalizes them numerically.
//!
//! Everything here is `no_std` + `alloc`; file formats and the command line
//! live in the companion `aldous` crate.
#![no_std]

extern crate alloc;

mod error;
pub mod lr;
pub mod oracle;
pub mod partitions;
pub mod spectra;

pub use error::{Error, Result};
pub use lr::{
    AdmissibleTuple, LrCache, ReadingWord, RelaxedTuple, SkewShape, SkewTableau,
};
pub use partitions::{Partition, WeakComposition};
pub use spectra::{AldousReport, MultipartiteShape, SpectrumMultiset};
