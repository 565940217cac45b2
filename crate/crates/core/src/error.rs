use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Text could not be parsed as a partition or composition.
    Parse(String),
    /// A sequence that should be a partition is not nonincreasing.
    NotAPartition(String),
    /// Two quantities that must agree in size do not.
    SizeMismatch { expected: usize, found: usize },
    /// `inner ≤ outer` componentwise was required and fails.
    NotContained { inner: String, outer: String },
    /// A composition with strictly positive entries was required.
    ZeroEntry(String),
    /// The request is larger than the configured limit.
    CapExceeded { what: &'static str, value: usize, cap: usize },
    /// An exact integer computation left its fixed-width range.
    Overflow(&'static str),
    /// The graph has a single block, hence no edges, and no spectral gap.
    NoEdges,
    /// Tableau entries violate the row/column rules or the lattice rule.
    InvalidTableau(String),
    /// A matrix handed in as symmetric is not exactly symmetric.
    NotSymmetric { row: usize, col: usize },
    /// Eigenvalue iteration did not reach the threshold.
    NoConvergence { sweeps: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NotAPartition(s) => write!(f, "{s} is not a partition (parts must be nonincreasing)"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::NotContained { inner, outer } => {
                write!(f, "({inner}) is not contained in ({outer}) componentwise")
            }
            Error::ZeroEntry(s) => write!(f, "({s}) has a zero entry; remove equal rows first"),
            Error::CapExceeded { what, value, cap } => {
                write!(f, "{what} = {value} exceeds the cap of {cap}")
            }
            Error::Overflow(what) => write!(f, "integer overflow while computing {what}"),
            Error::NoEdges => write!(f, "the graph has a single block and no edges"),
            Error::InvalidTableau(msg) => write!(f, "invalid tableau: {msg}"),
            Error::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({row}, {col})")
            }
            Error::NoConvergence { sweeps } => {
                write!(f, "eigenvalue iteration did not converge after {sweeps} sweeps")
            }
        }
    }
}

impl core::error::Error for Error {}
