//! Binary symplectic codes: Pauli strings, generator matrices, reduction to
//! standard form, distance searches and the lattice minimum norm.

mod bform;
mod code;
mod distance;
mod lattice;
mod pauli;

pub use bform::{apply_qubit_moves, bform_reduce, replay, BFormCode, TMove};
pub use code::{Codewords, GeneratorMatrix, MAX_ENUMERATION_K};
pub use distance::{DistanceResult, SearchBudget, WeightKind};
pub use lattice::{lattice_min_norm, MAX_LATTICE_N};
pub use pauli::{gray_decode, gray_encode, PauliVector, MAX_QUBITS};

pub(crate) use distance::thread_count;

use crate::graph::GraphError;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    UnsupportedSize { n: usize },
    WordOutOfRange { n: usize },
    InvalidSymbol { index: usize, found: char },
    DimensionMismatch { left: usize, right: usize },
    EmptyMatrix,
    ZeroRow { row: usize },
    DependentRows,
    TooManyRows { k: usize, n: usize },
    NotSquare { k: usize, n: usize },
    EnumerationTooLarge { k: usize, limit: usize },
    NotStandardForm,
    ReductionStuck { column: usize },
    InvalidGraph(GraphError),
    EmptyBudget,
    LatticeTooLarge { n: usize, limit: usize },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::UnsupportedSize { n } => {
                write!(f, "{n} qubits outside the supported range 1..={MAX_QUBITS}")
            }
            CodeError::WordOutOfRange { n } => {
                write!(f, "component word has bits beyond qubit {n}")
            }
            CodeError::InvalidSymbol { index, found } => {
                write!(
                    f,
                    "invalid GF(4) symbol {found:?} at position {index} (expected 0, 1, w or W)"
                )
            }
            CodeError::DimensionMismatch { left, right } => {
                write!(f, "qubit counts differ: {left} vs {right}")
            }
            CodeError::EmptyMatrix => write!(f, "generator matrix needs at least one row"),
            CodeError::ZeroRow { row } => write!(f, "generator row {row} is zero"),
            CodeError::DependentRows => write!(f, "generator rows are linearly dependent over F2"),
            CodeError::TooManyRows { k, n } => {
                write!(f, "{k} generators exceed the qubit count {n}")
            }
            CodeError::NotSquare { k, n } => {
                write!(f, "standard-form reduction needs k = n, got k={k}, n={n}")
            }
            CodeError::EnumerationTooLarge { k, limit } => {
                write!(
                    f,
                    "full enumeration of 2^{k} codewords refused (limit 2^{limit}); \
                     use the bounded-weight search"
                )
            }
            CodeError::NotStandardForm => {
                write!(f, "operation requires a standard-form (B | I) matrix")
            }
            CodeError::ReductionStuck { column } => {
                write!(
                    f,
                    "reduction stuck at pivot column {column}: Z-part not full rank \
                     under the allowed moves (is the code self-dual?)"
                )
            }
            CodeError::InvalidGraph(err) => {
                write!(f, "reduced block is not an adjacency matrix: {err}")
            }
            CodeError::EmptyBudget => {
                write!(f, "search budget admits no candidates")
            }
            CodeError::LatticeTooLarge { n, limit } => {
                write!(f, "lattice enumeration supports n <= {limit}, got {n}")
            }
        }
    }
}

impl std::error::Error for CodeError {}
