//! Boolean functions as sign sequences: spectra, autocorrelations,
//! propagation distances and peak-to-average ratios, all in exact
//! arithmetic.

mod autocorrelation;
mod mask;
mod propagation;
mod spectra;
mod truth_table;

pub use mask::Mask;
pub use propagation::{
    quadratic_apc_distance, quadratic_correlation, quadratic_epc_distance, MAX_PROPAGATION_N,
    MAX_QUADRATIC_N,
};
pub use spectra::{MAX_PAR_IHN_N, MAX_PAR_IH_N};
pub use truth_table::{TruthTable, MAX_TABLE_N};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BooleanError {
    UnsupportedSize {
        n: usize,
    },
    MaskOutOfRange {
        bits: u32,
        n: usize,
    },
    DimensionMismatch {
        left: usize,
        right: usize,
    },
    /// A precondition `inner ⪯ outer` failed.
    NotSubmask {
        inner: &'static str,
        outer: &'static str,
    },
    BadSignLength {
        len: usize,
    },
    BadSignValue,
    TooLarge {
        n: usize,
        limit: usize,
    },
}

impl fmt::Display for BooleanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BooleanError::UnsupportedSize { n } => {
                write!(f, "{n} variables outside the supported range")
            }
            BooleanError::MaskOutOfRange { bits, n } => {
                write!(f, "mask {bits:#b} has bits beyond variable {n}")
            }
            BooleanError::DimensionMismatch { left, right } => {
                write!(f, "variable counts differ: {left} vs {right}")
            }
            BooleanError::NotSubmask { inner, outer } => {
                write!(
                    f,
                    "precondition violated: {inner} must be a submask of {outer}"
                )
            }
            BooleanError::BadSignLength { len } => {
                write!(f, "sign sequence length {len} is not a power of two >= 2")
            }
            BooleanError::BadSignValue => write!(f, "sign sequences contain only +1 and -1"),
            BooleanError::TooLarge { n, limit } => {
                write!(f, "operation supports n <= {limit}, got {n}")
            }
        }
    }
}

impl std::error::Error for BooleanError {}
