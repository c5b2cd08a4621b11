//! Argument masks over the function domain, with the componentwise partial
//! order used by coset sums.

use super::BooleanError;
use std::fmt;

/// An `n`-bit word indexing variables of a boolean function. Bit `i-1`
/// carries variable `i`, matching the truth-table index convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mask {
    n: usize,
    bits: u32,
}

impl Mask {
    pub fn new(n: usize, bits: u32) -> Result<Self, BooleanError> {
        if n == 0 || n > 32 {
            return Err(BooleanError::UnsupportedSize { n });
        }
        if n < 32 && bits >> n != 0 {
            return Err(BooleanError::MaskOutOfRange { bits, n });
        }
        Ok(Mask { n, bits })
    }

    pub fn zero(n: usize) -> Self {
        Mask { n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        Mask {
            n,
            bits: full_bits(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Complement within the `n`-bit domain.
    pub fn complement(&self) -> Mask {
        Mask {
            n: self.n,
            bits: !self.bits & full_bits(self.n),
        }
    }

    /// Componentwise order: `self ⪯ other` iff every set bit of `self` is
    /// set in `other`.
    pub fn preceq(&self, other: &Mask) -> bool {
        self.bits & !other.bits == 0
    }
}

pub(crate) fn full_bits(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.bits >> i & 1)?;
        }
        Ok(())
    }
}
