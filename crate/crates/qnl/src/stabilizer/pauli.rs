//! Pauli strings in binary symplectic form and the GF(4) correspondence.
//!
//! A Pauli operator on `n` qubits (phases dropped) is a pair of `n`-bit
//! words: `alpha` marks X-components, `beta` marks Z-components, a qubit
//! carrying both is a Y. Qubit `i` lives in bit `i-1`, least significant
//! first — the same convention the truth-table index uses, so code and
//! boolean layers agree without translation.

use super::CodeError;
use std::fmt;
use std::ops::Add;

/// Maximum supported qubit count (bit-packed `u128` words).
pub const MAX_QUBITS: usize = 128;

/// Phaseless Pauli string `(alpha | beta)` on `n` qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliVector {
    n: usize,
    alpha: u128,
    beta: u128,
}

impl PauliVector {
    pub fn new(n: usize, alpha: u128, beta: u128) -> Result<Self, CodeError> {
        if n == 0 || n > MAX_QUBITS {
            return Err(CodeError::UnsupportedSize { n });
        }
        let full = word_mask(n);
        if alpha & !full != 0 || beta & !full != 0 {
            return Err(CodeError::WordOutOfRange { n });
        }
        Ok(PauliVector { n, alpha, beta })
    }

    pub fn zero(n: usize) -> Result<Self, CodeError> {
        PauliVector::new(n, 0, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> u128 {
        self.alpha
    }

    pub fn beta(&self) -> u128 {
        self.beta
    }

    pub fn is_zero(&self) -> bool {
        self.alpha == 0 && self.beta == 0
    }

    /// Number of qubits carrying a non-identity operator.
    pub fn hamming_weight(&self) -> u32 {
        (self.alpha | self.beta).count_ones()
    }

    /// `w_x + 2 w_y + w_z`, i.e. Y counted twice: `popcount(alpha) +
    /// popcount(beta)`.
    pub fn binary_weight(&self) -> u32 {
        self.alpha.count_ones() + self.beta.count_ones()
    }

    /// Symplectic product `alpha_p . beta_q + alpha_q . beta_p mod 2`;
    /// zero exactly when the two operators commute.
    pub fn symplectic_product(&self, other: &PauliVector) -> Result<u8, CodeError> {
        if self.n != other.n {
            return Err(CodeError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(symplectic_raw(
            self.alpha,
            self.beta,
            other.alpha,
            other.beta,
        ))
    }
}

pub(crate) fn symplectic_raw(a1: u128, b1: u128, a2: u128, b2: u128) -> u8 {
    (((a1 & b2).count_ones() + (a2 & b1).count_ones()) & 1) as u8
}

pub(crate) fn word_mask(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

impl Add for PauliVector {
    type Output = PauliVector;

    /// Componentwise sum over F2 (operator product without phase).
    fn add(self, rhs: PauliVector) -> PauliVector {
        assert_eq!(
            self.n, rhs.n,
            "cannot add Pauli strings of different length"
        );
        PauliVector {
            n: self.n,
            alpha: self.alpha ^ rhs.alpha,
            beta: self.beta ^ rhs.beta,
        }
    }
}

impl fmt::Display for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let bits = ((self.alpha >> i & 1) as u8) << 1 | (self.beta >> i & 1) as u8;
            f.write_str(match bits {
                0b00 => "I",
                0b01 => "Z",
                0b10 => "X",
                _ => "Y",
            })?;
        }
        Ok(())
    }
}

/// Decodes a GF(4) string over `{0, 1, w, W}` into symplectic form:
/// per symbol `0 -> (0,0)`, `1 -> (1,1)`, `w -> (1,0)`, `W -> (0,1)`
/// (`w` the primitive element, `W` its conjugate). The map is additive, so
/// GF(4) sums and symplectic sums agree.
pub fn gray_encode(symbols: &str) -> Result<PauliVector, CodeError> {
    let n = symbols.chars().count();
    if n == 0 || n > MAX_QUBITS {
        return Err(CodeError::UnsupportedSize { n });
    }
    let mut alpha = 0u128;
    let mut beta = 0u128;
    for (i, ch) in symbols.chars().enumerate() {
        let (a, b) = match ch {
            '0' => (0, 0),
            '1' => (1, 1),
            'w' => (1, 0),
            'W' => (0, 1),
            other => {
                return Err(CodeError::InvalidSymbol {
                    index: i + 1,
                    found: other,
                })
            }
        };
        alpha |= (a as u128) << i;
        beta |= (b as u128) << i;
    }
    Ok(PauliVector { n, alpha, beta })
}

/// Inverse of [`gray_encode`]; round trips exactly.
pub fn gray_decode(p: &PauliVector) -> String {
    (0..p.n)
        .map(|i| match ((p.alpha >> i & 1), (p.beta >> i & 1)) {
            (0, 0) => '0',
            (1, 1) => '1',
            (1, 0) => 'w',
            _ => 'W',
        })
        .collect()
}
