//! Exact scalar types: Gaussian integers for complex spectra and dyadic
//! rationals for normalized ratios. No floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Complex integer `re + im*i` with exact ring arithmetic.
///
/// Spectral sums over sign sequences with quarter-turn phases land in this
/// ring, so unnormalized transform values are represented without error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };

    pub fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    /// Squared magnitude `re^2 + im^2`.
    pub fn norm_sq(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    /// Multiply by `i^k` (k may be any integer mod 4).
    pub fn mul_i_pow(self, k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => self,
            1 => GaussianInt::new(-self.im, self.re),
            2 => -self,
            _ => GaussianInt::new(self.im, -self.re),
        }
    }
}

impl From<i64> for GaussianInt {
    fn from(re: i64) -> Self {
        GaussianInt { re, im: 0 }
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: Self) -> Self {
        GaussianInt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: Self) -> Self {
        GaussianInt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> Self {
        GaussianInt::new(-self.re, -self.im)
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: Self) -> Self {
        GaussianInt::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}{im}i"),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

/// Nonnegative dyadic rational `num / 2^log2_den`, kept in lowest terms
/// (`num` odd or zero). Peak-to-average ratios and lattice norms are dyadic,
/// so this is all the rational arithmetic the crate needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: u128,
    log2_den: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic {
        num: 0,
        log2_den: 0,
    };

    pub fn new(num: u128, log2_den: u32) -> Self {
        let mut d = Dyadic { num, log2_den };
        d.normalize();
        d
    }

    pub fn from_integer(v: u128) -> Self {
        Dyadic {
            num: v,
            log2_den: 0,
        }
    }

    /// `2^k` as a dyadic value.
    pub fn pow2(k: u32) -> Self {
        Dyadic {
            num: 1u128 << k,
            log2_den: 0,
        }
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.log2_den = 0;
            return;
        }
        let shift = self.num.trailing_zeros().min(self.log2_den);
        self.num >>= shift;
        self.log2_den -= shift;
    }

    pub fn numerator(&self) -> u128 {
        self.num
    }

    pub fn denominator(&self) -> u128 {
        1u128 << self.log2_den
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Cross-multiply; operands in this crate stay far below 2^96.
        let lhs = self.num << other.log2_den;
        let rhs = other.num << self.log2_den;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2_den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.denominator())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_ring_ops() {
        let a = GaussianInt::new(1, 2);
        let b = GaussianInt::new(3, -1);
        assert_eq!(a + b, GaussianInt::new(4, 1));
        assert_eq!(a * b, GaussianInt::new(5, 5));
        assert_eq!(a.norm_sq(), 5);
        assert_eq!(a.mul_i_pow(1), GaussianInt::new(-2, 1));
        assert_eq!(a.mul_i_pow(4), a);
        assert_eq!(a.mul_i_pow(-1), a.mul_i_pow(3));
    }

    #[test]
    fn dyadic_normalization_and_order() {
        assert_eq!(Dyadic::new(4, 2), Dyadic::from_integer(1));
        assert_eq!(Dyadic::new(6, 1), Dyadic::new(3, 0));
        assert_eq!(Dyadic::new(0, 7), Dyadic::ZERO);
        assert!(Dyadic::new(3, 1) < Dyadic::from_integer(2));
        assert!(Dyadic::pow2(3) > Dyadic::new(15, 1));
        assert_eq!(Dyadic::new(3, 1).to_string(), "3/2");
        assert_eq!(Dyadic::new(8, 2).to_string(), "2");
    }
}
