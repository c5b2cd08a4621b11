//! The autocorrelation family: periodic, aperiodic, fixed-aperiodic and
//! fixed-extended sums over coset spaces.
//!
//! All four are the same kernel `sum (-1)^{f(x) + f(x+a)}` over the coset
//! `{x : x & mu = k}`; they differ only in which masks are constrained.

use super::mask::{full_bits, Mask};
use super::truth_table::TruthTable;
use super::BooleanError;

impl TruthTable {
    /// Periodic autocorrelation `r(a)`: the kernel over the whole domain.
    pub fn periodic_autocorrelation(&self, a: Mask) -> Result<i64, BooleanError> {
        self.check_dim(&a)?;
        Ok(self.coset_correlation(a.bits(), 0, 0))
    }

    /// Aperiodic autocorrelation `s(a, k)`, summed over `k + V_{a-bar}`;
    /// requires `k ⪯ a`.
    pub fn aperiodic_autocorrelation(&self, a: Mask, k: Mask) -> Result<i64, BooleanError> {
        self.check_dim(&a)?;
        self.check_dim(&k)?;
        if !k.preceq(&a) {
            return Err(BooleanError::NotSubmask {
                inner: "k",
                outer: "a",
            });
        }
        Ok(self.coset_correlation(a.bits(), a.bits(), k.bits()))
    }

    /// Fixed-aperiodic autocorrelation `s(a, mu, k)`; requires `a ⪯ mu` and
    /// `k ⪯ mu`.
    pub fn fixed_aperiodic_autocorrelation(
        &self,
        a: Mask,
        mu: Mask,
        k: Mask,
    ) -> Result<i64, BooleanError> {
        self.check_dim(&a)?;
        self.check_dim(&mu)?;
        self.check_dim(&k)?;
        if !a.preceq(&mu) {
            return Err(BooleanError::NotSubmask {
                inner: "a",
                outer: "mu",
            });
        }
        if !k.preceq(&mu) {
            return Err(BooleanError::NotSubmask {
                inner: "k",
                outer: "mu",
            });
        }
        Ok(self.coset_correlation(a.bits(), mu.bits(), k.bits()))
    }

    /// Fixed-extended autocorrelation `v(a, mu, k)`: the shift `a` is
    /// unrestricted, only `k ⪯ mu` is required.
    pub fn fixed_extended_autocorrelation(
        &self,
        a: Mask,
        mu: Mask,
        k: Mask,
    ) -> Result<i64, BooleanError> {
        self.check_dim(&a)?;
        self.check_dim(&mu)?;
        self.check_dim(&k)?;
        if !k.preceq(&mu) {
            return Err(BooleanError::NotSubmask {
                inner: "k",
                outer: "mu",
            });
        }
        Ok(self.coset_correlation(a.bits(), mu.bits(), k.bits()))
    }

    /// Kernel `sum_{x & mu = k} (-1)^{f(x) + f(x ^ a)}`.
    pub(crate) fn coset_correlation(&self, a: u32, mu: u32, k: u32) -> i64 {
        debug_assert_eq!(k & !mu, 0);
        if mu == 0 {
            // Full-domain sum via packed words.
            let shifted = self.xor_shift(a);
            let mismatches: u64 = self
                .blocks()
                .iter()
                .zip(&shifted)
                .map(|(x, y)| (x ^ y).count_ones() as u64)
                .sum();
            return (1i64 << self.n()) - 2 * mismatches as i64;
        }
        let space = !mu & full_bits(self.n());
        let mut acc = 0i64;
        let mut sub = space;
        loop {
            let x = k | sub;
            acc += self.sign(x) * self.sign(x ^ a);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & space;
        }
        acc
    }

    pub(crate) fn check_dim(&self, mask: &Mask) -> Result<(), BooleanError> {
        if mask.n() != self.n() {
            return Err(BooleanError::DimensionMismatch {
                left: self.n(),
                right: mask.n(),
            });
        }
        Ok(())
    }
}
