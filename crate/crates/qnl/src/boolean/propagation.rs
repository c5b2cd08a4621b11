//! Propagation-criterion distances.
//!
//! Both distances minimize over error pairs `(a, b)` with a nonvanishing
//! shifted-correlation sum `S(a, b) = sum_x (-1)^{f(x) + f(x+a) + b.x}`;
//! they differ in how a pair is weighed. The aperiodic distance counts
//! positions where `a` or `b` is set once; the extended distance counts
//! `wt(a) + wt(b)`, so overlaps twice — exactly how the binary weight
//! counts a Y component.
//!
//! For the quadratic function of a graph `B` the sum collapses:
//! `f(x) + f(x+a) = f(a) + x.(Ba)`, so `S(a, b) = ±2^n` iff `b = Ba` and
//! vanishes otherwise. Both closed forms are kept alongside the generic
//! loops and cross-checked in tests; they are how the distances connect to
//! the code distances of the standard-form code.

use super::mask::full_bits;
use super::truth_table::{linear_blocks, TruthTable};
use super::BooleanError;
use crate::graph::Graph;

/// Cap for the generic pair loops.
pub const MAX_PROPAGATION_N: usize = 14;
/// Cap for the quadratic closed-form enumeration.
pub const MAX_QUADRATIC_N: usize = 28;

impl TruthTable {
    /// Aperiodic propagation-criterion distance: minimum of
    /// `|{i : a_i = 1 or b_i = 1}|` over pairs with `S(a, b) != 0`.
    pub fn apc_distance(&self) -> Result<u32, BooleanError> {
        if self.n() > MAX_PROPAGATION_N {
            return Err(BooleanError::TooLarge {
                n: self.n(),
                limit: MAX_PROPAGATION_N,
            });
        }
        let n = self.n();
        let full = full_bits(n);
        for w in 1..=n as u32 {
            // Supports of size w, then the 3^w ways to split each position
            // into a-only, b-only or both.
            let mut support = full_bits(w as usize);
            loop {
                let mut a = support;
                loop {
                    let diff = self.shift_diff(a);
                    let b_base = support ^ a;
                    let mut extra = a;
                    loop {
                        let b = b_base | extra;
                        if (a, b) != (0, 0) && self.correlation_nonzero(&diff, b) {
                            return Ok(w);
                        }
                        if extra == 0 {
                            break;
                        }
                        extra = (extra - 1) & a;
                    }
                    if a == 0 {
                        break;
                    }
                    a = (a - 1) & support;
                }
                support = next_same_weight(support, full);
                if support == 0 {
                    break;
                }
            }
        }
        unreachable!("some spectrum value is nonzero for every shift a");
    }

    /// Extended propagation-criterion distance: minimum of `wt(a) + wt(b)`
    /// over pairs with `S(a, b) != 0`.
    pub fn epc_distance(&self) -> Result<u32, BooleanError> {
        if self.n() > MAX_PROPAGATION_N {
            return Err(BooleanError::TooLarge {
                n: self.n(),
                limit: MAX_PROPAGATION_N,
            });
        }
        let n = self.n() as u32;
        let full = full_bits(self.n());
        for w in 1..=2 * n {
            for wa in w.saturating_sub(n)..=w.min(n) {
                let wb = w - wa;
                let mut a = full_bits(wa as usize);
                loop {
                    let diff = self.shift_diff(a);
                    let mut b = full_bits(wb as usize);
                    loop {
                        if (a, b) != (0, 0) && self.correlation_nonzero(&diff, b) {
                            return Ok(w);
                        }
                        b = next_same_weight(b, full);
                        if b == 0 {
                            break;
                        }
                    }
                    a = next_same_weight(a, full);
                    if a == 0 {
                        break;
                    }
                }
            }
        }
        unreachable!("some spectrum value is nonzero for every shift a");
    }

    /// Packed table of `f(x) + f(x ^ a)`.
    fn shift_diff(&self, a: u32) -> Vec<u64> {
        let shifted = self.xor_shift(a);
        self.blocks()
            .iter()
            .zip(&shifted)
            .map(|(x, y)| x ^ y)
            .collect()
    }

    /// Whether `sum_x (-1)^{diff(x) + b.x}` is nonzero.
    fn correlation_nonzero(&self, diff: &[u64], b: u32) -> bool {
        let linear = linear_blocks(self.n(), b);
        let minus: u64 = diff
            .iter()
            .zip(&linear)
            .map(|(d, l)| (d ^ l).count_ones() as u64)
            .sum();
        2 * minus != 1u64 << self.n()
    }
}

/// Closed-form aperiodic distance of a graph's quadratic function:
/// `min_{a != 0} wt(a | Ba)`, the Hamming distance of the standard-form code.
pub fn quadratic_apc_distance(g: &Graph) -> Result<u32, BooleanError> {
    quadratic_min(g, |a, ba| (a | ba).count_ones())
}

/// Closed-form extended distance: `min_{a != 0} wt(a) + wt(Ba)`, the binary
/// distance of the standard-form code.
pub fn quadratic_epc_distance(g: &Graph) -> Result<u32, BooleanError> {
    quadratic_min(g, |a, ba| a.count_ones() + ba.count_ones())
}

fn quadratic_min(g: &Graph, weigh: impl Fn(u128, u128) -> u32) -> Result<u32, BooleanError> {
    let n = g.n();
    if n > MAX_QUADRATIC_N {
        return Err(BooleanError::TooLarge {
            n,
            limit: MAX_QUADRATIC_N,
        });
    }
    let mut best = u32::MAX;
    let mut gray = 0u128;
    let mut ba = 0u128;
    for idx in 1u64..1 << n {
        let flip = idx.trailing_zeros() as usize;
        gray ^= 1 << flip;
        ba ^= g.row(flip);
        best = best.min(weigh(gray, ba));
    }
    Ok(best)
}

/// Sign-resolved closed form of the correlation sum for a quadratic table:
/// `S(a, b) = (-1)^{f(a)} 2^n` if `b = Ba`, else 0. Exposed for the
/// cross-checks between the generic loop and the shortcut.
pub fn quadratic_correlation(g: &Graph, t: &TruthTable, a: u32, b: u32) -> i64 {
    if u128::from(b) == g.mul_vec(a as u128) {
        t.sign(a) << g.n()
    } else {
        0
    }
}

/// Advances a set-bit pattern to the next value of equal weight within
/// `full`; returns 0 after the last one.
fn next_same_weight(v: u32, full: u32) -> u32 {
    if v == 0 {
        return 0;
    }
    let t = v | (v - 1);
    if t == full {
        return 0;
    }
    let next = (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1));
    if next & !full != 0 {
        0
    } else {
        next
    }
}
