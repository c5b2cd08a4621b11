//! Bit-packed sign sequences of boolean functions.

use super::BooleanError;
use crate::graph::Graph;

/// Domain cap: tables hold `2^n` packed sign bits.
pub const MAX_TABLE_N: usize = 24;

/// The sign sequence `(-1)^{f(x)}` of a boolean function on `n` variables.
///
/// Index `x` encodes the argument with variable `i` in bit `i-1`; a set
/// packed bit means `f(x) = 1`, i.e. sign `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: usize,
    blocks: Vec<u64>,
}

impl TruthTable {
    pub fn from_fn(n: usize, mut f: impl FnMut(u32) -> bool) -> Result<Self, BooleanError> {
        if n == 0 || n > MAX_TABLE_N {
            return Err(BooleanError::UnsupportedSize { n });
        }
        let len = 1usize << n;
        let mut blocks = vec![0u64; len.div_ceil(64)];
        for x in 0..len as u32 {
            if f(x) {
                blocks[(x >> 6) as usize] |= 1 << (x & 63);
            }
        }
        Ok(TruthTable { n, blocks })
    }

    /// The zero function (all signs `+1`).
    pub fn constant_zero(n: usize) -> Result<Self, BooleanError> {
        TruthTable::from_fn(n, |_| false)
    }

    /// Quadratic function of a graph: `f(x) = sum_{i<j} B_ij x_i x_j`, the
    /// parity of the edge count inside the support of `x`.
    pub fn from_graph(graph: &Graph) -> Result<Self, BooleanError> {
        let n = graph.n();
        if n > MAX_TABLE_N {
            return Err(BooleanError::UnsupportedSize { n });
        }
        let len = 1usize << n;
        // f(x) = f(x \ lowest bit) + (edges from that vertex into the rest).
        let mut bits = vec![false; len];
        for x in 1..len {
            let low = x.trailing_zeros() as usize;
            let rest = x & (x - 1);
            let cross = (graph.row(low) as usize & rest).count_ones() & 1 == 1;
            bits[x] = bits[rest] ^ cross;
        }
        TruthTable::from_fn(n, |x| bits[x as usize])
    }

    pub fn from_signs(signs: &[i8]) -> Result<Self, BooleanError> {
        let len = signs.len();
        if !len.is_power_of_two() || len == 1 {
            return Err(BooleanError::BadSignLength { len });
        }
        let n = len.trailing_zeros() as usize;
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(BooleanError::BadSignValue);
        }
        TruthTable::from_fn(n, |x| signs[x as usize] == -1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `f(x)` as a bit.
    pub fn bit(&self, x: u32) -> bool {
        self.blocks[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    /// `(-1)^{f(x)}`.
    pub fn sign(&self, x: u32) -> i64 {
        1 - 2 * (self.blocks[(x >> 6) as usize] >> (x & 63) & 1) as i64
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.len() as u32).map(|x| self.sign(x) as i8).collect()
    }

    pub(crate) fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    /// Number of `-1` entries.
    pub fn minus_count(&self) -> u64 {
        self.blocks.iter().map(|b| b.count_ones() as u64).sum()
    }

    /// The table `g(x) = f(x ^ a)`.
    pub(crate) fn xor_shift(&self, a: u32) -> Vec<u64> {
        xor_shift_blocks(&self.blocks, a)
    }
}

/// Permutes packed bits by `x -> x ^ a`: block indices XOR the high part of
/// `a`, in-block bits are rearranged by delta swaps for the low part.
pub(crate) fn xor_shift_blocks(blocks: &[u64], a: u32) -> Vec<u64> {
    let hi = (a >> 6) as usize;
    let lo = a & 63;
    (0..blocks.len())
        .map(|w| shuffle_word(blocks[w ^ hi], lo))
        .collect()
}

fn shuffle_word(mut word: u64, lo: u32) -> u64 {
    if lo & 1 != 0 {
        word = (word & 0x5555_5555_5555_5555) << 1 | (word >> 1) & 0x5555_5555_5555_5555;
    }
    if lo & 2 != 0 {
        word = (word & 0x3333_3333_3333_3333) << 2 | (word >> 2) & 0x3333_3333_3333_3333;
    }
    if lo & 4 != 0 {
        word = (word & 0x0F0F_0F0F_0F0F_0F0F) << 4 | (word >> 4) & 0x0F0F_0F0F_0F0F_0F0F;
    }
    if lo & 8 != 0 {
        word = (word & 0x00FF_00FF_00FF_00FF) << 8 | (word >> 8) & 0x00FF_00FF_00FF_00FF;
    }
    if lo & 16 != 0 {
        word = (word & 0x0000_FFFF_0000_FFFF) << 16 | (word >> 16) & 0x0000_FFFF_0000_FFFF;
    }
    if lo & 32 != 0 {
        word = word.rotate_left(32);
    }
    word
}

/// Packed parity table of the linear form `x -> b . x`.
pub(crate) fn linear_blocks(n: usize, b: u32) -> Vec<u64> {
    const LOW_PATTERNS: [u64; 6] = [
        0xAAAA_AAAA_AAAA_AAAA,
        0xCCCC_CCCC_CCCC_CCCC,
        0xF0F0_F0F0_F0F0_F0F0,
        0xFF00_FF00_FF00_FF00,
        0xFFFF_0000_FFFF_0000,
        0xFFFF_FFFF_0000_0000,
    ];
    let words = (1usize << n).div_ceil(64);
    let mut out = vec![0u64; words];
    for j in 0..n.min(6) {
        if b >> j & 1 == 1 {
            let pattern = LOW_PATTERNS[j]
                & if n >= 6 {
                    u64::MAX
                } else {
                    (1 << (1 << n)) - 1
                };
            for word in out.iter_mut() {
                *word ^= pattern;
            }
        }
    }
    for j in 6..n {
        if b >> j & 1 == 1 {
            for (w, word) in out.iter_mut().enumerate() {
                if w >> (j - 6) & 1 == 1 {
                    *word ^= u64::MAX;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique;
    use crate::rng::SplitMix64;

    #[test]
    fn k2_table_is_and_gate() {
        let t = TruthTable::from_graph(&clique(2)).unwrap();
        assert_eq!(t.signs(), vec![1, 1, 1, -1]);
    }

    #[test]
    fn empty_graph_is_all_plus() {
        for n in 1..=5 {
            let t = TruthTable::from_graph(&Graph::empty(n).unwrap()).unwrap();
            assert_eq!(t.minus_count(), 0);
        }
    }

    #[test]
    fn nine_vertex_nested_clique_table() {
        // 2^9 entries; the all-ones input sums every edge, and the graph
        // has 18 edges, so the sign there is +1.
        use crate::graph::{nested_clique, NestedCliqueSpec, SigmaRule};
        let g = nested_clique(&NestedCliqueSpec::new(3, SigmaRule::Cyclic).unwrap());
        assert_eq!(g.edge_count(), 18);
        let t = TruthTable::from_graph(&g).unwrap();
        assert_eq!(t.len(), 512);
        assert_eq!(t.sign(511), 1);
    }

    #[test]
    fn from_graph_matches_direct_edge_sum() {
        let mut rng = SplitMix64::new(9);
        for n in 1..=9usize {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.next_u64() & 1 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let t = TruthTable::from_graph(&g).unwrap();
            for x in 0..1u32 << n {
                let mut parity = false;
                for &(i, j) in &edges {
                    parity ^= x >> i & 1 == 1 && x >> j & 1 == 1;
                }
                assert_eq!(t.bit(x), parity);
            }
        }
    }

    #[test]
    fn xor_shift_permutes_indices() {
        let mut rng = SplitMix64::new(31);
        for n in 1..=9usize {
            let t = TruthTable::from_fn(n, |_| rng.next_u64() & 1 == 1).unwrap();
            for _ in 0..6 {
                let a = (rng.next_u64() as u32) & super::super::mask::full_bits(n);
                let shifted = t.xor_shift(a);
                for x in 0..1u32 << n {
                    let bit = shifted[(x >> 6) as usize] >> (x & 63) & 1 == 1;
                    assert_eq!(bit, t.bit(x ^ a));
                }
            }
        }
    }

    #[test]
    fn linear_blocks_match_dot_parity() {
        let mut rng = SplitMix64::new(33);
        for n in 1..=9usize {
            for _ in 0..6 {
                let b = (rng.next_u64() as u32) & super::super::mask::full_bits(n);
                let blocks = linear_blocks(n, b);
                for x in 0..1u32 << n {
                    let bit = blocks[(x >> 6) as usize] >> (x & 63) & 1 == 1;
                    assert_eq!(bit, (x & b).count_ones() & 1 == 1);
                }
            }
        }
    }

    #[test]
    fn sign_round_trip() {
        let signs = vec![1i8, -1, -1, 1, 1, 1, -1, -1];
        let t = TruthTable::from_signs(&signs).unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.signs(), signs);
        assert!(TruthTable::from_signs(&[1, 0, 1, 1]).is_err());
        assert!(TruthTable::from_signs(&[1, -1, 1]).is_err());
    }
}
