//! Generator matrices of additive codes in symplectic form.

use super::pauli::{word_mask, PauliVector};
use super::CodeError;
use crate::graph::Graph;

/// Cap on full codeword enumeration (`2^k` combinations).
pub const MAX_ENUMERATION_K: usize = 28;

/// `k` independent Pauli strings on `n` qubits, spanning a `2^k`-element
/// additive code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<PauliVector>,
}

impl GeneratorMatrix {
    /// Rows must be nonzero, of matching length, independent over F2 and at
    /// most `n` of them.
    pub fn new(rows: Vec<PauliVector>) -> Result<Self, CodeError> {
        let n = match rows.first() {
            Some(r) => r.n(),
            None => return Err(CodeError::EmptyMatrix),
        };
        if rows.len() > n {
            return Err(CodeError::TooManyRows { k: rows.len(), n });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.n() != n {
                return Err(CodeError::DimensionMismatch {
                    left: n,
                    right: row.n(),
                });
            }
            if row.is_zero() {
                return Err(CodeError::ZeroRow { row: i + 1 });
            }
        }
        if !independent_over_f2(&rows) {
            return Err(CodeError::DependentRows);
        }
        Ok(GeneratorMatrix { n, rows })
    }

    /// The trivial code with no generators: its only codeword is zero.
    pub fn trivial(n: usize) -> Result<Self, CodeError> {
        PauliVector::zero(n)?;
        Ok(GeneratorMatrix {
            n,
            rows: Vec::new(),
        })
    }

    /// The standard-form code `(B | I)` of a graph: row `i` is
    /// `(adjacency row i | e_i)`.
    pub fn from_graph(graph: &Graph) -> Self {
        let n = graph.n();
        let rows = (0..n)
            .map(|i| PauliVector::new(n, graph.row(i), 1 << i).expect("graph rows fit"))
            .collect();
        GeneratorMatrix { n, rows }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<PauliVector>) -> Self {
        let n = rows[0].n();
        debug_assert!(independent_over_f2(&rows));
        GeneratorMatrix { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[PauliVector] {
        &self.rows
    }

    /// True iff `k = n` and all generators pairwise commute.
    pub fn is_self_dual(&self) -> bool {
        if self.k() != self.n {
            return false;
        }
        for i in 0..self.rows.len() {
            for j in (i + 1)..self.rows.len() {
                if self.rows[i].symplectic_product(&self.rows[j]).unwrap() == 1 {
                    return false;
                }
            }
        }
        true
    }

    /// True iff every generator has an even number of Y components
    /// (`alpha . beta = 0 mod 2`). Together with pairwise commutation this
    /// extends to every codeword, since
    /// `(a+c).(b+d) = a.b + c.d + (a.d + c.b) mod 2`.
    pub fn is_real(&self) -> bool {
        self.rows
            .iter()
            .all(|r| (r.alpha() & r.beta()).count_ones() & 1 == 0)
    }

    /// True iff the matrix is literally `(B | I)`: row `i` has `beta = e_i`.
    pub fn is_standard_form(&self) -> bool {
        self.k() == self.n
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.beta() == 1 << i)
    }

    /// Recovers the graph of a `(B | I)` matrix, validating symmetry and the
    /// zero diagonal.
    pub fn standard_form_graph(&self) -> Result<Graph, CodeError> {
        if !self.is_standard_form() {
            return Err(CodeError::NotStandardForm);
        }
        let rows = self.rows.iter().map(|r| r.alpha()).collect();
        Graph::new(rows).map_err(CodeError::InvalidGraph)
    }

    /// Codeword for a combination word `u` (bit `i` selects row `i`).
    pub fn combination(&self, u: u128) -> PauliVector {
        debug_assert_eq!(u & !word_mask(self.k()), 0);
        let mut alpha = 0u128;
        let mut beta = 0u128;
        let mut rest = u;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            alpha ^= self.rows[i].alpha();
            beta ^= self.rows[i].beta();
        }
        PauliVector::new(self.n, alpha, beta).expect("combination stays in range")
    }

    /// Streams all `2^k` codewords (including zero), each exactly once, in
    /// Gray-code order. Refuses above `k = 28`.
    pub fn codewords(&self) -> Result<Codewords<'_>, CodeError> {
        if self.k() > MAX_ENUMERATION_K {
            return Err(CodeError::EnumerationTooLarge {
                k: self.k(),
                limit: MAX_ENUMERATION_K,
            });
        }
        Ok(Codewords {
            matrix: self,
            index: 0,
            alpha: 0,
            beta: 0,
        })
    }
}

/// Gray-code codeword stream; one row XOR per step.
pub struct Codewords<'a> {
    matrix: &'a GeneratorMatrix,
    index: u64,
    alpha: u128,
    beta: u128,
}

impl Iterator for Codewords<'_> {
    type Item = PauliVector;

    fn next(&mut self) -> Option<PauliVector> {
        if self.index >> self.matrix.k() != 0 {
            return None;
        }
        if self.index > 0 {
            let flip = self.index.trailing_zeros() as usize;
            self.alpha ^= self.matrix.rows[flip].alpha();
            self.beta ^= self.matrix.rows[flip].beta();
        }
        self.index += 1;
        Some(PauliVector::new(self.matrix.n, self.alpha, self.beta).unwrap())
    }
}

fn independent_over_f2(rows: &[PauliVector]) -> bool {
    // Gaussian elimination on (alpha, beta) pairs.
    let mut basis: Vec<(u128, u128)> = Vec::with_capacity(rows.len());
    for row in rows {
        let mut cur = (row.alpha(), row.beta());
        for &(a, b) in &basis {
            let pivot = leading_bit(a, b);
            if bit_at(cur.0, cur.1, pivot) {
                cur.0 ^= a;
                cur.1 ^= b;
            }
        }
        if cur == (0, 0) {
            return false;
        }
        basis.push(cur);
        basis.sort_by_key(|&(a, b)| std::cmp::Reverse(leading_bit(a, b)));
    }
    true
}

fn leading_bit(a: u128, b: u128) -> u32 {
    if a != 0 {
        128 + (127 - a.leading_zeros())
    } else {
        127 - b.leading_zeros()
    }
}

fn bit_at(a: u128, b: u128, pos: u32) -> bool {
    if pos >= 128 {
        a >> (pos - 128) & 1 == 1
    } else {
        b >> pos & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique, nested_clique, Graph, NestedCliqueSpec, SigmaRule};
    use crate::rng::SplitMix64;
    use crate::stabilizer::pauli::gray_encode;

    fn matrix(rows: &[&str]) -> GeneratorMatrix {
        GeneratorMatrix::new(rows.iter().map(|s| gray_encode(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_rows() {
        assert!(matches!(
            GeneratorMatrix::new(vec![PauliVector::zero(2).unwrap()]),
            Err(CodeError::ZeroRow { row: 1 })
        ));
        let x = gray_encode("w0").unwrap();
        assert!(matches!(
            GeneratorMatrix::new(vec![x, x]),
            Err(CodeError::DependentRows)
        ));
        let dup = gray_encode("ww").unwrap() + gray_encode("w0").unwrap();
        assert!(GeneratorMatrix::new(vec![x, gray_encode("ww").unwrap(), dup]).is_err());
    }

    #[test]
    fn self_duality() {
        // {XX, ZZ} commute and k = n.
        assert!(matrix(&["ww", "WW"]).is_self_dual());
        // Single row on two qubits: k < n.
        assert!(!matrix(&["ww"]).is_self_dual());
        // {XI, ZI} anticommute.
        assert!(!matrix(&["w0", "W0"]).is_self_dual());
        // Standard form of the block-structured 9-vertex graph.
        let g = nested_clique(&NestedCliqueSpec::new(3, SigmaRule::Cyclic).unwrap());
        assert!(GeneratorMatrix::from_graph(&g).is_self_dual());
    }

    #[test]
    fn realness() {
        assert!(matrix(&["ww", "WW"]).is_real());
        // Single Y has odd alpha.beta.
        assert!(!matrix(&["1"]).is_real());
        // Every standard-form code of a graph is real: exhaust n <= 4.
        for n in 1..=4usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            for mask in 0..1u32 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(e, _)| mask >> e & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let code = GeneratorMatrix::from_graph(&g);
                assert!(code.is_real());
                assert!(code.is_self_dual());
            }
        }
    }

    #[test]
    fn standard_form_rows_commute_for_all_small_graphs() {
        // B symmetric zero-diagonal forces B_ij + B_ji = 0 mod 2.
        for n in 1..=4usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            for mask in 0..1u32 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(e, _)| mask >> e & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let code = GeneratorMatrix::from_graph(&g);
                for i in 0..n {
                    for j in 0..n {
                        assert_eq!(
                            code.rows()[i].symplectic_product(&code.rows()[j]).unwrap(),
                            0
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn codeword_stream() {
        // K_2 standard form: exactly 4 codewords.
        let code = GeneratorMatrix::from_graph(&clique(2));
        let words: Vec<_> = code.codewords().unwrap().collect();
        assert_eq!(words.len(), 4);
        assert!(words[0].is_zero());
        let mut seen: Vec<_> = words.iter().map(|w| (w.alpha(), w.beta())).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 4);
        assert!(seen.contains(&(0b10, 0b01)));
        assert!(seen.contains(&(0b01, 0b10)));
        assert!(seen.contains(&(0b11, 0b11)));
    }

    #[test]
    fn trivial_code_streams_only_zero() {
        let code = GeneratorMatrix::trivial(3).unwrap();
        assert_eq!(code.k(), 0);
        let words: Vec<_> = code.codewords().unwrap().collect();
        assert_eq!(words.len(), 1);
        assert!(words[0].is_zero());
        assert!(!code.is_self_dual());
        let result = code
            .min_distance_exact(crate::stabilizer::WeightKind::Binary)
            .unwrap();
        assert!(result.witness.is_none());
    }

    #[test]
    fn codeword_count_is_two_pow_k() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..20 {
            let n = 2 + rng.next_below(10) as usize;
            let k = 1 + rng.next_below(n.min(12) as u64) as usize;
            // Random independent rows: keep sampling until construction works.
            let code = loop {
                let rows: Vec<PauliVector> = (0..k)
                    .map(|_| {
                        PauliVector::new(
                            n,
                            (rng.next_u64() as u128) & word_mask(n),
                            (rng.next_u64() as u128) & word_mask(n),
                        )
                        .unwrap()
                    })
                    .collect();
                if let Ok(c) = GeneratorMatrix::new(rows) {
                    break c;
                }
            };
            assert_eq!(code.codewords().unwrap().count(), 1 << k);
        }
    }

    #[test]
    fn enumeration_refuses_oversized_k() {
        let g = crate::graph::random_regular(30, 3, 1).unwrap();
        let code = GeneratorMatrix::from_graph(&g);
        assert!(matches!(
            code.codewords(),
            Err(CodeError::EnumerationTooLarge { .. })
        ));
    }
}
