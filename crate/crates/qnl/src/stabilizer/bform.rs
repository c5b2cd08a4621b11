//! Reduction of a self-dual real code to standard form `(B | I)`.
//!
//! The allowed moves are row operations (which keep the codeword set),
//! qubit permutations and per-qubit X/Z swaps (Hadamard conjugation). The
//! pivot sweep records every move so a reduction can be replayed and
//! audited against the original matrix.

use super::code::GeneratorMatrix;
use super::pauli::PauliVector;
use super::CodeError;
use crate::graph::Graph;

/// A single reduction move. Row moves change the generating set but not the
/// code; qubit moves are the T-equivalences (permutations and X/Z swaps).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TMove {
    SwapRows(usize, usize),
    /// Adds row `src` into row `dst` over F2.
    AddRow {
        src: usize,
        dst: usize,
    },
    SwapQubits(usize, usize),
    /// Swap the X and Z components on one qubit.
    HadamardSwap(usize),
}

/// A code in standard form together with the move log that produced it.
#[derive(Debug, Clone)]
pub struct BFormCode {
    graph: Graph,
    moves: Vec<TMove>,
}

impl BFormCode {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn moves(&self) -> &[TMove] {
        &self.moves
    }

    pub fn matrix(&self) -> GeneratorMatrix {
        GeneratorMatrix::from_graph(&self.graph)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

#[derive(Clone)]
struct Work {
    n: usize,
    alphas: Vec<u128>,
    betas: Vec<u128>,
    log: Vec<TMove>,
}

impl Work {
    fn apply(&mut self, mv: TMove) {
        match mv {
            TMove::SwapRows(i, j) => {
                self.alphas.swap(i, j);
                self.betas.swap(i, j);
            }
            TMove::AddRow { src, dst } => {
                self.alphas[dst] ^= self.alphas[src];
                self.betas[dst] ^= self.betas[src];
            }
            TMove::SwapQubits(i, j) => {
                for word in self.alphas.iter_mut().chain(self.betas.iter_mut()) {
                    let bi = *word >> i & 1;
                    let bj = *word >> j & 1;
                    if bi != bj {
                        *word ^= (1 << i) | (1 << j);
                    }
                }
            }
            TMove::HadamardSwap(q) => {
                let bit = 1u128 << q;
                for (a, b) in self.alphas.iter_mut().zip(self.betas.iter_mut()) {
                    let ab = *a & bit;
                    let bb = *b & bit;
                    *a = (*a & !bit) | bb;
                    *b = (*b & !bit) | ab;
                }
            }
        }
        self.log.push(mv);
    }
}

/// Brings a self-dual real generator matrix to standard form `(B | I)`.
///
/// Pivoting is deterministic: for each column, take the lowest unprocessed
/// row with a Z-bit there; failing that, swap X/Z on that qubit; failing
/// that, swap in the nearest later qubit that offers a pivot. An input
/// violating the self-dual/real preconditions either gets stuck (reported
/// with the pivot column) or produces a block that is not a valid adjacency
/// matrix (also reported).
pub fn bform_reduce(g: &GeneratorMatrix) -> Result<BFormCode, CodeError> {
    if g.k() != g.n() {
        return Err(CodeError::NotSquare { k: g.k(), n: g.n() });
    }
    let n = g.n();
    let mut work = Work {
        n,
        alphas: g.rows().iter().map(|r| r.alpha()).collect(),
        betas: g.rows().iter().map(|r| r.beta()).collect(),
        log: Vec::new(),
    };
    for col in 0..n {
        if !establish_pivot(&mut work, col) {
            return Err(CodeError::ReductionStuck { column: col + 1 });
        }
        // Clear the rest of the Z column.
        for row in 0..n {
            if row != col && work.betas[row] >> col & 1 == 1 {
                work.apply(TMove::AddRow { src: col, dst: row });
            }
        }
    }
    debug_assert!(work.betas.iter().enumerate().all(|(i, &b)| b == 1 << i));
    let graph = Graph::new(work.alphas).map_err(CodeError::InvalidGraph)?;
    Ok(BFormCode {
        graph,
        moves: work.log,
    })
}

/// Makes row `col` have a Z-bit in column `col`, trying in order: a plain
/// row swap, an X/Z swap on this qubit, then a qubit swap with the nearest
/// later column that admits either.
fn establish_pivot(work: &mut Work, col: usize) -> bool {
    let find = |work: &Work, c: usize, in_beta: bool| {
        (col..work.n).find(|&r| {
            let word = if in_beta {
                work.betas[r]
            } else {
                work.alphas[r]
            };
            word >> c & 1 == 1
        })
    };
    for candidate in col..work.n {
        let direct = find(work, candidate, true);
        let swapped = if direct.is_none() {
            find(work, candidate, false)
        } else {
            None
        };
        if direct.is_none() && swapped.is_none() {
            continue;
        }
        if candidate != col {
            work.apply(TMove::SwapQubits(col, candidate));
        }
        if direct.is_none() {
            work.apply(TMove::HadamardSwap(col));
        }
        let row = direct.or(swapped).unwrap();
        if row != col {
            work.apply(TMove::SwapRows(row, col));
        }
        return true;
    }
    false
}

/// Replays a move log against a matrix; used to audit a reduction.
pub fn replay(g: &GeneratorMatrix, moves: &[TMove]) -> GeneratorMatrix {
    let mut work = Work {
        n: g.n(),
        alphas: g.rows().iter().map(|r| r.alpha()).collect(),
        betas: g.rows().iter().map(|r| r.beta()).collect(),
        log: Vec::new(),
    };
    for &mv in moves {
        work.apply(mv);
    }
    let rows = work
        .alphas
        .iter()
        .zip(&work.betas)
        .map(|(&a, &b)| PauliVector::new(g.n(), a, b).expect("moves preserve range"))
        .collect();
    GeneratorMatrix::from_rows_unchecked(rows)
}

/// Applies only the qubit-level T-equivalences of a log (permutations and
/// X/Z swaps) to a single Pauli string. Row moves act on generating sets,
/// not on individual codewords, so they are skipped.
pub fn apply_qubit_moves(p: &PauliVector, moves: &[TMove]) -> PauliVector {
    let mut alpha = p.alpha();
    let mut beta = p.beta();
    for &mv in moves {
        match mv {
            TMove::SwapQubits(i, j) => {
                for word in [&mut alpha, &mut beta] {
                    let bi = *word >> i & 1;
                    let bj = *word >> j & 1;
                    if bi != bj {
                        *word ^= (1u128 << i) | (1 << j);
                    }
                }
            }
            TMove::HadamardSwap(q) => {
                let bit = 1u128 << q;
                let ab = alpha & bit;
                let bb = beta & bit;
                alpha = (alpha & !bit) | bb;
                beta = (beta & !bit) | ab;
            }
            TMove::SwapRows(..) | TMove::AddRow { .. } => {}
        }
    }
    PauliVector::new(p.n(), alpha, beta).expect("qubit moves preserve range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique, Graph};
    use crate::rng::SplitMix64;
    use crate::stabilizer::pauli::gray_encode;

    fn codeword_set(g: &GeneratorMatrix) -> std::collections::BTreeSet<(u128, u128)> {
        g.codewords()
            .unwrap()
            .map(|w| (w.alpha(), w.beta()))
            .collect()
    }

    #[test]
    fn standard_form_is_a_fixed_point() {
        let code = GeneratorMatrix::from_graph(&clique(3));
        let reduced = bform_reduce(&code).unwrap();
        assert_eq!(reduced.graph(), &clique(3));
        assert!(reduced.moves().is_empty());
    }

    #[test]
    fn two_qubit_swap_case() {
        // Rows {ZX, XZ}: one X/Z swap per qubit away from (B|I) with B = K_2.
        let code =
            GeneratorMatrix::new(vec![gray_encode("Ww").unwrap(), gray_encode("wW").unwrap()])
                .unwrap();
        let reduced = bform_reduce(&code).unwrap();
        assert_eq!(reduced.graph(), &clique(2));
    }

    #[test]
    fn replaying_the_log_reproduces_standard_form() {
        let mut rng = SplitMix64::new(21);
        for n in 2..=8usize {
            let g = random_graph(&mut rng, n);
            let scrambled = scramble(&GeneratorMatrix::from_graph(&g), &mut rng, 40);
            let reduced = bform_reduce(&scrambled).unwrap();
            let replayed = replay(&scrambled, reduced.moves());
            assert_eq!(replayed, reduced.matrix());
        }
    }

    #[test]
    fn reduction_preserves_codewords_up_to_logged_equivalence() {
        let mut rng = SplitMix64::new(5);
        for n in 2..=8usize {
            for _ in 0..4 {
                let g = random_graph(&mut rng, n);
                let scrambled = scramble(&GeneratorMatrix::from_graph(&g), &mut rng, 30);
                let reduced = bform_reduce(&scrambled).unwrap();
                // Push the scrambled code through the logged qubit moves and
                // compare as sets: row moves never change the span.
                let moved: std::collections::BTreeSet<_> = scrambled
                    .codewords()
                    .unwrap()
                    .map(|w| {
                        let m = apply_qubit_moves(&w, reduced.moves());
                        (m.alpha(), m.beta())
                    })
                    .collect();
                assert_eq!(moved, codeword_set(&reduced.matrix()));
            }
        }
    }

    #[test]
    fn row_moves_alone_keep_the_codeword_set() {
        let mut rng = SplitMix64::new(6);
        let original = GeneratorMatrix::from_graph(&random_graph(&mut rng, 6));
        let mut work = Work {
            n: 6,
            alphas: original.rows().iter().map(|r| r.alpha()).collect(),
            betas: original.rows().iter().map(|r| r.beta()).collect(),
            log: Vec::new(),
        };
        for _ in 0..25 {
            let i = rng.next_below(6) as usize;
            let j = rng.next_below(6) as usize;
            if i != j {
                work.apply(TMove::AddRow { src: i, dst: j });
            }
            work.apply(TMove::SwapRows(i, j));
        }
        let rows = work
            .alphas
            .iter()
            .zip(&work.betas)
            .map(|(&a, &b)| PauliVector::new(6, a, b).unwrap())
            .collect();
        let shuffled = GeneratorMatrix::from_rows_unchecked(rows);
        assert_eq!(codeword_set(&original), codeword_set(&shuffled));
    }

    #[test]
    fn stuck_reduction_reports_column() {
        // {XI, ZI}: qubit 2 never acquires support, so the sweep jams there.
        let code =
            GeneratorMatrix::new(vec![gray_encode("w0").unwrap(), gray_encode("W0").unwrap()])
                .unwrap();
        match bform_reduce(&code) {
            Err(CodeError::ReductionStuck { column }) => assert_eq!(column, 2),
            other => panic!("expected stuck reduction, got {other:?}"),
        }
    }

    #[test]
    fn hadamard_only_code_reduces_to_empty_graph() {
        // {XI, IX} is the stabilizer of a product state: B = 0.
        let code =
            GeneratorMatrix::new(vec![gray_encode("w0").unwrap(), gray_encode("0w").unwrap()])
                .unwrap();
        let reduced = bform_reduce(&code).unwrap();
        assert_eq!(reduced.graph(), &Graph::empty(2).unwrap());
    }

    fn random_graph(rng: &mut SplitMix64, n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.next_u64() & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Scrambles a matrix by random moves of every kind.
    fn scramble(g: &GeneratorMatrix, rng: &mut SplitMix64, steps: usize) -> GeneratorMatrix {
        let n = g.n();
        let mut work = Work {
            n,
            alphas: g.rows().iter().map(|r| r.alpha()).collect(),
            betas: g.rows().iter().map(|r| r.beta()).collect(),
            log: Vec::new(),
        };
        for _ in 0..steps {
            match rng.next_below(4) {
                0 => {
                    let i = rng.next_below(n as u64) as usize;
                    let j = rng.next_below(n as u64) as usize;
                    work.apply(TMove::SwapRows(i, j));
                }
                1 => {
                    let src = rng.next_below(n as u64) as usize;
                    let dst = rng.next_below(n as u64) as usize;
                    if src != dst {
                        work.apply(TMove::AddRow { src, dst });
                    }
                }
                2 => {
                    let i = rng.next_below(n as u64) as usize;
                    let j = rng.next_below(n as u64) as usize;
                    work.apply(TMove::SwapQubits(i, j));
                }
                _ => {
                    let q = rng.next_below(n as u64) as usize;
                    work.apply(TMove::HadamardSwap(q));
                }
            }
        }
        let rows = work
            .alphas
            .iter()
            .zip(&work.betas)
            .map(|(&a, &b)| PauliVector::new(n, a, b).unwrap())
            .collect();
        GeneratorMatrix::from_rows_unchecked(rows)
    }
}
