//! Minimum norm of the lattice attached to a code.
//!
//! The lattice consists of all integer vectors congruent mod 2 to a
//! codeword `(alpha | beta)`, scaled by `1/sqrt(2)`. Its minimum squared
//! Euclidean norm over nonzero vectors is computed coset by coset: within
//! the coset of a codeword `c` each coordinate minimizes independently over
//! `c_i + 2z`, which prunes the `(2r+1)^{2n}` box to a per-coordinate scan.

use super::code::GeneratorMatrix;
use super::CodeError;
use crate::exact::Dyadic;

/// Qubit cap for lattice enumeration.
pub const MAX_LATTICE_N: usize = 6;

/// Minimum squared norm over nonzero lattice vectors `(c + 2z)/sqrt(2)`
/// with `|z_i| <= box_radius`, as an exact dyadic rational.
pub fn lattice_min_norm(g: &GeneratorMatrix, box_radius: u32) -> Result<Dyadic, CodeError> {
    if g.n() > MAX_LATTICE_N {
        return Err(CodeError::LatticeTooLarge {
            n: g.n(),
            limit: MAX_LATTICE_N,
        });
    }
    if box_radius == 0 {
        return Err(CodeError::EmptyBudget);
    }
    // Per-coordinate minima of (parity + 2z)^2 over |z| <= r.
    let even_min = coordinate_min(0, box_radius); // 0
    let even_second = coordinate_second_min(0, box_radius); // 4 for r >= 1
    let odd_min = coordinate_min(1, box_radius); // 1
    let mut best: Option<u128> = None;
    for word in g.codewords()? {
        let ones = word.binary_weight() as u128;
        let zeros = 2 * g.n() as u128 - ones;
        let norm_sq_double = if word.is_zero() {
            // All-even coset: the zero vector is excluded, so one coordinate
            // must take its second-smallest value.
            (zeros - 1) * even_min + even_second
        } else {
            ones * odd_min + zeros * even_min
        };
        best = Some(best.map_or(norm_sq_double, |b| b.min(norm_sq_double)));
    }
    // Coordinates contribute (c_i + 2z)^2 and the lattice scale divides by 2.
    Ok(Dyadic::new(best.expect("codeword stream includes zero"), 1))
}

fn coordinate_min(parity: i64, r: u32) -> u128 {
    (-(r as i64)..=r as i64)
        .map(|z| (parity + 2 * z).pow(2) as u128)
        .min()
        .unwrap()
}

fn coordinate_second_min(parity: i64, r: u32) -> u128 {
    let mut values: Vec<u128> = (-(r as i64)..=r as i64)
        .map(|z| (parity + 2 * z).pow(2) as u128)
        .collect();
    values.sort_unstable();
    values[1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique, Graph};
    use crate::rng::SplitMix64;
    use crate::stabilizer::distance::{SearchBudget, WeightKind};

    #[test]
    fn k2_coset_minimum_beats_the_even_floor() {
        // K_2 has binary distance 2, so the best coset gives 2/2 = 1.
        let code = GeneratorMatrix::from_graph(&clique(2));
        assert_eq!(lattice_min_norm(&code, 1).unwrap(), Dyadic::from_integer(1));
    }

    #[test]
    fn high_distance_codes_hit_the_even_floor() {
        // Binary distance >= 4 leaves the all-even coset vector of norm 2.
        let code = GeneratorMatrix::from_graph(&clique(5));
        assert_eq!(
            code.min_distance(WeightKind::Binary, &SearchBudget::default())
                .unwrap()
                .value,
            4
        );
        assert_eq!(lattice_min_norm(&code, 1).unwrap(), Dyadic::from_integer(2));
    }

    #[test]
    fn stabilizes_in_the_box_radius() {
        let mut rng = SplitMix64::new(77);
        for n in 1..=5usize {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.next_u64() & 1 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let code = GeneratorMatrix::from_graph(&g);
            let base = lattice_min_norm(&code, 1).unwrap();
            for r in 2..=3 {
                assert!(lattice_min_norm(&code, r).unwrap() <= base);
                assert_eq!(lattice_min_norm(&code, r).unwrap(), base);
            }
            let db = code
                .min_distance(WeightKind::Binary, &SearchBudget::default())
                .unwrap();
            let expected = Dyadic::from_integer(2).min(Dyadic::new(db.value as u128, 1));
            assert_eq!(base, expected);
        }
    }

    #[test]
    fn refuses_large_codes() {
        let code = GeneratorMatrix::from_graph(&clique(7));
        assert!(matches!(
            lattice_min_norm(&code, 1),
            Err(CodeError::LatticeTooLarge { .. })
        ));
    }

    #[test]
    fn nested_clique_five_qubit_subcodes() {
        // Restrict the nine-vertex nested clique to 5-vertex induced
        // subgraphs; the lattice minimum must match the binary-weight
        // enumeration of each subcode coset by coset.
        use crate::graph::{nested_clique, NestedCliqueSpec, SigmaRule};
        let g = nested_clique(&NestedCliqueSpec::new(3, SigmaRule::Cyclic).unwrap());
        let mut rng = SplitMix64::new(9);
        for _ in 0..6 {
            let mut vertices: Vec<usize> = (0..9).collect();
            rng.shuffle(&mut vertices);
            vertices.truncate(5);
            vertices.sort_unstable();
            let sub = g.induced_subgraph(&vertices).unwrap();
            let code = GeneratorMatrix::from_graph(&sub);
            let min_coset = code
                .codewords()
                .unwrap()
                .filter(|w| !w.is_zero())
                .map(|w| w.binary_weight())
                .min()
                .unwrap();
            let expected = Dyadic::from_integer(2).min(Dyadic::new(min_coset as u128, 1));
            assert_eq!(
                lattice_min_norm(&code, 1).unwrap(),
                expected,
                "{vertices:?}"
            );
        }
    }
}
