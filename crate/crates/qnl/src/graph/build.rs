//! Graph constructors: cliques, nested cliques, circulants and seeded
//! random regular graphs.

use super::{Graph, GraphError, MAX_VERTICES};
use crate::rng::SplitMix64;

/// Complete graph on `t` vertices.
pub fn clique(t: usize) -> Graph {
    assert!(t >= 1 && t <= MAX_VERTICES, "clique size out of range");
    let full = super::mask_full(t);
    let rows = (0..t).map(|i| full ^ (1 << i)).collect();
    Graph { n: t, rows }
}

/// Bijection on `{0, .., t-1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GraphError> {
        let t = images.len();
        let mut seen = vec![false; t];
        for &img in &images {
            if img >= t || seen[img] {
                return Err(GraphError::BadPermutation {
                    reason: format!("images {images:?} are not a bijection on 0..{t}"),
                });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(t: usize) -> Self {
        Permutation {
            images: (0..t).collect(),
        }
    }

    /// The full cycle `i -> i+1 (mod t)`.
    pub fn cycle(t: usize) -> Self {
        Permutation {
            images: (0..t).map(|i| (i + 1) % t).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}

/// How the cross-block matchings of a nested clique are chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaRule {
    /// `sigma_k(i) = m + (i-1)(l+1) mod t` for `k = l*t + m`, `1 <= m <= t`.
    /// The affine step keeps `sigma_1` the identity and stays bijective for
    /// prime `t`.
    PaperAffine,
    /// Every non-adjacent block pair matched by the full cycle.
    Cyclic,
    /// Explicit permutations in canonical pair order.
    Explicit(Vec<Permutation>),
}

/// Specification of a nested clique graph: `t` blocks of `K_t` glued by
/// bijective matchings. Adjacent blocks are always matched by the identity;
/// the remaining `(t-1)(t-2)/2` pairs follow `rule`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedCliqueSpec {
    t: usize,
    rule: SigmaRule,
}

impl NestedCliqueSpec {
    pub fn new(t: usize, rule: SigmaRule) -> Result<Self, GraphError> {
        if t < 2 || t * t > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: t * t });
        }
        match &rule {
            SigmaRule::PaperAffine => {
                if !is_odd_prime(t) {
                    return Err(GraphError::BadPermutation {
                        reason: format!("affine sigma rule requires an odd prime t, got {t}"),
                    });
                }
            }
            SigmaRule::Explicit(perms) => {
                let expected = (t - 1) * (t - 2) / 2;
                if perms.len() != expected {
                    return Err(GraphError::BadPermutation {
                        reason: format!(
                            "expected {expected} permutations for t={t}, got {}",
                            perms.len()
                        ),
                    });
                }
                if perms.iter().any(|p| p.len() != t) {
                    return Err(GraphError::BadPermutation {
                        reason: format!("every permutation must act on {t} elements"),
                    });
                }
            }
            SigmaRule::Cyclic => {}
        }
        Ok(NestedCliqueSpec { t, rule })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    fn sigma(&self, k: usize) -> Permutation {
        match &self.rule {
            SigmaRule::Explicit(perms) => perms[k - 1].clone(),
            SigmaRule::Cyclic => Permutation::cycle(self.t),
            SigmaRule::PaperAffine => {
                let t = self.t;
                let l = (k - 1) / t;
                let m = k - l * t;
                debug_assert!(l + 1 < t);
                let images = (0..t).map(|i| ((m - 1) + i * (l + 1)) % t).collect();
                Permutation::new(images).expect("affine map over a prime modulus is a bijection")
            }
        }
    }
}

/// Non-adjacent block pairs `(i, j)`, `j >= i+2`, in canonical order: block
/// distance `j-i` descending, then `i` ascending. This places `sigma_1` at
/// `(1, t)` and `sigma_2, sigma_3` at `(1, t-1), (2, t)`.
pub(crate) fn canonical_pairs(blocks: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for d in (2..blocks).rev() {
        for i in 0..(blocks - d) {
            pairs.push((i, i + d));
        }
    }
    pairs
}

/// Builds the `t^2`-vertex nested clique graph `[K_t[K_t]]`.
pub fn nested_clique(spec: &NestedCliqueSpec) -> Graph {
    let t = spec.t;
    let pairs = canonical_pairs(t);
    let sigmas: Vec<Permutation> = (1..=pairs.len()).map(|k| spec.sigma(k)).collect();
    nested_clique_blocks(t, t, &sigmas).expect("validated spec produces a valid graph")
}

/// General nested clique `[K_m[K_t]]`: `m` blocks of `K_t`, adjacent blocks
/// matched by the identity, remaining pairs by `sigmas` in canonical order.
pub fn nested_clique_blocks(
    m: usize,
    t: usize,
    sigmas: &[Permutation],
) -> Result<Graph, GraphError> {
    let n = m * t;
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n });
    }
    let pairs = canonical_pairs(m);
    if sigmas.len() != pairs.len() {
        return Err(GraphError::BadPermutation {
            reason: format!("expected {} matchings, got {}", pairs.len(), sigmas.len()),
        });
    }
    if sigmas.iter().any(|p| p.len() != t) {
        return Err(GraphError::BadPermutation {
            reason: format!("matchings must act on {t} elements"),
        });
    }
    let mut edges = Vec::new();
    for b in 0..m {
        for p in 0..t {
            for q in (p + 1)..t {
                edges.push((b * t + p, b * t + q));
            }
        }
    }
    for b in 0..m.saturating_sub(1) {
        for p in 0..t {
            edges.push((b * t + p, (b + 1) * t + p));
        }
    }
    for (pair, sigma) in pairs.iter().zip(sigmas) {
        let (i, j) = *pair;
        for p in 0..t {
            edges.push((i * t + p, j * t + sigma.apply(p)));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Circulant graph from its first adjacency row. The row must start with 0
/// and be symmetric under reversal (`r_i = r_{n-i}`), otherwise the shifted
/// matrix would not be a valid adjacency matrix.
pub fn circulant(first_row: &[bool]) -> Result<Graph, GraphError> {
    let n = first_row.len();
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n });
    }
    if first_row[0] {
        return Err(GraphError::BadCirculantRow {
            reason: "r_0 must be 0 (zero diagonal)".into(),
        });
    }
    for i in 1..n {
        if first_row[i] != first_row[n - i] {
            return Err(GraphError::BadCirculantRow {
                reason: format!("r_{i} != r_{} breaks symmetry", n - i),
            });
        }
    }
    let rows = (0..n)
        .map(|i| {
            let mut row = 0u128;
            for (j, row_bit) in (0..n).map(|j| first_row[(j + n - i) % n]).enumerate() {
                if row_bit {
                    row |= 1 << j;
                }
            }
            row
        })
        .collect();
    Graph::new(rows)
}

/// Block graph `[[A, B], [B^T, A]]` built from two circulant first rows.
/// `a_row` must itself define a valid circulant graph; `b_row` is an
/// arbitrary circulant block.
pub fn two_circulant(a_row: &[bool], b_row: &[bool]) -> Result<Graph, GraphError> {
    let n = a_row.len();
    if n != b_row.len() {
        return Err(GraphError::BadCirculantRow {
            reason: format!("row lengths differ: {n} vs {}", b_row.len()),
        });
    }
    let a = circulant(a_row)?;
    if 2 * n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n: 2 * n });
    }
    let mut rows = vec![0u128; 2 * n];
    for i in 0..n {
        let mut b_block = 0u128;
        for j in 0..n {
            if b_row[(j + n - i) % n] {
                b_block |= 1 << j;
            }
        }
        rows[i] = a.row(i) | b_block << n;
    }
    for j in 0..n {
        let mut bt = 0u128;
        for i in 0..n {
            if rows[i] >> (n + j) & 1 == 1 {
                bt |= 1 << i;
            }
        }
        rows[n + j] = bt | a.row(j) << n;
    }
    Graph::new(rows)
}

/// Seeded random `degree`-regular simple graph via the pairing model.
///
/// Unmatched stubs are paired one edge at a time; a drawn pair that would
/// create a loop or repeat an edge is rejected and redrawn, and the whole
/// attempt restarts only when no suitable pair remains. Rejecting a full
/// matching outright has acceptance rate about `exp(-(d^2-1)/4)`, hopeless
/// for the degrees this crate samples, while pairwise rejection stays cheap
/// and asymptotically uniform.
pub fn random_regular(n: usize, degree: usize, seed: u64) -> Result<Graph, GraphError> {
    const MAX_ATTEMPTS: u32 = 10_000;
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n });
    }
    if degree >= n || (n * degree) % 2 != 0 {
        return Err(GraphError::InfeasibleDegree { n, degree });
    }
    if degree == 0 {
        return Graph::empty(n);
    }
    let mut rng = SplitMix64::new(seed);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let mut stubs: Vec<usize> = (0..n)
            .flat_map(|v| std::iter::repeat(v).take(degree))
            .collect();
        let mut rows = vec![0u128; n];
        while !stubs.is_empty() {
            let mut suitable = false;
            // Bounded redraw; on repeated failure check whether any suitable
            // pair exists at all before giving up on the attempt.
            for _ in 0..50 {
                let i = rng.next_below(stubs.len() as u64) as usize;
                let j = rng.next_below(stubs.len() as u64) as usize;
                let (u, v) = (stubs[i], stubs[j]);
                if u == v || rows[u] >> v & 1 == 1 {
                    continue;
                }
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
                let (hi, lo) = (i.max(j), i.min(j));
                stubs.swap_remove(hi);
                stubs.swap_remove(lo);
                suitable = true;
                break;
            }
            if !suitable {
                if has_suitable_pair(&stubs, &rows) {
                    continue;
                }
                continue 'attempt;
            }
        }
        return Ok(Graph { n, rows });
    }
    Err(GraphError::SamplingRetriesExceeded {
        attempts: MAX_ATTEMPTS,
    })
}

fn has_suitable_pair(stubs: &[usize], rows: &[u128]) -> bool {
    for (idx, &u) in stubs.iter().enumerate() {
        for &v in &stubs[idx + 1..] {
            if u != v && rows[u] >> v & 1 == 0 {
                return true;
            }
        }
    }
    false
}

fn is_odd_prime(t: usize) -> bool {
    if t < 3 || t % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= t {
        if t % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_shape() {
        let g = clique(1);
        assert_eq!(g.edge_count(), 0);
        let g = clique(3);
        assert_eq!(g.edge_count(), 3);
        for t in 1..=50 {
            assert_eq!(clique(t).edge_count(), t * (t - 1) / 2);
        }
    }

    #[test]
    fn canonical_pair_order_matches_block_layout() {
        // For 5 blocks: sigma_1 at (1,5), sigma_2 at (1,4), sigma_3 at (2,5), ...
        assert_eq!(
            canonical_pairs(5),
            vec![(0, 4), (0, 3), (1, 4), (0, 2), (1, 3), (2, 4)]
        );
        assert_eq!(canonical_pairs(3), vec![(0, 2)]);
        assert_eq!(canonical_pairs(2), vec![]);
    }

    #[test]
    fn affine_sigma_starts_at_identity() {
        let spec = NestedCliqueSpec::new(5, SigmaRule::PaperAffine).unwrap();
        assert_eq!(spec.sigma(1), Permutation::identity(5));
        // k = 6 -> l = 1, m = 1 -> step 2.
        assert_eq!(
            spec.sigma(6),
            Permutation::new(vec![0, 2, 4, 1, 3]).unwrap()
        );
    }

    #[test]
    fn affine_rule_rejects_non_prime() {
        assert!(NestedCliqueSpec::new(9, SigmaRule::PaperAffine).is_err());
        assert!(NestedCliqueSpec::new(4, SigmaRule::PaperAffine).is_err());
    }

    #[test]
    fn nested_clique_regularity() {
        for t in [3usize, 5, 7] {
            let rule = if t == 3 {
                SigmaRule::Cyclic
            } else {
                SigmaRule::PaperAffine
            };
            let g = nested_clique(&NestedCliqueSpec::new(t, rule).unwrap());
            assert_eq!(g.n(), t * t);
            assert_eq!(g.is_regular(), Some(2 * t - 2));
        }
    }

    #[test]
    fn nested_clique_blocks_builds_k2k3() {
        // Two triangles joined by a perfect matching.
        let g = nested_clique_blocks(2, 3, &[]).unwrap();
        let want = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 4),
                (3, 5),
                (4, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(g, want);
    }

    #[test]
    fn circulant_cycles() {
        let g = circulant(&[false, true, false, true]).unwrap();
        assert_eq!(
            g,
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
        );
        let g = circulant(&[false, true, false, false, true]).unwrap();
        assert_eq!(g.is_regular(), Some(2));
        assert_eq!(g.edge_count(), 5);
        assert!(circulant(&[true, false]).is_err());
        assert!(circulant(&[false, true, false, false]).is_err());
    }

    #[test]
    fn two_circulant_blocks() {
        // B = 0: two disjoint copies of the circulant.
        let a = [false, true, false, true];
        let zero = [false; 4];
        let g = two_circulant(&a, &zero).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert!(!g.has_edge(0, 4));
        // A = 0, B = I: perfect matching.
        let ident = [true, false, false, false];
        let g = two_circulant(&zero, &ident).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.is_regular(), Some(1));
        for i in 0..4 {
            assert!(g.has_edge(i, 4 + i));
        }
        // Degree adds across blocks.
        let g = two_circulant(&a, &[false, true, false, false]).unwrap();
        assert_eq!(g.is_regular(), Some(3));
    }

    #[test]
    fn random_regular_basics() {
        // The only simple 3-regular graph on 4 vertices is K_4.
        let g = random_regular(4, 3, 123).unwrap();
        assert_eq!(g, clique(4));
        // 2-regular: disjoint cycles covering all vertices.
        let g = random_regular(6, 2, 5).unwrap();
        assert_eq!(g.is_regular(), Some(2));
        // Determinism.
        assert_eq!(
            random_regular(20, 5, 99).unwrap(),
            random_regular(20, 5, 99).unwrap()
        );
        assert!(random_regular(5, 3, 0).is_err());
    }
}
