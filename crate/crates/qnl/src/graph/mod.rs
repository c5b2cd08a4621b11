//! Simple undirected graphs as bit-packed adjacency matrices.
//!
//! A graph on `n <= 128` vertices stores one `u128` adjacency mask per
//! vertex. The same matrix doubles as the symmetric zero-diagonal block of a
//! code in standard form, so most of the crate routes through this type.

mod build;
mod mis;

pub use build::{
    circulant, clique, nested_clique, nested_clique_blocks, random_regular, two_circulant,
};
pub use build::{NestedCliqueSpec, Permutation, SigmaRule};
pub use mis::IndependenceTimeout;

use std::fmt;

/// Hard cap imposed by the `u128` row representation.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices { n: usize },
    EmptyGraph,
    RowCountMismatch { expected: usize, found: usize },
    SelfLoop { vertex: usize },
    NotSymmetric { i: usize, j: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    BadCirculantRow { reason: String },
    BadPermutation { reason: String },
    InfeasibleDegree { n: usize, degree: usize },
    SamplingRetriesExceeded { attempts: u32 },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n } => {
                write!(
                    f,
                    "graph on {n} vertices exceeds the supported maximum of {MAX_VERTICES}"
                )
            }
            GraphError::EmptyGraph => write!(f, "graph must have at least one vertex"),
            GraphError::RowCountMismatch { expected, found } => {
                write!(f, "expected {expected} adjacency rows, found {found}")
            }
            GraphError::SelfLoop { vertex } => {
                write!(f, "vertex {} has a self-loop", vertex + 1)
            }
            GraphError::NotSymmetric { i, j } => {
                write!(f, "adjacency not symmetric at ({}, {})", i + 1, j + 1)
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::BadCirculantRow { reason } => write!(f, "invalid circulant row: {reason}"),
            GraphError::BadPermutation { reason } => write!(f, "invalid permutation: {reason}"),
            GraphError::InfeasibleDegree { n, degree } => {
                write!(f, "no simple {degree}-regular graph on {n} vertices exists")
            }
            GraphError::SamplingRetriesExceeded { attempts } => {
                write!(
                    f,
                    "pairing-model sampling rejected {attempts} times; retry with another seed"
                )
            }
        }
    }
}

impl std::error::Error for GraphError {}

impl Graph {
    /// Validates symmetry and a zero diagonal.
    pub fn new(rows: Vec<u128>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let full = mask_full(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(GraphError::VertexOutOfRange { vertex: 128, n });
            }
            if row >> i & 1 != 0 {
                return Err(GraphError::SelfLoop { vertex: i });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if (rows[i] >> j) & 1 != (rows[j] >> i) & 1 {
                    return Err(GraphError::NotSymmetric { i, j });
                }
            }
        }
        Ok(Graph { n, rows })
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(vec![0; n])
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut rows = vec![0u128; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adjacency mask of vertex `v` (bit `j` set iff `v ~ j`).
    pub fn row(&self, v: usize) -> u128 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Sorted `(degree, multiplicity)` pairs.
    pub fn degree_profile(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for v in 0..self.n {
            *counts.entry(self.degree(v)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Matrix-vector product `xB` over F2 (bit `j` of the result is
    /// `sum_i x_i B_ij mod 2`). Symmetry makes left and right products equal.
    pub fn mul_vec(&self, x: u128) -> u128 {
        let mut acc = 0u128;
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc ^= self.rows[i];
        }
        acc
    }

    /// Subgraph induced by `vertices` (kept in the given order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut rows = vec![0u128; vertices.len()];
        for (a, &u) in vertices.iter().enumerate() {
            if u >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u,
                    n: self.n,
                });
            }
            for (b, &v) in vertices.iter().enumerate() {
                if a != b && self.has_edge(u, v) {
                    rows[a] |= 1 << b;
                }
            }
        }
        Graph::new(rows)
    }
}

pub(crate) fn mask_full(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetry_and_loops() {
        assert!(matches!(
            Graph::new(vec![0b010, 0b000, 0b000]),
            Err(GraphError::NotSymmetric { i: 0, j: 1 })
        ));
        assert!(matches!(
            Graph::new(vec![0b10, 0b11]),
            Err(GraphError::SelfLoop { vertex: 1 })
        ));
        assert!(Graph::new(vec![]).is_err());
    }

    #[test]
    fn edge_accessors() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(0, 3));
        assert_eq!(g.degree_profile(), vec![(1, 2), (2, 2)]);
        assert_eq!(g.is_regular(), None);
    }

    #[test]
    fn mul_vec_is_row_xor() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(g.mul_vec(0b011), g.row(0) ^ g.row(1));
        assert_eq!(g.mul_vec(0), 0);
    }

    #[test]
    fn induced_subgraph_keeps_edges() {
        let g = clique(5);
        let sub = g.induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!(sub, clique(3));
    }
}
