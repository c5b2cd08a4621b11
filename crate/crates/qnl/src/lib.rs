//! Exact toolkit for self-dual quantum stabilizer codes, the graphs and
//! boolean functions attached to them, and the distance/spectral invariants
//! that link all three pictures.
//!
//! Everything is computed in exact integer arithmetic: spectra are Gaussian
//! integers, ratios are dyadic rationals, and every identity check compares
//! two independently computed sides with zero tolerance.
//!
//! The crate splits into four layers:
//!
//! - [`graph`] — bit-packed adjacency matrices, constructors (cliques,
//!   nested cliques, circulants, seeded random regular graphs) and an exact
//!   maximum-independent-set solver.
//! - [`stabilizer`] — binary symplectic codes: the GF(4) correspondence,
//!   standard-form reduction, Hamming/binary distance search and the lattice
//!   minimum-norm computation.
//! - [`boolean`] — truth tables, Walsh-Hadamard and nega-Hadamard spectra,
//!   autocorrelation families, propagation-criterion distances and
//!   peak-to-average power ratios.
//! - [`verify`] — one check per identity tying the layers together, each
//!   comparing independently computed sides exactly.
//!
//! The `qnl` binary drives batch runs; see the book under `book/` for a
//! guided tour.

pub mod boolean;
pub mod exact;
pub mod graph;
pub mod io;
pub mod rng;
pub mod stabilizer;
pub mod verify;

#[cfg(doctest)]
mod book;
