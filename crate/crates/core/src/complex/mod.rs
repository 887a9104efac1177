//! Faces, simplicial complexes and the order-theoretic set combinatorics
//! (lex order, domination, initial segments, intervals).

mod face;
mod simplicial;

pub use face::{dominates, init, interval, lex_less, Face, KSubsets, Vertices, MAX_VERTICES};
pub use simplicial::{is_shifted, FVector, SimplicialComplex};
