//! Exterior algebraic shifting of simplicial complexes.
//!
//! The shifting operator is computed by exact linear algebra modulo a large
//! prime, with a seeded random matrix standing in for a generic one. Around it
//! sit the combinatorial shifting formulas for disjoint unions, unions over a
//! simplex, cones, near cones and joins, interior-product homology, and a set of
//! randomized verification suites exposed through the `shiftkit` binary.

pub mod cli;
pub mod complex;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod operators;
pub mod par;
pub mod shift;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use linalg::{FieldElement, FieldMatrix, MatrixSpec, PrimeField};
pub use par::ExecMode;
pub use shift::{exterior_shift, shift, ShiftOptions, ShiftResult};
