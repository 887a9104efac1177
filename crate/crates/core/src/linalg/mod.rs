//! Exact arithmetic modulo a large prime: elements, dense matrices, ranks and
//! determinants, an incremental echelon basis, and the seeded realization of
//! "generic" transition matrices.

mod echelon;
mod field;
mod matrix;
mod spec;

pub use echelon::RowEchelonAccumulator;
pub use field::{is_prime, FieldElement, PrimeField, DEFAULT_PRIME};
pub use matrix::FieldMatrix;
pub use spec::{realize, MatrixSpec};
