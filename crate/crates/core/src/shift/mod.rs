//! The exterior shifting operator `Δ_A` and independent kernel-dimension
//! oracles for it.

mod compound;
mod engine;
mod kernels;

pub use compound::{compound_row, CompoundStrategy};
pub use engine::{
    exterior_shift, exterior_shift_with, shift, shift_seeded, shift_with_matrix, ShiftOptions, ShiftResult, Shifter,
    Validation, DEFAULT_SEED,
};
pub use kernels::{
    image_dim_complete, image_dim_direct, kernel_intersection_dim, kernel_intersection_dim_restricted,
};
