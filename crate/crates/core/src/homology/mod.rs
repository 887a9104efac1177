//! Interior-product boundary operators, reduced Betti numbers computed two
//! ways, and the Sarkaria chain isomorphisms of a near cone.

mod betti;
mod chain;
mod sarkaria;

pub use betti::{betti_direct, betti_direct_in, betti_from_shifted, BettiVector};
pub use chain::{boundary_matrix, crossings, interior_product, wedge_basis, ChainVector, Sign};
pub use sarkaria::{sarkaria_d, sarkaria_maps, sarkaria_u, SarkariaMaps};
