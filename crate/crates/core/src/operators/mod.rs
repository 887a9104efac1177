//! Constructions on complexes and the combinatorial formulas for the shifted
//! complexes of unions, cones and near cones.

mod checks;
mod construct;
mod gap;
mod near_cone;
mod sqcup;

pub use checks::{
    join_top_count_check, join_top_count_check_with, lex_compare, union_interval_check, union_interval_check_with,
    union_interval_counts_with,
    LexOrder,
};
pub use construct::{
    antistar, combine, cone, disjoint_union, disjoint_union_same_labels, intersection, join, join_same_labels, link,
    suspension, union, Construction,
};
pub use gap::{clique_sum_shift, d_value, disjoint_union_shift};
pub use near_cone::{
    certificate_decomposition_check, explicit_basis_decomposition_check, is_near_cone, near_cone_analyze, near_cone_decomposition_check,
    NearConeCertificate, NearConeRefusal,
};
pub use sqcup::shifted_union_recursive;
