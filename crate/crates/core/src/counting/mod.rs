//! Exact counts, the identities relating them, and exhaustive generators.

pub mod enumerate;
pub mod formulas;
pub mod identities;
pub mod tables;

pub use enumerate::{
    enumerate_angulations, enumerate_diagrams, enumerate_plane_trees, enumerate_trees,
};
pub use formulas::{binomial, catalan, factorial, fuss_catalan, s_count, t_count, u_count};
pub use identities::{
    check_catalan_difference, check_convolution, check_gkp_identity, check_recursion,
    check_u_forms,
};
pub use tables::{CountFamily, ReferenceTable};
