//! Combinatorics of coloured trees, RNA-like diagrams and m-angulations.
//!
//! The crate is organised around a handful of object families that are all
//! counted by the same Fuss-Catalan style numbers:
//!
//! * [`tree`]: forests on vertices `1..=k` whose edges carry colours `S_1..S_m`,
//!   the circular order they induce, maximal chains and canonical forms.
//! * [`diagram`]: RNA-like diagrams on `k` vertices with `m` bases each.
//! * [`angulation`]: m-angulations of polygons, diagonal rotation, the
//!   one-step rotation of a whole angulation and snake induction.
//! * [`bijection`]: the explicit maps between those families.
//! * [`counting`]: closed formulas, identities and exhaustive generators.
//! * [`induction`]: the `R_{i,j}` / `L_{i,j}` moves on trees and their orbits.
//!
//! All counts are exact ([`num_bigint::BigUint`]); all object I/O is JSON.

pub mod angulation;
pub mod bijection;
pub mod counting;
pub mod diagram;
pub mod dispatch;
pub mod dot;
pub mod induction;
pub mod limits;
pub mod tree;
pub mod verify;

pub use angulation::{ColouredAngulation, MAngulation};
pub use diagram::RnaDiagram;
pub use limits::{SizeLimitExceeded, WorkLimit};
pub use tree::{
    canonical_unlabelled, maximal_chains, Chain, CircularOrder, ColouredForest, ColouredTree,
    Edge, ForestError, RootedTree, Symbol, UnlabelledTree,
};
