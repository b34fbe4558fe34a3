//! Explicit bijections between diagrams, trees, rooted trees, angulations and
//! plane trees.

mod decompose;
mod diagram_forest;
mod dual;
mod family;
mod plane;
mod rooted;

pub use decompose::{
    extend_diagram, restrict_extension, sigma_decompose, sigma_recombine, vertex1_decompose,
    vertex1_recombine, Vertex1Decomposition,
};
pub use diagram_forest::{check_forest_conditions, diagram_to_forest, forest_to_diagram};
pub use dual::{
    angulation_to_tree, embed_tree, labelled_angulation_to_tree, labelled_tree_to_angulation,
    rooted_angulation_to_tree, tree_to_angulation, tree_to_rooted_angulation,
};
pub use family::{check_family_member, family_map, family_path, FamilyObject};
pub use plane::PlaneTree;
pub use rooted::{rooted_to_tree, tree_to_rooted};

use crate::angulation::AngulationError;
use crate::diagram::DiagramError;
use crate::tree::ForestError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error(transparent)]
    Forest(#[from] ForestError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Angulation(#[from] AngulationError),
    #[error("diagram has crossing arcs")]
    Crossing,
    #[error("diagram is not connected")]
    NotConnected,
    #[error("vertices {a1} > {b1} > {a2} > {b2} interleave two components")]
    ConditionAViolated {
        a1: usize,
        b1: usize,
        a2: usize,
        b2: usize,
    },
    #[error("circular order sends {vertex} to {found}, expected {expected}")]
    ConditionBViolated {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("circular order is {found}, expected {expected}")]
    WrongCircularOrder { expected: String, found: String },
    #[error("object is not in family ({item}): {reason}")]
    NotInFamily { item: usize, reason: String },
    #[error("no family numbered {0}; families are 1 to 6")]
    UnknownFamily(usize),
}

pub(crate) fn not_in(item: usize, reason: impl Into<String>) -> BijectionError {
    BijectionError::NotInFamily {
        item,
        reason: reason.into(),
    }
}
