//! Named maps over JSON, shared by the command-line tool and the C interface.

use crate::angulation::{ColouredAngulation, LabelledAngulation, RootedAngulation};
use crate::bijection::{
    angulation_to_tree, diagram_to_forest, family_map, forest_to_diagram,
    labelled_angulation_to_tree, labelled_tree_to_angulation, rooted_angulation_to_tree,
    rooted_to_tree, sigma_decompose, sigma_recombine, tree_to_angulation, tree_to_rooted,
    tree_to_rooted_angulation, vertex1_decompose, vertex1_recombine, BijectionError, FamilyObject,
    Vertex1Decomposition,
};
use crate::diagram::RnaDiagram;
use crate::tree::{canonical_unlabelled, ColouredForest, ColouredTree, RootedTree};
use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("unknown map '{0}'; run with --list to see the available maps")]
    UnknownMap(String),
    #[error("could not parse input: {0}")]
    Parse(String),
    #[error(transparent)]
    Invalid(#[from] BijectionError),
}

/// Maps accepted by [`map_json`], with a one-line description each.
pub const MAPS: &[(&str, &str)] = &[
    ("diagram->forest", "noncrossing diagram to its coloured forest"),
    ("forest->diagram", "forest meeting the two conditions to its diagram"),
    ("tree->rooted", "tree with circular order (k ... 1) to rooted tree at k"),
    ("rooted->tree", "rooted tree to the labelled tree with order (k ... 1)"),
    ("tree->unlabelled", "canonical form of the underlying unlabelled tree"),
    ("tree->angulation", "unlabelled tree to coloured angulation"),
    ("angulation->tree", "coloured angulation to its unlabelled dual tree"),
    ("labelled-tree->angulation", "labelled tree to labelled angulation"),
    ("labelled-angulation->tree", "labelled angulation to its labelled dual tree"),
    ("tree->rooted-angulation", "tree with order (k ... 1) to rooted angulation"),
    ("rooted-angulation->tree", "rooted angulation to tree with order (k ... 1)"),
    ("diagram->vertex1", "split along the S_1 arc of vertex 1"),
    ("vertex1->diagram", "inverse of diagram->vertex1"),
    ("diagram->sigma-parts", "split along the walk 1, S_1(1), ..., k"),
    ("sigma-parts->diagram", "inverse of diagram->sigma-parts"),
    ("family:A->B", "between families A, B in 1..6 of S_{k,m} objects"),
];

fn parse<T: DeserializeOwned>(s: &str) -> Result<T, MapError> {
    serde_json::from_str(s).map_err(|e| MapError::Parse(e.to_string()))
}

fn emit<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("library types serialise")
}

fn parse_family(name: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix("family:")?;
    let (a, b) = rest.split_once("->")?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Applies the named map to a JSON object and returns the image as JSON.
pub fn map_json(name: &str, input: &str) -> Result<String, MapError> {
    if let Some((a, b)) = parse_family(name) {
        if !(1..=6).contains(&a) {
            return Err(BijectionError::UnknownFamily(a).into());
        }
        let obj = FamilyObject::from_json(a, input).map_err(|e| MapError::Parse(e.to_string()))?;
        return Ok(family_map(&obj, a, b)?.to_json());
    }
    Ok(match name {
        "diagram->forest" => emit(&diagram_to_forest(&parse::<RnaDiagram>(input)?)?),
        "forest->diagram" => emit(&forest_to_diagram(&parse::<ColouredForest>(input)?)?),
        "tree->rooted" => emit(&tree_to_rooted(&parse::<ColouredTree>(input)?)?),
        "rooted->tree" => emit(&rooted_to_tree(&parse::<RootedTree>(input)?)),
        "tree->unlabelled" => emit(&canonical_unlabelled(&parse::<ColouredTree>(input)?)),
        "tree->angulation" => {
            let t = parse::<ColouredTree>(input)?;
            emit(&tree_to_angulation(&canonical_unlabelled(&t)))
        }
        "angulation->tree" => emit(&angulation_to_tree(&parse::<ColouredAngulation>(input)?)),
        "labelled-tree->angulation" => emit(&labelled_tree_to_angulation(&parse(input)?)),
        "labelled-angulation->tree" => {
            emit(&labelled_angulation_to_tree(&parse::<LabelledAngulation>(input)?))
        }
        "tree->rooted-angulation" => emit(&tree_to_rooted_angulation(&parse(input)?)?),
        "rooted-angulation->tree" => {
            emit(&rooted_angulation_to_tree(&parse::<RootedAngulation>(input)?))
        }
        "diagram->vertex1" => emit(&vertex1_decompose(&parse::<RnaDiagram>(input)?)?),
        "vertex1->diagram" => emit(&vertex1_recombine(&parse::<Vertex1Decomposition>(input)?)?),
        "diagram->sigma-parts" => emit(&sigma_decompose(&parse::<RnaDiagram>(input)?)?),
        "sigma-parts->diagram" => emit(&sigma_recombine(&parse::<Vec<RnaDiagram>>(input)?)?),
        _ => return Err(MapError::UnknownMap(name.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_diagram_gives_edgeless_forest() {
        let out = map_json("diagram->forest", r#"{"k":3,"m":3,"arcs":[]}"#).unwrap();
        assert_eq!(out, r#"{"k":3,"m":3,"edges":[]}"#);
    }

    #[test]
    fn unknown_names_are_reported() {
        assert_eq!(
            map_json("nope", "{}"),
            Err(MapError::UnknownMap("nope".into()))
        );
        assert!(matches!(map_json("tree->rooted", "[1,"), Err(MapError::Parse(_))));
    }

    #[test]
    fn vertex1_round_trip() {
        let d = r#"{"k":2,"m":3,"arcs":[[[1,1],[2,1]]]}"#;
        let parts = map_json("diagram->vertex1", d).unwrap();
        assert_eq!(map_json("vertex1->diagram", &parts).unwrap(), d);
    }
}
