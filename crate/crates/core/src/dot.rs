//! Graphviz output. Trees draw their edges labelled by colour; angulations
//! draw their dual tree.

use crate::angulation::{face_key, ColouredAngulation, MAngulation};
use crate::diagram::RnaDiagram;
use crate::tree::{ColouredForest, RootedTree};
use serde_json::Value;
use std::fmt::Write;

fn graph(
    name: &str,
    nodes: impl IntoIterator<Item = (usize, String)>,
    edges: impl IntoIterator<Item = (usize, usize, Option<String>)>,
    root: Option<usize>,
) -> String {
    let mut s = format!("graph {name} {{\n");
    for (v, label) in nodes {
        let shape = if Some(v) == root { ", shape=doublecircle" } else { "" };
        writeln!(s, "  {v} [label=\"{label}\"{shape}];").unwrap();
    }
    for (u, v, label) in edges {
        match label {
            Some(l) => writeln!(s, "  {u} -- {v} [label=\"{l}\"];").unwrap(),
            None => writeln!(s, "  {u} -- {v};").unwrap(),
        }
    }
    s.push_str("}\n");
    s
}

pub fn forest_to_dot(f: &ColouredForest) -> String {
    graph(
        "tree",
        (1..=f.k()).map(|v| (v, v.to_string())),
        f.edges().iter().map(|e| (e.u, e.v, Some(e.colour.to_string()))),
        None,
    )
}

pub fn rooted_to_dot(r: &RootedTree) -> String {
    let t = r.tree();
    graph(
        "rooted",
        (1..=t.k()).map(|v| (v, v.to_string())),
        t.edges().iter().map(|e| (e.u, e.v, Some(e.colour.to_string()))),
        Some(r.root()),
    )
}

/// Dual tree of a coloured angulation; nodes are named by their faces.
pub fn angulation_to_dot(c: &ColouredAngulation) -> String {
    let (t, faces) = c.dual_tree();
    graph(
        "dual",
        faces.iter().enumerate().map(|(idx, f)| (idx + 1, face_key(f))),
        t.edges().iter().map(|e| (e.u, e.v, Some(e.colour.to_string()))),
        None,
    )
}

/// Dual tree of an uncoloured angulation, edges unlabelled.
pub fn plain_angulation_to_dot(a: &MAngulation) -> String {
    let faces = a.faces();
    let index = |x: usize, y: usize| {
        faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(&x) && f.contains(&y))
            .map(|(idx, _)| idx + 1)
            .collect::<Vec<_>>()
    };
    graph(
        "dual",
        faces.iter().enumerate().map(|(idx, f)| (idx + 1, face_key(f))),
        a.diagonals().iter().map(|&(x, y)| {
            let ends = index(x, y);
            (ends[0], ends[1], None)
        }),
        None,
    )
}

pub fn diagram_to_dot(d: &RnaDiagram) -> String {
    graph(
        "diagram",
        (1..=d.k()).map(|v| (v, v.to_string())),
        d.arcs().iter().map(|a| (a.u, a.v, Some(a.symbol.to_string()))),
        None,
    )
}

/// Picks a renderer from the keys present in a JSON object.
pub fn json_to_dot(input: &str) -> Result<String, serde_json::Error> {
    let v: Value = serde_json::from_str(input)?;
    let has = |key: &str| v.get(key).is_some();
    Ok(if has("diagonals") {
        if has("colours") {
            let c: ColouredAngulation = serde_json::from_value(strip(&v, &["root", "labels"]))?;
            angulation_to_dot(&c)
        } else {
            plain_angulation_to_dot(&serde_json::from_value(v)?)
        }
    } else if has("arcs") {
        diagram_to_dot(&serde_json::from_value(v)?)
    } else if has("root") {
        rooted_to_dot(&serde_json::from_value(v)?)
    } else {
        forest_to_dot(&serde_json::from_value(v)?)
    })
}

fn strip(v: &Value, keys: &[&str]) -> Value {
    let mut v = v.clone();
    if let Some(obj) = v.as_object_mut() {
        for k in keys {
            obj.remove(*k);
        }
    }
    v
}
