//! Six equinumerous families counted by `S_{k,m}` and the maps between them:
//!
//! 1. connected noncrossing diagrams on `k + 1` vertices whose last vertex
//!    carries a single arc, on `S_1`;
//! 2. labelled trees on `k + 1` vertices with circular order `(k+1 … 1)` and
//!    vertex `k + 1` a leaf on an `S_1` edge;
//! 3. rooted trees on `k + 1` vertices whose root is a leaf on an `S_1` edge;
//! 4. m-angulations of the fixed `((m-2)k+2)`-gon;
//! 5. rooted trees on `k` vertices with no `S_1` edge at the root;
//! 6. complete `(m-1)`-ary plane trees with `k` internal vertices.

use super::rooted::{rooted_to_tree, tree_to_rooted};
use super::{diagram_to_forest, embed_tree, forest_to_diagram, not_in, BijectionError, PlaneTree};
use crate::angulation::{ColouredAngulation, MAngulation};
use crate::diagram::{RnaDiagram, Slot};
use crate::tree::{CircularOrder, ColouredTree, RootedTree, Symbol};
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FamilyObject {
    Diagram(RnaDiagram),
    Tree(ColouredTree),
    Rooted(RootedTree),
    Angulation(MAngulation),
    Plane(PlaneTree),
}

impl FamilyObject {
    /// Parses JSON as a member of family `item` (shape only; membership is
    /// checked by [`check_family_member`]).
    pub fn from_json(item: usize, s: &str) -> Result<Self, serde_json::Error> {
        Ok(match item {
            1 => FamilyObject::Diagram(RnaDiagram::from_json(s)?),
            2 => FamilyObject::Tree(ColouredTree::from_json(s)?),
            3 | 5 => FamilyObject::Rooted(serde_json::from_str(s)?),
            4 => FamilyObject::Angulation(MAngulation::from_json(s)?),
            _ => FamilyObject::Plane(PlaneTree::from_json(s)?),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family objects serialise")
    }
}

fn check_item(item: usize) -> Result<(), BijectionError> {
    if (1..=6).contains(&item) {
        Ok(())
    } else {
        Err(BijectionError::UnknownFamily(item))
    }
}

fn expect_kind(item: usize, obj: &FamilyObject) -> Result<(), BijectionError> {
    let ok = matches!(
        (item, obj),
        (1, FamilyObject::Diagram(_))
            | (2, FamilyObject::Tree(_))
            | (3 | 5, FamilyObject::Rooted(_))
            | (4, FamilyObject::Angulation(_))
            | (6, FamilyObject::Plane(_))
    );
    if ok {
        Ok(())
    } else {
        Err(not_in(item, "wrong kind of object"))
    }
}

fn check_tree(t: &ColouredTree) -> Result<(), BijectionError> {
    let k = t.k();
    if t.circular_order() != CircularOrder::descending(k) {
        return Err(not_in(2, "circular order is not (k+1 … 1)"));
    }
    let s1 = t.neighbour(k, Symbol::new(1));
    if t.degree(k) != 1 || s1.is_none() {
        return Err(not_in(2, "last vertex is not a leaf on an S_1 edge"));
    }
    Ok(())
}

fn check_leaf_root(r: &RootedTree) -> Result<(), BijectionError> {
    let t = r.tree();
    if t.degree(r.root()) != 1 || t.neighbour(r.root(), Symbol::new(1)).is_none() {
        return Err(not_in(3, "root is not a leaf on an S_1 edge"));
    }
    Ok(())
}

/// Checks that `obj` is a member of family `item`, naming the failing
/// condition otherwise.
pub fn check_family_member(obj: &FamilyObject, item: usize) -> Result<(), BijectionError> {
    check_item(item)?;
    expect_kind(item, obj)?;
    match obj {
        FamilyObject::Diagram(d) => {
            let k = d.k();
            if !d.is_noncrossing() {
                return Err(not_in(1, "diagram has crossing arcs"));
            }
            if !d.is_connected() {
                return Err(not_in(1, "diagram is not connected"));
            }
            let last: Vec<_> = d
                .arcs()
                .iter()
                .flat_map(|a| {
                    let (x, y) = a.ends();
                    [x, y]
                })
                .filter(|s| s.vertex == k)
                .collect();
            if last != [Slot::new(k, 1)] {
                return Err(not_in(1, "last vertex does not carry S_1 only"));
            }
            Ok(())
        }
        FamilyObject::Tree(t) => check_tree(t),
        FamilyObject::Rooted(r) if item == 3 => check_leaf_root(r),
        FamilyObject::Rooted(r) => {
            if r.tree().neighbour(r.root(), Symbol::new(1)).is_some() {
                return Err(not_in(5, "root has an S_1 edge"));
            }
            Ok(())
        }
        FamilyObject::Angulation(_) => Ok(()),
        FamilyObject::Plane(p) => {
            if p.is_leaf() {
                return Err(not_in(6, "plane tree has no internal vertex"));
            }
            let arity = p.children.len();
            if arity < 2 || !p.is_complete(arity) {
                return Err(not_in(6, "plane tree is not complete"));
            }
            Ok(())
        }
    }
}

fn step(obj: FamilyObject, from: usize, to: usize) -> Result<FamilyObject, BijectionError> {
    use FamilyObject as F;
    Ok(match (from, to, obj) {
        (1, 2, F::Diagram(d)) => {
            let f = diagram_to_forest(&d)?;
            F::Tree(ColouredTree::try_from(f)?)
        }
        (2, 1, F::Tree(t)) => F::Diagram(forest_to_diagram(&t)?),
        (2, 3, F::Tree(t)) => F::Rooted(tree_to_rooted(&t)?),
        (3, 2, F::Rooted(r)) => F::Tree(rooted_to_tree(&r)),
        (3, 4, F::Rooted(r)) => F::Angulation(remove_root_face(&r)),
        (4, 3, F::Angulation(a)) => F::Rooted(add_root_face(&a)),
        (3, 5, F::Rooted(r)) => F::Rooted(delete_root(&r)),
        (5, 3, F::Rooted(r)) => F::Rooted(add_root(&r)),
        (4, 5, F::Angulation(a)) => F::Rooted(angulation_to_rooted(&a)),
        (5, 4, F::Rooted(r)) => F::Angulation(rooted_to_angulation(&r)),
        (5, 6, F::Rooted(r)) => F::Plane(complete(&r)),
        (6, 5, F::Plane(p)) => F::Rooted(prune(&p)),
        (a, b, _) => unreachable!("no direct map {a}->{b}"),
    })
}

const LINKS: [(usize, usize); 6] = [(1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)];

fn neighbours(x: usize) -> impl Iterator<Item = usize> {
    LINKS.iter().filter_map(move |&(a, b)| {
            if a == x {
                Some(b)
            } else if b == x {
                Some(a)
            } else {
                None
            }
        })
}

/// Shortest sequence of families from `from` to `to`, both ends included.
pub fn family_path(from: usize, to: usize) -> Result<Vec<usize>, BijectionError> {
    check_item(from)?;
    check_item(to)?;
    let mut prev = [0usize; 7];
    let mut seen = [false; 7];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        for y in neighbours(x) {
            if !seen[y] {
                seen[y] = true;
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    Ok(path)
}

/// Carries a member of family `from` to the corresponding member of family `to`.
pub fn family_map(
    obj: &FamilyObject,
    from: usize,
    to: usize,
) -> Result<FamilyObject, BijectionError> {
    check_family_member(obj, from)?;
    let path = family_path(from, to)?;
    let mut cur = obj.clone();
    for w in path.windows(2) {
        cur = step(cur, w[0], w[1])?;
    }
    debug_assert!(check_family_member(&cur, to).is_ok());
    Ok(cur)
}

fn remove_root_face(r: &RootedTree) -> MAngulation {
    let r = r.canonical();
    let t = r.tree();
    let (c, _) = embed_tree(t);
    let k = t.k() - 1;
    let n = (t.m() - 2) * k + 2;
    let diagonals = c
        .base()
        .diagonals()
        .iter()
        .copied()
        .filter(|&d| d != (1, n));
    MAngulation::new(t.m(), k, diagonals).expect("root face sits on the far side of [n, 1]")
}

fn add_root_face(a: &MAngulation) -> RootedTree {
    let (m, k, n) = (a.m(), a.k(), a.n());
    let mut diagonals = a.diagonals().to_vec();
    diagonals.push((1, n));
    let big = MAngulation::new(m, k + 1, diagonals).expect("glued polygon is an angulation");
    let c = ColouredAngulation::colour_from_seed(&big, (1, n), Symbol::new(1))
        .expect("marked edge is an edge");
    rooted_from_face(&c, n + 1)
}

/// Dual rooted tree whose root is the face containing both `1` and `corner`.
fn rooted_from_face(c: &ColouredAngulation, corner: usize) -> RootedTree {
    let (tree, faces) = c.dual_tree();
    let root = faces
        .iter()
        .position(|f| f.contains(&1) && f.contains(&corner))
        .expect("the corner face exists")
        + 1;
    RootedTree::new(tree, root).expect("root is a vertex").canonical()
}

fn delete_root(r: &RootedTree) -> RootedTree {
    let t = r.tree();
    let old = r.root();
    let new_root = t.neighbour(old, Symbol::new(1)).expect("root has an S_1 edge");
    let shift = |v: usize| if v > old { v - 1 } else { v };
    let edges: Vec<_> = t
        .edges()
        .iter()
        .filter(|e| e.u != old && e.v != old)
        .map(|e| (shift(e.u), shift(e.v), e.colour.index()))
        .collect();
    let tree = ColouredTree::new(t.k() - 1, t.m(), edges).expect("deleting a leaf keeps a tree");
    RootedTree::new(tree, shift(new_root))
        .expect("new root is a vertex")
        .canonical()
}

fn add_root(r: &RootedTree) -> RootedTree {
    let t = r.tree();
    let k = t.k();
    let mut edges: Vec<_> = t
        .edges()
        .iter()
        .map(|e| (e.u, e.v, e.colour.index()))
        .collect();
    edges.push((r.root(), k + 1, 1));
    let tree = ColouredTree::new(k + 1, t.m(), edges).expect("root has no S_1 edge");
    RootedTree::new(tree, k + 1)
        .expect("new root is a vertex")
        .canonical()
}

fn angulation_to_rooted(a: &MAngulation) -> RootedTree {
    let c = ColouredAngulation::colour_from_seed(a, (1, a.n()), Symbol::new(1))
        .expect("[n, 1] is a side");
    rooted_from_face(&c, a.n())
}

fn rooted_to_angulation(r: &RootedTree) -> MAngulation {
    // The canonical root is vertex 1, so its S_1 side is [1, 2].
    let (c, _) = embed_tree(r.canonical().tree());
    c.base().rotated(1)
}

fn complete(r: &RootedTree) -> PlaneTree {
    fn go(t: &ColouredTree, v: usize, parent: usize, via: Symbol) -> PlaneTree {
        let m = t.m();
        PlaneTree::node(
            (1..m)
                .map(|s| {
                    let c = via.offset(s as i64, m);
                    match t.neighbour(v, c).filter(|&w| w != parent) {
                        Some(w) => go(t, w, v, c),
                        None => PlaneTree::leaf(),
                    }
                })
                .collect(),
        )
    }
    go(r.tree(), r.root(), 0, Symbol::new(1))
}

fn prune(p: &PlaneTree) -> RootedTree {
    fn go(
        p: &PlaneTree,
        v: usize,
        via: Symbol,
        m: usize,
        next: &mut usize,
        edges: &mut Vec<(usize, usize, usize)>,
    ) {
        for (s, child) in p.children.iter().enumerate() {
            if child.is_leaf() {
                continue;
            }
            let c = via.offset(s as i64 + 1, m);
            *next += 1;
            let w = *next;
            edges.push((v, w, c.index()));
            go(child, w, c, m, next, edges);
        }
    }
    let m = p.children.len() + 1;
    let mut edges = Vec::new();
    let mut next = 1;
    go(p, 1, Symbol::new(1), m, &mut next, &mut edges);
    let tree = ColouredTree::new(next, m, edges).expect("plane tree gives a coloured tree");
    RootedTree::new(tree, 1).expect("root is a vertex").canonical()
}
