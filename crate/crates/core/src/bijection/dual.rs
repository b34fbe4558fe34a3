use super::rooted::rooted_to_tree;
use super::{tree_to_rooted, BijectionError};
use crate::angulation::{
    ColouredAngulation, Diagonal, Face, LabelledAngulation, MAngulation, RootedAngulation,
};
use crate::tree::{canonical_unlabelled, ColouredTree, RootedTree, Symbol, UnlabelledTree};
use std::collections::BTreeMap;

struct Embedding<'a> {
    tree: &'a ColouredTree,
    m: usize,
    next: usize,
    diagonals: Vec<Diagonal>,
    colours: Vec<(Diagonal, Symbol)>,
    faces: Vec<Face>,
}

impl Embedding<'_> {
    /// Walks the sides of `v` clockwise, descending into the child behind
    /// each coloured side. `via` is the colour of the edge to the parent.
    fn walk(&mut self, v: usize, parent: usize, via: Option<Symbol>) {
        let m = self.m;
        let order: Vec<Symbol> = match via {
            None => (1..=m).map(Symbol::new).collect(),
            Some(c) => (1..m).map(|t| c.offset(t as i64, m)).collect(),
        };
        for c in order {
            let start = self.next;
            self.faces[v - 1].push(start);
            match self.tree.neighbour(v, c).filter(|&w| w != parent) {
                Some(w) => {
                    self.walk(w, v, Some(c));
                    let end = self.next;
                    self.diagonals.push((start, end));
                    self.colours.push(((start, end), c));
                }
                None => {
                    self.colours.push(((start, start + 1), c));
                    self.next += 1;
                }
            }
        }
        if via.is_some() {
            self.faces[v - 1].push(self.next);
        }
    }
}

/// Draws the tree as a coloured angulation: each vertex becomes an m-gon with
/// sides `S_1, …, S_m` clockwise, glued along the sides named by its edges.
/// Returns the angulation and, for each vertex `v`, its face at index `v - 1`.
pub fn embed_tree(t: &ColouredTree) -> (ColouredAngulation, Vec<Face>) {
    let (k, m) = (t.k(), t.m());
    assert!(m >= 3, "angulations need m >= 3");
    let n = (m - 2) * k + 2;
    let mut e = Embedding {
        tree: t,
        m,
        next: 1,
        diagonals: Vec::new(),
        colours: Vec::new(),
        faces: vec![Vec::new(); k],
    };
    e.walk(1, 0, None);
    debug_assert_eq!(e.next, n + 1);
    let wrap = |v: usize| if v == n + 1 { 1 } else { v };
    let fix = |(a, b): Diagonal| {
        let (a, b) = (wrap(a), wrap(b));
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    };
    let base = MAngulation::new(m, k, e.diagonals.iter().map(|&d| fix(d)))
        .expect("embedding yields an angulation");
    let colours: BTreeMap<Diagonal, Symbol> =
        e.colours.iter().map(|&(d, c)| (fix(d), c)).collect();
    let coloured = ColouredAngulation::new(base, colours).expect("embedding respects the colour rule");
    let faces = e
        .faces
        .into_iter()
        .map(|f| {
            let mut g: Face = f.into_iter().map(wrap).collect();
            g.sort_unstable();
            g
        })
        .collect();
    (coloured, faces)
}

/// The coloured angulation (in canonical rotation) of an unlabelled tree.
pub fn tree_to_angulation(t: &UnlabelledTree) -> ColouredAngulation {
    embed_tree(t.representative()).0.canonical_rotation().0
}

/// The unlabelled dual tree of a coloured angulation.
pub fn angulation_to_tree(c: &ColouredAngulation) -> UnlabelledTree {
    canonical_unlabelled(&c.dual_tree().0)
}

/// Labelled version: face of vertex `v` carries label `v`.
pub fn labelled_tree_to_angulation(t: &ColouredTree) -> LabelledAngulation {
    let (coloured, faces) = embed_tree(t);
    let labels = faces
        .into_iter()
        .enumerate()
        .map(|(idx, f)| (f, idx + 1))
        .collect();
    LabelledAngulation::new(coloured, labels)
        .expect("faces of an embedding are distinct")
        .canonical_rotation()
        .0
}

pub fn labelled_angulation_to_tree(l: &LabelledAngulation) -> ColouredTree {
    l.dual_tree()
}

/// A labelled tree with circular order `(k … 1)` becomes a rooted coloured
/// angulation whose root is the face of vertex `k`.
pub fn tree_to_rooted_angulation(t: &ColouredTree) -> Result<RootedAngulation, BijectionError> {
    let rooted = tree_to_rooted(t)?;
    let (coloured, faces) = embed_tree(rooted.tree());
    let root = faces[rooted.root() - 1].clone();
    Ok(RootedAngulation::new(coloured, root)?.canonical_rotation().0)
}

pub fn rooted_angulation_to_tree(r: &RootedAngulation) -> ColouredTree {
    let (tree, faces) = r.coloured().dual_tree();
    let root = faces
        .iter()
        .position(|f| f == r.root())
        .expect("root is a face")
        + 1;
    rooted_to_tree(&RootedTree::new(tree, root).expect("root is a vertex"))
}
