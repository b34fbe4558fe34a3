use super::{
    check_symbol, edge_key, face_key, face_sides, norm, parse_key, rotate_vertex, AngulationError,
    AngulationRepr, Diagonal, Face, MAngulation,
};
use crate::tree::{ColouredTree, Symbol};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};

/// An m-angulation whose sides and diagonals are coloured so that each face
/// reads `S_1, …, S_m` clockwise (up to a cyclic shift).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AngulationRepr", into = "AngulationRepr")]
pub struct ColouredAngulation {
    base: MAngulation,
    colours: BTreeMap<Diagonal, Symbol>,
}

fn parse_colours(
    raw: &BTreeMap<String, usize>,
    m: usize,
) -> Result<BTreeMap<Diagonal, Symbol>, AngulationError> {
    let mut out = BTreeMap::new();
    for (key, &r) in raw {
        let parts = parse_key("edge", key)?;
        if parts.len() != 2 {
            return Err(AngulationError::BadKey {
                what: "edge",
                key: key.clone(),
            });
        }
        out.insert(norm(parts[0], parts[1]), check_symbol(r, m)?);
    }
    Ok(out)
}

fn colours_repr(c: &BTreeMap<Diagonal, Symbol>) -> BTreeMap<String, usize> {
    c.iter().map(|(&e, s)| (edge_key(e), s.index())).collect()
}

impl TryFrom<AngulationRepr> for ColouredAngulation {
    type Error = AngulationError;
    fn try_from(r: AngulationRepr) -> Result<Self, AngulationError> {
        let raw = r
            .colours
            .clone()
            .ok_or(AngulationError::MissingColour((0, 0)))?;
        let base = MAngulation::new(r.m, r.k, r.diagonals)?;
        let colours = parse_colours(&raw, base.m())?;
        ColouredAngulation::new(base, colours)
    }
}

impl From<ColouredAngulation> for AngulationRepr {
    fn from(c: ColouredAngulation) -> Self {
        let mut r: AngulationRepr = c.base.into();
        r.colours = Some(colours_repr(&c.colours));
        r
    }
}

impl ColouredAngulation {
    pub fn new(
        base: MAngulation,
        colours: BTreeMap<Diagonal, Symbol>,
    ) -> Result<Self, AngulationError> {
        let edges = base.edges();
        for (&e, s) in &colours {
            if edges.binary_search(&e).is_err() {
                return Err(AngulationError::NotAnEdge(e));
            }
            check_symbol(s.index(), base.m())?;
        }
        for &e in &edges {
            if !colours.contains_key(&e) {
                return Err(AngulationError::MissingColour(e));
            }
        }
        let ang = ColouredAngulation { base, colours };
        for f in ang.base.faces() {
            let cs = ang.face_colours(&f);
            let ok = (1..cs.len()).all(|t| cs[t] == cs[t - 1].next(ang.base.m()));
            if !ok {
                return Err(AngulationError::ColourRuleViolated(f));
            }
        }
        Ok(ang)
    }

    /// Colours the whole angulation from a single edge, propagating the
    /// clockwise rule across diagonals.
    pub fn colour_from_seed(
        base: &MAngulation,
        seed: Diagonal,
        colour: Symbol,
    ) -> Result<Self, AngulationError> {
        let seed = norm(seed.0, seed.1);
        let m = base.m();
        check_symbol(colour.index(), m)?;
        if base.edges().binary_search(&seed).is_err() {
            return Err(AngulationError::NotAnEdge(seed));
        }
        let faces = base.faces();
        let mut colours: BTreeMap<Diagonal, Symbol> = BTreeMap::new();
        colours.insert(seed, colour);
        let mut done = vec![false; faces.len()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        let start = faces
            .iter()
            .position(|f| face_sides(f).iter().any(|&(a, b)| norm(a, b) == seed))
            .expect("every edge borders a face");
        queue.push_back(start);
        while let Some(fi) = queue.pop_front() {
            if done[fi] {
                continue;
            }
            done[fi] = true;
            let sides = face_sides(&faces[fi]);
            let (t0, c0) = sides
                .iter()
                .enumerate()
                .find_map(|(t, &(a, b))| colours.get(&norm(a, b)).map(|&c| (t, c)))
                .expect("queued faces have a coloured side");
            for (t, &(a, b)) in sides.iter().enumerate() {
                let c = c0.offset(t as i64 - t0 as i64, m);
                colours.insert(norm(a, b), c);
                if base.has_diagonal((a, b)) {
                    for (gi, g) in faces.iter().enumerate() {
                        if !done[gi] && g.contains(&a) && g.contains(&b) {
                            queue.push_back(gi);
                        }
                    }
                }
            }
        }
        Ok(ColouredAngulation {
            base: base.clone(),
            colours,
        })
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("angulation serialisation cannot fail")
    }

    pub fn base(&self) -> &MAngulation {
        &self.base
    }

    pub fn colours(&self) -> &BTreeMap<Diagonal, Symbol> {
        &self.colours
    }

    pub fn colour(&self, e: Diagonal) -> Option<Symbol> {
        self.colours.get(&norm(e.0, e.1)).copied()
    }

    /// Colours of the face's sides, clockwise from the side leaving its
    /// smallest vertex.
    pub fn face_colours(&self, face: &[usize]) -> Vec<Symbol> {
        face_sides(face)
            .iter()
            .map(|&(a, b)| self.colours[&norm(a, b)])
            .collect()
    }

    /// The side of `face` carrying colour `c`.
    pub fn side_with_colour(&self, face: &[usize], c: Symbol) -> Diagonal {
        face_sides(face)
            .into_iter()
            .map(|(a, b)| norm(a, b))
            .find(|&e| self.colours[&e] == c)
            .expect("each face carries every colour once")
    }

    pub fn rotated(&self, steps: i64) -> ColouredAngulation {
        let n = self.base.n();
        let colours = self
            .colours
            .iter()
            .map(|(&(a, b), &c)| {
                (
                    norm(rotate_vertex(a, steps, n), rotate_vertex(b, steps, n)),
                    c,
                )
            })
            .collect();
        ColouredAngulation {
            base: self.base.rotated(steps),
            colours,
        }
    }

    fn key(&self) -> (Vec<Diagonal>, Vec<Symbol>) {
        (
            self.base.diagonals().to_vec(),
            self.colours.values().copied().collect(),
        )
    }

    /// The rotation with the least `(diagonals, colours)` encoding and the
    /// number of anticlockwise steps that produces it.
    pub fn canonical_rotation(&self) -> (ColouredAngulation, usize) {
        (0..self.base.n())
            .map(|s| (self.rotated(s as i64), s))
            .min_by(|a, b| a.0.key().cmp(&b.0.key()))
            .expect("polygon has vertices")
    }

    /// The dual tree: vertex `t` is the `t`-th face of [`MAngulation::faces`],
    /// and faces sharing a diagonal are joined by an edge of its colour.
    pub fn dual_tree(&self) -> (ColouredTree, Vec<Face>) {
        let faces = self.base.faces();
        let index = |v: usize, w: usize| -> Vec<usize> {
            faces
                .iter()
                .enumerate()
                .filter(|(_, f)| f.contains(&v) && f.contains(&w))
                .map(|(i, _)| i + 1)
                .collect()
        };
        let edges: Vec<(usize, usize, usize)> = self
            .base
            .diagonals()
            .iter()
            .map(|&(a, b)| {
                let ends = index(a, b);
                (ends[0], ends[1], self.colours[&(a, b)].index())
            })
            .collect();
        let tree = ColouredTree::new(self.base.k(), self.base.m(), edges)
            .expect("dual of an angulation is a properly coloured tree");
        (tree, faces)
    }
}

/// A coloured angulation whose faces carry distinct labels `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AngulationRepr", into = "AngulationRepr")]
pub struct LabelledAngulation {
    coloured: ColouredAngulation,
    labels: BTreeMap<Face, usize>,
}

impl TryFrom<AngulationRepr> for LabelledAngulation {
    type Error = AngulationError;
    fn try_from(r: AngulationRepr) -> Result<Self, AngulationError> {
        let raw = r
            .labels
            .clone()
            .ok_or_else(|| AngulationError::BadLabels("missing labels".into()))?;
        let coloured = ColouredAngulation::try_from(r)?;
        let mut labels = BTreeMap::new();
        for (key, &label) in &raw {
            let mut face = parse_key("face", key)?;
            face.sort_unstable();
            labels.insert(face, label);
        }
        LabelledAngulation::new(coloured, labels)
    }
}

impl From<LabelledAngulation> for AngulationRepr {
    fn from(l: LabelledAngulation) -> Self {
        let mut r: AngulationRepr = l.coloured.into();
        r.labels = Some(l.labels.iter().map(|(f, &x)| (face_key(f), x)).collect());
        r
    }
}

impl LabelledAngulation {
    pub fn new(
        coloured: ColouredAngulation,
        labels: BTreeMap<Face, usize>,
    ) -> Result<Self, AngulationError> {
        let faces = coloured.base().faces();
        let k = faces.len();
        if labels.len() != k {
            return Err(AngulationError::BadLabels(format!(
                "expected {k} labels, found {}",
                labels.len()
            )));
        }
        let mut seen = vec![false; k + 1];
        for (f, &x) in &labels {
            if faces.binary_search(f).is_err() {
                return Err(AngulationError::NotAFace(f.clone()));
            }
            if x == 0 || x > k || seen[x] {
                return Err(AngulationError::BadLabels(format!(
                    "label {x} is repeated or outside 1..={k}"
                )));
            }
            seen[x] = true;
        }
        Ok(LabelledAngulation { coloured, labels })
    }

    pub fn coloured(&self) -> &ColouredAngulation {
        &self.coloured
    }

    pub fn labels(&self) -> &BTreeMap<Face, usize> {
        &self.labels
    }

    pub fn label(&self, face: &[usize]) -> Option<usize> {
        self.labels.get(face).copied()
    }

    /// The face carrying `label`.
    pub fn face(&self, label: usize) -> Option<&Face> {
        self.labels.iter().find(|(_, &x)| x == label).map(|(f, _)| f)
    }

    /// The dual tree with vertices named by face labels.
    pub fn dual_tree(&self) -> ColouredTree {
        let (tree, faces) = self.coloured.dual_tree();
        let perm: Vec<usize> = faces.iter().map(|f| self.labels[f]).collect();
        tree.relabel(&perm).expect("labels form a permutation")
    }

    pub fn rotated(&self, steps: i64) -> LabelledAngulation {
        let n = self.coloured.base().n();
        let labels = self
            .labels
            .iter()
            .map(|(f, &x)| {
                let mut g: Face = f.iter().map(|&v| rotate_vertex(v, steps, n)).collect();
                g.sort_unstable();
                (g, x)
            })
            .collect();
        LabelledAngulation {
            coloured: self.coloured.rotated(steps),
            labels,
        }
    }

    pub fn canonical_rotation(&self) -> (LabelledAngulation, usize) {
        (0..self.coloured.base().n())
            .map(|s| (self.rotated(s as i64), s))
            .min_by(|a, b| {
                let ka = (a.0.coloured.key(), a.0.labels.values().collect::<Vec<_>>());
                let kb = (b.0.coloured.key(), b.0.labels.values().collect::<Vec<_>>());
                ka.cmp(&kb)
            })
            .expect("polygon has vertices")
    }
}

/// A coloured angulation with a distinguished face.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AngulationRepr", into = "AngulationRepr")]
pub struct RootedAngulation {
    coloured: ColouredAngulation,
    root: Face,
}

impl TryFrom<AngulationRepr> for RootedAngulation {
    type Error = AngulationError;
    fn try_from(r: AngulationRepr) -> Result<Self, AngulationError> {
        let mut root = r
            .root
            .clone()
            .ok_or_else(|| AngulationError::NotAFace(Vec::new()))?;
        root.sort_unstable();
        RootedAngulation::new(ColouredAngulation::try_from(r)?, root)
    }
}

impl From<RootedAngulation> for AngulationRepr {
    fn from(r: RootedAngulation) -> Self {
        let mut out: AngulationRepr = r.coloured.into();
        out.root = Some(r.root);
        out
    }
}

impl RootedAngulation {
    pub fn new(coloured: ColouredAngulation, root: Face) -> Result<Self, AngulationError> {
        if coloured.base().faces().binary_search(&root).is_err() {
            return Err(AngulationError::NotAFace(root));
        }
        Ok(RootedAngulation { coloured, root })
    }

    pub fn coloured(&self) -> &ColouredAngulation {
        &self.coloured
    }

    pub fn root(&self) -> &Face {
        &self.root
    }

    pub fn rotated(&self, steps: i64) -> RootedAngulation {
        let n = self.coloured.base().n();
        let mut root: Face = self
            .root
            .iter()
            .map(|&v| rotate_vertex(v, steps, n))
            .collect();
        root.sort_unstable();
        RootedAngulation {
            coloured: self.coloured.rotated(steps),
            root,
        }
    }

    pub fn canonical_rotation(&self) -> (RootedAngulation, usize) {
        (0..self.coloured.base().n())
            .map(|s| (self.rotated(s as i64), s))
            .min_by(|a, b| {
                (a.0.coloured.key(), &a.0.root).cmp(&(b.0.coloured.key(), &b.0.root))
            })
            .expect("polygon has vertices")
    }
}
