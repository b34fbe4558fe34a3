//! m-angulations of a convex polygon with vertices `1..=n` numbered clockwise,
//! `n = (m-2)k + 2`, cut by `k-1` noncrossing diagonals into `k` m-gons.
//!
//! Faces are stored as sorted vertex lists; walking a face in increasing
//! order of its vertices goes clockwise.

mod coloured;
mod rotation;
mod snake;

pub use coloured::{ColouredAngulation, LabelledAngulation, RootedAngulation};
pub use rotation::{rotate_one_step, Rotation};
pub use snake::{
    find_snakes, induct_r_on_angulation, induct_r_on_angulation_by_rotations,
    induct_r_on_labelled_angulation, SnakePolygon,
};

use crate::tree::Symbol;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub type Diagonal = (usize, usize);
pub type Face = Vec<usize>;

pub(crate) fn norm(a: usize, b: usize) -> Diagonal {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AngulationError {
    #[error("an m-angulation needs m >= 3 and k >= 1 (got m={m}, k={k})")]
    BadParameters { m: usize, k: usize },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("[{0}, {1}] is not a diagonal of the polygon")]
    NotADiagonal(usize, usize),
    #[error("diagonal [{0}, {1}] appears twice")]
    DuplicateDiagonal(usize, usize),
    #[error("diagonal [{0}, {1}] does not cut off pieces of size 2 mod (m-2)")]
    BadDiagonalModulus(usize, usize),
    #[error("diagonals {0:?} and {1:?} cross")]
    DiagonalsCross(Diagonal, Diagonal),
    #[error("expected {expected} diagonals, found {found}")]
    WrongDiagonalCount { expected: usize, found: usize },
    #[error("face {0:?} is not an m-gon")]
    WrongFaceShape(Face),
    #[error("symbol S{symbol} is outside S1..=S{m}")]
    SymbolOutOfRange { symbol: usize, m: usize },
    #[error("edge {0:?} has no colour")]
    MissingColour(Diagonal),
    #[error("{0:?} is not an edge of the angulation")]
    NotAnEdge(Diagonal),
    #[error("face {0:?} is not coloured S1..Sm clockwise")]
    ColourRuleViolated(Face),
    #[error("{0:?} is not a face of the angulation")]
    NotAFace(Face),
    #[error("face labels must be a bijection onto 1..=k: {0}")]
    BadLabels(String),
    #[error("faces {0:?} do not form a maximal snake for the given symbols")]
    NotASnake(Vec<Face>),
    #[error("cannot parse {what} key {key:?}")]
    BadKey { what: &'static str, key: String },
}

/// Splits the polygon whose vertices are listed clockwise in `order` along
/// noncrossing `diagonals`, returning faces with vertices in `order` order.
pub(crate) fn split_faces(order: &[usize], diagonals: &[Diagonal]) -> Vec<Face> {
    let size = order.iter().copied().max().unwrap_or(0) + 1;
    let mut pos = vec![usize::MAX; size];
    for (idx, &v) in order.iter().enumerate() {
        pos[v] = idx;
    }
    let mut faces: Vec<Face> = vec![order.to_vec()];
    for &(x, y) in diagonals {
        let fi = faces
            .iter()
            .position(|f| f.contains(&x) && f.contains(&y))
            .expect("diagonal lies inside some face");
        let f = faces.swap_remove(fi);
        let (mut a, mut b) = (
            f.iter().position(|&v| v == x).unwrap(),
            f.iter().position(|&v| v == y).unwrap(),
        );
        if pos[f[a]] > pos[f[b]] {
            std::mem::swap(&mut a, &mut b);
        }
        let inner = f[a..=b].to_vec();
        let mut outer = f[..=a].to_vec();
        outer.extend_from_slice(&f[b..]);
        faces.push(inner);
        faces.push(outer);
    }
    faces
}

/// Clockwise sides of a face given in clockwise order.
pub(crate) fn face_sides(face: &[usize]) -> Vec<(usize, usize)> {
    (0..face.len())
        .map(|t| (face[t], face[(t + 1) % face.len()]))
        .collect()
}

pub(crate) fn edge_key(e: Diagonal) -> String {
    format!("{}-{}", e.0, e.1)
}

pub(crate) fn face_key(f: &[usize]) -> String {
    f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-")
}

pub(crate) fn parse_key(what: &'static str, key: &str) -> Result<Vec<usize>, AngulationError> {
    key.split('-')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| AngulationError::BadKey {
            what,
            key: key.to_string(),
        })
}

/// An uncoloured m-angulation of the fixed polygon.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AngulationRepr", into = "AngulationRepr")]
pub struct MAngulation {
    m: usize,
    k: usize,
    diagonals: Vec<Diagonal>,
}

/// Shared JSON layout for all angulation flavours. Edge keys are `"i-j"`
/// with `i < j`, face keys list the face's vertices increasingly, `"a-b-c"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct AngulationRepr {
    pub m: usize,
    pub k: usize,
    pub diagonals: Vec<Diagonal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colours: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<Face>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, usize>>,
}

impl TryFrom<AngulationRepr> for MAngulation {
    type Error = AngulationError;
    fn try_from(r: AngulationRepr) -> Result<Self, AngulationError> {
        MAngulation::new(r.m, r.k, r.diagonals)
    }
}

impl From<MAngulation> for AngulationRepr {
    fn from(a: MAngulation) -> Self {
        AngulationRepr {
            m: a.m,
            k: a.k,
            diagonals: a.diagonals,
            colours: None,
            root: None,
            labels: None,
        }
    }
}

impl MAngulation {
    pub fn new(
        m: usize,
        k: usize,
        diagonals: impl IntoIterator<Item = Diagonal>,
    ) -> Result<Self, AngulationError> {
        if m < 3 || k == 0 {
            return Err(AngulationError::BadParameters { m, k });
        }
        let n = (m - 2) * k + 2;
        let step = m - 2;
        let mut list: Vec<Diagonal> = Vec::new();
        for (a, b) in diagonals {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(AngulationError::VertexOutOfRange { vertex: v, n });
                }
            }
            let (i, j) = norm(a, b);
            if i == j || j - i == 1 || (i == 1 && j == n) {
                return Err(AngulationError::NotADiagonal(i, j));
            }
            if (j - i) % step != 1 % step {
                return Err(AngulationError::BadDiagonalModulus(i, j));
            }
            if list.contains(&(i, j)) {
                return Err(AngulationError::DuplicateDiagonal(i, j));
            }
            list.push((i, j));
        }
        for (x, &(a, b)) in list.iter().enumerate() {
            for &(c, d) in &list[x + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(AngulationError::DiagonalsCross((a, b), (c, d)));
                }
            }
        }
        if list.len() != k - 1 {
            return Err(AngulationError::WrongDiagonalCount {
                expected: k - 1,
                found: list.len(),
            });
        }
        list.sort_unstable();
        let ang = MAngulation {
            m,
            k,
            diagonals: list,
        };
        if let Some(bad) = ang.faces().into_iter().find(|f| f.len() != m) {
            return Err(AngulationError::WrongFaceShape(bad));
        }
        Ok(ang)
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("angulation serialisation cannot fail")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of polygon vertices, `(m-2)k + 2`.
    pub fn n(&self) -> usize {
        (self.m - 2) * self.k + 2
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn has_diagonal(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&norm(d.0, d.1)).is_ok()
    }

    pub fn is_side(&self, d: Diagonal) -> bool {
        let (i, j) = norm(d.0, d.1);
        j == i + 1 || (i == 1 && j == self.n())
    }

    /// Polygon sides, normalised, as `[1,2], …, [n-1,n], [1,n]`.
    pub fn sides(&self) -> Vec<Diagonal> {
        let n = self.n();
        (1..n).map(|i| (i, i + 1)).chain([(1, n)]).collect()
    }

    /// Sides and diagonals, sorted.
    pub fn edges(&self) -> Vec<Diagonal> {
        let mut e = self.sides();
        e.extend_from_slice(&self.diagonals);
        e.sort_unstable();
        e
    }

    /// The `k` faces, each sorted, listed in increasing order.
    pub fn faces(&self) -> Vec<Face> {
        let order: Vec<usize> = (1..=self.n()).collect();
        let mut faces = split_faces(&order, &self.diagonals);
        for f in &mut faces {
            f.sort_unstable();
        }
        faces.sort();
        faces
    }

    /// The faces on either side of a diagonal.
    pub fn faces_at(&self, d: Diagonal) -> Result<(Face, Face), AngulationError> {
        let d = norm(d.0, d.1);
        if !self.has_diagonal(d) {
            return Err(AngulationError::NotADiagonal(d.0, d.1));
        }
        let mut found = self
            .faces()
            .into_iter()
            .filter(|f| f.contains(&d.0) && f.contains(&d.1));
        let a = found.next().expect("diagonal borders two faces");
        let b = found.next().expect("diagonal borders two faces");
        Ok((a, b))
    }

    /// Faces with exactly one side that is a diagonal (the single face when `k = 1`).
    pub fn boundary_face_count(&self) -> usize {
        if self.k == 1 {
            return 1;
        }
        self.faces()
            .iter()
            .filter(|f| {
                face_sides(f)
                    .iter()
                    .filter(|&&(a, b)| self.has_diagonal((a, b)))
                    .count()
                    == 1
            })
            .count()
    }

    /// Maps vertex `v` to `v - steps` modulo `n`: a rotation by `steps`
    /// positions anticlockwise.
    pub fn rotated(&self, steps: i64) -> MAngulation {
        let n = self.n();
        let map = |v: usize| rotate_vertex(v, steps, n);
        let mut diagonals: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|&(a, b)| norm(map(a), map(b)))
            .collect();
        diagonals.sort_unstable();
        MAngulation {
            m: self.m,
            k: self.k,
            diagonals,
        }
    }

    /// The rotation with the least diagonal list, and the number of
    /// anticlockwise steps that produces it.
    pub fn canonical_rotation(&self) -> (MAngulation, usize) {
        (0..self.n())
            .map(|s| (self.rotated(s as i64), s))
            .min()
            .expect("polygon has vertices")
    }

    /// Removes `d`, and inserts the diagonal obtained by moving both of its
    /// endpoints one step anticlockwise around the merged `(2m-2)`-gon.
    /// Returns the new angulation and the inserted diagonal.
    pub fn diagonal_rotate(&self, d: Diagonal) -> Result<(MAngulation, Diagonal), AngulationError> {
        let (f, g) = self.faces_at(d)?;
        let d = norm(d.0, d.1);
        let new = rotate_in_merged(&f, &g, d);
        let mut diagonals: Vec<Diagonal> = self
            .diagonals
            .iter()
            .copied()
            .filter(|&x| x != d)
            .chain([new])
            .collect();
        diagonals.sort_unstable();
        Ok((
            MAngulation {
                m: self.m,
                k: self.k,
                diagonals,
            },
            new,
        ))
    }
}

pub(crate) fn rotate_vertex(v: usize, steps: i64, n: usize) -> usize {
    ((v as i64 - 1 - steps).rem_euclid(n as i64) + 1) as usize
}

/// Both faces sorted by vertex number, sharing the diagonal `d`.
pub(crate) fn rotate_in_merged(f: &[usize], g: &[usize], d: Diagonal) -> Diagonal {
    let mut merged: Vec<usize> = f.iter().chain(g.iter()).copied().collect();
    merged.sort_unstable();
    merged.dedup();
    let len = merged.len();
    let a = merged.iter().position(|&v| v == d.0).unwrap();
    let b = merged.iter().position(|&v| v == d.1).unwrap();
    norm(merged[(a + len - 1) % len], merged[(b + len - 1) % len])
}

pub(crate) fn check_symbol(r: usize, m: usize) -> Result<Symbol, AngulationError> {
    if r == 0 || r > m {
        Err(AngulationError::SymbolOutOfRange { symbol: r, m })
    } else {
        Ok(Symbol::new(r))
    }
}
