//! Coloured forests on vertices `1..=k` with edge colours `S_1..=S_m`.
//!
//! A forest is valid when it is acyclic, has no repeated edge and no two
//! edges of the same colour meet at a vertex. Each colour `S_r` then acts on
//! the vertex set as an involution ([`ColouredForest::symbol_action`]) and the
//! composite `S_m ∘ … ∘ S_1` is the forest's [`CircularOrder`].

mod canonical;
mod chain;
mod order;

pub use canonical::{canonical_unlabelled, centroids, RootedTree, UnlabelledTree};
pub use chain::{chain_containing, maximal_chains, Chain};
pub use order::CircularOrder;

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Deref;
use thiserror::Error;

/// One of the symbols (edge colours) `S_1..=S_m`, stored 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol(u32);

impl Symbol {
    /// # Panics
    /// Panics if `index` is zero.
    pub fn new(index: usize) -> Self {
        assert!(index >= 1, "symbols are numbered from 1");
        Symbol(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Cyclic successor among `S_1..=S_m`.
    pub fn next(self, m: usize) -> Self {
        self.offset(1, m)
    }

    /// Cyclic predecessor among `S_1..=S_m`.
    pub fn prev(self, m: usize) -> Self {
        self.offset(-1, m)
    }

    pub fn offset(self, delta: i64, m: usize) -> Self {
        let m = m as i64;
        let r = (self.0 as i64 - 1 + delta).rem_euclid(m);
        Symbol((r + 1) as u32)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.0)
    }
}

/// An edge `{u, v}` with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub colour: Symbol,
}

impl Edge {
    /// Builds an edge, ordering the endpoints.
    pub fn new(a: usize, b: usize, colour: Symbol) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        Edge { u, v, colour }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("a forest needs k >= 1 vertices and m >= 1 symbols (got k={k}, m={m})")]
    EmptyParameters { k: usize, m: usize },
    #[error("vertex {vertex} is outside 1..={k}")]
    VertexOutOfRange { vertex: usize, k: usize },
    #[error("symbol S{symbol} is outside S1..=S{m}")]
    SymbolOutOfRange { symbol: usize, m: usize },
    #[error("edge {{{vertex},{vertex}}} is a loop")]
    SelfLoop { vertex: usize },
    #[error("edge {{{u},{v}}} appears more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} has two edges coloured {colour}")]
    DuplicateColourAtVertex { vertex: usize, colour: Symbol },
    #[error("edge {{{u},{v}}} closes a cycle")]
    CycleDetected { u: usize, v: usize },
    #[error("graph has {components} connected components, expected a tree")]
    NotConnected { components: usize },
    #[error("permutation is invalid: {0}")]
    BadPermutation(String),
}

/// A properly edge-coloured forest on `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ForestRepr", into = "ForestRepr")]
pub struct ColouredForest {
    k: usize,
    m: usize,
    edges: Vec<Edge>,
    /// `partner[(v-1)*m + (r-1)]` is the `S_r`-neighbour of `v`, or 0.
    partner: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ForestRepr {
    k: usize,
    m: usize,
    edges: Vec<(usize, usize, usize)>,
}

impl TryFrom<ForestRepr> for ColouredForest {
    type Error = ForestError;
    fn try_from(r: ForestRepr) -> Result<Self, ForestError> {
        ColouredForest::new(r.k, r.m, r.edges)
    }
}

impl From<ColouredForest> for ForestRepr {
    fn from(f: ColouredForest) -> Self {
        ForestRepr {
            k: f.k,
            m: f.m,
            edges: f.edges.iter().map(|e| (e.u, e.v, e.colour.index())).collect(),
        }
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

impl ColouredForest {
    /// Validates and builds a forest from `(u, v, colour)` triples (1-based).
    pub fn new(
        k: usize,
        m: usize,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, ForestError> {
        if k == 0 || m == 0 {
            return Err(ForestError::EmptyParameters { k, m });
        }
        let mut partner = vec![0usize; k * m];
        let mut sets = DisjointSets::new(k + 1);
        let mut list = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (a, b, c) in edges {
            for x in [a, b] {
                if x == 0 || x > k {
                    return Err(ForestError::VertexOutOfRange { vertex: x, k });
                }
            }
            if c == 0 || c > m {
                return Err(ForestError::SymbolOutOfRange { symbol: c, m });
            }
            if a == b {
                return Err(ForestError::SelfLoop { vertex: a });
            }
            let e = Edge::new(a, b, Symbol::new(c));
            if !seen.insert((e.u, e.v)) {
                return Err(ForestError::DuplicateEdge { u: e.u, v: e.v });
            }
            for x in [e.u, e.v] {
                let slot = (x - 1) * m + (c - 1);
                if partner[slot] != 0 {
                    return Err(ForestError::DuplicateColourAtVertex {
                        vertex: x,
                        colour: e.colour,
                    });
                }
            }
            if !sets.union(e.u, e.v) {
                return Err(ForestError::CycleDetected { u: e.u, v: e.v });
            }
            partner[(e.u - 1) * m + (c - 1)] = e.v;
            partner[(e.v - 1) * m + (c - 1)] = e.u;
            list.push(e);
        }
        list.sort();
        Ok(ColouredForest {
            k,
            m,
            edges: list,
            partner,
        })
    }

    pub fn from_edges(k: usize, m: usize, edges: &[Edge]) -> Result<Self, ForestError> {
        Self::new(k, m, edges.iter().map(|e| (e.u, e.v, e.colour.index())))
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("forest serialisation cannot fail")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Edges sorted lexicographically by `(u, v, colour)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The `S_r`-neighbour of `v`, if there is one.
    pub fn neighbour(&self, v: usize, r: Symbol) -> Option<usize> {
        match self.partner[(v - 1) * self.m + (r.index() - 1)] {
            0 => None,
            w => Some(w),
        }
    }

    /// `S_r(v)`: the other end of the `S_r`-edge at `v`, or `v` itself.
    pub fn symbol_action(&self, r: Symbol, v: usize) -> usize {
        self.neighbour(v, r).unwrap_or(v)
    }

    /// Colour of the edge `{a, b}`, if present.
    pub fn edge_colour(&self, a: usize, b: usize) -> Option<Symbol> {
        (1..=self.m)
            .map(Symbol::new)
            .find(|&r| self.neighbour(a, r) == Some(b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident(v).count()
    }

    /// `(colour, neighbour)` pairs at `v` in increasing colour order.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (Symbol, usize)> + '_ {
        let base = (v - 1) * self.m;
        (0..self.m).filter_map(move |r| match self.partner[base + r] {
            0 => None,
            w => Some((Symbol::new(r + 1), w)),
        })
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.k + 1];
        let mut out = Vec::new();
        for start in 1..=self.k {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for (_, y) in self.incident(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.edges.len() + 1 == self.k
    }

    /// `σ = S_m ∘ … ∘ S_1`, applying `S_1` first.
    pub fn circular_order(&self) -> CircularOrder {
        let image = (1..=self.k)
            .map(|v| {
                (1..=self.m)
                    .map(Symbol::new)
                    .fold(v, |x, r| self.symbol_action(r, x))
            })
            .collect();
        CircularOrder::from_image_unchecked(image)
    }

    /// Renames vertex `v` to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, ForestError> {
        if perm.len() != self.k {
            return Err(ForestError::BadPermutation(format!(
                "expected {} images, got {}",
                self.k,
                perm.len()
            )));
        }
        CircularOrder::from_image(perm.to_vec())?;
        Self::new(
            self.k,
            self.m,
            self.edges
                .iter()
                .map(|e| (perm[e.u - 1], perm[e.v - 1], e.colour.index())),
        )
    }
}

/// A connected [`ColouredForest`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ColouredForest", into = "ColouredForest")]
pub struct ColouredTree(ColouredForest);

impl TryFrom<ColouredForest> for ColouredTree {
    type Error = ForestError;
    fn try_from(f: ColouredForest) -> Result<Self, ForestError> {
        if f.is_connected() {
            Ok(ColouredTree(f))
        } else {
            Err(ForestError::NotConnected {
                components: f.k - f.edges.len(),
            })
        }
    }
}

impl From<ColouredTree> for ColouredForest {
    fn from(t: ColouredTree) -> Self {
        t.0
    }
}

impl ColouredTree {
    pub fn new(
        k: usize,
        m: usize,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, ForestError> {
        ColouredForest::new(k, m, edges)?.try_into()
    }

    pub fn from_edges(k: usize, m: usize, edges: &[Edge]) -> Result<Self, ForestError> {
        ColouredForest::from_edges(k, m, edges)?.try_into()
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn as_forest(&self) -> &ColouredForest {
        &self.0
    }

    pub fn into_forest(self) -> ColouredForest {
        self.0
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Self, ForestError> {
        Ok(ColouredTree(self.0.relabel(perm)?))
    }
}

impl Deref for ColouredTree {
    type Target = ColouredForest;
    fn deref(&self) -> &ColouredForest {
        &self.0
    }
}
