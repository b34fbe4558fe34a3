//! RNA-like diagrams: `k` vertices on a circle, each carrying bases
//! `S_1..S_m` in clockwise order, with arcs joining equal bases on different
//! vertices.
//!
//! Base `S_r` of vertex `v` sits at linear position `(v-1)*m + r`.

use crate::tree::Symbol;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A base `S_symbol` on a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Slot {
    pub vertex: usize,
    pub symbol: Symbol,
}

impl From<(usize, usize)> for Slot {
    fn from((vertex, r): (usize, usize)) -> Self {
        Slot {
            vertex,
            symbol: Symbol::new(r.max(1)),
        }
    }
}

impl From<Slot> for (usize, usize) {
    fn from(s: Slot) -> Self {
        (s.vertex, s.symbol.index())
    }
}

impl Slot {
    pub fn new(vertex: usize, r: usize) -> Self {
        Slot {
            vertex,
            symbol: Symbol::new(r),
        }
    }

    pub fn position(&self, m: usize) -> usize {
        (self.vertex - 1) * m + self.symbol.index()
    }

    pub fn from_position(p: usize, m: usize) -> Self {
        Slot::new((p - 1) / m + 1, (p - 1) % m + 1)
    }
}

/// An arc between bases `S_symbol` of vertices `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub u: usize,
    pub v: usize,
    pub symbol: Symbol,
}

impl Arc {
    pub fn ends(&self) -> (Slot, Slot) {
        (
            Slot {
                vertex: self.u,
                symbol: self.symbol,
            },
            Slot {
                vertex: self.v,
                symbol: self.symbol,
            },
        )
    }

    pub fn positions(&self, m: usize) -> (usize, usize) {
        let (a, b) = self.ends();
        (a.position(m), b.position(m))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("a diagram needs k >= 1 vertices and m >= 1 bases (got k={k}, m={m})")]
    EmptyParameters { k: usize, m: usize },
    #[error("vertex {vertex} is outside 1..={k}")]
    VertexOutOfRange { vertex: usize, k: usize },
    #[error("base S{symbol} is outside S1..=S{m}")]
    SymbolOutOfRange { symbol: usize, m: usize },
    #[error("arc joins unequal bases {a:?} and {b:?}")]
    UnequalBases { a: Slot, b: Slot },
    #[error("arc joins two bases of vertex {vertex}")]
    SelfArc { vertex: usize },
    #[error("base {0:?} carries more than one arc")]
    SlotReused(Slot),
    #[error("shifting by {steps} produced an invalid diagram: {source}")]
    ShiftCollision {
        steps: i64,
        #[source]
        source: Box<DiagramError>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct RnaDiagram {
    k: usize,
    m: usize,
    arcs: Vec<Arc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramRepr {
    k: usize,
    m: usize,
    arcs: Vec<((usize, usize), (usize, usize))>,
}

impl TryFrom<DiagramRepr> for RnaDiagram {
    type Error = DiagramError;
    fn try_from(r: DiagramRepr) -> Result<Self, DiagramError> {
        RnaDiagram::from_pairs(r.k, r.m, r.arcs)
    }
}

impl From<RnaDiagram> for DiagramRepr {
    fn from(d: RnaDiagram) -> Self {
        DiagramRepr {
            k: d.k,
            m: d.m,
            arcs: d
                .arcs
                .iter()
                .map(|a| {
                    let (x, y) = a.ends();
                    (x.into(), y.into())
                })
                .collect(),
        }
    }
}

impl RnaDiagram {
    /// Builds a diagram from pairs of `(vertex, base)` endpoints.
    pub fn from_pairs(
        k: usize,
        m: usize,
        pairs: impl IntoIterator<Item = ((usize, usize), (usize, usize))>,
    ) -> Result<Self, DiagramError> {
        if k == 0 || m == 0 {
            return Err(DiagramError::EmptyParameters { k, m });
        }
        let mut used = vec![false; k * m + 1];
        let mut arcs = Vec::new();
        for ((v1, r1), (v2, r2)) in pairs {
            for v in [v1, v2] {
                if v == 0 || v > k {
                    return Err(DiagramError::VertexOutOfRange { vertex: v, k });
                }
            }
            for r in [r1, r2] {
                if r == 0 || r > m {
                    return Err(DiagramError::SymbolOutOfRange { symbol: r, m });
                }
            }
            let (a, b) = (Slot::new(v1, r1), Slot::new(v2, r2));
            if v1 == v2 {
                return Err(DiagramError::SelfArc { vertex: v1 });
            }
            if r1 != r2 {
                return Err(DiagramError::UnequalBases { a, b });
            }
            for s in [a, b] {
                let p = s.position(m);
                if used[p] {
                    return Err(DiagramError::SlotReused(s));
                }
                used[p] = true;
            }
            arcs.push(Arc {
                u: v1.min(v2),
                v: v1.max(v2),
                symbol: a.symbol,
            });
        }
        arcs.sort_by_key(|a| a.positions(m));
        Ok(RnaDiagram { k, m, arcs })
    }

    pub fn from_arcs(k: usize, m: usize, arcs: &[Arc]) -> Result<Self, DiagramError> {
        Self::from_pairs(
            k,
            m,
            arcs.iter()
                .map(|a| ((a.u, a.symbol.index()), (a.v, a.symbol.index()))),
        )
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serialisation cannot fail")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Arcs sorted by the linear position of their first endpoint.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// The vertex joined to `slot`, if `slot` carries an arc.
    pub fn partner(&self, slot: Slot) -> Option<usize> {
        self.arcs.iter().find_map(|a| {
            if a.symbol != slot.symbol {
                None
            } else if a.u == slot.vertex {
                Some(a.v)
            } else if a.v == slot.vertex {
                Some(a.u)
            } else {
                None
            }
        })
    }

    /// No two arcs interleave around the circle.
    pub fn is_noncrossing(&self) -> bool {
        let n = self.k * self.m;
        let mut at = vec![usize::MAX; n + 1];
        for (idx, a) in self.arcs.iter().enumerate() {
            let (p, q) = a.positions(self.m);
            at[p] = idx;
            at[q] = idx;
        }
        let mut stack: Vec<usize> = Vec::new();
        for &idx in &at[1..] {
            if idx == usize::MAX {
                continue;
            }
            if stack.last() == Some(&idx) {
                stack.pop();
            } else {
                stack.push(idx);
            }
        }
        stack.is_empty()
    }

    /// Number of connected components of the graph on vertices formed by arcs.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..=self.k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut count = self.k;
        for a in &self.arcs {
            let (x, y) = (find(&mut parent, a.u), find(&mut parent, a.v));
            if x != y {
                parent[x] = y;
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// True when no single arc can be added while staying noncrossing.
    pub fn is_saturated(&self) -> bool {
        let n = self.k * self.m;
        let mut used = vec![false; n + 1];
        for a in &self.arcs {
            let (p, q) = a.positions(self.m);
            used[p] = true;
            used[q] = true;
        }
        let crosses = |p: usize, q: usize| {
            self.arcs.iter().any(|a| {
                let (x, y) = a.positions(self.m);
                (p < x && x < q && q < y) || (x < p && p < y && y < q)
            })
        };
        for p in 1..=n {
            if used[p] {
                continue;
            }
            let sp = Slot::from_position(p, self.m);
            for v in sp.vertex + 1..=self.k {
                let q = Slot {
                    vertex: v,
                    symbol: sp.symbol,
                }
                .position(self.m);
                if !used[q] && !crosses(p, q) {
                    return false;
                }
            }
        }
        true
    }

    /// Moves every arc endpoint `steps` bases anticlockwise (towards smaller
    /// positions, wrapping from `S_1` of one vertex to `S_m` of the previous).
    pub fn arc_shift(&self, steps: i64) -> Result<RnaDiagram, DiagramError> {
        let n = (self.k * self.m) as i64;
        let m = self.m;
        let shift = |s: Slot| {
            let p = (s.position(m) as i64 - 1 - steps).rem_euclid(n) + 1;
            let t = Slot::from_position(p as usize, m);
            (t.vertex, t.symbol.index())
        };
        RnaDiagram::from_pairs(
            self.k,
            self.m,
            self.arcs.iter().map(|a| {
                let (x, y) = a.ends();
                (shift(x), shift(y))
            }),
        )
        .map_err(|e| DiagramError::ShiftCollision {
            steps,
            source: Box::new(e),
        })
    }
}
