use super::{not_in, BijectionError};
use crate::diagram::{Arc, RnaDiagram, Slot};
use crate::tree::Symbol;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Vertex1Decomposition {
    /// No arc at `S_1` of vertex 1: the diagram extended by a new last vertex.
    Extension(RnaDiagram),
    /// The `S_1` arc of vertex 1 ends at `v`; `left` lives on vertices
    /// `1..=v`, `right` is the extension of what remains on `v..=k`.
    Pair {
        v: usize,
        left: RnaDiagram,
        right: RnaDiagram,
    },
}

fn require_connected_noncrossing(d: &RnaDiagram) -> Result<(), BijectionError> {
    if !d.is_noncrossing() {
        return Err(BijectionError::Crossing);
    }
    if !d.is_connected() {
        return Err(BijectionError::NotConnected);
    }
    Ok(())
}

/// Adds vertex `k + 1` whose only arc joins its `S_1` to `S_1` of vertex 1.
pub fn extend_diagram(d: &RnaDiagram) -> Result<RnaDiagram, BijectionError> {
    let k = d.k();
    let mut arcs = d.arcs().to_vec();
    arcs.push(Arc {
        u: 1,
        v: k + 1,
        symbol: Symbol::new(1),
    });
    Ok(RnaDiagram::from_arcs(k + 1, d.m(), &arcs)?)
}

/// Inverse of [`extend_diagram`]: drops the last vertex, which must carry a
/// single arc from its `S_1` to `S_1` of vertex 1.
pub fn restrict_extension(e: &RnaDiagram) -> Result<RnaDiagram, BijectionError> {
    let k = e.k();
    if k < 2 {
        return Err(not_in(1, "extension needs at least two vertices"));
    }
    let at_last: Vec<&Arc> = e.arcs().iter().filter(|a| a.v == k).collect();
    let ok = matches!(at_last.as_slice(), [a] if a.u == 1 && a.symbol == Symbol::new(1));
    if !ok {
        return Err(not_in(1, "last vertex does not carry S_1 only, joined to vertex 1"));
    }
    let arcs: Vec<Arc> = e.arcs().iter().filter(|a| a.v != k).copied().collect();
    Ok(RnaDiagram::from_arcs(k - 1, e.m(), &arcs)?)
}

fn shifted(arcs: impl Iterator<Item = Arc>, by: usize) -> impl Iterator<Item = Arc> {
    arcs.map(move |a| Arc {
        u: a.u + by,
        v: a.v + by,
        symbol: a.symbol,
    })
}

/// Splits a connected noncrossing diagram according to the arc at `S_1` of
/// vertex 1.
pub fn vertex1_decompose(d: &RnaDiagram) -> Result<Vertex1Decomposition, BijectionError> {
    require_connected_noncrossing(d)?;
    let (k, m) = (d.k(), d.m());
    let Some(v) = d.partner(Slot::new(1, 1)) else {
        return Ok(Vertex1Decomposition::Extension(extend_diagram(d)?));
    };
    let cut = Slot::new(v, 1).position(m);
    let (inner, outer): (Vec<Arc>, Vec<Arc>) =
        d.arcs().iter().partition(|a| a.positions(m).1 <= cut);
    let left = RnaDiagram::from_arcs(v, m, &inner)?;
    let rest: Vec<Arc> = outer
        .into_iter()
        .map(|a| Arc {
            u: a.u - (v - 1),
            v: a.v - (v - 1),
            symbol: a.symbol,
        })
        .collect();
    let right = extend_diagram(&RnaDiagram::from_arcs(k - v + 1, m, &rest)?)?;
    Ok(Vertex1Decomposition::Pair { v, left, right })
}

/// Inverse of [`vertex1_decompose`].
pub fn vertex1_recombine(x: &Vertex1Decomposition) -> Result<RnaDiagram, BijectionError> {
    match x {
        Vertex1Decomposition::Extension(e) => {
            require_connected_noncrossing(e)?;
            restrict_extension(e)
        }
        Vertex1Decomposition::Pair { v, left, right } => {
            let (v, m) = (*v, left.m());
            require_connected_noncrossing(left)?;
            require_connected_noncrossing(right)?;
            if left.k() != v || right.m() != m {
                return Err(not_in(1, "parts have the wrong shape"));
            }
            let at_v: Vec<&Arc> = left.arcs().iter().filter(|a| a.v == v).collect();
            if !matches!(at_v.as_slice(), [a] if a.u == 1 && a.symbol == Symbol::new(1)) {
                return Err(not_in(1, "left part does not end in S_1 only"));
            }
            let rest = restrict_extension(right)?;
            let k = v + rest.k() - 1;
            let arcs: Vec<Arc> = left
                .arcs()
                .iter()
                .copied()
                .chain(shifted(rest.arcs().iter().copied(), v - 1))
                .collect();
            Ok(RnaDiagram::from_arcs(k, m, &arcs)?)
        }
    }
}

/// Splits a connected noncrossing diagram along the walk `1 = i_0, i_1, …,
/// i_m = k` with `i_j = S_j(i_{j-1})`. Part `j` is everything under the arc
/// `i_{j-1}–i_j` on `S_j`, renumbered from 1; it has `i_j - i_{j-1} + 1`
/// vertices.
pub fn sigma_decompose(d: &RnaDiagram) -> Result<Vec<RnaDiagram>, BijectionError> {
    require_connected_noncrossing(d)?;
    let m = d.m();
    let mut parts = Vec::with_capacity(m);
    let mut i = 1;
    for j in 1..=m {
        let next = d.partner(Slot::new(i, j)).unwrap_or(i);
        debug_assert!(next >= i, "walk is monotone in a noncrossing diagram");
        let lo = Slot::new(i, j).position(m);
        let hi = Slot::new(next, j).position(m);
        let arcs: Vec<Arc> = d
            .arcs()
            .iter()
            .filter(|a| {
                let (p, q) = a.positions(m);
                lo <= p && q <= hi
            })
            .map(|a| Arc {
                u: a.u - (i - 1),
                v: a.v - (i - 1),
                symbol: a.symbol,
            })
            .collect();
        parts.push(RnaDiagram::from_arcs(next - i + 1, m, &arcs)?);
        i = next;
    }
    debug_assert_eq!(i, d.k());
    debug_assert_eq!(
        parts.iter().map(|p| p.arcs().len()).sum::<usize>(),
        d.arcs().len()
    );
    Ok(parts)
}

/// Inverse of [`sigma_decompose`].
pub fn sigma_recombine(parts: &[RnaDiagram]) -> Result<RnaDiagram, BijectionError> {
    let m = parts.len();
    if m == 0 {
        return Err(BijectionError::Diagram(
            crate::diagram::DiagramError::EmptyParameters { k: 0, m: 0 },
        ));
    }
    let bad = |reason: &str| not_in(1, format!("part list: {reason}"));
    let mut arcs = Vec::new();
    let mut offset = 0;
    for (idx, p) in parts.iter().enumerate() {
        let j = idx + 1;
        if p.m() != m {
            return Err(bad("parts must have as many bases as there are parts"));
        }
        require_connected_noncrossing(p)?;
        let last = p.k();
        let lo = Slot::new(1, j).position(m);
        let hi = Slot::new(last, j).position(m);
        if last > 1 && p.partner(Slot::new(1, j)) != Some(last) {
            return Err(bad("part j must join its ends on S_j"));
        }
        if p.arcs().iter().any(|a| {
            let (x, y) = a.positions(m);
            x < lo || y > hi
        }) {
            return Err(bad("part j must lie under its S_j arc"));
        }
        arcs.extend(shifted(p.arcs().iter().copied(), offset));
        offset += last - 1;
    }
    Ok(RnaDiagram::from_arcs(offset + 1, m, &arcs)?)
}
