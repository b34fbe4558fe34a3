use super::BijectionError;
use crate::diagram::RnaDiagram;
use crate::tree::ColouredForest;

/// Reads each arc `(u, S_r)–(v, S_r)` of a noncrossing diagram as an edge
/// `{u, v}` coloured `S_r`.
pub fn diagram_to_forest(d: &RnaDiagram) -> Result<ColouredForest, BijectionError> {
    if !d.is_noncrossing() {
        return Err(BijectionError::Crossing);
    }
    Ok(ColouredForest::new(
        d.k(),
        d.m(),
        d.arcs().iter().map(|a| (a.u, a.v, a.symbol.index())),
    )?)
}

/// Inverse of [`diagram_to_forest`], defined on forests that pass
/// [`check_forest_conditions`].
pub fn forest_to_diagram(f: &ColouredForest) -> Result<RnaDiagram, BijectionError> {
    check_forest_conditions(f)?;
    let d = RnaDiagram::from_pairs(
        f.k(),
        f.m(),
        f.edges()
            .iter()
            .map(|e| ((e.u, e.colour.index()), (e.v, e.colour.index()))),
    )?;
    debug_assert!(d.is_noncrossing());
    Ok(d)
}

/// The two conditions characterising forests of noncrossing diagrams:
///
/// * no two components interleave as `a1 > b1 > a2 > b2`;
/// * within a component the circular order sends each vertex to the largest
///   smaller vertex of its component, and the least vertex to the largest.
pub fn check_forest_conditions(f: &ColouredForest) -> Result<(), BijectionError> {
    let comps = f.components();
    let mut owner = vec![0usize; f.k() + 1];
    for (idx, c) in comps.iter().enumerate() {
        for &v in c {
            owner[v] = idx;
        }
    }
    for x in 0..comps.len() {
        for y in x + 1..comps.len() {
            // Runs of alternating membership, read from the top down.
            let mut runs: Vec<usize> = Vec::new();
            for v in (1..=f.k()).rev() {
                if owner[v] == x || owner[v] == y {
                    match runs.last() {
                        Some(&last) if owner[last] == owner[v] => {}
                        _ => runs.push(v),
                    }
                }
            }
            if runs.len() >= 4 {
                return Err(BijectionError::ConditionAViolated {
                    a1: runs[0],
                    b1: runs[1],
                    a2: runs[2],
                    b2: runs[3],
                });
            }
        }
    }
    let sigma = f.circular_order();
    for c in &comps {
        for (idx, &v) in c.iter().enumerate() {
            let expected = if idx == 0 { *c.last().unwrap() } else { c[idx - 1] };
            let found = sigma.apply(v);
            if found != expected {
                return Err(BijectionError::ConditionBViolated {
                    vertex: v,
                    expected,
                    found,
                });
            }
        }
    }
    Ok(())
}
