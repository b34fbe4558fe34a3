use super::{ColouredForest, Symbol};
use serde::{Deserialize, Serialize};

/// A maximal path whose edges alternate between two colours `S_i`, `S_j`.
///
/// Vertices are listed along the path starting from the smaller endpoint.
/// A vertex meeting neither colour forms a chain on its own.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    pub i: Symbol,
    pub j: Symbol,
    pub vertices: Vec<usize>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn sorted_vertices(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }
}

fn ij_degree(f: &ColouredForest, v: usize, i: Symbol, j: Symbol) -> usize {
    f.neighbour(v, i).is_some() as usize + f.neighbour(v, j).is_some() as usize
}

fn walk(f: &ColouredForest, start: usize, i: Symbol, j: Symbol) -> Vec<usize> {
    let mut path = vec![start];
    let mut prev = 0;
    let mut cur = start;
    loop {
        let next = [i, j]
            .into_iter()
            .filter_map(|c| f.neighbour(cur, c))
            .find(|&w| w != prev);
        match next {
            Some(w) => {
                path.push(w);
                prev = cur;
                cur = w;
            }
            None => return path,
        }
    }
}

/// All maximal `S_i`–`S_j` chains, ordered by their first vertex.
/// Together they partition the vertex set.
pub fn maximal_chains(f: &ColouredForest, i: Symbol, j: Symbol) -> Vec<Chain> {
    let mut seen = vec![false; f.k() + 1];
    let mut out = Vec::new();
    for v in 1..=f.k() {
        if seen[v] || ij_degree(f, v, i, j) > 1 {
            continue;
        }
        let vertices = walk(f, v, i, j);
        for &x in &vertices {
            seen[x] = true;
        }
        out.push(Chain { i, j, vertices });
    }
    out
}

/// The maximal `S_i`–`S_j` chain through `v`.
pub fn chain_containing(f: &ColouredForest, i: Symbol, j: Symbol, v: usize) -> Chain {
    let mut end = v;
    let mut prev = 0;
    loop {
        let next = [i, j]
            .into_iter()
            .filter_map(|c| f.neighbour(end, c))
            .find(|&w| w != prev);
        match next {
            Some(w) => {
                prev = end;
                end = w;
            }
            None => break,
        }
    }
    let mut vertices = walk(f, end, i, j);
    if vertices.first() > vertices.last() {
        vertices.reverse();
    }
    Chain { i, j, vertices }
}
