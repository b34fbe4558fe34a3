//! Induction moves on labelled coloured trees: `R` and `L` along a maximal
//! two-colour chain, their factorisation into adjacent moves, normal forms
//! and orbits.

use crate::counting::{enumerate_trees, t_count};
use crate::limits::{SizeLimitExceeded, WorkLimit};
use crate::tree::{chain_containing, maximal_chains, Chain, ColouredTree, Symbol};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InductionError {
    #[error("need 1 <= i < j <= m, got i={i}, j={j}, m={m}")]
    SymbolMismatch { i: usize, j: usize, m: usize },
    #[error("vertices {vertices:?} are not a maximal S_{i}-S_{j} chain")]
    NotMaximalChain {
        vertices: Vec<usize>,
        i: usize,
        j: usize,
    },
    #[error("vertex {vertex} of the chain meets an edge coloured S_{colour}")]
    HypothesisViolated { vertex: usize, colour: usize },
    #[error("trees differ in size: (k, m) = {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("tree uses colours other than S_{i} and S_{j}")]
    WrongColourSet { i: usize, j: usize },
    #[error(transparent)]
    SizeLimit(#[from] SizeLimitExceeded),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StepKind {
    R,
    L,
}

/// One induction move. The chain is named by its vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InductionStep {
    pub kind: StepKind,
    pub i: usize,
    pub j: usize,
    pub chain: Vec<usize>,
}

impl InductionStep {
    pub fn new(kind: StepKind, i: usize, j: usize, chain: &[usize]) -> Self {
        let mut chain = chain.to_vec();
        chain.sort_unstable();
        InductionStep { kind, i, j, chain }
    }

    pub fn apply(&self, t: &ColouredTree) -> Result<ColouredTree, InductionError> {
        match self.kind {
            StepKind::R => apply_r(t, &self.chain, self.i, self.j),
            StepKind::L => apply_l(t, &self.chain, self.i, self.j),
        }
    }
}

pub fn apply_steps(t: &ColouredTree, steps: &[InductionStep]) -> Result<ColouredTree, InductionError> {
    steps.iter().try_fold(t.clone(), |acc, s| s.apply(&acc))
}

fn symbols(t: &ColouredTree, i: usize, j: usize) -> Result<(Symbol, Symbol), InductionError> {
    let m = t.m();
    if i == 0 || i >= j || j > m {
        return Err(InductionError::SymbolMismatch { i, j, m });
    }
    Ok((Symbol::new(i), Symbol::new(j)))
}

fn resolve_chain(t: &ColouredTree, vertices: &[usize], i: usize, j: usize) -> Result<Chain, InductionError> {
    let (si, sj) = symbols(t, i, j)?;
    let err = || InductionError::NotMaximalChain {
        vertices: vertices.to_vec(),
        i,
        j,
    };
    let &first = vertices.first().ok_or_else(err)?;
    if first == 0 || first > t.k() {
        return Err(err());
    }
    let chain = chain_containing(t, si, sj, first);
    let mut want = vertices.to_vec();
    want.sort_unstable();
    if chain.sorted_vertices() != want {
        return Err(err());
    }
    Ok(chain)
}

/// Swaps the endpoint labels of every chain edge coloured `swap`, exchanges
/// `S_i` and `S_j` along the chain, and leaves every other edge on the label
/// it was attached to.
fn induct(t: &ColouredTree, chain: &Chain, swap: Symbol) -> ColouredTree {
    let (si, sj) = (chain.i, chain.j);
    let a = &chain.vertices;
    let mut labels = a.clone();
    let mut p = 0;
    while p + 1 < a.len() {
        if t.edge_colour(a[p], a[p + 1]) == Some(swap) {
            labels.swap(p, p + 1);
            p += 2;
        } else {
            p += 1;
        }
    }
    let on_chain: HashSet<usize> = a.iter().copied().collect();
    let mut edges: Vec<(usize, usize, usize)> = t
        .edges()
        .iter()
        .filter(|e| {
            !(on_chain.contains(&e.u)
                && on_chain.contains(&e.v)
                && (e.colour == si || e.colour == sj))
        })
        .map(|e| (e.u, e.v, e.colour.index()))
        .collect();
    for p in 0..a.len().saturating_sub(1) {
        let old = t.edge_colour(a[p], a[p + 1]).expect("chain vertices are adjacent");
        let new = if old == si { sj } else { si };
        edges.push((labels[p], labels[p + 1], new.index()));
    }
    ColouredTree::new(t.k(), t.m(), edges).expect("induction keeps a properly coloured tree")
}

/// `R` along the maximal `S_i`–`S_j` chain with the given vertex set.
pub fn apply_r(t: &ColouredTree, chain: &[usize], i: usize, j: usize) -> Result<ColouredTree, InductionError> {
    let c = resolve_chain(t, chain, i, j)?;
    Ok(induct(t, &c, c.j))
}

/// `L` along the maximal `S_i`–`S_j` chain; inverse of [`apply_r`].
pub fn apply_l(t: &ColouredTree, chain: &[usize], i: usize, j: usize) -> Result<ColouredTree, InductionError> {
    let c = resolve_chain(t, chain, i, j)?;
    Ok(induct(t, &c, c.i))
}

/// Writes `R_{i,j}` on a chain meeting none of `S_{i+1}, …, S_{j-1}` as
/// adjacent moves: single-edge moves lifting the `S_i` edges to `S_{j-1}`,
/// `R_{j-1}` on the whole chain, then single-edge moves lowering the
/// `S_{j-1}` edges back to `S_i`.
pub fn decompose_rij(
    t: &ColouredTree,
    chain: &[usize],
    i: usize,
    j: usize,
) -> Result<Vec<InductionStep>, InductionError> {
    let c = resolve_chain(t, chain, i, j)?;
    for &v in &c.vertices {
        for (colour, _) in t.incident(v) {
            let r = colour.index();
            if i < r && r < j {
                return Err(InductionError::HypothesisViolated { vertex: v, colour: r });
            }
        }
    }
    let mut steps = Vec::new();
    let mut cur = t.clone();
    let mut push = |cur: &mut ColouredTree, s: InductionStep| {
        *cur = s.apply(cur).expect("decomposition steps apply");
        steps.push(s);
    };
    let edges_coloured = |cur: &ColouredTree, r: usize| -> Vec<[usize; 2]> {
        c.vertices
            .windows(2)
            .filter(|w| cur.edge_colour(w[0], w[1]) == Some(Symbol::new(r)))
            .map(|w| [w[0], w[1]])
            .collect()
    };
    for l in i..j - 1 {
        for e in edges_coloured(&cur, l) {
            push(&mut cur, InductionStep::new(StepKind::R, l, l + 1, &e));
        }
    }
    if c.edge_count() > 0 {
        push(&mut cur, InductionStep::new(StepKind::R, j - 1, j, &c.vertices));
    }
    for l in (i..j - 1).rev() {
        for e in edges_coloured(&cur, l + 1) {
            push(&mut cur, InductionStep::new(StepKind::R, l, l + 1, &e));
        }
    }
    let direct = induct(t, &c, c.j);
    assert_eq!(cur, direct, "adjacent factorisation reproduces R_{{i,j}}");
    Ok(steps)
}

/// Every adjacent move (`R_l` and `L_l` for `l` in `levels`) applicable to
/// `t`, paired with its result. Edgeless chains are skipped.
fn adjacent_moves(t: &ColouredTree, levels: std::ops::RangeInclusive<usize>) -> Vec<(InductionStep, ColouredTree)> {
    let mut out = Vec::new();
    for l in levels {
        let (si, sj) = (Symbol::new(l), Symbol::new(l + 1));
        for c in maximal_chains(t, si, sj) {
            if c.edge_count() == 0 {
                continue;
            }
            for (kind, swap) in [(StepKind::R, sj), (StepKind::L, si)] {
                out.push((InductionStep::new(kind, l, l + 1, &c.vertices), induct(t, &c, swap)));
            }
        }
    }
    out
}

/// Breadth-first search from `start` over adjacent moves at `levels` until
/// `done` holds; returns the path of moves.
fn search(
    start: &ColouredTree,
    levels: std::ops::RangeInclusive<usize>,
    done: impl Fn(&ColouredTree) -> bool,
) -> Option<(ColouredTree, Vec<InductionStep>)> {
    let mut parent: HashMap<ColouredTree, Option<(ColouredTree, InductionStep)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(t) = queue.pop_front() {
        if done(&t) {
            let mut steps = Vec::new();
            let mut cur = t.clone();
            while let Some(Some((prev, step))) = parent.get(&cur) {
                steps.push(step.clone());
                cur = prev.clone();
            }
            steps.reverse();
            return Some((t, steps));
        }
        for (step, next) in adjacent_moves(&t, levels.clone()) {
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((t.clone(), step)));
                queue.push_back(next);
            }
        }
    }
    None
}

/// A tree coloured only by `S_1` and `S_m` reachable from `t` by adjacent
/// moves, with the moves. Colours `S_2, …, S_l` are cleared for
/// `l = 2, …, m-1` in turn, using only moves at levels `1..=l`.
pub fn normal_form(t: &ColouredTree) -> (ColouredTree, Vec<InductionStep>) {
    let m = t.m();
    let mut cur = t.clone();
    let mut steps = Vec::new();
    for l in 2..m {
        let clear = |g: &ColouredTree| g.edges().iter().all(|e| !(2..=l).contains(&e.colour.index()));
        let (next, more) = search(&cur, 1..=l, clear).expect("a tree without middle colours is reachable");
        cur = next;
        steps.extend(more);
    }
    (cur, steps)
}

/// All trees reachable from `t` by adjacent moves. The frontier is expanded
/// in parallel.
pub fn orbit(t: &ColouredTree, limit: WorkLimit) -> Result<BTreeSet<ColouredTree>, InductionError> {
    let (k, m) = (t.k(), t.m());
    if m >= 2 {
        limit.check(&t_count(k, m))?;
    }
    let levels = 1..=m.saturating_sub(1);
    let mut seen: HashSet<ColouredTree> = HashSet::from([t.clone()]);
    let mut frontier = vec![t.clone()];
    while !frontier.is_empty() {
        let found: Vec<ColouredTree> = frontier
            .par_iter()
            .flat_map_iter(|g| adjacent_moves(g, levels.clone()).into_iter().map(|(_, h)| h))
            .collect();
        frontier = found.into_iter().filter(|h| seen.insert(h.clone())).collect();
    }
    Ok(seen.into_iter().collect())
}

/// Two trees are related by adjacent moves exactly when their circular
/// orders agree.
pub fn equivalent(g: &ColouredTree, h: &ColouredTree) -> Result<bool, InductionError> {
    if (g.k(), g.m()) != (h.k(), h.m()) {
        return Err(InductionError::DimensionMismatch {
            left: (g.k(), g.m()),
            right: (h.k(), h.m()),
        });
    }
    Ok(g.circular_order() == h.circular_order())
}

/// A tree, a chain of it and the tree `R` produces from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaWitness {
    pub before: ColouredTree,
    pub chain: Chain,
    pub after: ColouredTree,
}

/// Searches all labelled trees of size `(k, m)` for a maximal `S_i`–`S_j`
/// chain on which `R` changes the circular order and `accept` holds.
pub fn find_sigma_witness(
    k: usize,
    m: usize,
    i: usize,
    j: usize,
    limit: WorkLimit,
    accept: impl Fn(&SigmaWitness) -> bool + Sync,
) -> Result<Option<SigmaWitness>, InductionError> {
    if i == 0 || i >= j || j > m {
        return Err(InductionError::SymbolMismatch { i, j, m });
    }
    let (si, sj) = (Symbol::new(i), Symbol::new(j));
    let trees = enumerate_trees(k, m, None, limit)?;
    Ok(trees.par_iter().find_map_first(|t| {
        maximal_chains(t, si, sj)
            .into_iter()
            .filter(|c| c.edge_count() > 0)
            .find_map(|c| {
                let after = induct(t, &c, sj);
                if after.circular_order() == t.circular_order() {
                    return None;
                }
                let w = SigmaWitness {
                    before: t.clone(),
                    chain: c,
                    after,
                };
                accept(&w).then_some(w)
            })
    }))
}

pub fn sigma_invariance_witness(
    k: usize,
    m: usize,
    i: usize,
    j: usize,
    limit: WorkLimit,
) -> Result<Option<SigmaWitness>, InductionError> {
    find_sigma_witness(k, m, i, j, limit, |_| true)
}

/// The chain of `w` meets none of `S_{i+1}, …, S_{j-1}`.
pub fn satisfies_factorisation_hypothesis(w: &SigmaWitness) -> bool {
    let (i, j) = (w.chain.i.index(), w.chain.j.index());
    w.chain.vertices.iter().all(|&v| {
        w.before
            .incident(v)
            .all(|(c, _)| !(i < c.index() && c.index() < j))
    })
}

/// Order of `R_{i,j}` on a tree coloured only by `S_i` and `S_j`.
pub fn chain_order(t: &ColouredTree, i: usize, j: usize) -> Result<usize, InductionError> {
    symbols(t, i, j)?;
    if t.edges().iter().any(|e| e.colour.index() != i && e.colour.index() != j) {
        return Err(InductionError::WrongColourSet { i, j });
    }
    let all: Vec<usize> = (1..=t.k()).collect();
    let mut cur = apply_r(t, &all, i, j)?;
    let mut p = 1;
    while &cur != t {
        cur = apply_r(&cur, &all, i, j)?;
        p += 1;
    }
    Ok(p)
}
