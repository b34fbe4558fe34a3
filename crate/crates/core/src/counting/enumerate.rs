//! Exhaustive generators for the families counted in [`super::formulas`].
//!
//! Every generator estimates its output size first and refuses to run past
//! the supplied [`WorkLimit`].

use super::formulas::{s_count, u_count};
use crate::angulation::MAngulation;
use crate::bijection::PlaneTree;
use crate::diagram::{Arc, RnaDiagram};
use crate::limits::{SizeLimitExceeded, WorkLimit};
use crate::tree::{CircularOrder, ColouredTree, Edge, Symbol};
use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

/// Union-find with rollback, tracking the largest vertex in each class.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    max: Vec<usize>,
    log: Vec<(usize, usize, usize)>,
}

impl Dsu {
    fn new(k: usize) -> Self {
        Dsu {
            parent: (0..=k).collect(),
            size: vec![1; k + 1],
            max: (0..=k).collect(),
            log: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if self.size[ra] > self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.log.push((ra, rb, self.max[rb]));
        self.parent[ra] = rb;
        self.size[rb] += self.size[ra];
        self.max[rb] = self.max[rb].max(self.max[ra]);
    }

    fn undo(&mut self) {
        let (ra, rb, old_max) = self.log.pop().expect("undo without union");
        self.parent[ra] = ra;
        self.size[rb] -= self.size[ra];
        self.max[rb] = old_max;
    }
}

struct TreeSearch<'a> {
    k: usize,
    m: usize,
    candidates: &'a [Edge],
    order: Option<&'a CircularOrder>,
    used: Vec<bool>,
    dsu: Dsu,
    chosen: Vec<Edge>,
    out: Vec<ColouredTree>,
}

impl TreeSearch<'_> {
    fn slot(&self, v: usize, c: Symbol) -> usize {
        (v - 1) * self.m + c.index() - 1
    }

    fn can_add(&self, e: &Edge) -> bool {
        !self.used[self.slot(e.u, e.colour)]
            && !self.used[self.slot(e.v, e.colour)]
            && self.dsu.find(e.u) != self.dsu.find(e.v)
    }

    fn push(&mut self, e: Edge) {
        let (a, b) = (self.slot(e.u, e.colour), self.slot(e.v, e.colour));
        self.used[a] = true;
        self.used[b] = true;
        self.dsu.union(e.u, e.v);
        self.chosen.push(e);
    }

    fn pop(&mut self) {
        let e = self.chosen.pop().expect("pop on empty search");
        let (a, b) = (self.slot(e.u, e.colour), self.slot(e.v, e.colour));
        self.used[a] = false;
        self.used[b] = false;
        self.dsu.undo();
    }

    /// Every class of vertices below `u` must still be able to grow, which
    /// only edges with smaller endpoint at least `u` can achieve.
    fn frontier_ok(&self, u: usize) -> bool {
        (1..u).all(|w| self.dsu.max[self.dsu.find(w)] >= u)
    }

    fn run(&mut self, from: usize) {
        let needed = self.k - 1 - self.chosen.len();
        if needed == 0 {
            let t = ColouredTree::from_edges(self.k, self.m, &self.chosen)
                .expect("search only builds valid trees");
            if self.order.is_none_or(|o| &t.circular_order() == o) {
                self.out.push(t);
            }
            return;
        }
        for idx in from..self.candidates.len() {
            if self.candidates.len() - idx < needed {
                break;
            }
            let e = self.candidates[idx];
            if !self.frontier_ok(e.u) {
                break;
            }
            if self.can_add(&e) {
                self.push(e);
                self.run(idx + 1);
                self.pop();
            }
        }
    }
}

fn tree_candidates(k: usize, m: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for u in 1..=k {
        for v in u + 1..=k {
            for c in 1..=m {
                out.push(Edge::new(u, v, Symbol::new(c)));
            }
        }
    }
    out
}

/// All labelled coloured trees on `1..=k` with `m` colours, optionally only
/// those with the given circular order. Output is sorted by edge list.
///
/// The search adds edges in lexicographic order and is split across the
/// rayon pool by the choice of first edge.
pub fn enumerate_trees(
    k: usize,
    m: usize,
    order: Option<&CircularOrder>,
    limit: WorkLimit,
) -> Result<Vec<ColouredTree>, SizeLimitExceeded> {
    assert!(k >= 1 && m >= 1, "trees need k >= 1 and m >= 1");
    let estimate = if m >= 2 { u_count(k, m) } else { BigUint::one() };
    limit.check(&estimate)?;
    if k == 1 {
        let t = ColouredTree::new(1, m, []).expect("single vertex");
        let keep = order.is_none_or(|o| &t.circular_order() == o);
        return Ok(if keep { vec![t] } else { Vec::new() });
    }
    let candidates = tree_candidates(k, m);
    let parts: Vec<Vec<ColouredTree>> = (0..candidates.len())
        .into_par_iter()
        .filter(|&idx| candidates[idx].u == 1)
        .map(|idx| {
            let mut search = TreeSearch {
                k,
                m,
                candidates: &candidates,
                order,
                used: vec![false; k * m],
                dsu: Dsu::new(k),
                chosen: Vec::with_capacity(k - 1),
                out: Vec::new(),
            };
            search.push(candidates[idx]);
            search.run(idx + 1);
            search.out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Motzkin number, an upper bound on noncrossing partial matchings.
/// Exact number of noncrossing diagrams, by dynamic programming over
/// intervals of base positions: the first base of an interval is either
/// free or paired with a later equal base on another vertex.
fn noncrossing_count(k: usize, m: usize) -> BigUint {
    let n = k * m;
    // count[i][j] covers positions i..j (half open), 0-based.
    let mut count = vec![vec![BigUint::one(); n + 1]; n + 1];
    for len in 2..=n {
        for i in 0..=n - len {
            let j = i + len;
            let mut c = count[i + 1][j].clone();
            let mut q = i + m;
            while q < j {
                c += &count[i + 1][q] * &count[q + 1][j];
                q += m;
            }
            count[i][j] = c;
        }
    }
    count[0][n].clone()
}

/// Number of involutions of a `k`-set, i.e. partial matchings.
fn involutions(k: usize) -> BigUint {
    let mut a = (BigUint::one(), BigUint::one());
    for i in 2..=k {
        let next = &a.1 + BigUint::from(i - 1) * &a.0;
        a = (a.1, next);
    }
    a.1
}

fn noncrossing_diagrams(k: usize, m: usize) -> Vec<RnaDiagram> {
    fn go(
        p: usize,
        n: usize,
        m: usize,
        k: usize,
        stack: &mut Vec<usize>,
        arcs: &mut Vec<Arc>,
        out: &mut Vec<RnaDiagram>,
    ) {
        if p > n {
            if stack.is_empty() {
                out.push(RnaDiagram::from_arcs(k, m, arcs).expect("generated arcs are valid"));
            }
            return;
        }
        let remaining = n - p + 1;
        if stack.len() > remaining {
            return;
        }
        let (v, r) = ((p - 1) / m + 1, (p - 1) % m + 1);
        if let Some(&top) = stack.last() {
            let (tv, tr) = ((top - 1) / m + 1, (top - 1) % m + 1);
            if tr == r && tv != v {
                stack.pop();
                arcs.push(Arc {
                    u: tv,
                    v,
                    symbol: Symbol::new(r),
                });
                go(p + 1, n, m, k, stack, arcs, out);
                arcs.pop();
                stack.push(top);
            }
        }
        go(p + 1, n, m, k, stack, arcs, out);
        if stack.len() < remaining - 1 {
            stack.push(p);
            go(p + 1, n, m, k, stack, arcs, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    go(1, k * m, m, k, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

fn all_diagrams(k: usize, m: usize) -> Vec<RnaDiagram> {
    fn matchings(free: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        match free.split_first() {
            None => out.push(acc.clone()),
            Some((&first, rest)) => {
                matchings(rest, acc, out);
                for (idx, &other) in rest.iter().enumerate() {
                    let mut remaining = rest.to_vec();
                    remaining.remove(idx);
                    acc.push((first, other));
                    matchings(&remaining, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let vertices: Vec<usize> = (1..=k).collect();
    let mut per_symbol = Vec::new();
    matchings(&vertices, &mut Vec::new(), &mut per_symbol);
    let mut out = Vec::new();
    let mut pick = vec![0usize; m];
    loop {
        let arcs: Vec<Arc> = pick
            .iter()
            .enumerate()
            .flat_map(|(r, &idx)| {
                per_symbol[idx].iter().map(move |&(u, v)| Arc {
                    u,
                    v,
                    symbol: Symbol::new(r + 1),
                })
            })
            .collect();
        out.push(RnaDiagram::from_arcs(k, m, &arcs).expect("generated arcs are valid"));
        let mut r = 0;
        loop {
            if r == m {
                return out;
            }
            pick[r] += 1;
            if pick[r] < per_symbol.len() {
                break;
            }
            pick[r] = 0;
            r += 1;
        }
    }
}

/// RNA-like diagrams of degree `k` with `m` bases per vertex.
pub fn enumerate_diagrams(
    k: usize,
    m: usize,
    connected_only: bool,
    noncrossing_only: bool,
    limit: WorkLimit,
) -> Result<Vec<RnaDiagram>, SizeLimitExceeded> {
    assert!(k >= 1 && m >= 1, "diagrams need k >= 1 and m >= 1");
    let mut out = if noncrossing_only {
        limit.check(&noncrossing_count(k, m))?;
        noncrossing_diagrams(k, m)
    } else {
        limit.check(&involutions(k).pow(m as u32))?;
        all_diagrams(k, m)
    };
    if connected_only {
        out.retain(|d| d.is_connected());
    }
    out.sort();
    Ok(out)
}

/// All m-angulations of the fixed `((m-2)k+2)`-gon, sorted by diagonal list.
pub fn enumerate_angulations(
    k: usize,
    m: usize,
    limit: WorkLimit,
) -> Result<Vec<MAngulation>, SizeLimitExceeded> {
    assert!(k >= 1 && m >= 3, "angulations need k >= 1 and m >= 3");
    limit.check(&s_count(k, m))?;
    let n = (m - 2) * k + 2;

    // Dissections of the polygon on lo..=hi, whose side [lo, hi] is given.
    fn span(lo: usize, hi: usize, m: usize) -> Vec<Vec<(usize, usize)>> {
        if hi - lo == 1 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        let mut corners = vec![lo];
        choose(hi, m, &mut corners, &mut out);
        out
    }

    // Picks the remaining corners of the face on [lo, hi].
    fn choose(hi: usize, m: usize, corners: &mut Vec<usize>, out: &mut Vec<Vec<(usize, usize)>>) {
        let last = *corners.last().unwrap();
        if corners.len() == m - 1 {
            if (hi - last) % (m - 2) == 1 % (m - 2) {
                corners.push(hi);
                let mut acc: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
                for w in corners.windows(2) {
                    let (a, b) = (w[0], w[1]);
                    let subs = span(a, b, m);
                    let mut next = Vec::with_capacity(acc.len() * subs.len());
                    for base in &acc {
                        for sub in &subs {
                            let mut d = base.clone();
                            if b - a > 1 {
                                d.push((a, b));
                            }
                            d.extend_from_slice(sub);
                            next.push(d);
                        }
                    }
                    acc = next;
                }
                corners.pop();
                out.extend(acc);
            }
            return;
        }
        let step = m - 2;
        let mut next = last + 1;
        while next < hi {
            corners.push(next);
            choose(hi, m, corners, out);
            corners.pop();
            next += step;
        }
    }

    let mut out: Vec<MAngulation> = span(1, n, m)
        .into_iter()
        .map(|d| MAngulation::new(m, k, d).expect("generated dissection is valid"))
        .collect();
    out.sort();
    Ok(out)
}

/// Complete rooted plane trees with `k` internal vertices, each internal
/// vertex having `arity` ordered children.
pub fn enumerate_plane_trees(
    k: usize,
    arity: usize,
    limit: WorkLimit,
) -> Result<Vec<PlaneTree>, SizeLimitExceeded> {
    assert!(arity >= 1, "arity must be positive");
    limit.check(&super::formulas::fuss_catalan(k, arity))?;
    fn build(k: usize, arity: usize) -> Vec<PlaneTree> {
        if k == 0 {
            return vec![PlaneTree::leaf()];
        }
        let mut out = Vec::new();
        let mut parts = vec![0usize; arity];
        compositions(k - 1, 0, &mut parts, &mut |parts| {
            let mut acc: Vec<Vec<PlaneTree>> = vec![Vec::new()];
            for &p in parts.iter() {
                let subs = build(p, arity);
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        subs.iter().map(move |s| {
                            let mut v = prefix.clone();
                            v.push(s.clone());
                            v
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(PlaneTree::node));
        });
        out
    }
    fn compositions(total: usize, idx: usize, parts: &mut [usize], f: &mut dyn FnMut(&[usize])) {
        if idx + 1 == parts.len() {
            parts[idx] = total;
            f(parts);
            return;
        }
        for x in 0..=total {
            parts[idx] = x;
            compositions(total - x, idx + 1, parts, f);
        }
    }
    Ok(build(k, arity))
}
