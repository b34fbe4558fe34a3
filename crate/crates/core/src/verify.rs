//! Exhaustive self-checks at a chosen size, grouped into suites and
//! reported as pass/fail lines.

use crate::angulation::{
    find_snakes, induct_r_on_angulation, induct_r_on_labelled_angulation, rotate_one_step,
    ColouredAngulation, LabelledAngulation,
};
use crate::bijection::{
    angulation_to_tree, diagram_to_forest, family_map, forest_to_diagram,
    labelled_angulation_to_tree, labelled_tree_to_angulation, rooted_angulation_to_tree,
    rooted_to_tree, tree_to_angulation, tree_to_rooted, tree_to_rooted_angulation,
    FamilyObject,
};
use crate::counting::{
    check_catalan_difference, check_convolution, check_gkp_identity, check_recursion,
    check_u_forms, enumerate_angulations, enumerate_diagrams, enumerate_trees, s_count, t_count,
    CountFamily,
};
use crate::induction::{apply_l, apply_r, chain_order, orbit};
use crate::limits::{SizeLimitExceeded, WorkLimit};
use crate::tree::{canonical_unlabelled, maximal_chains, CircularOrder, ColouredTree, Symbol};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeSet, HashSet};
use thiserror::Error;

pub const SUITES: &[&str] = &["formulas", "bijections", "induction", "angulation", "all"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite '{0}'; expected one of formulas, bijections, induction, angulation, all")]
    UnknownSuite(String),
    #[error("suite needs m >= {need}, got {m}")]
    BadParameters { need: usize, m: usize },
    #[error(transparent)]
    SizeLimit(#[from] SizeLimitExceeded),
}

impl From<crate::induction::InductionError> for VerifyError {
    fn from(e: crate::induction::InductionError) -> Self {
        match e {
            crate::induction::InductionError::SizeLimit(s) => VerifyError::SizeLimit(s),
            other => panic!("unexpected induction error during verification: {other}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub k: usize,
    pub m: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Runs `suite` at size `(k, m)`.
pub fn run_suite(suite: &str, k: usize, m: usize, limit: WorkLimit) -> Result<Report, VerifyError> {
    let mut report = Report {
        suite: suite.to_string(),
        k,
        m,
        checks: Vec::new(),
    };
    match suite {
        "formulas" => formulas(&mut report),
        "bijections" => bijections(&mut report, k, m, limit)?,
        "induction" => induction(&mut report, k, m, limit)?,
        "angulation" => angulation(&mut report, k, m, limit)?,
        "all" => {
            formulas(&mut report);
            bijections(&mut report, k, m, limit)?;
            induction(&mut report, k, m, limit)?;
            angulation(&mut report, k, m, limit)?;
        }
        _ => return Err(VerifyError::UnknownSuite(suite.to_string())),
    }
    Ok(report)
}

fn formulas(r: &mut Report) {
    for (f, name) in [
        (CountFamily::T, "table T"),
        (CountFamily::S, "table S"),
        (CountFamily::U, "table U"),
    ] {
        let bad = f.table().mismatches(f);
        r.push(name, bad.is_empty(), format!("{} mismatching cells", bad.len()));
    }
    let rec = (1..=30).all(|k| (3..=8).all(|m| check_recursion(k, m)));
    r.push("quadratic recursion k<=30 m<=8", rec, "");
    let conv = (1..=15).all(|k| (3..=6).all(|m| check_convolution(k, m)));
    r.push("convolution k<=15 m<=6", conv, "");
    let cat = (1..=30).all(check_catalan_difference);
    r.push("T(k,3) = C(k+1) - C(k), k<=30", cat, "");
    let u = (1..=20).all(|k| (2..=6).all(|m| check_u_forms(k, m)));
    r.push("two forms of U agree k<=20 m<=6", u, "");
    let mut tuples = 0;
    let mut gkp = true;
    for n in 0..=6 {
        for rr in -3..=3 {
            for s in -2..=4 {
                for t in -2..=3 {
                    gkp &= check_gkp_identity(n, rr, s, t);
                    tuples += 1;
                }
            }
        }
    }
    r.push("convolution identity on a grid", gkp, format!("{tuples} tuples"));
}

fn bijections(r: &mut Report, k: usize, m: usize, limit: WorkLimit) -> Result<(), VerifyError> {
    if m < 3 {
        return Err(VerifyError::BadParameters { need: 3, m });
    }
    let diagrams = enumerate_diagrams(k, m, false, true, limit)?;
    let ok = diagrams.par_iter().all(|d| {
        diagram_to_forest(d)
            .and_then(|f| forest_to_diagram(&f))
            .is_ok_and(|e| &e == d)
    });
    r.push("diagram <-> forest", ok, format!("{} noncrossing diagrams", diagrams.len()));

    let trees = enumerate_trees(k, m, None, limit)?;
    let desc = CircularOrder::descending(k);
    let ordered: Vec<&ColouredTree> = trees.iter().filter(|t| t.circular_order() == desc).collect();
    let ok = ordered
        .par_iter()
        .all(|t| tree_to_rooted(t).is_ok_and(|rt| &rooted_to_tree(&rt) == *t));
    r.push("tree <-> rooted tree", ok, format!("{} trees", ordered.len()));

    let ok = trees
        .par_iter()
        .all(|t| &labelled_angulation_to_tree(&labelled_tree_to_angulation(t)) == t);
    r.push("labelled tree <-> labelled angulation", ok, format!("{} round trips", trees.len()));

    let shapes: BTreeSet<_> = trees.iter().map(canonical_unlabelled).collect();
    let ok = shapes
        .par_iter()
        .all(|s| &angulation_to_tree(&tree_to_angulation(s)) == s);
    r.push("unlabelled tree <-> angulation", ok, format!("{} shapes", shapes.len()));

    let ok = ordered.par_iter().all(|t| {
        tree_to_rooted_angulation(t).is_ok_and(|a| &rooted_angulation_to_tree(&a) == *t)
    });
    r.push("tree <-> rooted angulation", ok, format!("{} trees", ordered.len()));

    let angs = enumerate_angulations(k, m, limit)?;
    let mut ok = true;
    let mut images = [0usize; 7];
    for a in &angs {
        let start = FamilyObject::Angulation(a.clone());
        for (to, hits) in images.iter_mut().enumerate().skip(1) {
            match family_map(&start, 4, to).and_then(|x| family_map(&x, to, 4).map(|y| (x, y))) {
                Ok((_, back)) if back == start => *hits += 1,
                _ => ok = false,
            }
        }
    }
    let want = s_count(k, m);
    let counts_ok = images[1..].iter().all(|&c| BigUint::from(c) == want);
    r.push(
        "family chain 4 -> x -> 4",
        ok && counts_ok,
        format!("{} angulations, S = {want}", angs.len()),
    );
    Ok(())
}

fn induction(r: &mut Report, k: usize, m: usize, limit: WorkLimit) -> Result<(), VerifyError> {
    if m < 2 {
        return Err(VerifyError::BadParameters { need: 2, m });
    }
    let trees = enumerate_trees(k, m, None, limit)?;
    let inverse_ok = std::sync::atomic::AtomicBool::new(true);
    let invariant = trees.par_iter().all(|t| {
        (1..m).all(|i| {
            let (si, sj) = (Symbol::new(i), Symbol::new(i + 1));
            maximal_chains(t, si, sj).into_iter().all(|c| {
                let g = apply_r(t, &c.vertices, i, i + 1).expect("chain is maximal");
                let h = apply_l(t, &c.vertices, i, i + 1).expect("chain is maximal");
                let back = apply_l(&g, &c.vertices, i, i + 1).expect("image has the same vertex set");
                if &back != t {
                    inverse_ok.store(false, std::sync::atomic::Ordering::Relaxed);
                }
                let s = t.circular_order();
                g.circular_order() == s && h.circular_order() == s
            })
        })
    });
    r.push("adjacent moves keep the circular order", invariant, format!("{} trees", trees.len()));
    r.push("L undoes R", inverse_ok.into_inner(), "");

    let want = t_count(k, m);
    let mut left: HashSet<&ColouredTree> = trees.iter().collect();
    let mut sizes = Vec::new();
    let mut classes_ok = true;
    for t in &trees {
        if !left.contains(t) {
            continue;
        }
        let o = orbit(t, limit)?;
        let sigma = t.circular_order();
        classes_ok &= o.iter().all(|g| g.circular_order() == sigma);
        for g in &o {
            classes_ok &= left.remove(g);
        }
        sizes.push(o.len());
    }
    let sizes_ok = sizes.iter().all(|&s| BigUint::from(s) == want);
    r.push(
        "orbits are circular-order classes",
        classes_ok && sizes_ok,
        format!("{} orbits, sizes {:?}, T = {want}", sizes.len(), sizes.iter().collect::<BTreeSet<_>>()),
    );

    if m >= 3 {
        let line: Vec<(usize, usize, usize)> = (1..k)
            .map(|v| (v, v + 1, if v % 2 == 1 { 1 } else { m }))
            .collect();
        let t = ColouredTree::new(k, m, line).expect("alternating line");
        let p = chain_order(&t, 1, m)?;
        r.push("order of R on a two-colour line", p == k, format!("order {p}"));
    }
    Ok(())
}

fn angulation(r: &mut Report, k: usize, m: usize, limit: WorkLimit) -> Result<(), VerifyError> {
    if m < 3 {
        return Err(VerifyError::BadParameters { need: 3, m });
    }
    let angs = enumerate_angulations(k, m, limit)?;
    let shift_ok = angs.par_iter().all(|a| {
        let mut cur = a.clone();
        for step in 1..=a.n() {
            cur = rotate_one_step(&cur).0;
            if cur != a.rotated(step as i64) {
                return false;
            }
        }
        &cur == a
    });
    r.push("rotation by flips equals the index shift", shift_ok, format!("{} angulations", angs.len()));

    let commute = angs.par_iter().all(|a| {
        (1..=m).all(|seed| {
            let c = ColouredAngulation::colour_from_seed(a, (1, 2), Symbol::new(seed))
                .expect("side (1,2) exists");
            (1..m).all(|i| angulation_commutes(&c, i))
        })
    });
    r.push("angulation induction matches tree induction", commute, "");
    Ok(())
}

/// Checks the unlabelled and labelled angulation moves against `R_i` on the
/// dual tree, for every snake.
fn angulation_commutes(c: &ColouredAngulation, i: usize) -> bool {
    let (si, sj) = (Symbol::new(i), Symbol::new(i + 1));
    let (tree, faces) = c.dual_tree();
    let labels = faces
        .iter()
        .enumerate()
        .map(|(idx, f)| (f.clone(), idx + 1))
        .collect();
    let l = LabelledAngulation::new(c.clone(), labels).expect("labels are distinct");
    find_snakes(c, si, sj).into_iter().all(|snake| {
        let chain: Vec<usize> = snake
            .faces
            .iter()
            .map(|f| faces.iter().position(|g| g == f).unwrap() + 1)
            .collect();
        let expected = apply_r(&tree, &chain, i, i + 1).expect("snake is a maximal chain");
        let unlabelled_ok = induct_r_on_angulation(c, &snake, si)
            .is_ok_and(|d| angulation_to_tree(&d) == canonical_unlabelled(&expected));
        let labelled_ok = induct_r_on_labelled_angulation(&l, &snake, si)
            .is_ok_and(|d| d.dual_tree() == expected);
        unlabelled_ok && labelled_ok
    })
}
