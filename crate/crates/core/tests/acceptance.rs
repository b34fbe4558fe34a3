//! Acceptance suite. Prints one `criterion N: PASS|FAIL` line per criterion
//! and exits nonzero if any fails. Every count is compared exactly; the only
//! tolerance is the wall-clock budget given next to each criterion.

use clustercomb::angulation::{
    find_snakes, induct_r_on_angulation, induct_r_on_labelled_angulation, rotate_one_step,
    LabelledAngulation,
};
use clustercomb::bijection::{
    angulation_to_tree, diagram_to_forest, family_map, forest_to_diagram,
    labelled_angulation_to_tree, labelled_tree_to_angulation, rooted_angulation_to_tree,
    rooted_to_tree, tree_to_angulation, tree_to_rooted, tree_to_rooted_angulation, FamilyObject,
};
use clustercomb::counting::{
    check_convolution, check_gkp_identity, check_recursion, enumerate_angulations,
    enumerate_diagrams, enumerate_plane_trees, enumerate_trees, fuss_catalan, s_count, t_count,
    u_count,
};
use clustercomb::induction::{
    apply_l, apply_r, chain_order, find_sigma_witness, orbit, sigma_invariance_witness,
};
use clustercomb::{
    canonical_unlabelled, maximal_chains, CircularOrder, ColouredAngulation, ColouredTree,
    MAngulation, RnaDiagram, Symbol, WorkLimit,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn limit() -> WorkLimit {
    WorkLimit::new(5_000_000)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// Oracles independent of the library.

fn binom_u128(n: u128, r: u128) -> u128 {
    let mut acc = 1u128;
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn fuss_oracle(k: u128, d: u128) -> u128 {
    binom_u128(d * k, k) / ((d - 1) * k + 1)
}

fn catalan_oracle(n: usize) -> u128 {
    let mut c = 1u128;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// `σ = S_m ∘ … ∘ S_1` straight from the edge list.
fn sigma_oracle(t: &ColouredTree) -> Vec<usize> {
    let mut partner: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in t.edges() {
        partner.insert((e.u, e.colour.index()), e.v);
        partner.insert((e.v, e.colour.index()), e.u);
    }
    (1..=t.k())
        .map(|v| (1..=t.m()).fold(v, |x, r| *partner.get(&(x, r)).unwrap_or(&x)))
        .collect()
}

fn is_single_cycle(image: &[usize]) -> bool {
    let mut x = 1;
    for step in 1..=image.len() {
        x = image[x - 1];
        if x == 1 {
            return step == image.len();
        }
    }
    false
}

/// Reads a bundled table as `(k, m) -> value`.
fn read_table(name: &str) -> BTreeMap<(usize, usize), BigUint> {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    let mut rows = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
    let ks: Vec<usize> = rows
        .next()
        .unwrap()
        .split('\t')
        .skip(1)
        .map(|h| h.trim_start_matches("k=").parse().unwrap())
        .collect();
    let mut out = BTreeMap::new();
    for row in rows {
        let mut cells = row.split('\t');
        let m: usize = cells.next().unwrap().parse().unwrap();
        for (k, c) in ks.iter().zip(cells) {
            out.insert((*k, m), c.parse().unwrap());
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let mut cells = 0;
    for (name, f) in [
        ("t_table.tsv", t_count as fn(usize, usize) -> BigUint),
        ("s_table.tsv", s_count),
        ("u_table.tsv", u_count),
    ] {
        let table = read_table(name);
        let ms: BTreeSet<usize> = table.keys().map(|&(_, m)| m).collect();
        ensure(ms == (3..=6).collect(), || format!("{name} covers m = {ms:?}"))?;
        for (&(k, m), want) in &table {
            ensure(&f(k, m) == want, || format!("{name} k={k} m={m}: {} != {want}", f(k, m)))?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells"))
}

fn criterion_2() -> Outcome {
    let t = read_table("t_table.tsv");
    let u = read_table("u_table.tsv");
    let mut checked = 0;
    for (m, kmax) in [(3, 6), (4, 4)] {
        for k in 1..=kmax {
            let n = enumerate_trees(k, m, Some(&CircularOrder::descending(k)), limit())
                .map_err(|e| e.to_string())?
                .len();
            ensure(BigUint::from(n) == t[&(k, m)], || format!("T k={k} m={m}: {n}"))?;
            checked += 1;
        }
    }
    for k in 1..=5 {
        let n = enumerate_trees(k, 3, None, limit()).map_err(|e| e.to_string())?.len();
        ensure(BigUint::from(n) == u[&(k, 3)], || format!("U k={k}: {n}"))?;
        checked += 1;
    }
    for (m, kmax) in [(3, 6), (4, 4)] {
        for k in 1..=kmax {
            let n = enumerate_angulations(k, m, limit()).map_err(|e| e.to_string())?.len() as u128;
            let want = fuss_oracle(k as u128, m as u128 - 1);
            ensure(n == want, || format!("angulations k={k} m={m}: {n} != {want}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (k, m) cells"))
}

fn family_objects(k: usize, m: usize) -> Result<Vec<BTreeSet<String>>, String> {
    let angs = enumerate_angulations(k, m, limit()).map_err(|e| e.to_string())?;
    let mut images: Vec<BTreeSet<String>> = vec![BTreeSet::new(); 7];
    for a in &angs {
        let start = FamilyObject::Angulation(a.clone());
        for (to, set) in images.iter_mut().enumerate().skip(1) {
            let x = family_map(&start, 4, to).map_err(|e| format!("4->{to}: {e}"))?;
            set.insert(x.to_json());
        }
    }
    for (to, set) in images.iter().enumerate().skip(1) {
        ensure(set.len() == angs.len(), || {
            format!("k={k} m={m}: 4->{to} hits {} of {} objects", set.len(), angs.len())
        })?;
    }
    Ok(images)
}

fn criterion_3() -> Outcome {
    let mut trips = 0usize;
    for m in 1..=4 {
        for k in 1..=4 {
            for d in enumerate_diagrams(k, m, false, true, limit()).map_err(|e| e.to_string())? {
                let back = diagram_to_forest(&d).and_then(|f| forest_to_diagram(&f));
                ensure(back.as_ref() == Ok(&d), || format!("diagram {}", d.to_json()))?;
                trips += 1;
            }
        }
    }
    for m in 2..=4 {
        for k in 1..=4 {
            let trees = enumerate_trees(k, m, None, limit()).map_err(|e| e.to_string())?;
            let desc = CircularOrder::descending(k);
            for t in trees.iter().filter(|t| t.circular_order() == desc) {
                let r = tree_to_rooted(t).map_err(|e| e.to_string())?;
                ensure(&rooted_to_tree(&r) == t, || format!("rooted {}", t.to_json()))?;
                trips += 1;
                if m >= 3 {
                    let a = tree_to_rooted_angulation(t).map_err(|e| e.to_string())?;
                    ensure(&rooted_angulation_to_tree(&a) == t, || {
                        format!("rooted angulation {}", t.to_json())
                    })?;
                    trips += 1;
                }
            }
            if m >= 3 {
                for t in &trees {
                    let l = labelled_tree_to_angulation(t);
                    ensure(&labelled_angulation_to_tree(&l) == t, || {
                        format!("labelled angulation {}", t.to_json())
                    })?;
                    let s = canonical_unlabelled(t);
                    ensure(angulation_to_tree(&tree_to_angulation(&s)) == s, || {
                        format!("angulation {}", t.to_json())
                    })?;
                    trips += 2;
                }
            }
        }
    }
    for m in 3..=4 {
        for k in 1..=4 {
            let images = family_objects(k, m)?;
            // Items 1, 2 and 6 are enumerated independently and compared as sets.
            let diagrams: BTreeSet<String> = enumerate_diagrams(k + 1, m, true, true, limit())
                .map_err(|e| e.to_string())?
                .into_iter()
                .filter(last_vertex_has_only_s1)
                .map(|d| d.to_json())
                .collect();
            ensure(diagrams == images[1], || format!("family 1 set differs at k={k} m={m}"))?;
            let desc = CircularOrder::descending(k + 1);
            let trees: BTreeSet<String> = enumerate_trees(k + 1, m, Some(&desc), limit())
                .map_err(|e| e.to_string())?
                .into_iter()
                .filter(|t| t.degree(k + 1) == 1 && t.neighbour(k + 1, Symbol::new(1)).is_some())
                .map(|t| FamilyObject::Tree(t).to_json())
                .collect();
            ensure(trees == images[2], || format!("family 2 set differs at k={k} m={m}"))?;
            let plane: BTreeSet<String> = enumerate_plane_trees(k, m - 1, limit())
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|p| FamilyObject::Plane(p).to_json())
                .collect();
            ensure(plane == images[6], || format!("family 6 set differs at k={k} m={m}"))?;
            for (from, set) in images.iter().enumerate().skip(1) {
                for json in set {
                    let x = FamilyObject::from_json(from, json).map_err(|e| e.to_string())?;
                    for to in 1..=6 {
                        let back = family_map(&x, from, to).and_then(|y| family_map(&y, to, from));
                        ensure(back.as_ref() == Ok(&x), || format!("{from}->{to}->{from} on {json}"))?;
                        trips += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{trips} round trips"))
}

fn last_vertex_has_only_s1(d: &RnaDiagram) -> bool {
    let k = d.k();
    let ends: Vec<_> = d
        .arcs()
        .iter()
        .flat_map(|a| {
            let (x, y) = a.ends();
            [x, y]
        })
        .filter(|s| s.vertex == k)
        .collect();
    ends.len() == 1 && ends[0].symbol.index() == 1
}

fn criterion_4() -> Outcome {
    let mut n = 0;
    for m in 1..=4 {
        for k in 1..=5 {
            if m == 1 && k > 2 {
                continue;
            }
            for t in enumerate_trees(k, m, None, limit()).map_err(|e| e.to_string())? {
                let oracle = sigma_oracle(&t);
                ensure(t.circular_order().image() == oracle.as_slice(), || {
                    format!("circular order differs on {}", t.to_json())
                })?;
                ensure(is_single_cycle(&oracle), || format!("not a k-cycle: {}", t.to_json()))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} trees"))
}

fn criterion_5() -> Outcome {
    for k in 1..=30 {
        for m in 3..=8 {
            ensure(check_recursion(k, m), || format!("recursion k={k} m={m}"))?;
        }
    }
    for k in 1..=15 {
        for m in 3..=6 {
            ensure(check_convolution(k, m), || format!("convolution k={k} m={m}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n = rng.random_range(0..=10usize);
        let r = rng.random_range(-8..=8i64);
        let s = rng.random_range(-8..=8i64);
        let t = rng.random_range(-5..=5i64);
        ensure(check_gkp_identity(n, r, s, t), || format!("gkp n={n} r={r} s={s} t={t}"))?;
    }
    for k in 1..=30 {
        let want = catalan_oracle(k + 1) - catalan_oracle(k);
        ensure(t_count(k, 3) == BigUint::from(want), || format!("T(k,3) at k={k}"))?;
    }
    for k in 0..=12u128 {
        for d in 1..=6u128 {
            ensure(fuss_catalan(k as usize, d as usize) == BigUint::from(fuss_oracle(k, d)), || {
                format!("Fuss-Catalan k={k} d={d}")
            })?;
        }
    }
    Ok("1000 sampled convolution tuples".into())
}

fn criterion_6() -> Outcome {
    let mut moves = 0usize;
    for (m, kmax) in [(3, 5), (4, 4)] {
        for k in 1..=kmax {
            for t in enumerate_trees(k, m, None, limit()).map_err(|e| e.to_string())? {
                let sigma = sigma_oracle(&t);
                for i in 1..m {
                    for c in maximal_chains(&t, Symbol::new(i), Symbol::new(i + 1)) {
                        let g = apply_r(&t, &c.vertices, i, i + 1).map_err(|e| e.to_string())?;
                        let h = apply_l(&t, &c.vertices, i, i + 1).map_err(|e| e.to_string())?;
                        ensure(sigma_oracle(&g) == sigma && sigma_oracle(&h) == sigma, || {
                            format!("move changes the circular order of {}", t.to_json())
                        })?;
                        let back = apply_l(&g, &c.vertices, i, i + 1).map_err(|e| e.to_string())?;
                        ensure(back == t, || format!("L does not undo R on {}", t.to_json()))?;
                        moves += 1;
                    }
                }
            }
        }
    }
    for k in 1..=4 {
        let want = read_table("t_table.tsv")[&(k, 3)].clone();
        let trees = enumerate_trees(k, 3, None, limit()).map_err(|e| e.to_string())?;
        let mut classes: BTreeMap<Vec<usize>, BTreeSet<&ColouredTree>> = BTreeMap::new();
        for t in &trees {
            classes.entry(sigma_oracle(t)).or_default().insert(t);
        }
        for class in classes.values() {
            let first = *class.iter().next().unwrap();
            let o = orbit(first, limit()).map_err(|e| e.to_string())?;
            let o: BTreeSet<&ColouredTree> = o.iter().collect();
            ensure(o == *class, || format!("orbit of {} is not its class", first.to_json()))?;
            ensure(BigUint::from(o.len()) == want, || format!("orbit size {} at k={k}", o.len()))?;
        }
    }
    for k in 1..=6 {
        for m in 3..=4 {
            let line: Vec<(usize, usize, usize)> =
                (1..k).map(|v| (v, v + 1, if v % 2 == 1 { 1 } else { m })).collect();
            let t = ColouredTree::new(k, m, line).map_err(|e| e.to_string())?;
            let p = chain_order(&t, 1, m).map_err(|e| e.to_string())?;
            ensure(p == k, || format!("chain order {p} for k={k} m={m}"))?;
        }
    }
    Ok(format!("{moves} adjacent moves"))
}

fn criterion_7() -> Outcome {
    let w = find_sigma_witness(6, 3, 1, 3, limit(), |w| {
        w.before.circular_order().apply(3) == 6 && w.after.circular_order().apply(3) == 5
    })
    .map_err(|e| e.to_string())?
    .ok_or("no witness for (i, j) = (1, 3)")?;
    ensure(sigma_oracle(&w.before) != sigma_oracle(&w.after), || "witness keeps σ".into())?;
    for (i, j) in [(1, 2), (2, 3)] {
        let none = sigma_invariance_witness(6, 3, i, j, limit()).map_err(|e| e.to_string())?;
        ensure(none.is_none(), || format!("adjacent ({i}, {j}) has a witness"))?;
    }
    Ok(format!("witness {}", w.before.to_json()))
}

/// Rotation `v -> v - 1` computed directly on the diagonal list.
fn shifted_oracle(a: &MAngulation) -> BTreeSet<(usize, usize)> {
    let n = a.n();
    a.diagonals()
        .iter()
        .map(|&(x, y)| {
            let f = |v: usize| if v == 1 { n } else { v - 1 };
            let (p, q) = (f(x), f(y));
            (p.min(q), p.max(q))
        })
        .collect()
}

fn commutes(c: &ColouredAngulation, i: usize) -> Result<(), String> {
    let (si, sj) = (Symbol::new(i), Symbol::new(i + 1));
    let (tree, faces) = c.dual_tree();
    let labels = faces.iter().enumerate().map(|(idx, f)| (f.clone(), idx + 1)).collect();
    let l = LabelledAngulation::new(c.clone(), labels).map_err(|e| e.to_string())?;
    for snake in find_snakes(c, si, sj) {
        let chain: Vec<usize> = snake
            .faces
            .iter()
            .map(|f| faces.iter().position(|g| g == f).unwrap() + 1)
            .collect();
        let expected = apply_r(&tree, &chain, i, i + 1).map_err(|e| e.to_string())?;
        let d = induct_r_on_angulation(c, &snake, si).map_err(|e| e.to_string())?;
        ensure(angulation_to_tree(&d) == canonical_unlabelled(&expected), || {
            format!("unlabelled move differs on {}", c.to_json())
        })?;
        let dl = induct_r_on_labelled_angulation(&l, &snake, si).map_err(|e| e.to_string())?;
        ensure(dl.dual_tree() == expected, || format!("labelled move differs on {}", c.to_json()))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut rotations = 0usize;
    for (m, kmax) in [(3, 5), (4, 3)] {
        for k in 1..=kmax {
            for a in enumerate_angulations(k, m, limit()).map_err(|e| e.to_string())? {
                let mut cur = a.clone();
                for _ in 0..a.n() {
                    let (next, log) = rotate_one_step(&cur);
                    let want = shifted_oracle(&cur);
                    let got: BTreeSet<_> = next.diagonals().iter().copied().collect();
                    ensure(got == want, || format!("one step differs from shift on {}", cur.to_json()))?;
                    let mut replay = cur.clone();
                    for r in &log {
                        let (after, new) = replay.diagonal_rotate(r.from).map_err(|e| e.to_string())?;
                        ensure(new == r.to, || format!("logged rotation {r:?} disagrees"))?;
                        replay = after;
                    }
                    ensure(replay == next, || "replayed rotations miss the result".into())?;
                    rotations += log.len();
                    cur = next;
                }
                ensure(cur == a, || format!("n-fold rotation is not the identity on {}", a.to_json()))?;
            }
        }
    }
    let mut coloured = 0;
    for k in 1..=4 {
        for a in enumerate_angulations(k, 3, limit()).map_err(|e| e.to_string())? {
            for seed in 1..=3 {
                let c = ColouredAngulation::colour_from_seed(&a, (1, 2), Symbol::new(seed))
                    .map_err(|e| e.to_string())?;
                for i in 1..3 {
                    commutes(&c, i)?;
                }
                coloured += 1;
            }
        }
    }
    Ok(format!("{rotations} logged rotations, {coloured} coloured angulations"))
}

fn criterion_9() -> Outcome {
    let found: Vec<RnaDiagram> = enumerate_diagrams(5, 3, false, true, limit())
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|d| d.is_saturated() && !d.is_connected())
        .collect();
    let d = found.first().ok_or("no saturated disconnected diagram")?;
    ensure(saturated_oracle(d), || format!("oracle rejects saturation of {}", d.to_json()))?;
    ensure(components_oracle(d) > 1, || "oracle finds it connected".into())?;
    Ok(format!("{} found, e.g. {}", found.len(), d.to_json()))
}

/// No free pair of equal bases on distinct vertices can be joined without
/// crossing an existing arc.
fn saturated_oracle(d: &RnaDiagram) -> bool {
    let m = d.m();
    let pos = |v: usize, r: usize| (v - 1) * m + r;
    let arcs: Vec<(usize, usize)> = d
        .arcs()
        .iter()
        .map(|a| {
            let (x, y) = a.ends();
            let (p, q) = (pos(x.vertex, x.symbol.index()), pos(y.vertex, y.symbol.index()));
            (p.min(q), p.max(q))
        })
        .collect();
    let used: BTreeSet<usize> = arcs.iter().flat_map(|&(p, q)| [p, q]).collect();
    for u in 1..=d.k() {
        for v in u + 1..=d.k() {
            for r in 1..=m {
                let (p, q) = (pos(u, r), pos(v, r));
                if used.contains(&p) || used.contains(&q) {
                    continue;
                }
                let crosses = arcs.iter().any(|&(x, y)| (p < x && x < q) != (p < y && y < q));
                if !crosses {
                    return false;
                }
            }
        }
    }
    true
}

fn components_oracle(d: &RnaDiagram) -> usize {
    let mut label: Vec<usize> = (0..=d.k()).collect();
    for _ in 0..d.k() {
        for a in d.arcs() {
            let (x, y) = a.ends();
            let low = label[x.vertex].min(label[y.vertex]);
            label[x.vertex] = low;
            label[y.vertex] = low;
        }
    }
    label[1..].iter().collect::<BTreeSet<_>>().len()
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("closed-form tables", 1, criterion_1),
        ("enumeration equals formula", 120, criterion_2),
        ("bijection round trips", 120, criterion_3),
        ("circular order is a k-cycle", 60, criterion_4),
        ("identities", 30, criterion_5),
        ("induction suite", 300, criterion_6),
        ("non-adjacent induction counterexample", 60, criterion_7),
        ("angulation dynamics", 300, criterion_8),
        ("saturated disconnected diagram", 10, criterion_9),
    ];
    let mut failed = 0;
    for (idx, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > Duration::from_secs(*budget) => {
                Err(format!("took {elapsed:.2?}, budget {budget} s"))
            }
            other => other,
        };
        let n = idx + 1;
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS  {name} ({detail}; {elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL  {name} ({why}; {elapsed:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of 9 criteria failed");
        ExitCode::FAILURE
    }
}
