use clustercomb::angulation::rotate_one_step;
use clustercomb::bijection::{
    diagram_to_forest, forest_to_diagram, labelled_angulation_to_tree, labelled_tree_to_angulation,
    tree_to_angulation,
};
use clustercomb::counting::check_gkp_identity;
use clustercomb::diagram::Arc;
use clustercomb::induction::{apply_l, apply_r, apply_steps, normal_form};
use clustercomb::{canonical_unlabelled, maximal_chains, ColouredTree, RnaDiagram, Symbol};
use proptest::prelude::*;

/// A random coloured tree: vertex `v` hangs off an earlier vertex on a
/// colour still free there, then the labels are shuffled.
fn arb_tree(max_k: usize, ms: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = ColouredTree> {
    (1..=max_k, ms)
        .prop_flat_map(|(k, m)| {
            (
                Just(k),
                Just(m),
                proptest::collection::vec((any::<usize>(), any::<usize>()), k.saturating_sub(1)),
                Just((1..=k).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(k, m, picks, perm)| {
            let mut used: Vec<Vec<bool>> = vec![vec![false; m + 1]; k + 1];
            let mut edges = Vec::new();
            for (idx, (p, c)) in picks.into_iter().enumerate() {
                let v = idx + 2;
                let (parent, colour) = (0..v - 1)
                    .map(|t| (p + t) % (v - 1) + 1)
                    .find_map(|u| {
                        (0..m).map(|s| (c + s) % m + 1).find(|&r| !used[u][r]).map(|r| (u, r))
                    })
                    .expect("a path always has a free colour when m >= 2");
                used[parent][colour] = true;
                used[v][colour] = true;
                edges.push((perm[parent - 1], perm[v - 1], colour));
            }
            ColouredTree::new(k, m, edges).expect("construction keeps the colouring proper")
        })
}

fn arb_noncrossing(max_k: usize) -> impl Strategy<Value = RnaDiagram> {
    (1..=max_k, 1..=4usize)
        .prop_flat_map(|(k, m)| {
            (Just(k), Just(m), proptest::collection::vec((1..=k, 1..=k, 1..=m), 0..12))
        })
        .prop_map(|(k, m, tries)| {
            let mut d = RnaDiagram::from_arcs(k, m, &[]).unwrap();
            for (u, v, r) in tries {
                if u == v {
                    continue;
                }
                let mut arcs = d.arcs().to_vec();
                arcs.push(Arc {
                    u: u.min(v),
                    v: u.max(v),
                    symbol: Symbol::new(r),
                });
                if let Ok(e) = RnaDiagram::from_arcs(k, m, &arcs) {
                    if e.is_noncrossing() {
                        d = e;
                    }
                }
            }
            d
        })
}

fn sigma_by_hand(t: &ColouredTree) -> Vec<usize> {
    (1..=t.k())
        .map(|v| {
            (1..=t.m()).fold(v, |x, r| {
                t.edges()
                    .iter()
                    .find(|e| e.colour.index() == r && (e.u == x || e.v == x))
                    .map_or(x, |e| e.other(x))
            })
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn circular_order_is_one_cycle(t in arb_tree(9, 2..=5)) {
        let sigma = t.circular_order();
        prop_assert_eq!(sigma.image().to_vec(), sigma_by_hand(&t));
        prop_assert!(sigma.is_full_cycle());
        prop_assert_eq!(sigma.cycles().len(), 1);
    }

    #[test]
    fn json_round_trip(t in arb_tree(9, 2..=5)) {
        prop_assert_eq!(ColouredTree::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn adjacent_moves_keep_sigma_and_invert(t in arb_tree(8, 2..=5), pick in any::<usize>()) {
        let m = t.m();
        let i = pick % (m - 1) + 1;
        let chains = maximal_chains(&t, Symbol::new(i), Symbol::new(i + 1));
        let c = &chains[pick % chains.len()];
        let g = apply_r(&t, &c.vertices, i, i + 1).unwrap();
        prop_assert_eq!(g.circular_order(), t.circular_order());
        prop_assert_eq!(apply_l(&g, &c.vertices, i, i + 1).unwrap(), t.clone());
        let h = apply_l(&t, &c.vertices, i, i + 1).unwrap();
        prop_assert_eq!(apply_r(&h, &c.vertices, i, i + 1).unwrap(), t);
    }

    #[test]
    fn normal_form_replays(t in arb_tree(6, 3..=4)) {
        let (g, steps) = normal_form(&t);
        let m = t.m();
        prop_assert!(g.edges().iter().all(|e| e.colour.index() == 1 || e.colour.index() == m));
        prop_assert_eq!(g.circular_order(), t.circular_order());
        prop_assert_eq!(apply_steps(&t, &steps).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(t in arb_tree(9, 2..=5), perm in Just((1..=9usize).collect::<Vec<_>>()).prop_shuffle()) {
        let k = t.k();
        let p: Vec<usize> = {
            let mut small: Vec<usize> = perm.into_iter().filter(|&v| v <= k).collect();
            small.truncate(k);
            small
        };
        let u = t.relabel(&p).unwrap();
        prop_assert_eq!(canonical_unlabelled(&u), canonical_unlabelled(&t));
    }

    #[test]
    fn labelled_angulation_round_trip(t in arb_tree(8, 3..=5)) {
        let l = labelled_tree_to_angulation(&t);
        prop_assert_eq!(l.coloured().base().n(), (t.m() - 2) * t.k() + 2);
        prop_assert_eq!(labelled_angulation_to_tree(&l), t);
    }

    #[test]
    fn rotation_by_flips_is_index_shift(t in arb_tree(7, 3..=5), s in 0i64..20) {
        let a = tree_to_angulation(&canonical_unlabelled(&t)).base().clone();
        prop_assert_eq!(rotate_one_step(&a).0, a.rotated(1));
        prop_assert_eq!(a.rotated(s).canonical_rotation().0, a.canonical_rotation().0);
        prop_assert_eq!(a.rotated(s).rotated(-s), a);
    }

    #[test]
    fn diagram_forest_round_trip(d in arb_noncrossing(7)) {
        let f = diagram_to_forest(&d).unwrap();
        prop_assert_eq!(f.edges().len(), d.arcs().len());
        prop_assert_eq!(forest_to_diagram(&f).unwrap(), d);
    }

    #[test]
    fn arc_shift_inverts(d in arb_noncrossing(6), s in 0i64..8) {
        if let Ok(e) = d.arc_shift(s) {
            prop_assert_eq!(e.arc_shift(-s).unwrap(), d);
        }
    }

    #[test]
    fn gkp_convolution(n in 0usize..=10, r in -5i64..=5, s in -5i64..=5, t in 1i64..=4) {
        prop_assert!(check_gkp_identity(n, r, s, t));
    }
}
