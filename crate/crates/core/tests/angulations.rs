use clustercomb::angulation::{
    find_snakes, induct_r_on_angulation, induct_r_on_angulation_by_rotations,
    induct_r_on_labelled_angulation, rotate_one_step, AngulationError, LabelledAngulation,
};
use clustercomb::counting::enumerate_angulations;
use clustercomb::induction::apply_r;
use clustercomb::{maximal_chains, ColouredAngulation, MAngulation, Symbol, WorkLimit};
use std::collections::{BTreeMap, BTreeSet};

fn all_colourings(k: usize, m: usize) -> Vec<ColouredAngulation> {
    enumerate_angulations(k, m, WorkLimit::unbounded())
        .unwrap()
        .iter()
        .flat_map(|a| {
            (1..=m).map(move |c| ColouredAngulation::colour_from_seed(a, (1, 2), Symbol::new(c)).unwrap())
        })
        .collect()
}

#[test]
fn validation_examples() {
    assert!(MAngulation::new(3, 1, []).is_ok());
    assert!(MAngulation::new(3, 2, [(1, 3)]).is_ok());
    assert!(MAngulation::new(4, 2, [(1, 4)]).is_ok());
    assert!(matches!(
        MAngulation::new(4, 2, [(1, 3)]),
        Err(AngulationError::BadDiagonalModulus(1, 3))
    ));
}

#[test]
fn seeding_the_square_diagonal() {
    let a = MAngulation::new(3, 2, [(1, 3)]).unwrap();
    let c = ColouredAngulation::colour_from_seed(&a, (1, 3), Symbol::new(1)).unwrap();
    assert_eq!(c.colours().len(), 5);
    for face in a.faces() {
        let mut cs: Vec<usize> = c.face_colours(&face).iter().map(|s| s.index()).collect();
        cs.sort_unstable();
        assert_eq!(cs, vec![1, 2, 3]);
    }
    let distinct: BTreeSet<_> = (1..=3)
        .map(|s| ColouredAngulation::colour_from_seed(&a, (1, 3), Symbol::new(s)).unwrap())
        .collect();
    assert_eq!(distinct.len(), 3);
}

#[test]
fn rotation_of_the_square() {
    let a = MAngulation::new(3, 2, [(1, 3)]).unwrap();
    let (b, seq) = rotate_one_step(&a);
    assert_eq!(b.diagonals(), &[(2, 4)]);
    assert_eq!(seq.len(), 1);
    let mut cur = a.clone();
    for _ in 0..a.n() {
        cur = rotate_one_step(&cur).0;
    }
    assert_eq!(cur, a);
}

#[test]
fn diagonal_rotation_cycles_in_merged_polygon() {
    for m in 3..=5 {
        let a = MAngulation::new(m, 2, [(1, m)]).unwrap();
        let mut cur = (a.clone(), (1, m));
        for step in 1..=2 * m - 2 {
            cur = cur.0.diagonal_rotate(cur.1).unwrap();
            assert_eq!(cur.0 == a, step % (m - 1) == 0, "m={m} step={step}");
        }
    }
}

#[test]
fn canonical_rotation_is_rotation_invariant() {
    let sq = MAngulation::new(3, 2, [(2, 4)]).unwrap();
    assert_eq!(sq.canonical_rotation().0.diagonals(), &[(1, 3)]);
    for m in 3..=4 {
        for a in enumerate_angulations(4, m, WorkLimit::unbounded()).unwrap() {
            let canon = a.canonical_rotation().0;
            for s in 0..a.n() as i64 {
                assert_eq!(a.rotated(s).canonical_rotation().0, canon);
            }
        }
    }
}

#[test]
fn at_least_two_boundary_faces() {
    let fan = MAngulation::new(3, 4, [(1, 3), (1, 4), (1, 5)]).unwrap();
    assert_eq!(fan.boundary_face_count(), 2);
    for m in 3..=4 {
        for k in 2..=5 {
            for a in enumerate_angulations(k, m, WorkLimit::unbounded()).unwrap() {
                assert!(a.boundary_face_count() >= 2);
            }
        }
    }
}

#[test]
fn snakes_are_the_dual_chains() {
    for k in 1..=4 {
        for c in all_colourings(k, 3) {
            let (tree, faces) = c.dual_tree();
            for (i, j) in [(1, 2), (2, 3), (1, 3)] {
                let (si, sj) = (Symbol::new(i), Symbol::new(j));
                let snakes: BTreeSet<Vec<usize>> = find_snakes(&c, si, sj)
                    .iter()
                    .map(|s| {
                        let mut vs: Vec<usize> = s
                            .faces
                            .iter()
                            .map(|f| faces.iter().position(|g| g == f).unwrap() + 1)
                            .collect();
                        vs.sort_unstable();
                        vs
                    })
                    .collect();
                let chains: BTreeSet<Vec<usize>> = maximal_chains(&tree, si, sj)
                    .iter()
                    .map(|ch| ch.sorted_vertices())
                    .collect();
                assert_eq!(snakes, chains);
            }
        }
    }
}

#[test]
fn two_triangles() {
    let a = MAngulation::new(3, 2, [(1, 3)]).unwrap();
    let c = ColouredAngulation::colour_from_seed(&a, (1, 3), Symbol::new(1)).unwrap();
    let snakes = find_snakes(&c, Symbol::new(1), Symbol::new(2));
    assert_eq!(snakes.len(), 1);
    assert_eq!(snakes[0].faces.len(), 2);
    let d = induct_r_on_angulation(&c, &snakes[0], Symbol::new(1)).unwrap();
    assert_eq!(d.base().diagonals().len(), 1);
    let diag = d.base().diagonals()[0];
    assert_eq!(d.colour(diag), Some(Symbol::new(2)));

    let (tree, faces) = c.dual_tree();
    let labels: BTreeMap<_, _> = faces.iter().cloned().zip(1..).collect();
    let l = LabelledAngulation::new(c.clone(), labels).unwrap();
    let moved = induct_r_on_labelled_angulation(&l, &snakes[0], Symbol::new(1)).unwrap();
    let expected = apply_r(&tree, &[1, 2], 1, 2).unwrap();
    assert_eq!(moved.dual_tree(), expected);
    let mut got: Vec<usize> = moved.labels().values().copied().collect();
    got.sort_unstable();
    assert_eq!(got, vec![1, 2]);
}

#[test]
fn single_face_snake_is_fixed() {
    let a = MAngulation::new(4, 1, []).unwrap();
    let c = ColouredAngulation::colour_from_seed(&a, (1, 2), Symbol::new(1)).unwrap();
    let snakes = find_snakes(&c, Symbol::new(2), Symbol::new(3));
    assert_eq!(snakes.len(), 1);
    assert_eq!(induct_r_on_angulation(&c, &snakes[0], Symbol::new(2)).unwrap(), c);
}

#[test]
fn rotation_realisation_agrees_with_reattachment() {
    for m in 3..=4 {
        for k in 1..=4 {
            for c in all_colourings(k, m) {
                for i in 1..m {
                    let (si, sj) = (Symbol::new(i), Symbol::new(i + 1));
                    for snake in find_snakes(&c, si, sj) {
                        let direct = induct_r_on_angulation(&c, &snake, si).unwrap();
                        let (by_rot, seq) = induct_r_on_angulation_by_rotations(&c, &snake, si).unwrap();
                        assert_eq!(by_rot.canonical_rotation().0, direct.canonical_rotation().0);
                        let mut replay = c.base().clone();
                        for r in &seq {
                            let (next, new) = replay.diagonal_rotate(r.from).unwrap();
                            assert_eq!(new, r.to);
                            replay = next;
                        }
                        assert_eq!(&replay, by_rot.base());
                    }
                }
            }
        }
    }
}

#[test]
fn labelled_moves_commute_with_tree_moves() {
    for k in 1..=3 {
        for c in all_colourings(k, 3) {
            let (tree, faces) = c.dual_tree();
            let labels: BTreeMap<_, _> = faces.iter().cloned().zip(1..).collect();
            let l = LabelledAngulation::new(c.clone(), labels).unwrap();
            for i in 1..3 {
                for snake in find_snakes(&c, Symbol::new(i), Symbol::new(i + 1)) {
                    let chain: Vec<usize> = snake
                        .faces
                        .iter()
                        .map(|f| faces.iter().position(|g| g == f).unwrap() + 1)
                        .collect();
                    let moved = induct_r_on_labelled_angulation(&l, &snake, Symbol::new(i)).unwrap();
                    assert_eq!(moved.dual_tree(), apply_r(&tree, &chain, i, i + 1).unwrap());
                }
            }
        }
    }
}
