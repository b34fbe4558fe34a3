use super::BijectionError;
use crate::tree::{CircularOrder, ColouredTree, RootedTree};

/// A labelled tree whose circular order is `(k k-1 … 1)` forgets its labels
/// and remembers vertex `k` as the root. Returns the canonical rooted form.
pub fn tree_to_rooted(t: &ColouredTree) -> Result<RootedTree, BijectionError> {
    let k = t.k();
    let sigma = t.circular_order();
    let expected = CircularOrder::descending(k);
    if sigma != expected {
        return Err(BijectionError::WrongCircularOrder {
            expected: expected.to_string(),
            found: sigma.to_string(),
        });
    }
    Ok(RootedTree::new(t.clone(), k)?.canonical())
}

/// Labels the root `k` and `σ^i(root)` as `k - i`; the result has circular
/// order `(k k-1 … 1)`.
pub fn rooted_to_tree(r: &RootedTree) -> ColouredTree {
    let t = r.tree();
    let k = t.k();
    let sigma = t.circular_order();
    let mut perm = vec![0usize; k];
    let mut v = r.root();
    for i in 0..k {
        perm[v - 1] = k - i;
        v = sigma.apply(v);
    }
    t.relabel(&perm).expect("circular order of a tree is a k-cycle")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_on_path() {
        let t = ColouredTree::new(3, 3, [(1, 2, 1), (2, 3, 2)]).unwrap();
        let r = tree_to_rooted(&t).unwrap();
        assert_eq!(rooted_to_tree(&r), t);
    }

    #[test]
    fn wrong_order() {
        let t = ColouredTree::new(3, 3, [(1, 2, 2), (2, 3, 1)]).unwrap();
        assert!(matches!(
            tree_to_rooted(&t),
            Err(BijectionError::WrongCircularOrder { .. })
        ));
    }
}
