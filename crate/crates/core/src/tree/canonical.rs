use super::{ColouredForest, ColouredTree, ForestError};
use serde::{Deserialize, Serialize};

/// Encoding of the subtree hanging from `root`: for each child in colour
/// order, its colour, its own encoding, then a 0 terminator. Since colours
/// at a vertex are distinct this is a complete invariant of rooted trees.
fn rooted_code(f: &ColouredForest, root: usize) -> Vec<u32> {
    fn go(f: &ColouredForest, v: usize, parent: usize, out: &mut Vec<u32>) {
        for (c, w) in f.incident(v) {
            if w != parent {
                out.push(c.index() as u32);
                go(f, w, v, out);
                out.push(0);
            }
        }
    }
    let mut out = Vec::with_capacity(3 * f.k());
    go(f, root, 0, &mut out);
    out
}

/// Vertices in depth-first preorder from `root`, children by colour.
fn preorder(f: &ColouredForest, root: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(f.k());
    let mut stack = vec![(root, 0usize)];
    while let Some((v, parent)) = stack.pop() {
        order.push(v);
        let kids: Vec<usize> = f
            .incident(v)
            .map(|(_, w)| w)
            .filter(|&w| w != parent)
            .collect();
        for &w in kids.iter().rev() {
            stack.push((w, v));
        }
    }
    order
}

fn relabel_preorder(t: &ColouredTree, root: usize) -> ColouredTree {
    let order = preorder(t, root);
    let mut perm = vec![0; t.k()];
    for (idx, &v) in order.iter().enumerate() {
        perm[v - 1] = idx + 1;
    }
    t.relabel(&perm).expect("preorder is a permutation")
}

/// The one or two vertices whose removal leaves components of size at most `k/2`.
pub fn centroids(t: &ColouredTree) -> Vec<usize> {
    let k = t.k();
    let order = preorder(t, 1);
    let mut parent = vec![0usize; k + 1];
    for &v in &order {
        for (_, w) in t.incident(v) {
            if w != parent[v] {
                parent[w] = v;
            }
        }
    }
    let mut size = vec![1usize; k + 1];
    for &v in order.iter().rev() {
        if parent[v] != 0 {
            size[parent[v]] += size[v];
        }
    }
    let heaviest = |v: usize| {
        t.incident(v)
            .map(|(_, w)| if w == parent[v] { k - size[v] } else { size[w] })
            .max()
            .unwrap_or(0)
    };
    let best = (1..=k).map(heaviest).min().unwrap_or(0);
    (1..=k).filter(|&v| heaviest(v) == best).collect()
}

/// An isomorphism class of coloured trees, stored as a canonical labelled
/// representative: rooted at the centroid giving the lexicographically least
/// encoding and relabelled in preorder.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UnlabelledTree(ColouredTree);

impl UnlabelledTree {
    pub fn representative(&self) -> &ColouredTree {
        &self.0
    }

    pub fn into_representative(self) -> ColouredTree {
        self.0
    }
}

pub fn canonical_unlabelled(t: &ColouredTree) -> UnlabelledTree {
    let root = centroids(t)
        .into_iter()
        .min_by_key(|&c| rooted_code(t, c))
        .expect("a tree has a centroid");
    UnlabelledTree(relabel_preorder(t, root))
}

/// A coloured tree with a distinguished root vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RootedRepr", into = "RootedRepr")]
pub struct RootedTree {
    tree: ColouredTree,
    root: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootedRepr {
    k: usize,
    m: usize,
    edges: Vec<(usize, usize, usize)>,
    root: usize,
}

impl TryFrom<RootedRepr> for RootedTree {
    type Error = ForestError;
    fn try_from(r: RootedRepr) -> Result<Self, ForestError> {
        RootedTree::new(ColouredTree::new(r.k, r.m, r.edges)?, r.root)
    }
}

impl From<RootedTree> for RootedRepr {
    fn from(r: RootedTree) -> Self {
        RootedRepr {
            k: r.tree.k(),
            m: r.tree.m(),
            edges: r
                .tree
                .edges()
                .iter()
                .map(|e| (e.u, e.v, e.colour.index()))
                .collect(),
            root: r.root,
        }
    }
}

impl RootedTree {
    pub fn new(tree: ColouredTree, root: usize) -> Result<Self, ForestError> {
        if root == 0 || root > tree.k() {
            return Err(ForestError::VertexOutOfRange {
                vertex: root,
                k: tree.k(),
            });
        }
        Ok(RootedTree { tree, root })
    }

    pub fn tree(&self) -> &ColouredTree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Representative of the rooted isomorphism class: preorder labels with
    /// the root as vertex 1.
    pub fn canonical(&self) -> RootedTree {
        RootedTree {
            tree: relabel_preorder(&self.tree, self.root),
            root: 1,
        }
    }

    pub fn is_isomorphic(&self, other: &RootedTree) -> bool {
        self.tree.m() == other.tree.m()
            && self.tree.k() == other.tree.k()
            && rooted_code(&self.tree, self.root) == rooted_code(&other.tree, other.root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centroid_of_path() {
        let t = ColouredTree::new(4, 2, [(1, 2, 1), (2, 3, 2), (3, 4, 1)]).unwrap();
        assert_eq!(centroids(&t), vec![2, 3]);
        let t = ColouredTree::new(3, 2, [(1, 2, 1), (2, 3, 2)]).unwrap();
        assert_eq!(centroids(&t), vec![2]);
    }

    #[test]
    fn relabelled_copies_share_canonical_form() {
        let t = ColouredTree::new(4, 3, [(1, 2, 1), (1, 3, 2), (3, 4, 3)]).unwrap();
        let u = t.relabel(&[4, 2, 1, 3]).unwrap();
        assert_eq!(canonical_unlabelled(&t), canonical_unlabelled(&u));
        let recoloured = ColouredTree::new(4, 3, [(1, 2, 2), (1, 3, 1), (3, 4, 3)]).unwrap();
        assert_ne!(canonical_unlabelled(&t), canonical_unlabelled(&recoloured));
    }

    #[test]
    fn rooted_canonical_puts_root_first() {
        let t = ColouredTree::new(3, 3, [(1, 2, 1), (2, 3, 2)]).unwrap();
        let r = RootedTree::new(t, 3).unwrap();
        let c = r.canonical();
        assert_eq!(c.root(), 1);
        assert!(c.is_isomorphic(&r));
        assert_eq!(c.tree().edge_colour(1, 2).map(|s| s.index()), Some(2));
    }
}
