use serde::{Deserialize, Serialize};

/// A rooted ordered tree, serialised as nested arrays: a leaf is `[]` and an
/// internal vertex is the array of its children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree { children: Vec::new() }
    }

    pub fn node(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn internal_count(&self) -> usize {
        if self.is_leaf() {
            0
        } else {
            1 + self.children.iter().map(PlaneTree::internal_count).sum::<usize>()
        }
    }

    /// Every vertex has either no children or exactly `arity` of them.
    pub fn is_complete(&self, arity: usize) -> bool {
        self.is_leaf()
            || (self.children.len() == arity && self.children.iter().all(|c| c.is_complete(arity)))
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plane trees serialise")
    }
}
