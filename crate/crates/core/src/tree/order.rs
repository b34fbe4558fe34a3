use super::ForestError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A permutation of `1..=k`, used for the circular order `σ` of a forest.
///
/// Serialises as cycle notation, e.g. `"(3 2 1)"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CircularOrder {
    image: Vec<usize>,
}

impl CircularOrder {
    /// `image[v - 1]` is the image of `v`.
    pub fn from_image(image: Vec<usize>) -> Result<Self, ForestError> {
        let k = image.len();
        let mut hit = vec![false; k + 1];
        for &x in &image {
            if x == 0 || x > k || hit[x] {
                return Err(ForestError::BadPermutation(format!(
                    "{image:?} is not a permutation of 1..={k}"
                )));
            }
            hit[x] = true;
        }
        Ok(CircularOrder { image })
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        CircularOrder { image }
    }

    /// The cycle `(k k-1 … 1)`, i.e. `v ↦ v - 1` and `1 ↦ k`.
    pub fn descending(k: usize) -> Self {
        CircularOrder {
            image: (1..=k).map(|v| if v == 1 { k } else { v - 1 }).collect(),
        }
    }

    pub fn identity(k: usize) -> Self {
        CircularOrder {
            image: (1..=k).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        CircularOrder { image: inv }
    }

    /// Disjoint cycles, each starting at its largest element, listed in
    /// decreasing order of that element. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.image.len();
        let mut seen = vec![false; k + 1];
        let mut out = Vec::new();
        for start in (1..=k).rev() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    /// Parses cycle notation such as `"(5 4 3 2 1)"` or `"(1 3)(2)"`.
    /// Unmentioned points are fixed; `k` is the largest point mentioned
    /// unless given explicitly.
    pub fn parse_cycles(s: &str, k: Option<usize>) -> Result<Self, ForestError> {
        let bad = |msg: &str| ForestError::BadPermutation(format!("{msg} in {s:?}"));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("missing ')'"))?;
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let k = k.unwrap_or(max);
        if max > k {
            return Err(bad("point exceeds k"));
        }
        let mut image: Vec<usize> = (1..=k).collect();
        let mut used = vec![false; k + 1];
        for cycle in &cycles {
            for (idx, &x) in cycle.iter().enumerate() {
                if x == 0 || used[x] {
                    return Err(bad("repeated or zero point"));
                }
                used[x] = true;
                image[x - 1] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Self::from_image(image)
    }
}

impl fmt::Display for CircularOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            let parts: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl TryFrom<String> for CircularOrder {
    type Error = ForestError;
    fn try_from(s: String) -> Result<Self, ForestError> {
        CircularOrder::parse_cycles(&s, None)
    }
}

impl From<CircularOrder> for String {
    fn from(o: CircularOrder) -> String {
        o.to_string()
    }
}
