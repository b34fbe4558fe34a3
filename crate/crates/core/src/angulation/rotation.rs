//! Rotating a whole angulation by one step using only diagonal rotations.
//!
//! A boundary face `M = {i, …, i+m-1}` is chosen; the fan of faces at `i`
//! is rotated anticlockwise diagonal by diagonal (farthest diagonal first),
//! the fan left over after removing the image of `M` is rotated back
//! clockwise (nearest diagonal first), and the polygon without that image
//! is handled recursively.

use super::{norm, rotate_in_merged, split_faces, Diagonal, MAngulation};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// One anticlockwise diagonal rotation, `from` being replaced by `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rotation {
    pub from: Diagonal,
    pub to: Diagonal,
}

/// Diagonals of a fixed polygon on `1..=n`, mutated by diagonal rotations.
pub(crate) struct RotationState {
    pub m: usize,
    pub n: usize,
    pub diagonals: BTreeSet<Diagonal>,
    pub log: Vec<Rotation>,
}

impl RotationState {
    pub fn new(a: &MAngulation) -> Self {
        RotationState {
            m: a.m(),
            n: a.n(),
            diagonals: a.diagonals().iter().copied().collect(),
            log: Vec::new(),
        }
    }

    /// Rotates `d` one step anticlockwise and returns its replacement.
    pub fn rotate(&mut self, d: Diagonal) -> Diagonal {
        let d = norm(d.0, d.1);
        let order: Vec<usize> = (1..=self.n).collect();
        let diags: Vec<Diagonal> = self.diagonals.iter().copied().collect();
        let faces = split_faces(&order, &diags);
        let mut around = faces
            .iter()
            .filter(|f| f.contains(&d.0) && f.contains(&d.1));
        let f = around.next().expect("rotated diagonal borders a face");
        let g = around.next().expect("rotated diagonal borders two faces");
        let new = rotate_in_merged(f, g, d);
        self.diagonals.remove(&d);
        self.diagonals.insert(new);
        self.log.push(Rotation { from: d, to: new });
        new
    }

    /// Clockwise rotation, realised as `m-2` anticlockwise ones.
    pub fn rotate_clockwise(&mut self, d: Diagonal) -> Diagonal {
        (0..self.m - 2).fold(d, |cur, _| self.rotate(cur))
    }

    /// Rotates the sub-angulation of the sub-polygon `poly` (clockwise vertex
    /// list) one step anticlockwise.
    pub fn rotate_polygon(&mut self, poly: &[usize]) {
        let len = poly.len();
        let m = self.m;
        if len <= m {
            return;
        }
        let size = poly.iter().copied().max().unwrap() + 1;
        let mut pos = vec![usize::MAX; size];
        for (idx, &v) in poly.iter().enumerate() {
            pos[v] = idx;
        }
        let inside = |v: usize| v < size && pos[v] != usize::MAX;
        let is_side = |a: usize, b: usize| {
            let (pa, pb) = (pos[a], pos[b]);
            (pa + 1) % len == pb || (pb + 1) % len == pa
        };
        let inner: Vec<Diagonal> = self
            .diagonals
            .iter()
            .copied()
            .filter(|&(a, b)| inside(a) && inside(b) && !is_side(a, b))
            .collect();
        let faces = split_faces(poly, &inner);

        // A boundary face M occupies m consecutive vertices of poly; i is the first.
        let p = faces
            .iter()
            .find_map(|f| {
                f.iter().map(|&v| pos[v]).find(|&start| {
                    (0..m).all(|t| f.contains(&poly[(start + t) % len]))
                })
            })
            .expect("a polygon with several faces has a boundary face");
        let i = poly[p];

        let region: BTreeSet<usize> = faces
            .iter()
            .filter(|f| f.contains(&i))
            .flatten()
            .copied()
            .collect();
        let dist = |x: usize, from: usize| (pos[x] + len - from) % len;

        let mut fan: Vec<usize> = inner
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        fan.sort_by_key(|&x| std::cmp::Reverse(dist(x, p)));
        for x in fan {
            self.rotate(norm(i, x));
        }

        let apex = poly[(p + len - 1) % len];
        let removed: Vec<usize> = (0..m - 2).map(|t| poly[(p + t) % len]).collect();
        let mut rest: Vec<usize> = region
            .iter()
            .copied()
            .filter(|v| !removed.contains(v))
            .collect();
        rest.sort_by_key(|&v| pos[v]);
        let rlen = rest.len();
        let rpos = |v: usize| rest.iter().position(|&x| x == v);
        let apex_r = rpos(apex).expect("apex stays in the fan");
        let mut back: Vec<usize> = self
            .diagonals
            .iter()
            .filter_map(|&(a, b)| {
                let other = if a == apex {
                    b
                } else if b == apex {
                    a
                } else {
                    return None;
                };
                let r = rpos(other)?;
                let gap = (r + rlen - apex_r) % rlen;
                (gap != 1 && gap != rlen - 1).then_some(other)
            })
            .collect();
        back.sort_by_key(|&x| dist(x, pos[apex]));
        for x in back {
            self.rotate_clockwise(norm(apex, x));
        }

        let smaller: Vec<usize> = poly
            .iter()
            .copied()
            .filter(|v| !removed.contains(v))
            .collect();
        self.rotate_polygon(&smaller);
    }

    pub fn finish(self, k: usize) -> MAngulation {
        MAngulation::new(self.m, k, self.diagonals).expect("rotations preserve validity")
    }
}

/// Rotates the angulation one step anticlockwise (vertex `v` to `v - 1`),
/// returning the result and the diagonal rotations that realise it.
pub fn rotate_one_step(a: &MAngulation) -> (MAngulation, Vec<Rotation>) {
    let mut state = RotationState::new(a);
    let poly: Vec<usize> = (1..=a.n()).collect();
    state.rotate_polygon(&poly);
    let log = std::mem::take(&mut state.log);
    (state.finish(a.k()), log)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::enumerate_angulations;
    use crate::limits::WorkLimit;

    #[test]
    fn fan_rotation_starts_with_the_fan_table() {
        let a = MAngulation::new(4, 4, [(1, 4), (1, 6), (1, 8)]).unwrap();
        let (b, seq) = rotate_one_step(&a);
        assert_eq!(b, a.rotated(1));
        let head: Vec<Rotation> = seq.iter().copied().take(3).collect();
        assert_eq!(
            head,
            vec![
                Rotation { from: (1, 8), to: (7, 10) },
                Rotation { from: (1, 6), to: (5, 10) },
                Rotation { from: (1, 4), to: (3, 10) },
            ]
        );
    }

    #[test]
    fn matches_index_shift_small() {
        for (k, m) in [(1, 3), (2, 3), (3, 3), (4, 3), (3, 4), (3, 5)] {
            for a in enumerate_angulations(k, m, WorkLimit::unbounded()).unwrap() {
                let (b, seq) = rotate_one_step(&a);
                assert_eq!(b, a.rotated(1), "{a:?}");
                let mut replay = a.clone();
                for r in &seq {
                    let (next, to) = replay.diagonal_rotate(r.from).unwrap();
                    assert_eq!(to, r.to);
                    replay = next;
                }
                assert_eq!(replay, b);
            }
        }
    }
}
