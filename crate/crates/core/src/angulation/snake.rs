//! Snakes (maximal two-colour strips of faces) and the induction move on
//! coloured angulations that mirrors `R_i` on dual trees.

use super::rotation::{Rotation, RotationState};
use super::{
    check_symbol, face_sides, norm, split_faces, AngulationError, ColouredAngulation, Diagonal,
    Face, LabelledAngulation, MAngulation,
};
use crate::tree::{maximal_chains, Symbol};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Faces `M_1, …, M_l` whose consecutive members share a diagonal and whose
/// shared diagonals alternate between colours `S_i` and `S_j`, maximal with
/// that property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnakePolygon {
    pub i: Symbol,
    pub j: Symbol,
    pub faces: Vec<Face>,
}

impl SnakePolygon {
    pub fn reversed(&self) -> SnakePolygon {
        let mut faces = self.faces.clone();
        faces.reverse();
        SnakePolygon {
            i: self.i,
            j: self.j,
            faces,
        }
    }
}

/// All maximal `S_i`/`S_j` snakes, single faces included. They correspond
/// to the maximal chains of the dual tree.
pub fn find_snakes(c: &ColouredAngulation, i: Symbol, j: Symbol) -> Vec<SnakePolygon> {
    let (tree, faces) = c.dual_tree();
    maximal_chains(&tree, i, j)
        .into_iter()
        .map(|chain| SnakePolygon {
            i,
            j,
            faces: chain
                .vertices
                .iter()
                .map(|&t| faces[t - 1].clone())
                .collect(),
        })
        .collect()
}

fn validate(
    c: &ColouredAngulation,
    snake: &SnakePolygon,
    i: Symbol,
) -> Result<Symbol, AngulationError> {
    let m = c.base().m();
    check_symbol(i.index(), m)?;
    let j = check_symbol(i.index() + 1, m)?;
    let not_snake = || AngulationError::NotASnake(snake.faces.clone());
    if snake.i != i || snake.j != j {
        return Err(not_snake());
    }
    let mut rev = snake.faces.clone();
    rev.reverse();
    let found = find_snakes(c, i, j)
        .into_iter()
        .any(|s| s.faces == snake.faces || s.faces == rev);
    if found {
        Ok(j)
    } else {
        Err(not_snake())
    }
}

fn shared_diagonal(f: &[usize], g: &[usize]) -> Diagonal {
    let common: Vec<usize> = f.iter().copied().filter(|v| g.contains(v)).collect();
    debug_assert_eq!(common.len(), 2);
    norm(common[0], common[1])
}

/// Which diagonals of the snake are rotated in the first step: those
/// coloured `S_{i+1}`, i.e. between `M_2, M_3`, `M_4, M_5`, … when the
/// first diagonal is `S_i`, and `M_1, M_2`, `M_3, M_4`, … otherwise.
struct Plan {
    chain: Vec<Diagonal>,
    rotated: Vec<bool>,
}

fn plan(c: &ColouredAngulation, snake: &SnakePolygon, i: Symbol) -> Plan {
    let chain: Vec<Diagonal> = snake
        .faces
        .windows(2)
        .map(|w| shared_diagonal(&w[0], &w[1]))
        .collect();
    let first_is_i = c.colour(chain[0]) == Some(i);
    let rotated = (0..chain.len())
        .map(|t| (t % 2 == 1) == first_is_i)
        .collect();
    Plan { chain, rotated }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum End {
    X,
    Y,
    V(usize),
}

/// A sub-polygon cut away along a diagonal `(x, y)`, kept in terms of its
/// attaching endpoints so it can be glued onto another side.
struct Component {
    arc: Vec<usize>,
    edges: Vec<(End, End, Symbol)>,
    diagonals: Vec<(End, End)>,
    attach: Symbol,
    faces: Vec<(Vec<End>, usize)>,
}

/// A polygon whose vertices are opaque ids listed clockwise in `cycle`.
struct Workspace {
    m: usize,
    cycle: Vec<usize>,
    diagonals: BTreeSet<Diagonal>,
    colours: HashMap<Diagonal, Symbol>,
}

impl Workspace {
    fn new(c: &ColouredAngulation) -> Self {
        Workspace {
            m: c.base().m(),
            cycle: (1..=c.base().n()).collect(),
            diagonals: c.base().diagonals().iter().copied().collect(),
            colours: c.colours().iter().map(|(&e, &s)| (e, s)).collect(),
        }
    }

    fn position(&self, v: usize) -> usize {
        self.cycle.iter().position(|&x| x == v).expect("vertex on cycle")
    }

    fn faces(&self) -> Vec<Face> {
        let diags: Vec<Diagonal> = self.diagonals.iter().copied().collect();
        split_faces(&self.cycle, &diags)
    }

    fn rotate(&mut self, d: Diagonal) -> Diagonal {
        let faces = self.faces();
        let mut around = faces
            .iter()
            .filter(|f| f.contains(&d.0) && f.contains(&d.1));
        let f = around.next().expect("diagonal borders a face");
        let g = around.next().expect("diagonal borders two faces");
        let mut merged: Vec<usize> = f.iter().chain(g.iter()).copied().collect();
        merged.sort_by_key(|&v| self.position(v));
        merged.dedup();
        let len = merged.len();
        let a = merged.iter().position(|&v| v == d.0).unwrap();
        let b = merged.iter().position(|&v| v == d.1).unwrap();
        let new = norm(merged[(a + len - 1) % len], merged[(b + len - 1) % len]);
        self.diagonals.remove(&d);
        self.diagonals.insert(new);
        new
    }

    /// Cuts away everything beyond the diagonal `(x, y)`, where `y` follows
    /// `x` clockwise on the face that stays.
    fn detach(&mut self, x: usize, y: usize, labels: &HashMap<Vec<usize>, usize>) -> Component {
        let len = self.cycle.len();
        let (px, py) = (self.position(x), self.position(y));
        let arc: Vec<usize> = (1..(py + len - px) % len)
            .map(|t| self.cycle[(px + t) % len])
            .collect();
        let end = |v: usize| {
            if v == x {
                End::X
            } else if v == y {
                End::Y
            } else {
                End::V(v)
            }
        };
        let member = |v: usize| v == x || v == y || arc.contains(&v);
        let faces = self
            .faces()
            .into_iter()
            .filter(|f| f.iter().all(|&v| member(v)))
            .map(|f| {
                let mut key = f.clone();
                key.sort_unstable();
                let label = labels.get(&key).copied().unwrap_or(0);
                (f.into_iter().map(end).collect(), label)
            })
            .collect();
        let attach = self.colours[&norm(x, y)];
        let mut edges = Vec::new();
        let mut diagonals = Vec::new();
        let owned: Vec<Diagonal> = self
            .colours
            .keys()
            .copied()
            .filter(|&(a, b)| member(a) && member(b) && norm(a, b) != norm(x, y))
            .collect();
        for e in owned {
            let c = self.colours.remove(&e).unwrap();
            edges.push((end(e.0), end(e.1), c));
            if self.diagonals.remove(&e) {
                diagonals.push((end(e.0), end(e.1)));
            }
        }
        self.diagonals.remove(&norm(x, y));
        self.cycle.retain(|v| !arc.contains(v));
        Component {
            arc,
            edges,
            diagonals,
            attach,
            faces,
        }
    }

    /// Glues a component onto the side `(u, w)`, `w` following `u` clockwise.
    fn attach(&mut self, comp: &Component, u: usize, w: usize) -> Vec<(Vec<usize>, usize)> {
        let pu = self.position(u);
        debug_assert_eq!(self.cycle[(pu + 1) % self.cycle.len()], w);
        let tail = self.cycle.split_off(pu + 1);
        self.cycle.extend_from_slice(&comp.arc);
        self.cycle.extend(tail);
        let id = |e: End| match e {
            End::X => u,
            End::Y => w,
            End::V(v) => v,
        };
        for &(a, b, c) in &comp.edges {
            self.colours.insert(norm(id(a), id(b)), c);
        }
        for &(a, b) in &comp.diagonals {
            self.diagonals.insert(norm(id(a), id(b)));
        }
        self.diagonals.insert(norm(u, w));
        self.colours.insert(norm(u, w), comp.attach);
        comp.faces
            .iter()
            .map(|(f, label)| {
                let mut g: Vec<usize> = f.iter().map(|&e| id(e)).collect();
                g.sort_unstable();
                (g, *label)
            })
            .collect()
    }

    /// Renumbers the cycle as `1..=n` and rebuilds the coloured angulation.
    fn finish(&self, k: usize) -> (ColouredAngulation, HashMap<usize, usize>) {
        let rename: HashMap<usize, usize> = self
            .cycle
            .iter()
            .enumerate()
            .map(|(t, &v)| (v, t + 1))
            .collect();
        let diags: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|&(a, b)| norm(rename[&a], rename[&b]))
            .collect();
        let base = MAngulation::new(self.m, k, diags).expect("surgery preserves validity");
        let colours: BTreeMap<Diagonal, Symbol> = self
            .colours
            .iter()
            .map(|(&(a, b), &c)| (norm(rename[&a], rename[&b]), c))
            .collect();
        let ang = ColouredAngulation::new(base, colours).expect("surgery preserves the colour rule");
        (ang, rename)
    }
}

/// New colours of every side of `face`, given the colour of one side.
fn face_colouring(face: &[usize], known: Diagonal, colour: Symbol, m: usize) -> Vec<(Diagonal, Diagonal, Symbol)> {
    let sides = face_sides(face);
    let t0 = sides
        .iter()
        .position(|&(a, b)| norm(a, b) == known)
        .expect("known side belongs to the face");
    sides
        .iter()
        .enumerate()
        .map(|(t, &(a, b))| ((a, b), norm(a, b), colour.offset(t as i64 - t0 as i64, m)))
        .collect()
}

/// Step one: rotate the `S_{i+1}` diagonals of the snake and record the
/// colours the snake's diagonals carry afterwards.
fn step_one(ws: &mut Workspace, plan: &Plan, i: Symbol, j: Symbol) -> HashMap<Diagonal, Symbol> {
    let mut internal = HashMap::new();
    for (&d, &rot) in plan.chain.iter().zip(&plan.rotated) {
        if rot {
            ws.colours.remove(&d);
            let new = ws.rotate(d);
            internal.insert(new, i);
        } else {
            internal.insert(d, j);
        }
    }
    for (&d, &c) in &internal {
        ws.colours.insert(d, c);
    }
    internal
}

fn snake_vertices(snake: &SnakePolygon) -> BTreeSet<usize> {
    snake.faces.iter().flatten().copied().collect()
}

/// Applies the induction move `R_i` to the maximal `S_i`/`S_{i+1}` snake.
///
/// The `S_{i+1}` diagonals are rotated one step anticlockwise, the colours
/// of the snake are recomputed from its swapped diagonal colours, and every
/// sub-polygon hanging off a snake face whose side colour changed is moved
/// to the side of that face that now carries its attaching colour.
///
/// Moving sub-polygons renumbers the boundary, so the result is fixed only
/// up to rotation of the polygon; [`induct_r_on_angulation_by_rotations`]
/// gives the representative that stays on the original vertices.
pub fn induct_r_on_angulation(
    c: &ColouredAngulation,
    snake: &SnakePolygon,
    i: Symbol,
) -> Result<ColouredAngulation, AngulationError> {
    let j = validate(c, snake, i)?;
    if snake.faces.len() == 1 {
        return Ok(c.clone());
    }
    let m = c.base().m();
    let plan = plan(c, snake, i);
    let mut ws = Workspace::new(c);
    let internal = step_one(&mut ws, &plan, i, j);
    let inside = snake_vertices(snake);
    let snake_faces: Vec<Face> = ws
        .faces()
        .into_iter()
        .filter(|f| f.iter().all(|v| inside.contains(v)))
        .collect();
    let no_labels = HashMap::new();
    for face in snake_faces {
        let (&known, &colour) = internal
            .iter()
            .find(|(d, _)| face_sides(&face).iter().any(|&(a, b)| norm(a, b) == **d))
            .expect("every snake face meets a snake diagonal");
        let colouring = face_colouring(&face, known, colour, m);
        let mut moving: Vec<((usize, usize), Symbol)> = Vec::new();
        for &(side, key, new) in &colouring {
            let hosts = ws.diagonals.contains(&key) && !internal.contains_key(&key);
            if hosts && ws.colours[&key] != new {
                moving.push((side, ws.colours[&key]));
            } else if !hosts {
                ws.colours.insert(key, new);
            }
        }
        let comps: Vec<Component> = moving
            .iter()
            .map(|&((x, y), _)| ws.detach(x, y, &no_labels))
            .collect();
        for &((x, y), _) in &moving {
            let new = colouring.iter().find(|t| t.1 == norm(x, y)).unwrap().2;
            ws.colours.insert(norm(x, y), new);
        }
        for comp in &comps {
            let &((u, w), _, _) = colouring
                .iter()
                .find(|t| t.2 == comp.attach)
                .expect("every colour appears on the face");
            ws.attach(comp, u, w);
        }
    }
    Ok(ws.finish(c.base().k()).0)
}

/// Labelled form of [`induct_r_on_angulation`]: every sub-polygon hanging
/// off the snake is detached first and reattached afterwards to the face
/// with the same label, along the side with its original attaching colour.
/// A rotated pair `M_a, M_{a+1}` passes each label to the new face that
/// keeps the old face's `S_{i+2}` side.
pub fn induct_r_on_labelled_angulation(
    l: &LabelledAngulation,
    snake: &SnakePolygon,
    i: Symbol,
) -> Result<LabelledAngulation, AngulationError> {
    let c = l.coloured();
    let j = validate(c, snake, i)?;
    if snake.faces.len() == 1 {
        return Ok(l.clone());
    }
    let m = c.base().m();
    let plan = plan(c, snake, i);
    let mut ws = Workspace::new(c);
    let labels: HashMap<Vec<usize>, usize> =
        l.labels().iter().map(|(f, &x)| (f.clone(), x)).collect();
    let chain_set: BTreeSet<Diagonal> = plan.chain.iter().copied().collect();

    let mut hanging: Vec<(usize, Component)> = Vec::new();
    for face in &snake.faces {
        let face_label = labels[face];
        let current = ws
            .faces()
            .into_iter()
            .find(|f| {
                let mut s = f.clone();
                s.sort_unstable();
                &s == face
            })
            .expect("snake faces are untouched while detaching");
        for (x, y) in face_sides(&current) {
            let key = norm(x, y);
            if ws.diagonals.contains(&key) && !chain_set.contains(&key) {
                hanging.push((face_label, ws.detach(x, y, &labels)));
            }
        }
    }

    let far = i.offset(2, m);
    let mut new_labels: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut keep: Vec<(Diagonal, usize)> = Vec::new();
    for (t, face) in snake.faces.iter().enumerate() {
        let touched = (t > 0 && plan.rotated[t - 1]) || (t < plan.chain.len() && plan.rotated[t]);
        if touched {
            let side = face_sides(face)
                .into_iter()
                .map(|(a, b)| norm(a, b))
                .find(|e| ws.colours.get(e) == Some(&far))
                .expect("snake face keeps its far side");
            keep.push((side, labels[face]));
        } else {
            new_labels.insert(face.clone(), labels[face]);
        }
    }
    let internal = step_one(&mut ws, &plan, i, j);
    let faces_now = ws.faces();
    for (side, label) in keep {
        let f = faces_now
            .iter()
            .find(|f| face_sides(f).iter().any(|&(a, b)| norm(a, b) == side))
            .expect("far side borders a face");
        let mut key = f.clone();
        key.sort_unstable();
        new_labels.insert(key, label);
    }

    for face in &faces_now {
        let (&known, &colour) = internal
            .iter()
            .find(|(d, _)| face_sides(face).iter().any(|&(a, b)| norm(a, b) == **d))
            .expect("every snake face meets a snake diagonal");
        for (_, key, new) in face_colouring(face, known, colour, m) {
            ws.colours.insert(key, new);
        }
    }

    for (label, comp) in &hanging {
        let face = ws
            .faces()
            .into_iter()
            .find(|f| {
                let mut s = f.clone();
                s.sort_unstable();
                new_labels.get(&s) == Some(label)
            })
            .expect("labelled snake face exists");
        let (u, w) = face_sides(&face)
            .into_iter()
            .find(|&(a, b)| ws.colours[&norm(a, b)] == comp.attach)
            .expect("every colour appears on the face");
        for (f, x) in ws.attach(comp, u, w) {
            new_labels.insert(f, x);
        }
    }

    let (coloured, rename) = ws.finish(c.base().k());
    let labels: BTreeMap<Face, usize> = new_labels
        .into_iter()
        .map(|(f, x)| {
            let mut g: Face = f.iter().map(|v| rename[v]).collect();
            g.sort_unstable();
            (g, x)
        })
        .collect();
    LabelledAngulation::new(coloured, labels)
}

/// Same move as [`induct_r_on_angulation`] carried out on the fixed polygon
/// by diagonal rotations only: the snake rotations of step one, then for
/// each end face `M` whose side colours shift, the one-step rotation of the
/// region formed by `M` and everything hanging off it. Returns the result
/// and the full rotation sequence.
pub fn induct_r_on_angulation_by_rotations(
    c: &ColouredAngulation,
    snake: &SnakePolygon,
    i: Symbol,
) -> Result<(ColouredAngulation, Vec<Rotation>), AngulationError> {
    let j = validate(c, snake, i)?;
    if snake.faces.len() == 1 {
        return Ok((c.clone(), Vec::new()));
    }
    let plan = plan(c, snake, i);
    let mut state = RotationState::new(c.base());
    let mut internal: Vec<(Diagonal, Symbol, bool)> = Vec::new();
    for (&d, &rot) in plan.chain.iter().zip(&plan.rotated) {
        if rot {
            internal.push((state.rotate(d), i, true));
        } else {
            internal.push((d, j, false));
        }
    }
    let inside = snake_vertices(snake);
    let n = c.base().n();
    let order: Vec<usize> = (1..=n).collect();
    let diags: Vec<Diagonal> = state.diagonals.iter().copied().collect();
    let ends: Vec<(usize, usize)> = split_faces(&order, &diags)
        .into_iter()
        .filter(|f| f.iter().all(|v| inside.contains(v)))
        .filter_map(|f| {
            let mut own = face_sides(&f)
                .into_iter()
                .filter(|&(a, b)| internal.iter().any(|t| t.0 == norm(a, b)));
            let first = own.next()?;
            let single = own.next().is_none();
            let stays = internal.iter().any(|t| t.0 == norm(first.0, first.1) && !t.2);
            (single && stays).then_some(first)
        })
        .collect();
    for (x, y) in ends {
        let (px, py) = (x - 1, y - 1);
        let region: Vec<usize> = (0..=(px + n - py) % n)
            .map(|t| order[(py + t) % n])
            .collect();
        state.rotate_polygon(&region);
    }
    let log = std::mem::take(&mut state.log);
    let base = state.finish(c.base().k());
    let (seed, colour, _) = internal[0];
    let coloured = ColouredAngulation::colour_from_seed(&base, seed, colour)?;
    Ok((coloured, log))
}
