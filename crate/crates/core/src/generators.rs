//! Triangulation families: double wheels, flipped double wheels, the
//! `G_p` family, iterated stacking and randomised triangulations.
//!
//! Constructions work on a mutable rotation system with two local moves
//! (vertex insertion into a face, diagonal flip); every result goes through
//! the full [`PlanarTriangulation`] validator.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{
    GraphError, NearTriangulation, PlanarTriangulation, PlaneGraph, RotationSystem,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{family} needs {param} >= {min}, got {got}")]
    TooSmall {
        family: &'static str,
        param: &'static str,
        min: usize,
        got: usize,
    },
    #[error("apex of the triangle opposite {opposite} must be one of its corners, got {corner}")]
    BadAssignment { opposite: usize, corner: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Number of random diagonal flips per vertex applied by
/// [`random_triangulation`].
pub const FLIPS_PER_VERTEX: usize = 10;

/// Labels of the original `K4` in `G_p`.
pub const A: usize = 0;
pub const B: usize = 1;
pub const C: usize = 2;
pub const D: usize = 3;

/// Which corner of each original `K4` triangle of `G_p` is identified with
/// the apex of the inserted flipped double wheel. Entry `x` belongs to the
/// triangle *not* containing original vertex `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexAssignment(pub [usize; 4]);

impl Default for ApexAssignment {
    /// `c` is the apex of the three triangles around it; `abd` uses `a`.
    fn default() -> Self {
        Self([C, C, A, C])
    }
}

impl ApexAssignment {
    /// Default layout with the apex of `abd` moved to `corner`.
    pub fn with_abd_apex(corner: usize) -> Self {
        let mut a = Self::default();
        a.0[C] = corner;
        a
    }

    fn check(&self) -> Result<(), GenError> {
        for (x, &corner) in self.0.iter().enumerate() {
            if corner == x || corner > 3 {
                return Err(GenError::BadAssignment {
                    opposite: x,
                    corner,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    DoubleWheel { n: usize },
    FlippedDoubleWheel { n: usize },
    GP {
        p: usize,
        #[serde(default)]
        apex: ApexAssignment,
    },
    Stacked { depth: usize },
    Random { n: usize, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<PlanarTriangulation, GenError> {
        match *self {
            FamilySpec::DoubleWheel { n } => double_wheel(n),
            FamilySpec::FlippedDoubleWheel { n } => flipped_double_wheel(n).map(|(g, _)| g),
            FamilySpec::GP { p, apex } => g_p(p, apex),
            FamilySpec::Stacked { depth } => Ok(stacked(depth)),
            FamilySpec::Random { n, seed } => random_triangulation(n, seed),
        }
    }

    pub fn label(&self) -> String {
        match self {
            FamilySpec::DoubleWheel { n } => format!("double_wheel(n={n})"),
            FamilySpec::FlippedDoubleWheel { n } => format!("flipped_double_wheel(n={n})"),
            FamilySpec::GP { p, apex } => format!("g_p(p={p}, apex={:?})", apex.0),
            FamilySpec::Stacked { depth } => format!("stacked(depth={depth})"),
            FamilySpec::Random { n, seed } => format!("random(n={n}, seed={seed})"),
        }
    }
}

/// Mutable rotation system used by the constructions.
#[derive(Debug, Clone)]
struct Builder {
    rot: Vec<Vec<usize>>,
}

impl Builder {
    fn k4() -> Self {
        Self {
            rot: vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        }
    }

    fn faces(&self) -> Vec<[usize; 3]> {
        let g = PlaneGraph::new(RotationSystem::new(self.rot.clone()).expect("builder keeps the graph simple"))
            .expect("builder keeps the embedding spherical");
        g.faces()
            .iter()
            .map(|f| [f.boundary[0], f.boundary[1], f.boundary[2]])
            .collect()
    }

    fn insert_before(list: &mut Vec<usize>, anchor: usize, new: usize) {
        let i = list.iter().position(|&x| x == anchor).unwrap();
        list.insert(i, new);
    }

    /// Adds a vertex inside the face traced as `x -> y -> z`.
    fn insert(&mut self, [x, y, z]: [usize; 3]) -> usize {
        let t = self.rot.len();
        Self::insert_before(&mut self.rot[y], x, t);
        Self::insert_before(&mut self.rot[z], y, t);
        Self::insert_before(&mut self.rot[x], z, t);
        self.rot.push(vec![x, y, z]);
        t
    }

    fn pred(&self, v: usize, u: usize) -> usize {
        let l = &self.rot[v];
        let i = l.iter().position(|&x| x == u).unwrap();
        l[(i + l.len() - 1) % l.len()]
    }

    /// Replaces edge `uv` by the other diagonal of its two faces. Refused
    /// (returning `false`) when that diagonal already exists.
    fn flip(&mut self, u: usize, v: usize) -> bool {
        let a = self.pred(v, u);
        let b = self.pred(u, v);
        if a == b || self.rot[a].contains(&b) {
            return false;
        }
        self.rot[u].retain(|&x| x != v);
        self.rot[v].retain(|&x| x != u);
        Self::insert_before(&mut self.rot[a], v, b);
        Self::insert_before(&mut self.rot[b], u, a);
        true
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for (u, l) in self.rot.iter().enumerate() {
            for &v in l {
                if u < v {
                    e.push((u, v));
                }
            }
        }
        e
    }

    fn finish(self) -> Result<PlanarTriangulation, GraphError> {
        PlanarTriangulation::from_rotation_system(self.rot)
    }
}

fn too_small(family: &'static str, param: &'static str, min: usize, got: usize) -> GenError {
    GenError::TooSmall {
        family,
        param,
        min,
        got,
    }
}

/// Rim `0..n-2`, hubs `n-2` and `n-1`.
fn double_wheel_rot(n: usize) -> Vec<Vec<usize>> {
    let m = n - 2;
    let (top, bottom) = (m, m + 1);
    let mut rot = Vec::with_capacity(n);
    for i in 0..m {
        rot.push(vec![top, (i + 1) % m, bottom, (i + m - 1) % m]);
    }
    rot.push((0..m).map(|i| (m - i) % m).collect());
    rot.push((0..m).collect());
    rot
}

/// Join of two non-adjacent hubs with an `(n-2)`-cycle; the hubs are
/// `n-2` and `n-1`.
pub fn double_wheel(n: usize) -> Result<PlanarTriangulation, GenError> {
    if n < 5 {
        return Err(too_small("double_wheel", "n", 5, n));
    }
    Ok(PlanarTriangulation::from_rotation_system(double_wheel_rot(n))?)
}

/// Double wheel with rim edge `0-1` replaced by the hub edge. Returns the
/// graph and its apex (vertex `1`, neighbours: both hubs and vertex `2`).
pub fn flipped_double_wheel(n: usize) -> Result<(PlanarTriangulation, usize), GenError> {
    if n < 6 {
        return Err(too_small("flipped_double_wheel", "n", 6, n));
    }
    let mut b = Builder {
        rot: double_wheel_rot(n),
    };
    let flipped = b.flip(0, 1);
    debug_assert!(flipped);
    Ok((b.finish()?, 1))
}

/// `K4` on `a, b, c, d` (labels `0..4`) with a flipped double wheel on
/// `p + 3` vertices inserted into every face: the face's corners become the
/// outer triangle, the assigned corner its apex. Vertices `4 + i*p ..` are
/// the interior of the `i`-th face in trace order.
pub fn g_p(p: usize, apex: ApexAssignment) -> Result<PlanarTriangulation, GenError> {
    if p < 1 {
        return Err(too_small("g_p", "p", 1, p));
    }
    apex.check()?;
    let mut b = Builder::k4();
    for face in b.faces() {
        let opposite = (0..4).find(|v| !face.contains(v)).unwrap();
        let z = apex.0[opposite];
        let i = face.iter().position(|&v| v == z).unwrap();
        let (x, y) = (face[(i + 1) % 3], face[(i + 2) % 3]);
        // a flipped double wheel seen from its outer triangle x, y, z is a
        // chain of vertices each stacked onto the previous one's x-y face
        let mut cur = z;
        for _ in 0..p {
            cur = b.insert([x, y, cur]);
        }
    }
    Ok(b.finish()?)
}

/// Iterated Kleetope of `K4`: each round inserts a vertex into every face.
pub fn stacked(depth: usize) -> PlanarTriangulation {
    let mut b = Builder::k4();
    for _ in 0..depth {
        for f in b.faces() {
            b.insert(f);
        }
    }
    b.finish().expect("stacking preserves triangulations")
}

/// `K4`, then `n - 4` insertions into uniformly chosen faces, then
/// `10 n` uniformly chosen diagonal flips (flips creating a parallel edge
/// are skipped). Deterministic in `seed`.
pub fn random_triangulation(n: usize, seed: u64) -> Result<PlanarTriangulation, GenError> {
    if n < 4 {
        return Err(too_small("random", "n", 4, n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Builder::k4();
    for _ in 4..n {
        let faces = b.faces();
        let f = faces[rng.gen_range(0..faces.len())];
        b.insert(f);
    }
    for _ in 0..FLIPS_PER_VERTEX * n {
        let edges = b.edges();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        b.flip(u, v);
    }
    Ok(b.finish()?)
}

/// A random near triangulation cut out of `random_triangulation(n, seed)`:
/// one vertex is deleted, then bounded faces along the boundary are peeled
/// off at random while the remainder stays a disk on at least four
/// vertices.
pub fn random_near_triangulation(n: usize, seed: u64) -> Result<NearTriangulation, GenError> {
    let g = random_triangulation(n.max(5), seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let v = rng.gen_range(0..g.order());
    let mut faces: Vec<usize> = (0..g.faces().len())
        .filter(|&f| !g.face(f).contains(v))
        .collect();
    let mut nt = NearTriangulation::from_face_set(g.graph(), &faces)?;
    let peel = rng.gen_range(0..=g.order());
    for _ in 0..peel {
        let mut order = faces.clone();
        order.shuffle(&mut rng);
        let mut done = false;
        for f in order {
            let rest: Vec<usize> = faces.iter().copied().filter(|&h| h != f).collect();
            if let Ok(next) = NearTriangulation::from_face_set(g.graph(), &rest) {
                if next.order() >= 4 {
                    faces = rest;
                    nt = next;
                    done = true;
                    break;
                }
            }
        }
        if !done {
            break;
        }
    }
    Ok(nt)
}
