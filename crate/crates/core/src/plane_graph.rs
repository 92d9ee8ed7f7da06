//! Combinatorial embeddings of plane graphs.
//!
//! A [`RotationSystem`] lists, for every vertex, its neighbours in clockwise
//! order. Faces are traced with a single fixed rule used everywhere in the
//! crate: the dart following `u -> v` on its face is `v -> w`, where `w` is
//! the neighbour immediately *before* `u` in the rotation of `v`.
//!
//! [`PlaneGraph`] holds the traced faces together with dart/edge/face
//! incidence tables. [`PlanarTriangulation`] and [`NearTriangulation`] are
//! validated views on top of it.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest order for which 3-connectivity is checked by brute-force cut search.
pub const BRUTE_FORCE_CONNECTIVITY_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph needs at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("vertex {vertex} lists neighbour {neighbour}, which is not a vertex id")]
    InvalidVertex { vertex: usize, neighbour: usize },
    #[error("adjacency is not symmetric: {u} lists {v} but not vice versa")]
    NotSymmetric { u: usize, v: usize },
    #[error("graph is not simple at vertex {vertex} (loop or repeated neighbour {neighbour})")]
    NotSimple { vertex: usize, neighbour: usize },
    #[error("face {face} has length {len}, expected a triangle")]
    NotTriangular { face: usize, len: usize },
    #[error("embedding has {faces} faces where {expected} are required on the sphere")]
    EulerViolation { faces: usize, expected: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("removing {cut:?} disconnects the graph")]
    NotThreeConnected { cut: Vec<usize> },
    #[error("removing vertex {cut} disconnects the graph")]
    NotTwoConnected { cut: usize },
    #[error("outer face boundary is not a cycle")]
    OuterNotCycle,
    #[error("face {0} not found")]
    FaceNotFound(usize),
    #[error("face selection does not leave an unbounded face")]
    NoOuterFace,
}

/// Clockwise neighbour order per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    rot: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validates ids, simplicity and symmetry.
    pub fn new(rot: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rot.len();
        for (v, list) in rot.iter().enumerate() {
            for (i, &u) in list.iter().enumerate() {
                if u >= n {
                    return Err(GraphError::InvalidVertex {
                        vertex: v,
                        neighbour: u,
                    });
                }
                if u == v || list[..i].contains(&u) {
                    return Err(GraphError::NotSimple {
                        vertex: v,
                        neighbour: u,
                    });
                }
            }
        }
        for (v, list) in rot.iter().enumerate() {
            for &u in list {
                if !rot[u].contains(&v) {
                    return Err(GraphError::NotSymmetric { u: v, v: u });
                }
            }
        }
        Ok(Self { rot })
    }

    pub fn order(&self) -> usize {
        self.rot.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn into_lists(self) -> Vec<Vec<usize>> {
        self.rot
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.rot[u].contains(&v)
    }

    /// Applies a vertex relabelling `perm[old] = new`, keeping every rotation.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut rot = vec![Vec::new(); self.rot.len()];
        for (old, list) in self.rot.iter().enumerate() {
            rot[perm[old]] = list.iter().map(|&u| perm[u]).collect();
        }
        Self { rot }
    }

    /// Reverses every rotation (mirror embedding).
    pub fn mirrored(&self) -> Self {
        Self {
            rot: self
                .rot
                .iter()
                .map(|l| l.iter().rev().copied().collect())
                .collect(),
        }
    }
}

/// A face together with its facial walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub id: usize,
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.boundary.contains(&v)
    }

    /// Boundary edges as `(min, max)` pairs, in walk order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.boundary.len();
        (0..k).map(move |i| ordered(self.boundary[i], self.boundary[(i + 1) % k]))
    }
}

pub(crate) fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A connected plane graph with traced faces and incidence tables.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rs: RotationSystem,
    offset: Vec<usize>,
    head: Vec<usize>,
    tail: Vec<usize>,
    twin: Vec<usize>,
    dart_face: Vec<usize>,
    dart_edge: Vec<usize>,
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
    edge_faces: Vec<[usize; 2]>,
    faces: Vec<Face>,
}

impl PlaneGraph {
    /// Traces the faces of `rs`. Requires a connected graph satisfying
    /// Euler's formula `n - m + f = 2`.
    pub fn new(rs: RotationSystem) -> Result<Self, GraphError> {
        let g = Self::trace(rs);
        g.check_euler()?;
        Ok(g)
    }

    fn check_euler(&self) -> Result<(), GraphError> {
        if !self.is_connected_without(&[]) {
            return Err(GraphError::Disconnected);
        }
        let expected = 2 + self.edges.len() - self.order();
        if self.faces.len() != expected {
            return Err(GraphError::EulerViolation {
                faces: self.faces.len(),
                expected,
            });
        }
        Ok(())
    }

    fn trace(rs: RotationSystem) -> Self {
        let n = rs.order();
        let mut offset = Vec::with_capacity(n + 1);
        offset.push(0);
        for v in 0..n {
            offset.push(offset[v] + rs.degree(v));
        }
        let darts = offset[n];
        let mut head = vec![0; darts];
        let mut tail = vec![0; darts];
        for v in 0..n {
            for (i, &u) in rs.neighbours(v).iter().enumerate() {
                tail[offset[v] + i] = v;
                head[offset[v] + i] = u;
            }
        }
        let pos = |v: usize, u: usize| rs.neighbours(v).iter().position(|&x| x == u).unwrap();
        let twin: Vec<usize> = (0..darts)
            .map(|d| offset[head[d]] + pos(head[d], tail[d]))
            .collect();

        let mut edges = Vec::with_capacity(darts / 2);
        let mut edge_index = HashMap::with_capacity(darts / 2);
        let mut dart_edge = vec![usize::MAX; darts];
        for d in 0..darts {
            if tail[d] < head[d] {
                let e = edges.len();
                edges.push((tail[d], head[d]));
                edge_index.insert((tail[d], head[d]), e);
                dart_edge[d] = e;
                dart_edge[twin[d]] = e;
            }
        }

        let mut dart_face = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let mut d = start;
            loop {
                dart_face[d] = id;
                boundary.push(tail[d]);
                // predecessor of tail[d] in the rotation at head[d]
                let t = twin[d];
                let v = head[d];
                let deg = rs.degree(v);
                let j = t - offset[v];
                d = offset[v] + (j + deg - 1) % deg;
                if d == start {
                    break;
                }
            }
            faces.push(Face { id, boundary });
        }

        let mut edge_faces = vec![[usize::MAX; 2]; edges.len()];
        for d in 0..darts {
            if tail[d] < head[d] {
                edge_faces[dart_edge[d]] = [dart_face[d], dart_face[twin[d]]];
            }
        }

        Self {
            rs,
            offset,
            head,
            tail,
            twin,
            dart_face,
            dart_edge,
            edges,
            edge_index,
            edge_faces,
            faces,
        }
    }

    pub fn rotation_system(&self) -> &RotationSystem {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.rs.order()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        self.rs.neighbours(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rs.degree(v)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    /// Edges as `(min, max)` pairs, indexed by edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&ordered(u, v)).copied()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_index.contains_key(&ordered(u, v))
    }

    /// The two faces on either side of edge `e` (equal for a bridge).
    pub fn edge_faces(&self, e: usize) -> [usize; 2] {
        self.edge_faces[e]
    }

    pub fn dart_count(&self) -> usize {
        self.head.len()
    }

    /// `(tail, head)` of a dart.
    pub fn dart(&self, d: usize) -> (usize, usize) {
        (self.tail[d], self.head[d])
    }

    pub fn dart_face(&self, d: usize) -> usize {
        self.dart_face[d]
    }

    pub fn dart_edge(&self, d: usize) -> usize {
        self.dart_edge[d]
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    /// Darts leaving `v`, in rotation order.
    pub fn darts_from(&self, v: usize) -> std::ops::Range<usize> {
        self.offset[v]..self.offset[v + 1]
    }

    /// Edge ids on the boundary of face `f`.
    pub fn face_edges(&self, f: usize) -> Vec<usize> {
        self.faces[f]
            .edges()
            .map(|(u, v)| self.edge_index[&(u, v)])
            .collect()
    }

    /// Faces incident with `v` (one entry per corner).
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        self.darts_from(v).map(|d| self.dart_face[d]).collect()
    }

    /// Faces sharing an edge with `f`, paired with the shared edge id.
    pub fn face_neighbours(&self, f: usize) -> Vec<(usize, usize)> {
        self.face_edges(f)
            .into_iter()
            .filter_map(|e| {
                let [a, b] = self.edge_faces[e];
                let other = if a == f { b } else { a };
                (other != f).then_some((other, e))
            })
            .collect()
    }

    pub fn common_neighbours(&self, u: usize, v: usize) -> Vec<usize> {
        self.neighbours(u)
            .iter()
            .copied()
            .filter(|&w| self.is_adjacent(v, w))
            .collect()
    }

    /// Whether the graph stays connected after deleting `removed`.
    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let Some(start) = (0..n).find(|&v| !seen[v]) else {
            return true;
        };
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut reached = 1 + removed.len();
        while let Some(v) = queue.pop_front() {
            for &u in self.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == n
    }

    /// Smallest vertex cut of size at most `max_size`, by exhaustive search.
    pub fn find_small_cut(&self, max_size: usize) -> Option<Vec<usize>> {
        let n = self.order();
        if max_size >= 1 {
            for a in 0..n {
                if !self.is_connected_without(&[a]) {
                    return Some(vec![a]);
                }
            }
        }
        if max_size >= 2 {
            for a in 0..n {
                for b in a + 1..n {
                    if n > 3 && !self.is_connected_without(&[a, b]) {
                        return Some(vec![a, b]);
                    }
                }
            }
        }
        if max_size >= 3 {
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        if n > 4 && !self.is_connected_without(&[a, b, c]) {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
            }
        }
        None
    }
}

/// How 3-connectivity of a triangulation was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectivityCheck {
    BruteForce,
    Assumed,
}

/// A simple plane triangulation on at least four vertices.
#[derive(Debug, Clone)]
pub struct PlanarTriangulation {
    g: PlaneGraph,
    connectivity: ConnectivityCheck,
}

impl PlanarTriangulation {
    pub fn from_rotation_system(rot: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        Self::new(RotationSystem::new(rot)?)
    }

    pub fn new(rs: RotationSystem) -> Result<Self, GraphError> {
        let n = rs.order();
        if n < 4 {
            return Err(GraphError::TooSmall { n, min: 4 });
        }
        let g = PlaneGraph::trace(rs);
        if let Some(f) = g.faces.iter().find(|f| f.len() != 3) {
            return Err(GraphError::NotTriangular {
                face: f.id,
                len: f.len(),
            });
        }
        if g.faces.len() != 2 * n - 4 {
            return Err(GraphError::EulerViolation {
                faces: g.faces.len(),
                expected: 2 * n - 4,
            });
        }
        if !g.is_connected_without(&[]) {
            return Err(GraphError::Disconnected);
        }
        let connectivity = if n <= BRUTE_FORCE_CONNECTIVITY_LIMIT {
            if let Some(cut) = g.find_small_cut(2) {
                return Err(GraphError::NotThreeConnected { cut });
            }
            ConnectivityCheck::BruteForce
        } else {
            ConnectivityCheck::Assumed
        };
        Ok(Self { g, connectivity })
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.g
    }

    pub fn connectivity_check(&self) -> ConnectivityCheck {
        self.connectivity
    }

    /// Looks up the face whose boundary is the triangle `{a, b, c}`.
    pub fn face_of_triangle(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        let e = self.g.edge_id(a, b)?;
        self.g
            .edge_faces(e)
            .into_iter()
            .find(|&f| self.g.face(f).contains(c))
    }

    /// Triangles `{a, b, c}` that are not face boundaries. In a
    /// triangulation these are exactly the separating triangles.
    pub fn separating_triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for &(a, b) in self.g.edges() {
            for &c in self.g.neighbours(a) {
                if c > b && self.g.is_adjacent(b, c) && self.face_of_triangle(a, b, c).is_none() {
                    out.push([a, b, c]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True iff `n >= 5` and no separating triangle exists.
    pub fn is_four_connected(&self) -> bool {
        self.order() >= 5 && self.separating_triangles().is_empty()
    }
}

impl Deref for PlanarTriangulation {
    type Target = PlaneGraph;
    fn deref(&self) -> &PlaneGraph {
        &self.g
    }
}

impl fmt::Display for PlanarTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "triangulation(n={}, m={}, faces={})",
            self.order(),
            self.size(),
            self.faces().len()
        )
    }
}

/// A 2-connected plane graph whose bounded faces are all triangles.
#[derive(Debug, Clone)]
pub struct NearTriangulation {
    g: PlaneGraph,
    outer: usize,
    labels: Vec<usize>,
}

impl NearTriangulation {
    /// Builds a near triangulation from a rotation system; `outer` is the
    /// vertex cycle of the unbounded face (any rotation or direction).
    pub fn new(rs: RotationSystem, outer: &[usize]) -> Result<Self, GraphError> {
        let g = PlaneGraph::new(rs)?;
        let target = crate::cycles::Cycle::from_vertices_unchecked(outer.to_vec());
        let face = g
            .faces()
            .iter()
            .find(|f| {
                f.len() == outer.len()
                    && crate::cycles::Cycle::from_vertices_unchecked(f.boundary.clone()) == target
            })
            .map(|f| f.id)
            .ok_or(GraphError::OuterNotCycle)?;
        Self::with_outer(g, face)
    }

    /// Re-roots a triangulation so that `face` becomes the unbounded face.
    pub fn from_triangulation(g: &PlanarTriangulation, face: usize) -> Result<Self, GraphError> {
        if face >= g.faces().len() {
            return Err(GraphError::FaceNotFound(face));
        }
        Self::with_outer(g.graph().clone(), face)
    }

    /// The plane subgraph formed by the faces `selected` of `host`; the
    /// region they cover must be a closed disk.
    pub fn from_face_set(host: &PlaneGraph, selected: &[usize]) -> Result<Self, GraphError> {
        let n = host.order();
        let mut keep = vec![false; host.size()];
        let mut wanted: HashMap<Vec<usize>, usize> = HashMap::new();
        for &f in selected {
            if f >= host.faces().len() {
                return Err(GraphError::FaceNotFound(f));
            }
            for e in host.face_edges(f) {
                keep[e] = true;
            }
            let mut key = host.face(f).boundary.clone();
            key.sort_unstable();
            *wanted.entry(key).or_default() += 1;
        }
        let mut present = vec![false; n];
        for (e, &(u, v)) in host.edges().iter().enumerate() {
            if keep[e] {
                present[u] = true;
                present[v] = true;
            }
        }
        let relabel: Vec<usize> = present
            .iter()
            .scan(0usize, |next, &p| {
                let id = *next;
                if p {
                    *next += 1;
                }
                Some(if p { id } else { usize::MAX })
            })
            .collect();
        let mut rot = Vec::new();
        for v in 0..n {
            if !present[v] {
                continue;
            }
            rot.push(
                host.neighbours(v)
                    .iter()
                    .filter(|&&u| keep[host.edge_id(v, u).unwrap()])
                    .map(|&u| relabel[u])
                    .collect(),
            );
        }
        let back: Vec<usize> = (0..n).filter(|&v| present[v]).collect();
        let g = PlaneGraph::new(RotationSystem::new(rot)?)?;
        let mut outer = None;
        for f in g.faces() {
            let mut key: Vec<usize> = f.boundary.iter().map(|&v| back[v]).collect();
            key.sort_unstable();
            match wanted.get_mut(&key) {
                Some(c) if *c > 0 && f.len() == 3 => *c -= 1,
                _ => {
                    if outer.is_some() {
                        return Err(GraphError::OuterNotCycle);
                    }
                    outer = Some(f.id);
                }
            }
        }
        let mut nt = Self::with_outer(g, outer.ok_or(GraphError::NoOuterFace)?)?;
        nt.labels = back;
        Ok(nt)
    }

    fn with_outer(g: PlaneGraph, outer: usize) -> Result<Self, GraphError> {
        let n = g.order();
        if n < 3 {
            return Err(GraphError::TooSmall { n, min: 3 });
        }
        let ob = &g.face(outer).boundary;
        let mut seen = vec![false; n];
        for &v in ob {
            if seen[v] {
                return Err(GraphError::OuterNotCycle);
            }
            seen[v] = true;
        }
        if let Some(f) = g.faces().iter().find(|f| f.id != outer && f.len() != 3) {
            return Err(GraphError::NotTriangular {
                face: f.id,
                len: f.len(),
            });
        }
        for v in 0..n {
            if !g.is_connected_without(&[v]) {
                return Err(GraphError::NotTwoConnected { cut: v });
            }
        }
        let labels = (0..n).collect();
        Ok(Self { g, outer, labels })
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.g
    }

    /// Vertex id in the graph this one was cut from (identity unless built
    /// with [`NearTriangulation::from_face_set`]).
    pub fn host_label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn host_labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }

    /// Vertex cycle of the unbounded face.
    pub fn outer_cycle(&self) -> &[usize] {
        &self.g.face(self.outer).boundary
    }

    pub fn bounded_faces(&self) -> impl Iterator<Item = &Face> + '_ {
        self.g.faces().iter().filter(move |f| f.id != self.outer)
    }

    pub fn bounded_face_ids(&self) -> Vec<usize> {
        self.bounded_faces().map(|f| f.id).collect()
    }
}

impl Deref for NearTriangulation {
    type Target = PlaneGraph;
    fn deref(&self) -> &PlaneGraph {
        &self.g
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn k4_has_four_faces() {
        let g = PlanarTriangulation::from_rotation_system(k4()).unwrap();
        assert_eq!(g.faces().len(), 4);
        assert_eq!(g.size(), 6);
        assert_eq!(g.connectivity_check(), ConnectivityCheck::BruteForce);
        assert!(!g.is_four_connected());
    }

    #[test]
    fn octahedron_faces() {
        let g = PlanarTriangulation::from_rotation_system(octahedron()).unwrap();
        assert_eq!((g.order(), g.size(), g.faces().len()), (6, 12, 8));
        assert!(g.is_four_connected());
        assert!(g.separating_triangles().is_empty());
    }

    #[test]
    fn swapped_rotation_is_not_triangular() {
        // a single reversed rotation turns two triangles into a 4-walk
        let mut bad = k4();
        bad[0].swap(0, 1);
        let err = PlanarTriangulation::from_rotation_system(bad).unwrap_err();
        assert!(matches!(err, GraphError::NotTriangular { len, .. } if len != 3));
    }

    #[test]
    fn rejects_asymmetric_and_nonsimple() {
        let mut rot = k4();
        rot[0].pop();
        assert!(matches!(
            PlanarTriangulation::from_rotation_system(rot),
            Err(GraphError::NotSymmetric { .. })
        ));
        let mut rot = k4();
        rot[0].push(1);
        assert!(matches!(
            PlanarTriangulation::from_rotation_system(rot),
            Err(GraphError::NotSimple { .. })
        ));
        let mut rot = k4();
        rot[0].push(0);
        assert!(matches!(
            PlanarTriangulation::from_rotation_system(rot),
            Err(GraphError::NotSimple { .. })
        ));
    }

    #[test]
    fn darts_partition_into_faces() {
        let g = PlanarTriangulation::from_rotation_system(octahedron()).unwrap();
        let mut per_face = vec![0; g.faces().len()];
        for d in 0..g.dart_count() {
            per_face[g.dart_face(d)] += 1;
        }
        assert!(per_face.iter().all(|&c| c == 3));
        for e in 0..g.size() {
            let [a, b] = g.edge_faces(e);
            assert_ne!(a, b);
        }
    }

    #[test]
    fn stacked_k4_is_not_four_connected() {
        // vertex 4 stacked into face (0, 1, 3)
        let rot = vec![
            vec![1, 4, 3, 2],
            vec![2, 3, 4, 0],
            vec![0, 3, 1],
            vec![0, 4, 1, 2],
            vec![0, 1, 3],
        ];
        let g = PlanarTriangulation::from_rotation_system(rot).unwrap();
        assert_eq!(g.separating_triangles(), vec![[0, 1, 3]]);
        assert!(!g.is_four_connected());
        assert_eq!(g.find_small_cut(3), Some(vec![0, 1, 3]));
    }

    #[test]
    fn near_triangulation_from_faces() {
        let g = PlanarTriangulation::from_rotation_system(octahedron()).unwrap();
        let nt = NearTriangulation::from_triangulation(&g, 0).unwrap();
        assert_eq!(nt.bounded_faces().count(), 7);
        assert_eq!(nt.outer_cycle().len(), 3);
        assert!(matches!(
            NearTriangulation::from_triangulation(&g, 99),
            Err(GraphError::FaceNotFound(99))
        ));
        let k = PlanarTriangulation::from_rotation_system(k4()).unwrap();
        let nt = NearTriangulation::from_triangulation(&k, 2).unwrap();
        assert_eq!(nt.bounded_faces().count(), 3);
    }

    #[test]
    fn quadrilateral_with_chord() {
        // 4-cycle 0-1-2-3 with chord 0-2
        let rs = RotationSystem::new(vec![
            vec![1, 2, 3],
            vec![2, 0],
            vec![3, 0, 1],
            vec![0, 2],
        ])
        .unwrap();
        let nt = NearTriangulation::new(rs, &[0, 1, 2, 3]).unwrap();
        assert_eq!(nt.bounded_faces().count(), 2);
        assert_eq!(nt.outer_cycle().len(), 4);
    }

    #[test]
    fn face_set_disk() {
        let g = PlanarTriangulation::from_rotation_system(octahedron()).unwrap();
        let f = g.face_neighbours(0)[0].0;
        let nt = NearTriangulation::from_face_set(g.graph(), &[0, f]).unwrap();
        assert_eq!(nt.order(), 4);
        assert_eq!(nt.outer_cycle().len(), 4);
        // all faces but those at vertex 0: the octahedron minus a vertex
        let rest: Vec<usize> = (0..8).filter(|&f| !g.face(f).contains(0)).collect();
        let nt = NearTriangulation::from_face_set(g.graph(), &rest).unwrap();
        assert_eq!(nt.order(), 5);
        assert_eq!(nt.outer_cycle().len(), 4);
        assert_eq!(
            NearTriangulation::from_face_set(g.graph(), &(0..8).collect::<Vec<_>>()).unwrap_err(),
            GraphError::NoOuterFace
        );
    }
}
