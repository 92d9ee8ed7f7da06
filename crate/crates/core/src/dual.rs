//! Duals, weak duals and the boundary operator on face sets.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::Cycle;
use crate::plane_graph::{NearTriangulation, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("selected faces do not induce a connected dual subgraph")]
    DisconnectedSelection,
    #[error("empty face selection")]
    EmptySelection,
    #[error("face {0} is not part of this graph")]
    UnknownFace(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("boundary is not a single cycle")]
    NotACycle,
    #[error("faces {0} and {1} share more than one edge")]
    ParallelDualEdge(usize, usize),
    #[error("near triangulation has {0} vertices, at least 4 are required")]
    TooSmall(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DualKind {
    Full,
    Weak,
}

/// Graph on faces; two faces are adjacent when they share an edge.
///
/// Node `i` stands for primal face `faces[i]`; each adjacency carries the
/// shared primal edge id.
#[derive(Debug, Clone)]
pub struct DualGraph {
    pub kind: DualKind,
    faces: Vec<usize>,
    node_of: Vec<Option<usize>>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl DualGraph {
    /// The full dual of `g`.
    pub fn full(g: &PlaneGraph) -> Result<Self, DualError> {
        Self::build(g, None, DualKind::Full)
    }

    /// The dual with the outer face removed.
    pub fn weak(nt: &NearTriangulation) -> Result<Self, DualError> {
        Self::build(nt.graph(), Some(nt.outer_face()), DualKind::Weak)
    }

    /// Dual of `g` with the face `outer` deleted.
    pub fn weak_of(g: &PlaneGraph, outer: usize) -> Result<Self, DualError> {
        if outer >= g.faces().len() {
            return Err(DualError::UnknownFace(outer));
        }
        Self::build(g, Some(outer), DualKind::Weak)
    }

    fn build(g: &PlaneGraph, skip: Option<usize>, kind: DualKind) -> Result<Self, DualError> {
        let faces: Vec<usize> = (0..g.faces().len()).filter(|&f| Some(f) != skip).collect();
        let mut node_of = vec![None; g.faces().len()];
        for (i, &f) in faces.iter().enumerate() {
            node_of[f] = Some(i);
        }
        let mut adj = vec![Vec::new(); faces.len()];
        for (e, _) in g.edges().iter().enumerate() {
            let [a, b] = g.edge_faces(e);
            if a == b {
                continue;
            }
            if let (Some(x), Some(y)) = (node_of[a], node_of[b]) {
                if adj[x].iter().any(|&(z, _)| z == y) {
                    return Err(DualError::ParallelDualEdge(a, b));
                }
                adj[x].push((y, e));
                adj[y].push((x, e));
            }
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Ok(Self {
            kind,
            faces,
            node_of,
            adj,
        })
    }

    pub fn order(&self) -> usize {
        self.faces.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Primal face of node `i`.
    pub fn face(&self, i: usize) -> usize {
        self.faces[i]
    }

    pub fn node(&self, face: usize) -> Option<usize> {
        self.node_of.get(face).copied().flatten()
    }

    /// Neighbouring nodes with the shared primal edge.
    pub fn neighbours(&self, i: usize) -> &[(usize, usize)] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Plain adjacency lists over node indices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        self.adj
            .iter()
            .map(|l| l.iter().map(|&(j, _)| j).collect())
            .collect()
    }

    pub fn is_path(&self) -> bool {
        is_path(&self.adjacency(), &(0..self.order()).collect::<Vec<_>>())
    }
}

/// Whether the subgraph of `adj` induced by `nodes` is a path.
pub fn is_path(adj: &[Vec<usize>], nodes: &[usize]) -> bool {
    if nodes.is_empty() {
        return false;
    }
    let set: BTreeSet<usize> = nodes.iter().copied().collect();
    let deg = |v: usize| adj[v].iter().filter(|u| set.contains(u)).count();
    let edges: usize = nodes.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    nodes.iter().all(|&v| deg(v) <= 2) && edges + 1 == nodes.len() && induced_connected(adj, &set)
}

fn induced_connected(adj: &[Vec<usize>], set: &BTreeSet<usize>) -> bool {
    let Some(&start) = set.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if set.contains(&u) && seen.insert(u) {
                queue.push_back(u);
            }
        }
    }
    seen.len() == set.len()
}

/// Whether the faces `faces` of `g` form a connected subgraph of the full dual.
pub fn faces_connected(g: &PlaneGraph, faces: &BTreeSet<usize>) -> bool {
    let Some(&start) = faces.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for (h, _) in g.face_neighbours(f) {
            if faces.contains(&h) && seen.insert(h) {
                queue.push_back(h);
            }
        }
    }
    seen.len() == faces.len()
}

/// Primal edges incident with exactly one selected face, and their ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundarySubgraph {
    /// Edge ids, in no particular order.
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl BoundarySubgraph {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Assembles the edges into a cycle; fails unless they form one.
    pub fn as_cycle(&self, g: &PlaneGraph) -> Result<Cycle, DualError> {
        let pairs: Vec<_> = self.edges.iter().map(|&e| g.edges()[e]).collect();
        Cycle::from_edges(&pairs).ok_or(DualError::NotACycle)
    }
}

/// The boundary of a union of faces, as an edge set, without checking that
/// the union is dual-connected.
pub fn boundary_unchecked(g: &PlaneGraph, faces: &BTreeSet<usize>) -> BoundarySubgraph {
    let mut incidences = vec![0u8; g.size()];
    for &f in faces {
        for e in g.face_edges(f) {
            incidences[e] += 1;
        }
    }
    let edges: Vec<usize> = (0..g.size()).filter(|&e| incidences[e] == 1).collect();
    let vertices: BTreeSet<usize> = edges
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.edges()[e];
            [u, v]
        })
        .collect();
    BoundarySubgraph {
        edges,
        vertices: vertices.into_iter().collect(),
    }
}

/// Edges bordering exactly one face of `faces` (isolated vertices dropped).
pub fn boundary(g: &PlaneGraph, faces: &[usize]) -> Result<BoundarySubgraph, DualError> {
    if faces.is_empty() {
        return Err(DualError::EmptySelection);
    }
    let set: BTreeSet<usize> = faces.iter().copied().collect();
    if let Some(&f) = set.iter().find(|&&f| f >= g.faces().len()) {
        return Err(DualError::UnknownFace(f));
    }
    if !faces_connected(g, &set) {
        return Err(DualError::DisconnectedSelection);
    }
    Ok(boundary_unchecked(g, &set))
}

/// Exact radius and diameter from BFS eccentricities.
pub fn radius_diameter(adj: &[Vec<usize>]) -> Result<(usize, usize), DualError> {
    let n = adj.len();
    if n == 0 {
        return Err(DualError::Empty);
    }
    let mut rad = usize::MAX;
    let mut diam = 0;
    for s in 0..n {
        let dist = bfs(adj, s);
        if dist.contains(&usize::MAX) {
            return Err(DualError::Disconnected);
        }
        let ecc = *dist.iter().max().unwrap();
        rad = rad.min(ecc);
        diam = diam.max(ecc);
    }
    Ok((rad, diam))
}

/// BFS distances from `s` (`usize::MAX` when unreachable).
pub fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Outcome of testing the weak-dual path criterion on a near triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCriterion {
    pub hypothesis_holds: bool,
    pub weak_dual_is_path: bool,
}

/// Checks the hypothesis of the weak-dual path criterion (at most two
/// bounded faces with two boundary edges; every bounded face touching the
/// boundary has all its vertices on it) and whether the weak dual is a path.
pub fn lemma1_check(nt: &NearTriangulation) -> Result<PathCriterion, DualError> {
    if nt.order() < 4 {
        return Err(DualError::TooSmall(nt.order()));
    }
    let g = nt.graph();
    let bounded: BTreeSet<usize> = nt.bounded_face_ids().into_iter().collect();
    let bd = boundary_unchecked(g, &bounded);
    let on_edge: BTreeSet<usize> = bd.edges.iter().copied().collect();
    let on_vertex: BTreeSet<usize> = bd.vertices.iter().copied().collect();
    let mut two_edge_faces = 0;
    let mut touching_ok = true;
    for &f in &bounded {
        let hits = g.face_edges(f).iter().filter(|e| on_edge.contains(e)).count();
        if hits >= 2 {
            two_edge_faces += 1;
        }
        if hits >= 1 && !g.face(f).boundary.iter().all(|v| on_vertex.contains(v)) {
            touching_ok = false;
        }
    }
    let dual = DualGraph::weak(nt)?;
    Ok(PathCriterion {
        hypothesis_holds: two_edge_faces <= 2 && touching_ok,
        weak_dual_is_path: dual.is_path(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::fixtures::{k4, octahedron};
    use crate::plane_graph::{PlanarTriangulation, RotationSystem};

    fn tri(rot: Vec<Vec<usize>>) -> PlanarTriangulation {
        PlanarTriangulation::from_rotation_system(rot).unwrap()
    }

    #[test]
    fn dual_orders() {
        let k = tri(k4());
        let d = DualGraph::full(&k).unwrap();
        assert_eq!((d.order(), d.size()), (4, 6));
        assert_eq!(radius_diameter(&d.adjacency()).unwrap(), (1, 1));
        let o = tri(octahedron());
        let d = DualGraph::full(&o).unwrap();
        assert_eq!((d.order(), d.size()), (8, 12));
        assert!((0..8).all(|i| d.degree(i) == 3));
        assert_eq!(radius_diameter(&d.adjacency()).unwrap(), (3, 3));
    }

    #[test]
    fn radius_errors() {
        assert_eq!(radius_diameter(&[]), Err(DualError::Empty));
        assert_eq!(
            radius_diameter(&[vec![], vec![]]),
            Err(DualError::Disconnected)
        );
        // prism: two triangles 0-1-2, 3-4-5 joined by 0-3, 1-4, 2-5
        let prism = vec![
            vec![1, 2, 3],
            vec![0, 2, 4],
            vec![0, 1, 5],
            vec![4, 5, 0],
            vec![3, 5, 1],
            vec![3, 4, 2],
        ];
        assert_eq!(radius_diameter(&prism).unwrap(), (2, 2));
    }

    #[test]
    fn boundaries() {
        let k = tri(k4());
        let b = boundary(&k, &[0]).unwrap();
        assert_eq!(b.edges.len(), 3);
        assert_eq!(b.as_cycle(&k).unwrap().len(), 3);
        let o = tri(octahedron());
        let nb = o.face_neighbours(0)[0].0;
        let b = boundary(&o, &[0, nb]).unwrap();
        assert_eq!(b.as_cycle(&o).unwrap().len(), 4);
        let all: Vec<usize> = (0..8).collect();
        assert!(boundary(&o, &all).unwrap().is_empty());
        let far = (0..8)
            .find(|&f| o.face(f).boundary.iter().all(|v| !o.face(0).contains(*v)))
            .unwrap();
        assert_eq!(boundary(&o, &[0, far]), Err(DualError::DisconnectedSelection));
        assert_eq!(boundary(&o, &[]), Err(DualError::EmptySelection));
    }

    #[test]
    fn lemma1_examples() {
        let quad = RotationSystem::new(vec![
            vec![1, 2, 3],
            vec![2, 0],
            vec![3, 0, 1],
            vec![0, 2],
        ])
        .unwrap();
        let nt = NearTriangulation::new(quad, &[0, 1, 2, 3]).unwrap();
        assert_eq!(
            lemma1_check(&nt).unwrap(),
            PathCriterion {
                hypothesis_holds: true,
                weak_dual_is_path: true
            }
        );
        // fan: apex 0 over the path 1..6
        let mut rot = vec![vec![]; 7];
        rot[0] = (1..=6).rev().collect();
        for (i, l) in rot.iter_mut().enumerate().skip(1) {
            l.push(0);
            if i > 1 {
                l.insert(0, i - 1);
            }
            if i < 6 {
                l.push(i + 1);
            }
        }
        let rs = RotationSystem::new(rot).unwrap();
        let nt = NearTriangulation::new(rs, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(nt.bounded_faces().count(), 5);
        let r = lemma1_check(&nt).unwrap();
        assert!(r.hypothesis_holds && r.weak_dual_is_path);

        let o = tri(octahedron());
        for f in 0..8 {
            let nt = NearTriangulation::from_triangulation(&o, f).unwrap();
            assert_eq!(
                lemma1_check(&nt).unwrap(),
                PathCriterion {
                    hypothesis_holds: false,
                    weak_dual_is_path: false
                }
            );
        }
    }
}
