//! Constructive procedures on triangulations: good edges and zigzag paths,
//! the boundary-peeling cycle interval on near triangulations, induced dual
//! paths between two faces, and the short-cycle family built from them.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::Cycle;
use crate::dual::{bfs, boundary_unchecked, faces_connected, is_path, radius_diameter, DualError, DualGraph};
use crate::plane_graph::{ordered, NearTriangulation, PlanarTriangulation, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProcedureError {
    #[error("bad anchors: {0}")]
    BadAnchor(String),
    #[error("no removable face at step {step} of {total}")]
    StuckDeletion { step: usize, total: usize },
    #[error("deletion did not terminate within {0} steps")]
    NonTermination(usize),
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    #[error("k = {k} is outside {lo}..={hi}")]
    OutOfRange { k: usize, lo: usize, hi: usize },
    #[error("face {0} not found")]
    FaceNotFound(usize),
    #[error(transparent)]
    Dual(#[from] DualError),
}

/// Edges `uv` whose ends have exactly two common neighbours, one end of
/// degree at most 6.
pub fn good_edges(g: &PlanarTriangulation) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| is_good(g, u, v))
        .collect()
}

fn is_good(g: &PlaneGraph, u: usize, v: usize) -> bool {
    g.common_neighbours(u, v).len() == 2 && g.degree(u).min(g.degree(v)) <= 6
}

/// Path `w1 - u - v - w2` where `uvw1` and `uvw2` are faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZigzagPath {
    pub w1: usize,
    pub u: usize,
    pub v: usize,
    pub w2: usize,
}

impl ZigzagPath {
    pub fn vertices(&self) -> [usize; 4] {
        [self.w1, self.u, self.v, self.w2]
    }

    /// Sorted edge set.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = vec![
            ordered(self.w1, self.u),
            ordered(self.u, self.v),
            ordered(self.v, self.w2),
        ];
        e.sort_unstable();
        e
    }

    /// `w1 - v - u - w2`.
    pub fn swapped(&self) -> Self {
        Self {
            w1: self.w1,
            u: self.v,
            v: self.u,
            w2: self.w2,
        }
    }

    pub fn internal_edge(&self) -> (usize, usize) {
        ordered(self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZigzagFilter {
    /// Internal edge is good.
    GoodInternalEdge,
    /// Both internal vertices have degree at least 4, one at most 6.
    DegreeProfile,
}

/// All zigzag paths whose internal edge passes `filter`, two per edge.
pub fn zigzag_paths(g: &PlanarTriangulation, filter: ZigzagFilter) -> Vec<ZigzagPath> {
    let mut out = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let keep = match filter {
            ZigzagFilter::GoodInternalEdge => is_good(g, u, v),
            ZigzagFilter::DegreeProfile => {
                let (a, b) = (g.degree(u), g.degree(v));
                a >= 4 && b >= 4 && a.min(b) <= 6
            }
        };
        if !keep {
            continue;
        }
        let [f1, f2] = g.edge_faces(e);
        let apex = |f: usize| *g.face(f).boundary.iter().find(|&&x| x != u && x != v).unwrap();
        let z = ZigzagPath {
            w1: apex(f1),
            u,
            v,
            w2: apex(f2),
        };
        out.push(z);
        out.push(z.swapped());
    }
    out
}

/// Witness cycles, one per length of `lo..=hi`, each through the anchor path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleInterval {
    pub lo: usize,
    pub hi: usize,
    pub witnesses: BTreeMap<usize, Cycle>,
    /// Boundary length after each deletion, starting with the outer cycle.
    pub boundary_lengths: Vec<usize>,
}

fn on_cycle_edge(cycle: &[usize], a: usize, b: usize) -> bool {
    let k = cycle.len();
    (0..k).any(|i| ordered(cycle[i], cycle[(i + 1) % k]) == ordered(a, b))
}

/// Peels bounded faces avoiding `v2` off the near triangulation, one per
/// step, keeping the remaining faces a disk; the successive boundaries are
/// cycles through `v1 v2 v3` whose lengths change by one per step, ending
/// at the cycle around `v2`.
pub fn lemma2_cycles(
    nt: &NearTriangulation,
    v1: usize,
    v2: usize,
    v3: usize,
    v4: Option<usize>,
) -> Result<CycleInterval, ProcedureError> {
    let outer = nt.outer_cycle();
    let n = nt.order();
    if [v1, v2, v3].iter().chain(v4.iter()).any(|&v| v >= n) {
        return Err(ProcedureError::BadAnchor("unknown vertex".into()));
    }
    if v1 == v3 || !on_cycle_edge(outer, v1, v2) || !on_cycle_edge(outer, v2, v3) {
        return Err(ProcedureError::BadAnchor(format!(
            "{v1}-{v2}-{v3} is not a pair of consecutive outer edges"
        )));
    }
    if let Some(v4) = v4 {
        if v4 == v1 || v4 == v2 || !on_cycle_edge(outer, v3, v4) {
            return Err(ProcedureError::BadAnchor(format!(
                "{v3}-{v4} does not continue the outer path from {v1}"
            )));
        }
        let facial = nt
            .bounded_faces()
            .any(|f| f.len() == 3 && [v2, v3, v4].iter().all(|&x| f.contains(x)));
        if !facial {
            return Err(ProcedureError::BadAnchor(format!(
                "{v2}{v3}{v4} is not a bounded face"
            )));
        }
    }
    let g = nt.graph();
    let mut region: BTreeSet<usize> = nt.bounded_face_ids().into_iter().collect();
    let deg = g.degree(v2);
    let total = region.len() + 1 - deg;
    let mut cycles = vec![boundary_unchecked(g, &region).as_cycle(g)?];
    for step in 0..total {
        let bd = boundary_unchecked(g, &region);
        let bd_edges: BTreeSet<usize> = bd.edges.iter().copied().collect();
        let pick = region.iter().copied().find(|&f| {
            if g.face(f).contains(v2) || !g.face_edges(f).iter().any(|e| bd_edges.contains(e)) {
                return false;
            }
            let mut rest = region.clone();
            rest.remove(&f);
            faces_connected(g, &rest)
        });
        let f = pick.ok_or(ProcedureError::StuckDeletion { step, total })?;
        region.remove(&f);
        let c = boundary_unchecked(g, &region)
            .as_cycle(g)
            .map_err(|_| ProcedureError::Postcondition(format!("boundary after step {step} is not a cycle")))?;
        let prev = cycles.last().unwrap().len();
        if c.len().abs_diff(prev) != 1 {
            return Err(ProcedureError::Postcondition(format!(
                "boundary length jumped from {prev} to {}",
                c.len()
            )));
        }
        cycles.push(c);
    }
    let last = cycles.last().unwrap();
    let mut star: Vec<usize> = g.neighbours(v2).to_vec();
    star.push(v2);
    star.sort_unstable();
    let mut got = last.vertices().to_vec();
    got.sort_unstable();
    if got != star {
        return Err(ProcedureError::Postcondition(
            "terminal boundary is not the cycle around v2".into(),
        ));
    }
    let (a, b) = (outer.len(), deg + 1);
    let (lo, hi) = (a.min(b), a.max(b));
    let mut witnesses = BTreeMap::new();
    for c in &cycles {
        if !(c.contains_edge(v1, v2) && c.contains_edge(v2, v3)) {
            return Err(ProcedureError::Postcondition("boundary lost v1 v2 v3".into()));
        }
        if let Some(v4) = v4 {
            if !c.contains_edge(v3, v4) {
                return Err(ProcedureError::Postcondition("boundary lost v3 v4".into()));
            }
        }
        witnesses.entry(c.len()).or_insert_with(|| c.clone());
    }
    if let Some(k) = (lo..=hi).find(|k| !witnesses.contains_key(k)) {
        return Err(ProcedureError::Postcondition(format!("no witness of length {k}")));
    }
    witnesses.retain(|k, _| (lo..=hi).contains(k));
    Ok(CycleInterval {
        lo,
        hi,
        witnesses,
        boundary_lengths: cycles.iter().map(Cycle::len).collect(),
    })
}

/// An induced path of faces whose union is bounded by a cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPath {
    /// Faces in path order from the first to the second end.
    pub faces: Vec<usize>,
    /// Face treated as unbounded while peeling.
    pub outer: usize,
    pub boundary: Cycle,
}

/// Peels faces off the weak dual (rooted at the smallest face other than
/// `f1`, `f2`) until only an induced dual path from `f1` to `f2` is left. A
/// face is removed when the current boundary holds two of its edges, or one
/// edge but not all of its vertices; the smallest face id goes first.
pub fn dual_induced_path(
    g: &PlanarTriangulation,
    f1: usize,
    f2: usize,
) -> Result<DualPath, ProcedureError> {
    let nf = g.faces().len();
    for f in [f1, f2] {
        if f >= nf {
            return Err(ProcedureError::FaceNotFound(f));
        }
    }
    if f1 == f2 {
        return Err(ProcedureError::BadAnchor("end faces must differ".into()));
    }
    let outer = (0..nf).find(|&f| f != f1 && f != f2).unwrap();
    let pg = g.graph();
    let mut region: BTreeSet<usize> = (0..nf).filter(|&f| f != outer).collect();
    let mut steps = 0;
    loop {
        let bd = boundary_unchecked(pg, &region);
        let edges: BTreeSet<usize> = bd.edges.iter().copied().collect();
        let verts: BTreeSet<usize> = bd.vertices.iter().copied().collect();
        let pick = region.iter().copied().find(|&u| {
            if u == f1 || u == f2 {
                return false;
            }
            let hits = pg.face_edges(u).iter().filter(|e| edges.contains(e)).count();
            let all_on = pg.face(u).boundary.iter().all(|v| verts.contains(v));
            hits == 2 || (hits == 1 && !all_on)
        });
        let Some(u) = pick else { break };
        region.remove(&u);
        steps += 1;
        if steps > nf {
            return Err(ProcedureError::NonTermination(nf));
        }
        if !faces_connected(pg, &region) {
            return Err(ProcedureError::Postcondition(format!(
                "removing face {u} disconnected the region"
            )));
        }
    }
    let dual = DualGraph::full(pg)?;
    let adj = dual.adjacency();
    let nodes: Vec<usize> = region.iter().map(|&f| dual.node(f).unwrap()).collect();
    if !is_path(&adj, &nodes) {
        return Err(ProcedureError::Postcondition("remaining faces are not an induced dual path".into()));
    }
    let faces = order_path(&adj, &region, f1);
    if faces.last() != Some(&f2) {
        return Err(ProcedureError::Postcondition("path does not end at the second face".into()));
    }
    let boundary = boundary_unchecked(pg, &region)
        .as_cycle(pg)
        .map_err(|_| ProcedureError::Postcondition("boundary is not a cycle".into()))?;
    for f in [f1, f2] {
        let hits = g
            .face(f)
            .edges()
            .filter(|&(a, b)| boundary.contains_edge(a, b))
            .count();
        if hits != 2 {
            return Err(ProcedureError::Postcondition(format!(
                "boundary meets end face {f} in {hits} edges"
            )));
        }
    }
    Ok(DualPath {
        faces,
        outer,
        boundary,
    })
}

fn order_path(adj: &[Vec<usize>], region: &BTreeSet<usize>, start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[cur]
            .iter()
            .copied()
            .find(|&x| x != prev && region.contains(&x));
        match next {
            Some(x) => {
                prev = cur;
                cur = x;
                out.push(x);
            }
            None => return out,
        }
    }
}

/// Cycles `∂P_i*` for the prefixes `P_1, ..., P_r` of an induced dual
/// path of length `r = rad(G*)` starting at `face` (lengths `4..=r+3`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchorCycles {
    pub face: usize,
    pub far_face: usize,
    pub path: DualPath,
    pub cycles: Vec<Cycle>,
}

/// Prefix boundaries of an induced dual path from `face` to the
/// smallest-id face at dual distance `rad(G*)`.
pub fn anchor_cycles(g: &PlanarTriangulation, face: usize, rad: usize) -> Result<AnchorCycles, ProcedureError> {
    let adj = DualGraph::full(g)?.adjacency();
    let dist = bfs(&adj, face);
    let far_face = (0..dist.len())
        .find(|&f| dist[f] == rad)
        .ok_or_else(|| ProcedureError::Postcondition(format!("no face at distance {rad} from {face}")))?;
    anchor_cycles_to(g, face, far_face, rad)
}

/// As [`anchor_cycles`] with an explicit far face, which must sit at dual
/// distance `rad` from `face`.
pub fn anchor_cycles_to(
    g: &PlanarTriangulation,
    face: usize,
    far_face: usize,
    rad: usize,
) -> Result<AnchorCycles, ProcedureError> {
    let path = dual_induced_path(g, face, far_face)?;
    if path.faces.len() <= rad {
        return Err(ProcedureError::Postcondition(format!(
            "induced path {face}..{far_face} has {} faces, expected at least {}",
            path.faces.len(),
            rad + 1
        )));
    }
    let pg = g.graph();
    let mut cycles = Vec::with_capacity(rad);
    for i in 1..=rad {
        let prefix: BTreeSet<usize> = path.faces[..=i].iter().copied().collect();
        let c = boundary_unchecked(pg, &prefix)
            .as_cycle(pg)
            .map_err(|_| ProcedureError::Postcondition(format!("prefix {i} boundary is not a cycle")))?;
        if c.len() != i + 3 {
            return Err(ProcedureError::Postcondition(format!(
                "prefix {i} boundary has length {}, expected {}",
                c.len(),
                i + 3
            )));
        }
        cycles.push(c);
    }
    Ok(AnchorCycles {
        face,
        far_face,
        path,
        cycles,
    })
}

/// Distinct `k`-cycles collected over all anchor faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem3Family {
    pub k: usize,
    pub rad: usize,
    pub cycles: Vec<Cycle>,
}

/// For `3 <= k <= rad(G*) + 3`: the `k`-cycle prefix boundaries of induced
/// dual paths from every face to every face at distance `rad(G*)` (the faces
/// themselves when `k = 3`), deduplicated.
///
/// A single far face per anchor is not enough on small graphs: on the
/// 5-vertex bipyramid each 5-cycle has two faces with two edges on it on
/// both sides, and the smallest-id choice yields only 2 distinct cycles.
pub fn theorem3_family(g: &PlanarTriangulation, k: usize) -> Result<Theorem3Family, ProcedureError> {
    let dual = DualGraph::full(g)?;
    let (rad, _) = radius_diameter(&dual.adjacency())?;
    if !(3..=rad + 3).contains(&k) {
        return Err(ProcedureError::OutOfRange {
            k,
            lo: 3,
            hi: rad + 3,
        });
    }
    let mut cycles: Vec<Cycle> = if k == 3 {
        g.faces()
            .iter()
            .map(|f| Cycle::from_vertices_unchecked(f.boundary.clone()))
            .collect()
    } else {
        let adj = dual.adjacency();
        let pairs: Vec<(usize, usize)> = (0..g.faces().len())
            .flat_map(|f| {
                let dist = bfs(&adj, f);
                (0..dist.len()).filter(move |&t| dist[t] == rad).map(move |t| (f, t))
            })
            .collect();
        pairs
            .into_par_iter()
            .map(|(f, t)| anchor_cycles_to(g, f, t, rad).map(|a| a.cycles[k - 4].clone()))
            .collect::<Result<_, _>>()?
    };
    cycles.sort_unstable();
    cycles.dedup();
    Ok(Theorem3Family { k, rad, cycles })
}
