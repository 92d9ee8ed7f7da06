//! Exact enumeration of simple cycles.
//!
//! Every cycle is found from its smallest vertex (the anchor) by
//! backtracking over larger vertices only, and is reported only in the
//! orientation whose second vertex is smaller than its last one, so each
//! undirected cycle is seen exactly once. Work is split by anchor and can run
//! on a rayon pool; merged results do not depend on the number of workers.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{ordered, PlanarTriangulation, PlaneGraph};

/// Default cap on the number of partial paths explored by one enumeration.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

const CHARGE_CHUNK: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("enumeration budget of {budget} partial paths exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("invalid path: {0}")]
    BadPath(String),
    #[error("invalid cycle: {0}")]
    BadCycle(String),
    #[error("could not build worker pool: {0}")]
    Pool(String),
}

/// A simple cycle in canonical form: smallest vertex first, then the
/// orientation whose second vertex is smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    verts: Vec<usize>,
}

impl Cycle {
    /// Canonicalises `verts`, checking distinctness and adjacency in `g`.
    pub fn new(verts: Vec<usize>, g: &PlaneGraph) -> Result<Self, CycleError> {
        if verts.len() < 3 {
            return Err(CycleError::BadCycle(format!("length {} < 3", verts.len())));
        }
        let mut seen = HashSet::new();
        for &v in &verts {
            if v >= g.order() || !seen.insert(v) {
                return Err(CycleError::BadCycle(format!("vertex {v} repeated or unknown")));
            }
        }
        let k = verts.len();
        for i in 0..k {
            let (u, v) = (verts[i], verts[(i + 1) % k]);
            if !g.is_adjacent(u, v) {
                return Err(CycleError::BadCycle(format!("{u}-{v} is not an edge")));
            }
        }
        Ok(Self::from_vertices_unchecked(verts))
    }

    /// Canonicalises without validating against a host graph.
    pub fn from_vertices_unchecked(mut verts: Vec<usize>) -> Self {
        if let Some((i, _)) = verts.iter().enumerate().min_by_key(|&(_, v)| *v) {
            verts.rotate_left(i);
        }
        if verts.len() > 2 && verts[1] > verts[verts.len() - 1] {
            verts[1..].reverse();
        }
        Self { verts }
    }

    /// Assembles an edge set into a cycle; `None` unless the edges form
    /// exactly one simple cycle.
    pub fn from_edges(edges: &[(usize, usize)]) -> Option<Self> {
        if edges.len() < 3 {
            return None;
        }
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(u, v) in edges {
            if u == v {
                return None;
            }
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        if adj.values().any(|l| l.len() != 2) || adj.len() != edges.len() {
            return None;
        }
        let start = *adj.keys().next()?;
        let mut verts = vec![start];
        let mut prev = start;
        let mut cur = adj[&start][0];
        while cur != start {
            verts.push(cur);
            let l = &adj[&cur];
            let next = if l[0] == prev { l[1] } else { l[0] };
            prev = cur;
            cur = next;
        }
        (verts.len() == edges.len()).then(|| Self::from_vertices_unchecked(verts))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.verts.len();
        let mut e: Vec<_> = (0..k)
            .map(|i| ordered(self.verts[i], self.verts[(i + 1) % k]))
            .collect();
        e.sort_unstable();
        e
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        let k = self.verts.len();
        (0..k).any(|i| ordered(self.verts[i], self.verts[(i + 1) % k]) == ordered(u, v))
    }
}

/// Number of cycles per length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSpectrum {
    pub n: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl CycleSpectrum {
    /// `c_k`; zero outside the enumerated range.
    pub fn count(&self, k: usize) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Longest length with a nonzero count.
    pub fn longest(&self) -> Option<usize> {
        self.counts
            .iter()
            .rev()
            .find(|(_, &c)| c > 0)
            .map(|(&k, _)| k)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("length,count\n");
        for (k, c) in &self.counts {
            s.push_str(&format!("{k},{c}\n"));
        }
        s
    }
}

/// Length range, budget and parallelism of one enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub min_len: usize,
    /// Defaults to the order of the graph.
    pub max_len: Option<usize>,
    pub budget: u64,
    /// Worker threads; `0` uses the current rayon pool.
    pub jobs: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            min_len: 3,
            max_len: None,
            budget: DEFAULT_BUDGET,
            jobs: 1,
        }
    }
}

impl EnumOptions {
    pub fn lengths(min_len: usize, max_len: usize) -> Self {
        Self {
            min_len,
            max_len: Some(max_len),
            ..Self::default()
        }
    }

    pub fn exact(k: usize) -> Self {
        Self::lengths(k, k)
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

struct Budget {
    limit: u64,
    used: AtomicU64,
    exceeded: AtomicBool,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Self {
            limit,
            used: AtomicU64::new(0),
            exceeded: AtomicBool::new(false),
        }
    }

    fn charge(&self, steps: u64) -> bool {
        let total = self.used.fetch_add(steps, Ordering::Relaxed) + steps;
        if total > self.limit {
            self.exceeded.store(true, Ordering::Relaxed);
        }
        !self.exceeded.load(Ordering::Relaxed)
    }
}

trait Sink {
    /// Called with the vertex path of a closed cycle; `false` stops the search.
    fn cycle(&mut self, path: &[usize]) -> bool;
    /// Shortest cycle still of interest.
    fn min_len(&self) -> usize;
}

struct Counter {
    counts: Vec<u64>,
    min_len: usize,
}

impl Sink for Counter {
    fn cycle(&mut self, path: &[usize]) -> bool {
        self.counts[path.len()] += 1;
        true
    }
    fn min_len(&self) -> usize {
        self.min_len
    }
}

struct Collector {
    out: Vec<Cycle>,
    min_len: usize,
}

impl Sink for Collector {
    fn cycle(&mut self, path: &[usize]) -> bool {
        self.out.push(Cycle::from_vertices_unchecked(path.to_vec()));
        true
    }
    fn min_len(&self) -> usize {
        self.min_len
    }
}

struct First {
    found: Option<Vec<usize>>,
    min_len: usize,
}

impl Sink for First {
    fn cycle(&mut self, path: &[usize]) -> bool {
        self.found = Some(path.to_vec());
        false
    }
    fn min_len(&self) -> usize {
        self.min_len
    }
}

/// Tracks the longest cycle seen and raises its own threshold as it goes.
struct Longest {
    best: usize,
    floor: usize,
}

impl Sink for Longest {
    fn cycle(&mut self, path: &[usize]) -> bool {
        self.best = self.best.max(path.len());
        true
    }
    fn min_len(&self) -> usize {
        self.floor.max(self.best + 1)
    }
}

enum Stop {
    Sink,
    Budget,
}

struct Search<'a, S> {
    adj: &'a [Vec<usize>],
    first: usize,
    /// Anchor mode: only vertices above `first` may join, and each cycle is
    /// reported in one orientation only.
    anchored: bool,
    max_len: usize,
    visited: Vec<bool>,
    path: Vec<usize>,
    budget: &'a Budget,
    pending: u64,
    sink: S,
    stamp: Vec<u32>,
    epoch: u32,
    stack: Vec<usize>,
}

impl<'a, S: Sink> Search<'a, S> {
    fn new(adj: &'a [Vec<usize>], budget: &'a Budget, sink: S, max_len: usize) -> Self {
        let n = adj.len();
        Self {
            adj,
            first: 0,
            anchored: true,
            max_len,
            visited: vec![false; n],
            path: Vec::with_capacity(n),
            budget,
            pending: 0,
            sink,
            stamp: vec![0; n],
            epoch: 0,
            stack: Vec::with_capacity(n),
        }
    }

    fn allowed(&self, w: usize) -> bool {
        !self.visited[w] && (!self.anchored || w > self.first)
    }

    /// Whether the current path, ending at its last vertex, can still close
    /// into a cycle of at least `min_len` vertices.
    fn can_reach(&mut self, min_len: usize) -> bool {
        let len = self.path.len();
        let head = *self.path.last().unwrap();
        let mut closes = self.adj[head].contains(&self.first);
        if len >= min_len && closes {
            return true;
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.stack.clear();
        self.stack.push(head);
        let mut reach = 0usize;
        while let Some(v) = self.stack.pop() {
            for i in 0..self.adj[v].len() {
                let w = self.adj[v][i];
                if w == self.first && v != head {
                    closes = true;
                }
                if self.stamp[w] != epoch && self.allowed(w) {
                    self.stamp[w] = epoch;
                    reach += 1;
                    self.stack.push(w);
                }
            }
        }
        closes && len + reach >= min_len
    }

    fn run(&mut self) -> Result<(), Stop> {
        self.pending += 1;
        if self.pending == CHARGE_CHUNK {
            self.pending = 0;
            if !self.budget.charge(CHARGE_CHUNK) {
                return Err(Stop::Budget);
            }
        }
        let head = *self.path.last().unwrap();
        let len = self.path.len();
        let adj = self.adj;
        for &w in &adj[head] {
            if w == self.first {
                if len >= 3
                    && len >= self.sink.min_len()
                    && (!self.anchored || self.path[1] < head)
                    && !self.sink.cycle(&self.path)
                {
                    return Err(Stop::Sink);
                }
            } else if len < self.max_len && self.allowed(w) {
                self.path.push(w);
                self.visited[w] = true;
                let min_len = self.sink.min_len();
                let ok = min_len <= len + 2 || self.can_reach(min_len);
                let r = if ok { self.run() } else { Ok(()) };
                self.visited[w] = false;
                self.path.pop();
                r?;
            }
        }
        Ok(())
    }

    fn run_anchor(&mut self, s: usize) -> Result<(), Stop> {
        self.first = s;
        self.anchored = true;
        self.path.clear();
        self.path.push(s);
        self.visited[s] = true;
        let r = self.run();
        self.visited[s] = false;
        self.flush()?;
        r
    }

    fn run_prefix(&mut self, prefix: &[usize]) -> Result<(), Stop> {
        self.first = prefix[0];
        self.anchored = false;
        self.path.clear();
        for &v in prefix {
            self.path.push(v);
            self.visited[v] = true;
        }
        let min_len = self.sink.min_len();
        let r = if self.can_reach(min_len) { self.run() } else { Ok(()) };
        for &v in prefix {
            self.visited[v] = false;
        }
        self.flush()?;
        r
    }

    fn flush(&mut self) -> Result<(), Stop> {
        let p = std::mem::take(&mut self.pending);
        if self.budget.charge(p) {
            Ok(())
        } else {
            Err(Stop::Budget)
        }
    }
}

fn max_len_for(g: &PlaneGraph, opts: &EnumOptions) -> usize {
    opts.max_len.unwrap_or(g.order()).min(g.order())
}

/// Runs one sink per anchor (in parallel when asked) and returns them in
/// anchor order.
fn per_anchor<S, F>(g: &PlaneGraph, opts: &EnumOptions, make: F) -> Result<Vec<S>, CycleError>
where
    S: Sink + Send,
    F: Fn() -> S + Sync,
{
    let adj = g.rotation_system().lists();
    let n = g.order();
    let max_len = max_len_for(g, opts);
    let budget = Budget::new(opts.budget);
    let anchors: Vec<usize> = (0..n.saturating_sub(2)).collect();
    let work = |s: usize| -> Result<S, CycleError> {
        let mut search = Search::new(adj, &budget, make(), max_len);
        match search.run_anchor(s) {
            Ok(()) | Err(Stop::Sink) => Ok(search.sink),
            Err(Stop::Budget) => Err(CycleError::BudgetExceeded {
                budget: opts.budget,
            }),
        }
    };
    if opts.jobs == 1 {
        return anchors.into_iter().map(work).collect();
    }
    let run = || anchors.par_iter().map(|&s| work(s)).collect::<Result<Vec<_>, _>>();
    if opts.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| CycleError::Pool(e.to_string()))?
            .install(run)
    }
}

/// Exact `c_k` for every `k` in the requested length range.
pub fn spectrum(g: &PlaneGraph, opts: &EnumOptions) -> Result<CycleSpectrum, CycleError> {
    let n = g.order();
    let max_len = max_len_for(g, opts);
    let min_len = opts.min_len.max(3);
    let parts = per_anchor(g, opts, || Counter {
        counts: vec![0; n + 1],
        min_len,
    })?;
    let mut counts = BTreeMap::new();
    for k in min_len..=max_len {
        counts.insert(k, parts.iter().map(|p| p.counts[k]).sum());
    }
    Ok(CycleSpectrum {
        n,
        min_len,
        max_len,
        counts,
    })
}

/// All cycles with length in the requested range, sorted.
pub fn cycles(g: &PlaneGraph, opts: &EnumOptions) -> Result<Vec<Cycle>, CycleError> {
    let min_len = opts.min_len.max(3);
    let parts = per_anchor(g, opts, || Collector {
        out: Vec::new(),
        min_len,
    })?;
    let mut out: Vec<Cycle> = parts.into_iter().flat_map(|p| p.out).collect();
    out.sort_unstable();
    Ok(out)
}

/// Some cycle of exactly length `k`, if one exists.
pub fn find_cycle(g: &PlaneGraph, k: usize, opts: &EnumOptions) -> Result<Option<Cycle>, CycleError> {
    let opts = EnumOptions {
        min_len: k,
        max_len: Some(k),
        ..*opts
    };
    if k < 3 || k > g.order() {
        return Ok(None);
    }
    let parts = per_anchor(g, &opts, || First {
        found: None,
        min_len: k,
    })?;
    Ok(parts
        .into_iter()
        .find_map(|p| p.found)
        .map(Cycle::from_vertices_unchecked))
}

/// Length of a longest cycle.
pub fn circumference(g: &PlaneGraph, opts: &EnumOptions) -> Result<usize, CycleError> {
    let opts = EnumOptions {
        max_len: None,
        ..*opts
    };
    let parts = per_anchor(g, &opts, || Longest { best: 0, floor: 3 })?;
    Ok(parts.iter().map(|p| p.best).max().unwrap_or(0))
}

/// `(circumference, number of hamiltonian cycles)`, the latter counted as
/// undirected edge sets.
pub fn circumference_and_hamiltonian(
    g: &PlaneGraph,
    opts: &EnumOptions,
) -> Result<(usize, u64), CycleError> {
    let n = g.order();
    let h = spectrum(g, &EnumOptions { min_len: n, max_len: Some(n), ..*opts })?.count(n);
    if h > 0 {
        return Ok((n, h));
    }
    Ok((circumference(g, opts)?, 0))
}

fn check_path(g: &PlaneGraph, path: &[usize]) -> Result<(), CycleError> {
    if path.len() < 2 {
        return Err(CycleError::BadPath("a path needs at least one edge".into()));
    }
    let mut seen = HashSet::new();
    for &v in path {
        if v >= g.order() || !seen.insert(v) {
            return Err(CycleError::BadPath(format!("vertex {v} repeated or unknown")));
        }
    }
    for w in path.windows(2) {
        if !g.is_adjacent(w[0], w[1]) {
            return Err(CycleError::BadPath(format!("{}-{} is not an edge", w[0], w[1])));
        }
    }
    Ok(())
}

/// All `k`-cycles whose edge set contains every edge of `path`.
pub fn cycles_through(
    g: &PlaneGraph,
    path: &[usize],
    k: usize,
    opts: &EnumOptions,
) -> Result<Vec<Cycle>, CycleError> {
    check_path(g, path)?;
    if k < 3 || k > g.order() || k < path.len() {
        return Ok(Vec::new());
    }
    let adj = g.rotation_system().lists();
    let budget = Budget::new(opts.budget);
    let mut search = Search::new(
        adj,
        &budget,
        Collector {
            out: Vec::new(),
            min_len: k,
        },
        k,
    );
    match search.run_prefix(path) {
        Ok(()) | Err(Stop::Sink) => {}
        Err(Stop::Budget) => {
            return Err(CycleError::BudgetExceeded {
                budget: opts.budget,
            })
        }
    }
    let mut out = search.sink.out;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The two sides of a cycle in a plane graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatingCycleReport {
    pub cycle: Cycle,
    /// The side with fewer vertices.
    pub interior: Vec<usize>,
    pub exterior: Vec<usize>,
}

/// Splits the vertices off `cycle` into its two sides, smaller side first.
/// Sides are found by flooding faces across non-cycle edges.
pub fn cycle_sides(g: &PlaneGraph, cycle: &Cycle) -> (Vec<usize>, Vec<usize>) {
    let on_cycle: HashSet<usize> = cycle
        .edges()
        .iter()
        .filter_map(|&(u, v)| g.edge_id(u, v))
        .collect();
    let nf = g.faces().len();
    let mut region = vec![false; nf];
    region[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        for (h, e) in g.face_neighbours(f) {
            if !on_cycle.contains(&e) && !region[h] {
                region[h] = true;
                queue.push_back(h);
            }
        }
    }
    let mut side = [Vec::new(), Vec::new()];
    let mut assigned = vec![false; g.order()];
    for f in g.faces() {
        let s = usize::from(!region[f.id]);
        for &v in &f.boundary {
            if !assigned[v] && !cycle.contains(v) {
                assigned[v] = true;
                side[s].push(v);
            }
        }
    }
    let [mut a, mut b] = side;
    a.sort_unstable();
    b.sort_unstable();
    if b.len() < a.len() {
        (b, a)
    } else {
        (a, b)
    }
}

/// Separating cycles of length 3 or 4 with both sides reported.
pub fn separating_cycles(
    g: &PlanarTriangulation,
    len: usize,
) -> Result<Vec<SeparatingCycleReport>, CycleError> {
    if !(3..=4).contains(&len) {
        return Err(CycleError::BadCycle(format!(
            "separating cycles are reported for lengths 3 and 4, not {len}"
        )));
    }
    let all = cycles(g.graph(), &EnumOptions::exact(len))?;
    Ok(all
        .into_iter()
        .filter_map(|c| {
            let (interior, exterior) = cycle_sides(g.graph(), &c);
            (!interior.is_empty() && !exterior.is_empty()).then_some(SeparatingCycleReport {
                cycle: c,
                interior,
                exterior,
            })
        })
        .collect())
}

/// Ordered pairs `(C, C')` of `set` whose intersection is a single edge
/// with its two ends.
pub fn iota(set: &[Cycle]) -> usize {
    let mut count = 0;
    for (i, a) in set.iter().enumerate() {
        let ea = a.edges();
        for (j, b) in set.iter().enumerate() {
            if i == j {
                continue;
            }
            let common_v = a.vertices().iter().filter(|v| b.contains(**v)).count();
            let common_e = b.edges().iter().filter(|e| ea.binary_search(e).is_ok()).count();
            if common_v == 2 && common_e == 1 {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::fixtures::{k4, octahedron};

    fn tri(rot: Vec<Vec<usize>>) -> PlanarTriangulation {
        PlanarTriangulation::from_rotation_system(rot).unwrap()
    }

    /// Counts cycles by checking every vertex sequence; exponential, for
    /// tiny graphs only.
    fn brute_force_counts(g: &PlaneGraph) -> BTreeMap<usize, u64> {
        fn rec(g: &PlaneGraph, path: &mut Vec<usize>, out: &mut HashSet<Vec<(usize, usize)>>) {
            let head = *path.last().unwrap();
            if path.len() >= 3 && g.is_adjacent(head, path[0]) {
                let mut e: Vec<_> = path
                    .iter()
                    .zip(path.iter().cycle().skip(1))
                    .map(|(&a, &b)| ordered(a, b))
                    .collect();
                e.sort_unstable();
                out.insert(e);
            }
            for &w in g.neighbours(head) {
                if !path.contains(&w) {
                    path.push(w);
                    rec(g, path, out);
                    path.pop();
                }
            }
        }
        let mut all = HashSet::new();
        for s in 0..g.order() {
            rec(g, &mut vec![s], &mut all);
        }
        let mut counts = BTreeMap::new();
        for e in all {
            *counts.entry(e.len()).or_insert(0) += 1;
        }
        counts
    }

    #[test]
    fn k4_spectrum() {
        let g = tri(k4());
        let s = spectrum(&g, &EnumOptions::default()).unwrap();
        assert_eq!(s.counts, BTreeMap::from([(3, 4), (4, 3)]));
        assert_eq!(circumference_and_hamiltonian(&g, &EnumOptions::default()).unwrap(), (4, 3));
    }

    #[test]
    fn octahedron_spectrum_matches_brute_force() {
        let g = tri(octahedron());
        let oracle = brute_force_counts(&g);
        assert_eq!(oracle, BTreeMap::from([(3, 8), (4, 15), (5, 24), (6, 16)]));
        let s = spectrum(&g, &EnumOptions::default()).unwrap();
        assert_eq!(s.counts, oracle);
        let par = spectrum(&g, &EnumOptions::default().with_jobs(3)).unwrap();
        assert_eq!(par, s);
    }

    #[test]
    fn length_window_and_budget() {
        let g = tri(octahedron());
        let s = spectrum(&g, &EnumOptions::lengths(5, 6)).unwrap();
        assert_eq!(s.counts, BTreeMap::from([(5, 24), (6, 16)]));
        assert_eq!(
            spectrum(&g, &EnumOptions::default().with_budget(3)),
            Err(CycleError::BudgetExceeded { budget: 3 })
        );
        assert_eq!(circumference(&g, &EnumOptions::default()).unwrap(), 6);
        let c = find_cycle(&g, 5, &EnumOptions::default()).unwrap().unwrap();
        assert_eq!(c.len(), 5);
        assert!(Cycle::new(c.vertices().to_vec(), &g).is_ok());
    }

    #[test]
    fn canonical_form() {
        let c = Cycle::from_vertices_unchecked(vec![4, 2, 7, 1]);
        assert_eq!(c.vertices(), &[1, 4, 2, 7]);
        let d = Cycle::from_vertices_unchecked(vec![7, 2, 4, 1]);
        assert_eq!(c, d);
        assert_eq!(Cycle::from_edges(&c.edges()), Some(c));
        assert_eq!(Cycle::from_edges(&[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]), None);
    }

    #[test]
    fn through_paths() {
        let g = tri(k4());
        assert_eq!(cycles_through(&g, &[0, 1], 3, &EnumOptions::default()).unwrap().len(), 2);
        let t = cycles_through(&g, &[0, 1, 2], 3, &EnumOptions::default()).unwrap();
        assert_eq!(t, vec![Cycle::from_vertices_unchecked(vec![0, 1, 2])]);
        assert!(matches!(
            cycles_through(&g, &[0, 0], 3, &EnumOptions::default()),
            Err(CycleError::BadPath(_))
        ));
        let o = tri(octahedron());
        // zigzag 2-0-1-4 around edge 0-1 (faces 0,1,2 and 0,1,4)
        let z = cycles_through(&o, &[2, 0, 1, 4], 6, &EnumOptions::default()).unwrap();
        assert!(!z.is_empty());
        let all6 = cycles(&o, &EnumOptions::exact(6)).unwrap();
        let expect: Vec<_> = all6
            .into_iter()
            .filter(|c| c.contains_edge(2, 0) && c.contains_edge(0, 1) && c.contains_edge(1, 4))
            .collect();
        assert_eq!(z, expect);
    }

    #[test]
    fn octahedron_separating_cycles() {
        let g = tri(octahedron());
        assert!(separating_cycles(&g, 3).unwrap().is_empty());
        let s4 = separating_cycles(&g, 4).unwrap();
        assert_eq!(s4.len(), 3);
        for r in &s4 {
            assert_eq!((r.interior.len(), r.exterior.len()), (1, 1));
        }
        let set: Vec<_> = s4.into_iter().map(|r| r.cycle).collect();
        assert_eq!(iota(&set), 0);
        assert_eq!(iota(&set[..1]), 0);
    }

    #[test]
    fn iota_counts_ordered_pairs() {
        let a = Cycle::from_vertices_unchecked(vec![0, 1, 2, 3]);
        let b = Cycle::from_vertices_unchecked(vec![0, 1, 4, 5]);
        assert_eq!(iota(&[a, b]), 2);
    }
}
