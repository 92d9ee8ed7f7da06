//! Counting bases: a set of edge sets `P`, a cycle family per edge set and
//! an involution `σ`, checked axiom by axiom. A valid base certifies at
//! least `|P| / O` distinct cycles, `O` being the maximum overlap.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::{cycles, cycles_through, Cycle, CycleError, EnumOptions};
use crate::plane_graph::{ordered, GraphError, PlanarTriangulation, PlaneGraph, RotationSystem};
use crate::procedures::{zigzag_paths, ZigzagFilter};

pub type EdgeSet = Vec<(usize, usize)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    I,
    Ii,
    Iii,
    Iv,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axiom::I => "i",
            Axiom::Ii => "ii",
            Axiom::Iii => "iii",
            Axiom::Iv => "iv",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseError {
    #[error("axiom ({axiom}) violated: {witness}")]
    AxiomViolation { axiom: Axiom, witness: String },
    #[error("no qualifying edge sets")]
    EmptyP,
    #[error("empty cycle family for edge set #{index} {path:?}")]
    EmptyFamily { index: usize, path: EdgeSet },
    #[error("k = {k} is outside {lo}..={hi}")]
    OutOfRange { k: usize, lo: usize, hi: usize },
    #[error("host is not 4-connected")]
    NotFourConnected,
    #[error("malformed base: {0}")]
    Malformed(String),
    #[error("certificate does not match its base: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseKind {
    /// Zigzag paths with a good internal edge.
    ZigzagT3,
    /// Zigzag paths with internal degrees at least 4, one at most 6.
    Zigzag6i,
    /// Independent edge pairs of separating 4-cycles.
    Sep4,
    Custom,
}

impl BaseKind {
    pub fn name(&self) -> &'static str {
        match self {
            BaseKind::ZigzagT3 => "zigzag-t3",
            BaseKind::Zigzag6i => "zigzag6i",
            BaseKind::Sep4 => "sep4",
            BaseKind::Custom => "custom",
        }
    }
}

impl std::str::FromStr for BaseKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "zigzag-t3" | "zigzag_t3" | "t3" => Ok(BaseKind::ZigzagT3),
            "zigzag6i" | "zigzag-6i" | "6i" => Ok(BaseKind::Zigzag6i),
            "sep4" => Ok(BaseKind::Sep4),
            _ => Err(format!("unknown base {s:?} (zigzag6i, zigzag-t3, sep4)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingBase {
    pub kind: BaseKind,
    pub k: Option<usize>,
    /// Sorted edge lists.
    pub paths: Vec<EdgeSet>,
    /// Families, sorted and deduplicated, parallel to `paths`.
    pub families: Vec<Vec<Cycle>>,
    /// `sigma[i]` is the index of `σ(paths[i])`.
    pub sigma: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.i && self.ii && self.iii && self.iv
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub base_id: String,
    pub p_count: usize,
    pub max_overlap: usize,
    /// `bound_num / bound_den = |P| / O`.
    pub bound_num: usize,
    pub bound_den: usize,
    /// Distinct cycles in the union of the families.
    pub witnessed: usize,
    pub axioms: AxiomReport,
    pub bound_holds: bool,
}

impl Certificate {
    pub fn bound(&self) -> f64 {
        self.bound_num as f64 / self.bound_den as f64
    }
}

fn sorted_edges(mut e: EdgeSet) -> EdgeSet {
    for x in &mut e {
        *x = ordered(x.0, x.1);
    }
    e.sort_unstable();
    e.dedup();
    e
}

fn is_subset(small: &[(usize, usize)], big: &[(usize, usize)]) -> bool {
    small.iter().all(|e| big.binary_search(e).is_ok())
}

fn disjoint(a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    !a.iter().any(|e| b.binary_search(e).is_ok())
}

/// `(C - P) ∪ Q` when it is a cycle.
fn swap_in(c: &[(usize, usize)], p: &[(usize, usize)], q: &[(usize, usize)]) -> Option<Cycle> {
    let mut e: EdgeSet = c.iter().copied().filter(|x| p.binary_search(x).is_err()).collect();
    e.extend_from_slice(q);
    let e = sorted_edges(e);
    Cycle::from_edges(&e)
}

impl CountingBase {
    /// Normalises edge lists and families.
    pub fn new(
        kind: BaseKind,
        k: Option<usize>,
        paths: Vec<EdgeSet>,
        families: Vec<Vec<Cycle>>,
        sigma: Vec<usize>,
    ) -> Self {
        let paths = paths.into_iter().map(sorted_edges).collect();
        let families = families
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        Self {
            kind,
            k,
            paths,
            families,
            sigma,
        }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn id(&self) -> String {
        match self.k {
            Some(k) => format!("{}:k={k}", self.kind.name()),
            None => self.kind.name().to_string(),
        }
    }

    /// `σ(C, P_i)`.
    pub fn sigma_cycle(&self, c: &Cycle, i: usize) -> Option<Cycle> {
        swap_in(&c.edges(), &self.paths[i], &self.paths[self.sigma[i]])
    }

    /// Restriction to the edge sets with `keep[i]`; `keep` must be closed
    /// under `σ`.
    pub fn restrict(&self, keep: &[bool]) -> Result<Self, BaseError> {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| keep[i]).collect();
        let mut new_of = vec![usize::MAX; self.len()];
        for (j, &i) in idx.iter().enumerate() {
            new_of[i] = j;
        }
        let mut sigma = Vec::with_capacity(idx.len());
        for &i in &idx {
            let s = new_of[self.sigma[i]];
            if s == usize::MAX {
                return Err(BaseError::Malformed(format!("subset is not closed under sigma at #{i}")));
            }
            sigma.push(s);
        }
        Ok(Self {
            kind: self.kind,
            k: self.k,
            paths: idx.iter().map(|&i| self.paths[i].clone()).collect(),
            families: idx.iter().map(|&i| self.families[i].clone()).collect(),
            sigma,
        })
    }

    fn check_shape(&self, host: &PlaneGraph) -> Result<(), BaseError> {
        let m = self.len();
        if self.families.len() != m || self.sigma.len() != m {
            return Err(BaseError::Malformed("paths, families and sigma differ in length".into()));
        }
        if let Some(i) = (0..m).find(|&i| self.sigma[i] >= m) {
            return Err(BaseError::Malformed(format!("sigma of #{i} is out of range")));
        }
        let mut seen = BTreeSet::new();
        for (i, p) in self.paths.iter().enumerate() {
            if let Some(&(u, v)) = p.iter().find(|&&(u, v)| u >= host.order() || !host.is_adjacent(u, v)) {
                return Err(BaseError::Malformed(format!("#{i} uses non-edge {u}-{v}")));
            }
            if !seen.insert(p) {
                return Err(BaseError::Malformed(format!("edge set #{i} repeated")));
            }
        }
        for f in &self.families {
            for c in f {
                Cycle::new(c.vertices().to_vec(), host)?;
            }
        }
        Ok(())
    }

    /// Evaluates every axiom, with the first violation of each.
    pub fn check_axioms(&self, host: &PlaneGraph) -> Result<(AxiomReport, Vec<(Axiom, String)>), BaseError> {
        self.check_shape(host)?;
        let m = self.len();
        let edges: Vec<Vec<EdgeSet>> = self
            .families
            .par_iter()
            .map(|f| f.iter().map(Cycle::edges).collect())
            .collect();
        let owners = self.owners();
        let mut violations = Vec::new();

        let bad_i = (0..m).find_map(|i| {
            if self.families[i].is_empty() {
                return Some(format!("family of #{i} {:?} is empty", self.paths[i]));
            }
            edges[i]
                .iter()
                .position(|c| !is_subset(&self.paths[i], c))
                .map(|j| format!("{:?} does not contain #{i} {:?}", self.families[i][j], self.paths[i]))
        });
        if let Some(w) = bad_i {
            violations.push((Axiom::I, w));
        }

        let bad_ii = (0..m).into_par_iter().find_map_first(|i| {
            let s = self.sigma[i];
            if self.sigma[s] != i {
                return Some(format!("sigma(sigma(#{i})) = #{}", self.sigma[s]));
            }
            if is_subset(&self.paths[i], &self.paths[s]) {
                return Some(format!("#{i} {:?} is contained in its image #{s}", self.paths[i]));
            }
            for (c, ce) in self.families[i].iter().zip(&edges[i]) {
                let Some(img) = swap_in(ce, &self.paths[i], &self.paths[s]) else {
                    return Some(format!("sigma({c:?}, #{i}) is not a cycle"));
                };
                if self.families[s].binary_search(&img).is_err() {
                    return Some(format!("sigma({c:?}, #{i}) = {img:?} is not in the family of #{s}"));
                }
                let back = swap_in(&img.edges(), &self.paths[s], &self.paths[i]);
                if back.as_ref() != Some(c) {
                    return Some(format!("sigma is not an involution on {c:?}, #{i}"));
                }
            }
            None
        });
        if let Some(w) = bad_ii {
            violations.push((Axiom::Ii, w));
        }

        // owners lists, for every cycle, the edge sets whose family holds it
        let by_cycle: Vec<(&Cycle, &Vec<usize>)> = owners.iter().map(|(c, o)| (*c, o)).collect();
        let bad_iii_iv: Vec<(Option<String>, Option<String>)> = by_cycle
            .par_iter()
            .map(|&(c, own)| {
                let ce = c.edges();
                let images: Vec<Option<Cycle>> = own
                    .iter()
                    .map(|&i| swap_in(&ce, &self.paths[i], &self.paths[self.sigma[i]]))
                    .collect();
                let mut iii = None;
                let mut iv = None;
                for a in 0..own.len() {
                    for b in 0..own.len() {
                        if a == b {
                            continue;
                        }
                        let (p1, p2) = (own[a], own[b]);
                        if iii.is_none() && images[a].is_some() && images[a] == images[b] {
                            iii = Some(format!("#{p1} and #{p2} send {c:?} to the same cycle"));
                        }
                        if iv.is_none() && disjoint(&self.paths[p1], &self.paths[p2]) {
                            let ok = images[a]
                                .as_ref()
                                .is_some_and(|img| self.families[p2].binary_search(img).is_ok());
                            if !ok {
                                iv = Some(format!(
                                    "sigma({c:?}, #{p1}) is not in the family of disjoint #{p2}"
                                ));
                            }
                        }
                    }
                }
                (iii, iv)
            })
            .collect();
        if let Some(w) = bad_iii_iv.iter().find_map(|x| x.0.clone()) {
            violations.push((Axiom::Iii, w));
        }
        if let Some(w) = bad_iii_iv.iter().find_map(|x| x.1.clone()) {
            violations.push((Axiom::Iv, w));
        }
        let failed: BTreeSet<Axiom> = violations.iter().map(|v| v.0).collect();
        Ok((
            AxiomReport {
                i: !failed.contains(&Axiom::I),
                ii: !failed.contains(&Axiom::Ii),
                iii: !failed.contains(&Axiom::Iii),
                iv: !failed.contains(&Axiom::Iv),
            },
            violations,
        ))
    }

    fn owners(&self) -> BTreeMap<&Cycle, Vec<usize>> {
        let mut owners: BTreeMap<&Cycle, Vec<usize>> = BTreeMap::new();
        for (i, f) in self.families.iter().enumerate() {
            for c in f {
                owners.entry(c).or_default().push(i);
            }
        }
        owners
    }

    /// `o(C, P_i)` for every pair, as `(i, cycle, overlap)`.
    pub fn overlaps(&self) -> Vec<(usize, Cycle, usize)> {
        let owners = self.owners();
        (0..self.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let owners = &owners;
                self.families[i].iter().map(move |c| {
                    let o = owners[c]
                        .iter()
                        .filter(|&&j| !disjoint(&self.paths[i], &self.paths[j]))
                        .count();
                    (i, c.clone(), o)
                })
            })
            .collect()
    }

    pub fn max_overlap(&self) -> usize {
        self.overlaps().iter().map(|x| x.2).max().unwrap_or(0)
    }

    /// Distinct cycles over all families.
    pub fn union_size(&self) -> usize {
        self.owners().len()
    }

    /// Checks axioms (i) to (iv) in order and, when all hold, the bound.
    pub fn validate(&self, host: &PlaneGraph) -> Result<Certificate, BaseError> {
        if self.is_empty() {
            return Err(BaseError::EmptyP);
        }
        let (axioms, violations) = self.check_axioms(host)?;
        if let Some((axiom, witness)) = violations.into_iter().next() {
            return Err(BaseError::AxiomViolation { axiom, witness });
        }
        let o = self.max_overlap();
        let witnessed = self.union_size();
        Ok(Certificate {
            base_id: self.id(),
            p_count: self.len(),
            max_overlap: o,
            bound_num: self.len(),
            bound_den: o,
            witnessed,
            axioms,
            bound_holds: witnessed * o >= self.len(),
        })
    }
}

fn check_k(g: &PlaneGraph, k: usize, lo: usize) -> Result<(), BaseError> {
    let hi = g.order();
    if k < lo || k > hi {
        return Err(BaseError::OutOfRange { k, lo, hi });
    }
    Ok(())
}

fn index_sigma(paths: &[EdgeSet], image: impl Fn(usize) -> EdgeSet) -> Result<Vec<usize>, BaseError> {
    let index: HashMap<&EdgeSet, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    (0..paths.len())
        .map(|i| {
            let q = sorted_edges(image(i));
            index
                .get(&q)
                .copied()
                .ok_or_else(|| BaseError::Malformed(format!("image of #{i} is not in the base")))
        })
        .collect()
}

/// Length range over which the good-edge zigzag base is known to be a
/// counting base for an `n`-vertex triangulation; `None` when empty.
pub fn zigzag_t3_stated_range(n: usize) -> Option<(usize, usize)> {
    if n < 4 {
        return None;
    }
    let x = (n as f64 - 3.0) / 2.0;
    let hi = x.powf(2f64.ln() / 3f64.ln()).ceil() as usize + 3;
    (hi >= 7).then_some((7, hi.min(n)))
}

/// Zigzag base with `C_P` all `k`-cycles through `P`; `σ` reverses the
/// internal edge. Accepts `4 <= k <= n`; whether the result is a counting
/// base is left to [`CountingBase::validate`].
pub fn build_zigzag_base(
    g: &PlanarTriangulation,
    k: usize,
    kind: BaseKind,
    opts: &EnumOptions,
) -> Result<CountingBase, BaseError> {
    let filter = match kind {
        BaseKind::ZigzagT3 => ZigzagFilter::GoodInternalEdge,
        BaseKind::Zigzag6i => ZigzagFilter::DegreeProfile,
        _ => return Err(BaseError::Malformed(format!("{} is not a zigzag base", kind.name()))),
    };
    check_k(g, k, 4)?;
    let zz = zigzag_paths(g, filter);
    if zz.is_empty() {
        return Err(BaseError::EmptyP);
    }
    let serial = opts.with_jobs(1);
    let families: Vec<Vec<Cycle>> = zz
        .par_iter()
        .map(|z| cycles_through(g, &z.vertices(), k, &serial))
        .collect::<Result<_, _>>()?;
    let paths: Vec<EdgeSet> = zz.iter().map(|z| z.edges()).collect();
    if let Some(i) = families.iter().position(Vec::is_empty) {
        return Err(BaseError::EmptyFamily {
            index: i,
            path: paths[i].clone(),
        });
    }
    let sigma = index_sigma(&paths, |i| zz[i].swapped().edges())?;
    Ok(CountingBase::new(kind, Some(k), paths, families, sigma))
}

/// Smallest admissible cycle length for the separating 4-cycle base: the
/// least `t` with `t >= n/2 + sqrt(n/2 - 2)`, plus 2.
pub fn sep4_min_k(n: usize) -> usize {
    let (n, target) = (n as i64, 2 * (n as i64 - 4));
    let mut t = (n + 1) / 2;
    while 2 * t - n < 0 || (2 * t - n).pow(2) < target {
        t += 1;
    }
    t as usize + 2
}

/// Whether `c` leaves `a` (away from `b`) and reaches `c_end` before `d`.
fn pairs_diagonally(c: &Cycle, a: usize, b: usize, c_end: usize, d: usize) -> bool {
    let v = c.vertices();
    let k = v.len();
    let pos = |x: usize| v.iter().position(|&y| y == x);
    let Some(pa) = pos(a) else {
        return false;
    };
    if v[(pa + 1) % k] != b && v[(pa + k - 1) % k] != b {
        return false;
    }
    let step = if v[(pa + 1) % k] == b { k - 1 } else { 1 };
    let mut i = (pa + step) % k;
    loop {
        if v[i] == c_end {
            return true;
        }
        if v[i] == d {
            return false;
        }
        i = (i + step) % k;
    }
}

/// Base on the independent edge pairs of 4-cycles in `s`: for `v1v2v3v4`,
/// `{v1v2, v3v4}` and `{v2v3, v4v1}`, swapped by `σ`; `C_P` holds the
/// `k`-cycles through `P` whose remaining edges join `v1` to `v3` and `v2`
/// to `v4`.
pub fn build_sep4_base(
    g: &PlanarTriangulation,
    s: &[Cycle],
    k: usize,
    opts: &EnumOptions,
) -> Result<CountingBase, BaseError> {
    if !g.is_four_connected() {
        return Err(BaseError::NotFourConnected);
    }
    check_k(g, k, sep4_min_k(g.order()))?;
    if s.is_empty() {
        return Err(BaseError::EmptyP);
    }
    // (a, b, c, d): pair {ab, cd}, remainder joins a-c and b-d
    let mut corners: Vec<[usize; 4]> = Vec::with_capacity(2 * s.len());
    for c in s {
        let v = c.vertices();
        if v.len() != 4 || Cycle::new(v.to_vec(), g).is_err() {
            return Err(BaseError::Malformed(format!("{c:?} is not a 4-cycle of the host")));
        }
        corners.push([v[0], v[1], v[2], v[3]]);
        corners.push([v[1], v[2], v[3], v[0]]);
    }
    let paths: Vec<EdgeSet> = corners
        .iter()
        .map(|&[a, b, c, d]| sorted_edges(vec![(a, b), (c, d)]))
        .collect();
    let all = cycles(g, &EnumOptions::exact(k).with_budget(opts.budget).with_jobs(opts.jobs))?;
    let all_edges: Vec<EdgeSet> = all.iter().map(Cycle::edges).collect();
    let families: Vec<Vec<Cycle>> = corners
        .par_iter()
        .zip(&paths)
        .map(|(&[a, b, c, d], p)| {
            all.iter()
                .zip(&all_edges)
                .filter(|(cy, e)| is_subset(p, e) && pairs_diagonally(cy, a, b, c, d))
                .map(|(cy, _)| cy.clone())
                .collect()
        })
        .collect();
    if let Some(i) = families.iter().position(|f: &Vec<Cycle>| f.is_empty()) {
        return Err(BaseError::EmptyFamily {
            index: i,
            path: paths[i].clone(),
        });
    }
    let sigma: Vec<usize> = (0..paths.len()).map(|i| i ^ 1).collect();
    Ok(CountingBase::new(BaseKind::Sep4, Some(k), paths, families, sigma))
}

/// Self-contained certificate: host embedding, base and claimed result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub version: u32,
    pub host: Vec<Vec<usize>>,
    pub base: CountingBase,
    pub certificate: Certificate,
}

impl CertificateDocument {
    pub fn new(host: &PlaneGraph, base: CountingBase, certificate: Certificate) -> Self {
        Self {
            version: 1,
            host: host.rotation_system().lists().to_vec(),
            base,
            certificate,
        }
    }

    /// JSON with keys in sorted order.
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("certificate serialises");
        serde_json::to_string_pretty(&v).expect("value serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, BaseError> {
        serde_json::from_str(s).map_err(|e| BaseError::Json(e.to_string()))
    }

    /// Re-validates the base against the host and compares with the stored
    /// certificate.
    pub fn recheck(&self) -> Result<Certificate, BaseError> {
        let host = PlaneGraph::new(RotationSystem::new(self.host.clone())?)?;
        let cert = self.base.validate(&host)?;
        if cert != self.certificate {
            return Err(BaseError::Mismatch(format!(
                "recomputed {cert:?}, stored {:?}",
                self.certificate
            )));
        }
        if !cert.bound_holds {
            return Err(BaseError::Mismatch("bound fails".into()));
        }
        Ok(cert)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{iota, separating_cycles, spectrum};
    use crate::generators::double_wheel;
    use crate::plane_graph::fixtures::{k4, octahedron};
    use proptest::prelude::*;

    fn tri(rot: Vec<Vec<usize>>) -> PlanarTriangulation {
        PlanarTriangulation::from_rotation_system(rot).unwrap()
    }

    fn k4_pair() -> (PlanarTriangulation, CountingBase) {
        let g = tri(k4());
        let p0 = vec![(0, 2), (0, 1), (1, 3)];
        let p1 = vec![(1, 2), (0, 1), (0, 3)];
        let c0 = Cycle::new(vec![2, 0, 1, 3], &g).unwrap();
        let c1 = Cycle::new(vec![2, 1, 0, 3], &g).unwrap();
        let b = CountingBase::new(BaseKind::Custom, Some(4), vec![p0, p1], vec![vec![c0], vec![c1]], vec![1, 0]);
        (g, b)
    }

    #[test]
    fn k4_two_element_base() {
        let (g, b) = k4_pair();
        let cert = b.validate(&g).unwrap();
        assert_eq!((cert.bound_num, cert.bound_den), (2, 1));
        assert_eq!(cert.witnessed, 2);
        assert!(cert.bound_holds);
    }

    #[test]
    fn singleton_violates_ii() {
        let g = tri(k4());
        let c = Cycle::new(vec![2, 0, 1, 3], &g).unwrap();
        let b = CountingBase::new(BaseKind::Custom, None, vec![vec![(0, 2), (0, 1), (1, 3)]], vec![vec![c]], vec![0]);
        match b.validate(&g) {
            Err(BaseError::AxiomViolation { axiom, .. }) => assert_eq!(axiom, Axiom::Ii),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn foreign_cycle_violates_i() {
        let (g, mut b) = k4_pair();
        b.families[0].push(Cycle::new(vec![0, 1, 2], &g).unwrap());
        let (rep, _) = b.check_axioms(&g).unwrap();
        assert!(!rep.i);
    }

    #[test]
    fn k4_has_no_degree_profile_paths() {
        let g = tri(k4());
        assert_eq!(
            build_zigzag_base(&g, 4, BaseKind::Zigzag6i, &EnumOptions::default()),
            Err(BaseError::EmptyP)
        );
    }

    #[test]
    fn octahedron_zigzag_k6() {
        let g = tri(octahedron());
        let b = build_zigzag_base(&g, 6, BaseKind::Zigzag6i, &EnumOptions::default()).unwrap();
        assert_eq!(b.len(), 24);
        let cert = b.validate(&g).unwrap();
        assert!(cert.max_overlap >= 1 && cert.max_overlap <= 5);
        assert!(cert.bound_holds);
        assert!(cert.witnessed <= 16);
    }

    #[test]
    fn octahedron_sep4() {
        let g = tri(octahedron());
        assert_eq!(sep4_min_k(6), 6);
        let s: Vec<Cycle> = separating_cycles(&g, 4).unwrap().into_iter().map(|r| r.cycle).collect();
        assert_eq!(s.len(), 3);
        assert_eq!(iota(&s), 0);
        let b = build_sep4_base(&g, &s, 6, &EnumOptions::default()).unwrap();
        assert_eq!(b.len(), 6);
        let cert = b.validate(&g).unwrap();
        assert!(cert.max_overlap <= iota(&s) + 1);
        assert_eq!((cert.bound_num, cert.bound_den), (6, 1));
        let h = spectrum(&g, &EnumOptions::default()).unwrap().count(6);
        assert!(cert.witnessed as u64 <= h);
        assert!(build_sep4_base(&g, &s, 5, &EnumOptions::default()).is_err());
        for c in &b.families[0] {
            assert!(b.families[b.sigma[0]].binary_search(&b.sigma_cycle(c, 0).unwrap()).is_ok());
            assert!(b.families[0].binary_search(&b.sigma_cycle(c, 0).unwrap()).is_err());
        }
    }

    #[test]
    fn sep4_thresholds() {
        for n in 6..=40usize {
            let k = sep4_min_k(n);
            let t = (k - 2) as f64;
            let x = n as f64 / 2.0 + (n as f64 / 2.0 - 2.0).sqrt();
            assert!(t >= x - 1e-9 && t - 1.0 < x - 1e-9, "n = {n}");
        }
    }

    #[test]
    fn double_wheel_bases() {
        let g = double_wheel(10).unwrap();
        let b = build_zigzag_base(&g, 7, BaseKind::Zigzag6i, &EnumOptions::default()).unwrap();
        let cert = b.validate(&g).unwrap();
        let c7 = spectrum(&g, &EnumOptions::default()).unwrap().count(7);
        assert!(cert.max_overlap <= 5);
        assert!(cert.bound() <= c7 as f64);
        assert!(cert.witnessed as u64 <= c7);
    }

    #[test]
    fn certificate_round_trip() {
        let (g, b) = k4_pair();
        let cert = b.validate(&g).unwrap();
        let doc = CertificateDocument::new(&g, b, cert);
        let text = doc.to_canonical_json();
        let back = CertificateDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_canonical_json(), text);
        assert!(back.recheck().is_ok());
        let mut forged = back.clone();
        forged.certificate.bound_num = 3;
        assert!(forged.recheck().is_err());
    }

    #[test]
    fn stated_t3_range_is_empty_for_small_n() {
        for n in 4..=14 {
            assert_eq!(zigzag_t3_stated_range(n), None);
        }
        assert_eq!(zigzag_t3_stated_range(15), Some((7, 7)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn sub_bases_keep_the_bound(mask in proptest::collection::vec(any::<bool>(), 12)) {
            let g = tri(octahedron());
            let b = build_zigzag_base(&g, 6, BaseKind::Zigzag6i, &EnumOptions::default()).unwrap();
            let mut keep = vec![false; b.len()];
            for i in 0..b.len() {
                if mask[i % 12] || i % 5 == 0 {
                    keep[i] = true;
                    keep[b.sigma[i]] = true;
                }
            }
            let sub = b.restrict(&keep).unwrap();
            let cert = sub.validate(&g).unwrap();
            prop_assert!(cert.bound_holds);
            prop_assert!(cert.max_overlap >= 1);
        }
    }
}
