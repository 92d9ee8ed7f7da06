//! Per-instance invariant checks shared by the suite runner and the
//! acceptance battery.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::counting_base::{
    build_sep4_base, build_zigzag_base, sep4_min_k, BaseError, BaseKind, Certificate,
};
use crate::cycles::{cycle_sides, iota, separating_cycles, spectrum, Cycle, CycleError, CycleSpectrum, EnumOptions};
use crate::dual::{lemma1_check, radius_diameter, DualGraph};
use crate::plane_graph::{NearTriangulation, PlanarTriangulation};
use crate::procedures::{dual_induced_path, lemma2_cycles, theorem3_family, zigzag_paths, ZigzagFilter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `|F| = 2n - 4`, `|E| = 3n - 6`.
    Structure,
    /// Every length from 3 to the circumference occurs.
    WeakPancyclic,
    /// Hamiltonian instances on at least 5 vertices have 4 hamiltonian cycles.
    HamiltonianFour,
    /// `c5 <= 2n^2 - 10n + 12`.
    FiveCycleMax,
    /// At least `n - 2` cycles of each length up to `rad(G*) + 3`.
    ShortCycleFamily,
    /// Boundary-peeling intervals on re-rooted and vertex-deleted disks.
    Lemma2,
    /// Weak-dual path criterion on derived near triangulations (n <= 10).
    Lemma1,
    /// Zigzag and separating 4-cycle counting bases.
    CountingBases,
    /// Full spectrum and zigzag lower bound on 4-connected instances.
    FourConnectedSpectrum,
    /// `c5` against `6n`; recorded only.
    FiveCycleSixN,
    /// Counts of `(n - q)`-cycles for `q = 0, 1, 2`; recorded only.
    LongCycles,
    /// `circ <= 9 n^{log_3 2}`.
    Circumference,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Structure,
        Check::WeakPancyclic,
        Check::HamiltonianFour,
        Check::FiveCycleMax,
        Check::ShortCycleFamily,
        Check::Lemma2,
        Check::Lemma1,
        Check::CountingBases,
        Check::FourConnectedSpectrum,
        Check::FiveCycleSixN,
        Check::LongCycles,
        Check::Circumference,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Not applicable to this instance.
    Skip,
    /// Enumeration budget exhausted.
    Budget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub base: String,
    pub k: usize,
    pub p_count: usize,
    pub max_overlap: usize,
    pub witnessed: usize,
    pub axioms_ok: bool,
    pub bound_holds: bool,
    /// Cap on the overlap for this kind of base.
    pub overlap_cap: usize,
}

impl CertificateSummary {
    fn from_cert(c: &Certificate, k: usize, overlap_cap: usize) -> Self {
        Self {
            base: c.base_id.clone(),
            k,
            p_count: c.p_count,
            max_overlap: c.max_overlap,
            witnessed: c.witnessed,
            axioms_ok: c.axioms.all(),
            bound_holds: c.bound_holds,
            overlap_cap,
        }
    }

    pub fn ok(&self) -> bool {
        self.axioms_ok && self.bound_holds && self.max_overlap <= self.overlap_cap
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    pub observed: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CertificateSummary>,
}

impl CheckOutcome {
    fn new(check: Check, ok: bool, observed: impl Into<String>) -> Self {
        Self {
            check,
            status: if ok { Status::Pass } else { Status::Fail },
            observed: observed.into(),
            certificates: Vec::new(),
        }
    }

    fn skip(check: Check, why: impl Into<String>) -> Self {
        Self {
            check,
            status: Status::Skip,
            observed: why.into(),
            certificates: Vec::new(),
        }
    }

    fn budget(check: Check, what: impl Into<String>) -> Self {
        Self {
            check,
            status: Status::Budget,
            observed: what.into(),
            certificates: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// A triangulation with its (possibly length-restricted) spectrum.
#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub graph: PlanarTriangulation,
    pub spectrum: Result<CycleSpectrum, CycleError>,
    pub opts: EnumOptions,
}

impl Instance {
    /// Enumerates lengths `min_len..=n`.
    pub fn new(label: impl Into<String>, graph: PlanarTriangulation, opts: EnumOptions) -> Self {
        let spectrum = spectrum(&graph, &opts);
        Self {
            label: label.into(),
            graph,
            spectrum,
            opts,
        }
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    fn full_spectrum(&self) -> Option<&CycleSpectrum> {
        self.spectrum
            .as_ref()
            .ok()
            .filter(|s| s.min_len <= 3 && s.max_len >= self.n())
    }

    pub fn hamiltonian_count(&self) -> Option<u64> {
        self.spectrum
            .as_ref()
            .ok()
            .filter(|s| s.max_len >= self.n())
            .map(|s| s.count(self.n()))
    }

    pub fn circumference(&self) -> Option<usize> {
        self.full_spectrum().and_then(CycleSpectrum::longest)
    }

    pub fn run(&self, check: Check) -> CheckOutcome {
        match check {
            Check::Structure => self.structure(),
            Check::WeakPancyclic => self.weak_pancyclic(),
            Check::HamiltonianFour => self.hamiltonian_four(),
            Check::FiveCycleMax => self.five_cycle_max(),
            Check::ShortCycleFamily => self.short_cycle_family(),
            Check::Lemma2 => self.lemma2(),
            Check::Lemma1 => self.lemma1(),
            Check::CountingBases => self.counting_bases(),
            Check::FourConnectedSpectrum => self.four_connected_spectrum(),
            Check::FiveCycleSixN => self.five_cycle_six_n(),
            Check::LongCycles => self.long_cycles(),
            Check::Circumference => self.circumference_check(),
        }
    }

    fn need_full(&self, check: Check) -> Result<&CycleSpectrum, CheckOutcome> {
        match &self.spectrum {
            Err(CycleError::BudgetExceeded { budget }) => {
                Err(CheckOutcome::budget(check, format!("budget {budget} exceeded")))
            }
            Err(e) => Err(CheckOutcome::new(check, false, e.to_string())),
            Ok(_) => self
                .full_spectrum()
                .ok_or_else(|| CheckOutcome::skip(check, "spectrum restricted")),
        }
    }

    fn structure(&self) -> CheckOutcome {
        let g = &self.graph;
        let (n, m, f) = (g.order(), g.size(), g.faces().len());
        let ok = f + 4 == 2 * n && m + 6 == 3 * n;
        CheckOutcome::new(Check::Structure, ok, format!("n={n} m={m} f={f}"))
    }

    fn weak_pancyclic(&self) -> CheckOutcome {
        let s = match self.need_full(Check::WeakPancyclic) {
            Ok(s) => s,
            Err(o) => return o,
        };
        let circ = s.longest().unwrap_or(0);
        let missing: Vec<usize> = (3..=circ).filter(|&k| s.count(k) == 0).collect();
        CheckOutcome::new(
            Check::WeakPancyclic,
            missing.is_empty(),
            format!("circ={circ} missing={missing:?}"),
        )
    }

    fn hamiltonian_four(&self) -> CheckOutcome {
        let n = self.n();
        let Some(h) = self.hamiltonian_count() else {
            return match &self.spectrum {
                Err(CycleError::BudgetExceeded { budget }) => {
                    CheckOutcome::budget(Check::HamiltonianFour, format!("budget {budget} exceeded"))
                }
                _ => CheckOutcome::skip(Check::HamiltonianFour, "hamiltonian length not enumerated"),
            };
        };
        if n < 5 || h == 0 {
            return CheckOutcome::skip(Check::HamiltonianFour, format!("n={n} h={h}"));
        }
        CheckOutcome::new(Check::HamiltonianFour, h >= 4, format!("h={h}"))
    }

    fn five_cycle_max(&self) -> CheckOutcome {
        let s = match self.need_full(Check::FiveCycleMax) {
            Ok(s) => s,
            Err(o) => return o,
        };
        let n = self.n() as u64;
        let cap = 2 * n * n + 12 - 10 * n;
        let c5 = s.count(5);
        CheckOutcome::new(Check::FiveCycleMax, c5 <= cap, format!("c5={c5} cap={cap}"))
    }

    fn five_cycle_six_n(&self) -> CheckOutcome {
        let s = match self.need_full(Check::FiveCycleSixN) {
            Ok(s) => s,
            Err(o) => return o,
        };
        let c5 = s.count(5);
        let six_n = 6 * self.n() as u64;
        CheckOutcome::new(
            Check::FiveCycleSixN,
            true,
            format!("c5={c5} 6n={six_n} below={}", c5 < six_n),
        )
    }

    fn short_cycle_family(&self) -> CheckOutcome {
        let check = Check::ShortCycleFamily;
        let s = match self.need_full(check) {
            Ok(s) => s,
            Err(o) => return o,
        };
        let g = &self.graph;
        let n = g.order();
        let rad = match DualGraph::full(g).and_then(|d| radius_diameter(&d.adjacency())) {
            Ok((r, _)) => r,
            Err(e) => return CheckOutcome::new(check, false, e.to_string()),
        };
        let mut sizes = Vec::new();
        let mut problems = Vec::new();
        for k in 3..=rad + 3 {
            match theorem3_family(g, k) {
                Ok(fam) => {
                    sizes.push(fam.cycles.len());
                    if fam.cycles.len() + 2 < n {
                        problems.push(format!("k={k}: {} < n-2", fam.cycles.len()));
                    }
                    if s.count(k) + 2 < n as u64 {
                        problems.push(format!("k={k}: c_k={} < n-2", s.count(k)));
                    }
                    for c in &fam.cycles {
                        if c.len() != k || Cycle::new(c.vertices().to_vec(), g).is_err() {
                            problems.push(format!("k={k}: {c:?} is not a host {k}-cycle"));
                        } else if !cycle_sides(g, c).0.is_empty() {
                            problems.push(format!("k={k}: {c:?} has two nonempty sides"));
                        }
                    }
                }
                Err(e) => problems.push(format!("k={k}: {e}")),
            }
        }
        CheckOutcome::new(
            check,
            problems.is_empty(),
            if problems.is_empty() {
                format!("rad={rad} sizes={sizes:?}")
            } else {
                format!("rad={rad} {}", problems.join("; "))
            },
        )
    }

    /// Disks obtained by re-rooting at every face and by deleting every
    /// vertex. A deletion leaving a single triangle is dropped.
    pub fn derived_near_triangulations(&self) -> Vec<(String, NearTriangulation)> {
        let g = &self.graph;
        let mut out = Vec::new();
        for f in 0..g.faces().len() {
            if let Ok(nt) = NearTriangulation::from_triangulation(g, f) {
                out.push((format!("outer face {f}"), nt));
            }
        }
        for v in 0..g.order() {
            let faces: Vec<usize> = (0..g.faces().len()).filter(|&f| !g.face(f).contains(v)).collect();
            if faces.len() < 2 {
                continue;
            }
            if let Ok(nt) = NearTriangulation::from_face_set(g.graph(), &faces) {
                out.push((format!("minus vertex {v}"), nt));
            }
        }
        out
    }

    fn lemma2(&self) -> CheckOutcome {
        let mut runs = 0;
        let mut problems = Vec::new();
        for (what, nt) in self.derived_near_triangulations() {
            if let Err(e) = lemma2_all_anchors(&nt, &mut runs) {
                problems.push(format!("{what}: {e}"));
            }
        }
        CheckOutcome::new(
            Check::Lemma2,
            problems.is_empty(),
            if problems.is_empty() {
                format!("{runs} intervals covered")
            } else {
                problems.join("; ")
            },
        )
    }

    fn lemma1(&self) -> CheckOutcome {
        if self.n() > 10 {
            return CheckOutcome::skip(Check::Lemma1, "n > 10");
        }
        let mut disks: Vec<(String, NearTriangulation)> = self.derived_near_triangulations();
        disks.extend(self.dual_path_disks());
        let mut hyp = 0;
        let mut bad = Vec::new();
        for (what, nt) in &disks {
            match lemma1_check(nt) {
                Ok(r) => {
                    if r.hypothesis_holds {
                        hyp += 1;
                        if !r.weak_dual_is_path {
                            bad.push(what.clone());
                        }
                    }
                }
                Err(e) => bad.push(format!("{what}: {e}")),
            }
        }
        CheckOutcome::new(
            Check::Lemma1,
            bad.is_empty(),
            format!("disks={} hypothesis={hyp} counterexamples={bad:?}", disks.len()),
        )
    }

    /// Terminal regions of the induced dual path procedure between every
    /// pair of faces.
    pub fn dual_path_disks(&self) -> Vec<(String, NearTriangulation)> {
        let g = &self.graph;
        let nf = g.faces().len();
        let mut out = Vec::new();
        for f1 in 0..nf {
            for f2 in f1 + 1..nf {
                if let Ok(p) = dual_induced_path(g, f1, f2) {
                    if p.faces.len() >= 2 {
                        if let Ok(nt) = NearTriangulation::from_face_set(g.graph(), &p.faces) {
                            out.push((format!("path {f1}-{f2}"), nt));
                        }
                    }
                }
            }
        }
        out
    }

    /// Constructs and validates the bases for every length in range.
    pub fn certificates(&self) -> Result<(Vec<CertificateSummary>, Vec<String>), CycleError> {
        let g = &self.graph;
        let n = g.order();
        let opts = self.opts.with_jobs(0);
        let mut certs = Vec::new();
        let mut notes = Vec::new();
        let few_triangles = g.separating_triangles().len() <= 1;
        let mut t3_range: Vec<usize> = Vec::new();
        for k in 7..=n {
            if few_triangles {
                match build_zigzag_base(g, k, BaseKind::Zigzag6i, &opts) {
                    Ok(b) => match b.validate(g) {
                        Ok(c) => certs.push(CertificateSummary::from_cert(&c, k, 5)),
                        Err(e) => notes.push(format!("FAIL zigzag6i k={k}: {e}")),
                    },
                    Err(BaseError::EmptyP) => notes.push(format!("zigzag6i k={k}: no paths")),
                    Err(BaseError::Cycle(e)) => return Err(e),
                    Err(e) => notes.push(format!("FAIL zigzag6i k={k}: {e}")),
                }
            }
            match build_zigzag_base(g, k, BaseKind::ZigzagT3, &opts) {
                Ok(b) => match b.validate(g) {
                    Ok(c) => {
                        t3_range.push(k);
                        certs.push(CertificateSummary::from_cert(&c, k, 5));
                    }
                    Err(e) => notes.push(format!("FAIL zigzag-t3 k={k}: {e}")),
                },
                Err(BaseError::EmptyP | BaseError::EmptyFamily { .. }) => {}
                Err(BaseError::Cycle(e)) => return Err(e),
                Err(e) => notes.push(format!("FAIL zigzag-t3 k={k}: {e}")),
            }
        }
        notes.push(format!("zigzag-t3 valid for k in {t3_range:?}"));
        if g.is_four_connected() && n >= 6 {
            let s: Vec<Cycle> = separating_cycles(g, 4)?.into_iter().map(|r| r.cycle).collect();
            if !s.is_empty() {
                let cap = iota(&s) + 1;
                for k in sep4_min_k(n)..=n {
                    match build_sep4_base(g, &s, k, &opts) {
                        Ok(b) => match b.validate(g) {
                            Ok(c) => certs.push(CertificateSummary::from_cert(&c, k, cap)),
                            Err(e) => notes.push(format!("FAIL sep4 k={k}: {e}")),
                        },
                        Err(BaseError::Cycle(e)) => return Err(e),
                        Err(e) => notes.push(format!("FAIL sep4 k={k}: {e}")),
                    }
                }
            }
        }
        Ok((certs, notes))
    }

    fn counting_bases(&self) -> CheckOutcome {
        let check = Check::CountingBases;
        match self.certificates() {
            Err(CycleError::BudgetExceeded { budget }) => {
                CheckOutcome::budget(check, format!("budget {budget} exceeded"))
            }
            Err(e) => CheckOutcome::new(check, false, e.to_string()),
            Ok((certs, notes)) => {
                let bad: Vec<&CertificateSummary> = certs.iter().filter(|c| !c.ok()).collect();
                let failed_notes = notes.iter().filter(|s| s.starts_with("FAIL")).count();
                let ok = bad.is_empty() && failed_notes == 0;
                let mut o = CheckOutcome::new(
                    check,
                    ok,
                    format!("{} certificates, {} bad; {}", certs.len(), bad.len(), notes.join("; ")),
                );
                o.certificates = certs;
                o
            }
        }
    }

    fn four_connected_spectrum(&self) -> CheckOutcome {
        let check = Check::FourConnectedSpectrum;
        if !self.graph.is_four_connected() {
            return CheckOutcome::skip(check, "not 4-connected");
        }
        let s = match self.need_full(check) {
            Ok(s) => s,
            Err(o) => return o,
        };
        let n = self.n();
        let p = zigzag_paths(&self.graph, ZigzagFilter::DegreeProfile).len() as u64;
        let missing: Vec<usize> = (3..=n).filter(|&k| s.count(k) == 0).collect();
        let short: Vec<usize> = (7..=n).filter(|&k| 5 * s.count(k) < p).collect();
        CheckOutcome::new(
            check,
            missing.is_empty() && short.is_empty(),
            format!("|P|={p} missing={missing:?} below_bound={short:?}"),
        )
    }

    fn long_cycles(&self) -> CheckOutcome {
        let check = Check::LongCycles;
        let s = match &self.spectrum {
            Ok(s) => s,
            Err(CycleError::BudgetExceeded { budget }) => {
                return CheckOutcome::budget(check, format!("budget {budget} exceeded"))
            }
            Err(e) => return CheckOutcome::new(check, false, e.to_string()),
        };
        let n = self.n();
        let counts: Vec<String> = (0..=2)
            .filter(|&q| n >= q + 3 && s.min_len <= n - q)
            .map(|q| format!("q={q}:{}", s.count(n - q)))
            .collect();
        CheckOutcome::new(check, true, counts.join(" "))
    }

    fn circumference_check(&self) -> CheckOutcome {
        let check = Check::Circumference;
        let s = match self.need_full(check) {
            Ok(s) => s,
            Err(o) => return o,
        };
        let n = self.n();
        let circ = s.longest().unwrap_or(0);
        let cap = circumference_cap(n);
        CheckOutcome::new(
            check,
            (circ as f64) <= cap,
            format!("circ={circ} hamiltonian={} cap={cap:.2}", circ == n),
        )
    }
}

/// `9 n^{log_3 2}`.
pub fn circumference_cap(n: usize) -> f64 {
    9.0 * (n as f64).powf(2f64.ln() / 3f64.ln())
}

/// Runs the peeling procedure for every consecutive outer triple (and
/// every valid fourth anchor), counting successful runs.
pub fn lemma2_all_anchors(nt: &NearTriangulation, runs: &mut usize) -> Result<(), String> {
    let c = nt.outer_cycle().to_vec();
    let k = c.len();
    let faces: BTreeSet<[usize; 3]> = nt
        .bounded_faces()
        .map(|f| {
            let mut t = [f.boundary[0], f.boundary[1], f.boundary[2]];
            t.sort_unstable();
            t
        })
        .collect();
    for i in 0..k {
        for dir in [1, k - 1] {
            let (v1, v2, v3) = (c[i], c[(i + dir) % k], c[(i + 2 * dir) % k]);
            let v4 = c[(i + 3 * dir) % k];
            let check = |r: &crate::procedures::CycleInterval| -> Result<(), String> {
                if (r.lo..=r.hi).any(|l| !r.witnesses.contains_key(&l)) {
                    return Err(format!("gap in {}..={}", r.lo, r.hi));
                }
                if r.boundary_lengths.windows(2).any(|w| w[0].abs_diff(w[1]) != 1) {
                    return Err("boundary length jump".into());
                }
                Ok(())
            };
            let r = lemma2_cycles(nt, v1, v2, v3, None).map_err(|e| format!("{v1}-{v2}-{v3}: {e}"))?;
            check(&r)?;
            *runs += 1;
            let mut t = [v2, v3, v4];
            t.sort_unstable();
            if k >= 4 && v4 != v1 && faces.contains(&t) {
                let r = lemma2_cycles(nt, v1, v2, v3, Some(v4))
                    .map_err(|e| format!("{v1}-{v2}-{v3}-{v4}: {e}"))?;
                check(&r)?;
                *runs += 1;
            }
        }
    }
    Ok(())
}
