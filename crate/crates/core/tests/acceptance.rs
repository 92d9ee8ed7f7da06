//! Acceptance battery: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`). The exit status is non-zero
//! when any criterion fails, except those listed in `KNOWN_FAILURES`, whose
//! failure is analysed in the README.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tricensus::checks::{circumference_cap, Check, Instance};
use tricensus::counting_base::build_sep4_base;
use tricensus::cycles::{cycles_through, iota, separating_cycles, spectrum, Cycle, EnumOptions};
use tricensus::dual::lemma1_check;
use tricensus::generators::{
    double_wheel, g_p, random_near_triangulation, ApexAssignment, FamilySpec, A, B, C, D,
};
use tricensus::plane_graph::{PlanarTriangulation, PlaneGraph};
use tricensus::procedures::{lemma2_cycles, theorem3_family};

/// The 5-cycle cap is exceeded by the 7-vertex double wheel (41 > 40).
const KNOWN_FAILURES: &[u32] = &[4];

struct Line {
    id: u32,
    name: &'static str,
    ok: bool,
    detail: String,
}

fn corpus() -> Vec<Instance> {
    let mut specs = Vec::new();
    specs.extend((5..=14).map(|n| (FamilySpec::DoubleWheel { n }, None)));
    specs.extend((6..=14).map(|n| (FamilySpec::FlippedDoubleWheel { n }, None)));
    specs.extend((0..=2).map(|depth| (FamilySpec::Stacked { depth }, None)));
    specs.extend((1..=3).map(|p| {
        (
            FamilySpec::GP {
                p,
                apex: ApexAssignment::default(),
            },
            None,
        )
    }));
    specs.push((
        FamilySpec::GP {
            p: 4,
            apex: ApexAssignment::default(),
        },
        Some(3),
    ));
    for n in 4..=14 {
        for seed in 1..=3 {
            specs.push((FamilySpec::Random { n, seed }, None));
        }
    }
    specs
        .into_iter()
        .map(|(spec, long_only)| {
            let g = spec.generate().expect("generator");
            let min_len = long_only.map_or(3, |q: usize| g.order() - q);
            let opts = EnumOptions {
                min_len,
                ..EnumOptions::default()
            };
            Instance::new(spec.label(), g, opts)
        })
        .collect()
}

/// Naive cycle count by extending vertex sequences from their smallest
/// vertex; independent of the library enumerator.
fn brute_counts(g: &PlaneGraph) -> Vec<u64> {
    let n = g.order();
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.is_adjacent(u, v)).collect()).collect();
    let mut counts = vec![0u64; n + 1];
    fn go(adj: &[Vec<bool>], seq: &mut Vec<usize>, used: &mut [bool], counts: &mut [u64]) {
        let (s, last) = (seq[0], *seq.last().unwrap());
        if seq.len() >= 3 && adj[last][s] && seq[1] < last {
            counts[seq.len()] += 1;
        }
        for v in s + 1..adj.len() {
            if !used[v] && adj[last][v] {
                used[v] = true;
                seq.push(v);
                go(adj, seq, used, counts);
                seq.pop();
                used[v] = false;
            }
        }
    }
    for s in 0..n {
        let mut used = vec![false; n];
        used[s] = true;
        go(&adj, &mut vec![s], &mut used, &mut counts);
    }
    counts
}

fn over_corpus(corpus: &[Instance], check: Check) -> (bool, String) {
    let mut bad = Vec::new();
    let mut ran = 0;
    for i in corpus {
        let o = i.run(check);
        if o.status == tricensus::checks::Status::Pass {
            ran += 1;
        }
        if o.failed() || o.status == tricensus::checks::Status::Budget {
            bad.push(format!("{}: {}", i.label, o.observed));
        }
    }
    let detail = if bad.is_empty() {
        format!("{ran} instances pass")
    } else {
        format!("{} failing: {}", bad.len(), bad.join(" | "))
    };
    (bad.is_empty(), detail)
}

fn criterion1(c: &[Instance]) -> Line {
    let (mut ok, mut detail) = over_corpus(c, Check::Structure);
    let oracle: Vec<&Instance> = c.iter().filter(|i| i.n() <= 9).collect();
    let mut mismatches = Vec::new();
    for i in &oracle {
        let s = i.spectrum.as_ref().unwrap();
        let b = brute_counts(&i.graph);
        if (3..=i.n()).any(|k| s.count(k) != b[k]) {
            mismatches.push(i.label.clone());
        }
    }
    ok &= mismatches.is_empty();
    detail += &format!("; spectra match brute force on {} instances (n <= 9), mismatches {mismatches:?}", oracle.len());
    Line {
        id: 1,
        name: "structural exactness",
        ok,
        detail,
    }
}

fn criterion4(c: &[Instance]) -> Line {
    let (mut ok, mut detail) = over_corpus(c, Check::FiveCycleMax);
    let o = double_wheel(6).unwrap();
    let c5 = spectrum(&o, &EnumOptions::default()).unwrap().count(5);
    let brute = brute_counts(&o)[5];
    let n = o.order() as u64;
    let cap = 2 * n * n - 10 * n + 12;
    ok &= c5 == cap && brute == cap;
    detail += &format!("; octahedron c5={c5} brute={brute} cap={cap}");
    Line {
        id: 4,
        name: "five-cycle maximum",
        ok,
        detail,
    }
}

fn criterion5(c: &[Instance]) -> Line {
    let (mut ok, mut detail) = over_corpus(c, Check::ShortCycleFamily);
    let mut checked = 0;
    let mut missing = Vec::new();
    for i in c.iter().filter(|i| i.n() <= 12) {
        let g = &i.graph;
        let rad = match tricensus::dual::DualGraph::full(g)
            .and_then(|d| tricensus::dual::radius_diameter(&d.adjacency()))
        {
            Ok((r, _)) => r,
            Err(_) => continue,
        };
        for k in 3..=rad + 3 {
            let Ok(fam) = theorem3_family(g, k) else { continue };
            for cyc in &fam.cycles {
                let v = cyc.vertices();
                let all = cycles_through(g, &v[..2], k, &i.opts).unwrap();
                checked += 1;
                if !all.contains(cyc) {
                    missing.push(format!("{} k={k}", i.label));
                }
            }
        }
    }
    ok &= missing.is_empty();
    detail += &format!("; {checked} family cycles found by enumeration, missing {missing:?}");
    Line {
        id: 5,
        name: "n-2 short cycles per length",
        ok,
        detail,
    }
}

fn criterion6() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut runs = 0;
    let mut witnesses = 0;
    let mut bad = Vec::new();
    let mut seed = 0u64;
    while runs < 150 {
        seed += 1;
        let n = rng.gen_range(5..=12);
        let nt = match random_near_triangulation(n, seed) {
            Ok(nt) => nt,
            Err(e) => {
                bad.push(format!("generate n={n} seed={seed}: {e}"));
                continue;
            }
        };
        let outer = nt.outer_cycle().to_vec();
        let k = outer.len();
        let i = rng.gen_range(0..k);
        let dir = if rng.gen_bool(0.5) { 1 } else { k - 1 };
        let (v1, v2, v3) = (outer[i], outer[(i + dir) % k], outer[(i + 2 * dir) % k]);
        let tag = format!("n={n} seed={seed} anchors {v1},{v2},{v3}");
        let r = match lemma2_cycles(&nt, v1, v2, v3, None) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("{tag}: {e}"));
                continue;
            }
        };
        runs += 1;
        let deg = nt.neighbours(v2).len();
        let (lo, hi) = (k.min(deg + 1), k.max(deg + 1));
        if (r.lo, r.hi) != (lo, hi) {
            bad.push(format!("{tag}: interval {}..={} expected {lo}..={hi}", r.lo, r.hi));
        }
        if r.boundary_lengths.windows(2).any(|w| w[0].abs_diff(w[1]) != 1) {
            bad.push(format!("{tag}: boundary lengths {:?}", r.boundary_lengths));
        }
        for len in lo..=hi {
            let Some(w) = r.witnesses.get(&len) else {
                bad.push(format!("{tag}: no witness of length {len}"));
                continue;
            };
            witnesses += 1;
            let through = cycles_through(&nt, &[v1, v2, v3], len, &EnumOptions::default()).unwrap();
            if w.len() != len || Cycle::new(w.vertices().to_vec(), &nt).is_err() || !through.contains(w) {
                bad.push(format!("{tag}: witness {w:?} rejected"));
            }
        }
    }
    Line {
        id: 6,
        name: "interval completeness on random disks",
        ok: bad.is_empty(),
        detail: format!("{runs} random near triangulations, {witnesses} witnesses verified; problems {bad:?}"),
    }
}

fn criterion7(c: &[Instance]) -> Line {
    let (mut ok, mut detail) = over_corpus(c, Check::Lemma1);
    // every outer face of every small instance, counted directly
    let mut disks = 0;
    let mut hyp = 0;
    let mut bad = Vec::new();
    for i in c.iter().filter(|i| i.n() <= 10) {
        for (what, nt) in i.derived_near_triangulations().iter().chain(i.dual_path_disks().iter()) {
            disks += 1;
            match lemma1_check(nt) {
                Ok(r) if r.hypothesis_holds => {
                    hyp += 1;
                    if !r.weak_dual_is_path {
                        bad.push(format!("{} {what}", i.label));
                    }
                }
                Ok(_) => {}
                Err(e) => bad.push(format!("{} {what}: {e}", i.label)),
            }
        }
    }
    ok &= bad.is_empty();
    detail += &format!("; {disks} disks, hypothesis holds on {hyp}, counterexamples {bad:?}");
    Line {
        id: 7,
        name: "weak-dual path implication",
        ok,
        detail,
    }
}

fn criterion8(c: &[Instance]) -> Line {
    let (ok, detail) = over_corpus(c, Check::CountingBases);
    let mut certs = 0;
    let mut kinds = BTreeSet::new();
    for i in c {
        if let Ok((cs, _)) = i.certificates() {
            certs += cs.len();
            kinds.extend(cs.iter().map(|x| x.base.split(':').next().unwrap_or("").to_owned()));
        }
    }
    Line {
        id: 8,
        name: "counting base axioms, overlap caps and bound",
        ok,
        detail: format!("{detail}; {certs} certificates over kinds {kinds:?}"),
    }
}

fn criterion10() -> Line {
    let g = double_wheel(6).unwrap();
    let n = g.order();
    let s: Vec<Cycle> = separating_cycles(&g, 4).unwrap().into_iter().map(|r| r.cycle).collect();
    let io = iota(&s);
    let base = build_sep4_base(&g, &s, n, &EnumOptions::default()).unwrap();
    let cert = base.validate(&g).unwrap();
    let ham = spectrum(&g, &EnumOptions::default()).unwrap().count(n);
    let brute = brute_counts(&g)[n];
    let bound = cert.bound_num / cert.bound_den;
    let ok = s.len() == 3
        && io == 0
        && cert.bound_num == 6 * cert.bound_den
        && bound as u64 <= ham
        && ham == 16
        && brute == 16
        && ham >= 2 * (n as u64 - 2) * (n as u64 - 4);
    Line {
        id: 10,
        name: "octahedron separating 4-cycle base",
        ok,
        detail: format!(
            "|S|={} iota={io} |P|={} O={} bound={}/{} hamiltonian={ham} (brute {brute}) floor 2(n-2)(n-4)={}",
            s.len(),
            cert.p_count,
            cert.max_overlap,
            cert.bound_num,
            cert.bound_den,
            2 * (n - 2) * (n - 4)
        ),
    }
}

fn criterion11() -> Line {
    let mut rows = Vec::new();
    let mut ok = true;
    let mut table = [[0u64; 3]; 3];
    for (pi, p) in [2usize, 3, 4].into_iter().enumerate() {
        let g = g_p(p, ApexAssignment::default()).unwrap();
        let n = g.order();
        let s = spectrum(
            &g,
            &EnumOptions {
                min_len: n - 2,
                ..EnumOptions::default()
            },
        )
        .unwrap();
        for (q, cell) in table[pi].iter_mut().enumerate() {
            *cell = s.count(n - q);
        }
        rows.push(format!("p={p} n={n} {:?}", table[pi]));
    }
    for q in 0..3 {
        let base = table[0][q];
        let max = table.iter().map(|r| r[q]).max().unwrap();
        ok &= max <= 2 * base;
    }
    // structural facts of the construction and apex-choice independence
    let mut facts = Vec::new();
    for p in 1..=3usize {
        let mut hams = Vec::new();
        for apex in [A, B, D] {
            let g = g_p(p, ApexAssignment::with_abd_apex(apex)).unwrap();
            let n = g.order();
            let opts = EnumOptions {
                min_len: 3 * p + 5,
                ..EnumOptions::default()
            };
            let s = spectrum(&g, &opts).unwrap();
            let mut avoid_c = 0;
            let mut on_chords = 0;
            for k in 3 * p + 5..=n {
                let through: usize = g
                    .neighbours(C)
                    .iter()
                    .map(|&x| cycles_through(&g, &[C, x], k, &opts).unwrap().len())
                    .sum();
                avoid_c += s.count(k) - through as u64 / 2;
                for x in [A, B, D] {
                    on_chords += cycles_through(&g, &[x, C], k, &opts).unwrap().len();
                }
            }
            ok &= avoid_c == 0 && on_chords == 0;
            hams.push(s.count(n));
        }
        ok &= hams.windows(2).all(|w| w[0] == w[1]);
        facts.push(format!("p={p} long cycles all visit c, none use ac/bc/cd, hamiltonian {hams:?}"));
    }
    Line {
        id: 11,
        name: "bounded long-cycle counts in G_p",
        ok,
        detail: format!("{}; {}", rows.join(", "), facts.join("; ")),
    }
}

fn criterion12() -> Line {
    let g: PlanarTriangulation = FamilySpec::Stacked { depth: 2 }.generate().unwrap();
    let i = Instance::new("stacked(depth=2)", g, EnumOptions::default());
    let n = i.n();
    let circ = i.circumference().unwrap_or(0);
    let ham = i.hamiltonian_count().unwrap_or(u64::MAX);
    let cap = circumference_cap(n);
    Line {
        id: 12,
        name: "circumference of the stacked triangulation",
        ok: n == 20 && ham == 0 && circ < n && (circ as f64) <= cap,
        detail: format!("n={n} hamiltonian cycles={ham} circ={circ} cap={cap:.2}"),
    }
}

fn simple(id: u32, name: &'static str, c: &[Instance], check: Check) -> Line {
    let (ok, detail) = over_corpus(c, check);
    Line { id, name, ok, detail }
}

fn main() -> ExitCode {
    let t = Instant::now();
    let c = corpus();
    println!("corpus: {} instances built in {:.1?}", c.len(), t.elapsed());
    let mut lines = Vec::new();
    let mut timed = |f: &mut dyn FnMut() -> Line| {
        let t = Instant::now();
        let l = f();
        println!(
            "criterion {:>2} {} {} [{:.1?}]: {}",
            l.id,
            if l.ok { "PASS" } else { "FAIL" },
            l.name,
            t.elapsed(),
            l.detail
        );
        lines.push((l.id, l.ok));
    };
    timed(&mut || criterion1(&c));
    timed(&mut || simple(2, "weak pancyclicity", &c, Check::WeakPancyclic));
    timed(&mut || simple(3, "at least four hamiltonian cycles", &c, Check::HamiltonianFour));
    timed(&mut || criterion4(&c));
    timed(&mut || criterion5(&c));
    timed(&mut criterion6);
    timed(&mut || criterion7(&c));
    timed(&mut || criterion8(&c));
    timed(&mut || simple(9, "4-connected full spectrum and zigzag bound", &c, Check::FourConnectedSpectrum));
    timed(&mut criterion10);
    timed(&mut criterion11);
    timed(&mut criterion12);
    let failed: Vec<u32> = lines.iter().filter(|l| !l.1).map(|l| l.0).collect();
    let unexpected: Vec<u32> = failed.iter().copied().filter(|id| !KNOWN_FAILURES.contains(id)).collect();
    println!(
        "{} of {} criteria pass; failing {failed:?}; known failures {KNOWN_FAILURES:?}; total {:.1?}",
        lines.len() - failed.len(),
        lines.len(),
        t.elapsed()
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
