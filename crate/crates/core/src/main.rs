use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tricensus::counting_base::{build_sep4_base, build_zigzag_base, BaseKind, CertificateDocument};
use tricensus::cycles::{separating_cycles, spectrum, Cycle, EnumOptions, DEFAULT_BUDGET};
use tricensus::dual::{radius_diameter, DualGraph};
use tricensus::generators::{ApexAssignment, FamilySpec};
use tricensus::io::{self, Format};
use tricensus::plane_graph::{NearTriangulation, PlanarTriangulation, PlaneGraph};
use tricensus::procedures::{dual_induced_path, lemma2_cycles, theorem3_family};
use tricensus::suite::{run_suite, write_outputs, SuiteConfig};

#[derive(Parser)]
#[command(name = "tricensus", version, about = "Cycle census workbench for planar triangulations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a triangulation.
    Gen(GenArgs),
    /// Validate a rotation system as a triangulation.
    Validate(InputArgs),
    /// Count cycles by length.
    Spectrum(SpectrumArgs),
    /// Dual graph statistics.
    Dual(DualArgs),
    /// Run a constructive procedure.
    Procedures {
        #[command(subcommand)]
        which: ProcCmd,
    },
    /// Build and validate a counting base, emitting a certificate.
    Certify(CertifyArgs),
    /// Re-verify a certificate; exit 0 iff it holds.
    Recheck {
        cert: PathBuf,
    },
    /// Convert between rot and planar_code.
    Convert(ConvertArgs),
    /// Run a configured batch of instances and checks.
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(alias = "double_wheel")]
    DoubleWheel,
    #[value(alias = "flipped_double_wheel")]
    FlippedDoubleWheel,
    #[value(name = "g_p", alias = "g-p", alias = "gp")]
    GP,
    Stacked,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Rot,
    #[value(name = "planar_code", alias = "planar-code")]
    PlanarCode,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Rot => Format::Rot,
            FormatArg::PlanarCode => Format::PlanarCode,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Apex corner of the abd triangle for g_p (0 = a, 1 = b, 3 = d).
    #[arg(long)]
    abd_apex: Option<usize>,
    #[arg(long, value_enum, default_value = "rot")]
    format: FormatArg,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    #[arg(long, short)]
    input: PathBuf,
    /// Input format; guessed from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Csv,
    Json,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = 3)]
    min_len: usize,
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value = "csv")]
    output: OutputArg,
}

#[derive(Args)]
struct DualArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Print `rad,diam` as CSV.
    #[arg(long)]
    radius: bool,
    /// Use the weak dual with this face as the unbounded one.
    #[arg(long)]
    weak: Option<usize>,
}

#[derive(Subcommand)]
enum ProcCmd {
    /// Cycle interval through an outer path of a near triangulation.
    Lemma2 {
        #[command(flatten)]
        input: InputArgs,
        /// `v1,v2,v3` or `v1,v2,v3,v4`.
        #[arg(long, value_delimiter = ',', required = true)]
        anchors: Vec<usize>,
        /// Outer face id when the input is a triangulation.
        #[arg(long)]
        outer_face: Option<usize>,
        /// Delete this vertex of a triangulation and use the resulting disk.
        #[arg(long, conflicts_with = "outer_face")]
        delete_vertex: Option<usize>,
    },
    /// Short facial-path cycle family of one length.
    T3family {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
    },
    /// Induced dual path between two faces.
    #[command(alias = "induced-path")]
    DualPath {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        f1: usize,
        #[arg(long)]
        f2: usize,
    },
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// zigzag6i, zigzag-t3 or sep4.
    #[arg(long)]
    base: BaseKind,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    emit: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, value_enum)]
    from: Option<FormatArg>,
    #[arg(long, value_enum)]
    to: FormatArg,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Graph index within a planar_code stream.
    #[arg(long, default_value_t = 0)]
    index: usize,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, short)]
    config: PathBuf,
    /// Output directory for report.jsonl, summary.csv and metadata.json.
    #[arg(long, short, default_value = "suite-out")]
    out: PathBuf,
}

type Res<T> = Result<T, Box<dyn std::error::Error>>;

fn read_input(args: &InputArgs) -> Res<Vec<u8>> {
    Ok(std::fs::read(&args.input).map_err(|e| format!("{}: {e}", args.input.display()))?)
}

fn load_rotation(args: &InputArgs) -> Res<tricensus::plane_graph::RotationSystem> {
    let bytes = read_input(args)?;
    let fmt = args.format.map(Format::from).unwrap_or_else(|| io::sniff(&bytes));
    Ok(io::read_one(&bytes, fmt)?)
}

fn load_triangulation(args: &InputArgs) -> Res<PlanarTriangulation> {
    Ok(PlanarTriangulation::new(load_rotation(args)?)?)
}

fn emit(path: Option<&Path>, bytes: &[u8]) -> Res<()> {
    match path {
        Some(p) => std::fs::write(p, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn gen(a: GenArgs) -> Res<ExitCode> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| format!("--{name} is required for this family"));
    let spec = match a.family {
        FamilyArg::DoubleWheel => FamilySpec::DoubleWheel { n: need(a.n, "n")? },
        FamilyArg::FlippedDoubleWheel => FamilySpec::FlippedDoubleWheel { n: need(a.n, "n")? },
        FamilyArg::GP => FamilySpec::GP {
            p: need(a.p, "p")?,
            apex: a.abd_apex.map(ApexAssignment::with_abd_apex).unwrap_or_default(),
        },
        FamilyArg::Stacked => FamilySpec::Stacked {
            depth: need(a.depth, "depth")?,
        },
        FamilyArg::Random => FamilySpec::Random {
            n: need(a.n, "n")?,
            seed: a.seed,
        },
    };
    let g = spec.generate()?;
    emit(a.output.as_deref(), &io::write(g.rotation_system(), a.format.into()))?;
    Ok(ExitCode::SUCCESS)
}

fn validate(a: InputArgs) -> Res<ExitCode> {
    let rs = load_rotation(&a)?;
    match PlanarTriangulation::new(rs) {
        Ok(g) => {
            println!("n={} m={} faces={}", g.order(), g.size(), g.faces().len());
            println!("connectivity_check={:?}", g.connectivity_check());
            println!("separating_triangles={}", g.separating_triangles().len());
            println!("four_connected={}", g.is_four_connected());
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn spectrum_cmd(a: SpectrumArgs) -> Res<ExitCode> {
    let g = load_triangulation(&a.input)?;
    let opts = EnumOptions {
        min_len: a.min_len,
        max_len: a.max_len,
        budget: a.budget,
        jobs: a.jobs,
    };
    let s = spectrum(&g, &opts)?;
    match a.output {
        OutputArg::Csv => print!("{}", s.to_csv()),
        OutputArg::Json => println!("{}", serde_json::to_string_pretty(&s)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn dual_cmd(a: DualArgs) -> Res<ExitCode> {
    let g = load_triangulation(&a.input)?;
    let d = match a.weak {
        Some(f) => DualGraph::weak_of(&g, f)?,
        None => DualGraph::full(&g)?,
    };
    if a.radius {
        let (r, diam) = radius_diameter(&d.adjacency())?;
        println!("rad,diam\n{r},{diam}");
    } else {
        println!("nodes={} edges={}", d.order(), d.size());
        for i in 0..d.order() {
            let nb: Vec<String> = d.neighbours(i).iter().map(|&(j, _)| d.face(j).to_string()).collect();
            println!("{}: {}", d.face(i), nb.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_cycle(c: &Cycle) {
    let v: Vec<String> = c.vertices().iter().map(usize::to_string).collect();
    println!("{}", v.join(" "));
}

fn procedures(which: ProcCmd) -> Res<ExitCode> {
    match which {
        ProcCmd::Lemma2 {
            input,
            anchors,
            outer_face,
            delete_vertex,
        } => {
            if !(3..=4).contains(&anchors.len()) {
                return Err("--anchors takes 3 or 4 vertices".into());
            }
            let rs = load_rotation(&input)?;
            let nt = if let Some(v) = delete_vertex {
                let g = PlanarTriangulation::new(rs)?;
                let faces: Vec<usize> = (0..g.faces().len()).filter(|&f| !g.face(f).contains(v)).collect();
                NearTriangulation::from_face_set(g.graph(), &faces)?
            } else {
                let pg = PlaneGraph::new(rs.clone())?;
                let outer = match outer_face {
                    Some(f) => f,
                    None => {
                        let big: Vec<usize> = pg.faces().iter().filter(|f| f.len() != 3).map(|f| f.id).collect();
                        match big.as_slice() {
                            [f] => *f,
                            [] => return Err("all faces are triangles; pass --outer-face".into()),
                            _ => return Err("more than one non-triangular face".into()),
                        }
                    }
                };
                let cyc = pg
                    .faces()
                    .get(outer)
                    .ok_or_else(|| format!("face {outer} not found"))?
                    .boundary
                    .clone();
                NearTriangulation::new(rs, &cyc)?
            };
            // anchors are host labels when a vertex was deleted
            let local = |v: usize| -> Res<usize> {
                if delete_vertex.is_some() {
                    nt.host_labels()
                        .iter()
                        .position(|&h| h == v)
                        .ok_or_else(|| format!("vertex {v} is not in the disk").into())
                } else {
                    Ok(v)
                }
            };
            let a: Vec<usize> = anchors.iter().map(|&v| local(v)).collect::<Res<_>>()?;
            let r = lemma2_cycles(&nt, a[0], a[1], a[2], a.get(3).copied())?;
            println!("interval {}..={}", r.lo, r.hi);
            println!("boundary lengths {:?}", r.boundary_lengths);
            for (k, c) in &r.witnesses {
                let host: Vec<String> = c.vertices().iter().map(|&v| nt.host_label(v).to_string()).collect();
                println!("{k}: {}", host.join(" "));
            }
        }
        ProcCmd::T3family { input, k } => {
            let g = load_triangulation(&input)?;
            let fam = theorem3_family(&g, k)?;
            eprintln!("rad={} k={} cycles={}", fam.rad, fam.k, fam.cycles.len());
            for c in &fam.cycles {
                print_cycle(c);
            }
        }
        ProcCmd::DualPath { input, f1, f2 } => {
            let g = load_triangulation(&input)?;
            let p = dual_induced_path(&g, f1, f2)?;
            println!("outer={} faces={:?}", p.outer, p.faces);
            print_cycle(&p.boundary);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn certify(a: CertifyArgs) -> Res<ExitCode> {
    let g = load_triangulation(&a.input)?;
    let opts = EnumOptions::default().with_budget(a.budget).with_jobs(a.jobs);
    let base = match a.base {
        BaseKind::Sep4 => {
            let s: Vec<Cycle> = separating_cycles(&g, 4)?.into_iter().map(|r| r.cycle).collect();
            build_sep4_base(&g, &s, a.k, &opts)?
        }
        kind => build_zigzag_base(&g, a.k, kind, &opts)?,
    };
    let cert = base.validate(&g)?;
    println!(
        "{}: |P|={} O={} bound={}/{} witnessed={} holds={}",
        cert.base_id, cert.p_count, cert.max_overlap, cert.bound_num, cert.bound_den, cert.witnessed, cert.bound_holds
    );
    if let Some(path) = a.emit {
        let doc = CertificateDocument::new(&g, base, cert);
        std::fs::write(path, doc.to_canonical_json() + "\n")?;
    }
    Ok(ExitCode::SUCCESS)
}

fn recheck(path: &Path) -> Res<ExitCode> {
    let doc = CertificateDocument::from_json(&std::fs::read_to_string(path)?)?;
    match doc.recheck() {
        Ok(c) => {
            println!("ok {}: bound {}/{} <= {}", c.base_id, c.bound_num, c.bound_den, c.witnessed);
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            println!("rejected: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn convert(a: ConvertArgs) -> Res<ExitCode> {
    let bytes = std::fs::read(&a.input)?;
    let from = a.from.map(Format::from).unwrap_or_else(|| io::sniff(&bytes));
    let rs = match from {
        Format::Rot => io::read_one(&bytes, Format::Rot)?,
        Format::PlanarCode => io::read_planar_code(&bytes)?
            .into_iter()
            .nth(a.index)
            .ok_or_else(|| format!("stream has no graph #{}", a.index))?,
    };
    emit(a.output.as_deref(), &io::write(&rs, a.to.into()))?;
    Ok(ExitCode::SUCCESS)
}

fn suite(a: SuiteArgs) -> Res<ExitCode> {
    let mut cfg = SuiteConfig::load(&a.config)?;
    cfg.apply_env()?;
    let reports = run_suite(&cfg)?;
    write_outputs(&reports, &cfg, &a.out)?;
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.label.as_str()).collect();
    println!("{} instances, {} failed", reports.len(), failed.len());
    for f in &failed {
        println!("failed: {f}");
    }
    Ok(if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.cmd {
        Cmd::Gen(a) => gen(a),
        Cmd::Validate(a) => validate(a),
        Cmd::Spectrum(a) => spectrum_cmd(a),
        Cmd::Dual(a) => dual_cmd(a),
        Cmd::Procedures { which } => procedures(which),
        Cmd::Certify(a) => certify(a),
        Cmd::Recheck { cert } => recheck(&cert),
        Cmd::Convert(a) => convert(a),
        Cmd::Suite(a) => suite(a),
    };
    match r {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
