//! Config-driven batch runs: generate every configured instance, enumerate,
//! run the selected checks, and write one JSON line per instance plus a CSV
//! summary.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checks::{Check, CheckOutcome, Instance};
use crate::cycles::{separating_cycles, CycleError, EnumOptions, DEFAULT_BUDGET};
use crate::dual::{radius_diameter, DualGraph};
use crate::generators::{ApexAssignment, FamilySpec};

pub const CONFIG_VERSION: u32 = 1;
pub const BUDGET_ENV: &str = "TRICENSUS_BUDGET";
pub const JOBS_ENV: &str = "TRICENSUS_JOBS";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config parse error: {0}")]
    Parse(String),
    #[error("config lists no families")]
    EmptyFamilies,
    #[error("unsupported config version {0} (expected {CONFIG_VERSION})")]
    Version(u32),
    #[error("family entry {index}: {message}")]
    BadFamily { index: usize, message: String },
    #[error("bad value for {var}: {value:?}")]
    BadEnv { var: &'static str, value: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A single value, a list, or an inclusive range `"a..=b"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Values {
    One(u64),
    Many(Vec<u64>),
    Range(String),
}

impl Values {
    fn expand(&self) -> Result<Vec<u64>, String> {
        match self {
            Values::One(x) => Ok(vec![*x]),
            Values::Many(v) => Ok(v.clone()),
            Values::Range(s) => {
                let (a, b) = s
                    .split_once("..=")
                    .ok_or_else(|| format!("range {s:?} is not of the form a..=b"))?;
                let a: u64 = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
                let b: u64 = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
                Ok((a..=b).collect())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    DoubleWheel,
    FlippedDoubleWheel,
    GP,
    Stacked,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyEntry {
    pub family: FamilyName,
    #[serde(default)]
    pub n: Option<Values>,
    #[serde(default)]
    pub p: Option<Values>,
    #[serde(default)]
    pub depth: Option<Values>,
    /// Random family only; defaults to the config seed.
    #[serde(default)]
    pub seeds: Option<Values>,
    #[serde(default)]
    pub apex: Option<[usize; 4]>,
    /// Enumerate only lengths `>= n - long_only`.
    #[serde(default)]
    pub long_only: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub version: u32,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_budget")]
    pub budget: u64,
    /// Worker threads; `0` picks the machine default.
    #[serde(default)]
    pub jobs: usize,
    /// Empty means every check.
    #[serde(default)]
    pub checks: Vec<Check>,
    #[serde(default)]
    pub families: Vec<FamilyEntry>,
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

/// One instance to run: the generator call and the enumeration window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planned {
    pub spec: FamilySpec,
    pub long_only: Option<usize>,
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let cfg: Self = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
        if cfg.version != CONFIG_VERSION {
            return Err(ConfigError::Version(cfg.version));
        }
        if cfg.families.is_empty() {
            return Err(ConfigError::EmptyFamilies);
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    /// Applies the budget and job-count environment overrides.
    pub fn apply_env(&mut self) -> Result<(), ConfigError> {
        self.apply_overrides(std::env::var(BUDGET_ENV).ok(), std::env::var(JOBS_ENV).ok())
    }

    pub fn apply_overrides(&mut self, budget: Option<String>, jobs: Option<String>) -> Result<(), ConfigError> {
        if let Some(v) = budget {
            self.budget = v.trim().parse().map_err(|_| ConfigError::BadEnv {
                var: BUDGET_ENV,
                value: v.clone(),
            })?;
        }
        if let Some(v) = jobs {
            self.jobs = v.trim().parse().map_err(|_| ConfigError::BadEnv {
                var: JOBS_ENV,
                value: v.clone(),
            })?;
        }
        Ok(())
    }

    pub fn checks(&self) -> Vec<Check> {
        if self.checks.is_empty() {
            Check::ALL.to_vec()
        } else {
            self.checks.clone()
        }
    }

    /// Instances in config order.
    pub fn plan(&self) -> Result<Vec<Planned>, ConfigError> {
        if self.families.is_empty() {
            return Err(ConfigError::EmptyFamilies);
        }
        let mut out = Vec::new();
        for (index, e) in self.families.iter().enumerate() {
            let bad = |message: String| ConfigError::BadFamily { index, message };
            let values = |v: &Option<Values>, name: &str| -> Result<Vec<usize>, ConfigError> {
                v.as_ref()
                    .ok_or_else(|| bad(format!("missing `{name}`")))?
                    .expand()
                    .map(|v| v.into_iter().map(|x| x as usize).collect())
                    .map_err(bad)
            };
            let specs: Vec<FamilySpec> = match e.family {
                FamilyName::DoubleWheel => values(&e.n, "n")?
                    .into_iter()
                    .map(|n| FamilySpec::DoubleWheel { n })
                    .collect(),
                FamilyName::FlippedDoubleWheel => values(&e.n, "n")?
                    .into_iter()
                    .map(|n| FamilySpec::FlippedDoubleWheel { n })
                    .collect(),
                FamilyName::GP => {
                    let apex = e.apex.map(ApexAssignment).unwrap_or_default();
                    values(&e.p, "p")?
                        .into_iter()
                        .map(|p| FamilySpec::GP { p, apex })
                        .collect()
                }
                FamilyName::Stacked => values(&e.depth, "depth")?
                    .into_iter()
                    .map(|depth| FamilySpec::Stacked { depth })
                    .collect(),
                FamilyName::Random => {
                    let seeds = match &e.seeds {
                        Some(s) => s.expand().map_err(bad)?,
                        None => vec![self.seed],
                    };
                    let mut v = Vec::new();
                    for n in values(&e.n, "n")? {
                        for &seed in &seeds {
                            v.push(FamilySpec::Random { n, seed });
                        }
                    }
                    v
                }
            };
            out.extend(specs.into_iter().map(|spec| Planned {
                spec,
                long_only: e.long_only,
            }));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub min_len: usize,
    pub max_len: usize,
    pub counts: BTreeMap<usize, u64>,
}

/// Everything measured on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub label: String,
    pub spec: FamilySpec,
    pub n: usize,
    pub m: usize,
    pub faces: usize,
    pub spectrum: Option<SpectrumReport>,
    pub budget_exceeded: bool,
    pub dual_rad: Option<usize>,
    pub dual_diam: Option<usize>,
    pub separating_triangles: usize,
    pub separating_4cycles: Option<usize>,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn run_instance(plan: &Planned, checks: &[Check], budget: u64) -> RunReport {
    let label = plan.spec.label();
    let g = match plan.spec.generate() {
        Ok(g) => g,
        Err(e) => {
            return RunReport {
                label,
                spec: plan.spec.clone(),
                n: 0,
                m: 0,
                faces: 0,
                spectrum: None,
                budget_exceeded: false,
                dual_rad: None,
                dual_diam: None,
                separating_triangles: 0,
                separating_4cycles: None,
                checks: Vec::new(),
                passed: false,
                error: Some(e.to_string()),
            }
        }
    };
    let n = g.order();
    let min_len = plan.long_only.map_or(3, |q| n.saturating_sub(q).max(3));
    let opts = EnumOptions::lengths(min_len, n).with_budget(budget).with_jobs(0);
    let (m, faces) = (g.size(), g.faces().len());
    let (dual_rad, dual_diam) = match DualGraph::full(&g).and_then(|d| radius_diameter(&d.adjacency())) {
        Ok((r, d)) => (Some(r), Some(d)),
        Err(_) => (None, None),
    };
    let separating_triangles = g.separating_triangles().len();
    let separating_4cycles = separating_cycles(&g, 4).ok().map(|s| s.len());
    let inst = Instance::new(label.clone(), g, opts);
    let budget_exceeded = matches!(inst.spectrum, Err(CycleError::BudgetExceeded { .. }));
    let spectrum = inst.spectrum.as_ref().ok().map(|s| SpectrumReport {
        min_len: s.min_len,
        max_len: s.max_len,
        counts: s.counts.clone(),
    });
    let outcomes: Vec<CheckOutcome> = checks.iter().map(|&c| inst.run(c)).collect();
    let passed = outcomes.iter().all(|o| !o.failed());
    RunReport {
        label,
        spec: plan.spec.clone(),
        n,
        m,
        faces,
        spectrum,
        budget_exceeded,
        dual_rad,
        dual_diam,
        separating_triangles,
        separating_4cycles,
        checks: outcomes,
        passed,
        error: None,
    }
}

/// Runs every planned instance on a pool of `cfg.jobs` workers; reports
/// come back in config order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<RunReport>, ConfigError> {
    let plan = cfg.plan()?;
    let checks = cfg.checks();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| ConfigError::Parse(e.to_string()))?;
    Ok(pool.install(|| {
        plan.par_iter()
            .map(|p| run_instance(p, &checks, cfg.budget))
            .collect()
    }))
}

pub fn write_jsonl(reports: &[RunReport], mut w: impl Write) -> std::io::Result<()> {
    for r in reports {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_summary_csv(reports: &[RunReport], mut w: impl Write) -> std::io::Result<()> {
    writeln!(
        w,
        "label,n,m,faces,rad,diam,sep3,sep4,cycles,budget_exceeded,failed_checks,passed"
    )?;
    let opt = |x: Option<usize>| x.map_or(String::new(), |v| v.to_string());
    for r in reports {
        let total: u64 = r.spectrum.as_ref().map_or(0, |s| s.counts.values().sum());
        let failed: Vec<String> = r
            .checks
            .iter()
            .filter(|o| o.failed())
            .map(|o| serde_json::to_value(o.check).unwrap().as_str().unwrap_or("").to_string())
            .collect();
        writeln!(
            w,
            "\"{}\",{},{},{},{},{},{},{},{},{},{},{}",
            r.label,
            r.n,
            r.m,
            r.faces,
            opt(r.dual_rad),
            opt(r.dual_diam),
            r.separating_triangles,
            opt(r.separating_4cycles),
            total,
            r.budget_exceeded,
            failed.join(";"),
            r.passed
        )?;
    }
    Ok(())
}

/// Writes `report.jsonl`, `summary.csv` and `metadata.json` into `dir`.
pub fn write_outputs(reports: &[RunReport], cfg: &SuiteConfig, dir: &Path) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    write_jsonl(reports, std::io::BufWriter::new(std::fs::File::create(dir.join("report.jsonl"))?))?;
    write_summary_csv(reports, std::io::BufWriter::new(std::fs::File::create(dir.join("summary.csv"))?))?;
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let meta = serde_json::json!({
        "finished_unix": secs,
        "instances": reports.len(),
        "passed": reports.iter().all(|r| r.passed),
        "budget": cfg.budget,
        "jobs": cfg.jobs,
        "version": env!("CARGO_PKG_VERSION"),
    });
    std::fs::write(dir.join("metadata.json"), serde_json::to_string_pretty(&meta)? + "\n")
}
