//! Exhaustive sweeps over vertex splits of regular class-1 graphs.
//!
//! A sweep is planned up front: base graphs are enumerated per order and
//! degree, filtered, classified, and every split is listed once up to the
//! base graph's symmetries. Instances then run on a worker pool and their
//! records are written to the log in plan order.

mod figure;
mod instance;
mod log;
mod suite;

use std::collections::HashSet;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{find_coloring, Budget, Decision, PartialEdgeColoring};
use crate::generate::enumerate_regular_graphs;
use crate::graph::{Graph, GraphError, SplitSpec, Vertex};
use crate::iso::{canonical_graph6, for_each_automorphism};
use crate::record::{Summary, VerificationRecord};

pub use figure::reproduce_figure1;
pub use instance::{edge_criticality, split_edge_criticality_shortcut, verify_instance, CriticalityReport, ShortcutError};
pub use log::{read_log, LogError};
pub use suite::{extended_lemma_corpus, kempe_neighborhood, lemma_corpus, split_corpus, run_lemma_suite, LemmaSuiteConfig, SuiteReport};

/// Which `(order, degree)` pairs of regular bases a sweep covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeFilter {
    /// `4Δ ≥ 3m`: the proven range, stated on the split graph's order `m + 1`.
    Theorem,
    /// `3Δ > m`: the conjectured range read on the order of the base.
    ConjectureBase,
    /// `3Δ > m + 1`: the conjectured range read on the order of the split graph.
    ConjectureSplit,
    /// Any degree in `min..=max`.
    Custom { min: usize, max: usize },
}

impl DegreeFilter {
    pub fn accepts(self, m: usize, d: usize) -> bool {
        match self {
            DegreeFilter::Theorem => 4 * d >= 3 * m,
            DegreeFilter::ConjectureBase => 3 * d > m,
            DegreeFilter::ConjectureSplit => 3 * d > m + 1,
            DegreeFilter::Custom { min, max } => (min..=max).contains(&d),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "theorem" => Some(DegreeFilter::Theorem),
            "conjecture-base" => Some(DegreeFilter::ConjectureBase),
            "conjecture" | "conjecture-split" => Some(DegreeFilter::ConjectureSplit),
            _ => {
                let rest = s.strip_prefix("degree=")?;
                let (lo, hi) = rest.split_once("..").unwrap_or((rest, rest));
                Some(DegreeFilter::Custom {
                    min: lo.parse().ok()?,
                    max: hi.parse().ok()?,
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub m_max: usize,
    pub filter: DegreeFilter,
    pub budget: Budget,
    pub jobs: usize,
    /// Allows base orders above 8.
    pub long: bool,
}

impl SweepConfig {
    pub fn new(m_max: usize, filter: DegreeFilter) -> Self {
        SweepConfig {
            m_max,
            filter,
            budget: Budget::millis(60_000),
            jobs: 1,
            long: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("base order limit {0} is odd; regular bases of even order only")]
    OddOrder(usize),
    #[error("base order {0} exceeds 8; pass the long flag to enable it")]
    NeedsLong(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Log(#[from] LogError),
    #[error("i/o error on the log: {0}")]
    Io(#[from] std::io::Error),
}

/// `(base canonical graph6, split vertex, part holding the smallest neighbor)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InstanceId {
    pub base: String,
    pub vertex: Vertex,
    pub part_a: Vec<Vertex>,
}

impl fmt::Display for InstanceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.part_a.iter().map(|v| v.to_string()).collect();
        write!(f, "{}/v{}/A{}", self.base, self.vertex, a.join(","))
    }
}

/// A base graph in canonical labeling with its verdict.
#[derive(Debug, Clone)]
pub struct Base {
    pub graph: Arc<Graph>,
    pub graph6: String,
    pub degree: usize,
    /// A `Δ`-coloring when the base is class 1.
    pub coloring: Option<PartialEdgeColoring>,
    pub status: BaseStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseStatus {
    Included,
    Disconnected,
    Class2,
    Undecided,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub id: InstanceId,
    pub base: usize,
    pub spec: SplitSpec,
}

#[derive(Debug, Clone)]
pub struct Plan {
    pub bases: Vec<Base>,
    pub instances: Vec<Instance>,
}

impl Base {
    pub fn classify(graph: Graph, budget: Budget) -> Self {
        let graph6 = canonical_graph6(&graph);
        let graph = Arc::new(crate::graph6::parse_graph6(&graph6).expect("canonical graph6 parses"));
        let degree = graph.max_degree();
        let (coloring, status) = if !graph.is_connected() {
            (None, BaseStatus::Disconnected)
        } else {
            match find_coloring(&graph, degree, None, budget).expect("degree within palette") {
                Decision::Found(phi) => (Some(phi), BaseStatus::Included),
                Decision::Impossible => (None, BaseStatus::Class2),
                Decision::Undecided => (None, BaseStatus::Undecided),
            }
        };
        Base {
            graph,
            graph6,
            degree,
            coloring,
            status,
        }
    }
}

/// Splits of `g` with `v1` taking the part that holds the smallest neighbor,
/// one per orbit of the automorphism group when `reduce` is set.
pub fn split_representatives(g: &Graph, reduce: bool) -> Vec<SplitSpec> {
    let key = |v: Vertex, part: &[Vertex]| -> (Vertex, u64) {
        let nbrs: Vec<Vertex> = g.neighbors(v).collect();
        let mask: u64 = part.iter().map(|&w| 1u64 << w).sum();
        let full: u64 = nbrs.iter().map(|&w| 1u64 << w).sum();
        // store the part containing the smallest neighbor
        if mask & (1u64 << nbrs[0]) != 0 {
            (v, mask)
        } else {
            (v, full & !mask)
        }
    };
    let mut seen: HashSet<(Vertex, u64)> = HashSet::new();
    let mut out = Vec::new();
    for v in g.vertices() {
        let nbrs: Vec<Vertex> = g.neighbors(v).collect();
        let d = nbrs.len();
        if d < 2 {
            continue;
        }
        // subsets of the other d-1 neighbors joined with the smallest one, excluding all of them
        for bits in 0u64..(1u64 << (d - 1)) - 1 {
            let mut part = vec![nbrs[0]];
            part.extend((0..d - 1).filter(|i| bits >> i & 1 == 1).map(|i| nbrs[i + 1]));
            if !seen.insert(key(v, &part)) {
                continue;
            }
            if reduce {
                // one pass over the group per orbit keeps memory flat for large groups
                for_each_automorphism(g, |s| {
                    let image: Vec<Vertex> = part.iter().map(|&w| s[w]).collect();
                    seen.insert(key(s[v], &image));
                });
            }
            out.push(SplitSpec::with_part(g, v, &part).expect("valid partition by construction"));
        }
    }
    out
}

/// Enumerates bases and their split instances.
pub fn plan_sweep(config: &SweepConfig) -> Result<Plan, VerifyError> {
    if config.m_max % 2 == 1 {
        return Err(VerifyError::OddOrder(config.m_max));
    }
    if config.m_max > 8 && !config.long {
        return Err(VerifyError::NeedsLong(config.m_max));
    }
    let mut graphs = Vec::new();
    for m in (4..=config.m_max).step_by(2) {
        for d in 2..m {
            if config.filter.accepts(m, d) {
                graphs.extend(enumerate_regular_graphs(m, d)?);
            }
        }
    }
    Ok(plan_for_bases(graphs, config.budget))
}

/// Plans a sweep over explicitly given bases, in the given order.
pub fn plan_for_bases(graphs: Vec<Graph>, budget: Budget) -> Plan {
    let bases: Vec<Base> = graphs.into_iter().map(|g| Base::classify(g, budget)).collect();
    let mut instances = Vec::new();
    for (i, base) in bases.iter().enumerate() {
        if base.status != BaseStatus::Included {
            continue;
        }
        for spec in split_representatives(&base.graph, true) {
            instances.push(Instance {
                id: InstanceId {
                    base: base.graph6.clone(),
                    vertex: spec.vertex,
                    part_a: spec.part_a.clone(),
                },
                base: i,
                spec,
            });
        }
    }
    Plan { bases, instances }
}

#[derive(Debug, Clone, Serialize)]
pub struct BaseNote {
    pub graph6: String,
    pub order: usize,
    pub degree: usize,
    pub status: BaseStatus,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub bases: Vec<BaseNote>,
    /// Records for every instance, in plan order, including resumed ones.
    pub records: Vec<VerificationRecord>,
    /// How many records were taken from an existing log.
    pub resumed: usize,
    pub summary: Summary,
}

impl SweepReport {
    pub fn clean(&self) -> bool {
        self.summary.clean() && self.bases.iter().all(|b| b.status != BaseStatus::Undecided)
    }
}

/// Runs a planned sweep. With a log path, records are appended in plan order
/// as they complete; with `resume`, an existing log must be a prefix of the
/// plan and only the remaining instances run.
pub fn run_plan(
    plan: &Plan,
    config: &SweepConfig,
    log_path: Option<&Path>,
    resume: bool,
) -> Result<SweepReport, VerifyError> {
    let done = match (log_path, resume) {
        (Some(p), true) if p.exists() => log::read_log(p)?,
        _ => Vec::new(),
    };
    log::check_prefix(&done, &plan.instances)?;
    let resumed = done.len();
    let mut writer = match log_path {
        Some(p) => Some(log::LogWriter::open(p, resume && p.exists())?),
        None => None,
    };
    let todo = &plan.instances[resumed..];
    let mut fresh = Vec::with_capacity(todo.len());
    log::run_ordered(todo, config.jobs, |inst| {
        let base = &plan.bases[inst.base];
        verify_instance(base, inst, config.budget)
    }, |rec| {
        if let Some(w) = writer.as_mut() {
            w.append(&rec)?;
        }
        fresh.push(rec);
        Ok::<(), VerifyError>(())
    })?;
    let mut records = done;
    records.extend(fresh);
    let bases = plan
        .bases
        .iter()
        .map(|b| BaseNote {
            graph6: b.graph6.clone(),
            order: b.graph.order(),
            degree: b.degree,
            status: b.status,
        })
        .collect();
    let summary = Summary::of(&records);
    Ok(SweepReport {
        bases,
        records,
        resumed,
        summary,
    })
}

/// Every split of every class-1 base in the proven range up to `config.m_max`.
pub fn verify_theorem1(config: &SweepConfig, log_path: Option<&Path>, resume: bool) -> Result<SweepReport, VerifyError> {
    let config = SweepConfig {
        filter: DegreeFilter::Theorem,
        ..*config
    };
    run_plan(&plan_sweep(&config)?, &config, log_path, resume)
}

/// The same checks over the conjectured range selected by `config.filter`.
pub fn sweep_conjecture_range(
    config: &SweepConfig,
    log_path: Option<&Path>,
    resume: bool,
) -> Result<SweepReport, VerifyError> {
    run_plan(&plan_sweep(config)?, config, log_path, resume)
}
