//! `edgecrit`: chromatic index, colorings, criticality, lemma checks and
//! split sweeps from the command line.
//!
//! Exit codes: 0 pass, 1 fail, 2 usage or input error, 3 undecided.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use edgecrit::builders::by_name;
use edgecrit::coloring::{find_coloring, vizing_color, Budget, Decision};
use edgecrit::graph::{is_overfull, vertex_split};
use edgecrit::graph6::{emit_graph6, parse_graph6, parse_graph6_lines};
use edgecrit::verifier::{
    edge_criticality, reproduce_figure1, run_lemma_suite, sweep_conjecture_range, verify_theorem1,
    CriticalityReport, DegreeFilter, LemmaSuiteConfig, SweepConfig, SweepReport,
};
use edgecrit::{Graph, Outcome, SplitSpec};

/// `println!` that exits quietly when the reader has gone away, as in `| head`.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if let Err(e) = writeln!(std::io::stdout(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("cannot write to stdout: {e}");
        }
    }};
}

#[derive(Parser)]
#[command(name = "edgecrit", version, about = "Edge-coloring and vertex-split criticality checks")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone)]
#[group(multiple = false)]
struct Input {
    /// Named graph: petersen, P*, Kn, Cn, Pn, Ka,b, Kn-PM, prismN, Qd.
    #[arg(long)]
    builder: Option<String>,
    /// A graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// File with one graph6 string per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Time limit per exact-solver call, in milliseconds.
    #[arg(long, default_value_t = 60_000)]
    budget_ms: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

impl Common {
    fn budget(&self) -> Budget {
        Budget::millis(self.budget_ms)
    }

    fn jobs(&self) -> usize {
        self.jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
            .max(1)
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Largest base order (even).
    #[arg(long, default_value_t = 8)]
    m_max: usize,
    /// Allow base orders above 8.
    #[arg(long)]
    long: bool,
    /// JSON-lines log of per-instance records.
    #[arg(long)]
    log: Option<PathBuf>,
    /// Continue the run recorded in --log.
    #[arg(long, requires = "log")]
    resume: bool,
    #[command(flatten)]
    common: Common,
}

impl SweepArgs {
    fn config(&self, filter: DegreeFilter) -> SweepConfig {
        SweepConfig {
            m_max: self.m_max,
            filter,
            budget: self.common.budget(),
            jobs: self.common.jobs(),
            long: self.long,
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Maximum degree, chromatic index and class.
    Chi {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
    /// A proper edge coloring: exact with Δ colors when possible, else fan rotation with Δ+1.
    Color {
        #[command(flatten)]
        input: Input,
        /// Always use the Δ+1 fan-rotation coloring.
        #[arg(long)]
        vizing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Whether the graph is Δ-critical, edge by edge.
    Critical {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
    /// Split a vertex and print the resulting graph.
    Split {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
        /// Neighbors that stay with the original vertex, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        part: Vec<usize>,
        /// Also decide class and criticality of the split graph.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run every lemma checker on the input graphs.
    Lemmas {
        #[command(flatten)]
        input: Input,
        /// Colorings per edge, reached by Kempe changes from the solver's.
        #[arg(long, default_value_t = 4)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// All splits of class-1 regular bases with 4Δ ≥ 3m.
    Theorem1 {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// All splits over a chosen degree range.
    Sweep {
        /// theorem, conjecture (3Δ > m+1), conjecture-base (3Δ > m) or degree=LO..HI.
        #[arg(long, default_value = "conjecture", value_parser = parse_filter)]
        filter: DegreeFilter,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Search for a non-elementary four-vertex Kierstead path in P* minus an edge.
    Figure1 {
        #[command(flatten)]
        common: Common,
    },
}

fn parse_filter(s: &str) -> Result<DegreeFilter, String> {
    DegreeFilter::parse(s).ok_or_else(|| format!("unknown filter {s:?}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Pass,
    Fail,
    Undecided,
}

impl Verdict {
    fn code(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Undecided => 3,
        }
    }

    /// Failure outranks undecided, which outranks pass.
    fn worst(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Undecided, _) | (_, Verdict::Undecided) => Verdict::Undecided,
            _ => Verdict::Pass,
        }
    }
}

fn load(input: &Input) -> Result<Vec<(String, Graph)>> {
    if let Some(name) = &input.builder {
        let g = by_name(name).with_context(|| format!("unknown builder {name:?}"))?;
        return Ok(vec![(name.clone(), g)]);
    }
    if let Some(text) = &input.graph6 {
        let g = parse_graph6(text).with_context(|| format!("malformed graph6 {text:?}"))?;
        return Ok(vec![(text.trim().to_string(), g)]);
    }
    let text = match &input.file {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("cannot read stdin")?;
            s
        }
    };
    let graphs = parse_graph6_lines(&text).context("malformed graph6 input")?;
    if graphs.is_empty() {
        bail!("no graphs in input");
    }
    Ok(graphs.into_iter().map(|g| (emit_graph6(&g), g)).collect())
}

fn load_one(input: &Input) -> Result<(String, Graph)> {
    let mut graphs = load(input)?;
    if graphs.len() != 1 {
        bail!("expected one graph, got {}", graphs.len());
    }
    Ok(graphs.remove(0))
}

/// Prints `line` prefixed by the graph id when several graphs are processed.
fn emit(many: bool, id: &str, line: &str) {
    if many {
        out!("{id}  {line}");
    } else {
        out!("{line}");
    }
}

fn chi(input: &Input, common: &Common) -> Result<Verdict> {
    let graphs = load(input)?;
    let many = graphs.len() > 1;
    let mut verdict = Verdict::Pass;
    for (id, g) in graphs {
        let delta = g.max_degree();
        let decision = find_coloring(&Arc::new(g.clone()), delta, None, common.budget())?;
        let chi = match decision {
            Decision::Found(_) => Some(delta),
            Decision::Impossible => Some(delta + 1),
            Decision::Undecided => None,
        };
        if chi.is_none() {
            verdict = Verdict::Undecided;
        }
        let class = chi.map(|c| if c == delta { 1 } else { 2 });
        if common.json {
            out!(
                "{}",
                json!({"graph": id, "graph6": emit_graph6(&g), "delta": delta, "chromatic_index": chi, "class": class})
            );
        } else {
            let text = |v: Option<usize>| v.map_or("?".to_string(), |v| v.to_string());
            emit(many, &id, &format!("Δ={delta} χ'={} class={}", text(chi), text(class)));
        }
    }
    Ok(verdict)
}

fn color(input: &Input, vizing: bool, common: &Common) -> Result<Verdict> {
    let (id, g) = load_one(input)?;
    let g = Arc::new(g);
    let exact = if vizing {
        None
    } else {
        find_coloring(&g, g.max_degree(), None, common.budget())?.found()
    };
    let (phi, method) = match exact {
        Some(phi) => (phi, "exact"),
        None => (vizing_color(&g), "fan-rotation"),
    };
    let rows: Vec<(usize, usize, u8)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (u, v, phi.color(e).unwrap_or(0)))
        .collect();
    if common.json {
        out!(
            "{}",
            json!({"graph": id, "graph6": emit_graph6(&g), "k": phi.k(), "method": method, "colors": rows})
        );
    } else {
        out!("k={} method={method}", phi.k());
        let w = g.order().saturating_sub(1).to_string().len().max(1);
        out!("{:>w$} {:>w$} color", "u", "v");
        for (u, v, c) in rows {
            out!("{u:>w$} {v:>w$} {c:>5}");
        }
    }
    Ok(Verdict::Pass)
}

fn criticality_line(r: &CriticalityReport) -> String {
    let verdict = match r.is_delta_critical() {
        Some(true) => "true",
        Some(false) => "false",
        None => "undecided",
    };
    let mut line = format!("delta-critical: {verdict} ({}/{} edges critical)", r.critical_edges(), r.edges);
    if !r.undecided.is_empty() || r.class2.is_none() {
        line.push_str(&format!(", {} edges undecided", r.undecided.len()));
    }
    line
}

fn criticality_verdict(r: &CriticalityReport) -> Verdict {
    match r.is_delta_critical() {
        Some(true) => Verdict::Pass,
        Some(false) => Verdict::Fail,
        None => Verdict::Undecided,
    }
}

fn critical(input: &Input, common: &Common) -> Result<Verdict> {
    let graphs = load(input)?;
    let many = graphs.len() > 1;
    let mut verdict = Verdict::Pass;
    for (id, g) in graphs {
        let r = edge_criticality(&Arc::new(g.clone()), common.budget());
        verdict = verdict.worst(criticality_verdict(&r));
        if common.json {
            out!(
                "{}",
                json!({"graph": id, "graph6": emit_graph6(&g), "delta_critical": r.is_delta_critical(), "critical_edges": r.critical_edges(), "report": r})
            );
        } else {
            emit(many, &id, &criticality_line(&r));
        }
    }
    Ok(verdict)
}

fn split(input: &Input, vertex: usize, part: &[usize], check: bool, common: &Common) -> Result<Verdict> {
    let (_, g0) = load_one(input)?;
    let spec = SplitSpec::with_part(&g0, vertex, part)?;
    let g = Arc::new(vertex_split(&g0, &spec)?);
    let report = check.then(|| edge_criticality(&g, common.budget()));
    if common.json {
        out!(
            "{}",
            json!({
                "graph6": emit_graph6(&g),
                "order": g.order(),
                "size": g.size(),
                "delta": g.max_degree(),
                "overfull": is_overfull(&g),
                "split_edge": [vertex, g0.order()],
                "criticality": report,
            })
        );
    } else {
        out!("{}", emit_graph6(&g));
        out!(
            "n={} m={} Δ={} overfull={} split edge {}-{}",
            g.order(),
            g.size(),
            g.max_degree(),
            is_overfull(&g),
            vertex,
            g0.order()
        );
        if let Some(r) = &report {
            out!("{}", criticality_line(r));
        }
    }
    Ok(report.as_ref().map_or(Verdict::Pass, criticality_verdict))
}

fn lemmas(input: &Input, samples: usize, common: &Common) -> Result<Verdict> {
    let corpus = load(input)?;
    let config = LemmaSuiteConfig {
        samples_per_edge: samples.max(1),
        budget: common.budget(),
        jobs: common.jobs(),
    };
    let report = run_lemma_suite(&corpus, &config);
    let verdict = if !report.failures.is_empty() {
        Verdict::Fail
    } else if !report.undecided.is_empty() {
        Verdict::Undecided
    } else {
        Verdict::Pass
    };
    if common.json {
        out!(
            "{}",
            json!({
                "graphs": report.graphs,
                "colorings": report.colorings,
                "per_lemma": report.per_lemma,
                "failures": report.failures,
                "undecided": report.undecided,
            })
        );
        return Ok(verdict);
    }
    let w = report.per_lemma.keys().map(|k| k.len()).max().unwrap_or(5).max(5);
    out!("{} graphs, {} colorings", report.graphs, report.colorings);
    out!("{:<w$} {:>8} {:>8} {:>8} {:>9}", "check", "pass", "fail", "skipped", "undecided");
    for (name, s) in &report.per_lemma {
        out!("{name:<w$} {:>8} {:>8} {:>8} {:>9}", s.pass, s.fail, s.skipped, s.undecided);
    }
    for rec in &report.failures {
        out!("violation: {}", rec.to_json_line());
    }
    for id in &report.undecided {
        out!("undecided: {id}");
    }
    Ok(verdict)
}

fn print_sweep(report: &SweepReport, json_mode: bool) -> Verdict {
    let failures: Vec<_> = report.records.iter().filter(|r| r.outcome == Outcome::Fail).collect();
    let verdict = if !failures.is_empty() {
        Verdict::Fail
    } else if !report.clean() {
        Verdict::Undecided
    } else {
        Verdict::Pass
    };
    if json_mode {
        out!(
            "{}",
            json!({
                "bases": report.bases,
                "instances": report.records.len(),
                "resumed": report.resumed,
                "summary": report.summary,
                "failures": failures,
            })
        );
        return verdict;
    }
    let w = report.bases.iter().map(|b| b.graph6.len()).max().unwrap_or(6).max(6);
    out!("{:<w$} {:>3} {:>3}  status", "base", "m", "Δ");
    for b in &report.bases {
        let status = serde_json::to_value(b.status).unwrap();
        out!("{:<w$} {:>3} {:>3}  {}", b.graph6, b.order, b.degree, status.as_str().unwrap_or(""));
    }
    let s = report.summary;
    out!(
        "instances: {} (resumed {})  pass {}  fail {}  skipped {}  undecided {}",
        report.records.len(),
        report.resumed,
        s.pass,
        s.fail,
        s.skipped,
        s.undecided
    );
    for rec in report.records.iter().filter(|r| r.outcome != Outcome::Pass) {
        out!("{}: {}", serde_json::to_value(rec.outcome).unwrap().as_str().unwrap_or(""), rec.to_json_line());
    }
    verdict
}

fn figure1(common: &Common) -> Result<Verdict> {
    let rec = reproduce_figure1(common.budget());
    let verdict = match rec.outcome {
        Outcome::Pass => Verdict::Pass,
        Outcome::Undecided => Verdict::Undecided,
        _ => Verdict::Fail,
    };
    if common.json {
        out!("{}", rec.to_json_line());
        return Ok(verdict);
    }
    let w = rec.witness.clone().unwrap_or_default();
    out!("found: {}", rec.outcome == Outcome::Pass);
    for key in ["uncolored_edge", "path", "shared_missing", "path_valid", "non_elementary", "inner_min_degree"] {
        out!("{key}: {}", w[key]);
    }
    if let Some(text) = w["coloring"].as_str() {
        out!("coloring:\n{}", text.trim_end());
    }
    Ok(verdict)
}

fn run(cli: Cli) -> Result<Verdict> {
    match cli.verb {
        Verb::Chi { input, common } => chi(&input, &common),
        Verb::Color { input, vizing, common } => color(&input, vizing, &common),
        Verb::Critical { input, common } => critical(&input, &common),
        Verb::Split {
            input,
            vertex,
            part,
            check,
            common,
        } => split(&input, vertex, &part, check, &common),
        Verb::Lemmas { input, samples, common } => lemmas(&input, samples, &common),
        Verb::Theorem1 { sweep } => {
            let config = sweep.config(DegreeFilter::Theorem);
            let report = verify_theorem1(&config, sweep.log.as_deref(), sweep.resume)?;
            Ok(print_sweep(&report, sweep.common.json))
        }
        Verb::Sweep { filter, sweep } => {
            let config = sweep.config(filter);
            let report = sweep_conjecture_range(&config, sweep.log.as_deref(), sweep.resume)?;
            Ok(print_sweep(&report, sweep.common.json))
        }
        Verb::Figure1 { common } => figure1(&common),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(v) => ExitCode::from(v.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
