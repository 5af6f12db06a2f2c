//! Runs every lemma checker over a corpus of graphs.
//!
//! For each edge `e` the exact solver supplies a `Δ`-coloring of `G - e` when
//! one exists; a few more are reached from it by Kempe changes so that the
//! checks see more than one coloring per edge.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::Arc;

use rayon::prelude::*;

use super::{plan_for_bases, BaseStatus};
use crate::builders::{complete, complete_bipartite, complete_minus_perfect_matching, cycle, hypercube, petersen_minus_vertex, prism};
use crate::coloring::{find_coloring, Budget, Color, Decision, PartialEdgeColoring};
use crate::fans::{
    build_maximal_multifan, case1_script, check_claim2_linkage, check_deficiency_count,
    check_deficient_vertex_bound, check_full_deficiency_lemma, check_kierstead_lemma,
    check_multifan_lemma, check_parity, check_short_kite_lemma, check_val, enumerate_kierstead_paths,
    execute_script, find_full_deficiency_pairs, find_short_kites_at, Certified,
};
use crate::generate::enumerate_regular_graphs;
use crate::graph::{vertex_split, Graph, GraphError};
use crate::record::{Outcome, Summary, VerificationRecord};

#[derive(Debug, Clone, Copy)]
pub struct LemmaSuiteConfig {
    /// Colorings examined per edge, the solver's own included.
    pub samples_per_edge: usize,
    pub budget: Budget,
    pub jobs: usize,
}

impl Default for LemmaSuiteConfig {
    fn default() -> Self {
        LemmaSuiteConfig {
            samples_per_edge: 4,
            budget: Budget::millis(60_000),
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub per_lemma: BTreeMap<String, Summary>,
    /// Every record with outcome `fail`, with its witness.
    pub failures: Vec<VerificationRecord>,
    /// Graph ids, or `id/e<u>-<v>`, where the solver ran out of budget.
    pub undecided: Vec<String>,
    pub graphs: usize,
    pub colorings: usize,
}

impl SuiteReport {
    fn add(&mut self, rec: VerificationRecord) {
        self.per_lemma.entry(rec.lemma.clone()).or_default().add(&rec);
        if rec.outcome == Outcome::Fail {
            self.failures.push(rec);
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        for (k, v) in other.per_lemma {
            self.per_lemma.entry(k).or_default().merge(v);
        }
        self.failures.extend(other.failures);
        self.undecided.extend(other.undecided);
        self.graphs += other.graphs;
        self.colorings += other.colorings;
    }

    pub fn total(&self) -> Summary {
        let mut s = Summary::default();
        for v in self.per_lemma.values() {
            s.merge(*v);
        }
        s
    }

    pub fn clean(&self) -> bool {
        self.failures.is_empty() && self.undecided.is_empty()
    }
}

/// Every split, up to symmetry, of the class-1 connected bases among `bases`.
pub fn split_corpus(bases: Vec<Graph>) -> Vec<(String, Graph)> {
    let plan = plan_for_bases(bases, Budget::unlimited());
    plan.instances
        .iter()
        .map(|inst| {
            let base = &plan.bases[inst.base];
            debug_assert_eq!(base.status, BaseStatus::Included);
            let g = vertex_split(&base.graph, &inst.spec).expect("planned split");
            (inst.id.to_string(), g)
        })
        .collect()
}

fn with_small_critical_graphs(mut out: Vec<(String, Graph)>) -> Vec<(String, Graph)> {
    for n in [3, 5, 7, 9] {
        out.push((format!("C{n}"), cycle(n)));
    }
    out.push(("petersen_minus_vertex".to_string(), petersen_minus_vertex()));
    out
}

/// Splits of the seven regular bases used by the sweeps, odd cycles from 3 to
/// 9, and the Petersen graph minus a vertex, each with a readable id.
pub fn lemma_corpus() -> Vec<(String, Graph)> {
    with_small_critical_graphs(split_corpus(vec![
        complete(4),
        complete(6),
        complete_minus_perfect_matching(8),
        complete(8),
        complete_bipartite(3, 3),
        prism(3),
        hypercube(3),
    ]))
}

/// Splits of every connected class-1 regular graph of even order up to
/// `m_max` and degree at least 2, plus the graphs added by [`lemma_corpus`].
pub fn extended_lemma_corpus(m_max: usize) -> Result<Vec<(String, Graph)>, GraphError> {
    let mut bases = Vec::new();
    for m in (4..=m_max).step_by(2) {
        for d in 2..m {
            bases.extend(enumerate_regular_graphs(m, d)?);
        }
    }
    Ok(with_small_critical_graphs(split_corpus(bases)))
}

/// Up to `limit` distinct colorings reachable from `phi` by whole-chain Kempe
/// changes, breadth first, `phi` first.
pub fn kempe_neighborhood(phi: &PartialEdgeColoring, limit: usize) -> Vec<PartialEdgeColoring> {
    let mut seen: HashSet<Vec<Color>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(phi.colors().to_vec());
    queue.push_back(phi.clone());
    let k = phi.k() as Color;
    while let Some(cur) = queue.pop_front() {
        out.push(cur.clone());
        if out.len() >= limit {
            break;
        }
        for v in cur.graph().vertices() {
            for alpha in 1..=k {
                for beta in alpha + 1..=k {
                    let next = cur.swap_at(v, alpha, beta).expect("valid colors");
                    if seen.insert(next.colors().to_vec()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    out
}

fn check_coloring(report: &mut SuiteReport, id: &str, phi: &PartialEdgeColoring, class2: bool) {
    let tag = |rec: VerificationRecord| rec.for_instance(id.to_string());
    let (a, b) = phi.uncolored_edge().expect("one uncolored edge");
    for center in [a, b] {
        let fan = build_maximal_multifan(phi, center).expect("center is on the uncolored edge");
        for rec in check_multifan_lemma(phi, &fan, class2) {
            report.add(tag(rec));
        }
    }
    for path in enumerate_kierstead_paths(phi, 3) {
        for rec in check_kierstead_lemma(phi, &path, class2) {
            report.add(tag(rec));
        }
    }
    let deleted = phi.as_coloring_of_deleted().expect("one uncolored edge");
    report.add(tag(check_parity(&deleted)));
    report.add(tag(check_deficiency_count(phi, class2)));
    for (s, t) in [(a, b), (b, a)] {
        for kite in find_short_kites_at(phi.graph(), s, t) {
            report.add(tag(check_short_kite_lemma(phi, &kite, class2)));
            report.add(tag(check_claim2_linkage(phi, &kite, class2)));
            if let Some(script) = case1_script(phi, &kite) {
                // a completed script would be a full Δ-coloring of the host
                let done = execute_script(phi, &script).ok().map(|run| run.result);
                let rec = VerificationRecord::new("kite_recoloring_blocked")
                    .hypothesis("class2", class2)
                    .conclude(done.as_ref().is_none_or(|c| !c.is_full()));
                report.add(tag(rec));
            }
        }
    }
}

fn check_graph(id: &str, g: &Graph, config: &LemmaSuiteConfig) -> SuiteReport {
    let g = Arc::new(g.clone());
    let delta = g.max_degree();
    let mut report = SuiteReport {
        graphs: 1,
        ..SuiteReport::default()
    };
    let class2 = match find_coloring(&g, delta, None, config.budget).expect("palette fits") {
        Decision::Found(_) => false,
        Decision::Impossible => true,
        Decision::Undecided => {
            report.undecided.push(id.to_string());
            false
        }
    };
    let mut critical = vec![false; g.size()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let edge_id = format!("{id}/e{a}-{b}");
        let phi = match find_coloring(&g, delta, Some(e), config.budget).expect("palette fits") {
            Decision::Found(phi) => Some(phi),
            Decision::Impossible => None,
            Decision::Undecided => {
                report.undecided.push(edge_id.clone());
                None
            }
        };
        critical[e] = class2 && phi.is_some();
        let cert = Certified {
            class2,
            critical: critical[e],
        };
        report.add(check_val(&g, a, b, cert).for_instance(edge_id.clone()));
        if let Some(phi) = phi {
            for (i, psi) in kempe_neighborhood(&phi, config.samples_per_edge).iter().enumerate() {
                report.colorings += 1;
                check_coloring(&mut report, &format!("{edge_id}/s{i}"), psi, class2);
            }
        }
    }
    for pair in find_full_deficiency_pairs(&g) {
        let e = g.edge_id(pair.u, pair.v).expect("pairs are edges");
        let cert = Certified {
            class2,
            critical: critical[e],
        };
        let pid = format!("{id}/pair{}-{}", pair.u, pair.v);
        for rec in check_full_deficiency_lemma(&g, pair.u, pair.v, cert) {
            report.add(rec.for_instance(pid.clone()));
        }
        report.add(check_deficient_vertex_bound(&g, pair.u, pair.v, cert).for_instance(pid));
    }
    report
}

/// Runs every checker over `corpus`. Results do not depend on `config.jobs`.
pub fn run_lemma_suite(corpus: &[(String, Graph)], config: &LemmaSuiteConfig) -> SuiteReport {
    let per_graph: Vec<SuiteReport> = if config.jobs <= 1 {
        corpus.iter().map(|(id, g)| check_graph(id, g, config)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| corpus.par_iter().map(|(id, g)| check_graph(id, g, config)).collect())
    };
    let mut report = SuiteReport::default();
    for r in per_graph {
        report.merge(r);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kempe_neighborhood_is_distinct_and_proper() {
        let g = Arc::new(petersen_minus_vertex());
        let phi = find_coloring(&g, 3, Some(0), Budget::unlimited()).unwrap().found().unwrap();
        let near = kempe_neighborhood(&phi, 6);
        assert_eq!(near[0], phi);
        let distinct: HashSet<_> = near.iter().map(|p| p.colors().to_vec()).collect();
        assert_eq!(distinct.len(), near.len());
        for p in &near {
            p.check_proper().unwrap();
            assert_eq!(p.uncolored(), Some(0));
        }
    }

    #[test]
    fn odd_cycles_and_petersen_minus_vertex_are_clean() {
        let corpus: Vec<(String, Graph)> = vec![
            ("C5".into(), cycle(5)),
            ("C7".into(), cycle(7)),
            ("P".into(), petersen_minus_vertex()),
        ];
        let report = run_lemma_suite(&corpus, &LemmaSuiteConfig::default());
        assert!(report.clean(), "{:?}", report.failures.first());
        assert!(report.per_lemma["parity"].pass > 0);
        assert!(report.per_lemma["vizing_adjacency"].pass > 0);
        assert!(report.per_lemma["multifan_elementary"].pass > 0);
    }

    #[test]
    fn class1_graph_gives_only_skips() {
        // nothing is critical in a class-1 graph; only the parity count applies to any coloring
        let report = run_lemma_suite(&[("K33".into(), complete_bipartite(3, 3))], &LemmaSuiteConfig::default());
        assert_eq!(report.graphs, 1);
        for (lemma, s) in &report.per_lemma {
            if lemma == "parity" {
                assert!(s.pass > 0 && s.fail == 0);
            } else {
                assert_eq!(s.pass + s.fail, 0, "{lemma}: {s:?}");
            }
        }
    }

    #[test]
    fn corpora() {
        let small = lemma_corpus();
        // K4 1, K6 2, K8-PM 5, K8 3, K3,3 1, prism 2, Q3 1, four odd cycles, P*
        assert_eq!(small.len(), 15 + 5);
        let big = extended_lemma_corpus(8).unwrap();
        let ids: HashSet<&String> = big.iter().map(|(id, _)| id).collect();
        assert_eq!(ids.len(), big.len());
        assert!(small.iter().all(|(id, _)| ids.contains(id)));
    }

    #[test]
    fn job_count_does_not_change_the_report() {
        let corpus: Vec<(String, Graph)> = lemma_corpus().into_iter().take(3).collect();
        let one = run_lemma_suite(&corpus, &LemmaSuiteConfig::default());
        let many = run_lemma_suite(&corpus, &LemmaSuiteConfig { jobs: 3, ..LemmaSuiteConfig::default() });
        assert_eq!(one.per_lemma, many.per_lemma);
        assert_eq!(one.colorings, many.colorings);
    }
}
