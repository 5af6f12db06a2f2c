//! Checks on a single split instance.

use std::sync::Arc;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use super::{Base, Instance};
use crate::coloring::{find_coloring, Budget, Color, ColoringError, Decision, PartialEdgeColoring};
use crate::graph::{is_overfull, vertex_split, Graph, GraphError, SplitSpec, Vertex};
use crate::graph6::emit_graph6;
use crate::record::VerificationRecord;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShortcutError {
    #[error("the base coloring is not a full proper coloring with Δ(base) colors")]
    NotADeltaColoring,
    #[error("the base coloring belongs to a different graph")]
    WrongGraph,
    #[error(transparent)]
    Split(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Carries a `Δ`-coloring of the base onto the split graph with the split
/// edge left uncolored: every edge of the split graph other than `v1v2`
/// corresponds to one base edge and keeps its color. The result witnesses
/// that the split edge is critical once the split graph is class 2.
pub fn split_edge_criticality_shortcut(
    base: &Graph,
    phi: &PartialEdgeColoring,
    spec: &SplitSpec,
) -> Result<PartialEdgeColoring, ShortcutError> {
    if phi.graph().as_ref() != base {
        return Err(ShortcutError::WrongGraph);
    }
    if !phi.is_full() || phi.k() != base.max_degree() {
        return Err(ShortcutError::NotADeltaColoring);
    }
    let split = Arc::new(vertex_split(base, spec)?);
    let v = spec.vertex;
    let v2 = base.order();
    let colors: Vec<Color> = split
        .edges()
        .iter()
        .map(|&(p, q)| {
            if (p, q) == (v, v2) {
                return 0;
            }
            let (p, q) = (if p == v2 { v } else { p }, if q == v2 { v } else { q });
            phi.color_between(p, q).expect("split edges map to base edges")
        })
        .collect();
    Ok(PartialEdgeColoring::new(split, base.max_degree(), colors)?)
}

/// Class and per-edge criticality of a graph, decided by the exact solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub delta: usize,
    pub edges: usize,
    pub connected: bool,
    /// `None` when the budget ran out.
    pub class2: Option<bool>,
    /// Edges `e` for which `G - e` has a `Δ`-coloring.
    pub delta_colorable_deletions: Vec<(Vertex, Vertex)>,
    pub undecided: Vec<(Vertex, Vertex)>,
}

impl CriticalityReport {
    /// Edges whose deletion lowers the chromatic index; zero unless class 2.
    pub fn critical_edges(&self) -> usize {
        if self.class2 == Some(true) {
            self.delta_colorable_deletions.len()
        } else {
            0
        }
    }

    /// `None` while anything is undecided.
    pub fn is_delta_critical(&self) -> Option<bool> {
        if !self.undecided.is_empty() {
            return None;
        }
        let class2 = self.class2?;
        Some(class2 && self.connected && self.critical_edges() == self.edges)
    }
}

pub fn edge_criticality(g: &Arc<Graph>, budget: Budget) -> CriticalityReport {
    let delta = g.max_degree();
    let class2 = match find_coloring(g, delta, None, budget).expect("palette fits") {
        Decision::Found(_) => Some(false),
        Decision::Impossible => Some(true),
        Decision::Undecided => None,
    };
    let mut colorable = Vec::new();
    let mut undecided = Vec::new();
    for (e, &uv) in g.edges().iter().enumerate() {
        match find_coloring(g, delta, Some(e), budget).expect("palette fits") {
            Decision::Found(_) => colorable.push(uv),
            Decision::Impossible => {}
            Decision::Undecided => undecided.push(uv),
        }
    }
    CriticalityReport {
        delta,
        edges: g.size(),
        connected: g.is_connected(),
        class2,
        delta_colorable_deletions: colorable,
        undecided,
    }
}

/// Overfull, class 2 and `Δ`-critical for one split.
pub fn verify_instance(base: &Base, inst: &Instance, budget: Budget) -> VerificationRecord {
    let g0 = &base.graph;
    let g = Arc::new(vertex_split(g0, &inst.spec).expect("planned splits are valid"));
    let split = (inst.spec.vertex, g0.order());

    let rec = VerificationRecord::new("split_critical")
        .for_instance(inst.id.to_string())
        .hypothesis("base_regular", g0.regular_degree().is_some())
        .hypothesis("base_connected", g0.is_connected())
        .hypothesis("base_class1", base.coloring.is_some());

    let overfull = is_overfull(&g);
    let inherited = base
        .coloring
        .as_ref()
        .map(|phi| split_edge_criticality_shortcut(g0, phi, &inst.spec).is_ok())
        .unwrap_or(false);
    let report = edge_criticality(&g, budget);
    let non_critical: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .copied()
        .filter(|uv| !report.delta_colorable_deletions.contains(uv) && !report.undecided.contains(uv))
        .collect();
    let split_edge_solver = report.delta_colorable_deletions.contains(&split);
    let agrees = report.undecided.contains(&split) || split_edge_solver == inherited;

    let witness = json!({
        "split_graph6": emit_graph6(&g),
        "order": g.order(),
        "delta": report.delta,
        "edges": g.size(),
        "overfull": overfull,
        "class2": report.class2,
        "critical_edges": report.critical_edges(),
        "split_edge_inherited": inherited,
        "split_edge_solver_agrees": agrees,
        "non_critical": non_critical,
    });
    let rec = rec.with_witness(witness);
    match report.is_delta_critical() {
        None => rec.undecided(),
        Some(critical) => rec.conclude(overfull && critical && inherited && agrees),
    }
}
