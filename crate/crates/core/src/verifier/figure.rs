//! Search for a four-vertex Kierstead path whose vertex set is not
//! elementary, in a 3-coloring of the Petersen graph minus a vertex with one
//! edge removed.

use std::ops::ControlFlow;
use std::sync::Arc;

use serde_json::json;

use crate::builders::petersen_minus_vertex;
use crate::coloring::{for_each_coloring, Budget, EnumerationEnd, PartialEdgeColoring};
use crate::fans::{check_kierstead_lemma, enumerate_kierstead_paths, KiersteadPath};
use crate::graph6::emit_graph6;
use crate::record::VerificationRecord;

struct Found {
    phi: PartialEdgeColoring,
    path: KiersteadPath,
}

/// Scans edges in id order and colorings of `P* - e` in solver order, stopping
/// at the first non-elementary four-vertex Kierstead path. The witness is
/// re-validated from scratch before the record concludes.
pub fn reproduce_figure1(budget: Budget) -> VerificationRecord {
    let g = Arc::new(petersen_minus_vertex());
    let delta = g.max_degree();
    let rec = VerificationRecord::new("nonelementary_kierstead_example").for_instance(emit_graph6(&g));
    let mut found = None;
    let mut out_of_budget = false;
    for e in 0..g.size() {
        let end = for_each_coloring(&g, delta, Some(e), budget, |phi| {
            for path in enumerate_kierstead_paths(phi, 3) {
                if !phi.is_elementary(path.vertices()) {
                    found = Some(Found {
                        phi: phi.clone(),
                        path,
                    });
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        })
        .expect("palette fits");
        if end == EnumerationEnd::OutOfBudget {
            out_of_budget = true;
        }
        if found.is_some() {
            break;
        }
    }
    let Some(Found { phi, path }) = found else {
        return if out_of_budget { rec.undecided() } else { rec.conclude(false) };
    };

    // independent re-check: rebuild the coloring from its text form
    let again = PartialEdgeColoring::from_text(g.clone(), &phi.to_text()).expect("round trip");
    let proper = again.check_proper().is_ok();
    let path_valid = path.validate(&again).is_ok();
    let vs = path.vertices();
    let non_elementary = !again.is_elementary(vs);
    let inner_min_degree = g.degree(vs[1]).min(g.degree(vs[2]));
    let [part_a, part_b] = check_kierstead_lemma(&again, &path, true);
    let (u, v) = again.uncolored_edge().expect("one edge is left uncolored");
    let clash = again.elementary_violation(vs);
    rec.with_witness(json!({
        "graph6": emit_graph6(&g),
        "uncolored_edge": [u, v],
        "coloring": again.to_text(),
        "path": vs,
        "shared_missing": clash.map(|(p, q, c)| json!({"vertices": [p, q], "color": c})),
        "coloring_proper": proper,
        "path_valid": path_valid,
        "non_elementary": non_elementary,
        "inner_min_degree": inner_min_degree,
        "delta": delta,
        "elementary_part": part_a.outcome,
        "intersection_part": part_b.outcome,
    }))
    .conclude(proper && path_valid && non_elementary)
}
