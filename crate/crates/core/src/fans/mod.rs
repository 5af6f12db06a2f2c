//! Multifans, Kierstead paths, short-kites and full-deficiency pairs.
//!
//! Every structure can be rebuilt from its vertex sequence and re-validated
//! against a coloring with `validate`, independently of the finder that
//! produced it.

mod lemmas;
mod script;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{ColorSet, PartialEdgeColoring};
use crate::graph::{EdgeId, Graph, Vertex};

pub use lemmas::{
    check_claim2_linkage, check_deficiency_count, check_deficient_vertex_bound,
    check_full_deficiency_lemma, check_kierstead_lemma, check_multifan_lemma, check_parity,
    check_short_kite_lemma, check_val, claim2_auxiliary_fan, Certified,
};
pub use script::{
    case1_script, execute_script, Case1Colors, Execution, RecolorScript, ScriptError, Step,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("the first edge {0}-{1} is not the uncolored edge")]
    FirstEdgeColored(Vertex, Vertex),
    #[error("coloring has no uncolored edge at vertex {0}")]
    NoUncoloredEdgeAt(Vertex),
    #[error("vertex {0} repeats")]
    RepeatedVertex(Vertex),
    #[error("entry {0} breaks the fan condition")]
    FanCondition(usize),
    #[error("edge {0} breaks the path condition")]
    PathCondition(usize),
    #[error("sequence is empty or too short")]
    TooShort,
    #[error("kite edge {0}-{1} is missing")]
    MissingKiteEdge(Vertex, Vertex),
    #[error("({0}, {1}) is not a full-deficiency pair")]
    NotFullDeficiency(Vertex, Vertex),
}

/// `(r, rs_1, s_1, …, rs_p, s_p)`; `rs_1` is the uncolored edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multifan {
    center: Vertex,
    leaves: Vec<Vertex>,
}

impl Multifan {
    pub fn new(center: Vertex, leaves: Vec<Vertex>) -> Self {
        Multifan { center, leaves }
    }

    pub fn center(&self) -> Vertex {
        self.center
    }

    pub fn leaves(&self) -> &[Vertex] {
        &self.leaves
    }

    /// `r` followed by the leaves.
    pub fn vertices(&self) -> Vec<Vertex> {
        std::iter::once(self.center).chain(self.leaves.iter().copied()).collect()
    }

    pub fn edges(&self, g: &Graph) -> Result<Vec<EdgeId>, FanError> {
        self.leaves
            .iter()
            .map(|&s| g.edge_id(self.center, s).ok_or(FanError::NotAnEdge(self.center, s)))
            .collect()
    }

    /// Checks distinctness, that `rs_1` is uncolored, and the fan condition.
    pub fn validate(&self, phi: &PartialEdgeColoring) -> Result<(), FanError> {
        let g = phi.graph();
        if self.leaves.is_empty() {
            return Err(FanError::TooShort);
        }
        check_distinct(&self.vertices())?;
        let edges = self.edges(g)?;
        if phi.color(edges[0]).is_some() {
            return Err(FanError::FirstEdgeColored(self.center, self.leaves[0]));
        }
        let mut reachable = phi.missing(self.leaves[0]);
        for i in 1..self.leaves.len() {
            match phi.color(edges[i]) {
                Some(c) if reachable.contains(c) => {}
                _ => return Err(FanError::FanCondition(i)),
            }
            reachable = reachable.union(phi.missing(self.leaves[i]));
        }
        Ok(())
    }
}

fn check_distinct(vs: &[Vertex]) -> Result<(), FanError> {
    for (i, v) in vs.iter().enumerate() {
        if vs[..i].contains(v) {
            return Err(FanError::RepeatedVertex(*v));
        }
    }
    Ok(())
}

/// Grows a multifan at `center` from the uncolored edge, each time adding the
/// lowest-id admissible edge, until none is left.
pub fn build_maximal_multifan(phi: &PartialEdgeColoring, center: Vertex) -> Result<Multifan, FanError> {
    let g = phi.graph();
    let (u, v) = phi.uncolored_edge().ok_or(FanError::NoUncoloredEdgeAt(center))?;
    let first = match center {
        c if c == u => v,
        c if c == v => u,
        _ => return Err(FanError::NoUncoloredEdgeAt(center)),
    };
    let mut leaves = vec![first];
    let mut reachable = phi.missing(first);
    loop {
        let next = g
            .incident(center)
            .iter()
            .filter(|&&(s, e)| !leaves.contains(&s) && phi.color(e).is_some_and(|c| reachable.contains(c)))
            .min_by_key(|&&(_, e)| e);
        match next {
            Some(&(s, _)) => {
                leaves.push(s);
                reachable = reachable.union(phi.missing(s));
            }
            None => break,
        }
    }
    Ok(Multifan::new(center, leaves))
}

/// `(v_0, v_0v_1, v_1, …, v_p)` with `v_0v_1` uncolored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KiersteadPath {
    vertices: Vec<Vertex>,
}

impl KiersteadPath {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        KiersteadPath { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn validate(&self, phi: &PartialEdgeColoring) -> Result<(), FanError> {
        let g = phi.graph();
        let vs = &self.vertices;
        if vs.len() < 2 {
            return Err(FanError::TooShort);
        }
        check_distinct(vs)?;
        let first = g.edge_id(vs[0], vs[1]).ok_or(FanError::NotAnEdge(vs[0], vs[1]))?;
        if phi.color(first).is_some() {
            return Err(FanError::FirstEdgeColored(vs[0], vs[1]));
        }
        let mut reachable = ColorSet::EMPTY;
        for i in 1..vs.len() - 1 {
            reachable = reachable.union(phi.missing(vs[i - 1]));
            let e = g.edge_id(vs[i], vs[i + 1]).ok_or(FanError::NotAnEdge(vs[i], vs[i + 1]))?;
            match phi.color(e) {
                Some(c) if reachable.contains(c) => {}
                _ => return Err(FanError::PathCondition(i)),
            }
        }
        Ok(())
    }

    /// The multifan read off a path with at most three vertices.
    pub fn as_multifan(&self) -> Option<Multifan> {
        (self.vertices.len() <= 3 && self.vertices.len() >= 2).then(|| {
            let mut leaves = vec![self.vertices[0]];
            leaves.extend(self.vertices.get(2));
            Multifan::new(self.vertices[1], leaves)
        })
    }
}

/// All Kierstead paths with `edges` edges that start with the uncolored edge,
/// in either orientation. Lower-numbered start first, then neighbors ascending.
pub fn enumerate_kierstead_paths(phi: &PartialEdgeColoring, edges: usize) -> Vec<KiersteadPath> {
    let mut out = Vec::new();
    let Some((a, b)) = phi.uncolored_edge() else {
        return out;
    };
    if edges == 0 {
        return out;
    }
    fn extend(
        phi: &PartialEdgeColoring,
        path: &mut Vec<Vertex>,
        reachable: ColorSet,
        target: usize,
        out: &mut Vec<KiersteadPath>,
    ) {
        if path.len() == target {
            out.push(KiersteadPath::new(path.clone()));
            return;
        }
        let last = *path.last().unwrap();
        let reachable = reachable.union(phi.missing(path[path.len() - 2]));
        for &(w, e) in phi.graph().incident(last) {
            if path.contains(&w) {
                continue;
            }
            if phi.color(e).is_some_and(|c| reachable.contains(c)) {
                path.push(w);
                extend(phi, path, reachable, target, out);
                path.pop();
            }
        }
    }
    for (s, t) in [(a, b), (b, a)] {
        let mut path = vec![s, t];
        extend(phi, &mut path, ColorSet::EMPTY, edges + 1, &mut out);
    }
    out
}

/// The 4-cycle `a b u c` with pendant edges `ux`, `uy`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShortKite {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub u: Vertex,
    pub x: Vertex,
    pub y: Vertex,
}

impl ShortKite {
    pub fn validate(&self, g: &Graph) -> Result<(), FanError> {
        check_distinct(&[self.a, self.b, self.c, self.u, self.x, self.y])?;
        for (p, q) in self.edges() {
            if !g.has_edge(p, q) {
                return Err(FanError::MissingKiteEdge(p, q));
            }
        }
        Ok(())
    }

    pub fn edges(&self) -> [(Vertex, Vertex); 6] {
        [
            (self.a, self.b),
            (self.b, self.u),
            (self.u, self.c),
            (self.c, self.a),
            (self.u, self.x),
            (self.u, self.y),
        ]
    }

    /// `(a, ab, b, bu, u, ux, x)`.
    pub fn path_through_b(&self) -> KiersteadPath {
        KiersteadPath::new(vec![self.a, self.b, self.u, self.x])
    }

    /// `(b, ab, a, ac, c, cu, u, uy, y)`.
    pub fn path_through_c(&self) -> KiersteadPath {
        KiersteadPath::new(vec![self.b, self.a, self.c, self.u, self.y])
    }

    pub fn with_b_and_c_swapped(&self) -> Self {
        ShortKite {
            b: self.c,
            c: self.b,
            ..*self
        }
    }
}

/// Short-kites whose edge `ab` is the given ordered pair.
pub fn find_short_kites_at(g: &Graph, a: Vertex, b: Vertex) -> Vec<ShortKite> {
    let mut out = Vec::new();
    if !g.has_edge(a, b) {
        return out;
    }
    for u in g.neighbors(b) {
        if u == a {
            continue;
        }
        for c in g.neighbors(u) {
            if c == a || c == b || !g.has_edge(c, a) {
                continue;
            }
            for x in g.neighbors(u) {
                if [a, b, c].contains(&x) {
                    continue;
                }
                for y in g.neighbors(u) {
                    if [a, b, c, x].contains(&y) {
                        continue;
                    }
                    out.push(ShortKite { a, b, c, u, x, y });
                }
            }
        }
    }
    out
}

/// Every labeled short-kite, ordered by `(a, b, u, c, x, y)`.
pub fn find_short_kites(g: &Graph) -> Vec<ShortKite> {
    let mut out = Vec::new();
    for a in g.vertices() {
        for b in g.neighbors(a) {
            out.extend(find_short_kites_at(g, a, b));
        }
    }
    out
}

/// Adjacent `u < v` with `d(u) + d(v) = Δ + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FullDeficiencyPair {
    pub u: Vertex,
    pub v: Vertex,
}

impl FullDeficiencyPair {
    pub fn new(g: &Graph, u: Vertex, v: Vertex) -> Result<Self, FanError> {
        if !g.has_edge(u, v) {
            return Err(FanError::NotAnEdge(u, v));
        }
        if g.degree(u) + g.degree(v) != g.max_degree() + 2 {
            return Err(FanError::NotFullDeficiency(u, v));
        }
        Ok(FullDeficiencyPair { u, v })
    }
}

pub fn find_full_deficiency_pairs(g: &Graph) -> Vec<FullDeficiencyPair> {
    let target = g.max_degree() + 2;
    g.edges()
        .iter()
        .filter(|&&(u, v)| g.degree(u) + g.degree(v) == target)
        .map(|&(u, v)| FullDeficiencyPair { u, v })
        .collect()
}
