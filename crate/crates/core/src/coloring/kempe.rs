//! Kempe chains: components of the subgraph spanned by two color classes.

use serde::Serialize;

use super::{Color, ColoringError, PartialEdgeColoring};
use crate::graph::{EdgeId, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainShape {
    Path,
    Cycle,
}

/// An `(α, β)`-chain, or a segment of one.
///
/// For a path, `vertices` runs from one end to the other and `edges[i]` joins
/// `vertices[i]` and `vertices[i + 1]`. For a cycle the last edge closes back
/// to `vertices[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KempeChain {
    alpha: Color,
    beta: Color,
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
    shape: ChainShape,
}

impl KempeChain {
    pub fn colors(&self) -> (Color, Color) {
        (self.alpha, self.beta)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn shape(&self) -> ChainShape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// Both ends of a path chain (equal for a single vertex).
    pub fn ends(&self) -> Option<(Vertex, Vertex)> {
        match self.shape {
            ChainShape::Path => Some((self.vertices[0], *self.vertices.last().unwrap())),
            ChainShape::Cycle => None,
        }
    }

    /// Whether the chain, read from `from`, reaches `first` before `second`.
    pub fn meets_before(&self, from: Vertex, first: Vertex, second: Vertex) -> bool {
        let (Some(s), Some(a), Some(b)) = (self.position(from), self.position(first), self.position(second))
        else {
            return false;
        };
        if self.shape == ChainShape::Cycle {
            return false;
        }
        a.abs_diff(s) < b.abs_diff(s) && (a >= s) == (b >= s)
    }
}

fn check_pair(phi: &PartialEdgeColoring, alpha: Color, beta: Color) -> Result<(), ColoringError> {
    let k = phi.k();
    if alpha == beta || alpha == 0 || beta == 0 || alpha as usize > k || beta as usize > k {
        return Err(ColoringError::BadColorPair(alpha, beta));
    }
    Ok(())
}

/// Follows alternating edges from `start`, leaving through color `first`.
/// Returns visited vertices (starting with `start`), edges, and whether the walk closed a cycle.
fn walk(
    phi: &PartialEdgeColoring,
    start: Vertex,
    first: Color,
    alpha: Color,
    beta: Color,
) -> (Vec<Vertex>, Vec<EdgeId>, bool) {
    let mut verts = vec![start];
    let mut edges = Vec::new();
    let mut cur = start;
    let mut want = first;
    while let Some((next, e)) = phi.edge_with_color(cur, want) {
        edges.push(e);
        if next == start {
            return (verts, edges, true);
        }
        verts.push(next);
        cur = next;
        want = if want == alpha { beta } else { alpha };
    }
    (verts, edges, false)
}

/// The `(α, β)`-chain containing `x`. When `x` misses one of the colors it is
/// the first vertex of the returned path; an interior `x` yields the path read
/// from its lower-numbered end.
pub fn kempe_chain(
    phi: &PartialEdgeColoring,
    x: Vertex,
    alpha: Color,
    beta: Color,
) -> Result<KempeChain, ColoringError> {
    check_pair(phi, alpha, beta)?;
    if x >= phi.graph().order() {
        return Err(ColoringError::BadVertex(x));
    }
    let has_a = phi.present(x).contains(alpha);
    let has_b = phi.present(x).contains(beta);
    let chain = |vertices, edges, shape| KempeChain {
        alpha,
        beta,
        vertices,
        edges,
        shape,
    };
    match (has_a, has_b) {
        (false, false) => Ok(chain(vec![x], vec![], ChainShape::Path)),
        (true, false) | (false, true) => {
            let first = if has_a { alpha } else { beta };
            let (v, e, _) = walk(phi, x, first, alpha, beta);
            Ok(chain(v, e, ChainShape::Path))
        }
        (true, true) => {
            let (va, ea, closed) = walk(phi, x, alpha, alpha, beta);
            if closed {
                return Ok(chain(va, ea, ChainShape::Cycle));
            }
            let (vb, eb, _) = walk(phi, x, beta, alpha, beta);
            let mut vertices: Vec<Vertex> = vb.into_iter().rev().collect();
            vertices.extend_from_slice(&va[1..]);
            let mut edges: Vec<EdgeId> = eb.into_iter().rev().collect();
            edges.extend(ea);
            if vertices[0] > *vertices.last().unwrap() {
                vertices.reverse();
                edges.reverse();
            }
            Ok(chain(vertices, edges, ChainShape::Path))
        }
    }
}

/// Whether `x` and `y` lie in the same `(α, β)`-chain. Always true for `x == y`.
pub fn are_linked(phi: &PartialEdgeColoring, x: Vertex, y: Vertex, alpha: Color, beta: Color) -> bool {
    if x == y {
        return true;
    }
    kempe_chain(phi, x, alpha, beta)
        .map(|c| c.contains(y))
        .unwrap_or(false)
}

fn swap_edges(
    phi: &PartialEdgeColoring,
    edges: &[EdgeId],
    alpha: Color,
    beta: Color,
) -> Result<PartialEdgeColoring, ColoringError> {
    let mut colors = phi.colors().to_vec();
    for &e in edges {
        colors[e] = match colors[e] {
            c if c == alpha => beta,
            c if c == beta => alpha,
            _ => return Err(ColoringError::StaleChain),
        };
    }
    PartialEdgeColoring::new(phi.graph().clone(), phi.k(), colors)
}

impl PartialEdgeColoring {
    /// Kempe change `φ/C`: exchanges the two colors along a whole chain.
    pub fn kempe_swap(&self, chain: &KempeChain) -> Result<Self, ColoringError> {
        let (alpha, beta) = chain.colors();
        let fresh = kempe_chain(self, chain.vertices[0], alpha, beta)?;
        if fresh.edges.len() != chain.edges.len() || !chain.edges.iter().all(|e| fresh.contains_edge(*e)) {
            return Err(ColoringError::StaleChain);
        }
        swap_edges(self, &chain.edges, alpha, beta)
    }

    /// Kempe change on the `(α, β)`-chain through `x`.
    pub fn swap_at(&self, x: Vertex, alpha: Color, beta: Color) -> Result<Self, ColoringError> {
        let chain = kempe_chain(self, x, alpha, beta)?;
        swap_edges(self, &chain.edges, alpha, beta)
    }

    /// The segment `P_[x,y](α, β)` of the path chain through both vertices.
    pub fn subchain(&self, x: Vertex, y: Vertex, alpha: Color, beta: Color) -> Result<KempeChain, ColoringError> {
        let chain = kempe_chain(self, x, alpha, beta)?;
        let j = chain.position(y).ok_or(ColoringError::NotLinked(x, y))?;
        if chain.shape == ChainShape::Cycle {
            return Err(ColoringError::ChainIsCycle(x));
        }
        let i = chain.position(x).unwrap();
        let (lo, hi) = (i.min(j), i.max(j));
        let mut vertices = chain.vertices[lo..=hi].to_vec();
        let mut edges = chain.edges[lo..hi].to_vec();
        if i > j {
            vertices.reverse();
            edges.reverse();
        }
        Ok(KempeChain {
            alpha,
            beta,
            vertices,
            edges,
            shape: ChainShape::Path,
        })
    }

    /// Swaps colors on `P_[x,y](α, β)`. Fails with `SegmentConflict` when a
    /// segment end is interior to the chain, since the result would be improper.
    pub fn subchain_swap(&self, x: Vertex, y: Vertex, alpha: Color, beta: Color) -> Result<Self, ColoringError> {
        let seg = self.subchain(x, y, alpha, beta)?;
        swap_edges(self, &seg.edges, alpha, beta).map_err(conflict)
    }

    /// `P_x(α, β)` read from `x` through its chain edge to `first`, up to the end of the path.
    pub fn segment_from(&self, x: Vertex, first: Vertex, alpha: Color, beta: Color) -> Result<KempeChain, ColoringError> {
        let chain = kempe_chain(self, x, alpha, beta)?;
        if chain.shape == ChainShape::Cycle {
            return Err(ColoringError::ChainIsCycle(x));
        }
        let i = chain.position(x).unwrap();
        let forward = chain.vertices.get(i + 1) == Some(&first);
        let backward = i > 0 && chain.vertices[i - 1] == first;
        let end = if forward {
            *chain.vertices.last().unwrap()
        } else if backward {
            chain.vertices[0]
        } else {
            return Err(ColoringError::NotOnChain(first, x));
        };
        self.subchain(x, end, alpha, beta)
    }

    /// Swaps colors on [`segment_from`](Self::segment_from).
    pub fn swap_segment(&self, x: Vertex, first: Vertex, alpha: Color, beta: Color) -> Result<Self, ColoringError> {
        let seg = self.segment_from(x, first, alpha, beta)?;
        swap_edges(self, &seg.edges, alpha, beta).map_err(conflict)
    }
}

fn conflict(e: ColoringError) -> ColoringError {
    match e {
        ColoringError::Improper { vertex, color } => ColoringError::SegmentConflict { vertex, color },
        other => other,
    }
}
