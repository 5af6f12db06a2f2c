//! Simple undirected graphs with dense vertex ids `0..n`.
//!
//! Edges are stored once as `(u, v)` with `u < v`, sorted, and addressed by
//! their position in that list. Adjacency lists are kept sorted by neighbor so
//! iteration order is deterministic everywhere downstream.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("split part {0} is empty")]
    EmptyPart(char),
    #[error("split partition does not match the neighborhood of {0}")]
    BadPartition(Vertex),
    #[error("target set is empty")]
    EmptyTargetSet,
    #[error("no {degree}-regular graph on {order} vertices")]
    NoRegularGraph { order: usize, degree: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            edges: Vec::new(),
            adj: vec![Vec::new(); order],
        }
    }

    /// Builds a simple graph, rejecting loops, repeated edges and bad ids.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::ParallelEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); order];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            order,
            edges: list,
            adj,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `(neighbor, edge id)` pairs at `v`, sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.order || v >= self.order {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// The endpoint of `id` that is not `v`.
    pub fn other_end(&self, id: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[id];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map(Vec::len)?;
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let dist = self.bfs(&[0]);
        dist.iter().all(Option::is_some)
    }

    /// Multi-source breadth-first distances.
    fn bfs(&self, sources: &[Vertex]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Same graph with the edge `id` removed. Edge ids of the result differ.
    pub fn without_edge(&self, id: EdgeId) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != id)
            .map(|(_, &e)| e);
        Graph::from_edges(self.order, edges).expect("subgraph of a simple graph")
    }

    /// Deletes `v`; vertices above it shift down by one.
    pub fn without_vertex(&self, v: Vertex) -> Graph {
        let shift = |w: Vertex| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)));
        Graph::from_edges(self.order - 1, edges).expect("subgraph of a simple graph")
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.order, edges).expect("complement is simple")
    }

    /// Relabels so that old vertex `perm[i]` becomes vertex `i`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        let mut inverse = vec![0; self.order];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let edges = self.edges.iter().map(|&(a, b)| (inverse[a], inverse[b]));
        Graph::from_edges(self.order, edges).expect("relabeling preserves simplicity")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges)
    }
}

/// A bipartition `(A, B)` of the neighborhood of `vertex`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitSpec {
    pub vertex: Vertex,
    pub part_a: Vec<Vertex>,
    pub part_b: Vec<Vertex>,
}

impl SplitSpec {
    /// `part_a` as given; `part_b` is the rest of the neighborhood.
    pub fn with_part(g: &Graph, vertex: Vertex, part_a: &[Vertex]) -> Result<Self, GraphError> {
        if vertex >= g.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex,
                order: g.order(),
            });
        }
        let mut a = part_a.to_vec();
        a.sort_unstable();
        a.dedup();
        let b = g.neighbors(vertex).filter(|w| !a.contains(w)).collect();
        let spec = SplitSpec {
            vertex,
            part_a: a,
            part_b: b,
        };
        spec.validate(g)?;
        Ok(spec)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let v = self.vertex;
        if v >= g.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        if self.part_a.is_empty() {
            return Err(GraphError::EmptyPart('A'));
        }
        if self.part_b.is_empty() {
            return Err(GraphError::EmptyPart('B'));
        }
        let mut union: Vec<Vertex> = self.part_a.iter().chain(&self.part_b).copied().collect();
        union.sort_unstable();
        let covers = union.windows(2).all(|w| w[0] != w[1])
            && union.iter().copied().eq(g.neighbors(v));
        if !covers {
            return Err(GraphError::BadPartition(v));
        }
        Ok(())
    }
}

/// Replaces `spec.vertex` by adjacent `v1` (same id, neighbors `A`) and
/// `v2` (new id `n`, neighbors `B`).
pub fn vertex_split(g: &Graph, spec: &SplitSpec) -> Result<Graph, GraphError> {
    spec.validate(g)?;
    let v = spec.vertex;
    let v2 = g.order();
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .copied()
        .collect();
    edges.extend(spec.part_a.iter().map(|&w| (v, w)));
    edges.extend(spec.part_b.iter().map(|&w| (v2, w)));
    edges.push((v, v2));
    Graph::from_edges(g.order() + 1, edges)
}

/// `|E| > Δ·⌊n/2⌋`.
pub fn is_overfull(g: &Graph) -> bool {
    g.size() > g.max_degree() * (g.order() / 2)
}

/// Length of a shortest path from `u` to the nearest vertex of `targets`;
/// `None` when no target is reachable.
pub fn distance(g: &Graph, u: Vertex, targets: &[Vertex]) -> Result<Option<usize>, GraphError> {
    if targets.is_empty() {
        return Err(GraphError::EmptyTargetSet);
    }
    for &w in targets.iter().chain(std::iter::once(&u)) {
        if w >= g.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: w,
                order: g.order(),
            });
        }
    }
    Ok(g.bfs(targets)[u])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::*;

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::ParallelEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn split_k4() {
        let g = complete(4);
        let spec = SplitSpec::with_part(&g, 0, &[1]).unwrap();
        let s = vertex_split(&g, &spec).unwrap();
        assert_eq!(s.order(), 5);
        assert_eq!(s.size(), 7);
        assert_eq!(s.degree_sequence(), vec![2, 3, 3, 3, 3]);
        assert!(s.has_edge(0, 4));
        assert!(s.has_edge(0, 1));
        assert!(s.has_edge(4, 2) && s.has_edge(4, 3));
    }

    #[test]
    fn split_c4_is_c5() {
        let g = cycle(4);
        let spec = SplitSpec::with_part(&g, 0, &[1]).unwrap();
        let s = vertex_split(&g, &spec).unwrap();
        assert_eq!(s.regular_degree(), Some(2));
        assert!(s.is_connected());
        assert_eq!(s.order(), 5);
    }

    #[test]
    fn split_k6_two_three() {
        let g = complete(6);
        let spec = SplitSpec::with_part(&g, 2, &[0, 1]).unwrap();
        let s = vertex_split(&g, &spec).unwrap();
        assert_eq!(s.size(), 16);
        assert_eq!(s.degree_sequence(), vec![3, 4, 5, 5, 5, 5, 5]);
        // brute-force reconstruction: contracting v1v2 gives K6 back
        let mut rebuilt = Vec::new();
        for &(a, b) in s.edges() {
            let map = |w: usize| if w == 6 { 2 } else { w };
            if (a, b) != (2, 6) {
                rebuilt.push((map(a), map(b)));
            }
        }
        assert_eq!(Graph::from_edges(6, rebuilt).unwrap(), g);
    }

    #[test]
    fn split_errors() {
        let g = complete(4);
        let all = SplitSpec {
            vertex: 0,
            part_a: vec![1, 2, 3],
            part_b: vec![],
        };
        assert_eq!(vertex_split(&g, &all), Err(GraphError::EmptyPart('B')));
        let missing = SplitSpec {
            vertex: 0,
            part_a: vec![1],
            part_b: vec![2],
        };
        assert_eq!(vertex_split(&g, &missing), Err(GraphError::BadPartition(0)));
        let absent = SplitSpec {
            vertex: 9,
            part_a: vec![1],
            part_b: vec![2],
        };
        assert!(matches!(
            vertex_split(&g, &absent),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn overfull_examples() {
        assert!(is_overfull(&cycle(5)));
        assert!(!is_overfull(&petersen()));
        assert!(!is_overfull(&Graph::empty(0)));
        assert!(!is_overfull(&Graph::empty(3)));
        let s = vertex_split(&complete(6), &SplitSpec::with_part(&complete(6), 0, &[1]).unwrap()).unwrap();
        assert!(is_overfull(&s));
    }

    #[test]
    fn distances() {
        let c5 = cycle(5);
        assert_eq!(distance(&c5, 0, &[2]), Ok(Some(2)));
        assert_eq!(distance(&c5, 3, &[3, 1]), Ok(Some(0)));
        assert_eq!(distance(&c5, 0, &[]), Err(GraphError::EmptyTargetSet));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(distance(&two, 0, &[3]), Ok(None));
        // outer vertex 0 and inner vertex 7 are non-adjacent in a diameter-2 graph
        let p = petersen();
        assert!(!p.has_edge(0, 7));
        assert_eq!(distance(&p, 0, &[7]), Ok(Some(2)));
    }

    #[test]
    fn without_vertex_shifts_labels() {
        let g = cycle(5).without_vertex(0);
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }
}
