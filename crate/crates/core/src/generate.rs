//! Exhaustive generation of small graphs up to isomorphism.

use std::collections::BTreeMap;

use crate::graph::{Graph, GraphError, Vertex};
use crate::iso::{canonical_form, canonical_graph6};

/// Every `d`-regular graph on `m` vertices, one per isomorphism class, in
/// canonical labeling and sorted by canonical graph6.
///
/// Dense degrees are generated through the complement, which has the same
/// number of classes and far fewer labeled members to sift through.
pub fn enumerate_regular_graphs(m: usize, d: usize) -> Result<Vec<Graph>, GraphError> {
    if (m * d) % 2 == 1 || (d >= m && !(m == 0 && d == 0)) {
        return Err(GraphError::NoRegularGraph {
            order: m,
            degree: d,
        });
    }
    if m == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let co = m - 1 - d;
    let (deg, complemented) = if co < d { (co, true) } else { (d, false) };

    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    labeled_regular(m, deg, |edges| {
        let mut g = Graph::from_edges(m, edges.iter().copied()).unwrap();
        if complemented {
            g = g.complement();
        }
        let canon = canonical_form(&g);
        classes
            .entry(crate::graph6::emit_graph6(&canon))
            .or_insert(canon);
    });
    Ok(classes.into_values().collect())
}

/// Labeled `d`-regular graphs with `N(0) = {1..d}`. Every isomorphism class
/// has such a labeling, so this is complete up to isomorphism.
fn labeled_regular<F: FnMut(&[(Vertex, Vertex)])>(m: usize, d: usize, mut emit: F) {
    let mut deg = vec![0usize; m];
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for w in 1..=d {
        edges.push((0, w));
        deg[w] += 1;
    }
    deg[0] = d;

    fn fill<F: FnMut(&[(Vertex, Vertex)])>(
        v: Vertex,
        start: Vertex,
        m: usize,
        d: usize,
        deg: &mut [usize],
        edges: &mut Vec<(Vertex, Vertex)>,
        emit: &mut F,
    ) {
        if v == m {
            emit(edges);
            return;
        }
        if deg[v] == d {
            fill(v + 1, v + 2, m, d, deg, edges, emit);
            return;
        }
        // not enough later vertices left to reach degree d
        let room = (start.max(v + 1)..m).filter(|&w| deg[w] < d).count();
        if room < d - deg[v] {
            return;
        }
        for w in start.max(v + 1)..m {
            if deg[w] < d {
                deg[v] += 1;
                deg[w] += 1;
                edges.push((v, w));
                fill(v, w + 1, m, d, deg, edges, emit);
                edges.pop();
                deg[v] -= 1;
                deg[w] -= 1;
            }
        }
    }
    fill(1, 2, m, d, &mut deg, &mut edges, &mut emit);
}

/// All connected graphs with between 1 and `max_edges` edges, one per
/// isomorphism class, ordered by edge count then canonical graph6.
pub fn connected_graphs_up_to(max_edges: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if max_edges == 0 {
        return out;
    }
    let mut layer: BTreeMap<String, Graph> = BTreeMap::new();
    let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
    layer.insert(canonical_graph6(&k2), canonical_form(&k2));
    for _ in 1..max_edges {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for g in layer.values() {
            let n = g.order();
            let mut grow = |h: Graph| {
                let canon = canonical_form(&h);
                next.entry(crate::graph6::emit_graph6(&canon)).or_insert(canon);
            };
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        grow(Graph::from_edges(n, g.edges().iter().copied().chain([(u, v)])).unwrap());
                    }
                }
                grow(Graph::from_edges(n + 1, g.edges().iter().copied().chain([(u, n)])).unwrap());
            }
        }
        out.extend(std::mem::replace(&mut layer, next).into_values());
    }
    out.extend(layer.into_values());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::*;
    use crate::iso::is_isomorphic;

    fn count(m: usize, d: usize) -> usize {
        enumerate_regular_graphs(m, d).unwrap().len()
    }

    #[test]
    fn forced_cases() {
        let k4 = enumerate_regular_graphs(4, 3).unwrap();
        assert_eq!(k4.len(), 1);
        assert!(is_isomorphic(&k4[0], &complete(4)));
        let k6 = enumerate_regular_graphs(6, 5).unwrap();
        assert_eq!(k6.len(), 1);
        assert!(is_isomorphic(&k6[0], &complete(6)));
        let k8pm = enumerate_regular_graphs(8, 6).unwrap();
        assert_eq!(k8pm.len(), 1);
        assert!(is_isomorphic(&k8pm[0], &complete_minus_perfect_matching(8)));
    }

    #[test]
    fn cubic_on_six_is_k33_and_prism() {
        let cubic = enumerate_regular_graphs(6, 3).unwrap();
        assert_eq!(cubic.len(), 2);
        assert!(cubic.iter().any(|g| is_isomorphic(g, &complete_bipartite(3, 3))));
        assert!(cubic.iter().any(|g| is_isomorphic(g, &prism(3))));
    }

    #[test]
    fn known_counts_up_to_eight() {
        // regular graphs by (order, degree), connected or not
        let table = [
            (4, 0, 1), (4, 1, 1), (4, 2, 1), (4, 3, 1),
            (5, 2, 1), (5, 4, 1),
            (6, 1, 1), (6, 2, 2), (6, 3, 2), (6, 4, 1), (6, 5, 1),
            (7, 2, 2), (7, 4, 2), (7, 6, 1),
            (8, 1, 1), (8, 2, 3), (8, 3, 6), (8, 4, 6), (8, 5, 3), (8, 6, 1), (8, 7, 1),
        ];
        for (m, d, expected) in table {
            assert_eq!(count(m, d), expected, "{d}-regular on {m}");
        }
    }

    #[test]
    fn parity_and_range_errors() {
        assert!(enumerate_regular_graphs(5, 3).is_err());
        assert!(enumerate_regular_graphs(4, 4).is_err());
    }

    #[test]
    fn output_is_deterministic_and_regular() {
        let a = enumerate_regular_graphs(8, 3).unwrap();
        let b = enumerate_regular_graphs(8, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.regular_degree() == Some(3)));
        assert_eq!(a.iter().filter(|g| g.is_connected()).count(), 5);
    }

    #[test]
    fn connected_graph_counts() {
        // connected graphs with exactly k edges, k = 1..=7
        let gs = connected_graphs_up_to(7);
        let by_size: Vec<usize> = (1..=7).map(|k| gs.iter().filter(|g| g.size() == k).count()).collect();
        assert_eq!(by_size, vec![1, 1, 3, 5, 12, 30, 79]);
        assert!(gs.iter().all(Graph::is_connected));
    }
}
