//! Standard graph constructions.

use crate::graph::Graph;

pub fn complete(k: usize) -> Graph {
    let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
    Graph::from_edges(k, edges).unwrap()
}

/// The cycle `0-1-…-(k-1)-0`.
///
/// # Panics
/// If `k < 3`.
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
}

pub fn path(k: usize) -> Graph {
    Graph::from_edges(k, (1..k).map(|i| (i - 1, i))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges).unwrap()
}

/// `K_m` minus the perfect matching `{2i, 2i+1}`.
pub fn complete_minus_perfect_matching(m: usize) -> Graph {
    assert!(m % 2 == 0, "perfect matching needs even order");
    let edges = (0..m)
        .flat_map(|u| (u + 1..m).map(move |v| (u, v)))
        .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1));
    Graph::from_edges(m, edges).unwrap()
}

/// `C_k × K_2`: outer cycle `0..k`, inner cycle `k..2k`, rungs `i – k+i`.
pub fn prism(k: usize) -> Graph {
    assert!(k >= 3);
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    Graph::from_edges(2 * k, edges).unwrap()
}

/// The `d`-dimensional hypercube; vertices adjacent when ids differ in one bit.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v));
    Graph::from_edges(n, edges).unwrap()
}

/// Outer 5-cycle `0..5`, spokes `i – i+5`, inner pentagram `5+i – 5+(i+2)%5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

/// The Petersen graph with vertex 9 deleted; its neighbors 4, 6, 7 drop to degree 2.
pub fn petersen_minus_vertex() -> Graph {
    petersen().without_vertex(9)
}

/// Resolves a builder name used on the command line.
///
/// Accepted: `petersen`, `petersen_minus_vertex` (or `P*`), `Kn`, `Cn`, `Pn`,
/// `Ka,b`, `Kn-PM`, `prism` / `prismN`, `Qd`.
pub fn by_name(name: &str) -> Option<Graph> {
    let num = |s: &str| s.parse::<usize>().ok();
    match name {
        "petersen" => return Some(petersen()),
        "petersen_minus_vertex" | "P*" => return Some(petersen_minus_vertex()),
        "prism" => return Some(prism(3)),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("prism") {
        return num(rest).filter(|&k| k >= 3).map(prism);
    }
    if let Some(rest) = name.strip_prefix('K') {
        if let Some(m) = rest.strip_suffix("-PM") {
            return num(m).filter(|m| m % 2 == 0).map(complete_minus_perfect_matching);
        }
        if let Some((a, b)) = rest.split_once(',') {
            return Some(complete_bipartite(num(a)?, num(b)?));
        }
        return num(rest).map(complete);
    }
    if let Some(rest) = name.strip_prefix('C') {
        return num(rest).filter(|&k| k >= 3).map(cycle);
    }
    if let Some(rest) = name.strip_prefix('P') {
        return num(rest).map(path);
    }
    if let Some(rest) = name.strip_prefix('Q') {
        return rest.parse::<u32>().ok().filter(|&d| d <= 10).map(hypercube);
    }
    None
}
