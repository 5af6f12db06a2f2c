//! Canonical labeling and automorphisms for small graphs.
//!
//! The canonical form is the relabeling whose upper-triangle adjacency string,
//! read column by column as graph6 does, is lexicographically largest over all
//! `n!` vertex orders. The search is a plain branch and bound over positions:
//! a prefix that already compares below the best string is abandoned. The
//! result is identical to trying every permutation, only faster.

use std::cmp::Ordering;

use crate::graph::{Graph, Vertex};
use crate::graph6::emit_graph6;

struct Matrix {
    n: usize,
    bits: Vec<bool>,
}

impl Matrix {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut bits = vec![false; n * n];
        for &(u, v) in g.edges() {
            bits[u * n + v] = true;
            bits[v * n + u] = true;
        }
        Matrix { n, bits }
    }

    #[inline]
    fn adj(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.n + v]
    }
}

struct CanonSearch<'a> {
    m: &'a Matrix,
    perm: Vec<Vertex>,
    used: Vec<bool>,
    /// Column `j` of the current string, stored per position.
    current: Vec<Vec<bool>>,
    best: Option<(Vec<Vec<bool>>, Vec<Vertex>)>,
    improvements: usize,
}

impl CanonSearch<'_> {
    /// `state` compares the current prefix with the same prefix of the best string.
    fn run(&mut self, pos: usize, mut state: Ordering) {
        let n = self.m.n;
        if pos == n {
            if self.best.is_none() || state == Ordering::Greater {
                self.best = Some((self.current.clone(), self.perm.clone()));
                self.improvements += 1;
            }
            return;
        }
        for w in 0..n {
            if self.used[w] {
                continue;
            }
            let column: Vec<bool> = self.perm.iter().map(|&p| self.m.adj(p, w)).collect();
            let next = match (&self.best, state) {
                (Some((best, _)), Ordering::Equal) => match column.cmp(&best[pos]) {
                    Ordering::Less => continue,
                    o => o,
                },
                _ => Ordering::Greater,
            };
            self.used[w] = true;
            self.perm.push(w);
            self.current[pos] = column;
            let before = self.improvements;
            self.run(pos + 1, next);
            if self.improvements != before {
                // the new best extends this very prefix
                state = Ordering::Equal;
            }
            self.perm.pop();
            self.used[w] = false;
        }
    }
}

/// Returns `perm` such that `g.permuted(&perm)` is the canonical form.
pub fn canonical_permutation(g: &Graph) -> Vec<Vertex> {
    let m = Matrix::new(g);
    let mut search = CanonSearch {
        m: &m,
        perm: Vec::with_capacity(g.order()),
        used: vec![false; g.order()],
        current: vec![Vec::new(); g.order()],
        best: None,
        improvements: 0,
    };
    search.run(0, Ordering::Equal);
    search.best.map(|(_, p)| p).unwrap_or_default()
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_permutation(g))
}

/// graph6 string of the canonical form; equal iff the graphs are isomorphic.
pub fn canonical_graph6(g: &Graph) -> String {
    emit_graph6(&canonical_form(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_graph6(a) == canonical_graph6(b)
}

/// Calls `visit(sigma)` for every automorphism, `sigma[v]` being the image of `v`.
pub fn for_each_automorphism<F: FnMut(&[Vertex])>(g: &Graph, mut visit: F) {
    let m = Matrix::new(g);
    let n = g.order();
    let mut image = Vec::with_capacity(n);
    let mut taken = vec![false; n];
    fn go<F: FnMut(&[Vertex])>(
        g: &Graph,
        m: &Matrix,
        image: &mut Vec<Vertex>,
        taken: &mut [bool],
        visit: &mut F,
    ) {
        let v = image.len();
        if v == g.order() {
            visit(image);
            return;
        }
        for w in 0..g.order() {
            if taken[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).any(|u| m.adj(u, v) != m.adj(image[u], w)) {
                continue;
            }
            taken[w] = true;
            image.push(w);
            go(g, m, image, taken, visit);
            image.pop();
            taken[w] = false;
        }
    }
    go(g, &m, &mut image, &mut taken, &mut visit);
}

pub fn automorphism_count(g: &Graph) -> usize {
    let mut count = 0;
    for_each_automorphism(g, |_| count += 1);
    count
}
