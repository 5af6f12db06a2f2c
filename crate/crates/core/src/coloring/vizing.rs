//! Constructive `(Δ+1)`-edge-coloring by fan rotation (Misra–Gries).

use std::sync::Arc;

use super::{Color, PartialEdgeColoring};
use crate::graph::{EdgeId, Graph, Vertex};

struct Work<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<Color>,
    used: Vec<u64>,
}

impl Work<'_> {
    fn set(&mut self, e: EdgeId, c: Color) {
        let (u, v) = self.g.edge(e);
        let old = self.colors[e];
        for w in [u, v] {
            if old != 0 {
                self.used[w] &= !(1u64 << old);
            }
            if c != 0 {
                self.used[w] |= 1u64 << c;
            }
        }
        self.colors[e] = c;
    }

    fn is_free(&self, v: Vertex, c: Color) -> bool {
        self.used[v] >> c & 1 == 0
    }

    fn free(&self, v: Vertex) -> Color {
        (1..=self.k as Color).find(|&c| self.is_free(v, c)).expect("Δ+1 colors leave one free")
    }

    fn color_between(&self, u: Vertex, v: Vertex) -> Color {
        self.colors[self.g.edge_id(u, v).unwrap()]
    }

    /// Swaps `c` and `d` on the alternating path leaving `start` through color `d`.
    fn invert_path(&mut self, start: Vertex, c: Color, d: Color) {
        let mut path = Vec::new();
        let mut cur = start;
        let mut want = d;
        let mut prev_edge = None;
        while let Some(&(next, e)) = self
            .g
            .incident(cur)
            .iter()
            .find(|&&(_, e)| self.colors[e] == want && Some(e) != prev_edge)
        {
            path.push(e);
            prev_edge = Some(e);
            cur = next;
            want = if want == c { d } else { c };
        }
        let old: Vec<Color> = path.iter().map(|&e| self.colors[e]).collect();
        for &e in &path {
            self.set(e, 0);
        }
        for (&e, &was) in path.iter().zip(&old) {
            self.set(e, if was == c { d } else { c });
        }
    }

    fn color_edge(&mut self, e: EdgeId) {
        let (u, first) = self.g.edge(e);
        let mut fan = vec![first];
        let mut in_fan = vec![false; self.g.order()];
        in_fan[first] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = self.g.incident(u).iter().find(|&&(w, f)| {
                let c = self.colors[f];
                !in_fan[w] && c != 0 && self.is_free(last, c)
            });
            match next {
                Some(&(w, _)) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => break,
            }
        }
        let c = self.free(u);
        let d = self.free(*fan.last().unwrap());
        self.invert_path(u, c, d);

        // the longest prefix that is still a fan ends at a vertex missing d
        let mut end = 0;
        for i in 0..fan.len() {
            if i > 0 {
                let ci = self.color_between(u, fan[i]);
                if ci == 0 || !self.is_free(fan[i - 1], ci) {
                    break;
                }
            }
            end = i;
            if self.is_free(fan[i], d) {
                break;
            }
        }
        debug_assert!(self.is_free(fan[end], d));
        let shifted: Vec<Color> = (0..end).map(|i| self.color_between(u, fan[i + 1])).collect();
        for i in 0..=end {
            let f = self.g.edge_id(u, fan[i]).unwrap();
            self.set(f, 0);
        }
        for (i, &ci) in shifted.iter().enumerate() {
            self.set(self.g.edge_id(u, fan[i]).unwrap(), ci);
        }
        self.set(self.g.edge_id(u, fan[end]).unwrap(), d);
    }
}

/// A proper full coloring with `Δ + 1` colors.
pub fn vizing_color(g: &Arc<Graph>) -> PartialEdgeColoring {
    let k = g.max_degree() + 1;
    let mut w = Work {
        g,
        k,
        colors: vec![0; g.size()],
        used: vec![0; g.order()],
    };
    for e in 0..g.size() {
        w.color_edge(e);
    }
    PartialEdgeColoring::new(g.clone(), k, w.colors).expect("fan rotation keeps the coloring proper")
}
