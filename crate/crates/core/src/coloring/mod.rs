//! Edge colorings of a graph with at most one uncolored edge.
//!
//! Colors are `1..=k`; `0` marks the uncolored edge. Every vertex keeps a
//! bitmask of the colors present on its edges so `present`/`missing` are
//! constant time. Colorings are values: every operation returns a new one and
//! leaves its input untouched.

mod kempe;
pub mod solver;
mod vizing;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

pub use kempe::{are_linked, kempe_chain, ChainShape, KempeChain};
pub use solver::{
    chromatic_index, classify, find_coloring, find_delta_coloring, for_each_coloring, Budget,
    Class, Decision, EnumerationEnd,
};
pub use vizing::vizing_color;

pub type Color = u8;

/// Largest supported palette; colors live in a `u64` mask.
pub const MAX_COLORS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("palette of {0} colors exceeds the supported maximum of 63")]
    PaletteTooLarge(usize),
    #[error("expected {expected} edge colors, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("color {color} on edge {edge} is outside 1..={k}")]
    ColorOutOfRange { edge: EdgeId, color: Color, k: usize },
    #[error("more than one uncolored edge ({0} and {1})")]
    TooManyUncolored(EdgeId, EdgeId),
    #[error("color {color} appears twice at vertex {vertex}")]
    Improper { vertex: Vertex, color: Color },
    #[error("{0}-{1} is not an edge")]
    NoSuchEdge(Vertex, Vertex),
    #[error("edge {0}-{1} is uncolored")]
    EdgeUncolored(Vertex, Vertex),
    #[error("edge {0}-{1} is not the designated uncolored edge")]
    NotUncolored(Vertex, Vertex),
    #[error("coloring has no uncolored edge")]
    NoUncoloredEdge,
    #[error("coloring already has an uncolored edge")]
    AlreadyPartial,
    #[error("color {color} is present at vertex {vertex}")]
    ColorPresent { vertex: Vertex, color: Color },
    #[error("chain colors must be two distinct colors in the palette, got ({0}, {1})")]
    BadColorPair(Color, Color),
    #[error("vertices {0} and {1} are not in the same chain")]
    NotLinked(Vertex, Vertex),
    #[error("the chain through {0} is a cycle; subchain endpoints are ill-defined")]
    ChainIsCycle(Vertex),
    #[error("swapping the segment leaves color {color} twice at vertex {vertex}")]
    SegmentConflict { vertex: Vertex, color: Color },
    #[error("{0} is not adjacent to {1} along the chain")]
    NotOnChain(Vertex, Vertex),
    #[error("chain does not match the coloring")]
    StaleChain,
    #[error("edge {u}-{v} has color {found:?}, expected {expected}")]
    UnexpectedColor {
        u: Vertex,
        v: Vertex,
        expected: Color,
        found: Option<Color>,
    },
    #[error("edge id {0} out of range")]
    EdgeOutOfRange(EdgeId),
    #[error("vertex {0} out of range")]
    BadVertex(Vertex),
    #[error("malformed coloring text at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// A subset of `1..=63`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, …, k}`.
    pub fn full(k: usize) -> Self {
        debug_assert!(k <= MAX_COLORS);
        ColorSet(((1u64 << k) - 1) << 1)
    }

    pub fn single(c: Color) -> Self {
        ColorSet(1 << c)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        ColorSet(bits & !1)
    }

    pub fn contains(self, c: Color) -> bool {
        c != 0 && (c as usize) <= MAX_COLORS && self.0 >> c & 1 == 1
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c;
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << c);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: ColorSet) -> Self {
        ColorSet(self.0 | o.0)
    }

    pub fn intersection(self, o: ColorSet) -> Self {
        ColorSet(self.0 & o.0)
    }

    pub fn difference(self, o: ColorSet) -> Self {
        ColorSet(self.0 & !o.0)
    }

    pub fn is_disjoint(self, o: ColorSet) -> bool {
        self.0 & o.0 == 0
    }

    pub fn is_subset(self, o: ColorSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn min(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Color)
    }

    /// The only member, if there is exactly one.
    pub fn only(self) -> Option<Color> {
        (self.len() == 1).then(|| self.0.trailing_zeros() as Color)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros();
            bits &= bits - 1;
            Some(c as Color)
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for ColorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// An edge `k`-coloring of `G` or of `G - e` for the designated edge `e`.
#[derive(Clone)]
pub struct PartialEdgeColoring {
    graph: Arc<Graph>,
    k: usize,
    colors: Vec<Color>,
    present: Vec<ColorSet>,
    uncolored: Option<EdgeId>,
}

impl PartialEq for PartialEdgeColoring {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
            && self.colors == other.colors
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl Eq for PartialEdgeColoring {}

impl fmt::Debug for PartialEdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartialEdgeColoring")
            .field("k", &self.k)
            .field("colors", &self.colors)
            .finish()
    }
}

impl PartialEdgeColoring {
    /// Validates and wraps a per-edge color vector (indexed by edge id, `0` = uncolored).
    pub fn new(graph: Arc<Graph>, k: usize, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if k > MAX_COLORS {
            return Err(ColoringError::PaletteTooLarge(k));
        }
        if colors.len() != graph.size() {
            return Err(ColoringError::WrongLength {
                expected: graph.size(),
                found: colors.len(),
            });
        }
        let mut present = vec![ColorSet::EMPTY; graph.order()];
        let mut uncolored = None;
        for (e, &c) in colors.iter().enumerate() {
            if c == 0 {
                if let Some(prev) = uncolored {
                    return Err(ColoringError::TooManyUncolored(prev, e));
                }
                uncolored = Some(e);
                continue;
            }
            if c as usize > k {
                return Err(ColoringError::ColorOutOfRange { edge: e, color: c, k });
            }
            let (u, v) = graph.edge(e);
            for w in [u, v] {
                if present[w].contains(c) {
                    return Err(ColoringError::Improper { vertex: w, color: c });
                }
                present[w].insert(c);
            }
        }
        Ok(PartialEdgeColoring {
            graph,
            k,
            colors,
            present,
            uncolored,
        })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    /// Palette size.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> Option<Color> {
        let c = self.colors[e];
        (c != 0).then_some(c)
    }

    /// Color of the edge `uv`; `None` if it is uncolored or absent.
    pub fn color_between(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.graph.edge_id(u, v).and_then(|e| self.color(e))
    }

    pub fn uncolored(&self) -> Option<EdgeId> {
        self.uncolored
    }

    pub fn uncolored_edge(&self) -> Option<(Vertex, Vertex)> {
        self.uncolored.map(|e| self.graph.edge(e))
    }

    pub fn is_full(&self) -> bool {
        self.uncolored.is_none()
    }

    pub fn palette(&self) -> ColorSet {
        ColorSet::full(self.k)
    }

    /// Colors on edges at `v`.
    pub fn present(&self, v: Vertex) -> ColorSet {
        self.present[v]
    }

    /// `[1,k]` minus the colors present at `v`.
    pub fn missing(&self, v: Vertex) -> ColorSet {
        self.palette().difference(self.present[v])
    }

    /// Union of the missing sets over `xs`.
    pub fn missing_union(&self, xs: &[Vertex]) -> ColorSet {
        xs.iter().fold(ColorSet::EMPTY, |acc, &v| acc.union(self.missing(v)))
    }

    /// Whether the missing sets over `xs` are pairwise disjoint.
    pub fn is_elementary(&self, xs: &[Vertex]) -> bool {
        self.elementary_violation(xs).is_none()
    }

    /// First pair of distinct vertices sharing a missing color, with the color.
    pub fn elementary_violation(&self, xs: &[Vertex]) -> Option<(Vertex, Vertex, Color)> {
        for (i, &u) in xs.iter().enumerate() {
            for &v in &xs[i + 1..] {
                if u == v {
                    continue;
                }
                if let Some(c) = self.missing(u).intersection(self.missing(v)).min() {
                    return Some((u, v, c));
                }
            }
        }
        None
    }

    /// The neighbor and edge at `v` carrying color `c`.
    pub fn edge_with_color(&self, v: Vertex, c: Color) -> Option<(Vertex, EdgeId)> {
        if !self.present[v].contains(c) {
            return None;
        }
        self.graph
            .incident(v)
            .iter()
            .copied()
            .find(|&(_, e)| self.colors[e] == c)
    }

    /// Full rescan of properness that ignores the cached masks.
    pub fn check_proper(&self) -> Result<(), ColoringError> {
        for v in self.graph.vertices() {
            let mut seen = ColorSet::EMPTY;
            for &(_, e) in self.graph.incident(v) {
                let c = self.colors[e];
                if c == 0 {
                    continue;
                }
                if c as usize > self.k {
                    return Err(ColoringError::ColorOutOfRange { edge: e, color: c, k: self.k });
                }
                if seen.contains(c) {
                    return Err(ColoringError::Improper { vertex: v, color: c });
                }
                seen.insert(c);
            }
            if seen != self.present[v] {
                return Err(ColoringError::StaleChain);
            }
        }
        if self.colors.iter().filter(|&&c| c == 0).count() > 1 {
            let mut it = self.colors.iter().enumerate().filter(|(_, &c)| c == 0).map(|(e, _)| e);
            return Err(ColoringError::TooManyUncolored(it.next().unwrap(), it.next().unwrap()));
        }
        Ok(())
    }

    fn edge_id(&self, u: Vertex, v: Vertex) -> Result<EdgeId, ColoringError> {
        self.graph.edge_id(u, v).ok_or(ColoringError::NoSuchEdge(u, v))
    }

    /// `uv: γ → τ`. Recoloring an edge with its own color is the identity.
    pub fn recolor_edge(&self, u: Vertex, v: Vertex, tau: Color) -> Result<Self, ColoringError> {
        let e = self.edge_id(u, v)?;
        let current = self.color(e).ok_or(ColoringError::EdgeUncolored(u, v))?;
        if tau == current {
            return Ok(self.clone());
        }
        self.check_in_palette(tau)?;
        for w in [u, v] {
            if self.present[w].contains(tau) {
                return Err(ColoringError::ColorPresent { vertex: w, color: tau });
            }
        }
        let mut out = self.clone();
        out.set(e, tau);
        Ok(out)
    }

    /// Colors the designated edge with `eta`, giving a full coloring.
    pub fn color_uncolored(&self, eta: Color) -> Result<Self, ColoringError> {
        let e = self.uncolored.ok_or(ColoringError::NoUncoloredEdge)?;
        self.check_in_palette(eta)?;
        let (u, v) = self.graph.edge(e);
        for w in [u, v] {
            if self.present[w].contains(eta) {
                return Err(ColoringError::ColorPresent { vertex: w, color: eta });
            }
        }
        let mut out = self.clone();
        out.set(e, eta);
        out.uncolored = None;
        Ok(out)
    }

    /// Removes the color of `uv`, making it the designated uncolored edge.
    pub fn uncolor(&self, u: Vertex, v: Vertex) -> Result<Self, ColoringError> {
        if self.uncolored.is_some() {
            return Err(ColoringError::AlreadyPartial);
        }
        let e = self.edge_id(u, v)?;
        let mut out = self.clone();
        out.set(e, 0);
        out.uncolored = Some(e);
        Ok(out)
    }

    /// Uncolors `uncolor` and then colors the current uncolored edge with `tau`.
    pub fn shift_uncolored(
        &self,
        uncolor: (Vertex, Vertex),
        tau: Color,
    ) -> Result<Self, ColoringError> {
        let cur = self.uncolored.ok_or(ColoringError::NoUncoloredEdge)?;
        let f = self.edge_id(uncolor.0, uncolor.1)?;
        if f == cur {
            return Err(ColoringError::EdgeUncolored(uncolor.0, uncolor.1));
        }
        let mut out = self.clone();
        out.set(f, 0);
        let mut out = out.color_uncolored_unchecked(cur, tau)?;
        out.uncolored = Some(f);
        Ok(out)
    }

    fn color_uncolored_unchecked(mut self, e: EdgeId, tau: Color) -> Result<Self, ColoringError> {
        self.check_in_palette(tau)?;
        let (u, v) = self.graph.edge(e);
        for w in [u, v] {
            if self.present[w].contains(tau) {
                return Err(ColoringError::ColorPresent { vertex: w, color: tau });
            }
        }
        self.set(e, tau);
        Ok(self)
    }

    fn check_in_palette(&self, c: Color) -> Result<(), ColoringError> {
        if c == 0 || c as usize > self.k {
            return Err(ColoringError::ColorOutOfRange {
                edge: usize::MAX,
                color: c,
                k: self.k,
            });
        }
        Ok(())
    }

    /// Raw assignment keeping the masks in sync; callers guarantee properness.
    pub(crate) fn set(&mut self, e: EdgeId, c: Color) {
        let (u, v) = self.graph.edge(e);
        let old = self.colors[e];
        for w in [u, v] {
            if old != 0 {
                self.present[w].remove(old);
            }
            if c != 0 {
                self.present[w].insert(c);
            }
        }
        self.colors[e] = c;
    }

    /// The same colors viewed as a full coloring of `G - e` (edge ids of that graph).
    pub fn as_coloring_of_deleted(&self) -> Result<PartialEdgeColoring, ColoringError> {
        let e = self.uncolored.ok_or(ColoringError::NoUncoloredEdge)?;
        let g = Arc::new(self.graph.without_edge(e));
        let colors = g
            .edges()
            .iter()
            .map(|&(u, v)| self.colors[self.graph.edge_id(u, v).unwrap()])
            .collect();
        PartialEdgeColoring::new(g, self.k, colors)
    }

    /// Text form: a header `k=<k> uncolored=<u,v|none>` followed by one
    /// `u v color` line per colored edge, sorted by `(u, v)`.
    pub fn to_text(&self) -> String {
        let mut out = format!("k={} uncolored=", self.k);
        match self.uncolored_edge() {
            Some((u, v)) => out.push_str(&format!("{u},{v}\n")),
            None => out.push_str("none\n"),
        }
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            if self.colors[e] != 0 {
                out.push_str(&format!("{u} {v} {}\n", self.colors[e]));
            }
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output against a known host graph.
    pub fn from_text(graph: Arc<Graph>, text: &str) -> Result<Self, ColoringError> {
        let bad = |line: usize, reason: &str| ColoringError::Parse {
            line,
            reason: reason.to_string(),
        };
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
        let mut k = None;
        let mut unc: Option<Option<(Vertex, Vertex)>> = None;
        for field in header.split_whitespace() {
            if let Some(v) = field.strip_prefix("k=") {
                k = Some(v.parse::<usize>().map_err(|_| bad(1, "bad k"))?);
            } else if let Some(v) = field.strip_prefix("uncolored=") {
                unc = Some(if v == "none" {
                    None
                } else {
                    let (a, b) = v.split_once(',').ok_or_else(|| bad(1, "bad uncolored edge"))?;
                    let a = a.parse().map_err(|_| bad(1, "bad uncolored edge"))?;
                    let b = b.parse().map_err(|_| bad(1, "bad uncolored edge"))?;
                    Some((a, b))
                });
            } else {
                return Err(bad(1, "unknown header field"));
            }
        }
        let k = k.ok_or_else(|| bad(1, "missing k"))?;
        let unc = unc.ok_or_else(|| bad(1, "missing uncolored"))?;
        let mut colors = vec![0 as Color; graph.size()];
        let mut assigned = vec![false; graph.size()];
        for (i, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [u, v, c] = parts.as_slice() else {
                return Err(bad(i + 1, "expected `u v color`"));
            };
            let u: Vertex = u.parse().map_err(|_| bad(i + 1, "bad vertex"))?;
            let v: Vertex = v.parse().map_err(|_| bad(i + 1, "bad vertex"))?;
            let c: Color = c.parse().map_err(|_| bad(i + 1, "bad color"))?;
            let e = graph.edge_id(u, v).ok_or_else(|| bad(i + 1, "not an edge"))?;
            if assigned[e] || c == 0 {
                return Err(bad(i + 1, "edge listed twice or colored 0"));
            }
            assigned[e] = true;
            colors[e] = c;
        }
        let missing: Vec<EdgeId> = (0..graph.size()).filter(|&e| !assigned[e]).collect();
        let expected: Vec<EdgeId> = unc.and_then(|(a, b)| graph.edge_id(a, b)).into_iter().collect();
        if missing != expected {
            return Err(bad(1, "uncolored edge does not match the listed edges"));
        }
        PartialEdgeColoring::new(graph, k, colors)
    }
}

/// Per-color count of vertices missing that color, indexed `1..=k` (slot 0 unused).
/// For a full `Δ`-coloring every count has the parity of the order.
pub fn parity_census(phi: &PartialEdgeColoring) -> Vec<usize> {
    let mut counts = vec![0; phi.k() + 1];
    for v in phi.graph().vertices() {
        for c in phi.missing(v).iter() {
            counts[c as usize] += 1;
        }
    }
    counts
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::builders::*;

    /// Path a–c–b as vertices 0–2–1 with ac=1, cb=2.
    pub(crate) fn path_acb() -> PartialEdgeColoring {
        let g = Arc::new(Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap());
        let ac = g.edge_id(0, 2).unwrap();
        let mut colors = vec![0; 2];
        colors[ac] = 1;
        colors[1 - ac] = 2;
        PartialEdgeColoring::new(g, 2, colors).unwrap()
    }

    /// Triangle a, b, c = 0, 1, 2 with ab uncolored, ac=1, cb=2.
    pub(crate) fn triangle_minus_ab(k: usize) -> PartialEdgeColoring {
        let g = Arc::new(complete(3));
        let mut colors = vec![0; 3];
        colors[g.edge_id(0, 2).unwrap()] = 1;
        colors[g.edge_id(1, 2).unwrap()] = 2;
        PartialEdgeColoring::new(g, k, colors).unwrap()
    }

    #[test]
    fn missing_on_path() {
        let phi = path_acb();
        assert_eq!(phi.missing(0), ColorSet::single(2));
        assert_eq!(phi.missing(1), ColorSet::single(1));
        assert!(phi.missing(2).is_empty());
        assert!(phi.is_elementary(&[0, 1]));
        assert!(phi.is_elementary(&[2]));
        assert_eq!(phi.present(2), ColorSet::full(2));
    }

    #[test]
    fn missing_count_formula() {
        let phi = triangle_minus_ab(3);
        for v in 0..3 {
            let extra = usize::from(v < 2);
            assert_eq!(phi.missing(v).len(), 3 - phi.graph().degree(v) + extra);
        }
    }

    #[test]
    fn regular_full_coloring_has_no_missing() {
        let g = Arc::new(complete(4));
        let phi = find_delta_coloring(&g).unwrap();
        assert!(g.vertices().all(|v| phi.missing(v).is_empty()));
        assert_eq!(parity_census(&phi), vec![0, 0, 0, 0]);
    }

    #[test]
    fn constructor_rejects_bad_colorings() {
        let g = Arc::new(path(3));
        assert!(matches!(
            PartialEdgeColoring::new(g.clone(), 2, vec![1, 1]),
            Err(ColoringError::Improper { vertex: 1, color: 1 })
        ));
        assert!(matches!(
            PartialEdgeColoring::new(g.clone(), 2, vec![0, 0]),
            Err(ColoringError::TooManyUncolored(0, 1))
        ));
        assert!(matches!(
            PartialEdgeColoring::new(g.clone(), 2, vec![1, 3]),
            Err(ColoringError::ColorOutOfRange { .. })
        ));
        assert!(matches!(
            PartialEdgeColoring::new(g, 64, vec![1, 2]),
            Err(ColoringError::PaletteTooLarge(64))
        ));
    }

    #[test]
    fn recolor_and_complete() {
        let phi = path_acb();
        assert_eq!(phi.recolor_edge(2, 1, 2).unwrap(), phi);
        assert!(matches!(
            phi.recolor_edge(0, 2, 2),
            Err(ColoringError::ColorPresent { vertex: 2, color: 2 })
        ));
        let tri = triangle_minus_ab(2);
        assert!(matches!(tri.color_uncolored(1), Err(ColoringError::ColorPresent { .. })));
        assert!(matches!(tri.color_uncolored(2), Err(ColoringError::ColorPresent { .. })));
        let tri3 = triangle_minus_ab(3);
        let full = tri3.color_uncolored(3).unwrap();
        assert!(full.is_full());
        full.check_proper().unwrap();
    }

    #[test]
    fn uncolor_then_shift() {
        let g = Arc::new(cycle(4));
        let phi = PartialEdgeColoring::new(g.clone(), 2, vec![1, 2, 2, 1]).unwrap();
        // edges sorted: (0,1),(0,3),(1,2),(2,3)
        let part = phi.uncolor(0, 1).unwrap();
        assert_eq!(part.uncolored_edge(), Some((0, 1)));
        let moved = part.shift_uncolored((1, 2), 1).unwrap();
        assert_eq!(moved.uncolored_edge(), Some((1, 2)));
        assert_eq!(moved.color_between(0, 1), Some(1));
        moved.check_proper().unwrap();
    }

    #[test]
    fn text_round_trip() {
        let tri = triangle_minus_ab(3);
        let text = tri.to_text();
        assert_eq!(text, "k=3 uncolored=0,1\n0 2 1\n1 2 2\n");
        let back = PartialEdgeColoring::from_text(tri.graph().clone(), &text).unwrap();
        assert_eq!(back, tri);
        assert!(PartialEdgeColoring::from_text(tri.graph().clone(), "k=3 uncolored=none\n0 2 1\n").is_err());
    }

    #[test]
    fn color_set_basics() {
        let s: ColorSet = [1, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.min(), Some(1));
        assert_eq!(ColorSet::single(4).only(), Some(4));
        assert_eq!(ColorSet::full(3).difference(s), ColorSet::single(2));
        assert!(!s.contains(0));
        assert_eq!(format!("{:?}", s), "{1, 3, 5}");
    }
}
