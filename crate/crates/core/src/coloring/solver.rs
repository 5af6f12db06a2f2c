//! Exact edge-coloring search.
//!
//! Depth-first search over edges, always branching on the uncolored edge with
//! the fewest admissible colors. Colors are interchangeable, so a branch may
//! only open the lowest color not used yet; this visits each coloring once up
//! to renaming of colors. Two counting bounds prune dead subtrees:
//!
//! * a vertex with `r` uncolored edges needs at least `r` free colors;
//! * color `c` can still be placed on at most `⌊f_c / 2⌋` edges, where `f_c`
//!   counts vertices with uncolored edges at which `c` is free.
//!
//! The second bound rejects overfull graphs at the root.

use std::ops::ControlFlow;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::{Color, ColoringError, PartialEdgeColoring, MAX_COLORS};
use crate::graph::{EdgeId, Graph};

/// Wall-clock limit for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(Option<Duration>);

impl Budget {
    pub fn unlimited() -> Self {
        Budget(None)
    }

    pub fn millis(ms: u64) -> Self {
        Budget(Some(Duration::from_millis(ms)))
    }

    pub fn limit(self) -> Option<Duration> {
        self.0
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

/// Outcome of a budgeted decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision<T> {
    Found(T),
    Impossible,
    Undecided,
}

impl<T> Decision<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Decision::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Decision::Found(_))
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Decision::Undecided)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Class {
    #[serde(rename = "class1")]
    One,
    #[serde(rename = "class2")]
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationEnd {
    Exhausted,
    Stopped,
    OutOfBudget,
}

enum Flow {
    Continue,
    Stop,
    Timeout,
}

struct Search<'a> {
    g: &'a Graph,
    full: u64,
    skip: Option<EdgeId>,
    colors: Vec<Color>,
    used: Vec<u64>,
    remaining_at: Vec<usize>,
    remaining: usize,
    nodes: u64,
    deadline: Option<Instant>,
}

impl Search<'_> {
    fn new(g: &Graph, k: usize, skip: Option<EdgeId>, budget: Budget) -> Search<'_> {
        let mut remaining_at: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        if let Some(e) = skip {
            let (u, v) = g.edge(e);
            remaining_at[u] -= 1;
            remaining_at[v] -= 1;
        }
        Search {
            g,
            full: ((1u64 << k) - 1) << 1,
            skip,
            colors: vec![0; g.size()],
            used: vec![0; g.order()],
            remaining_at,
            remaining: g.size() - usize::from(skip.is_some()),
            nodes: 0,
            deadline: budget.limit().map(|d| Instant::now() + d),
        }
    }

    fn feasible(&self) -> bool {
        let mut per_color = [0u32; MAX_COLORS + 1];
        for v in self.g.vertices() {
            let r = self.remaining_at[v];
            if r == 0 {
                continue;
            }
            let mut free = self.full & !self.used[v];
            if (free.count_ones() as usize) < r {
                return false;
            }
            while free != 0 {
                per_color[free.trailing_zeros() as usize] += 1;
                free &= free - 1;
            }
        }
        let capacity: u32 = per_color.iter().map(|f| f / 2).sum();
        capacity as usize >= self.remaining
    }

    /// Most constrained uncolored edge; ties favor larger endpoint degree sum, then lower id.
    fn pick(&self) -> Option<(EdgeId, u64)> {
        let mut best: Option<(u32, usize, EdgeId, u64)> = None;
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            if self.colors[e] != 0 || Some(e) == self.skip {
                continue;
            }
            let avail = self.full & !self.used[u] & !self.used[v];
            let count = avail.count_ones();
            let weight = self.g.degree(u) + self.g.degree(v);
            let better = match best {
                None => true,
                Some((bc, bw, _, _)) => count < bc || (count == bc && weight > bw),
            };
            if better {
                best = Some((count, weight, e, avail));
                if count == 0 {
                    break;
                }
            }
        }
        best.map(|(_, _, e, avail)| (e, avail))
    }

    fn run<F>(&mut self, top: u32, visit: &mut F) -> Flow
    where
        F: FnMut(&[Color]) -> ControlFlow<()>,
    {
        self.nodes += 1;
        // checked on the first node too, so a zero budget always gives up
        if self.nodes & 1023 == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Flow::Timeout;
                }
            }
        }
        if self.remaining == 0 {
            return match visit(&self.colors) {
                ControlFlow::Continue(()) => Flow::Continue,
                ControlFlow::Break(()) => Flow::Stop,
            };
        }
        if !self.feasible() {
            return Flow::Continue;
        }
        let Some((e, avail)) = self.pick() else {
            return Flow::Continue;
        };
        // colors above top + 1 are interchangeable with top + 1
        let opened = if top + 2 >= 64 { u64::MAX } else { (1u64 << (top + 2)) - 1 };
        let mut choices = avail & opened;
        let (u, v) = self.g.edge(e);
        while choices != 0 {
            let c = choices.trailing_zeros();
            choices &= choices - 1;
            let bit = 1u64 << c;
            self.colors[e] = c as Color;
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.remaining_at[u] -= 1;
            self.remaining_at[v] -= 1;
            self.remaining -= 1;
            let flow = self.run(top.max(c), visit);
            self.remaining += 1;
            self.remaining_at[u] += 1;
            self.remaining_at[v] += 1;
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.colors[e] = 0;
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }
}

fn check_args(g: &Graph, k: usize, skip: Option<EdgeId>) -> Result<(), ColoringError> {
    if k > MAX_COLORS {
        return Err(ColoringError::PaletteTooLarge(k));
    }
    if let Some(e) = skip {
        if e >= g.size() {
            return Err(ColoringError::EdgeOutOfRange(e));
        }
    }
    Ok(())
}

/// Calls `visit` on every proper `k`-coloring of `G` (of `G - skip` when given),
/// one per class under renaming of colors, in deterministic order.
pub fn for_each_coloring<F>(
    g: &Arc<Graph>,
    k: usize,
    skip: Option<EdgeId>,
    budget: Budget,
    mut visit: F,
) -> Result<EnumerationEnd, ColoringError>
where
    F: FnMut(&PartialEdgeColoring) -> ControlFlow<()>,
{
    check_args(g, k, skip)?;
    let mut search = Search::new(g, k, skip, budget);
    let mut wrap = |colors: &[Color]| {
        let phi = PartialEdgeColoring::new(g.clone(), k, colors.to_vec())
            .expect("solver produced an improper coloring");
        visit(&phi)
    };
    Ok(match search.run(0, &mut wrap) {
        Flow::Continue => EnumerationEnd::Exhausted,
        Flow::Stop => EnumerationEnd::Stopped,
        Flow::Timeout => EnumerationEnd::OutOfBudget,
    })
}

/// A proper `k`-coloring of `G`, or of `G - skip` with `skip` left uncolored.
pub fn find_coloring(
    g: &Arc<Graph>,
    k: usize,
    skip: Option<EdgeId>,
    budget: Budget,
) -> Result<Decision<PartialEdgeColoring>, ColoringError> {
    let mut found = None;
    let end = for_each_coloring(g, k, skip, budget, |phi| {
        found = Some(phi.clone());
        ControlFlow::Break(())
    })?;
    Ok(match (found, end) {
        (Some(phi), _) => Decision::Found(phi),
        (None, EnumerationEnd::OutOfBudget) => Decision::Undecided,
        (None, _) => Decision::Impossible,
    })
}

/// A proper `Δ`-edge-coloring if one exists. Complete search, no time limit.
pub fn find_delta_coloring(g: &Arc<Graph>) -> Option<PartialEdgeColoring> {
    find_coloring(g, g.max_degree(), None, Budget::unlimited())
        .expect("Δ within palette limit")
        .found()
}

/// `χ′(G) ∈ {Δ, Δ+1}`; `None` when the budget runs out first.
pub fn chromatic_index(g: &Graph, budget: Budget) -> Option<usize> {
    let delta = g.max_degree();
    match find_coloring(&Arc::new(g.clone()), delta, None, budget).ok()? {
        Decision::Found(_) => Some(delta),
        Decision::Impossible => Some(delta + 1),
        Decision::Undecided => None,
    }
}

pub fn classify(g: &Graph, budget: Budget) -> Option<Class> {
    chromatic_index(g, budget).map(|c| if c == g.max_degree() { Class::One } else { Class::Two })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::*;
    use crate::coloring::parity_census;

    fn chi(g: &Graph) -> usize {
        chromatic_index(g, Budget::unlimited()).unwrap()
    }

    #[test]
    fn named_graphs() {
        assert_eq!(chi(&complete(4)), 3);
        assert_eq!(chi(&cycle(5)), 3);
        assert_eq!(chi(&complete(6)), 5);
        assert_eq!(chi(&petersen()), 4);
        assert_eq!(chi(&petersen_minus_vertex()), 4);
        assert_eq!(chi(&complete_bipartite(3, 3)), 3);
        assert_eq!(chi(&complete(5)), 5);
        assert_eq!(classify(&cycle(6), Budget::unlimited()), Some(Class::One));
        assert_eq!(chi(&Graph::empty(3)), 0);
    }

    #[test]
    fn delta_coloring_presence() {
        assert!(find_delta_coloring(&Arc::new(complete(4))).is_some());
        assert!(find_delta_coloring(&Arc::new(petersen())).is_none());
        assert!(find_delta_coloring(&Arc::new(petersen_minus_vertex())).is_none());
    }

    #[test]
    fn skipped_edge_stays_uncolored() {
        let g = Arc::new(petersen_minus_vertex());
        for e in 0..g.size() {
            let phi = find_coloring(&g, 3, Some(e), Budget::unlimited()).unwrap().found().unwrap();
            assert_eq!(phi.uncolored(), Some(e));
            phi.check_proper().unwrap();
        }
    }

    #[test]
    fn enumeration_is_up_to_renaming() {
        // C4 has exactly one 2-coloring up to swapping the colors
        let g = Arc::new(cycle(4));
        let mut n = 0;
        let end = for_each_coloring(&g, 2, None, Budget::unlimited(), |_| {
            n += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!((n, end), (1, EnumerationEnd::Exhausted));
        // K4 has exactly one 1-factorization, which is a 3-coloring up to renaming
        let g = Arc::new(complete(4));
        let mut n = 0;
        for_each_coloring(&g, 3, None, Budget::unlimited(), |_| {
            n += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(n, 1);
        // path with 3 edges and 3 colors: patterns aba, abc
        let g = Arc::new(path(4));
        let mut n = 0;
        for_each_coloring(&g, 3, None, Budget::unlimited(), |_| {
            n += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(n, 2);
    }

    #[test]
    fn zero_budget_is_undecided_on_hard_instance() {
        let g = Arc::new(petersen());
        let d = find_coloring(&g, 3, None, Budget::millis(0)).unwrap();
        // either it refutes inside the first 1024 nodes or it gives up; never a coloring
        assert!(!d.is_found());
    }

    #[test]
    fn parity_on_seven_vertex_graphs() {
        // every full Δ-coloring of a 7-vertex graph leaves each color missing at an odd number of vertices
        let mut colorings = 0;
        for g in crate::generate::connected_graphs_up_to(8).into_iter().filter(|g| g.order() == 7) {
            let g = Arc::new(g);
            for_each_coloring(&g, g.max_degree(), None, Budget::unlimited(), |phi| {
                colorings += 1;
                assert!(parity_census(phi)[1..].iter().all(|c| c % 2 == 1), "{:?}", phi);
                ControlFlow::Continue(())
            })
            .unwrap();
        }
        assert!(colorings > 100);
    }
}
