//! Recoloring scripts: sequences of chain swaps and edge recolorings applied
//! left to right, each checked against the coloring left by the step before.

use serde::Serialize;
use thiserror::Error;

use super::ShortKite;
use crate::coloring::{Color, ColoringError, PartialEdgeColoring};
use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Step {
    /// Swap on the subchain between `x` and `y`.
    SwapSubchain { x: Vertex, y: Vertex, alpha: Color, beta: Color },
    /// Kempe change on the whole chain through `x`.
    SwapChainAt { x: Vertex, alpha: Color, beta: Color },
    /// Swap on the segment leaving `x` through its chain edge to `toward`.
    SwapSegment { x: Vertex, toward: Vertex, alpha: Color, beta: Color },
    /// `uv: from → to`.
    RecolorEdge { u: Vertex, v: Vertex, from: Color, to: Color },
    /// Color the uncolored edge `uv`.
    ColorEdge { u: Vertex, v: Vertex, color: Color },
    /// Color the current uncolored edge with `color` and uncolor `uv`.
    ShiftUncolored { u: Vertex, v: Vertex, color: Color },
}

impl Step {
    fn apply(&self, phi: &PartialEdgeColoring) -> Result<PartialEdgeColoring, ColoringError> {
        match *self {
            Step::SwapSubchain { x, y, alpha, beta } => phi.subchain_swap(x, y, alpha, beta),
            Step::SwapChainAt { x, alpha, beta } => phi.swap_at(x, alpha, beta),
            Step::SwapSegment { x, toward, alpha, beta } => phi.swap_segment(x, toward, alpha, beta),
            Step::RecolorEdge { u, v, from, to } => {
                let found = phi.color_between(u, v);
                if found != Some(from) {
                    return Err(ColoringError::UnexpectedColor { u, v, expected: from, found });
                }
                phi.recolor_edge(u, v, to)
            }
            Step::ColorEdge { u, v, color } => {
                if phi.uncolored_edge().is_none_or(|(p, q)| (p, q) != (u.min(v), u.max(v))) {
                    return Err(ColoringError::NotUncolored(u, v));
                }
                phi.color_uncolored(color)
            }
            Step::ShiftUncolored { u, v, color } => phi.shift_uncolored((u, v), color),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RecolorScript {
    pub steps: Vec<Step>,
}

impl RecolorScript {
    pub fn new(steps: Vec<Step>) -> Self {
        RecolorScript { steps }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {step} failed: {source}")]
pub struct ScriptError {
    pub step: usize,
    pub source: ColoringError,
    /// Colorings produced before the failing step, starting with the input.
    pub trace: Vec<PartialEdgeColoring>,
}

#[derive(Debug, Clone)]
pub struct Execution {
    pub result: PartialEdgeColoring,
    /// The input followed by the coloring after each step.
    pub trace: Vec<PartialEdgeColoring>,
}

pub fn execute_script(phi: &PartialEdgeColoring, script: &RecolorScript) -> Result<Execution, ScriptError> {
    let mut trace = vec![phi.clone()];
    for (i, step) in script.steps.iter().enumerate() {
        let current = trace.last().unwrap();
        match step.apply(current) {
            Ok(next) => {
                debug_assert!(next.check_proper().is_ok());
                trace.push(next);
            }
            Err(source) => return Err(ScriptError { step: i, source, trace }),
        }
    }
    Ok(Execution {
        result: trace.last().unwrap().clone(),
        trace,
    })
}

/// Color labels used by the equal-missing-color case on a short-kite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Case1Colors {
    /// The color missing at `b`.
    pub one: Color,
    /// `φ(ux)`.
    pub gamma: Color,
    /// A color missing at `y`.
    pub eta: Color,
    /// `φ(bu)`.
    pub delta: Color,
}

impl Case1Colors {
    pub fn read(phi: &PartialEdgeColoring, kite: &ShortKite) -> Option<Self> {
        Some(Case1Colors {
            one: phi.missing(kite.b).min()?,
            gamma: phi.color_between(kite.u, kite.x)?,
            eta: phi.missing(kite.y).min()?,
            delta: phi.color_between(kite.b, kite.u)?,
        })
    }
}

/// The five-step sequence `ux: γ→η`, swap `P_[u,y](η,δ)`, `ub: δ→1`,
/// swap the `(1,γ)`-chain at `u`, color `ab` with `δ`.
///
/// When the `(1,γ)`-segment from `u` through `uy` ends at `b`, the script
/// first colors `ab` with `1`, uncolors `ac` and continues with `b` and `c`
/// exchanged, so the relabeling is an explicit step.
pub fn case1_script(phi: &PartialEdgeColoring, kite: &ShortKite) -> Option<RecolorScript> {
    let colors = Case1Colors::read(phi, kite)?;
    let mut steps = Vec::new();
    let mut k = *kite;
    let ends_at_b = phi
        .segment_from(kite.u, kite.y, colors.one, colors.gamma)
        .ok()
        .and_then(|seg| seg.vertices().last().copied())
        == Some(kite.b);
    let mut colors = colors;
    if ends_at_b {
        steps.push(Step::ShiftUncolored { u: kite.a, v: kite.c, color: colors.one });
        k = kite.with_b_and_c_swapped();
        colors.delta = phi.color_between(k.b, k.u)?;
    }
    let Case1Colors { one, gamma, eta, delta } = colors;
    steps.extend([
        Step::RecolorEdge { u: k.u, v: k.x, from: gamma, to: eta },
        Step::SwapSubchain { x: k.u, y: k.y, alpha: eta, beta: delta },
        Step::RecolorEdge { u: k.u, v: k.b, from: delta, to: one },
        Step::SwapChainAt { x: k.u, alpha: one, beta: gamma },
        Step::ColorEdge { u: k.a, v: k.b, color: delta },
    ]);
    Some(RecolorScript::new(steps))
}
