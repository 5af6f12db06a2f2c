//! Edge-coloring toolkit for checking vertex-splitting results on small graphs.
//!
//! Graphs, exact and constructive edge colorings, Kempe chains, fan-type
//! structures with lemma checkers, and an exhaustive sweep driver that writes
//! resumable JSON-lines logs.

pub mod builders;
pub mod coloring;
pub mod fans;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod record;
pub mod verifier;

pub use coloring::{ColorSet, Color, PartialEdgeColoring};
pub use record::{Outcome, Summary, VerificationRecord};
pub use graph::{EdgeId, Graph, GraphError, SplitSpec, Vertex};
