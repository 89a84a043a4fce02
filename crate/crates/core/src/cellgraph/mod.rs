//! Cell graphs as rotation systems: topological type, edge contraction,
//! connected sum, canonical forms and automorphisms, morphism sets, and
//! generation of test graphs.
//!
//! A graph is a permutation `σ` of darts, whose cycles are the vertices, and a
//! fixed-point-free involution `ι` pairing darts into edges. Faces are the
//! cycles of `σ ∘ ι`; a vertex without edges counts as one face.

mod canon;
mod contract;
mod generate;
mod graph;
mod hom;
pub mod shapes;

use thiserror::Error;

pub use canon::CanonicalForm;
pub use contract::LoopContraction;
pub use generate::{enumerate_graphs, enumerate_graphs_with_edges, random_graph};
pub use graph::{CellGraph, Edge};
pub use hom::{classify_pair, hom_set, hom_set_capped, HomClass, PairKind, DEFAULT_HOM_EDGE_CAP};

pub type Dart = u32;

/// Marks an unused dart id.
pub const NONE: Dart = Dart::MAX;

/// Genus, vertex count and face count of a connected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphType {
    pub g: u32,
    pub n: u32,
    pub faces: u32,
}

impl GraphType {
    /// `2g - 2 + n`.
    pub fn complexity(&self) -> i64 {
        2 * self.g as i64 - 2 + self.n as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    NoVertices,
    #[error("invalid dart {0}")]
    BadDart(Dart),
    #[error("dart {0} occurs twice")]
    DuplicateDart(Dart),
    #[error("dart {0} is not paired by an edge")]
    UnpairedDart(Dart),
    #[error("dart {0} is paired but sits at no vertex")]
    UnplacedDart(Dart),
    #[error("no edge with dart {0}")]
    NoSuchEdge(Dart),
    #[error("no such vertex")]
    NoSuchVertex,
    #[error("edge {0} is a loop")]
    IsLoop(Dart),
    #[error("edge {0} is not a loop")]
    NotALoop(Dart),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("connected sum needs distinct non-loop edges at q")]
    SumEdgesNotDistinct,
    #[error("connected sum needs distinct faces around q")]
    SumFacesNotDistinct,
    #[error("not a permutation of vertex labels")]
    BadLabelPermutation,
    #[error("no graph satisfies the constraints")]
    Unsatisfiable,
    #[error("graph has {edges} edges, cap is {cap}")]
    TooLarge { edges: usize, cap: usize },
}

#[cfg(test)]
mod tests;
