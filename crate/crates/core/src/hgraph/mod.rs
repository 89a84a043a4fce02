//! Arrowed `r`-Hurwitz graphs: cell graphs carrying `r` cyclically ordered
//! dots per face, clustered at corners, with one marked dot per vertex.
//!
//! A corner is named by the dart that leaves it: the corner at `c` lies
//! between `σ⁻¹(c)` and `c`, and belongs to the face through `c`. Walking a
//! face `c₁ → c₂ = φ(c₁) → …`, the corners are met in the order `c₁, c₂, …`
//! and the edge of `cₖ` is crossed between `cₖ` and `cₖ₊₁`. Dots inside a
//! corner are numbered along this walk. A vertex without edges has a single
//! corner holding the whole face.

mod eco;
mod enumerate;

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::cellgraph::{CellGraph, Dart, Edge, GraphError, NONE};

pub use eco::{eco1_preimages, Eco2};
pub use enumerate::{
    dot_configurations, enumerate_classes, enumerate_weighted, labelings, HurwitzClass, EnumerationCap,
    DEFAULT_ENUMERATION_CAP,
};

/// A dot: its corner (`NONE` for the corner of a bare vertex) and its
/// position inside the corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DotRef {
    pub corner: Dart,
    pub index: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HgraphError {
    #[error("malformed decoration: {0}")]
    Shape(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {0} has the wrong kind for this operation")]
    WrongEdgeKind(Dart),
    #[error("no dot left for the arrow at vertex {0}")]
    EmptySide(usize),
    #[error("enumeration exceeds the cap ({0})")]
    TooLarge(&'static str),
}

/// A failed condition of the definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Disconnected,
    /// A face (given by its least dart; `NONE` for a bare vertex) without
    /// exactly `r` dots.
    FaceDots { face: Dart, dots: u32 },
    EmptyVertex { vertex: usize },
    /// An edge meeting one face twice with `r'` dots on one side.
    DotCondition { edge: Edge, between: u32 },
    MissingArrow { vertex: usize },
    BadArrow { vertex: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzGraph {
    r: u32,
    base: CellGraph,
    dots: Vec<u32>,
    bare: Vec<u32>,
    arrows: Vec<Option<DotRef>>,
}

impl HurwitzGraph {
    /// `dots[c]` is the number of dots at the corner of dart `c`; `bare[v]`
    /// the number at a vertex without edges (zero for other vertices).
    pub fn new(
        r: u32,
        base: CellGraph,
        dots: Vec<u32>,
        bare: Vec<u32>,
        arrows: Vec<Option<DotRef>>,
    ) -> Result<Self, HgraphError> {
        if r == 0 {
            return Err(HgraphError::Shape("r must be positive"));
        }
        let mut dots = dots;
        if dots.len() < base.dart_bound() as usize {
            return Err(HgraphError::Shape("dot table shorter than the dart range"));
        }
        if (0..dots.len() as Dart).any(|d| dots[d as usize] != 0 && !base.contains(d)) {
            return Err(HgraphError::Shape("dots on a missing dart"));
        }
        dots.truncate(base.dart_bound() as usize);
        let n = base.vertex_count();
        if bare.len() != n || arrows.len() != n {
            return Err(HgraphError::Shape("per-vertex tables have the wrong length"));
        }
        if (0..n).any(|v| bare[v] != 0 && base.degree(v) != 0) {
            return Err(HgraphError::Shape("bare-corner dots on a vertex with edges"));
        }
        Ok(HurwitzGraph { r, base, dots, bare, arrows })
    }

    /// The single vertex with `r` dots and its arrow.
    pub fn base_case(r: u32) -> Self {
        HurwitzGraph {
            r,
            base: CellGraph::bare_vertex(),
            dots: Vec::new(),
            bare: vec![r],
            arrows: vec![Some(DotRef { corner: NONE, index: 0 })],
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn base(&self) -> &CellGraph {
        &self.base
    }

    pub fn arrows(&self) -> &[Option<DotRef>] {
        &self.arrows
    }

    pub fn with_arrows(&self, arrows: Vec<Option<DotRef>>) -> Self {
        assert_eq!(arrows.len(), self.base.vertex_count());
        HurwitzGraph { arrows, ..self.clone() }
    }

    /// Dots at the corner of `c`, or at the bare corner of `vertex` when `c == NONE`.
    pub fn corner_dots(&self, c: Dart, vertex: usize) -> u32 {
        if c == NONE {
            self.bare[vertex]
        } else {
            self.dots.get(c as usize).copied().unwrap_or(0)
        }
    }

    /// The dots at `v`, corner by corner in rotation order.
    pub fn vertex_dots(&self, v: usize) -> Vec<DotRef> {
        let corners: Vec<Dart> = if self.base.degree(v) == 0 {
            vec![NONE]
        } else {
            self.base.rotation(v).to_vec()
        };
        corners
            .into_iter()
            .flat_map(|c| (0..self.corner_dots(c, v)).map(move |index| DotRef { corner: c, index }))
            .collect()
    }

    /// `μᵢ`, the number of dots at each vertex.
    pub fn mu(&self) -> Vec<u32> {
        (0..self.base.vertex_count())
            .map(|v| {
                if self.base.degree(v) == 0 {
                    self.bare[v]
                } else {
                    self.base.rotation(v).iter().map(|&c| self.dots[c as usize]).sum()
                }
            })
            .collect()
    }

    pub fn degree(&self) -> u32 {
        self.mu().iter().sum()
    }

    /// `2g − 2 + d/r + n`, which equals the edge count when the dots are valid.
    pub fn s(&self) -> usize {
        self.base.edge_count()
    }

    pub fn genus(&self) -> Result<u32, GraphError> {
        Ok(self.base.graph_type()?.g)
    }

    /// Every failed condition; empty exactly for an arrowed `r`-Hurwitz graph.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.validate_dots();
        for v in 0..self.base.vertex_count() {
            match self.arrows[v] {
                None => out.push(Violation::MissingArrow { vertex: v }),
                Some(a) if !self.points_into(a, v) => out.push(Violation::BadArrow { vertex: v }),
                _ => {}
            }
        }
        out
    }

    /// The conditions on the underlying graph and dots, ignoring arrows.
    pub fn validate_dots(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let g = &self.base;
        if !g.is_connected() {
            out.push(Violation::Disconnected);
        }
        for v in 0..g.vertex_count() {
            if g.degree(v) == 0 && self.bare[v] != self.r {
                out.push(Violation::FaceDots { face: NONE, dots: self.bare[v] });
            }
        }
        for face in g.face_cycles() {
            let total: u32 = face.iter().map(|&c| self.dots[c as usize]).sum();
            if total != self.r {
                out.push(Violation::FaceDots { face: *face.iter().min().expect("nonempty face"), dots: total });
            }
            for (k, &c) in face.iter().enumerate() {
                let other = g.iota(c);
                let Some(l) = face.iter().position(|&x| x == other) else { continue };
                if l <= k {
                    continue;
                }
                let between: u32 = face[k + 1..=l].iter().map(|&x| self.dots[x as usize]).sum();
                if between == 0 || between >= self.r {
                    out.push(Violation::DotCondition { edge: g.edge_of(c), between });
                }
            }
        }
        for (v, &m) in self.mu().iter().enumerate() {
            if m == 0 {
                out.push(Violation::EmptyVertex { vertex: v });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Valid, and some labeling of the edges by `1..s` is compatible with
    /// the dots (see [`labelings`]).
    pub fn is_realizable(&self) -> bool {
        self.is_valid() && labelings(self) > 0
    }

    fn points_into(&self, a: DotRef, v: usize) -> bool {
        let at_v = if a.corner == NONE {
            self.base.degree(v) == 0
        } else {
            self.base.contains(a.corner) && self.base.vertex_of(a.corner) == v
        };
        at_v && a.index < self.corner_dots(a.corner, v)
    }

    /// Every way of placing one arrow per vertex.
    pub fn all_arrowings(&self) -> Vec<HurwitzGraph> {
        let choices: Vec<Vec<DotRef>> = (0..self.base.vertex_count()).map(|v| self.vertex_dots(v)).collect();
        let mut out = Vec::new();
        let mut pick = vec![0usize; choices.len()];
        if choices.iter().any(|c| c.is_empty()) {
            return out;
        }
        loop {
            let arrows = pick.iter().zip(&choices).map(|(&k, c)| Some(c[k])).collect();
            out.push(self.with_arrows(arrows));
            let mut i = 0;
            loop {
                if i == pick.len() {
                    return out;
                }
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
        }
    }

    /// Code equal for two decorated graphs exactly when some label-preserving
    /// isomorphism of the bases carries dots to dots and arrows to arrows,
    /// together with the number of such self-maps.
    fn code_and_symmetry(&self) -> (Vec<u32>, u64) {
        let g = &self.base;
        let mut code = vec![self.r, g.vertex_count() as u32];
        let mut symmetry = 1u64;
        let mut base = 0u32;
        for comp in g.components() {
            let start = comp[0];
            if g.degree(start) == 0 {
                // the dots of a bare vertex form one cycle; rotating it is a
                // symmetry unless an arrow pins it
                code.extend([start as u32, NONE, self.bare[start], u32::from(self.arrows[start].is_some())]);
                if self.arrows[start].is_none() {
                    symmetry *= u64::from(self.bare[start].max(1));
                }
                continue;
            }
            let mut best: Option<Vec<u32>> = None;
            let mut ties = 0u64;
            let mut size = 0;
            for &root in g.rotation(start) {
                let t = g.traverse(root, base);
                size = t.order.len() as u32;
                let mut renumber = vec![NONE; g.dart_bound() as usize];
                for (k, &d) in t.order.iter().enumerate() {
                    renumber[d as usize] = base + k as u32;
                }
                let mut c: Vec<u32> = t.code.iter().flatten().copied().collect();
                c.extend(t.order.iter().map(|&d| self.dots[d as usize]));
                for &v in &comp {
                    match self.arrows[v] {
                        Some(a) => c.extend([renumber[a.corner as usize], a.index]),
                        None => c.extend([NONE, NONE]),
                    }
                }
                match best.as_ref().map(|b| c.cmp(b)) {
                    None | Some(core::cmp::Ordering::Less) => {
                        best = Some(c);
                        ties = 1;
                    }
                    Some(core::cmp::Ordering::Equal) => ties += 1,
                    _ => {}
                }
            }
            base += size;
            code.extend(best.expect("vertex with darts"));
            symmetry *= ties;
        }
        (code, symmetry)
    }

    pub fn canonical_code(&self) -> Vec<u32> {
        self.code_and_symmetry().0
    }

    /// Automorphisms of the base preserving labels, dots and arrows.
    pub fn automorphism_count(&self) -> u64 {
        self.code_and_symmetry().1
    }

    pub fn is_isomorphic(&self, other: &HurwitzGraph) -> bool {
        self.canonical_code() == other.canonical_code()
    }

    /// Splits into connected pieces, each with its vertex labels in `self`.
    pub fn split_components(&self) -> Vec<(Vec<usize>, HurwitzGraph)> {
        self.base
            .split_components()
            .into_iter()
            .map(|(vs, g)| {
                let mut dots = vec![0; g.dart_bound() as usize];
                for d in g.darts() {
                    dots[d as usize] = self.dots[d as usize];
                }
                let bare = vs.iter().map(|&v| self.bare[v]).collect();
                let arrows = vs.iter().map(|&v| self.arrows[v]).collect();
                let h = HurwitzGraph { r: self.r, base: g, dots, bare, arrows };
                (vs, h)
            })
            .collect()
    }
}
