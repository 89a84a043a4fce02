use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{Dart, GraphError, GraphType, NONE};

/// A cell graph as a rotation system.
///
/// `rotations[v]` lists the darts at vertex `v` in counterclockwise order,
/// normalized to start at the smallest dart; the vertex index is its label.
/// `iota` pairs the two darts of each edge and is indexed by dart id; ids
/// not in use map to `NONE`. Dart ids are stable under contraction, so an
/// edge keeps its name (its smaller dart) until it is contracted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellGraph {
    rotations: Vec<Vec<Dart>>,
    iota: Vec<Dart>,
    vertex: Vec<u32>,
    slot: Vec<u32>,
}

/// An edge, named by its smaller dart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub Dart);

impl CellGraph {
    /// Builds and validates a graph from rotations and a list of dart pairs.
    pub fn new(rotations: Vec<Vec<Dart>>, edges: &[(Dart, Dart)]) -> Result<Self, GraphError> {
        if rotations.is_empty() {
            return Err(GraphError::NoVertices);
        }
        let bound = rotations
            .iter()
            .flatten()
            .chain(edges.iter().flat_map(|(a, b)| [a, b]))
            .map(|&d| d as usize + 1)
            .max()
            .unwrap_or(0);
        if rotations.iter().flatten().any(|&d| d == NONE) {
            return Err(GraphError::BadDart(NONE));
        }
        let mut iota = vec![NONE; bound];
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::BadDart(a));
            }
            for (x, y) in [(a, b), (b, a)] {
                if iota[x as usize] != NONE {
                    return Err(GraphError::DuplicateDart(x));
                }
                iota[x as usize] = y;
            }
        }
        let mut seen = vec![false; bound];
        for &d in rotations.iter().flatten() {
            if core::mem::replace(&mut seen[d as usize], true) {
                return Err(GraphError::DuplicateDart(d));
            }
            if iota[d as usize] == NONE {
                return Err(GraphError::UnpairedDart(d));
            }
        }
        if let Some(d) = (0..bound).find(|&d| iota[d] != NONE && !seen[d]) {
            return Err(GraphError::UnplacedDart(d as Dart));
        }
        Ok(Self::from_parts(rotations, iota))
    }

    /// Assumes the parts are consistent.
    pub(crate) fn from_parts(mut rotations: Vec<Vec<Dart>>, mut iota: Vec<Dart>) -> Self {
        for rot in rotations.iter_mut() {
            if let Some(m) = rot.iter().enumerate().min_by_key(|(_, d)| **d).map(|(i, _)| i) {
                rot.rotate_left(m);
            }
        }
        while iota.last() == Some(&NONE) {
            iota.pop();
        }
        let mut vertex = vec![NONE; iota.len()];
        let mut slot = vec![NONE; iota.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for (k, &d) in rot.iter().enumerate() {
                vertex[d as usize] = v as u32;
                slot[d as usize] = k as u32;
            }
        }
        CellGraph {
            rotations,
            iota,
            vertex,
            slot,
        }
    }

    /// One vertex, no edges.
    pub fn bare_vertex() -> Self {
        Self::from_parts(vec![vec![]], vec![])
    }

    /// `n` isolated vertices.
    pub fn bare_vertices(n: usize) -> Self {
        Self::from_parts(vec![vec![]; n.max(1)], vec![])
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotations.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    /// Dart ids in use, ascending.
    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.iota.len() as Dart).filter(|&d| self.iota[d as usize] != NONE)
    }

    pub fn contains(&self, d: Dart) -> bool {
        (d as usize) < self.iota.len() && self.iota[d as usize] != NONE
    }

    /// One past the largest dart id in use.
    pub fn dart_bound(&self) -> u32 {
        self.iota.len() as u32
    }

    pub fn iota(&self, d: Dart) -> Dart {
        self.iota[d as usize]
    }

    /// Next dart counterclockwise at the same vertex.
    pub fn sigma(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.vertex[d as usize] as usize];
        rot[(self.slot[d as usize] as usize + 1) % rot.len()]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.vertex[d as usize] as usize];
        let k = self.slot[d as usize] as usize;
        rot[(k + rot.len() - 1) % rot.len()]
    }

    /// Face successor `σ(ι(d))`.
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma(self.iota(d))
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex[d as usize] as usize
    }

    /// Position of `d` in the rotation at its vertex.
    pub fn slot_of(&self, d: Dart) -> usize {
        self.slot[d as usize] as usize
    }

    /// All edges, ordered by their smaller dart.
    pub fn edges(&self) -> Vec<Edge> {
        self.darts().filter(|&d| d < self.iota(d)).map(Edge).collect()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.contains(e.0) && e.0 < self.iota(e.0)
    }

    /// Edge containing dart `d`.
    pub fn edge_of(&self, d: Dart) -> Edge {
        Edge(d.min(self.iota(d)))
    }

    pub fn endpoints(&self, e: Edge) -> (usize, usize) {
        (self.vertex_of(e.0), self.vertex_of(self.iota(e.0)))
    }

    pub fn is_loop(&self, e: Edge) -> bool {
        let (a, b) = self.endpoints(e);
        a == b
    }

    /// Dart pairs `(d, ι(d))` with `d < ι(d)`.
    pub fn edge_pairs(&self) -> Vec<(Dart, Dart)> {
        self.edges().into_iter().map(|e| (e.0, self.iota(e.0))).collect()
    }

    /// Cycles of `φ = σ ∘ ι`, each starting at its smallest dart, ordered by that dart.
    pub fn face_cycles(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.iota.len()];
        let mut faces = Vec::new();
        for d in self.darts() {
            if seen[d as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut c = d;
            while !seen[c as usize] {
                seen[c as usize] = true;
                cycle.push(c);
                c = self.phi(c);
            }
            faces.push(cycle);
        }
        faces
    }

    /// Faces, counting one for every bare vertex.
    pub fn face_count(&self) -> usize {
        self.face_cycles().len() + self.rotations.iter().filter(|r| r.is_empty()).count()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &d in &self.rotations[v] {
                    let w = self.vertex_of(self.iota(d));
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The subgraph on the given vertices, relabeled `0..` in the given order;
    /// dart ids are kept. The vertex set must be closed under adjacency.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let rotations: Vec<Vec<Dart>> = vertices.iter().map(|&v| self.rotations[v].clone()).collect();
        let mut iota = vec![NONE; self.iota.len()];
        for &d in rotations.iter().flatten() {
            iota[d as usize] = self.iota(d);
        }
        Self::from_parts(rotations, iota)
    }

    /// Connected components as separate graphs, with their vertex labels in `self`.
    pub fn split_components(&self) -> Vec<(Vec<usize>, CellGraph)> {
        self.components()
            .into_iter()
            .map(|vs| {
                let g = self.induced(&vs);
                (vs, g)
            })
            .collect()
    }

    /// `(g, n, F)` of a connected graph.
    pub fn graph_type(&self) -> Result<GraphType, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let v = self.vertex_count() as i64;
        let e = self.edge_count() as i64;
        let f = self.face_count() as i64;
        let chi = v - e + f;
        debug_assert!(chi <= 2 && chi % 2 == 0);
        Ok(GraphType {
            g: ((2 - chi) / 2) as u32,
            n: v as u32,
            faces: f as u32,
        })
    }

    /// Types of all components, ordered by smallest vertex.
    pub fn component_types(&self) -> Vec<GraphType> {
        self.split_components()
            .into_iter()
            .map(|(_, g)| g.graph_type().expect("component is connected"))
            .collect()
    }

    /// `Σ (2g - 2 + n)` over components.
    pub fn complexity(&self) -> i64 {
        self.component_types().iter().map(GraphType::complexity).sum()
    }

    /// Relabels vertices: old vertex `v` gets label `perm[v]`.
    pub fn permute_labels(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let n = self.vertex_count();
        let mut rotations = vec![None; n];
        if perm.len() != n {
            return Err(GraphError::BadLabelPermutation);
        }
        for (v, &p) in perm.iter().enumerate() {
            if p >= n || rotations[p].is_some() {
                return Err(GraphError::BadLabelPermutation);
            }
            rotations[p] = Some(self.rotations[v].clone());
        }
        Ok(Self::from_parts(
            rotations.into_iter().map(Option::unwrap).collect(),
            self.iota.clone(),
        ))
    }

    /// Renumbers dart ids to `0..2E` in ascending order of the old ids.
    pub fn compact(&self) -> Self {
        let mut map = vec![NONE; self.iota.len()];
        for (k, d) in self.darts().enumerate() {
            map[d as usize] = k as Dart;
        }
        self.map_darts(&map)
    }

    /// Applies a dart renaming given as a table indexed by old id.
    pub(crate) fn map_darts(&self, map: &[Dart]) -> Self {
        let bound = self.darts().map(|d| map[d as usize] as usize + 1).max().unwrap_or(0);
        let mut iota = vec![NONE; bound];
        for d in self.darts() {
            iota[map[d as usize] as usize] = map[self.iota(d) as usize];
        }
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().map(|&d| map[d as usize]).collect())
            .collect();
        Self::from_parts(rotations, iota)
    }
}
