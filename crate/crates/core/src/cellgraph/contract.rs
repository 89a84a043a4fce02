use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{CellGraph, Dart, Edge, GraphError, NONE};

/// Result of contracting a loop at `vertex`: the old rotation splits into
/// `vertex` and `vertex + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopContraction {
    pub graph: CellGraph,
    pub vertex: usize,
    pub new_vertex: usize,
    pub separating: bool,
}

fn rotated_after(rot: &[Dart], start: Dart) -> Vec<Dart> {
    let k = rot.iter().position(|&d| d == start).expect("dart at vertex");
    rot[k + 1..].iter().chain(&rot[..k]).copied().collect()
}

impl CellGraph {
    fn without_darts(&self, removed: &[Dart]) -> Vec<Dart> {
        let mut iota: Vec<Dart> = (0..self.dart_bound()).map(|d| if self.contains(d) { self.iota(d) } else { NONE }).collect();
        for &d in removed {
            iota[d as usize] = NONE;
        }
        iota
    }

    /// Contracts a straight edge between vertices `i < j`: the rotations
    /// `(h, a…)` at `i` and `(h', b…)` at `j` merge to `(a…, b…)` at `i`.
    pub fn contract_edge(&self, e: Edge) -> Result<CellGraph, GraphError> {
        if !self.has_edge(e) {
            return Err(GraphError::NoSuchEdge(e.0));
        }
        let (mut h, mut h2) = (e.0, self.iota(e.0));
        let (mut i, mut j) = (self.vertex_of(h), self.vertex_of(h2));
        if i == j {
            return Err(GraphError::IsLoop(e.0));
        }
        if i > j {
            core::mem::swap(&mut i, &mut j);
            core::mem::swap(&mut h, &mut h2);
        }
        let mut merged = rotated_after(self.rotation(i), h);
        merged.extend(rotated_after(self.rotation(j), h2));
        let mut rotations = self.rotations().to_vec();
        rotations[i] = merged;
        rotations.remove(j);
        Ok(CellGraph::from_parts(rotations, self.without_darts(&[h, h2])))
    }

    /// Contracts a loop, keeping label `i` on the arc after its smaller dart.
    pub fn contract_loop(&self, e: Edge) -> Result<LoopContraction, GraphError> {
        self.contract_loop_keeping(e, e.0)
    }

    /// Contracts the loop through `keep`: with rotation `(keep, a…, keep', b…)`
    /// at `i`, vertex `i` becomes `(a…)` and a new vertex `i + 1` gets `(b…)`.
    pub fn contract_loop_keeping(&self, e: Edge, keep: Dart) -> Result<LoopContraction, GraphError> {
        if !self.has_edge(e) {
            return Err(GraphError::NoSuchEdge(e.0));
        }
        if !self.is_loop(e) {
            return Err(GraphError::NotALoop(e.0));
        }
        let other = self.iota(keep);
        if self.edge_of(keep) != e {
            return Err(GraphError::NoSuchEdge(keep));
        }
        let i = self.vertex_of(keep);
        let after = rotated_after(self.rotation(i), keep);
        let split = after.iter().position(|&d| d == other).expect("loop dart");
        let a = after[..split].to_vec();
        let b = after[split + 1..].to_vec();
        let mut rotations = self.rotations().to_vec();
        rotations[i] = a;
        rotations.insert(i + 1, b);
        let graph = CellGraph::from_parts(rotations, self.without_darts(&[keep, other]));
        let separating = graph.components().len() > self.components().len();
        Ok(LoopContraction {
            graph,
            vertex: i,
            new_vertex: i + 1,
            separating,
        })
    }

    /// Contracts an edge of either kind.
    pub fn contract(&self, e: Edge) -> Result<CellGraph, GraphError> {
        if !self.has_edge(e) {
            return Err(GraphError::NoSuchEdge(e.0));
        }
        if self.is_loop(e) {
            Ok(self.contract_loop(e)?.graph)
        } else {
            self.contract_edge(e)
        }
    }

    /// Removes an edge without contracting it.
    pub fn delete_edge(&self, e: Edge) -> Result<CellGraph, GraphError> {
        if !self.has_edge(e) {
            return Err(GraphError::NoSuchEdge(e.0));
        }
        let pair = [e.0, self.iota(e.0)];
        let rotations = self
            .rotations()
            .iter()
            .map(|r| r.iter().copied().filter(|d| !pair.contains(d)).collect())
            .collect();
        Ok(CellGraph::from_parts(rotations, self.without_darts(&pair)))
    }

    /// Connected sum `self #_(p,q) other`.
    ///
    /// The darts at `p` are numbered `0..d` along the rotation starting at
    /// position `shift`; the darts at `q` are numbered against its rotation,
    /// starting at its first dart. Far ends with equal numbers are joined.
    /// Vertices of `self` other than `p` come first, then those of `other`;
    /// darts of `other` are shifted past those of `self`.
    pub fn connected_sum(&self, p: usize, other: &CellGraph, q: usize, shift: usize) -> Result<CellGraph, GraphError> {
        if p >= self.vertex_count() || q >= other.vertex_count() {
            return Err(GraphError::NoSuchVertex);
        }
        let d = self.degree(p);
        if d != other.degree(q) {
            return Err(GraphError::DegreeMismatch(d, other.degree(q)));
        }
        if d == 0 {
            return Err(GraphError::DegreeMismatch(0, 0));
        }
        let qrot = other.rotation(q);
        // without loops every dart at q lies on its own edge
        if qrot.iter().any(|&c| other.vertex_of(other.iota(c)) == q) {
            return Err(GraphError::SumEdgesNotDistinct);
        }
        let faces = other.face_cycles();
        let face_of = |c: Dart| faces.iter().position(|f| f.contains(&c)).expect("face");
        if qrot.iter().map(|&c| face_of(c)).collect::<BTreeSet<_>>().len() != d {
            return Err(GraphError::SumFacesNotDistinct);
        }

        let offset = self.dart_bound();
        let prot = self.rotation(p);
        let pk: Vec<Dart> = (0..d).map(|k| prot[(k + shift) % d]).collect();
        let ck: Vec<Dart> = (0..d).map(|k| qrot[(d - k) % d]).collect();

        let bound = (offset + other.dart_bound()) as usize;
        let mut iota = alloc::vec![NONE; bound];
        for x in self.darts() {
            iota[x as usize] = self.iota(x);
        }
        for y in other.darts() {
            iota[(y + offset) as usize] = other.iota(y) + offset;
        }
        for &x in &pk {
            iota[x as usize] = NONE;
        }
        for &c in &ck {
            iota[(c + offset) as usize] = NONE;
        }
        for k in 0..d {
            let x = self.iota(pk[k]);
            let y = other.iota(ck[k]) + offset;
            if self.vertex_of(x) != p {
                iota[x as usize] = y;
                iota[y as usize] = x;
            } else {
                let l = pk.iter().position(|&z| z == x).expect("loop dart");
                if k < l {
                    let y2 = other.iota(ck[l]) + offset;
                    iota[y as usize] = y2;
                    iota[y2 as usize] = y;
                }
            }
        }

        let mut rotations: Vec<Vec<Dart>> = Vec::new();
        for (v, r) in self.rotations().iter().enumerate() {
            if v != p {
                rotations.push(r.clone());
            }
        }
        for (v, r) in other.rotations().iter().enumerate() {
            if v != q {
                rotations.push(r.iter().map(|&c| c + offset).collect());
            }
        }
        if rotations.is_empty() {
            return Err(GraphError::NoVertices);
        }
        Ok(CellGraph::from_parts(rotations, iota))
    }
}
