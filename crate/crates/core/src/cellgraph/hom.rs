use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{CellGraph, Edge, GraphError};

pub const DEFAULT_HOM_EDGE_CAP: usize = 8;

/// How two edges of one graph sit relative to each other. Any two distinct
/// edges fall in exactly one case, and each case is a commuting pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// Straight edges from one vertex to two different vertices.
    SharedVertex,
    /// Two loops at one vertex.
    TwoLoops,
    /// A loop and a straight edge at one vertex.
    LoopAndEdge,
    /// No common vertex.
    Disjoint,
    /// Straight edges joining the same two vertices.
    Parallel,
}

pub fn classify_pair(g: &CellGraph, e1: Edge, e2: Edge) -> PairKind {
    let (a, b) = g.endpoints(e1);
    let (c, d) = g.endpoints(e2);
    if a != c && a != d && b != c && b != d {
        return PairKind::Disjoint;
    }
    match (a == b, c == d) {
        (true, true) => PairKind::TwoLoops,
        (true, false) | (false, true) => PairKind::LoopAndEdge,
        (false, false) if (a.min(b), a.max(b)) == (c.min(d), c.max(d)) => PairKind::Parallel,
        (false, false) => PairKind::SharedVertex,
    }
}

/// One morphism: the smallest contraction word of its class and the class size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomClass {
    pub representative: Vec<Edge>,
    pub words: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn hom_set(from: &CellGraph, to: &CellGraph) -> Result<Vec<HomClass>, GraphError> {
    hom_set_capped(from, to, DEFAULT_HOM_EDGE_CAP)
}

/// Morphisms `from → to`: contraction words turning `from` into a graph
/// isomorphic to `to`, modulo automorphisms of intermediate graphs and
/// swaps of adjacent letters. Words name edges by their darts in `from`.
pub fn hom_set_capped(from: &CellGraph, to: &CellGraph, cap: usize) -> Result<Vec<HomClass>, GraphError> {
    if from.edge_count() > cap {
        return Err(GraphError::TooLarge { edges: from.edge_count(), cap });
    }
    let Some(len) = from.edge_count().checked_sub(to.edge_count()) else {
        return Ok(Vec::new());
    };
    let target = to.canonical_code();
    let mut prefixes: BTreeMap<Vec<Edge>, CellGraph> = BTreeMap::new();
    let mut words: Vec<Vec<Edge>> = Vec::new();
    let mut stack = alloc::vec![(Vec::new(), from.clone())];
    while let Some((word, g)) = stack.pop() {
        if word.len() == len {
            if g.canonical_code() == target {
                words.push(word.clone());
            }
            prefixes.insert(word, g);
            continue;
        }
        for e in g.edges() {
            let mut next = word.clone();
            next.push(e);
            stack.push((next, g.contract(e)?));
        }
        prefixes.insert(word, g);
    }
    words.sort();
    let index: BTreeMap<&Vec<Edge>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind((0..words.len()).collect());

    for (i, w) in words.iter().enumerate() {
        for t in 0..w.len() {
            let g = &prefixes[&w[..t].to_vec()];
            for alpha in g.automorphism_generators() {
                let mut image = w[..t].to_vec();
                image.extend(w[t..].iter().map(|e| g.edge_of(alpha[e.0 as usize])));
                if let Some(&j) = index.get(&image) {
                    uf.union(i, j);
                }
            }
            // every pair of edges is one of the commuting kinds of `PairKind`
            if t + 1 < w.len() {
                let mut swapped = w.clone();
                swapped.swap(t, t + 1);
                if let Some(&j) = index.get(&swapped) {
                    uf.union(i, j);
                }
            }
        }
    }

    let mut classes: BTreeMap<usize, HomClass> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        let r = uf.find(i);
        classes
            .entry(r)
            .and_modify(|c| c.words += 1)
            .or_insert(HomClass {
                representative: w.clone(),
                words: 1,
            });
    }
    Ok(classes.into_values().collect())
}
