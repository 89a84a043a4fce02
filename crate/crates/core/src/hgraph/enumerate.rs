use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{HgraphError, HurwitzGraph};
use crate::cellgraph::{enumerate_graphs_with_edges, CellGraph, Edge};
use crate::exactmath::{factorial, Rational};
use crate::hurwitz::Profile;

/// Largest degree and edge count the brute-force enumeration accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCap {
    pub max_degree: u32,
    pub max_edges: usize,
}

pub const DEFAULT_ENUMERATION_CAP: EnumerationCap = EnumerationCap { max_degree: 6, max_edges: 4 };

/// One isomorphism class of (unarrowed) `r`-Hurwitz graphs with its
/// contribution `arrowings · labelings / (s! · automorphisms)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzClass {
    pub graph: HurwitzGraph,
    /// Base automorphisms preserving the dots.
    pub automorphisms: u64,
    /// Edge labelings `1..s` compatible with the dots.
    pub labelings: u64,
    /// `∏ μᵢ`, the arrow choices.
    pub arrowings: u64,
    pub weight: Rational,
}

/// Number of bijections from edges to `1..s` such that every corner without
/// dots sits between an edge and a strictly later one, turning
/// counter-clockwise. A corner between two darts of one edge always needs a
/// dot.
pub fn labelings(h: &HurwitzGraph) -> u64 {
    let g = h.base();
    let edges = g.edges();
    let s = edges.len();
    let index = |e: Edge| edges.iter().position(|&x| x == e).expect("edge");
    // earlier[x]: edges that must carry a smaller label than x
    let mut earlier = vec![0u32; s];
    for c in g.darts() {
        if h.corner_dots(c, g.vertex_of(c)) > 0 {
            continue;
        }
        let (x, y) = (index(g.edge_of(c)), index(g.edge_of(g.sigma_inv(c))));
        if x == y {
            return 0;
        }
        earlier[x] |= 1 << y;
    }
    let mut ways = vec![0u64; 1 << s];
    ways[0] = 1;
    for set in 0..(1usize << s) {
        if ways[set] == 0 {
            continue;
        }
        for (x, &need) in earlier.iter().enumerate() {
            if set & (1 << x) == 0 && (need as usize) & !set == 0 {
                ways[set | (1 << x)] += ways[set];
            }
        }
    }
    ways[(1 << s) - 1]
}

fn for_each_distribution(total: u32, slots: usize, f: &mut dyn FnMut(&[u32])) {
    fn go(left: u32, slots: usize, acc: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if slots == 1 {
            acc.push(left);
            f(acc);
            acc.pop();
            return;
        }
        for first in 0..=left {
            acc.push(first);
            go(left - first, slots - 1, acc, f);
            acc.pop();
        }
    }
    go(total, slots, &mut Vec::new(), f);
}

/// All valid dot placements on a fixed base graph with vertex profile
/// `mu`, unarrowed.
pub fn dot_configurations(base: &CellGraph, r: u32, mu: &[u32]) -> Vec<HurwitzGraph> {
    let n = base.vertex_count();
    if mu.len() != n || r == 0 {
        return Vec::new();
    }
    if base.edge_count() == 0 {
        let bare: Vec<u32> = mu.to_vec();
        return HurwitzGraph::new(r, base.clone(), Vec::new(), bare, vec![None; n])
            .ok()
            .filter(|h| h.validate_dots().is_empty())
            .into_iter()
            .collect();
    }
    let faces = base.face_cycles();
    let mut out = Vec::new();
    let mut dots = vec![0u32; base.dart_bound() as usize];
    fn fill(
        k: usize,
        faces: &[Vec<u32>],
        r: u32,
        dots: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        if k == faces.len() {
            f(dots);
            return;
        }
        let face = &faces[k];
        for_each_distribution(r, face.len(), &mut |split| {
            for (&c, &x) in face.iter().zip(split) {
                dots[c as usize] = x;
            }
            fill(k + 1, faces, r, &mut dots.clone(), f);
        });
    }
    fill(0, &faces, r, &mut dots, &mut |d| {
        let h = HurwitzGraph::new(r, base.clone(), d.to_vec(), vec![0; n], vec![None; n]).expect("well formed");
        if h.mu() == mu && h.validate_dots().is_empty() {
            out.push(h);
        }
    });
    out
}

/// Isomorphism classes of realizable `r`-Hurwitz graphs of type `(g, μ)`
/// with their weights, ordered by canonical code. Decorations admitting no
/// compatible edge labeling weigh nothing and are left out.
pub fn enumerate_classes(r: u32, g: i64, mu: &[u32], cap: EnumerationCap) -> Result<Vec<HurwitzClass>, HgraphError> {
    let profile = Profile::new(r, g, mu);
    if !profile.is_admissible() {
        return Ok(Vec::new());
    }
    let d = profile.degree();
    let s = profile.s().expect("admissible") as usize;
    if d > cap.max_degree {
        return Err(HgraphError::TooLarge("degree"));
    }
    if s > cap.max_edges {
        return Err(HgraphError::TooLarge("edges"));
    }
    let (n, faces) = (mu.len(), (d / r) as usize);
    let arrowings: u64 = mu.iter().map(|&m| m as u64).product();
    let mut classes: BTreeMap<Vec<u32>, HurwitzClass> = BTreeMap::new();
    for base in enumerate_graphs_with_edges(s) {
        if base.vertex_count() != n || base.face_count() != faces {
            continue;
        }
        for h in dot_configurations(&base, r, mu) {
            let code = h.canonical_code();
            if classes.contains_key(&code) {
                continue;
            }
            let labelings = labelings(&h);
            if labelings == 0 {
                continue;
            }
            let automorphisms = h.automorphism_count();
            let weight = Rational::from_integer(BigInt::from(arrowings * labelings))
                / (factorial(s as u32) * Rational::from_integer(BigInt::from(automorphisms)));
            classes.insert(
                code,
                HurwitzClass {
                    graph: h,
                    automorphisms,
                    labelings,
                    arrowings,
                    weight,
                },
            );
        }
    }
    Ok(classes.into_values().collect())
}

/// The weighted count of arrowed `r`-Hurwitz graphs of type `(g, μ)`.
pub fn enumerate_weighted(r: u32, g: i64, mu: &[u32], cap: EnumerationCap) -> Result<Rational, HgraphError> {
    Ok(enumerate_classes(r, g, mu, cap)?.into_iter().map(|c| c.weight).sum())
}
