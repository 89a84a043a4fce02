//! Values `Ω(γ)(v₁, …, v_n)` of the 2D TQFT of a Frobenius algebra on a cell
//! graph, computed by contracting edges one at a time: a straight edge
//! multiplies the slots at its ends, a loop inserts the coproduct of its slot.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cellgraph::{CellGraph, Edge, GraphError};
use crate::exactmath::{rat, Rational};
use crate::frobenius::{AlgebraElement, FrobeniusAlgebra, FrobeniusError};

/// Rule picking the next edge to contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    LeastEdge,
    GreatestEdge,
    LoopsFirst,
    /// Pseudo-random choice determined by the seed and the graph.
    Seeded(u64),
    /// The first of the two edges still present, then the least edge.
    Prefer(Edge, Edge),
}

impl Strategy {
    pub fn pick(&self, g: &CellGraph) -> Option<Edge> {
        let edges = g.edges();
        match *self {
            Strategy::LeastEdge => edges.first().copied(),
            Strategy::GreatestEdge => edges.last().copied(),
            Strategy::LoopsFirst => edges.iter().copied().find(|e| g.is_loop(*e)).or(edges.first().copied()),
            Strategy::Prefer(a, b) => [a, b].into_iter().find(|&e| g.has_edge(e)).or(edges.first().copied()),
            Strategy::Seeded(seed) => {
                if edges.is_empty() {
                    return None;
                }
                let mut h = seed;
                for r in g.rotations() {
                    h = splitmix(h ^ r.len() as u64);
                    for &d in r {
                        h = splitmix(h ^ u64::from(d));
                    }
                }
                Some(edges[(h % edges.len() as u64) as usize])
            }
        }
    }
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TqftError {
    #[error("graph has {vertices} vertices but {slots} slots were given")]
    SlotMismatch { vertices: usize, slots: usize },
    #[error(transparent)]
    Algebra(#[from] FrobeniusError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{strategy:?} gave {got}, expected {expected}")]
    Falsified {
        strategy: Strategy,
        expected: Rational,
        got: Rational,
    },
}

/// `Ω(γ)(v₁, …, v_n)`; a disconnected graph gives the product over components.
pub fn evaluate(g: &CellGraph, vs: &[AlgebraElement], strategy: Strategy) -> Result<Rational, TqftError> {
    if vs.len() != g.vertex_count() {
        return Err(TqftError::SlotMismatch {
            vertices: g.vertex_count(),
            slots: vs.len(),
        });
    }
    let algebra = vs[0].algebra().clone();
    for v in vs {
        v.mul(&algebra.unit())?;
    }
    Ok(eval_any(&algebra, g, vs.to_vec(), strategy))
}

fn eval_any(a: &Arc<FrobeniusAlgebra>, g: &CellGraph, vs: Vec<AlgebraElement>, s: Strategy) -> Rational {
    let parts = g.split_components();
    if parts.len() == 1 {
        return eval_connected(a, g, vs, s);
    }
    let mut acc = Rational::from_integer(1.into());
    for (labels, part) in parts {
        let slots = labels.iter().map(|&v| vs[v].clone()).collect();
        acc *= eval_connected(a, &part, slots, s);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

fn eval_connected(a: &Arc<FrobeniusAlgebra>, g: &CellGraph, mut vs: Vec<AlgebraElement>, s: Strategy) -> Rational {
    let Some(e) = s.pick(g) else {
        return vs[0].counit();
    };
    if vs.iter().any(AlgebraElement::is_zero) {
        return Rational::zero();
    }
    if !g.is_loop(e) {
        let (x, y) = g.endpoints(e);
        let (i, j) = (x.min(y), x.max(y));
        let next = g.contract_edge(e).expect("straight edge");
        let vj = vs.remove(j);
        vs[i] = vs[i].mul(&vj).expect("same algebra");
        return eval_connected(a, &next, vs, s);
    }
    let c = g.contract_loop(e).expect("loop");
    let delta = a.comultiply(&vs[c.vertex]);
    let d = a.dim();
    // by linearity in the new slot, Σ_b t_ab e_b can stay summed
    let rows: Vec<AlgebraElement> = (0..d)
        .map(|i| a.element(delta.coords()[i].clone()).expect("dimension"))
        .collect();
    if !c.separating {
        let mut total = Rational::zero();
        for (i, row) in rows.iter().enumerate() {
            if row.is_zero() {
                continue;
            }
            let mut slots = vs.clone();
            slots[c.vertex] = a.basis(i);
            slots.insert(c.new_vertex, row.clone());
            total += eval_connected(a, &c.graph, slots, s);
        }
        return total;
    }
    let mut slots = vs.clone();
    slots.insert(c.new_vertex, a.unit());
    let parts = c.graph.split_components();
    debug_assert_eq!(parts.len(), 2);
    let side = |v: usize| parts.iter().position(|(labels, _)| labels.contains(&v)).expect("vertex");
    let (si, sj) = (side(c.vertex), side(c.new_vertex));
    let value_with = |part: usize, at: usize, x: AlgebraElement| {
        let (labels, graph) = &parts[part];
        let local: Vec<AlgebraElement> = labels
            .iter()
            .map(|&v| if v == at { x.clone() } else { slots[v].clone() })
            .collect();
        eval_connected(a, graph, local, s)
    };
    let mut total = Rational::zero();
    for (i, row) in rows.iter().enumerate() {
        if row.is_zero() {
            continue;
        }
        let left = value_with(si, c.vertex, a.basis(i));
        if left.is_zero() {
            continue;
        }
        total += left * value_with(sj, c.new_vertex, row.clone());
    }
    total
}

/// One contraction step: `Ω(γ)(v) = Σ Ω(γ')(v')` over the returned terms,
/// where a straight edge gives one term and a loop one term per basis
/// vector. Terms may be disconnected; their value is the product over
/// components.
pub fn expand_edge(g: &CellGraph, vs: &[AlgebraElement], e: Edge) -> Result<Vec<(CellGraph, Vec<AlgebraElement>)>, TqftError> {
    if vs.len() != g.vertex_count() {
        return Err(TqftError::SlotMismatch {
            vertices: g.vertex_count(),
            slots: vs.len(),
        });
    }
    if !g.has_edge(e) {
        return Err(GraphError::NoSuchEdge(e.0).into());
    }
    let mut vs = vs.to_vec();
    if !g.is_loop(e) {
        let (x, y) = g.endpoints(e);
        let (i, j) = (x.min(y), x.max(y));
        let vj = vs.remove(j);
        vs[i] = vs[i].mul(&vj)?;
        return Ok(alloc::vec![(g.contract_edge(e)?, vs)]);
    }
    let a = vs[0].algebra().clone();
    let c = g.contract_loop(e)?;
    let delta = a.comultiply(&vs[c.vertex]);
    let mut out = Vec::new();
    for i in 0..a.dim() {
        let row = a.element(delta.coords()[i].clone())?;
        if row.is_zero() {
            continue;
        }
        let mut slots = vs.clone();
        slots[c.vertex] = a.basis(i);
        slots.insert(c.new_vertex, row);
        out.push((c.graph.clone(), slots));
    }
    Ok(out)
}

/// `Π ε(v_I 𝐞^{g})` over the components of `g`.
pub fn closed_value(g: &CellGraph, vs: &[AlgebraElement]) -> Result<Rational, TqftError> {
    if vs.len() != g.vertex_count() {
        return Err(TqftError::SlotMismatch {
            vertices: g.vertex_count(),
            slots: vs.len(),
        });
    }
    let mut acc = Rational::from_integer(1.into());
    for (labels, part) in g.split_components() {
        let a = vs[labels[0]].algebra().clone();
        let slots: Vec<AlgebraElement> = labels.iter().map(|&v| vs[v].clone()).collect();
        acc *= a.omega_closed(part.graph_type()?.g, &slots)?;
    }
    Ok(acc)
}

/// A random element with small coefficients.
pub fn random_element(a: &Arc<FrobeniusAlgebra>, rng: &mut impl Rng) -> AlgebraElement {
    let coords = (0..a.dim())
        .map(|_| rat(rng.random_range(-4..=4), rng.random_range(1..=3)))
        .collect();
    a.element(coords).expect("dimension")
}

pub const STRATEGIES: [Strategy; 3] = [Strategy::LeastEdge, Strategy::GreatestEdge, Strategy::LoopsFirst];

/// Outcome of a successful independence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub g: u32,
    pub n: u32,
    pub values: Vec<Rational>,
    pub evaluations: usize,
}

/// Evaluates `g` on `trials` random slot assignments with every fixed strategy
/// plus a seeded one, and compares each value with `ε(v₁ ⋯ v_n 𝐞^g)`.
pub fn verify_independence(
    g: &CellGraph,
    a: &Arc<FrobeniusAlgebra>,
    trials: usize,
    seed: u64,
) -> Result<IndependenceReport, TqftError> {
    let t = g.graph_type()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Vec::with_capacity(trials);
    let mut evaluations = 0;
    for trial in 0..trials {
        let vs: Vec<AlgebraElement> = (0..g.vertex_count()).map(|_| random_element(a, &mut rng)).collect();
        let expected = a.omega_closed(t.g, &vs)?;
        let seeded = Strategy::Seeded(seed.wrapping_add(trial as u64));
        for strategy in STRATEGIES.into_iter().chain([seeded]) {
            let got = evaluate(g, &vs, strategy)?;
            evaluations += 1;
            if got != expected {
                return Err(TqftError::Falsified {
                    strategy,
                    expected,
                    got,
                });
            }
        }
        values.push(expected);
    }
    Ok(IndependenceReport {
        g: t.g,
        n: t.n,
        values,
        evaluations,
    })
}

#[cfg(test)]
mod tests;
