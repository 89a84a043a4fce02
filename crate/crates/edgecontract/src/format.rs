//! JSON wire formats. Rationals travel as strings `"p/q"`, or `"p"` when the
//! denominator is one.

use std::sync::Arc;

use edgecontract_core::cellgraph::{CellGraph, GraphError};
use edgecontract_core::exactmath::{Rational, TruncatedSeries, Vars};
use edgecontract_core::frobenius::{AlgebraElement, FrobeniusAlgebra, FrobeniusError};
use edgecontract_core::hgraph::HurwitzGraph;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("series: {0}")]
    Series(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] FrobeniusError),
}

pub fn rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, FormatError> {
    let t = s.trim();
    let q: Rational = t.parse().map_err(|_| FormatError::Rational(s.into()))?;
    // Ratio parsing accepts a zero denominator on some inputs; refuse it
    if t.ends_with("/0") || t.contains("/-") {
        return Err(FormatError::Rational(s.into()));
    }
    Ok(q)
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>, FormatError> {
    v.iter().map(|s| parse_rational(s)).collect()
}

pub fn series_json(f: &TruncatedSeries) -> Value {
    let two = f.vars() == Vars::Two;
    let coeffs: Vec<Value> = f
        .terms()
        .map(|(e, c)| if two { json!([e[0], e[1], rational(c)]) } else { json!([e[0], rational(c)]) })
        .collect();
    json!({"vars": if two { 2 } else { 1 }, "N": f.order(), "coeffs": coeffs})
}

pub fn parse_series(v: &Value) -> Result<TruncatedSeries, FormatError> {
    let bad = |m: &str| FormatError::Series(m.into());
    let vars = match v["vars"].as_u64() {
        Some(1) => Vars::One,
        Some(2) => Vars::Two,
        _ => return Err(bad("vars must be 1 or 2")),
    };
    let order = v["N"].as_u64().and_then(|n| u32::try_from(n).ok()).ok_or_else(|| bad("N must be a non-negative integer"))?;
    let width = vars.count();
    let mut terms = Vec::new();
    for t in v["coeffs"].as_array().ok_or_else(|| bad("coeffs must be an array"))? {
        let t = t.as_array().filter(|t| t.len() == width + 1).ok_or_else(|| bad("term has the wrong length"))?;
        let mut e = [0u32; 2];
        for (k, x) in t[..width].iter().enumerate() {
            e[k] = x.as_u64().and_then(|n| u32::try_from(n).ok()).ok_or_else(|| bad("exponent must be a non-negative integer"))?;
        }
        if e[0] + e[1] > order {
            return Err(bad("exponent above the truncation"));
        }
        let c = parse_rational(t[width].as_str().ok_or_else(|| bad("coefficient must be a string"))?)?;
        terms.push((e, c));
    }
    Ok(TruncatedSeries::from_terms(vars, order, terms))
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    mult: Vec<Vec<Vec<String>>>,
    counit: Vec<String>,
}

pub fn algebra_json(a: &FrobeniusAlgebra) -> Value {
    let file = AlgebraFile {
        dim: a.dim(),
        mult: a
            .structure_constants()
            .iter()
            .map(|row| row.iter().map(|c| c.iter().map(rational).collect()).collect())
            .collect(),
        counit: a.counit_coords().iter().map(rational).collect(),
    };
    serde_json::to_value(file).expect("serializable")
}

pub fn parse_algebra(text: &str) -> Result<Arc<FrobeniusAlgebra>, FormatError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    let mult = file
        .mult
        .iter()
        .map(|row| row.iter().map(|c| parse_all(c)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FrobeniusAlgebra::from_structure_constants(file.dim, mult, parse_all(&file.counit)?)?)
}

/// Slot vectors as a list of coordinate lists.
pub fn parse_vectors(text: &str, a: &Arc<FrobeniusAlgebra>) -> Result<Vec<AlgebraElement>, FormatError> {
    let raw: Vec<Vec<String>> = serde_json::from_str(text)?;
    raw.iter().map(|v| Ok(a.element(parse_all(v)?)?)).collect()
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<Vec<u32>>,
    edges: Vec<[u32; 2]>,
}

pub fn graph_json(g: &CellGraph) -> Value {
    let file = GraphFile {
        vertices: g.rotations().to_vec(),
        edges: g.edge_pairs().into_iter().map(|(a, b)| [a, b]).collect(),
    };
    serde_json::to_value(file).expect("serializable")
}

pub fn parse_graph(text: &str) -> Result<CellGraph, FormatError> {
    let file: GraphFile = serde_json::from_str(text)?;
    let edges: Vec<(u32, u32)> = file.edges.iter().map(|e| (e[0], e[1])).collect();
    Ok(CellGraph::new(file.vertices, &edges)?)
}

/// The graph relabeled canonically, as compact JSON text.
pub fn canonical_graph_text(g: &CellGraph) -> String {
    graph_json(&g.canonical_form().graph).to_string()
}

/// A decorated graph: the base graph, dots per corner (keyed by the dart the
/// corner ends at) and dots on bare vertices.
pub fn hurwitz_graph_json(h: &HurwitzGraph) -> Value {
    let g = h.base();
    let corners: Vec<Value> = g
        .darts()
        .filter_map(|c| {
            let k = h.corner_dots(c, g.vertex_of(c));
            (k > 0).then(|| json!([c, k]))
        })
        .collect();
    let bare: Vec<Value> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 0)
        .map(|v| json!([v, h.corner_dots(edgecontract_core::cellgraph::NONE, v)]))
        .collect();
    json!({"graph": graph_json(g), "corner_dots": corners, "bare_vertex_dots": bare})
}
