//! Named algebras and permutation generators in cycle notation.

use std::sync::Arc;

use edgecontract_core::frobenius::{
    center_of_group_algebra, cyclic_group_generators, symmetric_group_generators, FrobeniusAlgebra, FrobeniusError,
    Permutation,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KeyError {
    #[error("unknown algebra key {0:?}")]
    Unknown(String),
    #[error("bad permutation {0:?}: {1}")]
    Permutation(String, &'static str),
    #[error(transparent)]
    Algebra(#[from] FrobeniusError),
}

/// Parses generators such as `(0 1);(0 1 2)`: generators separated by `;`,
/// each a product of disjoint cycles whose points are separated by spaces or
/// commas. All generators act on `0..=max point`.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>, KeyError> {
    let err = |m| KeyError::Permutation(text.into(), m);
    let mut cycles_per_gen: Vec<Vec<Vec<usize>>> = Vec::new();
    for gen in text.split(';') {
        let gen = gen.trim();
        if gen.is_empty() {
            return Err(err("empty generator"));
        }
        let mut cycles = Vec::new();
        let mut rest = gen;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or(err("expected '('"))?;
            let close = body.find(')').ok_or(err("missing ')'"))?;
            let points = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<usize>().map_err(|_| err("point is not a number")))
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(points);
            rest = body[close + 1..].trim_start();
        }
        cycles_per_gen.push(cycles);
    }
    let degree = cycles_per_gen.iter().flatten().flatten().max().map_or(1, |m| m + 1);
    cycles_per_gen
        .into_iter()
        .map(|cycles| {
            let mut p: Permutation = (0..degree).collect();
            let mut used = vec![false; degree];
            for c in cycles {
                for (k, &x) in c.iter().enumerate() {
                    if std::mem::replace(&mut used[x], true) {
                        return Err(err("cycles are not disjoint"));
                    }
                    p[x] = c[(k + 1) % c.len()];
                }
            }
            Ok(p)
        })
        .collect()
}

/// `trivial`, `dual-numbers`, `center:S<k>`, `center:Z<k>`, or
/// `center:<generators>`.
pub fn algebra_from_key(key: &str) -> Result<Arc<FrobeniusAlgebra>, KeyError> {
    match key {
        "trivial" => return Ok(FrobeniusAlgebra::trivial()),
        "dual-numbers" => return Ok(FrobeniusAlgebra::dual_numbers()),
        _ => {}
    }
    let group = key.strip_prefix("center:").ok_or_else(|| KeyError::Unknown(key.into()))?;
    let named = |prefix: &str| group.strip_prefix(prefix).and_then(|k| k.parse::<usize>().ok()).filter(|&k| k >= 1);
    let generators = if let Some(k) = named("S") {
        symmetric_group_generators(k)
    } else if let Some(k) = named("Z") {
        cyclic_group_generators(k)
    } else if group.starts_with('(') {
        parse_generators(group)?
    } else {
        return Err(KeyError::Unknown(key.into()));
    };
    Ok(center_of_group_algebra(&generators)?)
}
