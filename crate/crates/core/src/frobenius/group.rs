use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{FrobeniusAlgebra, FrobeniusError};
use crate::exactmath::{int, Rational};

/// A permutation of `{0, …, k-1}` by its images.
pub type Permutation = Vec<usize>;

pub const DEFAULT_GROUP_CAP: usize = 5040;

fn compose(a: &[usize], b: &[usize]) -> Permutation {
    // (a ∘ b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

fn invert(a: &[usize]) -> Permutation {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

fn order(a: &[usize]) -> usize {
    let id: Permutation = (0..a.len()).collect();
    let mut p = a.to_vec();
    let mut k = 1;
    while p != id {
        p = compose(a, &p);
        k += 1;
    }
    k
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !core::mem::replace(&mut seen[x], true))
}

/// All elements of the group generated by `generators`, refusing to grow past `cap`.
pub fn group_closure(generators: &[Permutation], cap: usize) -> Result<BTreeSet<Permutation>, FrobeniusError> {
    let degree = generators.first().map_or(0, Vec::len);
    if generators.iter().any(|g| g.len() != degree || !is_permutation(g)) {
        return Err(FrobeniusError::InvalidPermutation);
    }
    let id: Permutation = (0..degree).collect();
    let mut seen = BTreeSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = compose(g, &x);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(FrobeniusError::GroupTooLarge { cap });
                }
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}

/// Conjugacy classes: the identity first, then by element order and least member.
pub fn conjugacy_classes(generators: &[Permutation], cap: usize) -> Result<Vec<Vec<Permutation>>, FrobeniusError> {
    let group = group_closure(generators, cap)?;
    let mut assigned = BTreeSet::new();
    let mut classes = Vec::new();
    for x in &group {
        if assigned.contains(x) {
            continue;
        }
        let class: BTreeSet<Permutation> = group
            .iter()
            .map(|g| compose(&compose(g, x), &invert(g)))
            .collect();
        assigned.extend(class.iter().cloned());
        classes.push(class.into_iter().collect::<Vec<_>>());
    }
    classes.sort_by_key(|c: &Vec<Permutation>| (order(&c[0]), c[0].clone()));
    Ok(classes)
}

/// Center of the group algebra in the basis of class sums, with
/// `ε(Σ a_g g) = a_identity`.
pub fn center_of_group_algebra(generators: &[Permutation]) -> Result<Arc<FrobeniusAlgebra>, FrobeniusError> {
    center_of_group_algebra_capped(generators, DEFAULT_GROUP_CAP)
}

pub fn center_of_group_algebra_capped(
    generators: &[Permutation],
    cap: usize,
) -> Result<Arc<FrobeniusAlgebra>, FrobeniusError> {
    let classes = conjugacy_classes(generators, cap)?;
    let r = classes.len();
    let mut class_of = BTreeMap::new();
    for (i, c) in classes.iter().enumerate() {
        for x in c {
            class_of.insert(x.clone(), i);
        }
    }
    let mut counts = vec![vec![vec![0i64; r]; r]; r];
    for (k, ck) in classes.iter().enumerate() {
        let z = &ck[0];
        for (i, ci) in classes.iter().enumerate() {
            for a in ci {
                let b = compose(&invert(a), z);
                counts[i][class_of[&b]][k] += 1;
            }
        }
    }
    let mult: Vec<Vec<Vec<Rational>>> = counts
        .into_iter()
        .map(|m| m.into_iter().map(|c| c.into_iter().map(int).collect()).collect())
        .collect();
    let counit = (0..r).map(|i| int(i64::from(i == 0))).collect();
    FrobeniusAlgebra::from_structure_constants(r, mult, counit)
}

/// Generators `(0 1)` and `(0 1 … k-1)` of the symmetric group on `k` letters.
pub fn symmetric_group_generators(k: usize) -> Vec<Permutation> {
    if k < 2 {
        return vec![(0..k).collect()];
    }
    let mut swap: Permutation = (0..k).collect();
    swap.swap(0, 1);
    vec![swap, cycle(k)]
}

/// Generator `(0 1 … k-1)` of the cyclic group of order `k`.
pub fn cyclic_group_generators(k: usize) -> Vec<Permutation> {
    vec![cycle(k.max(1))]
}

fn cycle(k: usize) -> Permutation {
    (0..k).map(|i| (i + 1) % k).collect()
}
