use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use super::Profile;
use crate::exactmath::{factorial, int, Rational};

/// Largest `(d, s)` the direct count accepts.
pub const FACTORIZATION_CAP: (u32, i64) = (8, 5);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizationError {
    #[error("degree {d} with {s} transpositions exceeds the enumeration cap")]
    TooLarge { d: u32, s: i64 },
}

struct Search {
    d: usize,
    target: Vec<usize>,
    count: u64,
}

fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

fn same_cycle(p: &[usize], a: usize, b: usize) -> bool {
    let mut x = p[a];
    while x != a {
        if x == b {
            return true;
        }
        x = p[x];
    }
    false
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut x = x;
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search {
    fn run(&mut self, perm: &mut Vec<usize>, cycles: usize, parent: &[usize], left: usize) {
        let n = self.target.len();
        if cycles.abs_diff(n) > left {
            return;
        }
        if left == 0 {
            let mut p = parent.to_vec();
            let root = find(&mut p, 0);
            if (0..self.d).all(|x| find(&mut p, x) == root) && cycle_type(perm) == self.target {
                self.count += 1;
            }
            return;
        }
        for a in 0..self.d {
            for b in a + 1..self.d {
                let split = same_cycle(perm, a, b);
                // left multiplication by (a b) exchanges the values a and b
                let (ia, ib) = (
                    perm.iter().position(|&v| v == a).expect("value"),
                    perm.iter().position(|&v| v == b).expect("value"),
                );
                perm.swap(ia, ib);
                let mut p = parent.to_vec();
                let (ra, rb) = (find(&mut p, a), find(&mut p, b));
                p[ra] = rb;
                let next = if split { cycles + 1 } else { cycles - 1 };
                self.run(perm, next, &p, left - 1);
                perm.swap(ia, ib);
            }
        }
    }
}

/// Permutations of `{0..d}` whose cycles all have length `r`.
fn uniform_cycle_permutations(d: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let Some(x) = used.iter().position(|u| !u) else {
            out.push(perm.clone());
            return;
        };
        used[x] = true;
        let mut chain = vec![x];
        extend(r, perm, used, &mut chain, out);
        used[x] = false;
    }
    fn extend(r: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chain.len() == r {
            for k in 0..r {
                perm[chain[k]] = chain[(k + 1) % r];
            }
            go(r, perm, used, out);
            return;
        }
        for y in 0..used.len() {
            if !used[y] {
                used[y] = true;
                chain.push(y);
                extend(r, perm, used, chain, out);
                chain.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(r, &mut (0..d).collect(), &mut vec![false; d], &mut out);
    out
}

/// Weighted number of tuples `(σ₀, τ₁, …, τ_s)`: `σ₀` has all cycles of
/// length `r`, the `τ` are transpositions, `τ_s ⋯ τ₁ σ₀` has cycle type `μ`
/// and the tuple generates a transitive group. Each tuple counts once per
/// length-preserving labeling of the cycles of the product by `1..n`.
pub fn factorization_tuples(r: u32, g: i64, mu: &[u32]) -> Result<u64, FactorizationError> {
    let p = Profile::new(r, g, mu);
    if !p.is_admissible() {
        return Ok(0);
    }
    let d = p.degree();
    let s = p.s().expect("admissible");
    if d > FACTORIZATION_CAP.0 || s > FACTORIZATION_CAP.1 {
        return Err(FactorizationError::TooLarge { d, s });
    }
    let d = d as usize;
    let mut target: Vec<usize> = mu.iter().map(|&m| m as usize).collect();
    target.sort_unstable();
    let mut search = Search {
        d,
        target: target.clone(),
        count: 0,
    };
    for mut sigma in uniform_cycle_permutations(d, r as usize) {
        let mut parent: Vec<usize> = (0..d).collect();
        for x in 0..d {
            let (a, b) = (find(&mut parent, x), find(&mut parent, sigma[x]));
            parent[a] = b;
        }
        search.run(&mut sigma, d / r as usize, &parent, s as usize);
    }
    let mut weight = 1u64;
    let mut k = 0;
    while k < target.len() {
        let run = target[k..].iter().take_while(|&&m| m == target[k]).count();
        weight *= (1..=run as u64).product::<u64>();
        k += run;
    }
    Ok(search.count * weight)
}

/// `N / (d! · s!)` for the weighted tuple count `N`.
pub fn factorization_count(r: u32, g: i64, mu: &[u32]) -> Result<Rational, FactorizationError> {
    let n = factorization_tuples(r, g, mu)?;
    if n == 0 {
        return Ok(Rational::zero());
    }
    let p = Profile::new(r, g, mu);
    let s = p.s().expect("admissible") as u32;
    Ok(int(n as i64) / (factorial(p.degree()) * factorial(s)))
}
