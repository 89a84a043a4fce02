use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exactmath::{int, Rational};

/// A ramification profile `(r, g, μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    pub r: u32,
    pub g: i64,
    pub mu: Vec<u32>,
}

impl Profile {
    pub fn new(r: u32, g: i64, mu: &[u32]) -> Self {
        Profile { r, g, mu: mu.to_vec() }
    }

    pub fn degree(&self) -> u32 {
        self.mu.iter().sum()
    }

    /// `s = 2g - 2 + d/r + n` when `r | d`.
    pub fn s(&self) -> Option<i64> {
        let d = self.degree();
        if self.r == 0 || d % self.r != 0 {
            return None;
        }
        Some(2 * self.g - 2 + (d / self.r) as i64 + self.mu.len() as i64)
    }

    /// `r | d`, `g ≥ 0`, `n ≥ 1`, all parts positive and `s ≥ 0`.
    pub fn is_admissible(&self) -> bool {
        self.g >= 0 && !self.mu.is_empty() && self.mu.iter().all(|&m| m >= 1) && self.s().is_some_and(|s| s >= 0)
    }
}

/// Memo table of `𝓗ʳ` for one `r`.
///
/// With `canonical` set, entries are keyed by the sorted profile; otherwise
/// the recursion runs on ordered profiles.
#[derive(Clone, Debug)]
pub struct HurwitzTable {
    r: u32,
    canonical: bool,
    memo: BTreeMap<(i64, Vec<u32>), Rational>,
}

impl HurwitzTable {
    pub fn new(r: u32) -> Self {
        HurwitzTable {
            r,
            canonical: true,
            memo: BTreeMap::new(),
        }
    }

    /// A table whose recursion never reorders `μ`.
    pub fn ordered(r: u32) -> Self {
        HurwitzTable {
            canonical: false,
            ..Self::new(r)
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `𝓗ʳ_{g,n}(μ)`, zero on inadmissible input.
    pub fn get(&mut self, g: i64, mu: &[u32]) -> Rational {
        let p = Profile { r: self.r, g, mu: mu.to_vec() };
        if !p.is_admissible() {
            return Rational::zero();
        }
        let s = p.s().expect("admissible");
        if s == 0 {
            // only (0, 1, [r])
            return int(1);
        }
        let mut key = mu.to_vec();
        if self.canonical {
            key.sort_unstable();
        }
        if let Some(v) = self.memo.get(&(g, key.clone())) {
            return v.clone();
        }
        let value = self.recurse(g, &key) / int(s);
        self.memo.insert((g, key), value.clone());
        value
    }

    /// Right-hand side of the edge-contraction formula.
    fn recurse(&mut self, g: i64, mu: &[u32]) -> Rational {
        let n = mu.len();
        let mut total = Rational::zero();
        for i in 0..n {
            for j in i + 1..n {
                let mut joined = mu.to_vec();
                joined[i] = mu[i] + mu[j];
                joined.remove(j);
                let v = self.get(g, &joined);
                if !v.is_zero() {
                    total += v * int(i64::from(mu[i]) * i64::from(mu[j]));
                }
            }
        }
        let mut cut = Rational::zero();
        for i in 0..n {
            let rest: Vec<u32> = mu.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, &m)| m).collect();
            let mut inner = Rational::zero();
            for alpha in 1..mu[i] {
                let beta = mu[i] - alpha;
                let mut handle = alloc::vec![alpha, beta];
                handle.extend(&rest);
                inner += self.get(g - 1, &handle);
                for mask in 0u32..(1 << rest.len()) {
                    let mut left = alloc::vec![alpha];
                    let mut right = alloc::vec![beta];
                    for (k, &m) in rest.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            left.push(m);
                        } else {
                            right.push(m);
                        }
                    }
                    for g1 in 0..=g {
                        let a = self.get(g1, &left);
                        if a.is_zero() {
                            continue;
                        }
                        inner += a * self.get(g - g1, &right);
                    }
                }
            }
            cut += inner * int(i64::from(mu[i]));
        }
        total + cut / int(2)
    }

    /// `Hʳ_{g,n}(μ) = 𝓗ʳ_{g,n}(μ) / (μ₁ ⋯ μ_n)`.
    pub fn h(&mut self, g: i64, mu: &[u32]) -> Rational {
        let prod: i64 = mu.iter().map(|&m| i64::from(m.max(1))).product();
        self.get(g, mu) / int(prod)
    }
}

/// `𝓗ʳ_{g,n}(μ)` with a fresh table.
pub fn calh(r: u32, g: i64, mu: &[u32]) -> Rational {
    HurwitzTable::new(r).get(g, mu)
}

/// `Hʳ_{g,n}(μ)` with a fresh table.
pub fn hurwitz_h(r: u32, g: i64, mu: &[u32]) -> Rational {
    HurwitzTable::new(r).h(g, mu)
}

/// Partitions of `d` into non-increasing positive parts, in lexicographic order.
pub fn partitions(d: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for part in 1..=max.min(left) {
            acc.push(part);
            go(left - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        go(d, d, &mut Vec::new(), &mut out);
    }
    out
}
