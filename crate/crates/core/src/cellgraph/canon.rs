use alloc::vec;
use alloc::vec::Vec;

use super::{CellGraph, Dart, NONE};

/// Canonical relabeling of a graph together with its automorphism count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph: CellGraph,
    pub automorphisms: u64,
}

pub(crate) struct Traversal {
    pub(crate) code: Vec<[u32; 3]>,
    pub(crate) order: Vec<Dart>,
}

impl CellGraph {
    /// Breadth-first numbering of the darts reachable from `root`, numbering
    /// from `base`. Each visited dart records its vertex and the new numbers
    /// of its `σ` and `ι` images.
    pub(crate) fn traverse(&self, root: Dart, base: u32) -> Traversal {
        let mut new = vec![NONE; self.dart_bound() as usize];
        let mut order = vec![root];
        new[root as usize] = base;
        let mut k = 0;
        while k < order.len() {
            let d = order[k];
            for nb in [self.sigma(d), self.iota(d)] {
                if new[nb as usize] == NONE {
                    new[nb as usize] = base + order.len() as u32;
                    order.push(nb);
                }
            }
            k += 1;
        }
        let code = order
            .iter()
            .map(|&d| {
                [
                    self.vertex_of(d) as u32,
                    new[self.sigma(d) as usize],
                    new[self.iota(d) as usize],
                ]
            })
            .collect();
        Traversal { code, order }
    }

    /// Per component: the least traversal and every root attaining it.
    fn best_traversals(&self) -> Vec<(Vec<usize>, Option<(Traversal, Vec<Traversal>)>)> {
        let mut base = 0;
        let mut out = Vec::new();
        for comp in self.components() {
            let start = comp[0];
            if self.degree(start) == 0 {
                out.push((comp, None));
                continue;
            }
            let mut ties: Vec<Traversal> = Vec::new();
            for &root in self.rotation(start) {
                let t = self.traverse(root, base);
                match ties.first().map(|b| t.code.cmp(&b.code)) {
                    None | Some(core::cmp::Ordering::Equal) => ties.push(t),
                    Some(core::cmp::Ordering::Less) => ties = vec![t],
                    _ => {}
                }
            }
            base += ties[0].order.len() as u32;
            let best = Traversal {
                code: ties[0].code.clone(),
                order: ties[0].order.clone(),
            };
            out.push((comp, Some((best, ties))));
        }
        out
    }

    /// A code equal for two graphs exactly when they are isomorphic by a
    /// label-preserving bijection of darts commuting with `σ` and `ι`.
    pub fn canonical_code(&self) -> Vec<u32> {
        let mut code = vec![self.vertex_count() as u32];
        for (comp, best) in self.best_traversals() {
            match best {
                None => code.extend([comp[0] as u32, NONE, NONE]),
                Some((t, _)) => code.extend(t.code.into_iter().flatten()),
            }
        }
        code
    }

    /// Like [`canonical_code`](Self::canonical_code) but ignoring vertex
    /// labels: equal exactly when the graphs agree up to relabeling.
    pub fn shape_code(&self) -> Vec<u32> {
        let mut parts: Vec<Vec<u32>> = Vec::new();
        for comp in self.components() {
            if self.degree(comp[0]) == 0 {
                parts.push(vec![NONE]);
                continue;
            }
            let best = comp
                .iter()
                .flat_map(|&v| self.rotation(v).iter().copied())
                .map(|root| {
                    let t = self.traverse(root, 0);
                    let mut seen: Vec<u32> = Vec::new();
                    t.code
                        .iter()
                        .flat_map(|&[v, s, i]| {
                            let k = match seen.iter().position(|&x| x == v) {
                                Some(k) => k,
                                None => {
                                    seen.push(v);
                                    seen.len() - 1
                                }
                            };
                            [k as u32, s, i]
                        })
                        .collect::<Vec<u32>>()
                })
                .min()
                .expect("component has darts");
            parts.push(best);
        }
        parts.sort();
        let mut code = vec![self.vertex_count() as u32];
        for p in parts {
            code.push(p.len() as u32);
            code.extend(p);
        }
        code
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let mut map = vec![NONE; self.dart_bound() as usize];
        let mut automorphisms = 1u64;
        for (_, best) in self.best_traversals() {
            if let Some((t, ties)) = best {
                let base = map.iter().filter(|&&x| x != NONE).count() as u32;
                for (k, &d) in t.order.iter().enumerate() {
                    map[d as usize] = base + k as u32;
                }
                automorphisms *= ties.len() as u64;
            }
        }
        CanonicalForm {
            graph: self.map_darts(&map),
            automorphisms,
        }
    }

    pub fn is_isomorphic(&self, other: &CellGraph) -> bool {
        self.canonical_code() == other.canonical_code()
    }

    pub fn automorphism_count(&self) -> u64 {
        self.canonical_form().automorphisms
    }

    /// Automorphisms acting on one component at a time (identity elsewhere),
    /// as tables indexed by dart id. Together they generate the
    /// automorphism group; the identity is included.
    pub fn automorphism_generators(&self) -> Vec<Vec<Dart>> {
        let identity: Vec<Dart> = (0..self.dart_bound()).collect();
        let mut out = vec![identity.clone()];
        for (_, best) in self.best_traversals() {
            if let Some((t, ties)) = best {
                for other in ties.iter().filter(|o| o.order != t.order) {
                    let mut map = identity.clone();
                    for (a, b) in t.order.iter().zip(&other.order) {
                        map[*a as usize] = *b;
                    }
                    out.push(map);
                }
            }
        }
        out
    }
}
