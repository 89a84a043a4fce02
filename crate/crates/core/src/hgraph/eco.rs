use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::{DotRef, HgraphError, HurwitzGraph};
use crate::cellgraph::{CellGraph, Dart, Edge, NONE};

/// Outcome of contracting a loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eco2 {
    Connected(HurwitzGraph),
    /// The two pieces of a separating loop, with their labels in the
    /// contracted graph.
    Split([(Vec<usize>, HurwitzGraph); 2]),
}

/// Dots carried over to a contracted graph, and where each old dot went.
struct Transfer {
    dots: Vec<u32>,
    bare: Vec<u32>,
    image: BTreeMap<(Dart, u32), (usize, DotRef)>,
}

/// Moves the dots of `old` onto `new`, whose surviving darts keep their ids.
/// A new corner collects the old corners met between two surviving darts in
/// the old face walk; `bare` lists new vertices without edges with the old
/// face cycle that collapses onto each.
fn transfer(old: &HurwitzGraph, new: &CellGraph, bare: &[(usize, Vec<Dart>)]) -> Transfer {
    let g = &old.base;
    let mut t = Transfer {
        dots: vec![0; new.dart_bound() as usize],
        bare: vec![0; new.vertex_count()],
        image: BTreeMap::new(),
    };
    let absorb = |t: &mut Transfer, v: usize, target: DotRef, sources: &[Dart]| {
        let mut k = 0;
        for &y in sources {
            for idx in 0..old.dots[y as usize] {
                t.image.insert((y, idx), (v, DotRef { corner: target.corner, index: k }));
                k += 1;
            }
        }
        if target.corner == NONE {
            t.bare[v] = k;
        } else {
            t.dots[target.corner as usize] = k;
        }
    };
    for c in new.darts() {
        let x = new.iota(new.sigma_inv(c));
        let mut walk = Vec::new();
        let mut y = g.phi(x);
        loop {
            walk.push(y);
            if y == c {
                break;
            }
            debug_assert!(!new.contains(y));
            y = g.phi(y);
        }
        absorb(&mut t, new.vertex_of(c), DotRef { corner: c, index: 0 }, &walk);
    }
    for (v, cycle) in bare {
        absorb(&mut t, *v, DotRef { corner: NONE, index: 0 }, cycle);
    }
    t
}

fn face_walk(g: &CellGraph, from: Dart) -> Vec<Dart> {
    let mut cycle = vec![from];
    let mut y = g.phi(from);
    while y != from {
        cycle.push(y);
        y = g.phi(y);
    }
    cycle
}

impl HurwitzGraph {
    /// The last dot of corner `pre`, else the first dot among `corners`.
    fn pick(&self, pre: Dart, corners: impl IntoIterator<Item = Dart>) -> Option<(Dart, u32)> {
        let n = self.dots[pre as usize];
        if n > 0 {
            return Some((pre, n - 1));
        }
        corners.into_iter().find(|&c| self.dots[c as usize] > 0).map(|c| (c, 0))
    }

    fn rebuild(&self, new: CellGraph, t: Transfer, skip: &[usize], placed: &[(usize, (Dart, u32))]) -> HurwitzGraph {
        let mut arrows = vec![None; new.vertex_count()];
        for (v, a) in self.arrows.iter().enumerate() {
            if let (false, Some(a)) = (skip.contains(&v), a) {
                let (nv, r) = t.image[&(a.corner, a.index)];
                arrows[nv] = Some(r);
            }
        }
        for &(v, key) in placed {
            let (nv, r) = t.image[&key];
            debug_assert_eq!(nv, v);
            arrows[nv] = Some(r);
        }
        HurwitzGraph {
            r: self.r,
            base: new,
            dots: t.dots,
            bare: t.bare,
            arrows,
        }
    }

    /// Contracts a straight edge from `i` to `j > i`. Dots at `i` and `j`
    /// merge in face order; the new arrow marks the last dot of `i`'s corner
    /// on the face left of `i → j`, or failing that the first dot met
    /// turning counter-clockwise around `i` from the edge.
    pub fn eco1(&self, e: Edge) -> Result<HurwitzGraph, HgraphError> {
        let g = &self.base;
        if !g.has_edge(e) {
            return Err(crate::cellgraph::GraphError::NoSuchEdge(e.0).into());
        }
        if g.is_loop(e) {
            return Err(HgraphError::WrongEdgeKind(e.0));
        }
        let (mut h, mut h2) = (e.0, g.iota(e.0));
        if g.vertex_of(h) > g.vertex_of(h2) {
            core::mem::swap(&mut h, &mut h2);
        }
        let (i, j) = (g.vertex_of(h), g.vertex_of(h2));
        let new = g.contract_edge(e)?;
        let bare = if new.degree(i) == 0 { vec![(i, face_walk(g, h))] } else { vec![] };
        let t = transfer(self, &new, &bare);
        let around = (1..g.degree(i)).map(|k| g.rotation(i)[(g.slot_of(h) + k) % g.degree(i)]);
        let key = self.pick(h, around).ok_or(HgraphError::EmptySide(i))?;
        Ok(self.rebuild(new, t, &[i, j], &[(i, key)]))
    }

    /// Contracts a loop at `i`. The side holding the old arrow keeps label
    /// `i` and the other becomes `i + 1`; each side gets an arrow on the last
    /// dot before the cut, or failing that on its first dot counter-clockwise
    /// from the loop.
    pub fn eco2(&self, e: Edge) -> Result<Eco2, HgraphError> {
        let g = &self.base;
        if !g.has_edge(e) {
            return Err(crate::cellgraph::GraphError::NoSuchEdge(e.0).into());
        }
        if !g.is_loop(e) {
            return Err(HgraphError::WrongEdgeKind(e.0));
        }
        let i = g.vertex_of(e.0);
        let deg = g.degree(i);
        // corners after `keep` up to the other dart, then the other dart itself
        let arc = |keep: Dart| -> (Vec<Dart>, Dart) {
            let other = g.iota(keep);
            let mut inner = Vec::new();
            let mut c = g.sigma(keep);
            while c != other {
                inner.push(c);
                c = g.sigma(c);
            }
            (inner, other)
        };
        let keep = match self.arrows[i] {
            Some(a) => {
                let (inner, other) = arc(e.0);
                if a.corner == other || inner.contains(&a.corner) {
                    e.0
                } else {
                    g.iota(e.0)
                }
            }
            None => e.0,
        };
        let other = g.iota(keep);
        let lc = g.contract_loop_keeping(e, keep)?;
        let (a, b) = (lc.vertex, lc.new_vertex);
        let mut bare = Vec::new();
        if lc.graph.degree(a) == 0 {
            bare.push((a, face_walk(g, other)));
        }
        if lc.graph.degree(b) == 0 {
            bare.push((b, face_walk(g, keep)));
        }
        let t = transfer(self, &lc.graph, &bare);
        let (inner_a, _) = arc(keep);
        let (inner_b, _) = arc(other);
        let key_a = self.pick(other, inner_a).ok_or(HgraphError::EmptySide(a))?;
        let key_b = self.pick(keep, inner_b).ok_or(HgraphError::EmptySide(b))?;
        debug_assert!(deg >= 2);
        let out = self.rebuild(lc.graph, t, &[i], &[(a, key_a), (b, key_b)]);
        if lc.separating {
            let mut parts = out.split_components();
            let second = parts.pop().expect("two pieces");
            let first = parts.pop().expect("two pieces");
            Ok(Eco2::Split([first, second]))
        } else {
            Ok(Eco2::Connected(out))
        }
    }

    /// Either operation; the result as connected pieces with their labels.
    pub fn eco(&self, e: Edge) -> Result<Vec<(Vec<usize>, HurwitzGraph)>, HgraphError> {
        if self.base.has_edge(e) && self.base.is_loop(e) {
            match self.eco2(e)? {
                Eco2::Connected(h) => {
                    let n = h.base.vertex_count();
                    Ok(vec![((0..n).collect(), h)])
                }
                Eco2::Split(parts) => Ok(parts.into_iter().collect()),
            }
        } else {
            let h = self.eco1(e)?;
            let n = h.base.vertex_count();
            Ok(vec![((0..n).collect(), h)])
        }
    }
}

/// Every arrowed graph whose new vertex `j > i` splits off vertex `i` of
/// `h` carrying `mu_j` dots, such that `eco1` along the new edge gives back
/// `h` up to isomorphism. One representative per isomorphism class.
pub fn eco1_preimages(h: &HurwitzGraph, i: usize, j: usize, mu_j: u32) -> Vec<HurwitzGraph> {
    let g = &h.base;
    let n = g.vertex_count();
    if i >= n || j <= i || j > n {
        return Vec::new();
    }
    let target = h.canonical_code();
    let (hd, hd2) = (g.dart_bound(), g.dart_bound() + 1);
    let rot = g.rotation(i).to_vec();
    let deg = rot.len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();

    let mut consider = |rot_i: Vec<Dart>, rot_j: Vec<Dart>, dots: Vec<u32>| {
        let mut rotations = g.rotations().to_vec();
        rotations[i] = rot_i;
        rotations.insert(j, rot_j);
        let mut iota: Vec<Dart> = (0..hd).map(|d| if g.contains(d) { g.iota(d) } else { NONE }).collect();
        iota.extend([hd2, hd]);
        let base = CellGraph::from_parts(rotations, iota);
        let mut arrows = h.arrows.clone();
        arrows[i] = None;
        arrows.insert(j, None);
        let cand = HurwitzGraph {
            r: h.r,
            base,
            dots,
            bare: vec![0; n + 1],
            arrows,
        };
        if cand.mu()[j] != mu_j || !cand.validate_dots().is_empty() {
            return;
        }
        for full in cand.all_arrowings() {
            let mut full = full;
            for v in (0..n + 1).filter(|&v| v != i && v != j) {
                full.arrows[v] = cand.arrows[v];
            }
            if full.eco1(Edge(hd)).is_ok_and(|x| x.canonical_code() == target) {
                let code = full.canonical_code();
                if seen.insert(code) {
                    out.push(full);
                }
            }
        }
    };

    let mut dots = h.dots.clone();
    dots.resize(hd as usize + 2, 0);
    if deg == 0 {
        let c = h.bare[i];
        for x in 0..=c {
            let mut d = dots.clone();
            d[hd as usize] = x;
            d[hd2 as usize] = c - x;
            consider(vec![hd], vec![hd2], d);
        }
        return out;
    }
    for start in 0..deg {
        for p in 0..=deg {
            let a: Vec<Dart> = (0..p).map(|k| rot[(start + k) % deg]).collect();
            let b: Vec<Dart> = (p..deg).map(|k| rot[(start + k) % deg]).collect();
            let rot_i: Vec<Dart> = core::iter::once(hd).chain(a.iter().copied()).collect();
            let rot_j: Vec<Dart> = core::iter::once(hd2).chain(b.iter().copied()).collect();
            // junction corners and the pieces each one splits into
            let mut junctions: Vec<(Dart, [Dart; 3], usize)> = Vec::new();
            match (a.first(), b.first()) {
                (Some(&a1), Some(&b1)) => {
                    junctions.push((b1, [hd, b1, NONE], 2));
                    junctions.push((a1, [hd2, a1, NONE], 2));
                }
                (None, Some(&b1)) => junctions.push((b1, [hd2, hd, b1], 3)),
                (Some(&a1), None) => junctions.push((a1, [hd, hd2, a1], 3)),
                (None, None) => unreachable!("vertex with darts"),
            }
            let mut fills: Vec<Vec<u32>> = vec![dots.clone()];
            for (src, parts, k) in junctions {
                let total = h.dots[src as usize];
                let mut next = Vec::new();
                for f in &fills {
                    for x in 0..=total {
                        let rest = total - x;
                        if k == 2 {
                            let mut d = f.clone();
                            d[parts[0] as usize] = x;
                            d[parts[1] as usize] = rest;
                            next.push(d);
                        } else {
                            for y in 0..=rest {
                                let mut d = f.clone();
                                d[parts[0] as usize] = x;
                                d[parts[1] as usize] = y;
                                d[parts[2] as usize] = rest - y;
                                next.push(d);
                            }
                        }
                    }
                }
                fills = next;
            }
            for d in fills {
                consider(rot_i.clone(), rot_j.clone(), d);
            }
        }
    }
    out
}
