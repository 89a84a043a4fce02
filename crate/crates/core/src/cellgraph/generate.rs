use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CellGraph, Dart, GraphError, NONE};

const RETRY_CAP: usize = 200_000;

/// Random connected graph with `edges` edges, optionally of genus `g` and
/// with `n` vertices. Darts are numbered `0..2E`.
pub fn random_graph(g: Option<u32>, n: Option<usize>, edges: usize, seed: u64) -> Result<CellGraph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let darts = 2 * edges;
    let feasible = |nv: usize| {
        nv >= 1
            && nv <= edges + 1
            && g.is_none_or(|g| (2 + edges) as i64 - nv as i64 - 2 * g as i64 >= 1)
    };
    match n {
        Some(nv) if !feasible(nv) => return Err(GraphError::Unsatisfiable),
        None if !(1..=edges + 1).any(feasible) => return Err(GraphError::Unsatisfiable),
        _ => {}
    }
    if edges == 0 {
        return Ok(CellGraph::bare_vertex());
    }
    for _ in 0..RETRY_CAP {
        let nv = n.unwrap_or_else(|| rng.random_range(1..=edges + 1));
        if !feasible(nv) {
            continue;
        }
        let mut order: Vec<Dart> = (0..darts as Dart).collect();
        order.shuffle(&mut rng);
        let mut cuts: Vec<usize> = (1..darts).collect();
        cuts.shuffle(&mut rng);
        let mut cuts: Vec<usize> = cuts[..nv - 1].to_vec();
        cuts.sort_unstable();
        cuts.insert(0, 0);
        cuts.push(darts);
        let rotations: Vec<Vec<Dart>> = cuts.windows(2).map(|w| order[w[0]..w[1]].to_vec()).collect();

        let mut pairing: Vec<Dart> = (0..darts as Dart).collect();
        pairing.shuffle(&mut rng);
        let mut iota = vec![NONE; darts];
        for p in pairing.chunks(2) {
            iota[p[0] as usize] = p[1];
            iota[p[1] as usize] = p[0];
        }
        let graph = CellGraph::from_parts(rotations, iota);
        if !graph.is_connected() {
            continue;
        }
        if let Some(g) = g {
            if graph.graph_type()?.g != g {
                continue;
            }
        }
        return Ok(graph);
    }
    Err(GraphError::Unsatisfiable)
}

fn for_each_matching(free: &mut Vec<Dart>, iota: &mut Vec<Dart>, f: &mut dyn FnMut(&[Dart])) {
    let Some(&a) = free.first() else {
        f(iota);
        return;
    };
    for k in 1..free.len() {
        let b = free[k];
        iota[a as usize] = b;
        iota[b as usize] = a;
        let mut rest: Vec<Dart> = free.iter().copied().filter(|&x| x != a && x != b).collect();
        for_each_matching(&mut rest, iota, f);
    }
}

fn for_each_composition(total: usize, parts: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(left: usize, parts: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if parts == 1 {
            if left >= 1 {
                acc.push(left);
                f(acc);
                acc.pop();
            }
            return;
        }
        for first in 1..left.saturating_sub(parts - 2) {
            acc.push(first);
            go(left - first, parts - 1, acc, f);
            acc.pop();
        }
    }
    go(total, parts, &mut Vec::new(), f);
}

/// All connected graphs with exactly `edges` edges, one canonical
/// representative per isomorphism class, ordered by canonical code.
pub fn enumerate_graphs_with_edges(edges: usize) -> Vec<CellGraph> {
    if edges == 0 {
        return vec![CellGraph::bare_vertex()];
    }
    let darts = 2 * edges;
    let mut found: BTreeMap<Vec<u32>, CellGraph> = BTreeMap::new();
    for n in 1..=edges + 1 {
        for_each_composition(darts, n, &mut |sizes| {
            let mut rotations = Vec::with_capacity(n);
            let mut next = 0 as Dart;
            for &s in sizes {
                rotations.push((next..next + s as Dart).collect::<Vec<_>>());
                next += s as Dart;
            }
            let mut free: Vec<Dart> = (0..darts as Dart).collect();
            let mut iota = vec![NONE; darts];
            for_each_matching(&mut free, &mut iota, &mut |iota| {
                let g = CellGraph::from_parts(rotations.clone(), iota.to_vec());
                if g.is_connected() {
                    let code = g.canonical_code();
                    found.entry(code).or_insert_with(|| g.canonical_form().graph);
                }
            });
        });
    }
    found.into_values().collect()
}

/// All connected graphs with at most `max_edges` edges, by edge count.
pub fn enumerate_graphs(max_edges: usize) -> Vec<CellGraph> {
    (0..=max_edges).flat_map(enumerate_graphs_with_edges).collect()
}
