use alloc::vec;
use alloc::vec::Vec;

use super::shapes::*;
use super::*;

fn ty(g: &CellGraph) -> (u32, u32, u32) {
    let t = g.graph_type().unwrap();
    (t.g, t.n, t.faces)
}

fn permutations(items: &[Dart]) -> Vec<Vec<Dart>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Counts label-preserving dart bijections commuting with σ and ι.
fn brute_force_automorphisms(g: &CellGraph) -> u64 {
    let darts: Vec<Dart> = g.darts().collect();
    let mut count = 0;
    for image in permutations(&darts) {
        let mut pi = vec![NONE; g.dart_bound() as usize];
        for (d, i) in darts.iter().zip(&image) {
            pi[*d as usize] = *i;
        }
        let ok = darts.iter().all(|&d| {
            let p = pi[d as usize];
            g.vertex_of(p) == g.vertex_of(d)
                && pi[g.sigma(d) as usize] == g.sigma(p)
                && pi[g.iota(d) as usize] == g.iota(p)
        });
        if ok {
            count += 1;
        }
    }
    count
}

#[test]
fn types_of_small_graphs() {
    assert_eq!(ty(&CellGraph::bare_vertex()), (0, 1, 1));
    assert_eq!(ty(&one_loop()), (0, 1, 2));
    assert_eq!(ty(&interleaved_loops()), (1, 1, 1));
    assert_eq!(ty(&theta()), (0, 2, 3));
    assert_eq!(ty(&path(3)), (0, 3, 1));
    assert_eq!(ty(&dumbbell()), (0, 2, 3));
    assert_eq!(ty(&cycle(3)), (0, 3, 2));
    assert_eq!(
        CellGraph::bare_vertices(2).graph_type(),
        Err(GraphError::Disconnected)
    );
}

#[test]
fn validation_errors() {
    assert_eq!(CellGraph::new(vec![], &[]), Err(GraphError::NoVertices));
    assert_eq!(CellGraph::new(vec![vec![0, 1]], &[(0, 0)]), Err(GraphError::BadDart(0)));
    assert_eq!(CellGraph::new(vec![vec![0, 0]], &[(0, 1)]), Err(GraphError::DuplicateDart(0)));
    assert_eq!(CellGraph::new(vec![vec![0, 1, 2]], &[(0, 1)]), Err(GraphError::UnpairedDart(2)));
    assert_eq!(CellGraph::new(vec![vec![0]], &[(0, 1)]), Err(GraphError::UnplacedDart(1)));
    assert_eq!(
        CellGraph::new(vec![vec![0, 1, 2, 3]], &[(0, 1), (1, 2)]),
        Err(GraphError::DuplicateDart(1))
    );
}

#[test]
fn edge_contraction_examples() {
    let g = path(2).contract_edge(Edge(0)).unwrap();
    assert_eq!(g, CellGraph::bare_vertex());

    let p = path(3);
    for e in p.edges() {
        let c = p.contract_edge(e).unwrap();
        assert!(c.is_isomorphic(&path(2)));
        assert_eq!(ty(&c), (0, 2, 1));
    }

    let t = theta().contract_edge(Edge(0)).unwrap();
    assert_eq!(t.vertex_count(), 1);
    assert_eq!(t.edges().iter().filter(|e| t.is_loop(**e)).count(), 2);
    assert_eq!(ty(&t), (0, 1, 3));

    assert_eq!(one_loop().contract_edge(Edge(0)), Err(GraphError::IsLoop(0)));
    assert_eq!(path(2).contract_edge(Edge(7)), Err(GraphError::NoSuchEdge(7)));
}

#[test]
fn merged_rotation_order() {
    // rotations (h, a1, a2) at 0 and (h', b1) at 1
    let g = CellGraph::new(vec![vec![0, 1, 2], vec![3, 4], vec![5], vec![6], vec![7]], &[(0, 3), (1, 5), (2, 6), (4, 7)])
        .unwrap();
    let c = g.contract_edge(Edge(0)).unwrap();
    assert_eq!(c.rotation(0), &[1, 2, 4]);
    assert_eq!(c.vertex_count(), 4);
    assert_eq!(c.vertex_of(7), 3);
}

#[test]
fn loop_contraction_examples() {
    let c = one_loop().contract_loop(Edge(0)).unwrap();
    assert!(c.separating);
    assert_eq!(c.graph, CellGraph::bare_vertices(2));
    assert_eq!(c.graph.component_types().len(), 2);

    let i = interleaved_loops();
    for e in i.edges() {
        let c = i.contract_loop(e).unwrap();
        assert!(!c.separating);
        assert_eq!(ty(&c.graph), (0, 2, 1));
    }

    let d = dumbbell();
    let c = d.contract_loop(Edge(0)).unwrap();
    assert!(c.separating);
    let types = c.graph.component_types();
    assert_eq!(types.iter().map(|t| t.g).sum::<u32>(), 0);

    assert_eq!(path(2).contract_loop(Edge(0)), Err(GraphError::NotALoop(0)));
}

#[test]
fn loop_split_sides() {
    // rotation (h, a, h', b) with loop (h, h')
    let g = CellGraph::new(vec![vec![0, 1, 2, 3], vec![4], vec![5]], &[(0, 2), (1, 4), (3, 5)]).unwrap();
    let c = g.contract_loop(Edge(0)).unwrap();
    assert_eq!(c.graph.rotation(0), &[1]);
    assert_eq!(c.graph.rotation(1), &[3]);
    assert_eq!(c.graph.vertex_of(4), 2);
    let c = g.contract_loop_keeping(Edge(0), 2).unwrap();
    assert_eq!(c.graph.rotation(0), &[3]);
    assert_eq!(c.graph.rotation(1), &[1]);
}

#[test]
fn euler_bookkeeping_on_enumerated_graphs() {
    for g in enumerate_graphs(4) {
        let m = g.complexity();
        let (v, e, f) = (g.vertex_count() as i64, g.edge_count() as i64, g.face_count() as i64);
        for edge in g.edges() {
            let c = g.contract(edge).unwrap();
            let (v2, e2, f2) = (c.vertex_count() as i64, c.edge_count() as i64, c.face_count() as i64);
            let dv = if g.is_loop(edge) { 1 } else { -1 };
            assert_eq!((v2 - v, e2 - e, f2 - f), (dv, -1, 0));
            assert_eq!(c.complexity(), m - 1);
        }
    }
}

#[test]
fn automorphism_examples() {
    assert_eq!(bigon().automorphism_count(), 2);
    assert_eq!(CellGraph::bare_vertex().automorphism_count(), 1);
    assert_eq!(one_loop().automorphism_count(), 2);
    assert_eq!(interleaved_loops().automorphism_count(), 4);
    assert_eq!(path(3).automorphism_count(), 1);
    assert_eq!(theta().automorphism_count(), 3);
}

#[test]
fn automorphisms_match_brute_force() {
    for g in enumerate_graphs(3) {
        assert_eq!(g.automorphism_count(), brute_force_automorphisms(&g), "{g:?}");
    }
}

#[test]
fn canonical_form_is_invariant() {
    for (k, g) in enumerate_graphs(3).into_iter().enumerate() {
        // rename darts by a shift and reversal
        let bound = g.dart_bound();
        let map: Vec<Dart> = (0..bound).map(|d| 3 * (bound - d) + k as Dart).collect();
        let h = g.map_darts(&map);
        assert_eq!(g.canonical_form().graph, h.canonical_form().graph);
        assert!(g.is_isomorphic(&h));
        assert!(g.automorphism_generators().len() as u64 <= g.automorphism_count());
    }
}

#[test]
fn labels_matter_for_isomorphism() {
    // a pendant edge at vertex 0 versus at vertex 1
    let a = CellGraph::new(vec![vec![0, 1, 2], vec![3]], &[(0, 1), (2, 3)]).unwrap();
    let b = a.permute_labels(&[1, 0]).unwrap();
    assert!(!a.is_isomorphic(&b));
    assert!(a.is_isomorphic(&b.permute_labels(&[1, 0]).unwrap()));
}

#[test]
fn enumeration_counts() {
    let one = enumerate_graphs(1);
    assert_eq!(one.len(), 3);
    assert!(one.iter().any(|g| g.is_isomorphic(&CellGraph::bare_vertex())));
    assert!(one.iter().any(|g| g.is_isomorphic(&one_loop())));
    assert!(one.iter().any(|g| g.is_isomorphic(&path(2))));
    for g in enumerate_graphs(3) {
        assert!(g.is_connected());
    }
}

#[test]
fn random_graphs() {
    assert_eq!(random_graph(None, Some(1), 0, 7).unwrap(), CellGraph::bare_vertex());
    for seed in 0..20 {
        let g = random_graph(Some(1), Some(1), 2, seed).unwrap();
        assert!(g.is_isomorphic(&interleaved_loops()));
        let h = random_graph(None, None, 5, seed).unwrap();
        assert!(h.is_connected());
        assert_eq!(h.edge_count(), 5);
        assert_eq!(h, random_graph(None, None, 5, seed).unwrap());
    }
    assert_eq!(random_graph(Some(3), Some(1), 2, 0), Err(GraphError::Unsatisfiable));
    assert_eq!(random_graph(None, Some(5), 2, 0), Err(GraphError::Unsatisfiable));
}

#[test]
fn connected_sum_path_and_triangle() {
    let s = path(3).connected_sum(1, &cycle(3), 0, 0).unwrap();
    assert_eq!(ty(&s), (0, 4, 1));
    assert_eq!(s.edge_count(), 3);
    let mut degrees: Vec<usize> = (0..4).map(|v| s.degree(v)).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, [1, 1, 2, 2]);
}

#[test]
fn connected_sum_errors() {
    assert_eq!(
        path(3).connected_sum(1, &theta(), 0, 0),
        Err(GraphError::DegreeMismatch(2, 3))
    );
    assert!(CellGraph::bare_vertex().connected_sum(0, &CellGraph::bare_vertex(), 0, 0).is_err());
    assert_eq!(
        dumbbell().connected_sum(0, &dumbbell(), 0, 0),
        Err(GraphError::SumEdgesNotDistinct)
    );
    // four parallel edges on a torus: fewer than four faces around a vertex
    let torus = CellGraph::new(vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]], &[(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
    assert!(torus.face_cycles().len() < 4);
    assert_eq!(
        interleaved_loops().connected_sum(0, &torus, 0, 0),
        Err(GraphError::SumFacesNotDistinct)
    );
}

#[test]
fn hom_examples() {
    let p3 = path(3);
    let h = hom_set(&p3, &path(2)).unwrap();
    assert_eq!(h.len(), 2);
    assert_eq!(h[0].representative, vec![Edge(0)]);
    assert_eq!(h[1].representative, vec![Edge(2)]);

    let h = hom_set(&p3, &CellGraph::bare_vertex()).unwrap();
    assert_eq!(h.len(), 1);
    assert_eq!(h[0].representative, vec![Edge(0), Edge(2)]);
    assert_eq!(h[0].words, 2);

    let h = hom_set(&bigon(), &one_loop()).unwrap();
    assert_eq!(h.len(), 1);
    assert_eq!(h[0].representative, vec![Edge(0)]);

    let h = hom_set(&bigon(), &CellGraph::bare_vertices(2)).unwrap();
    assert_eq!(h.len(), 1);
    assert_eq!(h[0].representative, vec![Edge(0), Edge(1)]);
}

#[test]
fn hom_identity_and_caps() {
    for g in enumerate_graphs(2) {
        let h = hom_set(&g, &g).unwrap();
        assert_eq!(h.len(), 1);
        assert!(h[0].representative.is_empty());
    }
    assert!(hom_set(&path(2), &path(3)).unwrap().is_empty());
    assert!(matches!(
        hom_set_capped(&path(5), &path(2), 3),
        Err(GraphError::TooLarge { .. })
    ));
}

#[test]
fn pair_kinds() {
    let p = path(3);
    assert_eq!(classify_pair(&p, Edge(0), Edge(2)), PairKind::SharedVertex);
    assert_eq!(classify_pair(&bigon(), Edge(0), Edge(1)), PairKind::Parallel);
    assert_eq!(classify_pair(&interleaved_loops(), Edge(0), Edge(1)), PairKind::TwoLoops);
    let d = dumbbell();
    assert_eq!(classify_pair(&d, Edge(0), Edge(4)), PairKind::LoopAndEdge);
    assert_eq!(classify_pair(&d, Edge(0), Edge(2)), PairKind::Disjoint);
}
