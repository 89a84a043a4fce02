use edgecontract_core::cellgraph::{classify_pair, enumerate_graphs, random_graph, shapes, CellGraph, Edge, PairKind};
use edgecontract_core::frobenius::{center_of_group_algebra, symmetric_group_generators};
use edgecontract_core::tqft::{evaluate, random_element, Strategy};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn euler_ok(g: &CellGraph) -> bool {
    g.split_components().iter().all(|(_, c)| {
        let t = c.graph_type().unwrap();
        let chi = c.vertex_count() as i64 - c.edge_count() as i64 + c.face_count() as i64;
        chi == 2 - 2 * t.g as i64 && t.n as usize == c.vertex_count() && t.faces as usize == c.face_count()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn contraction_keeps_euler_bookkeeping(edges in 1usize..7, seed in any::<u64>()) {
        let g = random_graph(None, None, edges, seed).unwrap();
        prop_assert!(g.is_connected());
        prop_assert!(euler_ok(&g));
        let before = g.graph_type().unwrap();
        for e in g.edges() {
            let h = g.contract(e).unwrap();
            prop_assert_eq!(h.edge_count(), g.edge_count() - 1);
            prop_assert!(euler_ok(&h));
            // complexity is additive over the pieces
            let after: i64 = h.component_types().iter().map(|t| t.complexity()).sum();
            prop_assert_eq!(after, before.complexity() - 1);
        }
    }

    #[test]
    fn relabeling_preserves_the_class(edges in 1usize..6, seed in any::<u64>(), rot in 0usize..8) {
        let g = random_graph(None, None, edges, seed).unwrap();
        let n = g.vertex_count();
        // vertex 0 stays put; others are cycled
        let perm: Vec<usize> = (0..n).map(|v| if v == 0 || n < 2 { v } else { 1 + (v - 1 + rot) % (n - 1) }).collect();
        let h = g.permute_labels(&perm).unwrap();
        prop_assert_eq!(h.graph_type().unwrap(), g.graph_type().unwrap());
        prop_assert_eq!(h.automorphism_count(), g.automorphism_count());
        prop_assert_eq!(h.compact().canonical_code(), h.canonical_code());
        prop_assert!(g.compact().is_isomorphic(&g));
    }

    #[test]
    fn splitting_the_contracted_vertex_round_trips(edges in 1usize..6, seed in any::<u64>()) {
        let g = random_graph(None, None, edges, seed).unwrap().compact();
        let p = g.vertex_count() - 1;
        let d = g.degree(p);
        prop_assume!(d > 0);
        for shift in 0..d {
            for a in 0..=d {
                let piece = shapes::splitting_piece(d, a);
                let sum = g.connected_sum(p, &piece, 0, shift).unwrap();
                prop_assert_eq!(sum.edge_count(), g.edge_count() + 1);
                let back = sum.contract_edge(Edge(g.dart_bound() + 2 * d as u32)).unwrap();
                prop_assert!(back.is_isomorphic(&g), "shift {} split {}", shift, a);
            }
        }
    }
}

#[test]
fn contractions_commute() {
    let (mut labeled, mut relabeled) = (0, 0);
    for g in enumerate_graphs(5) {
        let edges = g.edges();
        for (k, &e1) in edges.iter().enumerate() {
            for &e2 in &edges[k + 1..] {
                let (after1, after2) = (g.contract(e1).unwrap(), g.contract(e2).unwrap());
                let one = after1.contract(e2).unwrap();
                let two = after2.contract(e1).unwrap();
                if after1.is_loop(e2) || after2.is_loop(e1) {
                    // a loop contraction picks which side keeps its label, so only the shape is order-free
                    assert_eq!(one.shape_code(), two.shape_code(), "{g:?} {e1:?} {e2:?}");
                    relabeled += 1;
                } else {
                    assert_eq!(one.canonical_code(), two.canonical_code(), "{g:?} {e1:?} {e2:?}");
                    labeled += 1;
                }
                let kind = classify_pair(&g, e1, e2);
                assert_eq!(kind == PairKind::TwoLoops, g.is_loop(e1) && g.is_loop(e2) && g.endpoints(e1).0 == g.endpoints(e2).0);
            }
        }
    }
    assert!(labeled > 500 && relabeled > 500, "{labeled} {relabeled}");
}

#[test]
fn shape_code_forgets_labels() {
    let g = shapes::path(4);
    let h = g.permute_labels(&[2, 0, 3, 1]).unwrap();
    assert!(!g.is_isomorphic(&h));
    assert_eq!(g.shape_code(), h.shape_code());
    assert_ne!(g.shape_code(), shapes::cycle(4).shape_code());
}

/// Pairs `(graph, edge)` where deleting the edge removes a face of length at
/// most two: a loop bounding a disc, one side of a bigon, or one of two
/// homotopic loops.
fn removable(max_edges: usize) -> Vec<(CellGraph, Edge)> {
    let mut out = Vec::new();
    for g in enumerate_graphs(max_edges) {
        let faces = g.face_cycles();
        let face_of = |d: u32| faces.iter().position(|f| f.contains(&d)).unwrap();
        for e in g.edges() {
            let (f1, f2) = (face_of(e.0), face_of(g.iota(e.0)));
            if f1 != f2 && (faces[f1].len() <= 2 || faces[f2].len() <= 2) {
                out.push((g.clone(), e));
            }
        }
    }
    out
}

#[test]
fn removing_a_disc_bounding_edge_keeps_the_value() {
    let a = center_of_group_algebra(&symmetric_group_generators(3)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cases = removable(4);
    assert!(cases.iter().any(|(g, e)| g.is_loop(*e)));
    assert!(cases.iter().any(|(g, e)| !g.is_loop(*e)));
    for (g, e) in cases {
        let h = g.delete_edge(e).unwrap();
        assert!(h.is_connected());
        assert_eq!(h.graph_type().unwrap().g, g.graph_type().unwrap().g);
        let vs: Vec<_> = (0..g.vertex_count()).map(|_| random_element(&a, &mut rng)).collect();
        assert_eq!(
            evaluate(&h, &vs, Strategy::LeastEdge).unwrap(),
            evaluate(&g, &vs, Strategy::LeastEdge).unwrap()
        );
    }
}

#[test]
fn named_shapes_have_expected_types() {
    let cases = [
        (shapes::path(4), (0, 4, 1)),
        (shapes::cycle(3), (0, 3, 2)),
        (shapes::bigon(), (0, 2, 2)),
        (shapes::theta(), (0, 2, 3)),
        (shapes::one_loop(), (0, 1, 2)),
        (shapes::interleaved_loops(), (1, 1, 1)),
        (shapes::dumbbell(), (0, 2, 3)),
    ];
    for (g, (genus, n, faces)) in cases {
        let t = g.graph_type().unwrap();
        assert_eq!((t.g, t.n, t.faces), (genus, n, faces), "{g:?}");
    }
    for d in 1..5 {
        for a in 0..=d {
            let t = shapes::splitting_piece(d, a).graph_type().unwrap();
            assert_eq!((t.g, t.n), (0, 3));
        }
    }
}
