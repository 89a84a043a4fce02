use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::cellgraph::shapes::*;
use crate::cellgraph::{enumerate_graphs, CellGraph};
use crate::exactmath::int;
use crate::frobenius::{center_of_group_algebra, cyclic_group_generators, symmetric_group_generators};

fn algebras() -> Vec<Arc<FrobeniusAlgebra>> {
    vec![
        FrobeniusAlgebra::trivial(),
        FrobeniusAlgebra::dual_numbers(),
        center_of_group_algebra(&cyclic_group_generators(2)).unwrap(),
        center_of_group_algebra(&symmetric_group_generators(3)).unwrap(),
    ]
}

#[test]
fn bare_vertex_is_counit() {
    for a in algebras() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let v = random_element(&a, &mut rng);
        let got = evaluate(&CellGraph::bare_vertex(), &[v.clone()], Strategy::LeastEdge).unwrap();
        assert_eq!(got, v.counit());
        let got = evaluate(&one_loop(), &[v.clone()], Strategy::LeastEdge).unwrap();
        assert_eq!(got, v.counit());
    }
}

#[test]
fn torus_with_one_vertex() {
    let a = center_of_group_algebra(&cyclic_group_generators(2)).unwrap();
    let got = evaluate(&interleaved_loops(), &[a.unit()], Strategy::LeastEdge).unwrap();
    assert_eq!(got, int(2));
    assert_eq!(got, a.omega_closed(1, &[a.unit()]).unwrap());
}

#[test]
fn trivial_algebra_gives_one() {
    let a = FrobeniusAlgebra::trivial();
    for g in enumerate_graphs(3) {
        let vs = vec![a.unit(); g.vertex_count()];
        assert_eq!(evaluate(&g, &vs, Strategy::GreatestEdge).unwrap(), int(1));
    }
}

#[test]
fn slot_mismatch() {
    let a = FrobeniusAlgebra::trivial();
    assert_eq!(
        evaluate(&path(3), &[a.unit()], Strategy::LeastEdge),
        Err(TqftError::SlotMismatch { vertices: 3, slots: 1 })
    );
    let b = FrobeniusAlgebra::dual_numbers();
    assert!(matches!(
        evaluate(&path(2), &[a.unit(), b.unit()], Strategy::LeastEdge),
        Err(TqftError::Algebra(_))
    ));
}

#[test]
fn independence_on_small_graphs() {
    for a in algebras() {
        for (k, g) in enumerate_graphs(3).iter().enumerate() {
            verify_independence(g, &a, 2, k as u64).unwrap();
        }
    }
}

#[test]
fn seeded_strategy_is_deterministic() {
    let g = dumbbell();
    let s = Strategy::Seeded(42);
    assert_eq!(s.pick(&g), s.pick(&g));
    assert_eq!(Strategy::LoopsFirst.pick(&path(3)), Some(crate::cellgraph::Edge(0)));
    assert_eq!(Strategy::Seeded(3).pick(&CellGraph::bare_vertex()), None);
}

#[test]
fn preferred_edges_go_first() {
    let g = dumbbell();
    let e = g.edges();
    let s = Strategy::Prefer(e[2], e[0]);
    assert_eq!(s.pick(&g), Some(e[2]));
    assert_eq!(s.pick(&g.contract(e[2]).unwrap()), Some(e[0]));
}

#[test]
fn one_step_expansion_preserves_the_value() {
    let a = center_of_group_algebra(&symmetric_group_generators(3)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for g in enumerate_graphs(3) {
        let vs: Vec<_> = (0..g.vertex_count()).map(|_| random_element(&a, &mut rng)).collect();
        let want = closed_value(&g, &vs).unwrap();
        for e in g.edges() {
            let terms = expand_edge(&g, &vs, e).unwrap();
            assert!(terms.len() <= if g.is_loop(e) { a.dim() } else { 1 });
            let sum: Rational = terms.iter().map(|(h, w)| closed_value(h, w).unwrap()).sum();
            assert_eq!(sum, want);
        }
    }
    assert!(expand_edge(&path(2), &[a.unit()], Edge(0)).is_err());
}
