use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::exactmath::{int, rat, Rational};

fn s3() -> alloc::sync::Arc<FrobeniusAlgebra> {
    center_of_group_algebra(&symmetric_group_generators(3)).unwrap()
}

fn z2() -> alloc::sync::Arc<FrobeniusAlgebra> {
    center_of_group_algebra(&cyclic_group_generators(2)).unwrap()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().copied().map(int).collect()
}

#[test]
fn trivial_algebra() {
    let a = FrobeniusAlgebra::trivial();
    assert_eq!(a.eta(), &vec![ints(&[1])]);
    assert_eq!(a.euler_element(), a.unit());
    let d = a.comultiply(&a.unit());
    assert_eq!(d.coords(), &vec![ints(&[1])]);
    for g in 0..6 {
        assert_eq!(a.z_invariant(g), int(1));
    }
}

#[test]
fn dual_numbers() {
    let a = FrobeniusAlgebra::dual_numbers();
    assert_eq!(a.eta(), &vec![ints(&[0, 1]), ints(&[1, 0])]);
    let x = a.basis(1);
    assert!(x.mul(&x).unwrap().is_zero());
    let d = a.comultiply(&a.unit());
    assert_eq!(d.coords(), &vec![ints(&[0, 1]), ints(&[1, 0])]);
    assert_eq!(a.euler_element().coords(), ints(&[0, 2]).as_slice());
    assert_eq!(a.omega_closed(2, &[a.unit()]).unwrap(), int(0));
    assert_eq!(a.z_invariant(1), int(2));
    assert_eq!(a.z_invariant(2), int(0));
}

#[test]
fn construction_errors() {
    let z = int(0);
    let o = int(1);
    let mult = vec![
        vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
        vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
    ];
    assert_eq!(
        FrobeniusAlgebra::from_structure_constants(2, mult.clone(), vec![z.clone(), z.clone()]),
        Err(FrobeniusError::SingularPairing)
    );

    let mut noncomm = mult.clone();
    noncomm[0][1] = vec![o.clone(), o.clone()];
    assert_eq!(
        FrobeniusAlgebra::from_structure_constants(2, noncomm, vec![z.clone(), o.clone()]),
        Err(FrobeniusError::NotCommutative { i: 1, j: 0 })
    );

    let zero = vec![vec![vec![z.clone(); 2]; 2]; 2];
    assert_eq!(
        FrobeniusAlgebra::from_structure_constants(2, zero, vec![z.clone(), o.clone()]),
        Err(FrobeniusError::NoUnit)
    );

    // e0 e0 = e1, e0 e1 = e0: (e0 e0) e1 = 0 but e0 (e0 e1) = e1
    let mut nonassoc = vec![vec![vec![z.clone(); 2]; 2]; 2];
    nonassoc[0][0] = vec![z.clone(), o.clone()];
    nonassoc[0][1] = vec![o.clone(), z.clone()];
    nonassoc[1][0] = vec![o.clone(), z.clone()];
    assert!(matches!(
        FrobeniusAlgebra::from_structure_constants(2, nonassoc, vec![z.clone(), o.clone()]),
        Err(FrobeniusError::NotAssociative { .. })
    ));

    assert_eq!(
        FrobeniusAlgebra::from_structure_constants(2, mult, vec![o]),
        Err(FrobeniusError::Shape)
    );
}

#[test]
fn z2_center() {
    let a = z2();
    assert_eq!(a.dim(), 2);
    assert_eq!(a.eta(), &vec![ints(&[1, 0]), ints(&[0, 1])]);
    assert_eq!(a.euler_element(), a.unit().scale(&int(2)));
    let d = a.comultiply(&a.unit());
    assert_eq!(d.coords(), &vec![ints(&[1, 0]), ints(&[0, 1])]);
    assert_eq!(a.omega_closed(1, &[a.unit()]).unwrap(), int(2));
    for g in 0..6 {
        assert_eq!(a.z_invariant(g), int(1 << g));
    }
}

#[test]
fn s3_center() {
    let a = s3();
    assert_eq!(a.dim(), 3);
    let (z1, z2, z3) = (a.basis(0), a.basis(1), a.basis(2));
    assert_eq!(z2.mul(&z2).unwrap().coords(), ints(&[3, 0, 3]).as_slice());
    assert_eq!(z3.mul(&z3).unwrap().coords(), ints(&[2, 0, 1]).as_slice());
    assert_eq!(a.unit(), z1);
    assert_eq!(z2.pairing(&z2).unwrap(), int(3));
    assert_eq!(z2.pairing(&z3).unwrap(), int(0));
    assert_eq!(a.eta(), &vec![ints(&[1, 0, 0]), ints(&[0, 3, 0]), ints(&[0, 0, 2])]);
    assert_eq!(a.euler_element().coords(), &[int(3), int(0), rat(3, 2)]);
    assert_eq!(a.z_invariant(1), int(3));
}

#[test]
fn z_invariant_matches_commuting_pairs() {
    for gens in [symmetric_group_generators(3), symmetric_group_generators(4), cyclic_group_generators(5)] {
        let group: Vec<Permutation> = group_closure(&gens, DEFAULT_GROUP_CAP).unwrap().into_iter().collect();
        let commuting = group
            .iter()
            .flat_map(|a| group.iter().map(move |b| (a, b)))
            .filter(|(a, b)| {
                let ab: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                let ba: Vec<usize> = a.iter().map(|&x| b[x]).collect();
                ab == ba
            })
            .count();
        let a = center_of_group_algebra(&gens).unwrap();
        assert_eq!(a.z_invariant(1), rat(commuting as i64, group.len() as i64));
    }
}

#[test]
fn trivial_group_gives_trivial_algebra() {
    let a = center_of_group_algebra(&[vec![0, 1, 2]]).unwrap();
    assert_eq!(*a, *FrobeniusAlgebra::trivial());
    let b = center_of_group_algebra(&[]).unwrap();
    assert_eq!(*b, *FrobeniusAlgebra::trivial());
}

#[test]
fn group_cap_and_bad_generators() {
    assert_eq!(
        center_of_group_algebra_capped(&symmetric_group_generators(4), 10),
        Err(FrobeniusError::GroupTooLarge { cap: 10 })
    );
    assert_eq!(
        center_of_group_algebra(&[vec![0, 0]]),
        Err(FrobeniusError::InvalidPermutation)
    );
    assert_eq!(
        center_of_group_algebra(&[vec![1, 0], vec![0, 2, 1]]),
        Err(FrobeniusError::InvalidPermutation)
    );
}

#[test]
fn mismatched_algebras() {
    let a = s3();
    let b = z2();
    assert_eq!(a.unit().mul(&b.unit()), Err(FrobeniusError::AlgebraMismatch));
    assert_eq!(a.omega_closed(0, &[b.unit()]), Err(FrobeniusError::AlgebraMismatch));
    // structurally equal algebras built twice are compatible
    assert!(s3().unit().mul(&a.unit()).is_ok());
}

#[test]
fn closed_form_special_cases() {
    let a = s3();
    let v = a.element(vec![rat(1, 2), int(-1), int(3)]).unwrap();
    let w = a.element(vec![int(2), rat(5, 3), int(0)]).unwrap();
    assert_eq!(a.omega_closed(0, &[v.clone()]).unwrap(), v.counit());
    assert_eq!(a.omega_closed(0, &[v.clone(), w.clone()]).unwrap(), v.pairing(&w).unwrap());
    assert_eq!(a.omega_closed(0, &[a.unit(), v.clone(), w.clone()]).unwrap(), v.pairing(&w).unwrap());
    assert_eq!(a.omega_closed(3, &[]).unwrap(), a.z_invariant(3));
}

#[test]
fn symmetric_and_euler_for_named_algebras() {
    for a in [FrobeniusAlgebra::trivial(), FrobeniusAlgebra::dual_numbers(), z2(), s3()] {
        assert!(identities::symmetric_counit(&a, 3));
        assert!(identities::symmetric_counit(&a, 4));
        assert!(identities::euler_two_ways(&a));
    }
}
