use alloc::vec::Vec;

use num_bigint::BigUint;

use super::*;
use crate::exactmath::{factorial, int, rat};

#[test]
fn orbifold_example() {
    assert_eq!(calh(2, 0, &[3, 1]), rat(9, 2));
    assert_eq!(calh(2, 0, &[1, 3]), rat(9, 2));
    assert_eq!(hurwitz_h(2, 0, &[3, 1]), rat(3, 2));
}

#[test]
fn tree_sequence() {
    let expected = [1, 1, 3, 16, 125, 1296];
    let lambert = [int(1), int(1), rat(3, 2), rat(8, 3), rat(125, 24), rat(54, 5)];
    for d in 1..=6u32 {
        assert_eq!(tree_count(d), BigUint::from(expected[d as usize - 1] as u32));
        assert_eq!(calh(1, 0, &[d]), lambert[d as usize - 1]);
        assert_eq!(calh(1, 0, &[d]) * factorial(d - 1), int(expected[d as usize - 1]));
    }
    assert_eq!(tree_count(7), BigUint::from(16807u32));
}

#[test]
fn inadmissible_is_zero() {
    assert_eq!(calh(3, 0, &[2]), int(0));
    assert_eq!(calh(2, 0, &[3, 2]), int(0));
    assert_eq!(calh(2, -1, &[2]), int(0));
    assert_eq!(calh(2, 0, &[0, 2]), int(0));
    assert_eq!(calh(2, 0, &[]), int(0));
    assert_eq!(calh(1, 0, &[1]), int(1));
    for r in 1..5 {
        assert_eq!(calh(r, 0, &[r]), int(1));
        for d in 1..r {
            assert_eq!(calh(r, 0, &[d]), int(0));
        }
    }
}

#[test]
fn h_examples() {
    for r in 1..5 {
        assert_eq!(hurwitz_h(r, 0, &[r]), rat(1, r.into()));
    }
    assert_eq!(hurwitz_h(1, 0, &[1]), int(1));
}

#[test]
fn jpt_examples() {
    assert_eq!(jpt_01(1, 3), rat(1, 2));
    assert_eq!(jpt_01(1, 2), rat(1, 2));
    assert_eq!(jpt_01(3, 4), int(0));
    assert_eq!(jpt_02(2, 3, 1), rat(3, 2));
    assert_eq!(jpt_02(2, 1, 2), int(0));
    assert_eq!(jpt_02(1, 1, 1), rat(1, 2));
}

#[test]
fn factorization_examples() {
    assert_eq!(factorization_tuples(2, 0, &[2]).unwrap(), 1);
    assert_eq!(factorization_count(2, 0, &[2]).unwrap(), rat(1, 2));
    assert_eq!(factorization_tuples(1, 0, &[2]).unwrap(), 1);
    assert_eq!(factorization_count(1, 0, &[2]).unwrap(), rat(1, 2));
    assert_eq!(factorization_tuples(2, 0, &[3, 1]).unwrap(), 72);
    assert_eq!(factorization_count(2, 0, &[3, 1]).unwrap(), rat(3, 2));
    assert_eq!(
        factorization_count(1, 3, &[9]),
        Err(FactorizationError::TooLarge { d: 9, s: 14 })
    );
    assert_eq!(factorization_count(2, 0, &[3]).unwrap(), int(0));
}

#[test]
fn repeated_parts_count_labelings() {
    // both labelings of the two 1-cycles are counted
    assert_eq!(factorization_count(1, 0, &[1, 1]).unwrap(), hurwitz_h(1, 0, &[1, 1]));
    assert_eq!(factorization_count(2, 0, &[1, 1]).unwrap(), hurwitz_h(2, 0, &[1, 1]));
}

#[test]
fn ordered_recursion_agrees() {
    let mut canon = HurwitzTable::new(2);
    let mut ordered = HurwitzTable::ordered(2);
    for mu in [[1u32, 3, 2].as_slice(), &[2, 1, 1], &[1, 1, 2], &[3, 1, 1, 1]] {
        for g in 0..2 {
            assert_eq!(canon.get(g, mu), ordered.get(g, mu));
        }
    }
}

#[test]
fn partitions_in_order() {
    let p4: Vec<Vec<u32>> = partitions(4);
    assert_eq!(p4.len(), 5);
    assert_eq!(p4[0], [1, 1, 1, 1]);
    assert_eq!(p4[4], [4]);
    assert!(partitions(0).is_empty());
}
