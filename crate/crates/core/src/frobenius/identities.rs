//! Checkable identities of a Frobenius algebra and of its closed-form TQFT.
//!
//! Each check returns `Ok(true)` when the identity holds exactly.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{AlgebraElement, FrobeniusAlgebra, FrobeniusError};
use crate::exactmath::Rational;

type Check = Result<bool, FrobeniusError>;

/// `δ(v₁v₂) = (id ⊗ m)(δ(v₁) ⊗ v₂)`.
pub fn delta_m(v1: &AlgebraElement, v2: &AlgebraElement) -> Check {
    let a = v1.algebra();
    Ok(a.comultiply(&v1.mul(v2)?) == a.comultiply(v1).mul_right(v2)?)
}

/// `(λ(v₁) ⊗ id) δ(v₂) = v₁v₂`.
pub fn prod_coprod(v1: &AlgebraElement, v2: &AlgebraElement) -> Check {
    Ok(v1.algebra().comultiply(v2).contract_left(v1)? == v1.mul(v2)?)
}

/// `v = Σ η(v, e_a) η^{ab} e_b`.
pub fn complete_set(v: &AlgebraElement) -> Check {
    let a = v.algebra();
    let mut acc = a.zero();
    for i in 0..a.dim() {
        let p = v.pairing(&a.basis(i))?;
        for j in 0..a.dim() {
            acc = acc.add(&a.basis(j).scale(&(&p * &a.eta_inv()[i][j])))?;
        }
    }
    Ok(acc == *v)
}

/// `η(v₁, v₂v₃) = η(v₁v₂, v₃)`.
pub fn frobenius_relation(v1: &AlgebraElement, v2: &AlgebraElement, v3: &AlgebraElement) -> Check {
    Ok(v1.pairing(&v2.mul(v3)?)? == v1.mul(v2)?.pairing(v3)?)
}

/// `ε(e_{i₁} ⋯ e_{i_k})` is invariant under permuting the indices, for every
/// index tuple of length `arity`.
pub fn symmetric_counit(a: &Arc<FrobeniusAlgebra>, arity: usize) -> bool {
    let d = a.dim();
    let total = d.pow(arity as u32);
    for code in 0..total {
        let mut idx: Vec<usize> = (0..arity).map(|t| (code / d.pow(t as u32)) % d).collect();
        let value = product_counit(a, &idx);
        idx.sort_unstable();
        loop {
            if product_counit(a, &idx) != value {
                return false;
            }
            if !next_permutation(&mut idx) {
                break;
            }
        }
    }
    true
}

fn product_counit(a: &Arc<FrobeniusAlgebra>, idx: &[usize]) -> Rational {
    let mut acc = a.unit();
    for &i in idx {
        acc = acc.mul(&a.basis(i)).expect("same algebra");
    }
    acc.counit()
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `m ∘ δ(𝟏)` agrees with `Σ η^{ab} e_a e_b`, and `Z(Σ₁) = ε(m ∘ δ(𝟏))`.
pub fn euler_two_ways(a: &Arc<FrobeniusAlgebra>) -> bool {
    let via_delta = a.comultiply(&a.unit()).multiply_out();
    let mut via_basis = a.zero();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let c = &a.eta_inv()[i][j];
            if !c.is_zero() {
                let term = a.basis(i).mul(&a.basis(j)).expect("same algebra").scale(c);
                via_basis = via_basis.add(&term).expect("same algebra");
            }
        }
    }
    via_delta == via_basis && a.z_invariant(1) == via_delta.counit()
}

/// `Ω_{0,3}(𝟏, v₁, v₂) = η(v₁, v₂)`.
pub fn cohft0(v1: &AlgebraElement, v2: &AlgebraElement) -> Check {
    let a = v1.algebra();
    Ok(a.omega_closed(0, &[a.unit(), v1.clone(), v2.clone()])? == v1.pairing(v2)?)
}

/// `Ω_{g,n+1}(v₁, …, v_n, 𝟏) = Ω_{g,n}(v₁, …, v_n)`.
pub fn cohft1(a: &Arc<FrobeniusAlgebra>, g: u32, vs: &[AlgebraElement]) -> Check {
    let mut with_unit = vs.to_vec();
    with_unit.push(a.unit());
    Ok(a.omega_closed(g, &with_unit)? == a.omega_closed(g, vs)?)
}

/// `Σ_{a,b} Ω_{g-1,n+2}(v, e_a, e_b) η^{ab} = Ω_{g,n}(v)` for `g ≥ 1`.
pub fn cohft2(a: &Arc<FrobeniusAlgebra>, g: u32, vs: &[AlgebraElement]) -> Check {
    assert!(g >= 1);
    let mut sum = Rational::zero();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let c = &a.eta_inv()[i][j];
            if c.is_zero() {
                continue;
            }
            let mut slots = vs.to_vec();
            slots.push(a.basis(i));
            slots.push(a.basis(j));
            sum += a.omega_closed(g - 1, &slots)? * c;
        }
    }
    Ok(sum == a.omega_closed(g, vs)?)
}

/// `Σ_{a,b} Ω_{g₁}(v_I, e_a) Ω_{g₂}(v_J, e_b) η^{ab} = Ω_{g₁+g₂}(v_I, v_J)`.
pub fn cohft3(
    a: &Arc<FrobeniusAlgebra>,
    g1: u32,
    left: &[AlgebraElement],
    g2: u32,
    right: &[AlgebraElement],
) -> Check {
    let mut sum = Rational::zero();
    for i in 0..a.dim() {
        let mut l = left.to_vec();
        l.push(a.basis(i));
        let lv = a.omega_closed(g1, &l)?;
        if lv.is_zero() {
            continue;
        }
        for j in 0..a.dim() {
            let c = &a.eta_inv()[i][j];
            if c.is_zero() {
                continue;
            }
            let mut r = right.to_vec();
            r.push(a.basis(j));
            sum += &lv * a.omega_closed(g2, &r)? * c;
        }
    }
    let all: Vec<AlgebraElement> = left.iter().chain(right).cloned().collect();
    Ok(sum == a.omega_closed(g1 + g2, &all)?)
}
