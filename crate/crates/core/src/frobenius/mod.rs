//! Commutative Frobenius algebras over the rationals and the closed-form
//! values `ε(v₁ ⋯ v_n 𝐞^g)` of the associated 2D TQFT.

mod algebra;
mod element;
mod group;
pub mod identities;

use thiserror::Error;

pub use algebra::FrobeniusAlgebra;
pub use element::{AlgebraElement, TensorElement};
pub use group::{
    center_of_group_algebra, center_of_group_algebra_capped, conjugacy_classes, cyclic_group_generators,
    group_closure, symmetric_group_generators, Permutation, DEFAULT_GROUP_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("structure constants or counit have the wrong shape")]
    Shape,
    #[error("not commutative: e{i}·e{j} != e{j}·e{i}")]
    NotCommutative { i: usize, j: usize },
    #[error("not associative at basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("no unit element")]
    NoUnit,
    #[error("unit element is not unique")]
    UnitNotUnique,
    #[error("pairing matrix is singular")]
    SingularPairing,
    #[error("euler element differs between the two formulas")]
    EulerMismatch,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("generator is not a permutation of a common degree")]
    InvalidPermutation,
    #[error("group closure exceeds {cap} elements")]
    GroupTooLarge { cap: usize },
}

#[cfg(test)]
mod tests;
