//! Orbifold Hurwitz numbers `𝓗ʳ_{g,n}(μ)` by the edge-contraction recursion,
//! with independent checks: the closed forms in genus zero, the tree numbers,
//! and a direct count of factorizations in the symmetric group.

mod closed;
mod ecf;
mod factorization;

pub use closed::{jpt_01, jpt_02, tree_count};
pub use ecf::{calh, hurwitz_h, partitions, Profile, HurwitzTable};
pub use factorization::{factorization_count, factorization_tuples, FactorizationError, FACTORIZATION_CAP};

#[cfg(test)]
mod tests;
