//! Exact-arithmetic core: Frobenius algebras and their 2D TQFT values on cell
//! graphs by edge contraction, orbifold Hurwitz numbers by the edge-contraction
//! formula, decorated Hurwitz graphs, and the spectral-curve identities.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command line
//! live in the `edgecontract` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod exactmath;
pub mod cellgraph;
pub mod frobenius;
pub mod hgraph;
pub mod hurwitz;
pub mod mirror;
pub mod tqft;
