//! File formats, the command line and the acceptance suite over
//! `edgecontract-core`.

pub mod cli;
pub mod format;
pub mod keys;
pub mod suite;
