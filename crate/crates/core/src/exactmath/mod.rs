//! Exact scalar arithmetic and truncated formal power series.
//!
//! Scalars are arbitrary-precision rationals. Series carry an explicit
//! truncation degree; bivariate series are truncated by total degree.

pub mod linalg;
mod rational;
mod series;

pub use rational::{factorial, int, pow_int, rat, Rational};
pub use series::{Exponent, SeriesError, TruncatedSeries, Vars};
