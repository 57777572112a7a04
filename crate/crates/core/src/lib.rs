//! Exact computer algebra for the ring of shifted symmetric polynomials.
//!
//! The crate is organised bottom-up:
//!
//! - [`partitions`]: enumeration, counting, Frobenius coordinates.
//! - [`ssym`]: sparse polynomials in the generators `Q1, Q2, Q3, ...` with
//!   half-integer powers of `Q2`, and their evaluation on partitions.
//! - [`operators`]: the differential operators acting on those polynomials.
//! - [`linalg`]: exact Gaussian elimination over the rationals.
//! - [`harmonic`]: harmonic polynomials, the `Q2`-adic decomposition and the
//!   explicit basis `h_λ`.
//! - [`qseries`]: truncated q-series, Eisenstein series and the q-bracket.
//! - [`quasimodular`]: polynomials in `P, Q, R` and recognition of q-series.
//! - [`verify`]: seeded property suites shared by the CLI and the tests.

pub mod arith;
pub mod error;
pub mod golden;
pub mod harmonic;
pub mod latex;
pub mod linalg;
pub mod operators;
pub mod partitions;
pub mod qseries;
pub mod quasimodular;
pub mod random;
pub mod ssym;
pub mod verify;

pub use error::{Error, Result};
pub use harmonic::{Decomposition, HarmonicBasis};
pub use partitions::{FrobeniusCoords, Partition};
pub use qseries::QSeries;
pub use quasimodular::QMForm;
pub use ssym::{Monomial, Rational, SSPoly};
