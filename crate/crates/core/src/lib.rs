//! Exact-arithmetic analysis of weight spectra of linear and affine codes
//! over prime fields.
//!
//! The crate computes weight distributions, dual codes and the
//! uniform-spectrum statistic alpha(V); verifies the MacWilliams-type
//! identities relating a code's spectrum to its dual's, entirely in exact
//! integer/rational arithmetic; evaluates q-ary Krawtchouk polynomials; runs
//! the character (Fourier) transform on GF(q)^n with a fast butterfly for
//! q = 2; builds the extremal constant-weight affine codes M_{n,i}, their
//! span C_n and the minimal-support transform eigenfunction g; and scores
//! point sets against axis-aligned faces of the hypercube.

pub mod codes;
pub mod constructions;
pub mod covering;
pub mod cyclotomic;
pub mod error;
pub mod fourier;
pub mod galois;
pub mod identities;
pub mod krawtchouk;
mod util;

pub use codes::{AffineCode, LinearCode, WeightDistribution};
pub use error::{Error, Result};
pub use fourier::DenseFunction;
pub use galois::{FieldOrder, FqMatrix, FqVector};
