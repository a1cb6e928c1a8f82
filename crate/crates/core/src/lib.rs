//! Exact computations with elementary subalgebras of restricted Lie algebras
//! over small prime fields.
//!
//! The layers build on each other:
//!
//! - [`field`], [`matrix`], [`subspace`]: arithmetic in F_p and dense linear
//!   algebra with canonical subspace representatives.
//! - [`liealg`]: restricted Lie algebras as structure constants with a p-map,
//!   and a catalog of the standard examples.
//! - [`grassmann`]: rational points of Grassmannians, charts and Plücker
//!   coordinates.
//! - [`evariety`]: the elementary-subalgebra predicate, enumeration of
//!   E(r, g)(F_p), maximality, and triangularization.
//! - [`repmod`]: restricted modules and their restrictions to elementary
//!   subalgebras.
//! - [`rankfn`]: radical and socle ranks, freeness, support loci and surveys.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod error;
pub mod evariety;
pub mod field;
pub mod grassmann;
pub mod liealg;
pub mod matrix;
pub mod rankfn;
pub mod repmod;
pub mod subspace;

pub use error::{Error, Result};
pub use field::{Fp, PrimeField};
pub use matrix::Matrix;
pub use subspace::Subspace;
