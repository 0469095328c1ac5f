//! Restricted Lie superalgebras over GF(p), their restricted enveloping
//! algebras `u(L)`, and Lie-theoretic classification of `u(L)`.
//!
//! The crate is organized bottom-up:
//!
//! - [`linalg`]: exact GF(p) arithmetic and canonical subspaces.
//! - [`superlie`]: the algebra `L`, its axioms, p-map, ideals and series.
//! - [`pbw`]: PBW straightening and the multiplication table of `u(L)`.
//! - [`series`]: Lie and associative series on any finite-dimensional
//!   associative algebra.
//! - [`classify`]: structural conditions on `L` versus direct computation in
//!   `u(L)`, cross-validated.
//! - [`corpus`]: the algebra file format, builtin reference algebras and
//!   report files.

pub mod classify;
pub mod cli;
pub mod config;
pub mod corpus;
pub mod error;
pub mod linalg;
pub mod pbw;
pub mod series;
pub mod superlie;

pub use config::Caps;
pub use error::{Error, Result};
pub use linalg::{Fp, Scalar, Subspace};
pub use superlie::LieSuperData;
