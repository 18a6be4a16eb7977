//! Exact computation of cyclotomic numbers, Jacobi sums and Dickson-Hurwitz
//! sums over finite fields F_q, together with a verification harness that
//! mechanically checks the classical identities relating them.
//!
//! The crate is organised around a pipeline:
//!
//! * [`field`] builds F_{p^r}, finds a generator of the multiplicative group
//!   and tabulates every discrete logarithm,
//! * [`cyclotomic`] provides exact arithmetic in Z[zeta_e],
//! * [`char_sums`] counts cyclotomic numbers and assembles character sums,
//! * [`coefficients`] extracts Jacobi-sum coefficients and evaluates the
//!   coefficient-level identities,
//! * [`formula`] evaluates the order-2l^2 cyclotomic-number formula in both
//!   its trace and coefficient forms,
//! * [`matrix`] reduces pairs modulo the symmetry group and studies the
//!   associated integer matrices,
//! * [`verify`] runs named identity suites and emits [`report`] records.
//!
//! Everything is exact integer arithmetic; floating point appears only in
//! numeric embeddings and polynomial root finding.

pub mod cache;
pub mod char_sums;
pub mod coefficients;
pub mod cyclotomic;
mod error;
pub mod field;
pub mod formula;
pub mod matrix;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
