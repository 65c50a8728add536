//! Exact algebra of 2-quasi-cyclic codes over finite fields.
//!
//! A 2-quasi-cyclic code of length 2n is an FH-submodule of FH x FH with
//! FH = F_q[x]/(x^n - 1), gcd(n, q) = 1. Every such code is determined by
//! Goursat data `(C1, C2, C12, g)`: three ideals of FH given by idempotent
//! supports and a unit `g` of C12, with
//! `C = (C1 x C2) + {(c, c g) : c in C12}`.
//!
//! The crate computes this normal form, decides self-duality and the
//! dihedral, consta-dihedral, double circulant and principal properties
//! symbolically, and carries an independent matrix oracle ([`oracle`]) that
//! checks every predicate by brute force.

pub mod arith;
pub mod classify;
pub mod cyclic;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod gf;
pub mod goursat;
pub mod group_algebra;
pub mod idem;
pub mod matrix;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use gf::{FieldElement, FieldSpec};
pub use group_algebra::GroupAlgebraElement;
pub use idem::{primitive_idempotents, IdempotentBasis};
pub use matrix::{Matrix, RowSpace};
pub use cyclic::CyclicCode;
pub use goursat::{ComponentType, GoursatData, QuasiCyclicCode};
pub use classify::ClassificationReport;
