//! Smoothness of the irreducible components of the moduli of framed unipotent
//! Weil–Deligne representations `{(Φ, N) : Ad(Φ)N = qN}`.
//!
//! The crate has two halves. The combinatorial half ([`rootsys`], [`orbits`],
//! [`arith`], [`classifier`]) decides which components `X_C` are smooth from
//! weighted Dynkin diagrams and the order of `q`. The computational half
//! ([`variety`]) realizes the moduli space for `GL_n` and `GSp_4` over prime fields
//! and checks those verdicts through exact tangent-space computations.

pub mod arith;
pub mod classifier;
pub mod error;
pub mod field;
pub mod orbits;
pub mod rootsys;
pub mod variety;

pub use error::{Error, Result};
