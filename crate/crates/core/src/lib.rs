//! An exact computable-field-theory kernel: algebraic extensions as
//! explicit towers, an enumerated algebraic closure of ℚ, embedding search
//! under root moduli and embedding bounds, the finite Galois
//! correspondence, and the separating-set witness constructions that turn
//! automorphisms into sets.
//!
//! Everything is exact: rationals are arbitrary precision, finite fields
//! are tables of residues, algebraic numbers are minimal polynomials with
//! isolating rectangles, and every search is deterministic.

pub mod boxes;
pub mod closure;
pub mod embed;
pub mod error;
pub mod galois;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod tower;
pub mod witness;

pub use error::{Error, Result};
