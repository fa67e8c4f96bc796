//! Exact-arithmetic computations for the symplectic derivation Lie algebra
//! h_{g,1} and its Sp-invariant part: chord-diagram metrics, orthogonal
//! decompositions, character-based dimension tables, Labute decompositions
//! of the related algebras, the derivation bracket, and the trace map to
//! cyclic words.
//!
//! Everything is computed over the rationals with arbitrary-precision
//! integers; there is no floating point anywhere.

pub mod chords;
pub mod deriv;
pub mod tensors;
pub mod error;
pub mod exact;
pub mod partitions;
pub mod symfunc;
pub mod verify;

mod book;

pub use error::{Error, Result};
