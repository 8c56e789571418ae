//! Constructions of generalized orthogonal de Bruijn and Kautz sequences
//! (multiplicity-bounded, balanced and fixed-weight) with independent
//! brute-force verification.

pub mod alphabet;
pub mod arith;
pub mod constructions;
pub mod error;
pub mod euler;
pub mod graph;
pub mod verify;

pub use alphabet::{Alphabet, Symbol};
pub use error::{Error, Result};
