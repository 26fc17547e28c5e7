//! Cyclic codes over the matrix ring A = M2(F2) = F4 + u*F4.
//!
//! The crate covers exact arithmetic in GF(4) and A, polynomial arithmetic
//! and factorization of x^n - 1 over GF(4), quaternary codes with an
//! exhaustive bitsliced distance engine, cyclic codes over A given by factor
//! triples, the Bachoc map to quaternary codes, and the classification of
//! Euclidean self-dual cyclic codes for odd lengths.

pub mod acode;
pub mod algebra;
pub mod bachoc;
pub mod classify;
pub mod error;
pub mod extfield;
pub mod factor;
pub mod gf2;
pub mod poly;
pub mod qcode;

pub use algebra::{AElem, MatF2, F4};
pub use error::{Error, Result};
pub use poly::PolyF4;
