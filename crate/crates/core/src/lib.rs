//! Dihedral quandles, their integral quandle rings, and the polynomial
//! machinery used to classify idempotents.
//!
//! - [`quandle`]: operation tables, the dihedral family, axiom checks,
//!   adjacency matrices and automorphisms.
//! - [`ring`]: elements of `Z[Q]` and their bilinear product.
//! - [`system`]: the idempotent system, brute-force search and the
//!   length-two analysis.
//! - [`groebner`]: rational polynomials, Buchberger's algorithm and the
//!   integer-point solver.
//! - [`automorphisms`]: basis permutations that extend to ring automorphisms.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so all types are safe to share across threads.

pub mod automorphisms;
pub mod error;
pub mod groebner;
pub mod perm;
pub mod quandle;
pub mod ring;
pub mod solutions;
pub mod system;

pub use error::{Error, Result};
