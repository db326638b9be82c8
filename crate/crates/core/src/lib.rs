//! Exact machinery for Ramsey numbers of the quadrilateral versus books.
//!
//! The crate is `no_std` (with `alloc`) and covers:
//!
//! - [`field`]: arithmetic in GF(p^k) with a deterministic irreducible modulus.
//! - [`projective`]: points of PG(2, q) and the Erdős–Rényi orthogonal polarity graph.
//! - [`graph`]: dense bitset graphs, C4 detection, complement book numbers, graph6.
//! - [`construct`]: the even-q vertex-deletion witnesses and the odd-q matching witnesses.
//! - [`audit`]: neighbourhood decompositions and the counting identities behind the upper bound.
//! - [`witness`]: certification of lower-bound witnesses.
//! - [`bounds`]: closed-form upper and lower bounds and a best-known aggregator.
//! - [`search`]: isomorph-free enumeration of C4-free graphs and exact small values.
//! - [`deletion`]: the random vertex-deletion lower bound.
//!
//! IO, the CLI and the reproduction harness live in the `c4book` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod audit;
pub mod bounds;
pub mod construct;
pub mod deletion;
mod error;
pub mod field;
pub mod graph;
pub mod interval;
pub mod primes;
pub mod projective;
pub mod search;
pub mod witness;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use graph::{BookNumber, Diameter, Graph};
pub use projective::{PolarityGraph, ProjectivePoint};
