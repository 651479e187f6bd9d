//! Signed monomer-dimer matchings of generalized rectangles `G x P_n` for
//! every integer `n`.
//!
//! The crate builds the signed graphs (plain, anti and empty vertices),
//! counts their signed matchings by brute force and by transfer matrices,
//! recovers and reverses the linear recurrences of the counts, and checks
//! the adjunction and reciprocity identities exactly.

pub mod enumerate;
pub mod error;
pub mod exactmath;
pub mod reciprocity;
pub mod recurrence;
pub mod signed_graph;
pub mod transfer;

pub use error::{Error, Result};
pub use exactmath::{BigInt, MultiPoly, Rational, RationalFunction, UniPoly, VarKey};
pub use signed_graph::{BaseGraph, SignedGraph};

