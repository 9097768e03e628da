//! Boundary monodromy for moduli of curves with non-abelian level
//! structure.
//!
//! The crate computes, exactly over the integers:
//! - arithmetic in the free class-3 nilpotent group on three generators
//!   ([`nilpotent`]), with a truncated-series oracle ([`magnus`]) that keeps
//!   it honest;
//! - power subgroups `F^(k),n` of free groups in nilpotency classes 2 and 3
//!   and membership of elements in them ([`hall`]);
//! - the displacement of Dehn twists around separating and non-separating
//!   configurations on a closed surface, and whether a power of such a twist
//!   acts trivially on the level structure ([`surface`]);
//! - stable dual graphs of nodal curves, their boundary strata, and the
//!   lattice of monodromy invariants that decides smoothness of the
//!   compactified moduli space along each stratum ([`graph`]).
//!
//! See the `examples/` directory for runnable entry points into each of
//! these, and the `levelmono` binary for a command-line interface.

pub mod error;
pub mod graph;
pub mod hall;
pub mod lattice;
pub mod magnus;
pub mod nilpotent;
pub mod surface;
pub mod word;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
pub use nilpotent::{LevelParams, NilpotentElement};
pub use word::{parse_word, GroupWord};
