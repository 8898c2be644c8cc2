//! Rook monoids, symplectic Renner monoids and their Borel submonoids.
//!
//! Elements are rooks in one-line notation ([`Rook`]). On top of them the
//! crate provides the Weyl groups `S_n` and `W_G`, two independent deciders
//! for the Bruhat-Chevalley-Renner order, Hasse diagrams, folding and
//! unfolding of symplectic rooks, set partitions, exact counting with
//! brute-force oracles, and nilpotent-semigroup analysis.

pub mod counting;
pub mod error;
pub mod exec;
pub mod folding;
pub mod nilpotent;
pub mod order;
pub mod partitions;
pub mod rook;
pub mod symplectic;
pub mod weyl;

pub use error::{Error, Result};
pub use exec::Exec;
pub use rook::Rook;
