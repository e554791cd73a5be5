//! Exact-arithmetic workbench for Backström pairs of finite-dimensional
//! algebras over the rationals.
//!
//! A Backström pair is a pair of algebras `H ⊇ A` sharing their Jacobson
//! radical. This crate constructs and verifies the objects attached to such
//! a pair: the conductor ideal `C = {α ∈ A | Hα ⊆ A}`, the Auslander
//! envelope `Ã = [[A, H], [C, H]]` and its companion `H̃`, minimal
//! projective resolutions and global dimension with sound (certificate or
//! cutoff-qualified) reporting, the triangular ring `B = [[A/C, H/C], [0, H]]`
//! with its partial tilting module `R`, the module-level recollement
//! functors attached to the distinguished projectives of `Ã`, and the
//! Hom/Ext formulas used for element diagrams.
//!
//! Everything is computed in exact rational arithmetic. Wherever a value
//! admits two independent derivations (conductor from its definition vs.
//! from the Pierce cell formula, Ext from a resolution vs. from the closed
//! formula, ...), both are computed and compared; disagreement is a hard
//! error, never a warning.

pub mod algebra;
pub mod builtins;
pub mod elements;
pub mod error;
pub mod homalg;
pub mod io;
pub mod linalg;
pub mod pair;
pub mod quiver;
pub mod rat;
pub mod tilting;
pub mod verify;

pub use error::{Error, Result};
pub use rat::Rat;
