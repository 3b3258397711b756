//! Atoms of regular languages and their quotient complexities.
//!
//! An atom of a language `L` with quotients `K_1, .., K_n` is a non-empty
//! intersection of every `K_i`, each taken either as is or complemented.
//! This crate computes atoms and their quotient complexities from a minimal
//! DFA, and specializes to right ideals (`L = LΣ*`), left ideals
//! (`L = Σ*L`) and two-sided ideals (`L = Σ*LΣ*`): ideal recognition,
//! witness families meeting the maximal complexities, and the closed-form
//! bounds they meet.
//!
//! State indices are 0-based in the Rust API. Everything printed or parsed
//! (the `dfa v1` format, `Display` impls, DOT, tables) and the notation
//! constructors such as [`Transformation::cycle`] use 1-based states.
//!
//! ```
//! use ideal_atoms::{atoms, witnesses, StateSet};
//!
//! let d = witnesses::two_sided_ideal_witness(4).unwrap();
//! let k = atoms::atom_complexity(&d, StateSet::one_based(&[2, 3, 4])).unwrap();
//! assert_eq!(k, 7);
//! ```

pub mod atoms;
pub mod bounds;
mod dfa;
pub mod document;
pub mod dot;
mod error;
pub mod exec;
pub mod harness;
pub mod ideals;
mod minimize;
mod semigroup;
mod state_set;
pub mod table;
mod transformation;
pub mod witnesses;

pub use dfa::Dfa;
pub use error::{Error, Result};
pub use exec::Execution;
pub use minimize::Partition;
pub use semigroup::MAX_ATOM_STATES;
pub use state_set::{StateSet, MAX_SET_STATES};
pub use transformation::{compose, ImageTable, Transformation};
pub use witnesses::WitnessClass;
