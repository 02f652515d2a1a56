//! Configuration sets of group actions, their exact configuration equations,
//! and paradoxical decompositions.
//!
//! Group elements are reduced free-group words or permutations
//! ([`groups`]); subsets of the acting universe are bitsets or exact regular
//! sets of reduced words ([`sets`]).

pub mod actions;
pub mod config;
pub mod equations;
pub mod error;
pub mod groups;
pub mod paradox;
pub mod sets;

pub use error::{Error, Result};
