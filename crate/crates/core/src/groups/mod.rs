//! Group elements: reduced words in free groups and permutations of finite sets.

mod element;
mod perm;
mod word;

pub use element::{evaluate_word, Assignment, GroupElement};
pub use perm::Permutation;
pub use word::{reduce_word, FreeWord, Letter, MAX_RANK};
