//! Paradoxical decompositions read off a configuration set.
//!
//! Since `x ∈ g⁻¹·E` iff `g·x ∈ E`, a pair `(j, i)` describes the piece `E_i`
//! moved by `g_j⁻¹` (by the identity when `j = 0`), and its translate is the
//! set of points whose configuration has `C_j = i`. A family of such pairs
//! covers `X` exactly when every configuration hits one of them. The
//! predicate only depends on the configuration set, so any pair of another
//! action with the same configuration set yields a decomposition of the same
//! shape.

use std::fmt;

use super::{verify_decomposition, DecompositionFailure, ParadoxicalDecomposition};
use crate::config::{format_configuration, Configuration, ConfigurationSet};
use crate::error::Result;
use crate::groups::GroupElement;

/// Two families of `(coordinate j, one-based block i)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParadoxPattern {
    pub first: Vec<(usize, usize)>,
    pub second: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternFailure {
    OutOfRange {
        j: usize,
        i: usize,
    },
    EmptyFamily {
        family: usize,
    },
    /// Two pairs use the same block, so the pieces are not disjoint.
    SharedBlock {
        block: usize,
    },
    /// A configuration hits no pair of the family.
    Uncovered {
        family: usize,
        configuration: Configuration,
    },
    /// The derived decomposition failed; indicates a bug.
    Decomposition(DecompositionFailure),
}

impl fmt::Display for PatternFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternFailure::OutOfRange { j, i } => write!(f, "pair ({j}, {i}) is out of range"),
            PatternFailure::EmptyFamily { family } => write!(f, "family {family} is empty"),
            PatternFailure::SharedBlock { block } => write!(f, "block {block} is used by two pieces"),
            PatternFailure::Uncovered { family, configuration } => {
                write!(f, "configuration {} avoids family {family}", format_configuration(configuration))
            }
            PatternFailure::Decomposition(d) => write!(f, "internal error, derived decomposition fails: {d}"),
        }
    }
}

/// Checks the pattern against `cs` and, when it holds, returns the derived
/// decomposition (already verified).
pub fn pattern_check(
    cs: &ConfigurationSet,
    pattern: &ParadoxPattern,
) -> Result<std::result::Result<ParadoxicalDecomposition, PatternFailure>> {
    let (n, m) = (cs.pair().n(), cs.pair().m());
    let families = [&pattern.first, &pattern.second];
    let mut used = vec![false; m + 1];
    for (k, fam) in families.iter().enumerate() {
        if fam.is_empty() {
            return Ok(Err(PatternFailure::EmptyFamily { family: k + 1 }));
        }
        for &(j, i) in fam.iter() {
            if j > n || i == 0 || i > m {
                return Ok(Err(PatternFailure::OutOfRange { j, i }));
            }
            if used[i] {
                return Ok(Err(PatternFailure::SharedBlock { block: i }));
            }
            used[i] = true;
        }
    }
    for (k, fam) in families.iter().enumerate() {
        if let Some(c) = cs.configurations().iter().find(|c| !fam.iter().any(|&(j, i)| c[j] == i)) {
            return Ok(Err(PatternFailure::Uncovered { family: k + 1, configuration: c.clone() }));
        }
    }

    let action = cs.action();
    let translator = |j: usize| -> Result<GroupElement> {
        if j == 0 {
            Ok(action.identity())
        } else {
            action.invert(&cs.pair().tuple()[j - 1])
        }
    };
    let side = |fam: &[(usize, usize)]| -> Result<(Vec<_>, Vec<_>)> {
        let pieces = fam.iter().map(|&(_, i)| cs.pair().partition().block(i).clone()).collect();
        let translators = fam.iter().map(|&(j, _)| translator(j)).collect::<Result<_>>()?;
        Ok((pieces, translators))
    };
    let (a_pieces, a_translators) = side(&pattern.first)?;
    let (b_pieces, b_translators) = side(&pattern.second)?;
    let dec = ParadoxicalDecomposition { a_pieces, a_translators, b_pieces, b_translators };
    Ok(verify_decomposition(action, &dec, false).map(|_| dec).map_err(PatternFailure::Decomposition))
}
