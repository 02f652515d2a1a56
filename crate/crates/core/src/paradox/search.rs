//! Exhaustive search for small paradoxical decompositions of the free
//! self-action.
//!
//! Pieces are unions of atoms: the singletons `{w}` with `|w| < depth` and
//! the cones `cone(w)` with `|w| = depth`. Translators are the reduced words
//! of length at most `max_word_len`. Each side of a decomposition is a set of
//! (piece, translator) choices with pairwise disjoint pieces whose translates
//! cover `X`; two sides combine when their pieces are disjoint.

use std::collections::HashMap;

use super::{verify_decomposition, ParadoxicalDecomposition};
use crate::actions::Action;
use crate::error::{Error, Result};
use crate::groups::{FreeWord, GroupElement};
use crate::sets::{PointSet, SymbolicSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_pieces: usize,
    pub depth: usize,
    pub max_word_len: usize,
    /// Maximum number of candidate sides examined before giving up.
    pub max_candidates: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(ParadoxicalDecomposition),
    NoneWithinBounds { reason: String, bounds: SearchBounds },
}

// Atoms larger than this make the piece space unmanageable.
const MAX_ATOMS: usize = 20;

struct Space {
    atoms: Vec<PointSet>,
    translators: Vec<GroupElement>,
    // translated[t][a] = translators[t]·atoms[a]
    translated: Vec<Vec<PointSet>>,
}

impl Space {
    fn piece(&self, mask: u32) -> PointSet {
        let members = (0..self.atoms.len()).filter(|a| mask >> a & 1 == 1).map(|a| &self.atoms[a]);
        PointSet::union_all(members).expect("same universe").expect("nonempty mask")
    }

    fn translate(&self, mask: u32, t: usize) -> PointSet {
        let members = (0..self.atoms.len()).filter(|a| mask >> a & 1 == 1).map(|a| &self.translated[t][a]);
        PointSet::union_all(members).expect("same universe").expect("nonempty mask")
    }
}

/// One side: `(piece mask, translator index)` in increasing order.
type Side = Vec<(u32, usize)>;

struct Sides {
    choices: Vec<(u32, usize)>,
    images: Vec<PointSet>,
    full: PointSet,
    examined: usize,
    limit: usize,
    cache: HashMap<usize, Vec<Side>>,
}

impl Sides {
    fn new(space: &Space, full: PointSet, limit: usize) -> Sides {
        let choices: Vec<(u32, usize)> =
            (1u32..1 << space.atoms.len()).flat_map(|m| (0..space.translators.len()).map(move |t| (m, t))).collect();
        let images = choices.iter().map(|&(m, t)| space.translate(m, t)).collect();
        Sides { choices, images, full, examined: 0, limit, cache: HashMap::new() }
    }

    fn of_size(&mut self, k: usize) -> Result<&[Side]> {
        if !self.cache.contains_key(&k) {
            let mut out = Vec::new();
            let mut stack: Vec<usize> = Vec::new();
            self.grow(k, 0, 0, &mut stack, None, &mut out)?;
            self.cache.insert(k, out);
        }
        Ok(&self.cache[&k])
    }

    fn grow(
        &mut self,
        k: usize,
        from: usize,
        used: u32,
        stack: &mut Vec<usize>,
        cover: Option<PointSet>,
        out: &mut Vec<Side>,
    ) -> Result<()> {
        if stack.len() == k {
            self.examined += 1;
            if self.examined > self.limit {
                return Err(Error::BoundExceeded(format!("more than {} candidate sides", self.limit)));
            }
            if cover.as_ref().is_some_and(|c| c.set_eq(&self.full).expect("same universe")) {
                out.push(stack.iter().map(|&c| self.choices[c]).collect());
            }
            return Ok(());
        }
        for c in from..self.choices.len() {
            let mask = self.choices[c].0;
            if mask & used != 0 {
                continue;
            }
            let next = match &cover {
                None => self.images[c].clone(),
                Some(acc) => acc.union(&self.images[c])?,
            };
            stack.push(c);
            self.grow(k, c + 1, used | mask, stack, Some(next), out)?;
            stack.pop();
        }
        Ok(())
    }
}

fn mask_of(side: &Side) -> u32 {
    side.iter().fold(0, |acc, (m, _)| acc | m)
}

/// Searches by increasing total piece count, then by the size of the first
/// side, then in enumeration order of the sides. Finite and trivial actions
/// return no decomposition immediately.
pub fn bounded_paradox_search(action: &Action, bounds: SearchBounds) -> Result<SearchOutcome> {
    if bounds.max_pieces == 0 || bounds.depth == 0 || bounds.max_word_len == 0 {
        return Err(Error::Precondition("search bounds must be at least 1".into()));
    }
    let none = |reason: &str| Ok(SearchOutcome::NoneWithinBounds { reason: reason.to_string(), bounds });
    let rank = match action {
        Action::FreeSelf { rank } => *rank,
        Action::Trivial(_) => {
            return none("the action is trivial: g·A = A for every piece, so no cover can use disjoint pieces twice")
        }
        _ => return none(
            "a finite set admits no paradoxical decomposition: two covers by disjoint pieces need 2|X| > |X| points",
        ),
    };
    if bounds.max_pieces < super::MIN_PIECES {
        return none("fewer pieces than the universal minimum of 4");
    }

    let mut atoms = Vec::new();
    for w in FreeWord::all_up_to(rank, bounds.depth) {
        let set = if w.len() < bounds.depth { SymbolicSet::singleton(rank, &w)? } else { SymbolicSet::cone(rank, &w)? };
        atoms.push(PointSet::Symbolic(set));
    }
    if atoms.len() > MAX_ATOMS {
        return Err(Error::BoundExceeded(format!(
            "{} atoms at depth {} (limit {MAX_ATOMS})",
            atoms.len(),
            bounds.depth
        )));
    }
    let translators = action.element_candidates(bounds.max_word_len)?;
    let translated = translators
        .iter()
        .map(|g| atoms.iter().map(|a| action.act_on_set(g, a)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let space = Space { atoms, translators, translated };
    let mut sides = Sides::new(&space, action.full_set(), bounds.max_candidates);

    for total in 2..=bounds.max_pieces {
        for n in 1..total {
            if sides.of_size(n)?.is_empty() {
                continue;
            }
            let firsts = sides.of_size(n)?.to_vec();
            let seconds = sides.of_size(total - n)?.to_vec();
            for a in &firsts {
                let used = mask_of(a);
                for b in seconds.iter().filter(|b| mask_of(b) & used == 0) {
                    let build = |side: &Side| -> (Vec<PointSet>, Vec<GroupElement>) {
                        side.iter().map(|&(m, t)| (space.piece(m), space.translators[t].clone())).unzip()
                    };
                    let (a_pieces, a_translators) = build(a);
                    let (b_pieces, b_translators) = build(b);
                    let dec = ParadoxicalDecomposition { a_pieces, a_translators, b_pieces, b_translators };
                    if verify_decomposition(action, &dec, false).is_ok() {
                        return Ok(SearchOutcome::Found(dec));
                    }
                }
            }
        }
    }
    none("no decomposition within the bounds")
}
