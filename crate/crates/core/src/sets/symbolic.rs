//! Exact subsets of a free group.
//!
//! A [`SymbolicSet`] is a regular set of reduced words stored as its minimal
//! automaton over the signed alphabet. Cones, singletons and their boolean
//! combinations are all regular, and so are their left translates, so every
//! operation here is exact and equality is structural.

use std::fmt;

use super::dfa::{Dfa, Nfa};
use crate::error::{Error, Result};
use crate::groups::{FreeWord, Letter, MAX_RANK};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseKind {
    /// All reduced words with the given prefix, the prefix included.
    Cone,
    Singleton,
    Full,
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    Complement,
    Difference,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolicSet {
    rank: usize,
    dfa: Dfa,
}

/// Outcome of [`SymbolicSet::compare`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub equal: bool,
    pub subset: bool,
    pub disjoint: bool,
    /// Whether the left operand is empty.
    pub empty: bool,
    /// Shortest, then least, member of the left operand missing from the right.
    pub subset_witness: Option<FreeWord>,
    /// Shortest, then least, common member.
    pub overlap_witness: Option<FreeWord>,
}

impl SymbolicSet {
    fn from_dfa(rank: usize, dfa: &Dfa) -> SymbolicSet {
        let reduced = Dfa::reduced_words(2 * rank);
        SymbolicSet { rank, dfa: dfa.product(&reduced, |a, b| a && b).canonical() }
    }

    fn check_rank(rank: usize) -> Result<()> {
        if rank > MAX_RANK {
            Err(Error::RankTooLarge(rank))
        } else {
            Ok(())
        }
    }

    fn check_word(rank: usize, w: &FreeWord) -> Result<()> {
        match w.letters().iter().find(|l| l.generator() >= rank) {
            Some(l) => Err(Error::GeneratorOutOfRange { index: l.generator() + 1, rank }),
            None => Ok(()),
        }
    }

    pub fn make_base(rank: usize, kind: BaseKind, w: &FreeWord) -> Result<SymbolicSet> {
        Self::check_rank(rank)?;
        Self::check_word(rank, w)?;
        let alphabet = 2 * rank;
        let mut nfa = Nfa::new();
        match kind {
            BaseKind::Empty => {}
            BaseKind::Full => {
                nfa.set_accepting(0);
                for l in 0..alphabet {
                    nfa.add_move(0, l, 0);
                }
            }
            BaseKind::Singleton => {
                let letters: Vec<usize> = w.letters().iter().map(|l| l.index()).collect();
                let end = nfa.add_path(0, &letters);
                nfa.set_accepting(end);
            }
            BaseKind::Cone => {
                let letters: Vec<usize> = w.letters().iter().map(|l| l.index()).collect();
                let end = nfa.add_path(0, &letters);
                nfa.set_accepting(end);
                for l in 0..alphabet {
                    nfa.add_move(end, l, end);
                }
            }
        }
        Ok(Self::from_dfa(rank, &nfa.determinize(alphabet)))
    }

    pub fn cone(rank: usize, w: &FreeWord) -> Result<SymbolicSet> {
        Self::make_base(rank, BaseKind::Cone, w)
    }

    pub fn singleton(rank: usize, w: &FreeWord) -> Result<SymbolicSet> {
        Self::make_base(rank, BaseKind::Singleton, w)
    }

    pub fn full(rank: usize) -> SymbolicSet {
        Self::make_base(rank, BaseKind::Full, &FreeWord::identity()).expect("rank checked by caller")
    }

    pub fn empty(rank: usize) -> SymbolicSet {
        SymbolicSet { rank, dfa: Dfa::empty(2 * rank) }
    }

    /// A finite set of words.
    pub fn from_words<'a>(rank: usize, words: impl IntoIterator<Item = &'a FreeWord>) -> Result<SymbolicSet> {
        Self::check_rank(rank)?;
        let mut nfa = Nfa::new();
        for w in words {
            Self::check_word(rank, w)?;
            let letters: Vec<usize> = w.letters().iter().map(|l| l.index()).collect();
            let end = nfa.add_path(0, &letters);
            nfa.set_accepting(end);
        }
        Ok(Self::from_dfa(rank, &nfa.determinize(2 * rank)))
    }

    /// `{ a^n : n >= 0 }` when `nonnegative`, otherwise `{ a^-n : n >= 1 }`.
    pub fn powers(rank: usize, a: &FreeWord, nonnegative: bool) -> Result<SymbolicSet> {
        Self::check_rank(rank)?;
        Self::check_word(rank, a)?;
        if a.is_identity() {
            return if nonnegative { Self::singleton(rank, a) } else { Ok(Self::empty(rank)) };
        }
        // a = u c u^-1 with c cyclically reduced; a^n = u c^n u^-1 is reduced.
        let letters = a.letters();
        let mut k = 0;
        while 2 * (k + 1) < letters.len() && letters[k] == letters[letters.len() - 1 - k].inverse() {
            k += 1;
        }
        let u: Vec<usize> = letters[..k].iter().map(|l| l.index()).collect();
        let core = &letters[k..letters.len() - k];
        let c: Vec<usize> = if nonnegative {
            core.iter().map(|l| l.index()).collect()
        } else {
            core.iter().rev().map(|l| l.inverse().index()).collect()
        };
        let u_inv: Vec<usize> = letters[..k].iter().rev().map(|l| l.inverse().index()).collect();

        let mut nfa = Nfa::new();
        if nonnegative {
            let identity = nfa.add_state(true);
            nfa.add_epsilon(0, identity);
        }
        let loop_start = nfa.add_path(0, &u);
        let loop_end = nfa.add_path(loop_start, &c);
        nfa.add_epsilon(loop_end, loop_start);
        let end = nfa.add_path(loop_end, &u_inv);
        nfa.set_accepting(end);
        Ok(Self::from_dfa(rank, &nfa.determinize(2 * rank)))
    }

    /// Builds a set from a raw complete automaton (start state 0), keeping
    /// only reduced words.
    pub fn from_automaton(rank: usize, transitions: Vec<Vec<usize>>, accepting: &[usize]) -> Result<SymbolicSet> {
        Self::check_rank(rank)?;
        let alphabet = 2 * rank;
        let n = transitions.len();
        if n == 0 {
            return Err(Error::Precondition("automaton needs at least one state".into()));
        }
        let mut trans = Vec::with_capacity(n * alphabet);
        for (s, row) in transitions.into_iter().enumerate() {
            if row.len() != alphabet {
                return Err(Error::Precondition(format!(
                    "state {s} has {} transitions, expected {alphabet}",
                    row.len()
                )));
            }
            if let Some(t) = row.iter().find(|&&t| t >= n) {
                return Err(Error::Precondition(format!("state {s} has transition to unknown state {t}")));
            }
            trans.extend(row);
        }
        let mut accept = vec![false; n];
        for &s in accepting {
            *accept.get_mut(s).ok_or_else(|| Error::Precondition(format!("unknown accepting state {s}")))? = true;
        }
        Ok(Self::from_dfa(rank, &Dfa::from_parts(alphabet, trans, accept)))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn state_count(&self) -> usize {
        self.dfa.state_count()
    }

    /// Canonical transition table, one row of `2 * rank` targets per state.
    pub fn transition_table(&self) -> Vec<Vec<usize>> {
        self.dfa.transitions().chunks(2 * self.rank.max(1)).map(|c| c.to_vec()).collect()
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.dfa.state_count()).filter(|&s| self.dfa.is_accepting(s)).collect()
    }

    pub fn contains(&self, w: &FreeWord) -> bool {
        w.min_rank() <= self.rank && self.dfa.accepts(w.letters().iter().map(|l| l.index()))
    }

    pub fn is_empty(&self) -> bool {
        self.dfa.is_empty()
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.rank)
    }

    fn same_rank(&self, other: &SymbolicSet) -> Result<()> {
        if self.rank != other.rank {
            Err(Error::RankMismatch(self.rank, other.rank))
        } else {
            Ok(())
        }
    }

    fn zip(&self, other: &SymbolicSet, f: impl Fn(bool, bool) -> bool) -> Result<SymbolicSet> {
        self.same_rank(other)?;
        Ok(SymbolicSet { rank: self.rank, dfa: self.dfa.product(&other.dfa, f).canonical() })
    }

    pub fn union(&self, other: &SymbolicSet) -> Result<SymbolicSet> {
        self.zip(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &SymbolicSet) -> Result<SymbolicSet> {
        self.zip(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &SymbolicSet) -> Result<SymbolicSet> {
        self.zip(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> SymbolicSet {
        Self::from_dfa(self.rank, &self.dfa.complement())
    }

    /// Union and intersection fold over one or more operands, complement
    /// takes exactly one, difference takes exactly two.
    pub fn combine(op: SetOp, operands: &[&SymbolicSet]) -> Result<SymbolicSet> {
        let arity_error = |expected: &str| {
            Error::Precondition(format!("{op:?} expects {expected} operand(s), got {}", operands.len()))
        };
        match op {
            SetOp::Complement => match operands {
                [s] => Ok(s.complement()),
                _ => Err(arity_error("1")),
            },
            SetOp::Difference => match operands {
                [a, b] => a.difference(b),
                _ => Err(arity_error("2")),
            },
            SetOp::Union | SetOp::Intersection => {
                let (first, rest) = operands.split_first().ok_or_else(|| arity_error("at least 1"))?;
                rest.iter().try_fold((*first).clone(), |acc, s| {
                    if op == SetOp::Union {
                        acc.union(s)
                    } else {
                        acc.intersection(s)
                    }
                })
            }
        }
    }

    /// `x · self` for a single letter `x`.
    ///
    /// A reduced `v` lies in `x·S` iff the reduction of `x⁻¹v` lies in `S`:
    /// if `v = x v'` that reduction is `v'`, otherwise it is `x⁻¹ v` itself.
    /// The new start state encodes exactly that case split.
    fn translate_letter(&self, x: Letter) -> SymbolicSet {
        let alphabet = 2 * self.rank;
        let old = &self.dfa;
        let n = old.state_count();
        let after_inverse = old.next(0, x.inverse().index());
        let mut trans = Vec::with_capacity((n + 1) * alphabet);
        let mut accept = Vec::with_capacity(n + 1);
        accept.push(old.is_accepting(after_inverse));
        for l in 0..alphabet {
            let target = if l == x.index() { 0 } else { old.next(after_inverse, l) };
            trans.push(target + 1);
        }
        for s in 0..n {
            accept.push(old.is_accepting(s));
            for l in 0..alphabet {
                trans.push(old.next(s, l) + 1);
            }
        }
        Self::from_dfa(self.rank, &Dfa::from_parts(alphabet, trans, accept))
    }

    /// Left translate `g · self`.
    pub fn translate(&self, g: &FreeWord) -> Result<SymbolicSet> {
        Self::check_word(self.rank, g)?;
        Ok(g.letters().iter().rev().fold(self.clone(), |s, &l| s.translate_letter(l)))
    }

    pub fn is_subset(&self, other: &SymbolicSet) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn compare(&self, other: &SymbolicSet) -> Result<Relation> {
        let missing = self.difference(other)?.shortest_member();
        let overlap = self.intersection(other)?.shortest_member();
        Ok(Relation {
            equal: self == other,
            subset: missing.is_none(),
            disjoint: overlap.is_none(),
            empty: self.is_empty(),
            subset_witness: missing,
            overlap_witness: overlap,
        })
    }

    pub fn shortest_member(&self) -> Option<FreeWord> {
        self.dfa.shortest_accepted().map(|letters| self.word_of(&letters))
    }

    fn word_of(&self, letters: &[usize]) -> FreeWord {
        FreeWord::reduce(self.rank, letters.iter().map(|&l| Letter::from_index(l)))
            .expect("automaton letters are within rank")
    }

    /// Members of length at most `max_len`, in shortlex order.
    pub fn enumerate_up_to(&self, max_len: usize) -> Vec<FreeWord> {
        let live = self.dfa.live_states();
        let mut out = Vec::new();
        let mut frontier: Vec<(Vec<usize>, usize)> = Vec::new();
        if live[0] {
            frontier.push((Vec::new(), 0));
        }
        for len in 0..=max_len {
            for (letters, state) in &frontier {
                if self.dfa.is_accepting(*state) {
                    out.push(self.word_of(letters));
                }
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for (letters, state) in &frontier {
                for l in 0..2 * self.rank {
                    let t = self.dfa.next(*state, l);
                    if live[t] {
                        let mut ext = letters.clone();
                        ext.push(l);
                        next.push((ext, t));
                    }
                }
            }
            frontier = next;
        }
        out
    }
}

impl fmt::Display for SymbolicSet {
    /// Shows the members up to length 3, with an ellipsis if there are more.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self.enumerate_up_to(3);
        let more = self
            .difference(&Self::from_words(self.rank, &shown).expect("same rank"))
            .map(|d| !d.is_empty())
            .unwrap_or(false);
        write!(f, "{{")?;
        for (i, w) in shown.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        if more {
            write!(f, "{}...", if shown.is_empty() { "" } else { ", " })?;
        }
        write!(f, "}}")
    }
}
