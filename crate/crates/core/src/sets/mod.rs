//! Subsets of action universes: bitsets for finite actions and automata for
//! the free-word universe.

mod dfa;
mod finite;
mod symbolic;

use std::fmt;

pub use finite::FiniteSet;
pub use symbolic::{BaseKind, Relation, SetOp, SymbolicSet};

use crate::error::{Error, Result};
use crate::groups::FreeWord;

/// A point of an action's universe.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Index(usize),
    Word(FreeWord),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Index(i) => write!(f, "{i}"),
            Point::Word(w) => write!(f, "{w}"),
        }
    }
}

/// A subset of an action's universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointSet {
    Finite(FiniteSet),
    Symbolic(SymbolicSet),
}

macro_rules! binary {
    ($name:ident) => {
        pub fn $name(&self, other: &PointSet) -> Result<PointSet> {
            match (self, other) {
                (PointSet::Finite(a), PointSet::Finite(b)) => Ok(PointSet::Finite(a.$name(b)?)),
                (PointSet::Symbolic(a), PointSet::Symbolic(b)) => Ok(PointSet::Symbolic(a.$name(b)?)),
                _ => Err(Error::IncompatibleSet),
            }
        }
    };
}

impl PointSet {
    binary!(union);
    binary!(intersection);
    binary!(difference);

    pub fn complement(&self) -> PointSet {
        match self {
            PointSet::Finite(a) => PointSet::Finite(a.complement()),
            PointSet::Symbolic(a) => PointSet::Symbolic(a.complement()),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            PointSet::Finite(a) => a.is_empty(),
            PointSet::Symbolic(a) => a.is_empty(),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match (self, p) {
            (PointSet::Finite(a), Point::Index(i)) => *i < a.degree() && a.contains(*i),
            (PointSet::Symbolic(a), Point::Word(w)) => a.contains(w),
            _ => false,
        }
    }

    /// Least member: smallest index, or shortest-then-least word.
    pub fn first_point(&self) -> Option<Point> {
        match self {
            PointSet::Finite(a) => a.first().map(Point::Index),
            PointSet::Symbolic(a) => a.shortest_member().map(Point::Word),
        }
    }

    /// Least member of `self \ other`, if any.
    pub fn missing_from(&self, other: &PointSet) -> Result<Option<Point>> {
        Ok(self.difference(other)?.first_point())
    }

    /// Least member of `self ∩ other`, if any.
    pub fn overlap_with(&self, other: &PointSet) -> Result<Option<Point>> {
        Ok(self.intersection(other)?.first_point())
    }

    pub fn is_subset(&self, other: &PointSet) -> Result<bool> {
        Ok(self.missing_from(other)?.is_none())
    }

    pub fn is_disjoint(&self, other: &PointSet) -> Result<bool> {
        Ok(self.overlap_with(other)?.is_none())
    }

    /// Exact extensional equality; errors on mixed universes.
    pub fn set_eq(&self, other: &PointSet) -> Result<bool> {
        match (self, other) {
            (PointSet::Finite(a), PointSet::Finite(b)) => Ok(a == b),
            (PointSet::Symbolic(a), PointSet::Symbolic(b)) => Ok(a == b),
            _ => Err(Error::IncompatibleSet),
        }
    }

    /// Number of points, `None` for symbolic sets.
    pub fn finite_len(&self) -> Option<usize> {
        match self {
            PointSet::Finite(a) => Some(a.len()),
            PointSet::Symbolic(_) => None,
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteSet> {
        match self {
            PointSet::Finite(a) => Some(a),
            PointSet::Symbolic(_) => None,
        }
    }

    pub fn as_symbolic(&self) -> Option<&SymbolicSet> {
        match self {
            PointSet::Symbolic(a) => Some(a),
            PointSet::Finite(_) => None,
        }
    }

    /// Union of a nonempty list of sets.
    pub fn union_all<'a>(sets: impl IntoIterator<Item = &'a PointSet>) -> Result<Option<PointSet>> {
        let mut acc: Option<PointSet> = None;
        for s in sets {
            acc = Some(match acc {
                None => s.clone(),
                Some(a) => a.union(s)?,
            });
        }
        Ok(acc)
    }
}

impl From<FiniteSet> for PointSet {
    fn from(s: FiniteSet) -> Self {
        PointSet::Finite(s)
    }
}

impl From<SymbolicSet> for PointSet {
    fn from(s: SymbolicSet) -> Self {
        PointSet::Symbolic(s)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointSet::Finite(a) => {
                write!(f, "{{")?;
                for (i, p) in a.points().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, "}}")
            }
            PointSet::Symbolic(a) => a.fmt(f),
        }
    }
}
