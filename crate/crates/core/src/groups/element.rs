use std::fmt;

use super::{FreeWord, Permutation};
use crate::error::{Error, Result};

/// An element of one of the two supported universes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElement {
    Word(FreeWord),
    Perm(Permutation),
}

impl GroupElement {
    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        match (self, other) {
            (GroupElement::Word(x), GroupElement::Word(y)) => Ok(GroupElement::Word(x.multiply(y))),
            (GroupElement::Perm(x), GroupElement::Perm(y)) => Ok(GroupElement::Perm(x.compose(y)?)),
            _ => Err(Error::UniverseMismatch),
        }
    }

    pub fn invert(&self) -> GroupElement {
        match self {
            GroupElement::Word(w) => GroupElement::Word(w.inverse()),
            GroupElement::Perm(p) => GroupElement::Perm(p.inverse()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Word(w) => w.is_identity(),
            GroupElement::Perm(p) => p.is_identity(),
        }
    }

    pub fn as_word(&self) -> Option<&FreeWord> {
        match self {
            GroupElement::Word(w) => Some(w),
            GroupElement::Perm(_) => None,
        }
    }

    pub fn as_perm(&self) -> Option<&Permutation> {
        match self {
            GroupElement::Perm(p) => Some(p),
            GroupElement::Word(_) => None,
        }
    }
}

impl From<FreeWord> for GroupElement {
    fn from(w: FreeWord) -> Self {
        GroupElement::Word(w)
    }
}

impl From<Permutation> for GroupElement {
    fn from(p: Permutation) -> Self {
        GroupElement::Perm(p)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Word(w) => w.fmt(f),
            GroupElement::Perm(p) => p.fmt(f),
        }
    }
}

/// Images of the free generators in a symmetric group of fixed degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment {
    degree: usize,
    images: Vec<Permutation>,
}

impl Assignment {
    pub fn new(degree: usize, images: Vec<Permutation>) -> Result<Assignment> {
        if let Some(p) = images.iter().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, p.degree()));
        }
        Ok(Assignment { degree, images })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }
}

/// Image of `w` under the homomorphism determined by `assignment`.
///
/// `w = g1 g2 ... gk` evaluates to `φ(g1) ∘ φ(g2) ∘ ... ∘ φ(gk)`, so the
/// rightmost letter acts first, matching a left action.
pub fn evaluate_word(assignment: &Assignment, w: &FreeWord) -> Result<Permutation> {
    let mut acc = Permutation::identity(assignment.degree);
    for l in w.letters() {
        let g = assignment.images.get(l.generator()).ok_or(Error::UnassignedGenerator(l.generator() + 1))?;
        let factor = if l.is_inverse() { g.inverse() } else { g.clone() };
        acc = acc.compose(&factor)?;
    }
    Ok(acc)
}
