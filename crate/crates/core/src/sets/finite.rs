use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of the points `0..degree` of a finite action.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSet {
    bits: FixedBitSet,
}

impl FiniteSet {
    pub fn empty(degree: usize) -> FiniteSet {
        FiniteSet { bits: FixedBitSet::with_capacity(degree) }
    }

    pub fn full(degree: usize) -> FiniteSet {
        let mut bits = FixedBitSet::with_capacity(degree);
        bits.insert_range(..);
        FiniteSet { bits }
    }

    pub fn from_points(degree: usize, points: impl IntoIterator<Item = usize>) -> Result<FiniteSet> {
        let mut set = FiniteSet::empty(degree);
        for p in points {
            if p >= degree {
                return Err(Error::IncompatiblePoint(format!("{p} (degree {degree})")));
            }
            set.bits.insert(p);
        }
        Ok(set)
    }

    pub fn degree(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.bits.contains(p)
    }

    pub fn insert(&mut self, p: usize) {
        self.bits.insert(p);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn points(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.ones().next()
    }

    fn same_degree(&self, other: &FiniteSet) -> Result<()> {
        if self.degree() != other.degree() {
            Err(Error::DegreeMismatch(self.degree(), other.degree()))
        } else {
            Ok(())
        }
    }

    pub fn union(&self, other: &FiniteSet) -> Result<FiniteSet> {
        self.same_degree(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(FiniteSet { bits })
    }

    pub fn intersection(&self, other: &FiniteSet) -> Result<FiniteSet> {
        self.same_degree(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(FiniteSet { bits })
    }

    pub fn difference(&self, other: &FiniteSet) -> Result<FiniteSet> {
        self.same_degree(other)?;
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Ok(FiniteSet { bits })
    }

    pub fn complement(&self) -> FiniteSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        FiniteSet { bits }
    }

    /// Image under a point map.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> FiniteSet {
        let mut out = FiniteSet::empty(self.degree());
        for p in self.bits.ones() {
            out.bits.insert(f(p));
        }
        out
    }
}
