use std::fmt;

use super::Action;
use crate::error::{Error, Result};
use crate::sets::{Point, PointSet};

/// A way a list of blocks fails to partition the universe.
/// Block numbers are one-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionViolation {
    NoBlocks,
    IncompatibleBlock { block: usize },
    EmptyBlock { block: usize },
    Overlap { first: usize, second: usize, witness: Point },
    CoverGap { witness: Point },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionViolation::NoBlocks => write!(f, "no blocks"),
            PartitionViolation::IncompatibleBlock { block } => {
                write!(f, "block {block} does not belong to the action's universe")
            }
            PartitionViolation::EmptyBlock { block } => write!(f, "block {block} is empty"),
            PartitionViolation::Overlap { first, second, witness } => {
                write!(f, "blocks {first} and {second} overlap at {witness}")
            }
            PartitionViolation::CoverGap { witness } => write!(f, "cover gap at {witness}"),
        }
    }
}

/// Checks that `blocks` are nonempty, pairwise disjoint and cover the
/// universe. Every violation found is reported.
pub fn validate_partition(action: &Action, blocks: &[PointSet]) -> Vec<PartitionViolation> {
    if blocks.is_empty() {
        return vec![PartitionViolation::NoBlocks];
    }
    let mut violations = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        if action.check_set(b).is_err() {
            violations.push(PartitionViolation::IncompatibleBlock { block: i + 1 });
        } else if b.is_empty() {
            violations.push(PartitionViolation::EmptyBlock { block: i + 1 });
        }
    }
    if !violations.is_empty() {
        return violations;
    }
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if let Some(witness) = blocks[i].overlap_with(&blocks[j]).expect("checked universes") {
                violations.push(PartitionViolation::Overlap { first: i + 1, second: j + 1, witness });
            }
        }
    }
    let union = PointSet::union_all(blocks).expect("checked universes").expect("nonempty");
    if let Some(witness) = action.full_set().missing_from(&union).expect("checked universes") {
        violations.push(PartitionViolation::CoverGap { witness });
    }
    violations
}

/// An ordered partition `(E1, ..., Em)` of an action's universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<PointSet>,
}

impl Partition {
    pub fn new(action: &Action, blocks: Vec<PointSet>) -> Result<Partition> {
        let violations = validate_partition(action, &blocks);
        if violations.is_empty() {
            Ok(Partition { blocks })
        } else {
            let text: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            Err(Error::InvalidPartition(text.join("; ")))
        }
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block with one-based number `i`.
    pub fn block(&self, i: usize) -> &PointSet {
        &self.blocks[i - 1]
    }

    /// One-based number of the block containing `x`.
    pub fn block_of(&self, x: &Point) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(x)).map(|i| i + 1)
    }

    /// Whether every block of `self` lies inside a block of `coarse`; returns
    /// the containing block numbers.
    pub fn refinement_map(&self, coarse: &Partition) -> Result<Vec<usize>> {
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                for (j, c) in coarse.blocks.iter().enumerate() {
                    if b.is_subset(c)? {
                        return Ok(j + 1);
                    }
                }
                Err(Error::NotARefinement(format!("block {} lies in no coarse block", i + 1)))
            })
            .collect()
    }

    pub fn set_eq(&self, other: &Partition) -> Result<bool> {
        if self.len() != other.len() {
            return Ok(false);
        }
        for (a, b) in self.blocks.iter().zip(&other.blocks) {
            if !a.set_eq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
