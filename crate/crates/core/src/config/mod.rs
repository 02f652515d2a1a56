//! Configuration sets of a configuration pair and their cells.
//!
//! A configuration pair is a tuple `(g1, ..., gn)` of acting elements and an
//! ordered partition `(E1, ..., Em)`. A point `x` realizes the configuration
//! `(C0, C1, ..., Cn)` when `x ∈ E_C0` and `g_j·x ∈ E_Cj`. Block numbers in
//! configurations are one-based.

mod refine;

use std::fmt;

use crate::actions::{validate_partition, Action, Partition, PartitionViolation};
use crate::error::{Error, Result};
use crate::groups::GroupElement;
use crate::sets::{Point, PointSet};

pub use refine::{
    cardinality_probe, coarsen_solution, con_included, ordered_partitions, project_configuration, InclusionBounds,
    InclusionReport, PartitionFamily, Refinement,
};

/// `(C0, C1, ..., Cn)` with one-based block numbers.
pub type Configuration = Vec<usize>;

pub fn format_configuration(c: &[usize]) -> String {
    let parts: Vec<String> = c.iter().map(|i| i.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigurationPair {
    tuple: Vec<GroupElement>,
    partition: Partition,
}

impl ConfigurationPair {
    /// Normalizes the tuple for `action` and revalidates the partition.
    pub fn new(action: &Action, tuple: Vec<GroupElement>, partition: Partition) -> Result<ConfigurationPair> {
        if tuple.is_empty() {
            return Err(Error::InvalidPair("the tuple must have at least one element".into()));
        }
        let tuple = tuple.iter().map(|g| action.normalize(g)).collect::<Result<Vec<_>>>()?;
        let violations = validate_partition(action, partition.blocks());
        if !violations.is_empty() {
            let text: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            return Err(Error::InvalidPartition(text.join("; ")));
        }
        Ok(ConfigurationPair { tuple, partition })
    }

    pub fn tuple(&self) -> &[GroupElement] {
        &self.tuple
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Tuple length `n`.
    pub fn n(&self) -> usize {
        self.tuple.len()
    }

    /// Number of blocks `m`.
    pub fn m(&self) -> usize {
        self.partition.len()
    }
}

/// The realized configurations of a pair, sorted, with their base cells.
#[derive(Clone, Debug)]
pub struct ConfigurationSet {
    action: Action,
    pair: ConfigurationPair,
    configurations: Vec<Configuration>,
    cells: Vec<PointSet>,
}

impl ConfigurationSet {
    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn pair(&self) -> &ConfigurationPair {
        &self.pair
    }

    pub fn configurations(&self) -> &[Configuration] {
        &self.configurations
    }

    pub fn len(&self) -> usize {
        self.configurations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configurations.is_empty()
    }

    pub fn position(&self, c: &[usize]) -> Option<usize> {
        self.configurations.binary_search_by(|d| d.as_slice().cmp(c)).ok()
    }

    pub fn contains(&self, c: &[usize]) -> bool {
        self.position(c).is_some()
    }

    pub fn base_cell(&self, c: &[usize]) -> Option<&PointSet> {
        self.position(c).map(|k| &self.cells[k])
    }

    /// Drops the configurations rejected by `keep`. The result is generally
    /// no longer a valid configuration set; useful for exercising checks.
    pub fn retain(&mut self, mut keep: impl FnMut(&[usize]) -> bool) {
        let mut kept = Vec::new();
        let mut cells = Vec::new();
        for (c, x) in self.configurations.drain(..).zip(self.cells.drain(..)) {
            if keep(&c) {
                kept.push(c);
                cells.push(x);
            }
        }
        self.configurations = kept;
        self.cells = cells;
    }

    /// The cell `x_j(C)`: the base cell for `j = 0`, otherwise `g_j·x_0(C)`.
    pub fn cell(&self, c: &[usize], j: usize) -> Result<PointSet> {
        let base = self.base_cell(c).ok_or_else(|| Error::UnknownConfiguration(format_configuration(c)))?;
        if j > self.pair.n() {
            return Err(Error::CoordinateOutOfRange { index: j, len: self.pair.n() });
        }
        if j == 0 {
            Ok(base.clone())
        } else {
            self.action.act_on_set(&self.pair.tuple[j - 1], base)
        }
    }
}

/// Enumerates `{1..m}^(n+1)` in lexicographic order, keeping the
/// configurations whose base cell `E_C0 ∩ g1⁻¹E_C1 ∩ ... ∩ gn⁻¹E_Cn` is
/// nonempty. Prefixes with an empty partial intersection are pruned.
pub fn compute_configurations(action: &Action, pair: &ConfigurationPair) -> Result<ConfigurationSet> {
    let pair = ConfigurationPair::new(action, pair.tuple.clone(), pair.partition.clone())?;
    let blocks = pair.partition.blocks();
    let mut pulled: Vec<Vec<PointSet>> = Vec::with_capacity(pair.n());
    for g in &pair.tuple {
        let inv = action.invert(g)?;
        pulled.push(blocks.iter().map(|b| action.act_on_set(&inv, b)).collect::<Result<_>>()?);
    }

    let mut configurations = Vec::new();
    let mut cells = Vec::new();
    let mut prefix = Vec::with_capacity(pair.n() + 1);
    for (i, b) in blocks.iter().enumerate() {
        prefix.push(i + 1);
        extend(&pulled, b.clone(), &mut prefix, &mut configurations, &mut cells)?;
        prefix.pop();
    }
    Ok(ConfigurationSet { action: action.clone(), pair, configurations, cells })
}

fn extend(
    pulled: &[Vec<PointSet>],
    current: PointSet,
    prefix: &mut Vec<usize>,
    configurations: &mut Vec<Configuration>,
    cells: &mut Vec<PointSet>,
) -> Result<()> {
    if current.is_empty() {
        return Ok(());
    }
    let j = prefix.len() - 1;
    if j == pulled.len() {
        configurations.push(prefix.clone());
        cells.push(current);
        return Ok(());
    }
    for (i, b) in pulled[j].iter().enumerate() {
        prefix.push(i + 1);
        extend(pulled, current.intersection(b)?, prefix, configurations, cells)?;
        prefix.pop();
    }
    Ok(())
}

/// A failure of the cell identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellViolation {
    /// The cells `x_j(C)` for fixed `j` do not partition the universe.
    Coordinate { j: usize, violation: PartitionViolation },
    /// `E_i` differs from the union of the `x_j(C)` with `C_j = i`.
    Block { j: usize, block: usize, witness: Point },
}

impl fmt::Display for CellViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellViolation::Coordinate { j, violation } => write!(f, "coordinate {j}: {violation}"),
            CellViolation::Block { j, block, witness } => {
                write!(f, "coordinate {j}: block {block} and its cells differ at {witness}")
            }
        }
    }
}

/// For every coordinate `j`: the cells `x_j(C)` partition the universe and
/// `E_i` is the union of the cells with `C_j = i`.
pub fn verify_cell_partition(cs: &ConfigurationSet) -> Result<Vec<CellViolation>> {
    let mut violations = Vec::new();
    let blocks = cs.pair.partition.blocks();
    for j in 0..=cs.pair.n() {
        let cells = cs.configurations.iter().map(|c| cs.cell(c, j)).collect::<Result<Vec<_>>>()?;
        violations.extend(
            validate_partition(&cs.action, &cells)
                .into_iter()
                .map(|violation| CellViolation::Coordinate { j, violation }),
        );
        for (i, block) in blocks.iter().enumerate() {
            let mut union = cs.action.empty_set();
            for (c, x) in cs.configurations.iter().zip(&cells) {
                if c[j] == i + 1 {
                    union = union.union(x)?;
                }
            }
            let witness = match block.missing_from(&union)? {
                Some(w) => Some(w),
                None => union.missing_from(block)?,
            };
            if let Some(witness) = witness {
                violations.push(CellViolation::Block { j, block: i + 1, witness });
            }
        }
    }
    Ok(violations)
}
