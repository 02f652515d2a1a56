//! Refinement of configuration pairs, coarsening of solutions and bounded
//! comparison of configuration data across actions.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use super::{compute_configurations, format_configuration, Configuration, ConfigurationPair, ConfigurationSet};
use crate::actions::{validate_partition, Action, Partition};
use crate::equations::{build_equations, verify_solution, Rational};
use crate::error::{Error, Result};
use crate::groups::{FreeWord, GroupElement};
use crate::sets::{FiniteSet, Point, PointSet};

/// How a fine pair refines a coarse one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Refinement {
    /// Same tuple, finer partition: `C ≪ D` replaces each block by the
    /// coarse block containing it.
    Partition,
    /// Same partition, longer tuple: `D ⪯ C` truncates.
    String,
    /// Both at once, taken as partition mode followed by string mode.
    Composite,
}

struct Projection {
    block_map: Vec<usize>,
    keep: usize,
    fine_len: usize,
}

impl Projection {
    fn new(mode: Refinement, fine: &ConfigurationPair, coarse: &ConfigurationPair) -> Result<Projection> {
        let (cn, fn_) = (coarse.n(), fine.n());
        let block_map = match mode {
            Refinement::String => {
                if !fine.partition().set_eq(coarse.partition())? {
                    return Err(Error::NotARefinement("string mode needs identical partitions".into()));
                }
                (1..=fine.m()).collect()
            }
            _ => fine.partition().refinement_map(coarse.partition())?,
        };
        let tuple_ok = match mode {
            Refinement::Partition => fine.tuple() == coarse.tuple(),
            _ => cn <= fn_ && fine.tuple()[..cn] == *coarse.tuple(),
        };
        if !tuple_ok {
            let what = if mode == Refinement::Partition { "identical tuples" } else { "the coarse tuple as a prefix" };
            return Err(Error::NotARefinement(format!("{mode:?} mode needs {what}").to_lowercase()));
        }
        Ok(Projection { block_map, keep: cn + 1, fine_len: fn_ + 1 })
    }

    fn apply(&self, c: &[usize]) -> Result<Configuration> {
        if c.len() != self.fine_len || c.iter().any(|&i| i == 0 || i > self.block_map.len()) {
            return Err(Error::UnknownConfiguration(format_configuration(c)));
        }
        Ok(c[..self.keep].iter().map(|&i| self.block_map[i - 1]).collect())
    }
}

/// The configuration of the coarse pair determined by a fine configuration.
pub fn project_configuration(
    mode: Refinement,
    fine: &ConfigurationPair,
    coarse: &ConfigurationPair,
    c: &[usize],
) -> Result<Configuration> {
    Projection::new(mode, fine, coarse)?.apply(c)
}

fn sum_over_fibres(
    mode: Refinement,
    fine: &ConfigurationSet,
    coarse: &ConfigurationSet,
    z: &[Rational],
) -> Result<Vec<Rational>> {
    let proj = Projection::new(mode, fine.pair(), coarse.pair())?;
    let mut out = vec![Rational::zero(); coarse.len()];
    for (c, value) in fine.configurations().iter().zip(z) {
        let d = proj.apply(c)?;
        let k = coarse.position(&d).ok_or_else(|| {
            Error::NotARefinement(format!(
                "{} projects to unrealized {}",
                format_configuration(c),
                format_configuration(&d)
            ))
        })?;
        out[k] += value;
    }
    Ok(out)
}

/// Pushes a normalized solution of the fine system down to the coarse one
/// by summing over the configurations projecting to each coarse
/// configuration. The input is verified first and the output afterwards.
pub fn coarsen_solution(
    mode: Refinement,
    fine: &ConfigurationSet,
    coarse: &ConfigurationSet,
    z: &[Rational],
) -> Result<Vec<Rational>> {
    if fine.action() != coarse.action() {
        return Err(Error::NotARefinement("configuration sets belong to different actions".into()));
    }
    if let Err(v) = verify_solution(&build_equations(fine), z) {
        return Err(Error::InvalidSolution(v.to_string()));
    }
    let out = match mode {
        Refinement::Composite => {
            let mid_pair =
                ConfigurationPair::new(fine.action(), fine.pair().tuple().to_vec(), coarse.pair().partition().clone())?;
            let mid = compute_configurations(fine.action(), &mid_pair)?;
            let z_mid = sum_over_fibres(Refinement::Partition, fine, &mid, z)?;
            sum_over_fibres(Refinement::String, &mid, coarse, &z_mid)?
        }
        _ => sum_over_fibres(mode, fine, coarse, z)?,
    };
    if let Err(v) = verify_solution(&build_equations(coarse), &out) {
        return Err(Error::InvalidSolution(format!("coarsened vector fails: {v}")));
    }
    Ok(out)
}

/// Limits for [`con_included`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InclusionBounds {
    pub max_tuple_len: usize,
    pub max_word_len: usize,
    /// Only used for generated partition families.
    pub max_blocks: usize,
}

/// Candidate partitions for one side of a comparison.
#[derive(Clone, Debug)]
pub enum PartitionFamily {
    /// Every partition of a finite universe into at most `max_blocks` blocks.
    Generated,
    Given(Vec<Partition>),
}

#[derive(Clone, Debug)]
pub enum InclusionReport {
    /// Every pair of the first action within bounds has a match.
    Included { pairs_checked: usize, bounds: InclusionBounds },
    /// A pair of the first action whose configuration set no pair of the
    /// second action within bounds reproduces.
    Counterexample {
        tuple: Vec<GroupElement>,
        partition: Partition,
        configurations: Vec<Configuration>,
        bounds: InclusionBounds,
    },
}

/// Set partitions of `0..n` into at most `max_blocks` blocks, blocks ordered
/// by least element.
fn set_partitions(n: usize, max_blocks: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(x: usize, n: usize, max_blocks: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if x == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(x);
            go(x + 1, n, max_blocks, cur, out);
            cur[b].pop();
        }
        if cur.len() < max_blocks {
            cur.push(vec![x]);
            go(x + 1, n, max_blocks, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, max_blocks, &mut Vec::new(), &mut out);
    out
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first.clone());
            out.push(tail);
        }
    }
    out
}

/// All ordered partitions of a finite action's universe into at most
/// `max_blocks` nonempty blocks.
pub fn ordered_partitions(action: &Action, max_blocks: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for p in family(action, &PartitionFamily::Generated, max_blocks)? {
        for blocks in permutations(p.blocks()) {
            out.push(Partition::new(action, blocks)?);
        }
    }
    Ok(out)
}

fn family(action: &Action, fam: &PartitionFamily, max_blocks: usize) -> Result<Vec<Partition>> {
    match fam {
        PartitionFamily::Given(ps) => Ok(ps.clone()),
        PartitionFamily::Generated => {
            let n = action.degree().ok_or_else(|| {
                Error::Precondition("partition families of infinite universes must be supplied".into())
            })?;
            set_partitions(n, max_blocks)
                .into_iter()
                .map(|blocks| {
                    let sets = blocks
                        .into_iter()
                        .map(|b| FiniteSet::from_points(n, b).map(PointSet::Finite))
                        .collect::<Result<Vec<_>>>()?;
                    Partition::new(action, sets)
                })
                .collect()
        }
    }
}

fn tuples(elements: &[GroupElement], max_len: usize) -> Vec<Vec<GroupElement>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<GroupElement>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer =
            layer.iter().flat_map(|t| elements.iter().map(move |g| [t.clone(), vec![g.clone()]].concat())).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Bounded check that every configuration set of `a` is a configuration set
/// of `b`.
///
/// Pairs of `a` range over tuples of length at most `max_tuple_len` built from
/// words of length at most `max_word_len`, and over `family_a`. Pairs of `b`
/// range over the same tuple bounds and over every ordering of the blocks of
/// each partition in `family_b`. Never claims inclusion beyond the bounds.
pub fn con_included(
    a: &Action,
    family_a: &PartitionFamily,
    b: &Action,
    family_b: &PartitionFamily,
    bounds: InclusionBounds,
) -> Result<InclusionReport> {
    let parts_a = family(a, family_a, bounds.max_blocks)?;
    let mut parts_b: Vec<Partition> = Vec::new();
    for p in family(b, family_b, bounds.max_blocks)? {
        for blocks in permutations(p.blocks()) {
            parts_b.push(Partition::new(b, blocks)?);
        }
    }
    let tuples_a = tuples(&a.element_candidates(bounds.max_word_len)?, bounds.max_tuple_len);
    let tuples_b = tuples(&b.element_candidates(bounds.max_word_len)?, bounds.max_tuple_len);

    // Configuration sets of b keyed by (tuple length, block count), built on demand.
    let mut known: HashMap<(usize, usize), BTreeSet<Vec<Configuration>>> = HashMap::new();
    let mut pairs_checked = 0;
    for partition in &parts_a {
        for tuple in &tuples_a {
            let pair = ConfigurationPair::new(a, tuple.clone(), partition.clone())?;
            let configurations = compute_configurations(a, &pair)?.configurations().to_vec();
            let key = (tuple.len(), partition.len());
            if !known.contains_key(&key) {
                let mut sets = BTreeSet::new();
                for pb in parts_b.iter().filter(|p| p.len() == key.1) {
                    for tb in tuples_b.iter().filter(|t| t.len() == key.0) {
                        let pair_b = ConfigurationPair::new(b, tb.clone(), pb.clone())?;
                        sets.insert(compute_configurations(b, &pair_b)?.configurations().to_vec());
                    }
                }
                known.insert(key, sets);
            }
            pairs_checked += 1;
            if !known[&key].contains(&configurations) {
                return Ok(InclusionReport::Counterexample {
                    tuple: tuple.clone(),
                    partition: partition.clone(),
                    configurations,
                    bounds,
                });
            }
        }
    }
    Ok(InclusionReport::Included { pairs_checked, bounds })
}

/// Whether the universe splits into `n` nonempty blocks, decided by building
/// `n - 1` singletons and their complement and validating the result.
pub fn cardinality_probe(action: &Action, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("the block count must be positive".into()));
    }
    let points: Vec<Point> = match action.degree() {
        Some(d) if n - 1 >= d => return Ok(false),
        Some(_) => (0..n - 1).map(Point::Index).collect(),
        None => {
            let rank = action.generator_count();
            let mut words = Vec::new();
            let mut len = 0;
            while words.len() < n - 1 {
                words = FreeWord::all_up_to(rank, len);
                len += 1;
            }
            words.into_iter().take(n - 1).map(Point::Word).collect()
        }
    };
    let mut blocks = points.iter().map(|x| action.singleton(x)).collect::<Result<Vec<_>>>()?;
    let rest = match PointSet::union_all(&blocks)? {
        Some(u) => u.complement(),
        None => action.full_set(),
    };
    blocks.push(rest);
    Ok(validate_partition(action, &blocks).is_empty())
}
