//! Ping-pong criteria for free groups and free products.

use std::fmt;

use super::witness::{make_infinite_order_witness, verify_infinite_order};
use crate::actions::Action;
use crate::groups::GroupElement;
use crate::sets::{Point, PointSet};

/// Sets `A1..Ak, B1..Bk` and elements `g1..gk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicTableau {
    pub a_sets: Vec<PointSet>,
    pub b_sets: Vec<PointSet>,
    pub elements: Vec<GroupElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PingPongFailure {
    Precondition(String),
    /// Two of the sets meet. Sets are numbered one-based; in a tableau the
    /// `A` sets come first.
    Overlap {
        first: usize,
        second: usize,
        witness: Point,
    },
    /// Cyclic criterion: `B_iᶜ ⊄ g_i·A_i`.
    Cyclic {
        i: usize,
        witness: Point,
    },
    /// Subgroup criterion: `h·X_s ⊄ X_i` for `h ∈ H_i`.
    Subgroup {
        i: usize,
        s: usize,
        element: GroupElement,
        witness: Point,
    },
}

impl fmt::Display for PingPongFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PingPongFailure::Precondition(s) => write!(f, "precondition fails: {s}"),
            PingPongFailure::Overlap { first, second, witness } => {
                write!(f, "sets {first} and {second} are not disjoint: both contain {witness}")
            }
            PingPongFailure::Cyclic { i, witness } => {
                write!(f, "complement of B{i} is not inside g{i}·A{i}: {witness} is missing")
            }
            PingPongFailure::Subgroup { i, s, element, witness } => {
                write!(f, "{element} ∈ H{i} maps {witness} ∈ X{s} outside X{i}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCertificate {
    /// Human-readable verified inclusions, one per index.
    pub inclusions: Vec<String>,
    pub conclusion: String,
}

fn precondition(e: crate::Error) -> PingPongFailure {
    PingPongFailure::Precondition(e.to_string())
}

fn check_disjoint(action: &Action, sets: &[&PointSet]) -> Result<(), PingPongFailure> {
    for s in sets {
        action.check_set(s).map_err(precondition)?;
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if let Some(witness) = sets[i].overlap_with(sets[j]).map_err(precondition)? {
                return Err(PingPongFailure::Overlap { first: i + 1, second: j + 1, witness });
            }
        }
    }
    Ok(())
}

/// Verifies that the `2k` sets are pairwise disjoint and `B_iᶜ ⊆ g_i·A_i`
/// for every `i`; then `g1..gk` freely generate a free group of rank `k`.
pub fn check_pingpong_cyclic(action: &Action, t: &CyclicTableau) -> Result<CyclicCertificate, PingPongFailure> {
    let k = t.elements.len();
    if k < 2 || t.a_sets.len() != k || t.b_sets.len() != k {
        return Err(PingPongFailure::Precondition(format!(
            "need k ≥ 2 with k sets A, k sets B and k elements; got {}, {} and {k}",
            t.a_sets.len(),
            t.b_sets.len()
        )));
    }
    let all: Vec<&PointSet> = t.a_sets.iter().chain(&t.b_sets).collect();
    check_disjoint(action, &all)?;
    let mut inclusions = Vec::with_capacity(k);
    for i in 0..k {
        let image = action.act_on_set(&t.elements[i], &t.a_sets[i]).map_err(precondition)?;
        if let Some(witness) = t.b_sets[i].complement().missing_from(&image).map_err(precondition)? {
            return Err(PingPongFailure::Cyclic { i: i + 1, witness });
        }
        inclusions.push(format!("B{0}ᶜ ⊆ g{0}·A{0} with g{0} = {1}", i + 1, t.elements[i]));
    }
    let gens: Vec<String> = t.elements.iter().map(|g| g.to_string()).collect();
    Ok(CyclicCertificate { inclusions, conclusion: format!("⟨{}⟩ is a free group of rank {k}", gens.join(", ")) })
}

/// A subgroup given by its complete element list or as a cyclic group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// All elements of a finite subgroup; closure is checked.
    Elements(Vec<GroupElement>),
    /// `⟨generator⟩`, with nonzero exponents `|n| ≤ bound` checked when the
    /// generator has infinite order.
    Cyclic { generator: GroupElement, bound: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupCertificate {
    /// Orders of the subgroups, `None` for certified infinite order.
    pub orders: Vec<Option<usize>>,
    /// Number of inclusions `h·X_s ⊆ X_i` checked.
    pub inclusions_checked: usize,
    /// Exponent bounds used for infinite cyclic subgroups; finite subgroups
    /// are always enumerated exhaustively.
    pub bounds: Vec<Option<u32>>,
    /// Whether every nonidentity element was covered.
    pub exhaustive: bool,
    pub conclusion: String,
}

struct Expanded {
    nonidentity: Vec<GroupElement>,
    order: Option<usize>,
    bound: Option<u32>,
}

// Orders of finite cyclic groups are found by iterating up to this length.
const MAX_CYCLIC_ORDER: usize = 100_000;

fn expand(action: &Action, spec: &SubgroupSpec, index: usize) -> Result<Expanded, PingPongFailure> {
    match spec {
        SubgroupSpec::Elements(list) => {
            let mut elems: Vec<GroupElement> = Vec::new();
            for g in list {
                let g = action.normalize(g).map_err(precondition)?;
                if !elems.contains(&g) {
                    elems.push(g);
                }
            }
            let id = action.identity();
            if !elems.iter().any(|g| action.is_identity(g).unwrap_or(false)) {
                elems.insert(0, id);
            }
            for g in &elems {
                for h in &elems {
                    let gh = action.multiply(g, h).map_err(precondition)?;
                    if !elems.contains(&gh) {
                        return Err(PingPongFailure::Precondition(format!(
                            "H{index} is not closed: {g}·{h} = {gh} is missing"
                        )));
                    }
                }
            }
            let order = elems.len();
            let nonidentity = elems.into_iter().filter(|g| !action.is_identity(g).unwrap_or(false)).collect();
            Ok(Expanded { nonidentity, order: Some(order), bound: None })
        }
        SubgroupSpec::Cyclic { generator, bound } => {
            let g = action.normalize(generator).map_err(precondition)?;
            if action.is_finite() || matches!(action, Action::Trivial(_)) {
                // finite order: list every power once
                let mut powers = Vec::new();
                let mut cur = g.clone();
                while !action.is_identity(&cur).map_err(precondition)? {
                    powers.push(cur.clone());
                    if powers.len() > MAX_CYCLIC_ORDER {
                        return Err(PingPongFailure::Precondition(format!("order of {g} exceeds {MAX_CYCLIC_ORDER}")));
                    }
                    cur = action.multiply(&cur, &g).map_err(precondition)?;
                }
                let order = powers.len() + 1;
                return Ok(Expanded { nonidentity: powers, order: Some(order), bound: None });
            }
            let witness = make_infinite_order_witness(action, &g).map_err(precondition)?;
            if let Err(e) = verify_infinite_order(action, &witness) {
                return Err(PingPongFailure::Precondition(format!("H{index}: {e}")));
            }
            let mut nonidentity = Vec::new();
            for n in 1..=*bound as i64 {
                nonidentity.push(action.pow(&g, n).map_err(precondition)?);
                nonidentity.push(action.pow(&g, -n).map_err(precondition)?);
            }
            Ok(Expanded { nonidentity, order: None, bound: Some(*bound) })
        }
    }
}

/// Verifies `h·X_s ⊆ X_i` for every listed nonidentity `h ∈ H_i` and every
/// `s ≠ i`, after certifying the size conditions: for two subgroups
/// `|H1| ≥ 3` and `|H2| ≥ 2`, otherwise every `|H_i| ≥ 2` and some
/// `|H_i| > 2`. Infinite cyclic subgroups are checked up to their bound.
pub fn check_pingpong_subgroups(
    action: &Action,
    groups: &[SubgroupSpec],
    sets: &[PointSet],
) -> Result<SubgroupCertificate, PingPongFailure> {
    let k = groups.len();
    if k < 2 || sets.len() != k {
        return Err(PingPongFailure::Precondition(format!(
            "need k ≥ 2 subgroups and k sets; got {k} and {}",
            sets.len()
        )));
    }
    let refs: Vec<&PointSet> = sets.iter().collect();
    check_disjoint(action, &refs)?;
    let expanded = groups.iter().enumerate().map(|(i, g)| expand(action, g, i + 1)).collect::<Result<Vec<_>, _>>()?;

    let size = |e: &Expanded| e.order.unwrap_or(usize::MAX);
    if k == 2 {
        if size(&expanded[0]) < 3 || size(&expanded[1]) < 2 {
            return Err(PingPongFailure::Precondition(format!(
                "size condition |H1| ≥ 3 and |H2| ≥ 2 fails: |H1| = {}, |H2| = {}",
                size(&expanded[0]),
                size(&expanded[1])
            )));
        }
    } else if expanded.iter().any(|e| size(e) < 2) || expanded.iter().all(|e| size(e) <= 2) {
        return Err(PingPongFailure::Precondition(
            "size condition fails: every |H_i| ≥ 2 and some |H_i| > 2 are required".into(),
        ));
    }

    let mut checked = 0;
    for (i, e) in expanded.iter().enumerate() {
        for h in &e.nonidentity {
            for (s, xs) in sets.iter().enumerate().filter(|(s, _)| *s != i) {
                let image = action.act_on_set(h, xs).map_err(precondition)?;
                if let Some(y) = image.missing_from(&sets[i]).map_err(precondition)? {
                    let inv = action.invert(h).map_err(precondition)?;
                    let witness = action.act(&inv, &y).map_err(precondition)?;
                    return Err(PingPongFailure::Subgroup { i: i + 1, s: s + 1, element: h.clone(), witness });
                }
                checked += 1;
            }
        }
    }
    let exhaustive = expanded.iter().all(|e| e.order.is_some());
    let names: Vec<String> = (1..=k).map(|i| format!("H{i}")).collect();
    let conclusion = if exhaustive {
        format!("⟨{}⟩ = {}", names.join(", "), names.join(" * "))
    } else {
        format!(
            "ping-pong inclusions for ⟨{}⟩ = {} hold up to the exponent bounds",
            names.join(", "),
            names.join(" * ")
        )
    };
    Ok(SubgroupCertificate {
        orders: expanded.iter().map(|e| e.order).collect(),
        inclusions_checked: checked,
        bounds: expanded.iter().map(|e| e.bound).collect(),
        exhaustive,
        conclusion,
    })
}
