//! Set-theoretic witnesses for non-commutativity and infinite order.

use std::fmt;

use crate::actions::Action;
use crate::error::{Error, Result};
use crate::groups::GroupElement;
use crate::sets::{Point, PointSet, SymbolicSet};

/// Five singletons `{e}, {g1}, {g2}, {g2·g1}, {g1·g2}` in a group acting on
/// itself, with `g1·E1 = E2 = g2⁻¹·E4` and `E3 = g1⁻¹·E5 = g2·E1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonabelianWitness {
    pub sets: [PointSet; 5],
    pub g1: GroupElement,
    pub g2: GroupElement,
}

/// `E1 = {a^n : n ≥ 0}` and `E2 = {a^-n : n ≥ 1}`, satisfying
/// `a·E1 ⊆ E1` and `a·E2 ∩ E1 ≠ ∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfiniteOrderWitness {
    pub e1: PointSet,
    pub e2: PointSet,
    pub a: GroupElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessFailure {
    Incompatible(String),
    Overlap {
        first: usize,
        second: usize,
        witness: Point,
    },
    /// A required set identity or inclusion fails.
    Relation(String),
}

impl fmt::Display for WitnessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessFailure::Incompatible(s) => write!(f, "incompatible with the action: {s}"),
            WitnessFailure::Overlap { first, second, witness } => {
                write!(f, "E{first} and E{second} are not disjoint: both contain {witness}")
            }
            WitnessFailure::Relation(s) => write!(f, "relation fails: {s}"),
        }
    }
}

fn incompatible(e: Error) -> WitnessFailure {
    WitnessFailure::Incompatible(e.to_string())
}

fn self_action(action: &Action) -> Result<()> {
    match action {
        Action::FreeSelf { .. } | Action::FiniteRegular(_) => Ok(()),
        _ => Err(Error::Precondition("witnesses need a group acting on itself (free or regular)".into())),
    }
}

pub fn make_nonabelian_witness(action: &Action, g1: &GroupElement, g2: &GroupElement) -> Result<NonabelianWitness> {
    self_action(action)?;
    let g1 = action.normalize(g1)?;
    let g2 = action.normalize(g2)?;
    let g1g2 = action.multiply(&g1, &g2)?;
    let g2g1 = action.multiply(&g2, &g1)?;
    if g1g2 == g2g1 {
        return Err(Error::Precondition(format!("elements commute: {g1}·{g2} = {g2}·{g1} = {g1g2}")));
    }
    let point = |g: &GroupElement| action.singleton(&action.element_as_point(g)?);
    Ok(NonabelianWitness {
        sets: [point(&action.identity())?, point(&g1)?, point(&g2)?, point(&g2g1)?, point(&g1g2)?],
        g1,
        g2,
    })
}

fn require_eq(
    action: &Action,
    lhs: (&str, PointSet),
    rhs: (&str, &PointSet),
) -> std::result::Result<(), WitnessFailure> {
    action.check_set(rhs.1).map_err(incompatible)?;
    if lhs.1.set_eq(rhs.1).map_err(incompatible)? {
        Ok(())
    } else {
        Err(WitnessFailure::Relation(format!("{} ≠ {}", lhs.0, rhs.0)))
    }
}

/// Checks disjointness and `g1·E1 = E2 = g2⁻¹·E4`, `E3 = g1⁻¹·E5 = g2·E1`.
/// Success shows `g1·g2 ≠ g2·g1`.
pub fn verify_nonabelian(action: &Action, w: &NonabelianWitness) -> std::result::Result<(), WitnessFailure> {
    for s in &w.sets {
        action.check_set(s).map_err(incompatible)?;
    }
    for i in 0..5 {
        for j in i + 1..5 {
            if let Some(witness) = w.sets[i].overlap_with(&w.sets[j]).map_err(incompatible)? {
                return Err(WitnessFailure::Overlap { first: i + 1, second: j + 1, witness });
            }
        }
    }
    let act = |g: &GroupElement, s: &PointSet| action.act_on_set(g, s).map_err(incompatible);
    let inv = |g: &GroupElement| action.invert(g).map_err(incompatible);
    let [e1, e2, e3, e4, e5] = &w.sets;
    require_eq(action, ("g1·E1", act(&w.g1, e1)?), ("E2", e2))?;
    require_eq(action, ("g2⁻¹·E4", act(&inv(&w.g2)?, e4)?), ("E2", e2))?;
    require_eq(action, ("g1⁻¹·E5", act(&inv(&w.g1)?, e5)?), ("E3", e3))?;
    require_eq(action, ("g2·E1", act(&w.g2, e1)?), ("E3", e3))?;
    Ok(())
}

/// Symbolic powers of `a` in the free self-action. Finite backends fail
/// with the order of `a`.
pub fn make_infinite_order_witness(action: &Action, a: &GroupElement) -> Result<InfiniteOrderWitness> {
    let a = action.normalize(a)?;
    match (action, &a) {
        (Action::FreeSelf { rank }, GroupElement::Word(w)) => {
            if w.is_identity() {
                return Err(Error::Precondition("element has finite order 1".into()));
            }
            Ok(InfiniteOrderWitness {
                e1: PointSet::Symbolic(SymbolicSet::powers(*rank, w, true)?),
                e2: PointSet::Symbolic(SymbolicSet::powers(*rank, w, false)?),
                a,
            })
        }
        (_, GroupElement::Perm(p)) => Err(Error::Precondition(format!("element has finite order {}", p.order()))),
        _ => Err(Error::Precondition("element acts trivially: finite order 1 on the action".into())),
    }
}

/// Checks `E1 ∩ E2 = ∅`, `a·E1 ⊆ E1` and `a·E2 ∩ E1 ≠ ∅`. Success shows
/// that `a` has infinite order.
pub fn verify_infinite_order(action: &Action, w: &InfiniteOrderWitness) -> std::result::Result<(), WitnessFailure> {
    action.check_set(&w.e1).map_err(incompatible)?;
    action.check_set(&w.e2).map_err(incompatible)?;
    if let Some(witness) = w.e1.overlap_with(&w.e2).map_err(incompatible)? {
        return Err(WitnessFailure::Overlap { first: 1, second: 2, witness });
    }
    let ae1 = action.act_on_set(&w.a, &w.e1).map_err(incompatible)?;
    if let Some(x) = ae1.missing_from(&w.e1).map_err(incompatible)? {
        return Err(WitnessFailure::Relation(format!("a·E1 ⊄ E1: {x} escapes")));
    }
    let ae2 = action.act_on_set(&w.a, &w.e2).map_err(incompatible)?;
    if ae2.is_disjoint(&w.e1).map_err(incompatible)? {
        return Err(WitnessFailure::Relation("a·E2 ∩ E1 = ∅".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::tests::w;
    use super::*;
    use crate::actions::tests::{p, s3_regular};
    use crate::groups::FreeWord;

    fn word_set(rank: usize, words: &[&str]) -> PointSet {
        let ws: Vec<FreeWord> = words.iter().map(|s| s.parse().unwrap()).collect();
        PointSet::Symbolic(SymbolicSet::from_words(rank, &ws).unwrap())
    }

    #[test]
    fn free_generators_do_not_commute() {
        let free = Action::free(2).unwrap();
        let wit = make_nonabelian_witness(&free, &w("a"), &w("b")).unwrap();
        let expected = ["e", "a", "b", "ba", "ab"].map(|s| word_set(2, &[s]));
        assert_eq!(wit.sets, expected);
        assert_eq!(verify_nonabelian(&free, &wit), Ok(()));
        assert_ne!(free.multiply(&wit.g1, &wit.g2).unwrap(), free.multiply(&wit.g2, &wit.g1).unwrap());
    }

    // With E4 = {g1 g2} and E5 = {g2 g1} the relations fail.
    #[test]
    fn unswapped_products_fail_the_relations() {
        let free = Action::free(2).unwrap();
        let mut wit = make_nonabelian_witness(&free, &w("a"), &w("b")).unwrap();
        wit.sets.swap(3, 4);
        assert!(matches!(verify_nonabelian(&free, &wit), Err(WitnessFailure::Relation(_))));
    }

    #[test]
    fn powers_commute() {
        let free = Action::free(1).unwrap();
        let err = make_nonabelian_witness(&free, &w("a"), &w("aa")).unwrap_err();
        assert!(err.to_string().contains("elements commute"));
    }

    #[test]
    fn s3_transpositions() {
        let s3 = s3_regular();
        let (t1, t2) = (GroupElement::Perm(p(&[1, 0, 2])), GroupElement::Perm(p(&[0, 2, 1])));
        let wit = make_nonabelian_witness(&s3, &t1, &t2).unwrap();
        assert!(wit.sets.iter().all(|s| s.finite_len() == Some(1)));
        assert_eq!(verify_nonabelian(&s3, &wit), Ok(()));
    }

    #[test]
    fn rank_one_generator_has_infinite_order() {
        let free = Action::free(1).unwrap();
        let wit = make_infinite_order_witness(&free, &w("a")).unwrap();
        let cone = |s: &str| PointSet::Symbolic(SymbolicSet::cone(1, &s.parse().unwrap()).unwrap());
        assert_eq!(wit.e1, word_set(1, &["e"]).union(&cone("a")).unwrap());
        assert_eq!(wit.e2, cone("A"));
        assert_eq!(verify_infinite_order(&free, &wit), Ok(()));
        for k in 1..=20 {
            assert!(!free.is_identity(&free.pow(&wit.a, k).unwrap()).unwrap());
        }
    }

    #[test]
    fn conjugate_has_infinite_order() {
        let free = Action::free(2).unwrap();
        let wit = make_infinite_order_witness(&free, &w("bab")).unwrap();
        assert_eq!(verify_infinite_order(&free, &wit), Ok(()));
        let wit = make_infinite_order_witness(&free, &w("baB")).unwrap();
        assert_eq!(verify_infinite_order(&free, &wit), Ok(()));
    }

    #[test]
    fn finite_backends_report_order() {
        let s3 = s3_regular();
        let err = make_infinite_order_witness(&s3, &GroupElement::Perm(p(&[1, 0, 2]))).unwrap_err();
        assert_eq!(err.to_string(), "element has finite order 2");
        let z5 = Action::permutation(5, vec![p(&[1, 2, 3, 4, 0])]).unwrap();
        assert_eq!(make_infinite_order_witness(&z5, &w("aa")).unwrap_err().to_string(), "element has finite order 5");
    }

    #[test]
    fn overlapping_sets_fail() {
        let free = Action::free(1).unwrap();
        let mut wit = make_infinite_order_witness(&free, &w("a")).unwrap();
        wit.e2 = wit.e2.union(&word_set(1, &["e"])).unwrap();
        assert!(matches!(verify_infinite_order(&free, &wit), Err(WitnessFailure::Overlap { .. })));
    }
}
