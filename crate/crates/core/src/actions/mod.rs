//! Group actions on finite point sets and on free groups, with partitions and
//! equivariant maps between finite actions.

mod equivariant;
mod partition;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::Rng;

pub use equivariant::{orbit_coset_action, regular_to_orbit, EquivariantMap, OrbitCosets};
pub use partition::{validate_partition, Partition, PartitionViolation};

use crate::error::{Error, Result};
use crate::groups::{evaluate_word, Assignment, FreeWord, GroupElement, Letter, Permutation, MAX_RANK};
use crate::sets::{FiniteSet, Point, PointSet, SymbolicSet};

/// Largest finite group enumerated for a regular action.
pub const MAX_REGULAR_ORDER: usize = 50_000;

/// The point set an action lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    /// Points `0..n`.
    Finite(usize),
    /// Reduced words of the given rank.
    FreeWords(usize),
}

/// A finite group listed by its elements, acting on itself by left
/// multiplication. Point `i` is the `i`-th element in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularGroup {
    generators: Assignment,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl RegularGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<RegularGroup> {
        let generators = Assignment::new(degree, generators)?;
        let elements = closure(&generators, MAX_REGULAR_ORDER)?;
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(RegularGroup { generators, elements, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &Assignment {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }
}

/// All elements of the group generated by `generators`, sorted.
pub(crate) fn closure(generators: &Assignment, limit: usize) -> Result<Vec<Permutation>> {
    let identity = Permutation::identity(generators.degree());
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone(), ());
    queue.push_back(identity);
    while let Some(p) = queue.pop_front() {
        for g in generators.images() {
            let q = g.compose(&p)?;
            if !seen.contains_key(&q) {
                if seen.len() >= limit {
                    return Err(Error::BoundExceeded(format!("group order exceeds {limit}")));
                }
                seen.insert(q.clone(), ());
                queue.push_back(q);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_keys().collect();
    elements.sort();
    Ok(elements)
}

/// A group action in one of four backends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    /// The free group on `rank()` generators acting on `0..degree` through
    /// the assigned permutations.
    FinitePermutation(Assignment),
    /// A free group acting on itself by left multiplication.
    FreeSelf {
        rank: usize,
    },
    /// Every element fixes every point.
    Trivial(Universe),
    FiniteRegular(RegularGroup),
}

impl Action {
    pub fn permutation(degree: usize, generators: Vec<Permutation>) -> Result<Action> {
        if generators.len() > MAX_RANK {
            return Err(Error::RankTooLarge(generators.len()));
        }
        Ok(Action::FinitePermutation(Assignment::new(degree, generators)?))
    }

    pub fn free(rank: usize) -> Result<Action> {
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        Ok(Action::FreeSelf { rank })
    }

    pub fn trivial(universe: Universe) -> Result<Action> {
        if let Universe::FreeWords(rank) = universe {
            if rank > MAX_RANK {
                return Err(Error::RankTooLarge(rank));
            }
        }
        if universe == Universe::Finite(0) {
            return Err(Error::Precondition("an action needs a nonempty set".into()));
        }
        Ok(Action::Trivial(universe))
    }

    pub fn regular(degree: usize, generators: Vec<Permutation>) -> Result<Action> {
        if generators.len() > MAX_RANK {
            return Err(Error::RankTooLarge(generators.len()));
        }
        Ok(Action::FiniteRegular(RegularGroup::new(degree, generators)?))
    }

    pub fn universe(&self) -> Universe {
        match self {
            Action::FinitePermutation(a) => Universe::Finite(a.degree()),
            Action::FreeSelf { rank } => Universe::FreeWords(*rank),
            Action::Trivial(u) => *u,
            Action::FiniteRegular(g) => Universe::Finite(g.order()),
        }
    }

    /// Number of points for finite universes.
    pub fn degree(&self) -> Option<usize> {
        match self.universe() {
            Universe::Finite(n) => Some(n),
            Universe::FreeWords(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.degree().is_some()
    }

    /// Number of free generators driving the action (0 for trivial actions).
    pub fn generator_count(&self) -> usize {
        match self {
            Action::FinitePermutation(a) => a.rank(),
            Action::FreeSelf { rank } => *rank,
            Action::Trivial(_) => 0,
            Action::FiniteRegular(g) => g.generators.rank(),
        }
    }

    /// The generators as one-letter words.
    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.generator_count()).map(|i| GroupElement::Word(FreeWord::from_letter(Letter::new(i, false)))).collect()
    }

    /// The backend's own form of `g`: permutations for finite backends,
    /// reduced words for the free self-action, anything for trivial actions.
    pub fn normalize(&self, g: &GroupElement) -> Result<GroupElement> {
        match (self, g) {
            (Action::FinitePermutation(a), GroupElement::Word(w)) => Ok(GroupElement::Perm(evaluate_word(a, w)?)),
            (Action::FinitePermutation(a), GroupElement::Perm(p)) => {
                if p.degree() != a.degree() {
                    Err(Error::DegreeMismatch(a.degree(), p.degree()))
                } else {
                    Ok(g.clone())
                }
            }
            (Action::FiniteRegular(grp), GroupElement::Word(w)) => {
                Ok(GroupElement::Perm(evaluate_word(&grp.generators, w)?))
            }
            (Action::FiniteRegular(grp), GroupElement::Perm(p)) => match grp.index_of(p) {
                Some(_) => Ok(g.clone()),
                None => Err(Error::IncompatibleElement(format!("{p} is not in the group"))),
            },
            (Action::FreeSelf { rank }, GroupElement::Word(w)) => {
                if w.min_rank() > *rank {
                    Err(Error::GeneratorOutOfRange { index: w.min_rank(), rank: *rank })
                } else {
                    Ok(g.clone())
                }
            }
            (Action::FreeSelf { .. }, GroupElement::Perm(p)) => Err(Error::IncompatibleElement(p.to_string())),
            (Action::Trivial(_), _) => Ok(g.clone()),
        }
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.normalize(g)?.multiply(&self.normalize(h)?)
    }

    pub fn invert(&self, g: &GroupElement) -> Result<GroupElement> {
        Ok(self.normalize(g)?.invert())
    }

    pub fn is_identity(&self, g: &GroupElement) -> Result<bool> {
        Ok(self.normalize(g)?.is_identity())
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            Action::FinitePermutation(a) => GroupElement::Perm(Permutation::identity(a.degree())),
            Action::FiniteRegular(g) => GroupElement::Perm(Permutation::identity(g.generators.degree())),
            _ => GroupElement::Word(FreeWord::identity()),
        }
    }

    /// Power `g^n` in the acting group.
    pub fn pow(&self, g: &GroupElement, n: i64) -> Result<GroupElement> {
        let base = if n < 0 { self.invert(g)? } else { self.normalize(g)? };
        let mut acc = match &base {
            GroupElement::Word(_) => GroupElement::Word(FreeWord::identity()),
            GroupElement::Perm(p) => GroupElement::Perm(Permutation::identity(p.degree())),
        };
        for _ in 0..n.unsigned_abs() {
            acc = acc.multiply(&base)?;
        }
        Ok(acc)
    }

    pub fn check_point(&self, x: &Point) -> Result<()> {
        let ok = match (self.universe(), x) {
            (Universe::Finite(n), Point::Index(i)) => *i < n,
            (Universe::FreeWords(rank), Point::Word(w)) => w.min_rank() <= rank,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IncompatiblePoint(x.to_string()))
        }
    }

    pub fn check_set(&self, s: &PointSet) -> Result<()> {
        match (self.universe(), s) {
            (Universe::Finite(n), PointSet::Finite(f)) if f.degree() == n => Ok(()),
            (Universe::FreeWords(rank), PointSet::Symbolic(f)) if f.rank() == rank => Ok(()),
            _ => Err(Error::IncompatibleSet),
        }
    }

    pub fn act(&self, g: &GroupElement, x: &Point) -> Result<Point> {
        self.check_point(x)?;
        let g = self.normalize(g)?;
        Ok(match (self, &g, x) {
            (Action::Trivial(_), _, _) => x.clone(),
            (Action::FinitePermutation(_), GroupElement::Perm(p), Point::Index(i)) => Point::Index(p.apply(*i)),
            (Action::FiniteRegular(grp), GroupElement::Perm(p), Point::Index(i)) => {
                let product = p.compose(&grp.elements[*i])?;
                Point::Index(grp.index_of(&product).expect("group is closed"))
            }
            (Action::FreeSelf { .. }, GroupElement::Word(w), Point::Word(v)) => Point::Word(w.multiply(v)),
            _ => unreachable!("normalize and check_point agree on the backend"),
        })
    }

    /// Image `g·S`.
    pub fn act_on_set(&self, g: &GroupElement, s: &PointSet) -> Result<PointSet> {
        self.check_set(s)?;
        let g = self.normalize(g)?;
        Ok(match (self, &g, s) {
            (Action::Trivial(_), _, _) => s.clone(),
            (Action::FinitePermutation(_), GroupElement::Perm(p), PointSet::Finite(f)) => {
                PointSet::Finite(f.map(|i| p.apply(i)))
            }
            (Action::FiniteRegular(grp), GroupElement::Perm(p), PointSet::Finite(f)) => PointSet::Finite(f.map(|i| {
                let product = p.compose(&grp.elements[i]).expect("same degree");
                grp.index_of(&product).expect("group is closed")
            })),
            (Action::FreeSelf { .. }, GroupElement::Word(w), PointSet::Symbolic(f)) => {
                PointSet::Symbolic(f.translate(w)?)
            }
            _ => unreachable!("normalize and check_set agree on the backend"),
        })
    }

    pub fn full_set(&self) -> PointSet {
        match self.universe() {
            Universe::Finite(n) => PointSet::Finite(FiniteSet::full(n)),
            Universe::FreeWords(rank) => PointSet::Symbolic(SymbolicSet::full(rank)),
        }
    }

    pub fn empty_set(&self) -> PointSet {
        match self.universe() {
            Universe::Finite(n) => PointSet::Finite(FiniteSet::empty(n)),
            Universe::FreeWords(rank) => PointSet::Symbolic(SymbolicSet::empty(rank)),
        }
    }

    pub fn singleton(&self, x: &Point) -> Result<PointSet> {
        self.check_point(x)?;
        Ok(match (self.universe(), x) {
            (Universe::Finite(n), Point::Index(i)) => PointSet::Finite(FiniteSet::from_points(n, [*i])?),
            (Universe::FreeWords(rank), Point::Word(w)) => PointSet::Symbolic(SymbolicSet::singleton(rank, w)?),
            _ => unreachable!(),
        })
    }

    /// The point an element occupies when a group acts on itself.
    pub fn element_as_point(&self, g: &GroupElement) -> Result<Point> {
        match (self, self.normalize(g)?) {
            (Action::FreeSelf { .. }, GroupElement::Word(w)) => Ok(Point::Word(w)),
            (Action::FiniteRegular(grp), GroupElement::Perm(p)) => {
                Ok(Point::Index(grp.index_of(&p).expect("normalized")))
            }
            _ => Err(Error::Precondition("elements are points only for self-actions".into())),
        }
    }

    /// Distinct acting elements given by words of length at most `max_len`,
    /// in shortlex order of their first word.
    pub fn element_candidates(&self, max_len: usize) -> Result<Vec<GroupElement>> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for w in FreeWord::all_up_to(self.generator_count(), max_len) {
            let g = self.normalize(&GroupElement::Word(w))?;
            if seen.insert(g.clone()) {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Samples the action axioms `e·x = x` and `g·(h·x) = (gh)·x`.
    pub fn spot_check_axioms<R: Rng>(&self, rng: &mut R, samples: usize) -> Result<()> {
        let rank = self.generator_count();
        let random_word = |rng: &mut R| {
            let len = rng.gen_range(0..6);
            let letters: Vec<Letter> =
                (0..len).filter(|_| rank > 0).map(|_| Letter::new(rng.gen_range(0..rank), rng.gen())).collect();
            GroupElement::Word(FreeWord::reduce(rank, letters).expect("within rank"))
        };
        for _ in 0..samples {
            let x = match self.universe() {
                Universe::Finite(n) => Point::Index(rng.gen_range(0..n)),
                Universe::FreeWords(r) => {
                    let len = rng.gen_range(0..6);
                    let letters: Vec<Letter> =
                        (0..len).filter(|_| r > 0).map(|_| Letter::new(rng.gen_range(0..r), rng.gen())).collect();
                    Point::Word(FreeWord::reduce(r, letters).expect("within rank"))
                }
            };
            let (g, h) = (random_word(rng), random_word(rng));
            if self.act(&GroupElement::Word(FreeWord::identity()), &x)? != x {
                return Err(Error::Precondition(format!("identity moves point {x}")));
            }
            let lhs = self.act(&g, &self.act(&h, &x)?)?;
            let rhs = self.act(&self.multiply(&g, &h)?, &x)?;
            if lhs != rhs {
                return Err(Error::Precondition(format!("compatibility fails for g={g}, h={h}, x={x}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::FinitePermutation(a) => {
                write!(f, "permutation action of degree {} with {} generators", a.degree(), a.rank())
            }
            Action::FreeSelf { rank } => write!(f, "free group of rank {rank} acting on itself"),
            Action::Trivial(Universe::Finite(n)) => write!(f, "trivial action on {n} points"),
            Action::Trivial(Universe::FreeWords(r)) => write!(f, "trivial action on the free group of rank {r}"),
            Action::FiniteRegular(g) => write!(f, "regular action of a group of order {}", g.order()),
        }
    }
}
