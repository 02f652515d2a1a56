//! Domain values as JSON, in the same shapes the parser accepts. Sets are
//! written in canonical form (point lists or minimal automata) so equal
//! sets serialize identically.

use serde_json::{json, Value};

use tarski_core::actions::{Action, Partition, Universe};
use tarski_core::config::{Configuration, Refinement};
use tarski_core::equations::{format_rational, Rational};
use tarski_core::groups::{FreeWord, GroupElement, Permutation};
use tarski_core::paradox::{CyclicTableau, ParadoxPattern, ParadoxicalDecomposition, PingPongChain, SubgroupSpec};
use tarski_core::sets::{Point, PointSet, SymbolicSet};

pub fn word(w: &FreeWord) -> Value {
    Value::String(w.to_string())
}

pub fn permutation(p: &Permutation) -> Value {
    json!(p.images())
}

pub fn element(g: &GroupElement) -> Value {
    match g {
        GroupElement::Word(w) => word(w),
        GroupElement::Perm(p) => permutation(p),
    }
}

pub fn elements(gs: &[GroupElement]) -> Value {
    Value::Array(gs.iter().map(element).collect())
}

pub fn point(x: &Point) -> Value {
    match x {
        Point::Index(i) => json!(i),
        Point::Word(w) => word(w),
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational).collect())
}

pub fn configuration(c: &Configuration) -> Value {
    json!(c)
}

pub fn action(a: &Action) -> Value {
    let perms = |ps: &[Permutation]| Value::Array(ps.iter().map(permutation).collect());
    match a {
        Action::FinitePermutation(asg) => {
            json!({"kind": "permutation", "degree": asg.degree(), "generators": perms(asg.images())})
        }
        Action::FiniteRegular(g) => {
            let asg = g.generators();
            json!({"kind": "regular", "degree": asg.degree(), "generators": perms(asg.images())})
        }
        Action::FreeSelf { rank } => json!({"kind": "free", "rank": rank}),
        Action::Trivial(Universe::Finite(n)) => json!({"kind": "trivial", "points": n}),
        Action::Trivial(Universe::FreeWords(r)) => json!({"kind": "trivial", "rank": r}),
    }
}

pub fn set(s: &PointSet) -> Value {
    match s {
        PointSet::Finite(f) => json!({"kind": "points", "points": f.points()}),
        PointSet::Symbolic(a) => json!({
            "kind": "automaton",
            "transitions": a.transition_table(),
            "accepting": a.accepting_states(),
        }),
    }
}

pub fn sets(ss: &[PointSet]) -> Value {
    Value::Array(ss.iter().map(set).collect())
}

const SUMMARY_MEMBERS: usize = 8;
const SUMMARY_MAX_LEN: usize = 12;

/// The shortest members of a set in shortlex order, with a trailing "..."
/// when there are more.
pub fn summary(s: &PointSet) -> String {
    let members: Vec<String> = match s {
        PointSet::Finite(f) => f.points().iter().map(|p| p.to_string()).collect(),
        PointSet::Symbolic(a) => {
            let mut len = 0;
            let mut found = a.enumerate_up_to(len);
            while found.len() <= SUMMARY_MEMBERS && len < SUMMARY_MAX_LEN {
                len += 1;
                found = a.enumerate_up_to(len);
            }
            let more = found.len() > SUMMARY_MEMBERS
                || !a
                    .difference(&SymbolicSet::from_words(a.rank(), &found).expect("same rank"))
                    .expect("same rank")
                    .is_empty();
            let mut v: Vec<String> = found.iter().take(SUMMARY_MEMBERS).map(|w| w.to_string()).collect();
            if more {
                v.push("...".into());
            }
            v
        }
    };
    format!("{{{}}}", members.join(", "))
}

/// Readable member listings, one per set.
pub fn summaries(ss: &[PointSet]) -> Value {
    Value::Array(ss.iter().map(|s| Value::String(summary(s))).collect())
}

pub fn partition(p: &Partition) -> Value {
    sets(p.blocks())
}

pub fn refinement(r: Refinement) -> Value {
    Value::String(
        match r {
            Refinement::Partition => "partition",
            Refinement::String => "string",
            Refinement::Composite => "composite",
        }
        .into(),
    )
}

fn side(pieces: &[PointSet], translators: &[GroupElement]) -> Value {
    Value::Array(
        pieces.iter().zip(translators).map(|(p, t)| json!({"piece": set(p), "translator": element(t)})).collect(),
    )
}

pub fn decomposition(d: &ParadoxicalDecomposition) -> Value {
    json!({"a": side(&d.a_pieces, &d.a_translators), "b": side(&d.b_pieces, &d.b_translators)})
}

pub fn chain(c: &PingPongChain) -> Value {
    json!({"sets": sets(&c.sets), "elements": elements(&c.elements)})
}

pub fn tableau(t: &CyclicTableau) -> Value {
    json!({"a_sets": sets(&t.a_sets), "b_sets": sets(&t.b_sets), "elements": elements(&t.elements)})
}

pub fn pattern(p: &ParadoxPattern) -> Value {
    let fam = |f: &[(usize, usize)]| Value::Array(f.iter().map(|&(j, i)| json!([j, i])).collect());
    json!({"first": fam(&p.first), "second": fam(&p.second)})
}

pub fn subgroup(s: &SubgroupSpec) -> Value {
    match s {
        SubgroupSpec::Elements(es) => json!({"elements": elements(es)}),
        SubgroupSpec::Cyclic { generator, bound } => json!({"generator": element(generator), "bound": bound}),
    }
}
