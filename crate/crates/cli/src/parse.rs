//! Reading domain values out of JSON documents. Every error carries the
//! JSON path of the offending value.

use serde_json::Value;

use tarski_core::actions::{Action, Partition, Universe};
use tarski_core::config::{ConfigurationPair, Refinement};
use tarski_core::equations::{parse_rational, Rational};
use tarski_core::groups::{FreeWord, GroupElement, Permutation};
use tarski_core::paradox::{CyclicTableau, ParadoxPattern, ParadoxicalDecomposition, PingPongChain, SubgroupSpec};
use tarski_core::sets::{FiniteSet, Point, PointSet, SymbolicSet};

use crate::error::{CliError, Result};

/// A JSON value together with its path from the document root.
#[derive(Clone, Copy)]
pub struct Node<'a> {
    value: &'a Value,
    path: &'a str,
}

// Owned path storage so child nodes can borrow it.
pub struct Child<'a> {
    value: &'a Value,
    path: String,
}

impl<'a> Child<'a> {
    pub fn node(&self) -> Node<'_> {
        Node { value: self.value, path: &self.path }
    }
}

impl<'a> Node<'a> {
    pub fn root(value: &'a Value) -> Node<'a> {
        Node { value, path: "$" }
    }

    pub fn path(&self) -> &str {
        self.path
    }

    pub fn err(&self, message: impl Into<String>) -> CliError {
        CliError::schema(self.path, message)
    }

    fn object(&self) -> Result<&'a serde_json::Map<String, Value>> {
        self.value.as_object().ok_or_else(|| self.err("expected an object"))
    }

    /// Rejects keys outside `allowed`.
    pub fn keys(&self, allowed: &[&str]) -> Result<()> {
        for k in self.object()?.keys() {
            if !allowed.contains(&k.as_str()) {
                return Err(CliError::schema(&format!("{}.{k}", self.path), "unknown field"));
            }
        }
        Ok(())
    }

    pub fn get(&self, key: &str) -> Result<Option<Child<'a>>> {
        Ok(self.object()?.get(key).map(|value| Child { value, path: format!("{}.{key}", self.path) }))
    }

    pub fn field(&self, key: &str) -> Result<Child<'a>> {
        self.get(key)?.ok_or_else(|| self.err(format!("missing field \"{key}\"")))
    }

    pub fn items(&self) -> Result<Vec<Child<'a>>> {
        let arr = self.value.as_array().ok_or_else(|| self.err("expected an array"))?;
        Ok(arr.iter().enumerate().map(|(i, value)| Child { value, path: format!("{}[{i}]", self.path) }).collect())
    }

    pub fn str(&self) -> Result<&'a str> {
        self.value.as_str().ok_or_else(|| self.err("expected a string"))
    }

    pub fn usize(&self) -> Result<usize> {
        self.value
            .as_u64()
            .and_then(|n| usize::try_from(n).ok())
            .ok_or_else(|| self.err("expected a nonnegative integer"))
    }

    pub fn list<T>(&self, f: impl Fn(Node<'_>) -> Result<T>) -> Result<Vec<T>> {
        self.items()?.iter().map(|c| f(c.node())).collect()
    }
}

pub fn word(n: Node<'_>) -> Result<FreeWord> {
    n.str()?.parse::<FreeWord>().map_err(|e| CliError::core(n.path(), e))
}

pub fn permutation(n: Node<'_>) -> Result<Permutation> {
    let images = n.list(|c| c.usize())?;
    Permutation::new(images).map_err(|e| CliError::core(n.path(), e))
}

/// A word string or a permutation image array.
pub fn element(n: Node<'_>) -> Result<GroupElement> {
    if n.value.is_string() {
        Ok(GroupElement::Word(word(n)?))
    } else if n.value.is_array() {
        Ok(GroupElement::Perm(permutation(n)?))
    } else {
        Err(n.err("expected a word string or a permutation array"))
    }
}

/// An element checked against the action.
pub fn acting_element(action: &Action, n: Node<'_>) -> Result<GroupElement> {
    let g = element(n)?;
    action.normalize(&g).map_err(|e| CliError::core(n.path(), e))?;
    Ok(g)
}

pub fn rational(n: Node<'_>) -> Result<Rational> {
    parse_rational(n.str()?).ok_or_else(|| n.err("expected a rational \"p/q\" with nonzero q"))
}

pub fn rationals(n: Node<'_>) -> Result<Vec<Rational>> {
    n.list(rational)
}

pub fn action(n: Node<'_>) -> Result<Action> {
    let kind = n.field("kind")?;
    let core = |r: tarski_core::Result<Action>| r.map_err(|e| CliError::core(n.path(), e));
    match kind.node().str()? {
        "permutation" | "regular" => {
            n.keys(&["kind", "degree", "generators"])?;
            let degree = n.field("degree")?.node().usize()?;
            let gens_node = n.field("generators")?;
            let gens = gens_node.node().list(permutation)?;
            for (i, g) in gens.iter().enumerate() {
                if g.degree() != degree {
                    return Err(CliError::schema(
                        &format!("{}[{i}]", gens_node.node().path()),
                        format!("permutation of degree {} in an action of degree {degree}", g.degree()),
                    ));
                }
            }
            if kind.node().str()? == "permutation" {
                core(Action::permutation(degree, gens))
            } else {
                core(Action::regular(degree, gens))
            }
        }
        "free" => {
            n.keys(&["kind", "rank"])?;
            core(Action::free(n.field("rank")?.node().usize()?))
        }
        "trivial" => {
            n.keys(&["kind", "points", "rank"])?;
            match (n.get("points")?, n.get("rank")?) {
                (Some(p), None) => core(Action::trivial(Universe::Finite(p.node().usize()?))),
                (None, Some(r)) => core(Action::trivial(Universe::FreeWords(r.node().usize()?))),
                _ => Err(n.err("a trivial action needs exactly one of \"points\" or \"rank\"")),
            }
        }
        other => Err(kind.node().err(format!("unknown action kind \"{other}\""))),
    }
}

fn symbolic_rank(action: &Action, n: Node<'_>) -> Result<usize> {
    match action.universe() {
        Universe::FreeWords(rank) => Ok(rank),
        Universe::Finite(_) => Err(n.err("cones and words need a free-group universe; use \"points\"")),
    }
}

fn operands(action: &Action, n: Node<'_>, min: usize, max: Option<usize>) -> Result<Vec<PointSet>> {
    let of = n.field("of")?;
    let sets = of.node().list(|c| set(action, c))?;
    if sets.len() < min || max.is_some_and(|m| sets.len() > m) {
        return Err(of.node().err(match max {
            Some(m) if m == min => format!("expected exactly {min} operands"),
            _ => format!("expected at least {min} operands"),
        }));
    }
    Ok(sets)
}

/// A set expression tree evaluated in the action's universe.
pub fn set(action: &Action, n: Node<'_>) -> Result<PointSet> {
    let kind = n.field("kind")?;
    let core = |e| CliError::core(n.path(), e);
    let fold = |op: fn(&PointSet, &PointSet) -> tarski_core::Result<PointSet>, sets: Vec<PointSet>| {
        let mut it = sets.into_iter();
        let first = it.next().expect("at least one operand");
        it.try_fold(first, |acc, s| op(&acc, &s)).map_err(core)
    };
    match kind.node().str()? {
        "cone" => {
            n.keys(&["kind", "word"])?;
            let rank = symbolic_rank(action, n)?;
            let w = n.field("word")?;
            let w = word(w.node())
                .and_then(|x| SymbolicSet::cone(rank, &x).map_err(|e| CliError::core(w.node().path(), e)))?;
            Ok(PointSet::Symbolic(w))
        }
        "singleton" => {
            n.keys(&["kind", "word", "point", "element"])?;
            let point = match (n.get("word")?, n.get("point")?, n.get("element")?) {
                (Some(w), None, None) => {
                    symbolic_rank(action, n)?;
                    Point::Word(word(w.node())?)
                }
                (None, Some(p), None) => Point::Index(p.node().usize()?),
                (None, None, Some(g)) => {
                    let g = acting_element(action, g.node())?;
                    action.element_as_point(&g).map_err(core)?
                }
                _ => return Err(n.err("a singleton needs exactly one of \"word\", \"point\" or \"element\"")),
            };
            action.singleton(&point).map_err(core)
        }
        "full" => {
            n.keys(&["kind"])?;
            Ok(action.full_set())
        }
        "empty" => {
            n.keys(&["kind"])?;
            Ok(action.empty_set())
        }
        "union" => {
            n.keys(&["kind", "of"])?;
            fold(PointSet::union, operands(action, n, 1, None)?)
        }
        "intersection" => {
            n.keys(&["kind", "of"])?;
            fold(PointSet::intersection, operands(action, n, 1, None)?)
        }
        "difference" => {
            n.keys(&["kind", "of"])?;
            fold(PointSet::difference, operands(action, n, 2, Some(2))?)
        }
        "complement" => {
            n.keys(&["kind", "of"])?;
            Ok(set(action, n.field("of")?.node())?.complement())
        }
        "points" => {
            n.keys(&["kind", "points"])?;
            let Universe::Finite(degree) = action.universe() else {
                return Err(n.err("\"points\" needs a finite universe"));
            };
            let pts = n.field("points")?;
            let list = pts.node().list(|c| c.usize())?;
            Ok(PointSet::Finite(
                FiniteSet::from_points(degree, list).map_err(|e| CliError::core(pts.node().path(), e))?,
            ))
        }
        "automaton" => {
            n.keys(&["kind", "transitions", "accepting"])?;
            let rank = symbolic_rank(action, n)?;
            let transitions = n.field("transitions")?.node().list(|row| row.list(|c| c.usize()))?;
            let accepting = n.field("accepting")?.node().list(|c| c.usize())?;
            Ok(PointSet::Symbolic(SymbolicSet::from_automaton(rank, transitions, &accepting).map_err(core)?))
        }
        other => Err(kind.node().err(format!("unknown set kind \"{other}\""))),
    }
}

pub fn sets(action: &Action, n: Node<'_>) -> Result<Vec<PointSet>> {
    n.list(|c| set(action, c))
}

pub fn partition(action: &Action, n: Node<'_>) -> Result<Partition> {
    let blocks = sets(action, n)?;
    Partition::new(action, blocks).map_err(|e| CliError::core(n.path(), e))
}

pub fn tuple(action: &Action, n: Node<'_>) -> Result<Vec<GroupElement>> {
    n.list(|c| acting_element(action, c))
}

/// `tuple` and `partition` fields of `n`.
pub fn pair(action: &Action, n: Node<'_>) -> Result<ConfigurationPair> {
    let tuple = tuple(action, n.field("tuple")?.node())?;
    let partition = partition(action, n.field("partition")?.node())?;
    ConfigurationPair::new(action, tuple, partition).map_err(|e| CliError::core(n.path(), e))
}

pub fn refinement(n: Node<'_>) -> Result<Refinement> {
    match n.str()? {
        "partition" => Ok(Refinement::Partition),
        "string" => Ok(Refinement::String),
        "composite" => Ok(Refinement::Composite),
        other => Err(n.err(format!("unknown refinement mode \"{other}\" (partition, string or composite)"))),
    }
}

fn side(action: &Action, n: Node<'_>) -> Result<(Vec<PointSet>, Vec<GroupElement>)> {
    let entries = n.items()?;
    let mut pieces = Vec::new();
    let mut translators = Vec::new();
    for c in &entries {
        let e = c.node();
        e.keys(&["piece", "translator"])?;
        pieces.push(set(action, e.field("piece")?.node())?);
        translators.push(acting_element(action, e.field("translator")?.node())?);
    }
    Ok((pieces, translators))
}

pub fn decomposition(action: &Action, n: Node<'_>) -> Result<ParadoxicalDecomposition> {
    n.keys(&["a", "b"])?;
    let (a_pieces, a_translators) = side(action, n.field("a")?.node())?;
    let (b_pieces, b_translators) = side(action, n.field("b")?.node())?;
    Ok(ParadoxicalDecomposition { a_pieces, a_translators, b_pieces, b_translators })
}

pub fn chain(action: &Action, n: Node<'_>) -> Result<PingPongChain> {
    n.keys(&["sets", "elements"])?;
    Ok(PingPongChain {
        sets: sets(action, n.field("sets")?.node())?,
        elements: tuple(action, n.field("elements")?.node())?,
    })
}

pub fn tableau(action: &Action, n: Node<'_>) -> Result<CyclicTableau> {
    n.keys(&["a_sets", "b_sets", "elements"])?;
    Ok(CyclicTableau {
        a_sets: sets(action, n.field("a_sets")?.node())?,
        b_sets: sets(action, n.field("b_sets")?.node())?,
        elements: tuple(action, n.field("elements")?.node())?,
    })
}

fn family(n: Node<'_>) -> Result<Vec<(usize, usize)>> {
    n.list(|p| {
        let v = p.list(|c| c.usize())?;
        match v.as_slice() {
            [j, i] => Ok((*j, *i)),
            _ => Err(p.err("expected a pair [j, i]")),
        }
    })
}

pub fn pattern(n: Node<'_>) -> Result<ParadoxPattern> {
    n.keys(&["first", "second"])?;
    Ok(ParadoxPattern { first: family(n.field("first")?.node())?, second: family(n.field("second")?.node())? })
}

/// `{"elements": [...]}` or `{"generator": g, "bound": k}`; a missing bound
/// falls back to `default_bound`.
pub fn subgroup(action: &Action, n: Node<'_>, default_bound: u32) -> Result<SubgroupSpec> {
    n.keys(&["elements", "generator", "bound"])?;
    match (n.get("elements")?, n.get("generator")?) {
        (Some(e), None) => Ok(SubgroupSpec::Elements(tuple(action, e.node())?)),
        (None, Some(g)) => {
            let bound = match n.get("bound")? {
                Some(b) => u32::try_from(b.node().usize()?).map_err(|_| b.node().err("bound too large"))?,
                None => default_bound,
            };
            Ok(SubgroupSpec::Cyclic { generator: acting_element(action, g.node())?, bound })
        }
        _ => Err(n.err("a subgroup needs exactly one of \"elements\" or \"generator\"")),
    }
}

/// Parses raw input bytes as JSON, reporting the location of syntax errors.
pub fn document(input: &[u8]) -> Result<Value> {
    serde_json::from_slice(input).map_err(|e| CliError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}
