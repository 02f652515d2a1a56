use std::fmt;

use super::{verify_decomposition, DecompositionFailure, ParadoxicalDecomposition};
use crate::actions::Action;
use crate::error::Result;
use crate::groups::GroupElement;
use crate::sets::{Point, PointSet};

/// Sets `X1..Xn` and elements `h1..hn` with `h_i·X_i ⊆ X_{i+1}`, indices
/// taken cyclically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PingPongChain {
    pub sets: Vec<PointSet>,
    pub elements: Vec<GroupElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainFailure {
    Shape(String),
    Incompatible(String),
    /// `h_i·X_i ⊄ X_{i+1}`; one-based `i`.
    Inclusion {
        i: usize,
        witness: Point,
    },
    /// The sets `D_i = X_{i+1} \ h_i·X_i` do not cover `X`.
    CoverGap {
        witness: Point,
    },
    /// The telescoping identity failed; indicates a bug.
    Telescoping(String),
    Decomposition(DecompositionFailure),
}

impl fmt::Display for ChainFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainFailure::Shape(s) => write!(f, "malformed chain: {s}"),
            ChainFailure::Incompatible(s) => write!(f, "incompatible with the action: {s}"),
            ChainFailure::Inclusion { i, witness } => {
                write!(f, "h{i}·X{i} is not contained in X{}: {witness} escapes", i + 1)
            }
            ChainFailure::CoverGap { witness } => write!(f, "the sets D_i do not cover {witness}"),
            ChainFailure::Telescoping(s) => write!(f, "internal error, telescoping identity fails: {s}"),
            ChainFailure::Decomposition(d) => write!(f, "internal error, derived decomposition fails: {d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub decomposition: ParadoxicalDecomposition,
    /// `s_1..s_{n+1}` with `s_i = h_n···h_i` and `s_{n+1} = e`.
    pub s: Vec<GroupElement>,
    /// `D_1..D_n`.
    pub d: Vec<PointSet>,
    /// Upper bound `n + 2` on the number of pieces.
    pub bound: usize,
}

fn incompatible(e: crate::Error) -> ChainFailure {
    ChainFailure::Incompatible(e.to_string())
}

/// Builds the `n + 2` piece decomposition `{E0, X1ᶜ}`, `{E1..En}` with
/// `E0 = s1·X1` and `E_i = s_{i+1}·D_i`. Hypotheses and the telescoping
/// identity `X1 = E0 ⊔ E1 ⊔ ... ⊔ En` are checked exactly.
pub fn chain_to_decomposition(
    action: &Action,
    chain: &PingPongChain,
) -> std::result::Result<ChainDecomposition, ChainFailure> {
    let n = chain.sets.len();
    if n < 2 || chain.elements.len() != n {
        return Err(ChainFailure::Shape(format!(
            "need n ≥ 2 sets with one element each, got {} sets and {} elements",
            n,
            chain.elements.len()
        )));
    }
    for x in &chain.sets {
        action.check_set(x).map_err(incompatible)?;
    }
    let h = chain.elements.iter().map(|g| action.normalize(g)).collect::<Result<Vec<_>>>().map_err(incompatible)?;
    let x = &chain.sets;

    let mut d = Vec::with_capacity(n);
    for i in 0..n {
        let next = &x[(i + 1) % n];
        let image = action.act_on_set(&h[i], &x[i]).map_err(incompatible)?;
        if let Some(witness) = image.missing_from(next).map_err(incompatible)? {
            return Err(ChainFailure::Inclusion { i: i + 1, witness });
        }
        d.push(next.difference(&image).map_err(incompatible)?);
    }
    let union = PointSet::union_all(&d).map_err(incompatible)?.expect("n ≥ 2");
    if let Some(witness) = action.full_set().missing_from(&union).map_err(incompatible)? {
        return Err(ChainFailure::CoverGap { witness });
    }

    // s[i] holds s_{i+1} (zero-based), s[n] = e.
    let mut s = vec![action.identity(); n + 1];
    for i in (0..n).rev() {
        s[i] = action.multiply(&s[i + 1], &h[i]).map_err(incompatible)?;
    }
    let e0 = action.act_on_set(&s[0], &x[0]).map_err(incompatible)?;
    let e = (0..n).map(|i| action.act_on_set(&s[i + 1], &d[i])).collect::<Result<Vec<_>>>().map_err(incompatible)?;

    let parts: Vec<&PointSet> = std::iter::once(&e0).chain(&e).collect();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if let Some(w) = parts[i].overlap_with(parts[j]).map_err(incompatible)? {
                return Err(ChainFailure::Telescoping(format!("E{i} and E{j} meet at {w}")));
            }
        }
    }
    let union = PointSet::union_all(parts.iter().copied()).map_err(incompatible)?.expect("nonempty");
    if !union.set_eq(&x[0]).map_err(incompatible)? {
        return Err(ChainFailure::Telescoping("the pieces E_i do not reassemble X1".into()));
    }

    let inv = |g: &GroupElement| action.invert(g).map_err(incompatible);
    let decomposition = ParadoxicalDecomposition {
        a_pieces: vec![e0, x[0].complement()],
        a_translators: vec![inv(&s[0])?, action.identity()],
        b_pieces: e,
        b_translators: s[1..].iter().map(inv).collect::<std::result::Result<_, _>>()?,
    };
    verify_decomposition(action, &decomposition, false).map_err(ChainFailure::Decomposition)?;
    Ok(ChainDecomposition { decomposition, s, d, bound: n + 2 })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{cone, w};
    use super::*;
    use crate::groups::FreeWord;

    fn fixture() -> PingPongChain {
        PingPongChain {
            sets: vec![cone(2, "a").complement().union(&cone(2, "ab")).unwrap(), cone(2, "a")],
            elements: vec![w("abA"), w("ab")],
        }
    }

    #[test]
    fn two_step_chain_gives_four_pieces() {
        let free = Action::free(2).unwrap();
        let out = chain_to_decomposition(&free, &fixture()).unwrap();
        assert_eq!(out.bound, 4);
        assert_eq!(out.decomposition.piece_count(), 4);
        assert_eq!(out.s, vec![w("ababA"), w("ab"), w("e")]);
        assert_eq!(verify_decomposition(&free, &out.decomposition, false), Ok(()));
    }

    // Oracle: the inclusions claimed for the fixture, by direct translation.
    #[test]
    fn fixture_images() {
        let free = Action::free(2).unwrap();
        let c = fixture();
        let h1x1 = free.act_on_set(&c.elements[0], &c.sets[0]).unwrap();
        assert_eq!(h1x1, cone(2, "abA").union(&cone(2, "abb")).unwrap());
        let h2x2 = free.act_on_set(&c.elements[1], &c.sets[1]).unwrap();
        assert_eq!(h2x2, cone(2, "aba"));
    }

    #[test]
    fn failed_inclusion_names_a_witness() {
        let free = Action::free(2).unwrap();
        let mut c = fixture();
        c.elements[0] = w("b");
        match chain_to_decomposition(&free, &c) {
            Err(ChainFailure::Inclusion { i: 1, witness: Point::Word(x) }) => {
                assert!(!cone(2, "a").contains(&Point::Word(x)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cover_gap_is_reported() {
        // h1 X1 = X2 and h2 X2 = X1 leave D_i empty
        let free = Action::free(2).unwrap();
        let c = PingPongChain { sets: vec![cone(2, "a"), cone(2, "a")], elements: vec![w("e"), w("e")] };
        assert_eq!(
            chain_to_decomposition(&free, &c),
            Err(ChainFailure::CoverGap { witness: Point::Word(FreeWord::identity()) })
        );
    }

    #[test]
    fn shape() {
        let free = Action::free(2).unwrap();
        let c = PingPongChain { sets: vec![cone(2, "a")], elements: vec![w("a")] };
        assert!(matches!(chain_to_decomposition(&free, &c), Err(ChainFailure::Shape(_))));
    }
}
