//! Paradoxical decompositions and the constructions that produce them.
//!
//! A paradoxical decomposition consists of pairwise disjoint pieces
//! `A1..An, B1..Bm` and elements `g_i, h_j` with
//! `X = ∪ g_i·A_i = ∪ h_j·B_j`. The pieces need not exhaust `X` and the
//! translates need not be disjoint unless the strict variant is requested.

mod chain;
mod pattern;
mod pingpong;
mod search;
mod witness;

use std::fmt;

use crate::actions::Action;
use crate::groups::GroupElement;
use crate::sets::{Point, PointSet};

pub use chain::{chain_to_decomposition, ChainDecomposition, ChainFailure, PingPongChain};
pub use pattern::{pattern_check, ParadoxPattern, PatternFailure};
pub use pingpong::{
    check_pingpong_cyclic, check_pingpong_subgroups, CyclicCertificate, CyclicTableau, PingPongFailure,
    SubgroupCertificate, SubgroupSpec,
};
pub use search::{bounded_paradox_search, SearchBounds, SearchOutcome};
pub use witness::{
    make_infinite_order_witness, make_nonabelian_witness, verify_infinite_order, verify_nonabelian,
    InfiniteOrderWitness, NonabelianWitness, WitnessFailure,
};

/// Lower bound on the number of pieces of any paradoxical decomposition.
pub const MIN_PIECES: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParadoxicalDecomposition {
    pub a_pieces: Vec<PointSet>,
    pub a_translators: Vec<GroupElement>,
    pub b_pieces: Vec<PointSet>,
    pub b_translators: Vec<GroupElement>,
}

impl ParadoxicalDecomposition {
    pub fn piece_count(&self) -> usize {
        self.a_pieces.len() + self.b_pieces.len()
    }

    /// All pieces, `A` side first.
    pub fn pieces(&self) -> impl Iterator<Item = &PointSet> {
        self.a_pieces.iter().chain(&self.b_pieces)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// Why a decomposition fails. Piece numbers are one-based and count the
/// `A` pieces first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionFailure {
    Shape(String),
    Incompatible(String),
    Overlap {
        first: usize,
        second: usize,
        witness: Point,
    },
    CoverGap {
        side: Side,
        witness: Point,
    },
    /// Strict variant: the pieces leave a point uncovered.
    NotExhaustive {
        witness: Point,
    },
    /// Strict variant: two translates on one side meet.
    TranslatesOverlap {
        side: Side,
        first: usize,
        second: usize,
        witness: Point,
    },
}

impl fmt::Display for DecompositionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionFailure::Shape(s) => write!(f, "malformed decomposition: {s}"),
            DecompositionFailure::Incompatible(s) => write!(f, "incompatible with the action: {s}"),
            DecompositionFailure::Overlap { first, second, witness } => {
                write!(f, "pieces {first} and {second} are not disjoint: both contain {witness}")
            }
            DecompositionFailure::CoverGap { side, witness } => {
                write!(f, "cover gap: the {side} translates miss {witness}")
            }
            DecompositionFailure::NotExhaustive { witness } => write!(f, "pieces do not exhaust the space: {witness}"),
            DecompositionFailure::TranslatesOverlap { side, first, second, witness } => {
                write!(f, "{side} translates {first} and {second} overlap at {witness}")
            }
        }
    }
}

fn incompatible(e: crate::Error) -> DecompositionFailure {
    DecompositionFailure::Incompatible(e.to_string())
}

/// Checks disjointness of all pieces and both covers. With `strict`, also
/// requires the pieces to exhaust `X` and each side's translates to be
/// pairwise disjoint.
pub fn verify_decomposition(
    action: &Action,
    dec: &ParadoxicalDecomposition,
    strict: bool,
) -> Result<(), DecompositionFailure> {
    if dec.a_pieces.len() != dec.a_translators.len() || dec.b_pieces.len() != dec.b_translators.len() {
        return Err(DecompositionFailure::Shape("each piece needs exactly one translator".into()));
    }
    if dec.a_pieces.is_empty() || dec.b_pieces.is_empty() {
        return Err(DecompositionFailure::Shape("both sides need at least one piece".into()));
    }
    let pieces: Vec<&PointSet> = dec.pieces().collect();
    for p in &pieces {
        action.check_set(p).map_err(incompatible)?;
    }
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            if let Some(witness) = pieces[i].overlap_with(pieces[j]).map_err(incompatible)? {
                return Err(DecompositionFailure::Overlap { first: i + 1, second: j + 1, witness });
            }
        }
    }
    let full = action.full_set();
    for (side, ps, gs) in [(Side::A, &dec.a_pieces, &dec.a_translators), (Side::B, &dec.b_pieces, &dec.b_translators)] {
        let translates = ps
            .iter()
            .zip(gs)
            .map(|(p, g)| action.act_on_set(g, p))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(incompatible)?;
        let union = PointSet::union_all(&translates).map_err(incompatible)?.expect("nonempty side");
        if let Some(witness) = full.missing_from(&union).map_err(incompatible)? {
            return Err(DecompositionFailure::CoverGap { side, witness });
        }
        if strict {
            for i in 0..translates.len() {
                for j in i + 1..translates.len() {
                    if let Some(witness) = translates[i].overlap_with(&translates[j]).map_err(incompatible)? {
                        return Err(DecompositionFailure::TranslatesOverlap {
                            side,
                            first: i + 1,
                            second: j + 1,
                            witness,
                        });
                    }
                }
            }
        }
    }
    if strict {
        let union = PointSet::union_all(pieces.iter().copied()).map_err(incompatible)?.expect("nonempty");
        if let Some(witness) = full.missing_from(&union).map_err(incompatible)? {
            return Err(DecompositionFailure::NotExhaustive { witness });
        }
    }
    Ok(())
}
