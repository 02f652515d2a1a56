use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported free-group rank. One lowercase character per generator.
pub const MAX_RANK: usize = 10;

// 'e' is reserved for the identity word, so generator five is 'f'.
const GENERATOR_CHARS: [char; MAX_RANK] = ['a', 'b', 'c', 'd', 'f', 'g', 'h', 'i', 'j', 'k'];

/// A generator or its inverse.
///
/// Letters are ordered by generator first and then sign, so `a < A < b < B`.
/// This is the order used for lexicographic comparison of words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    generator: u8,
    inverse: bool,
}

impl Letter {
    /// `generator` is zero-based.
    pub fn new(generator: usize, inverse: bool) -> Letter {
        assert!(generator < MAX_RANK, "generator {generator} exceeds MAX_RANK");
        Letter { generator: generator as u8, inverse }
    }

    pub fn generator(self) -> usize {
        self.generator as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverse(self) -> Letter {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    /// Position in the signed alphabet `a, A, b, B, ...`.
    pub fn index(self) -> usize {
        2 * self.generator as usize + self.inverse as usize
    }

    pub fn from_index(index: usize) -> Letter {
        Letter::new(index / 2, index % 2 == 1)
    }

    pub fn to_char(self) -> char {
        let c = GENERATOR_CHARS[self.generator as usize];
        if self.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        let lower = c.to_ascii_lowercase();
        let generator = GENERATOR_CHARS.iter().position(|&g| g == lower)?;
        Some(Letter::new(generator, c.is_ascii_uppercase()))
    }

    /// All `2 * rank` letters in alphabet order.
    pub fn alphabet(rank: usize) -> impl Iterator<Item = Letter> {
        (0..2 * rank).map(Letter::from_index)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A reduced word in a free group. The empty word is the identity `e`.
///
/// Words order shortlex: shorter words first, then lexicographically by
/// [`Letter`] order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord(Vec::new())
    }

    pub fn from_letter(letter: Letter) -> FreeWord {
        FreeWord(vec![letter])
    }

    /// Freely reduces `letters`, rejecting generators outside `rank`.
    pub fn reduce<I>(rank: usize, letters: I) -> Result<FreeWord>
    where
        I: IntoIterator<Item = Letter>,
    {
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if l.generator() >= rank {
                return Err(Error::GeneratorOutOfRange { index: l.generator() + 1, rank });
            }
            push_reduced(&mut out, l);
        }
        Ok(FreeWord(out))
    }

    /// Parses the letter syntax: lowercase generator, uppercase inverse,
    /// `"e"` for the identity. The input need not be reduced.
    pub fn parse(s: &str, rank: usize) -> Result<FreeWord> {
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        if s == "e" {
            return Ok(FreeWord::identity());
        }
        if s.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut letters = Vec::with_capacity(s.len());
        for (offset, c) in s.chars().enumerate() {
            match Letter::from_char(c) {
                Some(l) if l.generator() < rank => letters.push(l),
                _ => return Err(Error::InvalidLetter { letter: c, offset }),
            }
        }
        FreeWord::reduce(rank, letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Smallest rank in which this word is expressible.
    pub fn min_rank(&self) -> usize {
        self.0.iter().map(|l| l.generator() + 1).max().unwrap_or(0)
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.0.clone();
        for &l in &other.0 {
            push_reduced(&mut out, l);
        }
        FreeWord(out)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, exponent: i64) -> FreeWord {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut acc = FreeWord::identity();
        for _ in 0..exponent.unsigned_abs() {
            acc = acc.multiply(&base);
        }
        acc
    }

    /// Appends one letter, cancelling if it undoes the last one.
    pub fn append(&self, letter: Letter) -> FreeWord {
        let mut out = self.0.clone();
        push_reduced(&mut out, letter);
        FreeWord(out)
    }

    pub fn has_prefix(&self, prefix: &FreeWord) -> bool {
        self.0.starts_with(&prefix.0)
    }

    /// All reduced words of length at most `max_len`, in shortlex order.
    pub fn all_up_to(rank: usize, max_len: usize) -> Vec<FreeWord> {
        let mut out = vec![FreeWord::identity()];
        let mut frontier = vec![FreeWord::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for l in Letter::alphabet(rank) {
                    if w.last() != Some(l.inverse()) {
                        let mut letters = w.0.clone();
                        letters.push(l);
                        next.push(FreeWord(letters));
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<FreeWord> {
        FreeWord::parse(s, MAX_RANK)
    }
}

/// Reduces a raw sequence of signed, one-based generator indices
/// (`2` is `b`, `-2` is `B`).
pub fn reduce_word(rank: usize, raw: &[i32]) -> Result<FreeWord> {
    let mut letters = Vec::with_capacity(raw.len());
    for &s in raw {
        let index = s.unsigned_abs() as usize;
        if s == 0 || index > rank || index > MAX_RANK {
            return Err(Error::GeneratorOutOfRange { index, rank });
        }
        letters.push(Letter::new(index - 1, s < 0));
    }
    FreeWord::reduce(rank, letters)
}
