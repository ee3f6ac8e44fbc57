//! Words in the free group on `n` generators.
//!
//! A letter is a generator with a sign; a word is a finite letter sequence.
//! The compact text form writes generator `i` (1-based) as `a<i>` for +1 and
//! `A<i>` for -1, so `a1 A2 a3` is the three-letter word with a negative
//! middle letter.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A single signed generator. `gen` is 0-based internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(gen: usize) -> Letter {
        Letter {
            gen,
            sign: Sign::Pos,
        }
    }

    pub fn neg(gen: usize) -> Letter {
        Letter {
            gen,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordParseError {
    #[error("letter `{0}` must be a sign character a/A followed by a 1-based index")]
    Malformed(String),
}

/// A word in a free group: an ordered sequence of letters. May be empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Smallest generator count covering every letter.
    pub fn generator_count(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.gen + 1)
            .max()
            .unwrap_or(0)
    }

    /// Exponent sum of generator `gen` (the image in the abelianization).
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.sign.as_i64())
            .sum()
    }

    /// Exponent sums for generators `0..n`.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        (0..n).map(|g| self.exponent_sum(g)).collect()
    }

    /// Free reduction: repeatedly cancel adjacent mutually inverse letters.
    /// The result is the unique reduced form of the group element.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last().is_some_and(|&top| top.is_inverse_of(l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    /// Cyclic reduction: free reduction followed by stripping mutually
    /// inverse first/last pairs. The result is a shortest word in the
    /// conjugacy class, unique up to rotation.
    pub fn cyclic_reduce(&self) -> Word {
        let mut w = self.free_reduce().letters;
        while w.len() >= 2 && w[0].is_inverse_of(*w.last().unwrap()) {
            w.pop();
            w.remove(0);
        }
        Word { letters: w }
    }

    /// Identity in the free group?
    pub fn is_trivial(&self) -> bool {
        self.free_reduce().is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Formal inverse: reversed order, flipped signs.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `conjugator * self * conjugator^-1` as a formal word (not reduced).
    pub fn conjugate_by(&self, conjugator: &Word) -> Word {
        conjugator.concat(self).concat(&conjugator.inverse())
    }

    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    /// Whether `other` is a cyclic rotation of `self` (letter-for-letter).
    pub fn is_rotation_of(&self, other: &Word) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        (0..self.len()).any(|k| self.rotate(k) == *other)
    }

    /// Drop every letter whose generator index is `keep` or larger,
    /// keeping the order of the rest.
    pub fn project_below(&self, keep: usize) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|l| l.gen < keep)
                .collect(),
        }
    }

    /// Relabel generators: letter with generator `g` becomes `perm[g]`.
    pub fn relabel(&self, perm: &[usize]) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    gen: perm[l.gen],
                    sign: l.sign,
                })
                .collect(),
        }
    }

    /// Parse the compact text form, e.g. `a1 A2 a3`. The empty string is the
    /// null word.
    pub fn parse(s: &str) -> Result<Word, WordParseError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let mut chars = tok.chars();
            let sign = match chars.next() {
                Some('a') => Sign::Pos,
                Some('A') => Sign::Neg,
                _ => return Err(WordParseError::Malformed(tok.to_string())),
            };
            let idx: usize = chars
                .as_str()
                .parse()
                .map_err(|_| WordParseError::Malformed(tok.to_string()))?;
            if idx == 0 {
                return Err(WordParseError::Malformed(tok.to_string()));
            }
            letters.push(Letter {
                gen: idx - 1,
                sign,
            });
        }
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let c = match l.sign {
                Sign::Pos => 'a',
                Sign::Neg => 'A',
            };
            write!(f, "{}{}", c, l.gen + 1)?;
        }
        Ok(())
    }
}
