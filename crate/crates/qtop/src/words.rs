//! Words over a signed finite alphabet: the free monoid with involution,
//! reduction to free-group normal form, and exhaustive enumeration.
//!
//! A word is a finite sequence of letters `y` or `y'` (the formal inverse).
//! The empty word `e` is the monoid identity and prints as `"1"`. A word is
//! reduced when no adjacent pair cancels; reduced words are the normal forms
//! of the free group on the alphabet.

use crate::error::{Error, Result};
use std::cmp::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Letter {
        Letter { index, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

/// A word over an alphabet of `alphabet` letters.
///
/// Words are plain values with structural equality; two words are equal
/// exactly when they have the same alphabet size and letter sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    alphabet: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(alphabet: usize) -> Word {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    pub fn letter(alphabet: usize, index: usize, sign: Sign) -> Result<Word> {
        Word::from_letters(alphabet, vec![Letter::new(index, sign)])
    }

    pub fn from_letters(alphabet: usize, letters: Vec<Letter>) -> Result<Word> {
        for l in &letters {
            if l.index >= alphabet {
                return Err(Error::InvalidInput(format!(
                    "letter index {} outside alphabet of size {alphabet}",
                    l.index
                )));
            }
        }
        Ok(Word { alphabet, letters })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn sign_pattern(&self) -> Vec<Sign> {
        self.letters.iter().map(|l| l.sign).collect()
    }

    /// Concatenation; the length is additive, no reduction is performed.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            alphabet: self.alphabet,
            letters,
        })
    }

    /// Formal inverse: reversed sequence with flipped signs.
    pub fn invert(&self) -> Word {
        Word {
            alphabet: self.alphabet,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The unique reduced word representing `self` in the free group.
    ///
    /// Single stack pass: push each letter, pop when it cancels the top.
    pub fn reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last().copied() == Some(l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word {
            alphabet: self.alphabet,
            letters: stack,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// Number of occurrences of letter `index`, counting both signs.
    pub fn occurrences(&self, index: usize) -> usize {
        self.letters.iter().filter(|l| l.index == index).count()
    }

    /// Text encoding: letters as `label` or `label'`; the empty word as `"1"`.
    pub fn display(&self, labels: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| match l.sign {
                Sign::Plus => labels[l.index].clone(),
                Sign::Minus => format!("{}'", labels[l.index]),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the text encoding produced by [`Word::display`].
    pub fn parse(labels: &[String], text: &str) -> Result<Word> {
        let trimmed = text.trim();
        if trimmed == "1" {
            return Ok(Word::empty(labels.len()));
        }
        let mut letters = Vec::new();
        for token in trimmed.split_whitespace() {
            let (name, sign) = match token.strip_suffix('\'') {
                Some(base) => (base, Sign::Minus),
                None => (token, Sign::Plus),
            };
            let index = labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::InvalidInput(format!("unknown letter {token:?}")))?;
            letters.push(Letter::new(index, sign));
        }
        Ok(Word {
            alphabet: labels.len(),
            letters,
        })
    }
}

// Length-lexicographic order: by length first, then letter by letter with
// index before sign and positive before negative.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Number of words of length at most `n` over `k` letters: sum of `(2k)^i`.
pub fn unreduced_count(k: usize, n: usize) -> u128 {
    let mut total = 0u128;
    let mut pow = 1u128;
    for _ in 0..=n {
        total += pow;
        pow = pow.saturating_mul(2 * k as u128);
    }
    total
}

/// Number of reduced words of length at most `n` over `k` letters:
/// `1 + sum over 1<=i<=n of 2k(2k-1)^(i-1)`.
pub fn reduced_count(k: usize, n: usize) -> u128 {
    let mut total = 1u128;
    if k == 0 {
        return total;
    }
    let mut pow = 2 * k as u128;
    for _ in 1..=n {
        total += pow;
        pow = pow.saturating_mul(2 * k as u128 - 1);
    }
    total
}

/// All words (or all reduced words) of length at most `max_len`, in
/// length-lexicographic order, without duplicates.
pub fn enumerate(k: usize, max_len: usize, reduced_only: bool, limit: usize) -> Result<Vec<Word>> {
    let count = if reduced_only {
        reduced_count(k, max_len)
    } else {
        unreduced_count(k, max_len)
    };
    if count > limit as u128 {
        return Err(Error::SizeLimit {
            needed: count.min(usize::MAX as u128) as usize,
            limit,
        });
    }
    let mut all = vec![Word::empty(k)];
    let mut current = vec![Word::empty(k)];
    for _ in 1..=max_len {
        let mut next = Vec::new();
        for w in &current {
            let last = w.letters.last().copied();
            for index in 0..k {
                for sign in [Sign::Plus, Sign::Minus] {
                    let l = Letter::new(index, sign);
                    if reduced_only && last == Some(l.inverse()) {
                        continue;
                    }
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(Word {
                        alphabet: k,
                        letters,
                    });
                }
            }
        }
        all.extend(next.iter().cloned());
        current = next;
    }
    debug_assert_eq!(all.len() as u128, count);
    Ok(all)
}
