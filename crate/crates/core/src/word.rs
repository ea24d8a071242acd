//! Letters, symbols and words over `Σ = A ∪ Ā`.
//!
//! The textual syntax used throughout the crate writes a write symbol `a` as
//! the lowercase letter and the read symbol `ā` as the matching uppercase
//! letter, so `"abBA"` is `a b b̄ ā`. The empty word is written `e` (or the
//! empty string).

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A single queue operation: write a letter or read a letter.
///
/// Write symbols order before read symbols; within a kind, by letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Write(u8),
    Read(u8),
}

impl Symbol {
    pub fn letter(self) -> u8 {
        match self {
            Symbol::Write(a) | Symbol::Read(a) => a,
        }
    }

    pub fn is_write(self) -> bool {
        matches!(self, Symbol::Write(_))
    }

    pub fn is_read(self) -> bool {
        matches!(self, Symbol::Read(_))
    }

    /// Swaps write and read, keeping the letter.
    pub fn toggled(self) -> Symbol {
        match self {
            Symbol::Write(a) => Symbol::Read(a),
            Symbol::Read(a) => Symbol::Write(a),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Symbol::Write(a) => a as char,
            Symbol::Read(a) => (a as char).to_ascii_uppercase(),
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        if c.is_ascii_lowercase() {
            Some(Symbol::Write(c as u8))
        } else if c.is_ascii_uppercase() {
            Some(Symbol::Read(c.to_ascii_lowercase() as u8))
        } else {
            None
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite word over `Σ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The word `a₁ a₂ … aₙ` writing the given letters in order.
    pub fn writes(letters: &[u8]) -> Self {
        Word(letters.iter().map(|&a| Symbol::Write(a)).collect())
    }

    /// The word `ā₁ ā₂ … āₙ` reading the given letters in order.
    pub fn reads(letters: &[u8]) -> Self {
        Word(letters.iter().map(|&a| Symbol::Read(a)).collect())
    }

    /// Parses the case-encoded syntax without checking against an alphabet.
    pub fn parse(s: &str) -> Result<Self> {
        if s == "e" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| Symbol::from_char(c).ok_or(Error::InvalidLetter(c)))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The subword of write symbols, bars removed (`π`).
    pub fn pi(&self) -> Vec<u8> {
        pi(&self.0)
    }

    /// The subword of read symbols, bars removed (`π̄`).
    pub fn pi_bar(&self) -> Vec<u8> {
        pi_bar(&self.0)
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

pub fn pi(w: &[Symbol]) -> Vec<u8> {
    w.iter()
        .filter_map(|s| match s {
            Symbol::Write(a) => Some(*a),
            Symbol::Read(_) => None,
        })
        .collect()
}

pub fn pi_bar(w: &[Symbol]) -> Vec<u8> {
    w.iter()
        .filter_map(|s| match s {
            Symbol::Read(a) => Some(*a),
            Symbol::Write(_) => None,
        })
        .collect()
}

/// Renders a word over `A` (plain letters); the empty word is `e`.
pub fn letters_to_string(letters: &[u8]) -> String {
    if letters.is_empty() {
        "e".to_string()
    } else {
        letters.iter().map(|&a| a as char).collect()
    }
}

/// A finite, totally ordered set of at least two lowercase ASCII letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<u8>,
}

impl Alphabet {
    /// Builds an alphabet from a string of distinct lowercase letters. The
    /// order of the letters is kept as given.
    pub fn new(letters: &str) -> Result<Self> {
        let mut seen = Vec::new();
        for c in letters.chars() {
            if !c.is_ascii_lowercase() {
                return Err(Error::InvalidLetter(c));
            }
            if seen.contains(&(c as u8)) {
                return Err(Error::DuplicateLetter(c));
            }
            seen.push(c as u8);
        }
        if seen.len() < 2 {
            return Err(Error::AlphabetTooSmall(seen.len()));
        }
        Ok(Alphabet { letters: seen })
    }

    /// The alphabet `{a, b}`.
    pub fn binary() -> Self {
        Alphabet {
            letters: b"ab".to_vec(),
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, a: u8) -> bool {
        self.letters.contains(&a)
    }

    /// Index of a letter in the alphabet order.
    pub fn position(&self, a: u8) -> Option<usize> {
        self.letters.iter().position(|&b| b == a)
    }

    /// All symbols of `Σ`: writes first, then reads.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut v = self.write_symbols();
        v.extend(self.letters.iter().map(|&a| Symbol::Read(a)));
        v
    }

    pub fn write_symbols(&self) -> Vec<Symbol> {
        self.letters.iter().map(|&a| Symbol::Write(a)).collect()
    }

    pub fn read_symbols(&self) -> Vec<Symbol> {
        self.letters.iter().map(|&a| Symbol::Read(a)).collect()
    }

    /// Whether `e` denotes the empty word rather than a letter.
    fn e_is_empty(&self) -> bool {
        !self.contains(b'e')
    }

    /// Parses a word in the case-encoded syntax and checks every letter.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        if s == "e" && self.e_is_empty() {
            return Ok(Word::empty());
        }
        let mut w = Vec::with_capacity(s.len());
        for c in s.chars() {
            let sym = Symbol::from_char(c).ok_or(Error::InvalidLetter(c))?;
            if !self.contains(sym.letter()) {
                return Err(Error::LetterNotInAlphabet(sym.letter() as char));
            }
            w.push(sym);
        }
        Ok(Word(w))
    }

    /// Parses a word over `A` (lowercase only), e.g. queue contents.
    pub fn parse_letters(&self, s: &str) -> Result<Vec<u8>> {
        if s == "e" && self.e_is_empty() {
            return Ok(Vec::new());
        }
        s.chars()
            .map(|c| {
                if !c.is_ascii_lowercase() {
                    Err(Error::InvalidLetter(c))
                } else if !self.contains(c as u8) {
                    Err(Error::LetterNotInAlphabet(c))
                } else {
                    Ok(c as u8)
                }
            })
            .collect()
    }

    /// Formats a word so that [`Alphabet::parse_word`] reads it back.
    pub fn format_word(&self, w: &[Symbol]) -> String {
        if w.is_empty() && self.e_is_empty() {
            return "e".to_string();
        }
        w.iter().map(|s| s.to_char()).collect()
    }

    pub fn format_letters(&self, letters: &[u8]) -> String {
        if letters.is_empty() && self.e_is_empty() {
            return "e".to_string();
        }
        letters.iter().map(|&a| a as char).collect()
    }

    /// All words of exactly `len` symbols over `Σ`, in lexicographic order
    /// of [`Alphabet::symbols`].
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        tuples(&self.symbols(), len).into_iter().map(Word).collect()
    }

    /// All words over `Σ` of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len)
            .flat_map(|n| self.words_of_length(n))
            .collect()
    }

    /// All words over `A` of length at most `max_len`, shortest first.
    pub fn letter_words_up_to(&self, max_len: usize) -> Vec<Vec<u8>> {
        (0..=max_len)
            .flat_map(|n| tuples(&self.letters, n))
            .collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.letters {
            write!(f, "{}", a as char)?;
        }
        Ok(())
    }
}

fn tuples<T: Copy>(items: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                items.iter().map(move |&x| {
                    let mut w = prefix.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_rejects_small_or_malformed_input() {
        assert_eq!(Alphabet::new("a"), Err(Error::AlphabetTooSmall(1)));
        assert_eq!(Alphabet::new(""), Err(Error::AlphabetTooSmall(0)));
        assert_eq!(Alphabet::new("aba"), Err(Error::DuplicateLetter('a')));
        assert_eq!(Alphabet::new("aB"), Err(Error::InvalidLetter('B')));
        assert!(Alphabet::new("xyz").is_ok());
    }

    #[test]
    fn parse_case_encoded_syntax() {
        let ab = Alphabet::binary();
        let w = ab.parse_word("abBA").unwrap();
        assert_eq!(
            w.symbols(),
            &[
                Symbol::Write(b'a'),
                Symbol::Write(b'b'),
                Symbol::Read(b'b'),
                Symbol::Read(b'a')
            ]
        );
        assert_eq!(ab.parse_word("e").unwrap(), Word::empty());
        assert_eq!(ab.parse_word("").unwrap(), Word::empty());
        assert_eq!(ab.parse_word("ac"), Err(Error::LetterNotInAlphabet('c')));
        assert_eq!(ab.parse_word("a1"), Err(Error::InvalidLetter('1')));
        assert_eq!(ab.format_word(&w), "abBA");
        assert_eq!(ab.format_word(&[]), "e");
    }

    #[test]
    fn e_is_a_letter_when_the_alphabet_has_one() {
        let ae = Alphabet::new("ae").unwrap();
        assert_eq!(ae.parse_word("e").unwrap(), Word::writes(b"e"));
        assert_eq!(ae.format_word(&[]), "");
        assert_eq!(ae.parse_word("").unwrap(), Word::empty());
    }

    #[test]
    fn projections() {
        let w = Alphabet::binary().parse_word("aBAb").unwrap();
        assert_eq!(w.pi(), b"ab");
        assert_eq!(w.pi_bar(), b"ba");
    }

    #[test]
    fn enumeration_counts() {
        let ab = Alphabet::binary();
        assert_eq!(ab.words_of_length(3).len(), 64);
        assert_eq!(ab.words_up_to(2).len(), 1 + 4 + 16);
        assert_eq!(ab.letter_words_up_to(3).len(), 15);
    }
}
