//! A small regular-expression syntax for languages over `A`.
//!
//! Letters, concatenation, `|`, postfix `*` and parentheses. An empty
//! alternative stands for the empty word, so `(|a)b` is `{b, ab}`.
//! Whitespace is ignored.

use super::nfa::Nfa;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol};

/// Compiles `src` to an automaton over the write symbols of `alphabet`.
pub fn parse_regex(alphabet: &Alphabet, src: &str) -> Result<Nfa> {
    let mut p = Parser {
        alphabet,
        chars: src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        len: src.len(),
    };
    let n = p.alternation()?;
    match p.peek() {
        None => Ok(n),
        Some((at, c)) => Err(Error::Expr {
            offset: at,
            message: format!("unexpected {c:?}"),
        }),
    }
}

struct Parser<'a> {
    alphabet: &'a Alphabet,
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn sigma(&self) -> Vec<Symbol> {
        self.alphabet.write_symbols()
    }

    fn alternation(&mut self) -> Result<Nfa> {
        let mut n = self.concatenation()?;
        while let Some((_, '|')) = self.peek() {
            self.pos += 1;
            n = n.union(&self.concatenation()?)?;
        }
        Ok(n)
    }

    fn concatenation(&mut self) -> Result<Nfa> {
        let mut n = Nfa::epsilon(&self.sigma());
        while let Some((_, c)) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            n = n.concat(&self.starred()?)?;
        }
        Ok(n)
    }

    fn starred(&mut self) -> Result<Nfa> {
        let mut n = self.atom()?;
        while let Some((_, '*')) = self.peek() {
            self.pos += 1;
            n = n.star();
        }
        Ok(n)
    }

    fn atom(&mut self) -> Result<Nfa> {
        let Some((at, c)) = self.peek() else {
            return Err(Error::Expr {
                offset: self.len,
                message: "unexpected end of expression".into(),
            });
        };
        self.pos += 1;
        match c {
            '(' => {
                let n = self.alternation()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.pos += 1;
                        Ok(n)
                    }
                    _ => Err(Error::Expr {
                        offset: at,
                        message: "unclosed parenthesis".into(),
                    }),
                }
            }
            c if c.is_ascii_lowercase() && self.alphabet.contains(c as u8) => {
                Ok(Nfa::word(&self.sigma(), &[Symbol::Write(c as u8)]))
            }
            c => Err(Error::Expr {
                offset: at,
                message: format!("unexpected {c:?}"),
            }),
        }
    }
}
