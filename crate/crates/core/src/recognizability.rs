//! Shuffledness, the recognizable sets `Ω_k`, and simple sets: Boolean
//! combinations of `π⁻¹(R)`, `π̄⁻¹(R)` and `Ω_k`.

use crate::automata::regex::parse_regex;
use crate::automata::{a_length, a_star, a_word, inverse_projection, Dfa, Nfa, Projection};
use crate::error::{Error, Result};
use crate::normal_form::NormalForm;
use crate::word::{Alphabet, Symbol};

/// Whether, for `i = 1..=k`, the `i`-th write of `w` comes before the `i`-th
/// of its last `k` reads.
pub fn k_shuffled(w: &[Symbol], k: usize) -> bool {
    let writes: Vec<usize> = (0..w.len()).filter(|&p| w[p].is_write()).collect();
    let reads: Vec<usize> = (0..w.len()).filter(|&p| w[p].is_read()).collect();
    if writes.len() < k || reads.len() < k {
        return false;
    }
    let first = reads.len() - k;
    (0..k).all(|i| writes[i] < reads[first + i])
}

/// Membership in `Ω_k`: no length `ℓ` with `ow(q) < ℓ ≤ k` is a common
/// suffix of `π̄(q)` and prefix of `π(q)`.
pub fn in_omega(q: &NormalForm, k: usize) -> bool {
    let (p, pb) = q.proj();
    let max = k.min(p.len()).min(pb.len());
    (q.overlap_width() + 1..=max).all(|l| !pb.ends_with(&p[..l]))
}

/// Words with at least `ℓ` writes and reads that are `ℓ`-shuffled.
fn shuffled_dfa(alphabet: &Alphabet, l: usize) -> Dfa {
    let sigma = alphabet.symbols();
    let any_write = Nfa::any_of(&sigma, &alphabet.write_symbols());
    let any_read = Nfa::any_of(&sigma, &alphabet.read_symbols());
    let mut out = Nfa::universal(&sigma).determinize();
    for i in 1..=l {
        let before = inverse_projection(alphabet, &a_length(alphabet, i - 1), Projection::Writes);
        let after = inverse_projection(alphabet, &a_length(alphabet, l - i), Projection::Reads);
        let cond = before
            .concat(&any_write)
            .and_then(|n| n.concat(&Nfa::universal(&sigma)))
            .and_then(|n| n.concat(&any_read))
            .and_then(|n| n.concat(&after))
            .expect("over Σ");
        out = out
            .intersect(&cond.determinize().minimize())
            .expect("over Σ")
            .minimize();
    }
    out
}

/// A minimal automaton for `{ w | [w] ∈ Ω_k }`.
pub fn omega_dfa(alphabet: &Alphabet, k: usize) -> Dfa {
    let shuffled: Vec<Dfa> = (0..=k).map(|l| shuffled_dfa(alphabet, l)).collect();
    let mut out = Nfa::sigma_star(alphabet).determinize();
    for u in alphabet
        .letter_words_up_to(k)
        .into_iter()
        .filter(|u| !u.is_empty())
    {
        let prefix = a_word(alphabet, &u)
            .concat(&a_star(alphabet))
            .expect("over A");
        let suffix = a_star(alphabet)
            .concat(&a_word(alphabet, &u))
            .expect("over A");
        let border = inverse_projection(alphabet, &prefix, Projection::Writes)
            .intersect(&inverse_projection(alphabet, &suffix, Projection::Reads))
            .expect("over Σ")
            .determinize();
        let term = border
            .complement()
            .union(&shuffled[u.len()])
            .expect("over Σ")
            .minimize();
        out = out.intersect(&term).expect("over Σ").minimize();
    }
    out
}

/// [`omega_dfa`] as an [`Nfa`].
pub fn omega_nfa(alphabet: &Alphabet, k: usize) -> Nfa {
    omega_dfa(alphabet, k).to_nfa()
}

/// A Boolean combination of inverse projections and `Ω_k` sets. Language
/// atoms are automata over the write symbols of the alphabet.
#[derive(Clone, Debug)]
pub enum SimpleSetExpr {
    PiIn(Nfa),
    PiBarIn(Nfa),
    Omega(usize),
    And(Box<SimpleSetExpr>, Box<SimpleSetExpr>),
    Or(Box<SimpleSetExpr>, Box<SimpleSetExpr>),
    Not(Box<SimpleSetExpr>),
}

impl SimpleSetExpr {
    pub fn and(self, other: SimpleSetExpr) -> SimpleSetExpr {
        SimpleSetExpr::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: SimpleSetExpr) -> SimpleSetExpr {
        SimpleSetExpr::Or(Box::new(self), Box::new(other))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> SimpleSetExpr {
        SimpleSetExpr::Not(Box::new(self))
    }
}

fn accepts_letters(n: &Nfa, letters: &[u8]) -> bool {
    let w: Vec<Symbol> = letters.iter().map(|&a| Symbol::Write(a)).collect();
    n.accepts(&w)
}

/// Evaluates `e` on a queue action directly.
pub fn eval_simple(e: &SimpleSetExpr, q: &NormalForm) -> bool {
    match e {
        SimpleSetExpr::PiIn(r) => accepts_letters(r, &q.pi()),
        SimpleSetExpr::PiBarIn(r) => accepts_letters(r, &q.pi_bar()),
        SimpleSetExpr::Omega(k) => in_omega(q, *k),
        SimpleSetExpr::And(a, b) => eval_simple(a, q) && eval_simple(b, q),
        SimpleSetExpr::Or(a, b) => eval_simple(a, q) || eval_simple(b, q),
        SimpleSetExpr::Not(a) => !eval_simple(a, q),
    }
}

/// A minimal automaton over `Σ` accepting the words whose class lies in
/// the set described by `e`.
pub fn compile_simple(alphabet: &Alphabet, e: &SimpleSetExpr) -> Result<Dfa> {
    let check = |r: &Nfa| {
        if r.alphabet() == alphabet.write_symbols().as_slice() {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    };
    let out = match e {
        SimpleSetExpr::PiIn(r) => {
            check(r)?;
            inverse_projection(alphabet, r, Projection::Writes).determinize()
        }
        SimpleSetExpr::PiBarIn(r) => {
            check(r)?;
            inverse_projection(alphabet, r, Projection::Reads).determinize()
        }
        SimpleSetExpr::Omega(k) => omega_dfa(alphabet, *k),
        SimpleSetExpr::And(a, b) => {
            compile_simple(alphabet, a)?.intersect(&compile_simple(alphabet, b)?)?
        }
        SimpleSetExpr::Or(a, b) => {
            compile_simple(alphabet, a)?.union(&compile_simple(alphabet, b)?)?
        }
        SimpleSetExpr::Not(a) => compile_simple(alphabet, a)?.complement(),
    };
    Ok(out.minimize())
}

/// Parses the expression syntax: atoms `pi(REGEX)`, `pibar(REGEX)` and
/// `omega(K)`, operators `!`, `&`, `|` (tightest first) and parentheses.
pub fn parse_simple(alphabet: &Alphabet, src: &str) -> Result<SimpleSetExpr> {
    let mut p = ExprParser {
        alphabet,
        src,
        pos: 0,
    };
    let e = p.or()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error("unexpected input"));
    }
    Ok(e)
}

struct ExprParser<'a> {
    alphabet: &'a Alphabet,
    src: &'a str,
    pos: usize,
}

impl ExprParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Expr {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn or(&mut self) -> Result<SimpleSetExpr> {
        let mut e = self.and()?;
        while self.eat("|") {
            e = e.or(self.and()?);
        }
        Ok(e)
    }

    fn and(&mut self) -> Result<SimpleSetExpr> {
        let mut e = self.unary()?;
        while self.eat("&") {
            e = e.and(self.unary()?);
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<SimpleSetExpr> {
        if self.eat("!") {
            return Ok(self.unary()?.not());
        }
        if self.eat("(") {
            let e = self.or()?;
            if !self.eat(")") {
                return Err(self.error("expected ')'"));
            }
            return Ok(e);
        }
        // longest keyword first: pibar before pi
        if self.eat("pibar(") {
            return Ok(SimpleSetExpr::PiBarIn(self.regex_body()?));
        }
        if self.eat("pi(") {
            return Ok(SimpleSetExpr::PiIn(self.regex_body()?));
        }
        if self.eat("omega(") {
            self.skip_ws();
            let start = self.pos;
            let digits = self.src[start..]
                .bytes()
                .take_while(u8::is_ascii_digit)
                .count();
            let k = self.src[start..start + digits]
                .parse()
                .map_err(|_| self.error("expected a number"))?;
            self.pos += digits;
            if !self.eat(")") {
                return Err(self.error("expected ')'"));
            }
            return Ok(SimpleSetExpr::Omega(k));
        }
        Err(self.error("expected pi(..), pibar(..), omega(..), '!' or '('"))
    }

    /// Everything up to the matching ')', compiled as a regex.
    fn regex_body(&mut self) -> Result<Nfa> {
        let start = self.pos;
        let mut depth = 0usize;
        for (i, c) in self.src[start..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => {
                    let body = &self.src[start..start + i];
                    self.pos = start + i + 1;
                    return parse_regex(self.alphabet, body).map_err(|e| match e {
                        Error::Expr { offset, message } => Error::Expr {
                            offset: start + offset,
                            message,
                        },
                        other => other,
                    });
                }
                ')' => depth -= 1,
                _ => {}
            }
        }
        Err(Error::Expr {
            offset: start,
            message: "unclosed atom".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::ow;
    use crate::rewrite::rewrite_normalize;
    use crate::word::Word;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn shuffledness_examples() {
        assert!(k_shuffled(&w("aA"), 1));
        assert!(!k_shuffled(&w("Aa"), 1));
        assert!(k_shuffled(&w("BA"), 0));
        assert!(!k_shuffled(&w("a"), 1));
        for n in 2..=5 {
            for k in 0..n - 1 {
                let s = format!(
                    "{}b{}{}B{}",
                    "a".repeat(n),
                    "a".repeat(k),
                    "A".repeat(n - 1),
                    "A".repeat(k)
                );
                assert!(k_shuffled(&w(&s), k), "{s}");
                assert_eq!(ow(&w(&s)), k, "{s}");
            }
        }
    }

    #[test]
    fn omega_examples() {
        let q = rewrite_normalize(&w("ABaAba"));
        assert!(in_omega(&q, 2));
        assert!(!in_omega(&q, 3));
        for k in 1..=4 {
            let q = rewrite_normalize(&w(&"Aa".repeat(k)));
            assert!(in_omega(&q, k - 1));
            assert!(!in_omega(&q, k));
        }
        assert!(in_omega(&rewrite_normalize(&w("Aa")), 0));
    }

    #[test]
    fn omega_automaton_small_cases() {
        let ab = Alphabet::binary();
        let d0 = omega_dfa(&ab, 0);
        assert!(ab.words_up_to(3).iter().all(|v| d0.accepts(v)));
        let d1 = omega_dfa(&ab, 1);
        assert!(!d1.accepts(&w("Aa")));
        assert!(d1.accepts(&w("aA")));
        for v in ab.words_up_to(5) {
            assert_eq!(d1.accepts(&v), in_omega(&rewrite_normalize(&v), 1), "{v}");
        }
    }

    #[test]
    fn expression_parsing_and_evaluation() {
        let ab = Alphabet::binary();
        let e = parse_simple(&ab, "pi(a*) & pibar(a*) & !omega(1)").unwrap();
        assert!(eval_simple(&e, &rewrite_normalize(&w("Aa"))));
        assert!(!eval_simple(&e, &rewrite_normalize(&w("aA"))));
        let d = compile_simple(&ab, &e).unwrap();
        for v in ab.words_up_to(4) {
            assert_eq!(
                d.accepts(&v),
                eval_simple(&e, &rewrite_normalize(&v)),
                "{v}"
            );
        }
        let e = parse_simple(&ab, "pi(a|b) | (omega(2))").unwrap();
        assert!(eval_simple(&e, &rewrite_normalize(&w("b"))));
        assert!(matches!(parse_simple(&ab, "pi(a"), Err(Error::Expr { .. })));
        assert!(matches!(
            parse_simple(&ab, "pi(c)"),
            Err(Error::Expr { offset: 3, .. })
        ));
        assert!(matches!(
            parse_simple(&ab, "omega(x)"),
            Err(Error::Expr { .. })
        ));
        assert!(matches!(
            parse_simple(&ab, "pi(a) pi(b)"),
            Err(Error::Expr { .. })
        ));
    }

    #[test]
    fn shuffledness_tracks_overlap_width() {
        let ab = Alphabet::binary();
        for v in ab.words_up_to(5) {
            let (p, pb) = (v.pi(), v.pi_bar());
            for k in 0..=p.len().min(pb.len()) {
                if pb.ends_with(&p[..k]) {
                    assert_eq!(k_shuffled(&v, k), ow(&v) >= k, "{v} {k}");
                }
            }
        }
    }
}
