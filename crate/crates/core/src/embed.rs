//! Two embeddings: `𝒬ₙ ↪ 𝒬₂` and `{a,b}* × {c,d}* ↪ 𝒬`.

use crate::error::{Error, Result};
use crate::normal_form::{eval_word, NormalForm};
use crate::word::{Alphabet, Symbol, Word};

/// The code word `a^{n+i} b a^{n-i} b` for the `i`-th letter (1-based) of an
/// `n`-letter alphabet.
pub fn q2_code(n: usize, i: usize) -> Vec<u8> {
    let mut code = vec![b'a'; n + i];
    code.push(b'b');
    code.extend(std::iter::repeat_n(b'a', n - i));
    code.push(b'b');
    code
}

/// Maps a word over the alphabet `source` into `{a,b}`: each write `αᵢ`
/// becomes the code word, each read `ᾱᵢ` its barred copy.
///
/// Letters of `w` outside `source` are rejected.
pub fn embed_q2(source: &Alphabet, w: &[Symbol]) -> Result<Word> {
    let n = source.len();
    let mut out = Vec::with_capacity(w.len() * (2 * n + 2));
    for &s in w {
        let i = source
            .position(s.letter())
            .ok_or(Error::LetterNotInAlphabet(s.letter() as char))?
            + 1;
        let code = q2_code(n, i);
        out.extend(code.into_iter().map(|a| match s {
            Symbol::Write(_) => Symbol::Write(a),
            Symbol::Read(_) => Symbol::Read(a),
        }));
    }
    Ok(Word::new(out))
}

/// The generator images `a ↦ [a]`, `b ↦ [ab]`, `c ↦ [b̄]`, `d ↦ [ā b̄ b̄]`.
pub fn product_generator(letter: u8) -> Option<Word> {
    match letter {
        b'a' => Some(Word::writes(b"a")),
        b'b' => Some(Word::writes(b"ab")),
        b'c' => Some(Word::reads(b"b")),
        b'd' => Some(Word::reads(b"abb")),
        _ => None,
    }
}

/// The embedding of `{a,b}* × {c,d}*` into `𝒬` over an alphabet containing
/// `a` and `b`. Images of the two factors commute with each other.
pub fn embed_product(first: &[u8], second: &[u8]) -> Result<NormalForm> {
    let mut w = Word::empty();
    for (letters, allowed) in [(first, "ab"), (second, "cd")] {
        for &x in letters {
            if !allowed.as_bytes().contains(&x) {
                return Err(Error::EmbeddingLetter {
                    expected: allowed,
                    found: x as char,
                });
            }
            w = w.concat(&product_generator(x).expect("checked above"));
        }
    }
    Ok(eval_word(&w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_code_shape() {
        let ab = Alphabet::binary();
        let w = embed_q2(&ab, &Word::writes(b"a")).unwrap();
        assert_eq!(ab.format_word(&w), "aaabab");
        let w = embed_q2(&ab, &Word::reads(b"b")).unwrap();
        assert_eq!(ab.format_word(&w), "AAAABB");
        assert_eq!(embed_q2(&ab, &[]).unwrap(), Word::empty());
    }

    #[test]
    fn q2_rejects_foreign_letters() {
        let ab = Alphabet::binary();
        assert_eq!(
            embed_q2(&ab, &Word::writes(b"c")),
            Err(Error::LetterNotInAlphabet('c'))
        );
    }

    #[test]
    fn product_examples() {
        assert_eq!(embed_product(b"", b"").unwrap(), NormalForm::identity());
        assert_eq!(
            embed_product(b"b", b"c").unwrap(),
            NormalForm::new(b"b", b"", b"ab")
        );
        assert_eq!(
            embed_product(b"a", b"c").unwrap(),
            NormalForm::new(b"b", b"", b"a")
        );
        assert!(embed_product(b"c", b"").is_err());
        assert!(embed_product(b"", b"a").is_err());
    }
}
