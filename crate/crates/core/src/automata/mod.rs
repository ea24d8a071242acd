//! Finite automata over `Σ = A ∪ Ā` and over `A`.
//!
//! Automata over `A` are ordinary [`Nfa`]s whose alphabet consists of write
//! symbols only; [`inverse_projection`] lifts them to `Σ`.

mod class;
mod dfa;
pub mod format;
mod nfa;
pub mod regex;

pub use class::{class_dfa, rational_member, ClassAutomaton, ClassDfaState};
pub use dfa::Dfa;
pub use nfa::Nfa;

use crate::word::{Alphabet, Symbol};

/// Which projection an inverse image is taken through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    /// `π`, keeping write symbols.
    Writes,
    /// `π̄`, keeping read symbols.
    Reads,
}

/// `A*` as an automaton over the write symbols of `alphabet`.
pub fn a_star(alphabet: &Alphabet) -> Nfa {
    Nfa::universal(&alphabet.write_symbols())
}

/// `{u}` for a word `u` over `A`.
pub fn a_word(alphabet: &Alphabet, u: &[u8]) -> Nfa {
    let w: Vec<Symbol> = u.iter().map(|&a| Symbol::Write(a)).collect();
    Nfa::word(&alphabet.write_symbols(), &w)
}

/// `A^n`.
pub fn a_length(alphabet: &Alphabet, n: usize) -> Nfa {
    let writes = alphabet.write_symbols();
    let mut out = Nfa::new(writes.iter().copied());
    let mut q = out.add_state();
    out.set_initial(q);
    for _ in 0..n {
        let next = out.add_state();
        for &s in &writes {
            out.add_transition(q, s, next).expect("write symbol");
        }
        q = next;
    }
    out.set_accepting(q);
    out
}

/// The inverse image of a language over `A` under `π` or `π̄`: symbols of
/// the ignored kind loop on every state.
pub fn inverse_projection(alphabet: &Alphabet, lang: &Nfa, which: Projection) -> Nfa {
    let sigma = alphabet.symbols();
    let kind = |a: u8| match which {
        Projection::Writes => Symbol::Write(a),
        Projection::Reads => Symbol::Read(a),
    };
    let mut out = lang
        .relabel(&sigma, |s| kind(s.letter()))
        .expect("letters of the A-automaton belong to the alphabet");
    let ignored: Vec<Symbol> = alphabet
        .letters()
        .iter()
        .map(|&a| kind(a).toggled())
        .collect();
    for q in 0..out.num_states() {
        for &s in &ignored {
            out.add_transition(q, s, q).expect("symbol of Σ");
        }
    }
    out
}

/// The normal-form language `Ā* {aā | a ∈ A}* A*`.
pub fn nf_language(alphabet: &Alphabet) -> Dfa {
    let mut n = Nfa::new(alphabet.symbols());
    let reads = n.add_state();
    let pairs = n.add_state();
    let writes = n.add_state();
    n.set_initial(reads);
    n.set_accepting(writes);
    n.add_epsilon(reads, pairs).expect("states exist");
    n.add_epsilon(pairs, writes).expect("states exist");
    for &a in alphabet.letters() {
        n.add_transition(reads, Symbol::Read(a), reads)
            .expect("in Σ");
        n.add_transition(writes, Symbol::Write(a), writes)
            .expect("in Σ");
        let mid = n.add_state();
        n.add_transition(pairs, Symbol::Write(a), mid)
            .expect("in Σ");
        n.add_transition(mid, Symbol::Read(a), pairs).expect("in Σ");
    }
    n.determinize().minimize()
}

/// Accepts `{ δ(w) | w ∈ L(nfa) }`: the automaton is reversed and every
/// symbol switches between write and read.
pub fn dual_automaton(nfa: &Nfa) -> Nfa {
    let alphabet: Vec<Symbol> = nfa.alphabet().iter().map(|s| s.toggled()).collect();
    nfa.reverse()
        .relabel(&alphabet, Symbol::toggled)
        .expect("toggled alphabet")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::dual;
    use crate::rewrite::is_irreducible;
    use crate::word::Word;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn nf_language_is_the_irreducible_words() {
        let ab = Alphabet::binary();
        let d = nf_language(&ab);
        for word in ab.words_up_to(6) {
            assert_eq!(d.accepts(&word), is_irreducible(&word), "{word}");
        }
    }

    #[test]
    fn inverse_projections() {
        let ab = Alphabet::binary();
        let pi_a = inverse_projection(&ab, &a_word(&ab, b"a"), Projection::Writes);
        assert!(pi_a.accepts(&w("BAaB")));
        assert!(!pi_a.accepts(&w("aa")));
        let pibar_ab = inverse_projection(&ab, &a_word(&ab, b"ab"), Projection::Reads);
        assert!(pibar_ab.accepts(&w("AaabB")));
        assert!(!pibar_ab.accepts(&w("BA")));
        for word in ab.words_up_to(4) {
            assert_eq!(
                inverse_projection(&ab, &a_length(&ab, 2), Projection::Reads).accepts(&word),
                word.pi_bar().len() == 2
            );
        }
    }

    #[test]
    fn dual_automaton_mirrors_membership() {
        let ab = Alphabet::binary();
        let n = Nfa::word(&ab.symbols(), &w("aB"));
        let d = dual_automaton(&n);
        assert!(d.accepts(&w("bA")));
        assert!(!d.accepts(&w("aB")));
        let lang = inverse_projection(&ab, &a_word(&ab, b"ab"), Projection::Writes)
            .intersect(&inverse_projection(
                &ab,
                &a_length(&ab, 1),
                Projection::Reads,
            ))
            .unwrap();
        let d = dual_automaton(&lang);
        let dd = dual_automaton(&d);
        for word in ab.words_up_to(5) {
            assert_eq!(d.accepts(&dual(&word)), lang.accepts(&word), "{word}");
            assert_eq!(dd.accepts(&word), lang.accepts(&word));
        }
    }
}
