//! Conjugacy of queue actions and the rational set of conjugators
//! `C(x, y) = { z | xz = zy }`.

use crate::automata::{
    a_star, a_word, dual_automaton, inverse_projection, nf_language, Dfa, Nfa, Projection,
};
use crate::error::{Error, Result};
use crate::normal_form::NormalForm;
use crate::word::{Alphabet, Symbol};

/// Conjugacy in the free monoid: equal length and `v` a factor of `uu`.
pub fn free_conjugate(u: &[u8], v: &[u8]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.is_empty() {
        return true;
    }
    let uu = [u, u].concat();
    uu.windows(v.len()).any(|f| f == v)
}

/// Decides whether `p` and `q` are conjugate, by comparing both projections
/// up to cyclic shift.
pub fn conjugate(p: &NormalForm, q: &NormalForm) -> bool {
    free_conjugate(&p.pi(), &q.pi()) && free_conjugate(&p.pi_bar(), &q.pi_bar())
}

/// All `z ∈ A*` with `uz = zv`, as an automaton over `A`.
pub fn free_conjugator_lang(alphabet: &Alphabet, u: &[u8], v: &[u8]) -> Nfa {
    if u.is_empty() && v.is_empty() {
        return a_star(alphabet);
    }
    let mut out = Nfa::empty(&alphabet.write_symbols());
    for cut in 0..=u.len() {
        let (r, s) = u.split_at(cut);
        if [s, r].concat() != v {
            continue;
        }
        let part = a_word(alphabet, r)
            .concat(&a_word(alphabet, &[s, r].concat()).star())
            .expect("same alphabet");
        out = out.union(&part).expect("same alphabet");
    }
    out
}

/// Words `z` over `Σ` whose projections conjugate those of `x` to `y`.
/// Every conjugator of `x` and `y` lies in this set.
pub fn overconj_nfa(alphabet: &Alphabet, x: &NormalForm, y: &NormalForm) -> Nfa {
    let writes = free_conjugator_lang(alphabet, &x.pi(), &y.pi());
    let reads = free_conjugator_lang(alphabet, &x.pi_bar(), &y.pi_bar());
    inverse_projection(alphabet, &writes, Projection::Writes)
        .intersect(&inverse_projection(alphabet, &reads, Projection::Reads))
        .expect("both over Σ")
}

/// Words `z₁` over `A` such that `u` is a suffix of `x₂z₁`.
fn suffix_lang(alphabet: &Alphabet, x2: &[u8], u: &[u8]) -> Nfa {
    let mut out = a_star(alphabet)
        .concat(&a_word(alphabet, u))
        .expect("same alphabet");
    for cut in 1..=u.len() {
        let (v, z1) = u.split_at(cut);
        if x2.ends_with(v) {
            out = out.union(&a_word(alphabet, z1)).expect("same alphabet");
        }
    }
    out
}

/// Words `z₂` over `A` such that `uz₂` is a prefix of `pz₂`, where `u` is a
/// prefix of `p`.
fn prefix_lang(alphabet: &Alphabet, p: &[u8], u: &[u8]) -> Nfa {
    let v = &p[u.len()..];
    if v.is_empty() {
        return a_star(alphabet);
    }
    // the prefixes of v v v ...
    let mut out = Nfa::new(alphabet.write_symbols());
    for _ in 0..v.len() {
        let q = out.add_state();
        out.set_accepting(q);
    }
    out.set_initial(0);
    for (i, &a) in v.iter().enumerate() {
        out.add_transition(i, Symbol::Write(a), (i + 1) % v.len())
            .expect("letter of the alphabet");
    }
    out
}

/// Normal-form words `z` of `D(x, y)` with `ow(xz) − ow(z) ≥ k`.
pub fn g_k_nfa(alphabet: &Alphabet, x: &NormalForm, y: &NormalForm, k: usize) -> Nfa {
    let sigma = alphabet.symbols();
    let p = x.pi();
    let mut shapes = Nfa::empty(&sigma);
    let tail = a_star(alphabet).relabel(&sigma, |s| s).expect("Σ");
    for len in k..=p.len() {
        let u = &p[..len];
        let reads = suffix_lang(alphabet, x.shuffled(), u)
            .relabel(&sigma, Symbol::toggled)
            .expect("Σ");
        let pairs = prefix_lang(alphabet, &p, u)
            .substitute(&sigma, |s| vec![s, s.toggled()])
            .expect("Σ");
        let shape = reads
            .concat(&pairs)
            .and_then(|n| n.concat(&tail))
            .expect("over Σ");
        shapes = shapes.union(&shape).expect("over Σ");
    }
    let nf = nf_language(alphabet).to_nfa();
    overconj_nfa(alphabet, x, y)
        .intersect(&shapes)
        .and_then(|n| n.intersect(&nf))
        .expect("over Σ")
}

/// `E_k = G_k \ G_{k+1}`, computed inside the normal-form language.
fn e_k_dfa(alphabet: &Alphabet, x: &NormalForm, y: &NormalForm, k: usize) -> Dfa {
    let g = g_k_nfa(alphabet, x, y, k).determinize().minimize();
    let next = g_k_nfa(alphabet, x, y, k + 1).determinize().minimize();
    g.difference(&next).expect("over Σ").minimize()
}

/// The conjugators of `x` and `y`, as normal-form words.
#[derive(Clone, Debug)]
pub struct ConjugatorAutomaton {
    pub nfa: Nfa,
    pub x: NormalForm,
    pub y: NormalForm,
}

impl ConjugatorAutomaton {
    pub fn accepts(&self, z: &NormalForm) -> bool {
        self.nfa.accepts(&z.to_word())
    }
}

/// Builds an automaton accepting exactly the normal-form words of the `z`
/// with `xz = zy`.
///
/// For each `k`, `E_k` holds the candidates with `ow(xz) = ow(z) + k` and
/// `F_k` the candidates with `ow(zy) = ow(z) + k`, the latter obtained by
/// duality from `E_k(δy, δx)`. Since an action is determined by its
/// projections and overlap width, `C(x, y)` is the union of `E_k ∩ F_k`.
pub fn conjugator_nfa(alphabet: &Alphabet, x: &NormalForm, y: &NormalForm) -> ConjugatorAutomaton {
    let (dx, dy) = (x.dual(), y.dual());
    let mut result = Dfa::new(alphabet.symbols());
    for k in 0..=x.pi().len() {
        let e = e_k_dfa(alphabet, x, y, k);
        if e.is_empty() {
            continue;
        }
        let f = dual_automaton(&e_k_dfa(alphabet, &dy, &dx, k).to_nfa()).determinize();
        let both = e.intersect(&f).expect("over Σ");
        result = result.union(&both).expect("over Σ").minimize();
    }
    ConjugatorAutomaton {
        nfa: result.minimize().to_nfa(),
        x: x.clone(),
        y: y.clone(),
    }
}

/// A conjugator `z` with `pz = zq`, taken as the shortest word of the
/// conjugator automaton, or `None` when `p` and `q` are not conjugate.
///
/// The witness is checked by multiplication before it is returned.
pub fn find_conjugator(
    alphabet: &Alphabet,
    p: &NormalForm,
    q: &NormalForm,
) -> Result<Option<NormalForm>> {
    if !conjugate(p, q) {
        return Ok(None);
    }
    let automaton = conjugator_nfa(alphabet, p, q);
    let Some(word) = automaton.nfa.shortest_accepted() else {
        return Err(Error::WitnessRejected(
            "conjugator automaton is empty".into(),
        ));
    };
    let z = NormalForm::from_irreducible(&word)
        .ok_or_else(|| Error::WitnessRejected(format!("{word} is not a normal form")))?;
    if p.mul(&z) != z.mul(q) {
        return Err(Error::WitnessRejected(format!("{word} does not conjugate")));
    }
    Ok(Some(z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::rewrite_normalize;
    use crate::word::Word;

    fn nf(s: &str) -> NormalForm {
        rewrite_normalize(&Word::parse(s).unwrap())
    }

    fn letters(n: &Nfa, s: &str) -> bool {
        let w: Vec<Symbol> = s.bytes().map(Symbol::Write).collect();
        n.accepts(&w)
    }

    #[test]
    fn free_conjugacy() {
        assert!(free_conjugate(b"ab", b"ba"));
        assert!(free_conjugate(b"", b""));
        assert!(free_conjugate(b"aab", b"aba"));
        assert!(!free_conjugate(b"aab", b"abb"));
        assert!(!free_conjugate(b"a", b"aa"));
    }

    #[test]
    fn free_conjugator_languages() {
        let ab = Alphabet::binary();
        let n = free_conjugator_lang(&ab, b"ab", b"ba");
        for z in ab.letter_words_up_to(5) {
            let expected = [b"ab".as_slice(), &z].concat() == [z.as_slice(), b"ba"].concat();
            assert_eq!(
                letters(&n, &String::from_utf8(z.clone()).unwrap()),
                expected
            );
        }
        assert!(free_conjugator_lang(&ab, b"a", b"b").is_empty());
        let all = free_conjugator_lang(&ab, b"", b"");
        assert!(letters(&all, "abba") && letters(&all, ""));
    }

    #[test]
    fn conjugate_examples() {
        assert!(conjugate(&nf("Aa"), &nf("aA")));
        assert!(conjugate(&nf("aB"), &nf("aB")));
        assert!(!conjugate(&nf("a"), &nf("b")));
    }

    #[test]
    fn conjugators_of_a_single_read() {
        let ab = Alphabet::binary();
        let x = nf("A");
        let c = conjugator_nfa(&ab, &x, &x);
        for k in 0..=5 {
            for l in 0..=5 {
                let z = nf(&format!("{}{}", "a".repeat(k), "A".repeat(l)));
                assert_eq!(c.accepts(&z), k <= l, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn witness_search() {
        let ab = Alphabet::binary();
        assert_eq!(
            find_conjugator(&ab, &nf("aB"), &nf("aB")).unwrap(),
            Some(NormalForm::identity())
        );
        let z = find_conjugator(&ab, &nf("Aa"), &nf("aA")).unwrap().unwrap();
        assert_eq!(nf("Aa").mul(&z), z.mul(&nf("aA")));
        assert_eq!(find_conjugator(&ab, &nf("a"), &nf("b")).unwrap(), None);
    }
}
