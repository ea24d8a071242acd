//! The deterministic automaton accepting a single class `[w]`, and
//! membership of `[w]` in a rational subset.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use super::dfa::Dfa;
use super::nfa::Nfa;
use crate::error::{Error, Result};
use crate::normal_form::{overlap, NormalForm};
use crate::rewrite::rewrite_normalize;
use crate::word::{Alphabet, Symbol};

/// A quadruple `(i, j, k, ℓ)` of 1-based positions in `w` (0 meaning "none").
///
/// It stands for the normal form `ū₁⟨u₂|u₂⟩u₃` with `π̄ = π̄(w[1..j])`,
/// `u₁ = π̄(w[1..i])`, `u₂ = π(w[1..k])` and `π = π(w[1..ℓ])`. Positions `i`
/// and `j` are read positions, `k` and `ℓ` write positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassDfaState {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl fmt::Display for ClassDfaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.i, self.j, self.k, self.l)
    }
}

/// On-demand transition structure of the class automaton of `w`.
#[derive(Clone, Debug)]
pub struct ClassAutomaton {
    // read_pos[r] is the position of the r-th read (read_pos[0] = 0)
    read_pos: Vec<usize>,
    write_pos: Vec<usize>,
    reads: Vec<u8>,
    writes: Vec<u8>,
    // rank[p] = number of reads (or writes) in w[1..p]
    read_rank: Vec<usize>,
    write_rank: Vec<usize>,
    target: ClassDfaState,
}

impl ClassAutomaton {
    pub fn new(w: &[Symbol]) -> Self {
        let mut read_pos = vec![0];
        let mut write_pos = vec![0];
        let mut reads = Vec::new();
        let mut writes = Vec::new();
        let mut read_rank = vec![0];
        let mut write_rank = vec![0];
        for (idx, &s) in w.iter().enumerate() {
            match s {
                Symbol::Read(a) => {
                    read_pos.push(idx + 1);
                    reads.push(a);
                }
                Symbol::Write(a) => {
                    write_pos.push(idx + 1);
                    writes.push(a);
                }
            }
            read_rank.push(reads.len());
            write_rank.push(writes.len());
        }
        let mut out = ClassAutomaton {
            read_pos,
            write_pos,
            reads,
            writes,
            read_rank,
            write_rank,
            target: ClassDfaState {
                i: 0,
                j: 0,
                k: 0,
                l: 0,
            },
        };
        let nf = rewrite_normalize(w);
        out.target = ClassDfaState {
            i: out.read_pos[nf.read_prefix().len()],
            j: out.read_pos[out.reads.len()],
            k: out.write_pos[nf.shuffled().len()],
            l: out.write_pos[out.writes.len()],
        };
        out
    }

    pub fn initial(&self) -> ClassDfaState {
        ClassDfaState {
            i: 0,
            j: 0,
            k: 0,
            l: 0,
        }
    }

    /// The successor of `p` under `s`, or `None` when no word continuing
    /// the current prefix with `s` can be equivalent to `w`.
    pub fn step(&self, p: ClassDfaState, s: Symbol) -> Option<ClassDfaState> {
        match s {
            Symbol::Write(a) => {
                let n = self.write_rank[p.l];
                (self.writes.get(n) == Some(&a)).then(|| ClassDfaState {
                    l: self.write_pos[n + 1],
                    ..p
                })
            }
            Symbol::Read(a) => {
                let n = self.read_rank[p.j];
                if self.reads.get(n) != Some(&a) {
                    return None;
                }
                let from = self.read_rank[p.i];
                let read_part = &self.reads[from..=n];
                let write_part = &self.writes[..self.write_rank[p.l]];
                let s = overlap(read_part, write_part).len();
                Some(ClassDfaState {
                    i: self.read_pos[n + 1 - s],
                    j: self.read_pos[n + 1],
                    k: self.write_pos[s],
                    l: p.l,
                })
            }
        }
    }

    pub fn is_accepting(&self, p: ClassDfaState) -> bool {
        p == self.target
    }

    /// The queue action a state stands for.
    pub fn denoted(&self, p: ClassDfaState) -> NormalForm {
        let (i, j) = (self.read_rank[p.i], self.read_rank[p.j]);
        let (k, l) = (self.write_rank[p.k], self.write_rank[p.l]);
        NormalForm::new(&self.reads[..i], &self.reads[i..j], &self.writes[k..l])
    }
}

/// The automaton accepting exactly the words equivalent to `w`, restricted
/// to its reachable part. States are labelled `(i,j,k,l)`.
pub fn class_dfa(alphabet: &Alphabet, w: &[Symbol]) -> Result<Dfa> {
    if let Some(s) = w.iter().find(|s| !alphabet.contains(s.letter())) {
        return Err(Error::LetterNotInAlphabet(s.letter() as char));
    }
    let class = ClassAutomaton::new(w);
    let sigma = alphabet.symbols();
    let mut dfa = Dfa::new(sigma.iter().copied());
    let start = class.initial();
    dfa.set_label(0, start.to_string());
    let mut index = HashMap::from([(start, 0usize)]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        let from = index[&p];
        dfa.set_accepting(from, class.is_accepting(p));
        for &s in &sigma {
            let Some(q) = class.step(p, s) else { continue };
            let to = *index.entry(q).or_insert_with(|| {
                queue.push_back(q);
                dfa.add_labeled_state(q.to_string())
            });
            dfa.add_transition(from, s, to)?;
        }
    }
    Ok(dfa)
}

/// Whether some word accepted by `nfa` is equivalent to `w`. The class
/// automaton is explored lazily inside the product.
pub fn rational_member(w: &[Symbol], nfa: &Nfa) -> bool {
    let class = ClassAutomaton::new(w);
    let n = nfa.remove_epsilon();
    let mut seen: HashSet<(usize, ClassDfaState)> = HashSet::new();
    let mut queue: VecDeque<(usize, ClassDfaState)> = n
        .initial_states()
        .iter()
        .map(|&q| (q, class.initial()))
        .collect();
    seen.extend(queue.iter().copied());
    while let Some((q, p)) = queue.pop_front() {
        if n.is_accepting(q) && class.is_accepting(p) {
            return true;
        }
        for (s, to) in n.outgoing(q) {
            if let Some(p2) = class.step(p, s) {
                if seen.insert((to, p2)) {
                    queue.push_back((to, p2));
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn class_of_a_bbar() {
        let ab = Alphabet::binary();
        let d = class_dfa(&ab, &w("aB")).unwrap();
        let accepted: Vec<String> = ab
            .words_up_to(3)
            .into_iter()
            .filter(|v| d.accepts(v))
            .map(|v| v.to_string())
            .collect();
        assert_eq!(accepted, ["aB", "Ba"]);
    }

    #[test]
    fn class_of_empty_word() {
        let ab = Alphabet::binary();
        let d = class_dfa(&ab, &[]).unwrap();
        assert_eq!(d.num_states(), 1);
        assert!(d.accepts(&[]));
        assert!(ab.words_up_to(2).iter().skip(1).all(|v| !d.accepts(v)));
    }

    #[test]
    fn states_denote_prefix_normal_forms() {
        let word = w("abBAaAbB");
        let class = ClassAutomaton::new(&word);
        let mut p = class.initial();
        for n in 0..word.len() {
            p = class.step(p, word[n]).unwrap();
            assert_eq!(class.denoted(p), rewrite_normalize(&word[..=n]));
        }
        assert!(class.is_accepting(p));
    }

    #[test]
    fn rejects_foreign_letters() {
        assert!(class_dfa(&Alphabet::binary(), &w("c")).is_err());
    }

    #[test]
    fn membership_examples() {
        let ab = Alphabet::binary();
        let sigma = ab.symbols();
        assert!(rational_member(&w("aB"), &Nfa::word(&sigma, &w("Ba"))));
        assert!(!rational_member(&w("aB"), &Nfa::empty(&sigma)));
        assert!(!rational_member(&w("aA"), &Nfa::word(&sigma, &w("Aa"))));
        assert!(rational_member(&w("aA"), &Nfa::universal(&sigma)));
    }
}
