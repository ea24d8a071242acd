use std::collections::{BTreeMap, HashMap, VecDeque};

use super::nfa::Nfa;
use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

/// A deterministic, possibly partial, finite automaton.
///
/// There is always at least the initial state.
#[derive(Clone, Debug)]
pub struct Dfa {
    alphabet: Vec<Symbol>,
    delta: Vec<BTreeMap<Symbol, usize>>,
    initial: usize,
    accepting: Vec<bool>,
    labels: Vec<Option<String>>,
}

impl Dfa {
    /// A one-state automaton (the initial state, not accepting).
    pub fn new(alphabet: impl IntoIterator<Item = Symbol>) -> Self {
        let mut alphabet: Vec<Symbol> = alphabet.into_iter().collect();
        alphabet.sort();
        alphabet.dedup();
        Dfa {
            alphabet,
            delta: vec![BTreeMap::new()],
            initial: 0,
            accepting: vec![false],
            labels: vec![None],
        }
    }

    pub fn add_state(&mut self) -> usize {
        self.delta.push(BTreeMap::new());
        self.accepting.push(false);
        self.labels.push(None);
        self.delta.len() - 1
    }

    pub fn add_labeled_state(&mut self, label: impl Into<String>) -> usize {
        let q = self.add_state();
        self.labels[q] = Some(label.into());
        q
    }

    pub fn set_label(&mut self, q: usize, label: impl Into<String>) {
        self.labels[q] = Some(label.into());
    }

    pub fn label(&self, q: usize) -> Option<&str> {
        self.labels.get(q).and_then(|l| l.as_deref())
    }

    /// Adds `from --symbol--> to`; a second, different target for the same
    /// symbol is rejected.
    pub fn add_transition(&mut self, from: usize, symbol: Symbol, to: usize) -> Result<()> {
        for q in [from, to] {
            if q >= self.delta.len() {
                return Err(Error::NoSuchState(q));
            }
        }
        if self.alphabet.binary_search(&symbol).is_err() {
            return Err(Error::SymbolNotInAlphabet(symbol.to_string()));
        }
        match self.delta[from].insert(symbol, to) {
            Some(prev) if prev != to => {
                self.delta[from].insert(symbol, prev);
                Err(Error::Nondeterministic {
                    state: from,
                    symbol: symbol.to_string(),
                })
            }
            _ => Ok(()),
        }
    }

    pub fn set_accepting(&mut self, q: usize, accepting: bool) {
        self.accepting[q] = accepting;
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn step(&self, q: usize, s: Symbol) -> Option<usize> {
        self.delta[q].get(&s).copied()
    }

    pub fn transitions(&self) -> impl Iterator<Item = (usize, Symbol, usize)> + '_ {
        self.delta
            .iter()
            .enumerate()
            .flat_map(|(p, m)| m.iter().map(move |(&s, &q)| (p, s, q)))
    }

    /// The state reached after `w`, if the run does not block.
    pub fn run(&self, w: &[Symbol]) -> Option<usize> {
        w.iter().try_fold(self.initial, |q, &s| self.step(q, s))
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        self.run(w).is_some_and(|q| self.accepting[q])
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(|m| m.len() == self.alphabet.len())
    }

    /// Adds an explicit dead state when some transition is missing.
    pub fn complete(&self) -> Dfa {
        if self.is_complete() {
            return self.clone();
        }
        let mut out = self.clone();
        let dead = out.add_state();
        for q in 0..out.num_states() {
            for &s in &self.alphabet {
                out.delta[q].entry(s).or_insert(dead);
            }
        }
        out
    }

    /// Accepts exactly the words over the alphabet this automaton rejects.
    pub fn complement(&self) -> Dfa {
        let mut out = self.complete();
        for a in out.accepting.iter_mut() {
            *a = !*a;
        }
        out
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut n = Nfa::new(self.alphabet.iter().copied());
        for q in 0..self.num_states() {
            match &self.labels[q] {
                Some(l) => n.add_labeled_state(l.clone()),
                None => n.add_state(),
            };
            if self.accepting[q] {
                n.set_accepting(q);
            }
        }
        n.set_initial(self.initial);
        for (p, s, q) in self.transitions() {
            n.add_transition(p, s, q).expect("same alphabet");
        }
        n
    }

    pub fn is_empty(&self) -> bool {
        self.to_nfa().is_empty()
    }

    pub fn shortest_accepted(&self) -> Option<Word> {
        self.to_nfa().shortest_accepted()
    }

    /// Product automaton; `both` selects intersection (`true`) or union
    /// (`false`). Union needs complete inputs, which this handles itself.
    fn product(&self, other: &Dfa, both: bool) -> Result<Dfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let (a, b) = if both {
            (self.clone(), other.clone())
        } else {
            (self.complete(), other.complete())
        };
        let mut out = Dfa::new(self.alphabet.iter().copied());
        let mut index = HashMap::from([((a.initial, b.initial), 0usize)]);
        let mut queue = VecDeque::from([(a.initial, b.initial)]);
        while let Some((p, q)) = queue.pop_front() {
            let from = index[&(p, q)];
            out.accepting[from] = if both {
                a.accepting[p] && b.accepting[q]
            } else {
                a.accepting[p] || b.accepting[q]
            };
            for &s in &self.alphabet {
                let (Some(p2), Some(q2)) = (a.step(p, s), b.step(q, s)) else {
                    continue;
                };
                let to = match index.get(&(p2, q2)) {
                    Some(&id) => id,
                    None => {
                        let id = out.add_state();
                        index.insert((p2, q2), id);
                        queue.push_back((p2, q2));
                        id
                    }
                };
                out.delta[from].insert(s, to);
            }
        }
        Ok(out)
    }

    pub fn intersect(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, true)
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, false)
    }

    pub fn difference(&self, other: &Dfa) -> Result<Dfa> {
        self.intersect(&other.complement())
    }

    /// Language-equivalent automaton with the fewest states among partial
    /// DFAs (Moore partition refinement, then dead states removed).
    pub fn minimize(&self) -> Dfa {
        let full = self.complete();
        // reachable part
        let mut order = vec![full.initial];
        let mut seen = vec![false; full.num_states()];
        seen[full.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let p = order[i];
            for &q in full.delta[p].values() {
                if !seen[q] {
                    seen[q] = true;
                    order.push(q);
                }
            }
            i += 1;
        }
        let mut class: Vec<usize> = vec![0; full.num_states()];
        for &q in &order {
            class[q] = full.accepting[q] as usize;
        }
        let mut count = 0;
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = class.clone();
            for &q in &order {
                let mut sig = Vec::with_capacity(self.alphabet.len() + 1);
                sig.push(class[q]);
                sig.extend(self.alphabet.iter().map(|s| class[full.delta[q][s]]));
                let n = ids.len();
                next[q] = *ids.entry(sig).or_insert(n);
            }
            let new_count = ids.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut out = Dfa::new(self.alphabet.iter().copied());
        let mut map: HashMap<usize, usize> = HashMap::new();
        map.insert(class[full.initial], 0);
        for &q in &order {
            let c = class[q];
            let id = match map.get(&c) {
                Some(&id) => id,
                None => {
                    let id = out.add_state();
                    map.insert(c, id);
                    id
                }
            };
            out.accepting[id] = full.accepting[q];
        }
        for &q in &order {
            for (&s, &t) in &full.delta[q] {
                out.delta[map[&class[q]]].insert(s, map[&class[t]]);
            }
        }
        out.drop_dead_states()
    }

    /// Removes states that cannot reach an accepting state (keeping the
    /// initial state).
    fn drop_dead_states(&self) -> Dfa {
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); self.num_states()];
        for (p, _, q) in self.transitions() {
            preds[q].push(p);
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<usize> = (0..self.num_states()).filter(|&q| live[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live[self.initial] = true;
        let mut map = vec![usize::MAX; self.num_states()];
        let mut out = Dfa::new(self.alphabet.iter().copied());
        map[self.initial] = 0;
        out.accepting[0] = self.accepting[self.initial];
        out.labels[0] = self.labels[self.initial].clone();
        for q in 0..self.num_states() {
            if live[q] && q != self.initial {
                map[q] = out.add_state();
                out.accepting[map[q]] = self.accepting[q];
                out.labels[map[q]] = self.labels[q].clone();
            }
        }
        for (p, s, q) in self.transitions() {
            if live[p] && live[q] {
                out.delta[map[p]].insert(s, map[q]);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn words_ending_in_a() -> Dfa {
        let ab = Alphabet::binary();
        let mut d = Dfa::new(ab.symbols());
        let yes = d.add_state();
        for s in ab.symbols() {
            let target = if s == Symbol::Write(b'a') { yes } else { 0 };
            d.add_transition(0, s, target).unwrap();
            d.add_transition(yes, s, target).unwrap();
        }
        d.set_accepting(yes, true);
        d
    }

    #[test]
    fn determinism_is_enforced() {
        let mut d = Dfa::new(Alphabet::binary().symbols());
        let q = d.add_state();
        d.add_transition(0, Symbol::Write(b'a'), q).unwrap();
        d.add_transition(0, Symbol::Write(b'a'), q).unwrap();
        assert!(matches!(
            d.add_transition(0, Symbol::Write(b'a'), 0),
            Err(Error::Nondeterministic { .. })
        ));
        assert_eq!(d.step(0, Symbol::Write(b'a')), Some(q));
    }

    #[test]
    fn complement_needs_completion() {
        let mut d = Dfa::new(Alphabet::binary().symbols());
        let q = d.add_state();
        d.add_transition(0, Symbol::Write(b'a'), q).unwrap();
        d.set_accepting(q, true);
        assert!(!d.is_complete());
        let c = d.complement();
        assert!(c.is_complete());
        assert!(!c.accepts(&w("a")));
        assert!(c.accepts(&w("b")));
        assert!(c.accepts(&w("aa")));
        assert!(c.accepts(&[]));
    }

    #[test]
    fn minimization_preserves_language() {
        let d = words_ending_in_a();
        let bloated = d.to_nfa().union(&d.to_nfa()).unwrap().determinize();
        let m = bloated.minimize();
        assert_eq!(m.num_states(), 2);
        for word in Alphabet::binary().words_up_to(4) {
            assert_eq!(m.accepts(&word), d.accepts(&word), "{word}");
        }
        let empty = d.intersect(&d.complement()).unwrap().minimize();
        assert_eq!(empty.num_states(), 1);
        assert!(empty.is_empty());
    }

    #[test]
    fn products() {
        let d = words_ending_in_a();
        let mut e = Dfa::new(Alphabet::binary().symbols());
        let q = e.add_state();
        e.add_transition(0, Symbol::Read(b'b'), q).unwrap();
        e.set_accepting(q, true);
        let u = d.union(&e).unwrap();
        let i = d.intersect(&e).unwrap();
        let diff = d.difference(&e).unwrap();
        for word in Alphabet::binary().words_up_to(3) {
            let (x, y) = (d.accepts(&word), e.accepts(&word));
            assert_eq!(u.accepts(&word), x || y);
            assert_eq!(i.accepts(&word), x && y);
            assert_eq!(diff.accepts(&word), x && !y);
        }
    }
}
