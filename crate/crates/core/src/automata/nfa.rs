use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::dfa::Dfa;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

/// A nondeterministic finite automaton with ε-moves over a finite set of
/// [`Symbol`]s.
///
/// Automata "over `A`" simply use an alphabet of write symbols.
/// State ids are dense indices `0..num_states()`; states may carry a label
/// used by the DOT and text exporters.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Vec<Symbol>,
    delta: Vec<BTreeMap<Symbol, BTreeSet<usize>>>,
    eps: Vec<BTreeSet<usize>>,
    initial: BTreeSet<usize>,
    accepting: BTreeSet<usize>,
    labels: Vec<Option<String>>,
}

impl Nfa {
    /// An automaton with no states over the given symbols.
    pub fn new(alphabet: impl IntoIterator<Item = Symbol>) -> Self {
        let mut alphabet: Vec<Symbol> = alphabet.into_iter().collect();
        alphabet.sort();
        alphabet.dedup();
        Nfa {
            alphabet,
            delta: Vec::new(),
            eps: Vec::new(),
            initial: BTreeSet::new(),
            accepting: BTreeSet::new(),
            labels: Vec::new(),
        }
    }

    /// The empty language over `Σ`.
    pub fn empty(alphabet: &[Symbol]) -> Self {
        Nfa::new(alphabet.iter().copied())
    }

    /// `{ε}`.
    pub fn epsilon(alphabet: &[Symbol]) -> Self {
        Nfa::word(alphabet, &[])
    }

    /// All words over `alphabet`.
    pub fn universal(alphabet: &[Symbol]) -> Self {
        let mut n = Nfa::new(alphabet.iter().copied());
        let q = n.add_state();
        n.set_initial(q);
        n.set_accepting(q);
        for &s in alphabet {
            n.add_transition(q, s, q).expect("own alphabet");
        }
        n
    }

    /// `{w}`. Symbols of `w` must belong to `alphabet`.
    pub fn word(alphabet: &[Symbol], w: &[Symbol]) -> Self {
        let mut n = Nfa::new(alphabet.iter().copied());
        let mut q = n.add_state();
        n.set_initial(q);
        for &s in w {
            let next = n.add_state();
            n.add_transition(q, s, next)
                .expect("word symbols must be in the alphabet");
            q = next;
        }
        n.set_accepting(q);
        n
    }

    /// Words of length one whose symbol is in `symbols`.
    pub fn any_of(alphabet: &[Symbol], symbols: &[Symbol]) -> Self {
        let mut n = Nfa::new(alphabet.iter().copied());
        let p = n.add_state();
        let q = n.add_state();
        n.set_initial(p);
        n.set_accepting(q);
        for &s in symbols {
            n.add_transition(p, s, q).expect("symbol in alphabet");
        }
        n
    }

    /// `Σ*` for a queue alphabet.
    pub fn sigma_star(alphabet: &Alphabet) -> Self {
        Nfa::universal(&alphabet.symbols())
    }

    pub fn add_state(&mut self) -> usize {
        self.delta.push(BTreeMap::new());
        self.eps.push(BTreeSet::new());
        self.labels.push(None);
        self.delta.len() - 1
    }

    pub fn add_labeled_state(&mut self, label: impl Into<String>) -> usize {
        let q = self.add_state();
        self.labels[q] = Some(label.into());
        q
    }

    fn check_state(&self, q: usize) -> Result<()> {
        if q < self.delta.len() {
            Ok(())
        } else {
            Err(Error::NoSuchState(q))
        }
    }

    pub fn add_transition(&mut self, from: usize, symbol: Symbol, to: usize) -> Result<()> {
        self.check_state(from)?;
        self.check_state(to)?;
        if self.alphabet.binary_search(&symbol).is_err() {
            return Err(Error::SymbolNotInAlphabet(symbol.to_string()));
        }
        self.delta[from].entry(symbol).or_default().insert(to);
        Ok(())
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) -> Result<()> {
        self.check_state(from)?;
        self.check_state(to)?;
        self.eps[from].insert(to);
        Ok(())
    }

    /// Panics if `q` is not a state.
    pub fn set_initial(&mut self, q: usize) {
        assert!(q < self.delta.len(), "no state {q}");
        self.initial.insert(q);
    }

    /// Panics if `q` is not a state.
    pub fn set_accepting(&mut self, q: usize) {
        assert!(q < self.delta.len(), "no state {q}");
        self.accepting.insert(q);
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn initial_states(&self) -> &BTreeSet<usize> {
        &self.initial
    }

    pub fn accepting_states(&self) -> &BTreeSet<usize> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting.contains(&q)
    }

    pub fn label(&self, q: usize) -> Option<&str> {
        self.labels.get(q).and_then(|l| l.as_deref())
    }

    /// Labelled transitions `(from, symbol, to)` in a deterministic order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, Symbol, usize)> + '_ {
        self.delta.iter().enumerate().flat_map(|(p, m)| {
            m.iter()
                .flat_map(move |(&s, targets)| targets.iter().map(move |&q| (p, s, q)))
        })
    }

    pub fn epsilon_transitions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.eps
            .iter()
            .enumerate()
            .flat_map(|(p, t)| t.iter().map(move |&q| (p, q)))
    }

    /// Labelled transitions leaving `q`, as `(symbol, to)`.
    pub fn outgoing(&self, q: usize) -> impl Iterator<Item = (Symbol, usize)> + '_ {
        self.delta[q]
            .iter()
            .flat_map(|(&s, targets)| targets.iter().map(move |&t| (s, t)))
    }

    pub fn targets(&self, q: usize, s: Symbol) -> impl Iterator<Item = usize> + '_ {
        self.delta[q].get(&s).into_iter().flatten().copied()
    }

    pub fn has_epsilon(&self) -> bool {
        self.eps.iter().any(|e| !e.is_empty())
    }

    fn same_alphabet(&self, other: &Nfa) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Extends `set` by everything reachable through ε-moves.
    pub fn close(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(p) = stack.pop() {
            for &q in &self.eps[p] {
                if set.insert(q) {
                    stack.push(q);
                }
            }
        }
    }

    pub fn initial_closure(&self) -> BTreeSet<usize> {
        let mut set = self.initial.clone();
        self.close(&mut set);
        set
    }

    /// The ε-closed set of states reached from `set` by reading `s`.
    pub fn step_set(&self, set: &BTreeSet<usize>, s: Symbol) -> BTreeSet<usize> {
        let mut next: BTreeSet<usize> = set.iter().flat_map(|&p| self.targets(p, s)).collect();
        self.close(&mut next);
        next
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        let mut cur = self.initial_closure();
        for &s in w {
            if cur.is_empty() {
                return false;
            }
            cur = self.step_set(&cur, s);
        }
        cur.iter().any(|q| self.accepting.contains(q))
    }

    /// An equivalent automaton without ε-moves and with the same states.
    pub fn remove_epsilon(&self) -> Nfa {
        if !self.has_epsilon() {
            return self.clone();
        }
        let mut out = Nfa::new(self.alphabet.iter().copied());
        out.labels = self.labels.clone();
        out.delta = vec![BTreeMap::new(); self.num_states()];
        out.eps = vec![BTreeSet::new(); self.num_states()];
        for p in 0..self.num_states() {
            let mut c = BTreeSet::from([p]);
            self.close(&mut c);
            for &r in &c {
                for (&s, targets) in &self.delta[r] {
                    for &t in targets {
                        let mut ct = BTreeSet::from([t]);
                        self.close(&mut ct);
                        out.delta[p].entry(s).or_default().extend(ct);
                    }
                }
                if self.accepting.contains(&r) {
                    out.accepting.insert(p);
                }
            }
        }
        out.initial = self.initial_closure();
        out
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack: Vec<usize> = self.initial.iter().copied().collect();
        for &q in &stack {
            seen[q] = true;
        }
        while let Some(p) = stack.pop() {
            let succ = self.delta[p].values().flatten().chain(self.eps[p].iter());
            for &q in succ {
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        seen
    }

    fn coreachable(&self) -> Vec<bool> {
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); self.num_states()];
        for (p, _, q) in self.transitions() {
            preds[q].push(p);
        }
        for (p, q) in self.epsilon_transitions() {
            preds[q].push(p);
        }
        let mut seen = vec![false; self.num_states()];
        let mut stack: Vec<usize> = self.accepting.iter().copied().collect();
        for &q in &stack {
            seen[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Drops states that are unreachable or cannot reach an accepting state.
    pub fn trim(&self) -> Nfa {
        let reach = self.reachable();
        let coreach = self.coreachable();
        let keep: Vec<bool> = reach.iter().zip(&coreach).map(|(a, b)| *a && *b).collect();
        self.restrict(&keep)
    }

    fn restrict(&self, keep: &[bool]) -> Nfa {
        let mut map = vec![usize::MAX; self.num_states()];
        let mut out = Nfa::new(self.alphabet.iter().copied());
        for q in 0..self.num_states() {
            if keep[q] {
                map[q] = out.add_state();
                out.labels[map[q]] = self.labels[q].clone();
            }
        }
        for (p, s, q) in self.transitions() {
            if keep[p] && keep[q] {
                out.delta[map[p]].entry(s).or_default().insert(map[q]);
            }
        }
        for (p, q) in self.epsilon_transitions() {
            if keep[p] && keep[q] {
                out.eps[map[p]].insert(map[q]);
            }
        }
        out.initial = self
            .initial
            .iter()
            .filter(|q| keep[**q])
            .map(|q| map[*q])
            .collect();
        out.accepting = self
            .accepting
            .iter()
            .filter(|q| keep[**q])
            .map(|q| map[*q])
            .collect();
        out
    }

    /// Subset construction over the reachable subsets. The result is a
    /// partial DFA: the empty subset is not materialized.
    pub fn determinize(&self) -> Dfa {
        let mut dfa = Dfa::new(self.alphabet.iter().copied());
        let start = self.initial_closure();
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        index.insert(start.clone(), dfa.initial());
        if start.iter().any(|q| self.accepting.contains(q)) {
            dfa.set_accepting(dfa.initial(), true);
        }
        queue.push_back(start);
        while let Some(set) = queue.pop_front() {
            let from = index[&set];
            for &s in &self.alphabet {
                let next = self.step_set(&set, s);
                if next.is_empty() {
                    continue;
                }
                let to = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = dfa.add_state();
                        if next.iter().any(|q| self.accepting.contains(q)) {
                            dfa.set_accepting(id, true);
                        }
                        index.insert(next.clone(), id);
                        queue.push_back(next);
                        id
                    }
                };
                dfa.add_transition(from, s, to)
                    .expect("fresh deterministic edge");
            }
        }
        dfa
    }

    /// Accepts the mirror image of every accepted word.
    pub fn reverse(&self) -> Nfa {
        let mut out = Nfa::new(self.alphabet.iter().copied());
        out.delta = vec![BTreeMap::new(); self.num_states()];
        out.eps = vec![BTreeSet::new(); self.num_states()];
        out.labels = self.labels.clone();
        for (p, s, q) in self.transitions() {
            out.delta[q].entry(s).or_default().insert(p);
        }
        for (p, q) in self.epsilon_transitions() {
            out.eps[q].insert(p);
        }
        out.initial = self.accepting.clone();
        out.accepting = self.initial.clone();
        out
    }

    /// Renames every symbol through `f`; the new alphabet is `alphabet`.
    pub fn relabel(&self, alphabet: &[Symbol], f: impl Fn(Symbol) -> Symbol) -> Result<Nfa> {
        self.substitute(alphabet, |s| vec![f(s)])
    }

    /// The image under the morphism `s ↦ f(s)`: each transition is replaced
    /// by a path spelling `f(s)` (an ε-move for the empty word).
    pub fn substitute(
        &self,
        alphabet: &[Symbol],
        f: impl Fn(Symbol) -> Vec<Symbol>,
    ) -> Result<Nfa> {
        let mut out = Nfa::new(alphabet.iter().copied());
        for q in 0..self.num_states() {
            out.add_state();
            out.labels[q] = self.labels[q].clone();
        }
        for (p, s, q) in self.transitions().collect::<Vec<_>>() {
            let image = f(s);
            let mut cur = p;
            if image.is_empty() {
                out.add_epsilon(p, q)?;
                continue;
            }
            for (i, &t) in image.iter().enumerate() {
                let next = if i + 1 == image.len() {
                    q
                } else {
                    out.add_state()
                };
                out.add_transition(cur, t, next)?;
                cur = next;
            }
        }
        for (p, q) in self.epsilon_transitions() {
            out.add_epsilon(p, q)?;
        }
        out.initial = self.initial.clone();
        out.accepting = self.accepting.clone();
        Ok(out)
    }

    /// Copies `other`'s states into `self`, returning the index offset.
    fn absorb(&mut self, other: &Nfa) -> usize {
        let off = self.num_states();
        for q in 0..other.num_states() {
            self.add_state();
            self.labels[off + q] = other.labels[q].clone();
        }
        for (p, s, q) in other.transitions() {
            self.delta[off + p].entry(s).or_default().insert(off + q);
        }
        for (p, q) in other.epsilon_transitions() {
            self.eps[off + p].insert(off + q);
        }
        off
    }

    pub fn union(&self, other: &Nfa) -> Result<Nfa> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        let off = out.absorb(other);
        out.initial.extend(other.initial.iter().map(|q| q + off));
        out.accepting
            .extend(other.accepting.iter().map(|q| q + off));
        Ok(out)
    }

    pub fn concat(&self, other: &Nfa) -> Result<Nfa> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        let off = out.absorb(other);
        for &f in &self.accepting {
            for &i in &other.initial {
                out.eps[f].insert(i + off);
            }
        }
        out.accepting = other.accepting.iter().map(|q| q + off).collect();
        Ok(out)
    }

    /// Kleene star.
    pub fn star(&self) -> Nfa {
        let mut out = self.clone();
        let start = out.add_state();
        for &i in &self.initial {
            out.eps[start].insert(i);
        }
        for &f in &self.accepting {
            out.eps[f].insert(start);
        }
        out.initial = BTreeSet::from([start]);
        out.accepting = BTreeSet::from([start]);
        out
    }

    /// Product automaton over the reachable pairs.
    pub fn intersect(&self, other: &Nfa) -> Result<Nfa> {
        self.same_alphabet(other)?;
        let a = self.remove_epsilon();
        let b = other.remove_epsilon();
        let mut out = Nfa::new(self.alphabet.iter().copied());
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for &p in &a.initial {
            for &q in &b.initial {
                let id = out.add_state();
                index.insert((p, q), id);
                out.initial.insert(id);
                queue.push_back((p, q));
            }
        }
        while let Some((p, q)) = queue.pop_front() {
            let from = index[&(p, q)];
            if a.accepting.contains(&p) && b.accepting.contains(&q) {
                out.accepting.insert(from);
            }
            for (&s, pt) in &a.delta[p] {
                let Some(qt) = b.delta[q].get(&s) else {
                    continue;
                };
                for &p2 in pt {
                    for &q2 in qt {
                        let to = *index.entry((p2, q2)).or_insert_with(|| {
                            queue.push_back((p2, q2));
                            out.delta.push(BTreeMap::new());
                            out.eps.push(BTreeSet::new());
                            out.labels.push(None);
                            out.delta.len() - 1
                        });
                        out.delta[from].entry(s).or_default().insert(to);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The complement with respect to all words over this alphabet.
    pub fn complement(&self) -> Dfa {
        self.determinize().complement()
    }

    /// `L(self) \ L(other)`.
    pub fn difference(&self, other: &Nfa) -> Result<Nfa> {
        self.same_alphabet(other)?;
        self.intersect(&other.complement().to_nfa())
    }

    pub fn is_empty(&self) -> bool {
        let reach = self.reachable();
        !self.accepting.iter().any(|&q| reach[q])
    }

    /// A shortest accepted word. The choice among equally short words is
    /// deterministic.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let n = self.remove_epsilon();
        let mut parent: Vec<Option<(usize, Symbol)>> = vec![None; n.num_states()];
        let mut seen = vec![false; n.num_states()];
        let mut queue = VecDeque::new();
        for &q in &n.initial {
            seen[q] = true;
            queue.push_back(q);
        }
        while let Some(p) = queue.pop_front() {
            if n.accepting.contains(&p) {
                let mut w = Vec::new();
                let mut cur = p;
                while let Some((prev, s)) = parent[cur] {
                    w.push(s);
                    cur = prev;
                }
                w.reverse();
                return Some(Word::new(w));
            }
            for (&s, targets) in &n.delta[p] {
                for &q in targets {
                    if !seen[q] {
                        seen[q] = true;
                        parent[q] = Some((p, s));
                        queue.push_back(q);
                    }
                }
            }
        }
        None
    }

    /// Every accepted word of length at most `max_len`.
    pub fn accepted_up_to(&self, max_len: usize) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        let mut stack = vec![(self.initial_closure(), Vec::new())];
        while let Some((set, w)) = stack.pop() {
            if set.iter().any(|q| self.accepting.contains(q)) {
                out.insert(Word::new(w.clone()));
            }
            if w.len() == max_len {
                continue;
            }
            for &s in &self.alphabet {
                let next = self.step_set(&set, s);
                if !next.is_empty() {
                    let mut w2 = w.clone();
                    w2.push(s);
                    stack.push((next, w2));
                }
            }
        }
        out
    }
}
