//! The length-reducing semi-Thue system for queue actions.
//!
//! Three families of rules, for letters `a`, `b`:
//!
//! | rule          | left      | right     | side condition |
//! |---------------|-----------|-----------|----------------|
//! | `SwapDistinct`| `a b̄`     | `b̄ a`     | `a ≠ b`        |
//! | `PullRead`    | `a b b̄`   | `a b̄ b`   |                |
//! | `PushRead`    | `a ā b̄`   | `ā a b̄`   |                |
//!
//! The system is terminating and confluent, and its irreducible words are
//! exactly `Ā* {aā | a ∈ A}* A*`.

use crate::normal_form::NormalForm;
use crate::word::{Symbol, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `a b̄ → b̄ a` for `a ≠ b`.
    SwapDistinct,
    /// `a b b̄ → a b̄ b`.
    PullRead,
    /// `a ā b̄ → ā a b̄`.
    PushRead,
}

impl Rule {
    pub const ALL: [Rule; 3] = [Rule::SwapDistinct, Rule::PullRead, Rule::PushRead];

    /// Whether this rule's left-hand side occurs at `pos`.
    pub fn matches_at(self, w: &[Symbol], pos: usize) -> bool {
        use Symbol::{Read, Write};
        match self {
            Rule::SwapDistinct => matches!(
                w.get(pos..pos + 2),
                Some([Write(a), Read(b)]) if a != b
            ),
            Rule::PullRead => matches!(
                w.get(pos..pos + 3),
                Some([Write(_), Write(b), Read(c)]) if b == c
            ),
            Rule::PushRead => matches!(
                w.get(pos..pos + 3),
                Some([Write(a), Read(b), Read(_)]) if a == b
            ),
        }
    }

    /// Rewrites the redex at `pos` in place. The caller checks
    /// [`Rule::matches_at`] first.
    fn apply(self, w: &mut [Symbol], pos: usize) {
        match self {
            Rule::SwapDistinct | Rule::PushRead => w.swap(pos, pos + 1),
            Rule::PullRead => w.swap(pos + 1, pos + 2),
        }
    }
}

/// One rewrite step: the rule used, where, and the word it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub position: usize,
    pub rule: Rule,
    pub result: Word,
}

fn redex_at(w: &[Symbol], pos: usize) -> Option<Rule> {
    Rule::ALL.into_iter().find(|r| r.matches_at(w, pos))
}

/// The leftmost redex; at equal positions the rules are tried in table order.
pub fn find_redex(w: &[Symbol]) -> Option<(usize, Rule)> {
    find_redex_from(w, 0)
}

fn find_redex_from(w: &[Symbol], start: usize) -> Option<(usize, Rule)> {
    (start..w.len()).find_map(|pos| redex_at(w, pos).map(|r| (pos, r)))
}

pub fn is_irreducible(w: &[Symbol]) -> bool {
    find_redex(w).is_none()
}

/// Every word reachable from `w` in exactly one step, over all redexes and
/// all rules.
pub fn successors(w: &[Symbol]) -> Vec<Vec<Symbol>> {
    let mut out = Vec::new();
    for pos in 0..w.len() {
        for rule in Rule::ALL {
            if rule.matches_at(w, pos) {
                let mut v = w.to_vec();
                rule.apply(&mut v, pos);
                out.push(v);
            }
        }
    }
    out
}

/// Rewrites `w` to its irreducible form using the leftmost strategy.
pub fn normalize_symbols(w: &[Symbol]) -> Vec<Symbol> {
    let mut v = w.to_vec();
    let mut start = 0;
    while let Some((pos, rule)) = find_redex_from(&v, start) {
        rule.apply(&mut v, pos);
        // A redex is at most three symbols long, so nothing left of pos - 2
        // changed.
        start = pos.saturating_sub(2);
    }
    v
}

/// The full leftmost rewrite sequence from `w` to its normal form.
pub fn rewrite_trace(w: &[Symbol]) -> Vec<Step> {
    let mut v = w.to_vec();
    let mut steps = Vec::new();
    while let Some((pos, rule)) = find_redex(&v) {
        rule.apply(&mut v, pos);
        steps.push(Step {
            position: pos,
            rule,
            result: Word::new(v.clone()),
        });
    }
    steps
}

/// The normal form of `w`, computed by rewriting.
pub fn rewrite_normalize(w: &[Symbol]) -> NormalForm {
    let irreducible = normalize_symbols(w);
    NormalForm::from_irreducible(&irreducible).expect("irreducible words have the shape Ā*{aā}*A*")
}
