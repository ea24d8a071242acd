//! DOT export and the line-based text format for automata over `Σ`.
//!
//! Text format:
//!
//! ```text
//! alphabet: ab
//! state p initial
//! state q accepting
//! trans p a q
//! trans q B p
//! ```
//!
//! Symbols use the case-encoded word syntax. Blank lines and lines starting
//! with `#` are ignored. State ids are arbitrary whitespace-free tokens.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use super::dfa::Dfa;
use super::nfa::Nfa;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol};

fn state_name(nfa: &Nfa, q: usize) -> String {
    match nfa.label(q) {
        Some(l) if !l.is_empty() && !l.contains(char::is_whitespace) => l.to_string(),
        _ => q.to_string(),
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering: accepting states are double circles, parallel edges
/// are merged into one comma-separated label, ε-moves are labelled `ε`.
pub fn nfa_to_dot(nfa: &Nfa) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in 0..nfa.num_states() {
        let shape = if nfa.is_accepting(q) {
            "doublecircle"
        } else {
            "circle"
        };
        let label = nfa
            .label(q)
            .map(str::to_string)
            .unwrap_or_else(|| q.to_string());
        let _ = writeln!(
            out,
            "  s{q} [label=\"{}\", shape={shape}];",
            dot_escape(&label)
        );
    }
    for &q in nfa.initial_states() {
        let _ = writeln!(out, "  start{q} [shape=point];\n  start{q} -> s{q};");
    }
    let mut edges: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for (p, s, q) in nfa.transitions() {
        edges.entry((p, q)).or_default().push(s.to_string());
    }
    for (p, q) in nfa.epsilon_transitions() {
        edges.entry((p, q)).or_default().push("ε".to_string());
    }
    for ((p, q), labels) in edges {
        let _ = writeln!(out, "  s{p} -> s{q} [label=\"{}\"];", labels.join(","));
    }
    out.push_str("}\n");
    out
}

pub fn dfa_to_dot(dfa: &Dfa) -> String {
    nfa_to_dot(&dfa.to_nfa())
}

/// Serializes an automaton in the text format. ε-moves are eliminated
/// first; the header lists the base letters of the alphabet.
pub fn nfa_to_text(nfa: &Nfa) -> String {
    let nfa = nfa.remove_epsilon();
    let mut letters: Vec<u8> = nfa.alphabet().iter().map(|s| s.letter()).collect();
    letters.sort();
    letters.dedup();
    let mut out = String::from("alphabet: ");
    out.extend(letters.iter().map(|&a| a as char));
    out.push('\n');
    let names: Vec<String> = (0..nfa.num_states()).map(|q| state_name(&nfa, q)).collect();
    // Labels are not guaranteed unique; fall back to indices when they clash.
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for n in &names {
        *counts.entry(n.as_str()).or_default() += 1;
    }
    let names: Vec<String> = if counts.values().all(|&c| c == 1) {
        names
    } else {
        (0..nfa.num_states()).map(|q| q.to_string()).collect()
    };
    for (q, name) in names.iter().enumerate() {
        let _ = write!(out, "state {name}");
        if nfa.initial_states().contains(&q) {
            out.push_str(" initial");
        }
        if nfa.is_accepting(q) {
            out.push_str(" accepting");
        }
        out.push('\n');
    }
    for (p, s, q) in nfa.transitions() {
        let _ = writeln!(out, "trans {} {} {}", names[p], s, names[q]);
    }
    out
}

pub fn dfa_to_text(dfa: &Dfa) -> String {
    nfa_to_text(&dfa.to_nfa())
}

/// Parses the text format. Returns the alphabet named in the header and an
/// automaton over its full symbol set `Σ`.
pub fn parse_nfa(text: &str) -> Result<(Alphabet, Nfa)> {
    let mut alphabet: Option<Alphabet> = None;
    let mut nfa: Option<Nfa> = None;
    let mut ids: HashMap<String, usize> = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Syntax {
            line: line_no,
            message,
        };
        if let Some(rest) = line.strip_prefix("alphabet:") {
            if alphabet.is_some() {
                return Err(err("duplicate alphabet header".into()));
            }
            let a = Alphabet::new(rest.trim()).map_err(|e| err(e.to_string()))?;
            nfa = Some(Nfa::new(a.symbols()));
            alphabet = Some(a);
            continue;
        }
        let Some(n) = nfa.as_mut() else {
            return Err(err("expected `alphabet: <letters>` first".into()));
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["state", id, flags @ ..] => {
                if ids.contains_key(*id) {
                    return Err(err(format!("state {id} declared twice")));
                }
                let q = n.add_labeled_state(*id);
                ids.insert(id.to_string(), q);
                for flag in flags {
                    match *flag {
                        "initial" => n.set_initial(q),
                        "accepting" => n.set_accepting(q),
                        other => return Err(err(format!("unknown state flag {other:?}"))),
                    }
                }
            }
            ["trans", src, sym, dst] => {
                let lookup = |id: &str| {
                    ids.get(id)
                        .copied()
                        .ok_or_else(|| err(format!("undeclared state {id}")))
                };
                let (p, q) = (lookup(src)?, lookup(dst)?);
                let mut chars = sym.chars();
                let symbol = match (chars.next().and_then(Symbol::from_char), chars.next()) {
                    (Some(s), None) => s,
                    _ => return Err(err(format!("bad symbol {sym:?}"))),
                };
                n.add_transition(p, symbol, q)
                    .map_err(|e| err(e.to_string()))?;
            }
            _ => return Err(err(format!("cannot parse {line:?}"))),
        }
    }
    match (alphabet, nfa) {
        (Some(a), Some(n)) => Ok((a, n)),
        _ => Err(Error::Syntax {
            line: 0,
            message: "missing alphabet header".into(),
        }),
    }
}
