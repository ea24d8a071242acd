//! The monoid of queue actions.
//!
//! A word over `Σ = A ∪ Ā` describes a sequence of queue operations: `a`
//! writes the letter `a`, `ā` reads it. Two words are equivalent when they
//! transform every queue the same way; the quotient is the monoid `𝒬`.
//!
//! The crate provides
//!
//! * queue semantics and a brute-force equivalence oracle ([`queue`], [`oracle`]),
//! * a convergent rewriting system and normal forms ([`rewrite`], [`normal_form`]),
//! * the closed-form product, duality, projections and two embeddings,
//! * finite automata, the class automaton of `[w]` and rational-subset
//!   membership ([`automata`]),
//! * conjugacy and rational conjugator sets ([`conjugacy`]),
//! * `k`-shuffledness, the sets `Ω_k`, and simple-set expressions
//!   compiled to automata ([`recognizability`]).

pub mod automata;
pub mod conjugacy;
pub mod embed;
pub mod error;
pub mod normal_form;
pub mod oracle;
pub mod queue;
pub mod recognizability;
pub mod rewrite;
pub mod word;

pub use error::{Error, Result};
pub use normal_form::{dual, eval_word, overlap, ow, proj, shuffle, NormalForm};
pub use oracle::equiv_oracle;
pub use queue::{act, QueueState};
pub use rewrite::rewrite_normalize;
pub use word::{Alphabet, Symbol, Word};
