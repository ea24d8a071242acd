//! Brute-force equivalence of words by running them on every short queue.
//!
//! This is deliberately independent of the rewriting system and the product
//! formula: it only uses [`crate::queue`] semantics.

use crate::queue::act_into;
use crate::word::{pi_bar, Alphabet, Symbol};

/// `u ≡ v` decided on every queue over `alphabet` of length at most
/// `|u| + |v|`.
///
/// Any two inequivalent words already differ on a queue of length at most
/// `|π̄| + 1` of the longer one, so this bound never misses a difference.
pub fn equiv_oracle(alphabet: &Alphabet, u: &[Symbol], v: &[Symbol]) -> bool {
    equiv_oracle_bounded(alphabet, u, v, u.len() + v.len())
}

/// Like [`equiv_oracle`] with an explicit bound on the queue length.
pub fn equiv_oracle_bounded(
    alphabet: &Alphabet,
    u: &[Symbol],
    v: &[Symbol],
    max_queue_len: usize,
) -> bool {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for_each_queue(alphabet.letters(), max_queue_len, |q| {
        let ok_u = act_into(q, u, &mut left);
        let ok_v = act_into(q, v, &mut right);
        ok_u == ok_v && (!ok_u || left == right)
    })
}

/// Like [`equiv_oracle_bounded`], but skips every queue on which both words
/// are already known to fail.
///
/// Reads consume a queue from the front, so once a queue disagrees with the
/// first read letters of `u`, every extension of it also sends `u` to `⊥`.
/// Subtrees where this holds for both words are not visited. The verdict
/// is the same as the unpruned search with the same bound.
pub fn equiv_oracle_pruned(
    alphabet: &Alphabet,
    u: &[Symbol],
    v: &[Symbol],
    max_queue_len: usize,
) -> bool {
    let (bu, bv) = (pi_bar(u), pi_bar(v));
    let alive = |q: &[u8], b: &[u8]| {
        let n = q.len().min(b.len());
        q[..n] == b[..n]
    };
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(q) = stack.pop() {
        let ok_u = act_into(&q, u, &mut left);
        let ok_v = act_into(&q, v, &mut right);
        if ok_u != ok_v || (ok_u && left != right) {
            return false;
        }
        if q.len() == max_queue_len {
            continue;
        }
        for &a in alphabet.letters() {
            let mut next = q.clone();
            next.push(a);
            if alive(&next, &bu) || alive(&next, &bv) {
                stack.push(next);
            }
        }
    }
    true
}

/// Calls `f` on every word over `letters` of length `0..=max_len`, shortest
/// first, until it returns `false`. Returns whether all calls returned `true`.
pub fn for_each_queue(letters: &[u8], max_len: usize, mut f: impl FnMut(&[u8]) -> bool) -> bool {
    let mut digits: Vec<usize> = Vec::with_capacity(max_len);
    let mut q: Vec<u8> = Vec::with_capacity(max_len);
    for len in 0..=max_len {
        digits.clear();
        digits.resize(len, 0);
        q.clear();
        q.resize(len, letters[0]);
        'odometer: loop {
            if !f(&q) {
                return false;
            }
            let mut pos = len;
            loop {
                if pos == 0 {
                    break 'odometer;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < letters.len() {
                    q[pos] = letters[digits[pos]];
                    break;
                }
                digits[pos] = 0;
                q[pos] = letters[0];
            }
        }
    }
    true
}
