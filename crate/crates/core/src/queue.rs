//! Queue contents and the action of `Σ*` on them.

use std::fmt;

use crate::word::Symbol;

/// Contents of a FIFO queue, or the error value `⊥`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QueueState {
    Content(Vec<u8>),
    Bottom,
}

impl QueueState {
    pub fn new(letters: &[u8]) -> Self {
        QueueState::Content(letters.to_vec())
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, QueueState::Bottom)
    }
}

impl fmt::Display for QueueState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueueState::Bottom => f.write_str("BOT"),
            QueueState::Content(q) if q.is_empty() => f.write_str("e"),
            QueueState::Content(q) => {
                for &a in q {
                    write!(f, "{}", a as char)?;
                }
                Ok(())
            }
        }
    }
}

/// Applies `w` to `q` left to right. Writing appends at the tail; reading
/// `ā` removes `a` from the head or yields `⊥`.
pub fn act(q: &QueueState, w: &[Symbol]) -> QueueState {
    match q {
        QueueState::Bottom => QueueState::Bottom,
        QueueState::Content(q) => match act_on(q, w) {
            Some(r) => QueueState::Content(r),
            None => QueueState::Bottom,
        },
    }
}

/// `act` on proper contents; `None` stands for `⊥`.
pub fn act_on(q: &[u8], w: &[Symbol]) -> Option<Vec<u8>> {
    let mut buf = Vec::with_capacity(q.len() + w.len());
    act_into(q, w, &mut buf).then_some(buf)
}

/// Allocation-free variant used by the brute-force oracle: leaves the result
/// in `buf` and returns `false` on `⊥`.
pub(crate) fn act_into(q: &[u8], w: &[Symbol], buf: &mut Vec<u8>) -> bool {
    buf.clear();
    buf.extend_from_slice(q);
    let mut head = 0;
    for &s in w {
        match s {
            Symbol::Write(a) => buf.push(a),
            Symbol::Read(a) => {
                if head < buf.len() && buf[head] == a {
                    head += 1;
                } else {
                    return false;
                }
            }
        }
    }
    buf.drain(..head);
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn read_then_write() {
        let q = QueueState::new(b"ab");
        assert_eq!(act(&q, &w("Ac")), QueueState::new(b"bc"));
        assert_eq!(act(&q, &w("cA")), QueueState::new(b"bc"));
    }

    #[test]
    fn reading_from_empty_fails() {
        let q = QueueState::new(b"");
        assert_eq!(act(&q, &w("Aa")), QueueState::Bottom);
        assert_eq!(act(&q, &w("aA")), QueueState::new(b""));
    }

    #[test]
    fn identity_and_bottom() {
        let q = QueueState::new(b"ba");
        assert_eq!(act(&q, &[]), q);
        assert_eq!(act(&QueueState::Bottom, &w("ab")), QueueState::Bottom);
        assert_eq!(act(&QueueState::Bottom, &[]), QueueState::Bottom);
        assert_eq!(QueueState::Bottom.to_string(), "BOT");
    }
}
