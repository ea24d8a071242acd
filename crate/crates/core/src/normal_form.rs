//! Normal forms `ū₁ ⟨u₂|u₂⟩ u₃` and the closed-form product on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{letters_to_string, Symbol, Word};

/// The canonical representative `ū₁ ⟨u₂|u₂⟩ u₃` of a queue action, stored as
/// its three blocks: the leading reads `u₁`, the shuffled overlap `u₂`, and
/// the trailing writes `u₃`.
///
/// Every triple of words over `A` is a valid normal form, and distinct
/// triples denote distinct queue actions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    read_prefix: Vec<u8>,
    shuffled: Vec<u8>,
    write_suffix: Vec<u8>,
}

impl NormalForm {
    pub fn new(read_prefix: &[u8], shuffled: &[u8], write_suffix: &[u8]) -> Self {
        NormalForm {
            read_prefix: read_prefix.to_vec(),
            shuffled: shuffled.to_vec(),
            write_suffix: write_suffix.to_vec(),
        }
    }

    pub fn identity() -> Self {
        NormalForm::default()
    }

    /// `[a]`.
    pub fn write(a: u8) -> Self {
        NormalForm::new(b"", b"", &[a])
    }

    /// `[ā]`.
    pub fn read(a: u8) -> Self {
        NormalForm::new(&[a], b"", b"")
    }

    pub fn generator(s: Symbol) -> Self {
        match s {
            Symbol::Write(a) => NormalForm::write(a),
            Symbol::Read(a) => NormalForm::read(a),
        }
    }

    pub fn read_prefix(&self) -> &[u8] {
        &self.read_prefix
    }

    pub fn shuffled(&self) -> &[u8] {
        &self.shuffled
    }

    pub fn write_suffix(&self) -> &[u8] {
        &self.write_suffix
    }

    pub fn is_identity(&self) -> bool {
        self.read_prefix.is_empty() && self.shuffled.is_empty() && self.write_suffix.is_empty()
    }

    /// Splits an irreducible word into its three blocks. Returns `None` when
    /// `w` is not of the shape `Ā* {aā}* A*`.
    pub fn from_irreducible(w: &[Symbol]) -> Option<Self> {
        let mut nf = NormalForm::default();
        let mut i = 0;
        while let Some(Symbol::Read(a)) = w.get(i) {
            nf.read_prefix.push(*a);
            i += 1;
        }
        while let Some([Symbol::Write(a), Symbol::Read(b)]) = w.get(i..i + 2) {
            if a != b {
                return None;
            }
            nf.shuffled.push(*a);
            i += 2;
        }
        while let Some(Symbol::Write(a)) = w.get(i) {
            nf.write_suffix.push(*a);
            i += 1;
        }
        (i == w.len()).then_some(nf)
    }

    /// The flattened word `ū₁ ⟨u₂|u₂⟩ u₃`.
    pub fn to_word(&self) -> Word {
        let mut w = Word::reads(&self.read_prefix);
        for &a in &self.shuffled {
            w.push(Symbol::Write(a));
            w.push(Symbol::Read(a));
        }
        for &a in &self.write_suffix {
            w.push(Symbol::Write(a));
        }
        w
    }

    pub fn len(&self) -> usize {
        self.read_prefix.len() + 2 * self.shuffled.len() + self.write_suffix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// `π`: all written letters, `u₂u₃`.
    pub fn pi(&self) -> Vec<u8> {
        [self.shuffled.as_slice(), &self.write_suffix].concat()
    }

    /// `π̄`: all read letters, `u₁u₂`.
    pub fn pi_bar(&self) -> Vec<u8> {
        [self.read_prefix.as_slice(), &self.shuffled].concat()
    }

    pub fn proj(&self) -> (Vec<u8>, Vec<u8>) {
        (self.pi(), self.pi_bar())
    }

    /// The overlap width `|u₂|`.
    pub fn overlap_width(&self) -> usize {
        self.shuffled.len()
    }

    /// The product `self · other`.
    ///
    /// With `x = (u₁,u₂,u₃)`, `y = (v₁,v₂,v₃)`, `s = OL(u₂v₁v₂, u₂u₃v₂)`,
    /// `r = u₂v₁v₂ s⁻¹` and `t = s⁻¹ u₂u₃v₂`, the product is
    /// `(u₁r, s, tv₃)`.
    pub fn mul(&self, other: &NormalForm) -> NormalForm {
        let reads = [
            self.shuffled.as_slice(),
            &other.read_prefix,
            &other.shuffled,
        ]
        .concat();
        let writes = [
            self.shuffled.as_slice(),
            &self.write_suffix,
            &other.shuffled,
        ]
        .concat();
        let s = overlap(&reads, &writes);
        let r = &reads[..reads.len() - s.len()];
        let t = &writes[s.len()..];
        NormalForm {
            read_prefix: [self.read_prefix.as_slice(), r].concat(),
            shuffled: s.to_vec(),
            write_suffix: [t, other.write_suffix.as_slice()].concat(),
        }
    }

    /// The image under the duality map: `(u₃ᴿ, u₂ᴿ, u₁ᴿ)`.
    pub fn dual(&self) -> NormalForm {
        let rev = |v: &[u8]| v.iter().rev().copied().collect::<Vec<_>>();
        NormalForm {
            read_prefix: rev(&self.write_suffix),
            shuffled: rev(&self.shuffled),
            write_suffix: rev(&self.read_prefix),
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Debug-friendly triple rendering, e.g. `(b, e, ab)`.
pub fn triple_string(nf: &NormalForm) -> String {
    format!(
        "({}, {}, {})",
        letters_to_string(nf.read_prefix()),
        letters_to_string(nf.shuffled()),
        letters_to_string(nf.write_suffix())
    )
}

/// `OL(v, u)`: the longest suffix of `v` that is also a prefix of `u`.
pub fn overlap<'a>(v: &'a [u8], u: &[u8]) -> &'a [u8] {
    let max = v.len().min(u.len());
    (0..=max)
        .rev()
        .map(|n| &v[v.len() - n..])
        .find(|suffix| u.starts_with(suffix))
        .unwrap_or(&[])
}

/// `⟨v|w⟩ = v₁ w̄₁ v₂ w̄₂ …` for words of equal length.
pub fn shuffle(v: &[u8], w: &[u8]) -> Result<Word> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: w.len(),
        });
    }
    Ok(v.iter()
        .zip(w)
        .flat_map(|(&a, &b)| [Symbol::Write(a), Symbol::Read(b)])
        .collect())
}

/// The normal form of `w` as a left fold of [`NormalForm::mul`] over its
/// symbols.
pub fn eval_word(w: &[Symbol]) -> NormalForm {
    w.iter().fold(NormalForm::identity(), |acc, &s| {
        acc.mul(&NormalForm::generator(s))
    })
}

/// The duality map: reverse `w` and swap writes with reads.
pub fn dual(w: &[Symbol]) -> Word {
    w.iter().rev().map(|s| s.toggled()).collect()
}

/// `(π(w), π̄(w))`.
pub fn proj(w: &[Symbol]) -> (Vec<u8>, Vec<u8>) {
    (crate::word::pi(w), crate::word::pi_bar(w))
}

/// Overlap width of the queue action `[w]`.
pub fn ow(w: &[Symbol]) -> usize {
    eval_word(w).overlap_width()
}
