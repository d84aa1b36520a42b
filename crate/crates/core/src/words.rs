//! Binary words, the vertex set `Z = {0,1}* ∪ {ζ}`, the padded lexicographic
//! order and the bit-complement involution.
//!
//! Text tokens: the empty word is `e`, the isolated vertex is `z`, any other
//! word is its raw digit string.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word over `{0, 1}`. The empty word is the root of the tree.
///
/// `Ord` is the padded lexicographic order: both words are extended by an
/// infinite tail of the symbol ½ and compared with `0 < ½ < 1`. In particular
/// `w0 < w < w1` for every word `w`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word { bits: Vec::new() }
    }

    /// Builds a word from bits; every entry must be 0 or 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "bits must be 0 or 1");
        Word {
            bits: bits.to_vec(),
        }
    }

    /// `0^n`.
    pub fn zeros(n: usize) -> Self {
        Word { bits: vec![0; n] }
    }

    /// `1^n`.
    pub fn ones(n: usize) -> Self {
        Word { bits: vec![1; n] }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn child(&self, bit: u8) -> Word {
        debug_assert!(bit <= 1);
        let mut bits = Vec::with_capacity(self.bits.len() + 1);
        bits.extend_from_slice(&self.bits);
        bits.push(bit);
        Word { bits }
    }

    pub fn concat(&self, suffix: &Word) -> Word {
        let mut bits = Vec::with_capacity(self.bits.len() + suffix.bits.len());
        bits.extend_from_slice(&self.bits);
        bits.extend_from_slice(&suffix.bits);
        Word { bits }
    }

    /// The parent word, or `None` for the root.
    pub fn parent(&self) -> Option<Word> {
        if self.bits.is_empty() {
            None
        } else {
            Some(self.prefix(self.bits.len() - 1))
        }
    }

    pub fn last_bit(&self) -> Option<u8> {
        self.bits.last().copied()
    }

    /// The prefix of length `n` (clamped to the word length).
    pub fn prefix(&self, n: usize) -> Word {
        Word {
            bits: self.bits[..n.min(self.bits.len())].to_vec(),
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.bits.starts_with(&self.bits)
    }

    pub fn is_proper_prefix_of(&self, other: &Word) -> bool {
        self.bits.len() < other.bits.len() && self.is_prefix_of(other)
    }

    /// Returns `s` with `self = prefix · s`, if `prefix` is a prefix of `self`.
    pub fn prefix_split(&self, prefix: &Word) -> Option<Word> {
        self.bits.strip_prefix(prefix.bits.as_slice()).map(|s| Word {
            bits: s.to_vec(),
        })
    }

    /// Bitwise complement.
    pub fn bar(&self) -> Word {
        Word {
            bits: self.bits.iter().map(|b| 1 - b).collect(),
        }
    }

    /// All words of length exactly `n`, in padded lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<Word> {
        let mut out = Vec::with_capacity(1 << n);
        for code in 0u64..(1u64 << n) {
            let bits = (0..n).map(|i| ((code >> (n - 1 - i)) & 1) as u8).collect();
            out.push(Word { bits });
        }
        out
    }

    /// All words of length at most `depth`.
    pub fn ball(depth: usize) -> Vec<Word> {
        (0..=depth).flat_map(Word::all_of_length).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.bits.iter().zip(&other.bits) {
            if a != b {
                return a.cmp(b);
            }
        }
        // One is a prefix of the other: the shorter one continues with ½.
        match self.bits.len().cmp(&other.bits.len()) {
            Ordering::Equal => Ordering::Equal,
            Ordering::Less => {
                if other.bits[self.bits.len()] == 0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            Ordering::Greater => {
                if self.bits[other.bits.len()] == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return f.write_str("e");
        }
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Word::empty());
        }
        if s.is_empty() || !s.bytes().all(|c| c == b'0' || c == b'1') {
            return Err(Error::Parse(format!("bad word token {s:?}")));
        }
        Ok(Word {
            bits: s.bytes().map(|c| c - b'0').collect(),
        })
    }
}

/// A vertex of the tree, or the isolated vertex ζ.
///
/// The derived order puts ζ above every word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Word(Word),
    Zeta,
}

impl Vertex {
    pub fn word(s: &str) -> Vertex {
        Vertex::Word(s.parse().expect("valid word literal"))
    }

    pub fn root() -> Vertex {
        Vertex::Word(Word::empty())
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Vertex::Word(w) => Some(w),
            Vertex::Zeta => None,
        }
    }

    pub fn is_zeta(&self) -> bool {
        matches!(self, Vertex::Zeta)
    }

    pub fn bar(&self) -> Vertex {
        bar(self)
    }

    /// Word length, with ζ counted as length 0.
    pub fn depth(&self) -> usize {
        self.as_word().map_or(0, Word::len)
    }
}

impl From<Word> for Vertex {
    fn from(w: Word) -> Self {
        Vertex::Word(w)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Word(w) => fmt::Display::fmt(w, f),
            Vertex::Zeta => f.write_str("z"),
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "z" => Ok(Vertex::Zeta),
            other => other.parse().map(Vertex::Word),
        }
    }
}

pub fn lex_compare(x: &Vertex, y: &Vertex) -> Ordering {
    x.cmp(y)
}

/// True iff some rotation of `(x, y, z)` is lex-nondecreasing.
pub fn cyclic_order(x: &Vertex, y: &Vertex, z: &Vertex) -> bool {
    (x <= y && y <= z) || (y <= z && z <= x) || (z <= x && x <= y)
}

/// True iff the sequence is cyclically ordered: some rotation of it is
/// strictly increasing. Sequences of length ≤ 1 qualify; entries must be
/// distinct.
pub fn is_cyclically_ordered(xs: &[Vertex]) -> bool {
    let n = xs.len();
    if n <= 1 {
        return true;
    }
    let descents = (0..n).filter(|&i| xs[i] >= xs[(i + 1) % n]).count();
    descents == 1
}

/// Bit complement on words; ζ is fixed.
pub fn bar(x: &Vertex) -> Vertex {
    match x {
        Vertex::Word(w) => Vertex::Word(w.bar()),
        Vertex::Zeta => Vertex::Zeta,
    }
}

pub fn prefix_split(x: &Word, p: &Word) -> Option<Word> {
    x.prefix_split(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_compare(&v("00"), &v("0")), Ordering::Less);
        assert_eq!(lex_compare(&v("01"), &v("0")), Ordering::Greater);
        assert_eq!(lex_compare(&v("0110"), &v("0110")), Ordering::Equal);
        assert_eq!(lex_compare(&v("11"), &v("z")), Ordering::Less);
        assert_eq!(lex_compare(&v("e"), &v("z")), Ordering::Less);
    }

    #[test]
    fn cyclic_examples() {
        assert!(cyclic_order(&v("0"), &v("e"), &v("1")));
        assert!(cyclic_order(&v("e"), &v("1"), &v("0")));
        assert!(!cyclic_order(&v("1"), &v("e"), &v("0")));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(bar(&v("011")), v("100"));
        assert_eq!(bar(&v("e")), v("e"));
        assert_eq!(bar(&v("z")), v("z"));
    }

    #[test]
    fn prefix_split_examples() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert_eq!(prefix_split(&w("0110"), &w("01")), Some(w("10")));
        assert_eq!(prefix_split(&w("0110"), &w("10")), None);
        assert_eq!(prefix_split(&w("0110"), &w("e")), Some(w("0110")));
    }

    #[test]
    fn tokens_round_trip() {
        for s in ["e", "z", "0", "1011"] {
            assert_eq!(v(s).to_string(), s);
        }
        assert!("".parse::<Vertex>().is_err());
        assert!("012".parse::<Vertex>().is_err());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u8..2, 0..7).prop_map(|b| Word::from_bits(&b))
    }

    fn arb_vertex() -> impl Strategy<Value = Vertex> {
        prop_oneof![9 => arb_word().prop_map(Vertex::Word), 1 => Just(Vertex::Zeta)]
    }

    proptest! {
        #[test]
        fn lex_is_total_order(x in arb_vertex(), y in arb_vertex(), z in arb_vertex()) {
            prop_assert_eq!(lex_compare(&x, &y), lex_compare(&y, &x).reverse());
            prop_assert_eq!(lex_compare(&x, &y) == Ordering::Equal, x == y);
            if x <= y && y <= z {
                prop_assert!(x <= z);
            }
        }

        #[test]
        fn children_straddle_parent(w in arb_word()) {
            prop_assert!(w.child(0) < w);
            prop_assert!(w < w.child(1));
        }

        #[test]
        fn cyclic_rotation_invariant(x in arb_vertex(), y in arb_vertex(), z in arb_vertex()) {
            let c = cyclic_order(&x, &y, &z);
            prop_assert_eq!(c, cyclic_order(&y, &z, &x));
            prop_assert_eq!(c, cyclic_order(&z, &x, &y));
        }

        #[test]
        fn bar_involution_reverses_lex(x in arb_word(), y in arb_word()) {
            prop_assert_eq!(x.bar().bar(), x.clone());
            prop_assert_eq!(x.cmp(&y), y.bar().cmp(&x.bar()));
        }
    }
}
