//! Byte sequences, witnesses, and the predicates that check them.
//!
//! Positions exposed by this crate are 1-based: position `i` of a sequence of
//! length `n` is valid iff `1 <= i <= n`.

use std::fmt;
use std::ops::Deref;

/// One octet of input. The alphabet is whatever octets occur in the inputs.
pub type Symbol = u8;

/// An immutable byte string with 1-based accessors.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Seq(Vec<Symbol>);

impl Seq {
    pub fn new(symbols: impl Into<Vec<Symbol>>) -> Self {
        Seq(symbols.into())
    }

    pub fn empty() -> Self {
        Seq(Vec::new())
    }

    /// Symbol at 1-based position `i`.
    ///
    /// Panics if `i` is 0 or past the end.
    #[inline]
    pub fn at(&self, i: usize) -> Symbol {
        assert!(i >= 1, "positions are 1-based");
        self.0[i - 1]
    }

    #[inline]
    pub fn get(&self, i: usize) -> Option<Symbol> {
        i.checked_sub(1).and_then(|p| self.0.get(p).copied())
    }

    pub fn as_bytes(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<Symbol> {
        self.0
    }

    /// Symbols at 1-based positions `i..=j`; empty when `i > j`.
    pub fn substring(&self, i: usize, j: usize) -> Seq {
        if i > j {
            return Seq::empty();
        }
        Seq(self.0[i - 1..j].to_vec())
    }

    pub fn reversed(&self) -> Seq {
        Seq(self.0.iter().rev().copied().collect())
    }

    /// Lossy UTF-8 rendering, for display and JSON.
    pub fn to_string_lossy(&self) -> String {
        String::from_utf8_lossy(&self.0).into_owned()
    }
}

impl Deref for Seq {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<&str> for Seq {
    fn from(s: &str) -> Self {
        Seq(s.as_bytes().to_vec())
    }
}

impl From<&[u8]> for Seq {
    fn from(s: &[u8]) -> Self {
        Seq(s.to_vec())
    }
}

impl From<Vec<u8>> for Seq {
    fn from(s: Vec<u8>) -> Self {
        Seq(s)
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Seq({:?})", self.to_string_lossy())
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_lossy())
    }
}

/// A common palindromic subsequence together with its embeddings.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CpsResult {
    pub z: Seq,
    /// Strictly increasing 1-based positions into X.
    pub x_indices: Vec<usize>,
    /// Strictly increasing 1-based positions into Y.
    pub y_indices: Vec<usize>,
}

impl CpsResult {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a witness from position pairs, reading symbols from `x`.
    pub fn from_pairs(x: &Seq, pairs: &[(usize, usize)]) -> Self {
        let z = Seq::new(pairs.iter().map(|&(i, _)| x.at(i)).collect::<Vec<_>>());
        CpsResult {
            z,
            x_indices: pairs.iter().map(|&(i, _)| i).collect(),
            y_indices: pairs.iter().map(|&(_, j)| j).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }
}

pub fn is_palindrome(z: &[Symbol]) -> bool {
    z.iter().eq(z.iter().rev())
}

/// Greedy left-to-right embedding test.
pub fn is_subsequence(z: &[Symbol], x: &[Symbol]) -> bool {
    let mut rest = x.iter();
    z.iter().all(|c| rest.any(|d| d == c))
}

fn is_embedding(z: &[Symbol], indices: &[usize], s: &[Symbol]) -> bool {
    indices.len() == z.len()
        && indices.windows(2).all(|w| w[0] < w[1])
        && indices
            .iter()
            .zip(z)
            .all(|(&i, &c)| i >= 1 && i <= s.len() && s[i - 1] == c)
}

/// Checks every witness invariant against the inputs.
pub fn validate_witness(r: &CpsResult, x: &Seq, y: &Seq) -> bool {
    is_palindrome(&r.z) && is_embedding(&r.z, &r.x_indices, x) && is_embedding(&r.z, &r.y_indices, y)
}
