//! Insert-only strict-dominance maximum over 3-D integer keys.
//!
//! A query `(a, b, c)` returns the largest value stored at any key
//! `(a', b', c')` with `a' > a`, `b' > b` and `c' > c`. Stored values only
//! ever grow, so dominance maxima can be kept in prefix-maximum form:
//!
//! * the first two coordinates are flipped (`t -> hi + 1 - t`) and indexed by
//!   nested Fenwick trees, so "strictly greater" becomes a prefix;
//! * each 2-D Fenwick node keeps a staircase over the third coordinate: the
//!   entries that are not beaten by an entry with a larger-or-equal `c` and a
//!   larger-or-equal value. Reading the staircase just past `c` answers the
//!   open suffix query.
//!
//! Inserts and queries each touch `O(log A * log B)` staircases and cost
//! `O(log A * log B * log N)` in total. Memory is allocated only for nodes
//! that have received an insert.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Bound, RangeInclusive};

use crate::scalar::Length;

pub type Key = (i32, i32, i32);

/// Third-coordinate staircase: as `c` increases, values strictly decrease.
#[derive(Debug, Clone)]
struct Staircase<V, P> {
    steps: BTreeMap<i32, (V, P)>,
}

impl<V: Length, P: Copy> Staircase<V, P> {
    fn new() -> Self {
        Staircase { steps: BTreeMap::new() }
    }

    /// Best entry with key strictly above `c`.
    fn above(&self, c: i32) -> Option<(V, P)> {
        self.steps
            .range((Bound::Excluded(c), Bound::Unbounded))
            .next()
            .map(|(_, &e)| e)
    }

    fn raise(&mut self, c: i32, value: V, payload: P) {
        if let Some((_, &(v, _))) = self.steps.range(c..).next() {
            if v >= value {
                return;
            }
        }
        self.steps.insert(c, (value, payload));
        while let Some((&lower, &(v, _))) = self.steps.range(..c).next_back() {
            if v > value {
                break;
            }
            self.steps.remove(&lower);
        }
    }
}

/// Strict-dominance maximum index with values `V` and payloads `P`.
///
/// The first two key coordinates must lie in the ranges given to
/// [`new`](Self::new); the third is unbounded.
#[derive(Debug, Clone)]
pub struct DominanceMaxIndexOf<V, P> {
    a_hi: i32,
    a_len: usize,
    b_hi: i32,
    b_len: usize,
    /// `tree[fa]` maps a flipped `b` Fenwick position to its staircase.
    tree: Vec<HashMap<usize, Staircase<V, P>>>,
    exact: HashMap<Key, (V, P)>,
}

impl<V: Length, P: Copy> DominanceMaxIndexOf<V, P> {
    pub fn new(a_range: RangeInclusive<i32>, b_range: RangeInclusive<i32>) -> Self {
        let span = |r: &RangeInclusive<i32>| (i64::from(*r.end()) - i64::from(*r.start()) + 1).max(0) as usize;
        let a_len = span(&a_range);
        DominanceMaxIndexOf {
            a_hi: *a_range.end(),
            a_len,
            b_hi: *b_range.end(),
            b_len: span(&b_range),
            tree: (0..=a_len).map(|_| HashMap::new()).collect(),
            exact: HashMap::new(),
        }
    }

    /// Number of distinct keys stored.
    pub fn len(&self) -> usize {
        self.exact.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exact.is_empty()
    }

    /// Value and payload stored at exactly `key`.
    pub fn get(&self, key: Key) -> Option<(V, P)> {
        self.exact.get(&key).copied()
    }

    /// 1-based flipped position of `t`, for a dimension ending at `hi`.
    fn flipped(hi: i32, len: usize, t: i32) -> usize {
        let pos = i64::from(hi) - i64::from(t) + 1;
        assert!(pos >= 1 && pos as usize <= len, "coordinate {t} out of range");
        pos as usize
    }

    /// Number of flipped positions strictly above `t`, clamped to the dimension.
    fn prefix(hi: i32, len: usize, t: i32) -> usize {
        (i64::from(hi) - i64::from(t)).clamp(0, len as i64) as usize
    }

    /// Maximum over keys strictly dominating `(a, b, c)`, with the payload
    /// stored alongside it. Returns `(0, None)` when nothing dominates.
    /// Among equal maxima the first one found is kept.
    pub fn query_max_strict(&self, a: i32, b: i32, c: i32) -> (V, Option<P>) {
        let mut best: (V, Option<P>) = (V::zero(), None);
        let b_end = Self::prefix(self.b_hi, self.b_len, b);
        let mut fa = Self::prefix(self.a_hi, self.a_len, a);
        while fa > 0 {
            let row = &self.tree[fa];
            if !row.is_empty() {
                let mut fb = b_end;
                while fb > 0 {
                    if let Some((v, p)) = row.get(&fb).and_then(|s| s.above(c)) {
                        if best.1.is_none() || v > best.0 {
                            best = (v, Some(p));
                        }
                    }
                    fb &= fb - 1;
                }
            }
            fa &= fa - 1;
        }
        best
    }

    /// Raises the value at `key` to `max(old, value)`. The payload follows the
    /// maximum; on a tie the existing payload stays.
    pub fn insert_or_raise(&mut self, key: Key, value: V, payload: P) {
        let (a, b, c) = key;
        let fa0 = Self::flipped(self.a_hi, self.a_len, a);
        let fb0 = Self::flipped(self.b_hi, self.b_len, b);
        match self.exact.get_mut(&key) {
            Some(slot) if slot.0 >= value => return,
            Some(slot) => *slot = (value, payload),
            None => {
                self.exact.insert(key, (value, payload));
            }
        }
        let mut fa = fa0;
        while fa <= self.a_len {
            let row = &mut self.tree[fa];
            let mut fb = fb0;
            while fb <= self.b_len {
                row.entry(fb).or_insert_with(Staircase::new).raise(c, value, payload);
                fb += fb & fb.wrapping_neg();
            }
            fa += fa & fa.wrapping_neg();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Index = DominanceMaxIndexOf<u32, usize>;

    fn index() -> Index {
        Index::new(0..=8, 0..=8)
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn empty() {
        assert_eq!(index().query_max_strict(1, 1, 1), (0, None));
        assert_eq!(Index::new(1..=0, 1..=0).query_max_strict(0, 0, 0), (0, None));
    }

    #[test]
    fn strictness() {
        let mut idx = index();
        idx.insert_or_raise((2, 2, 2), 5, 42);
        assert_eq!(idx.query_max_strict(1, 1, 1), (5, Some(42)));
        assert_eq!(idx.query_max_strict(2, 2, 2), (0, None));
        assert_eq!(idx.query_max_strict(1, 2, 1), (0, None));
        assert_eq!(idx.query_max_strict(1, 1, 2), (0, None));
        assert_eq!(idx.query_max_strict(-5, -5, -5), (5, Some(42)));
    }

    #[test]
    fn max_semantics() {
        let mut idx = index();
        idx.insert_or_raise((1, 1, 1), 3, 0);
        idx.insert_or_raise((1, 1, 1), 2, 1);
        assert_eq!(idx.get((1, 1, 1)), Some((3, 0)));
        assert_eq!(idx.query_max_strict(0, 0, 0), (3, Some(0)));
        idx.insert_or_raise((1, 1, 1), 4, 2);
        assert_eq!(idx.get((1, 1, 1)), Some((4, 2)));
        assert_eq!(idx.query_max_strict(0, 0, 0), (4, Some(2)));
        assert_eq!(idx.len(), 1);
    }

    #[test]
    fn picks_best_of_many() {
        let mut idx = index();
        idx.insert_or_raise((5, 5, 5), 1, 0);
        idx.insert_or_raise((3, 6, 2), 7, 1);
        idx.insert_or_raise((6, 3, 7), 4, 2);
        assert_eq!(idx.query_max_strict(2, 2, 1), (7, Some(1)));
        assert_eq!(idx.query_max_strict(2, 2, 2), (4, Some(2)));
        assert_eq!(idx.query_max_strict(4, 2, 2), (4, Some(2)));
        assert_eq!(idx.query_max_strict(4, 4, 2), (1, Some(0)));
        assert_eq!(idx.query_max_strict(5, 2, 2), (4, Some(2)));
    }

    #[test]
    fn staircase_drops_beaten_steps() {
        let mut s: Staircase<u32, ()> = Staircase::new();
        s.raise(5, 3, ());
        s.raise(2, 2, ());
        s.raise(7, 1, ());
        assert_eq!(s.steps.len(), 2);
        s.raise(6, 4, ());
        assert_eq!(s.steps.keys().copied().collect::<Vec<_>>(), vec![6, 7]);
        assert_eq!(s.above(0).map(|e| e.0), Some(4));
        assert_eq!(s.above(6).map(|e| e.0), Some(1));
        assert_eq!(s.above(7), None);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn out_of_range_insert() {
        index().insert_or_raise((9, 0, 0), 1, 0);
    }
}
