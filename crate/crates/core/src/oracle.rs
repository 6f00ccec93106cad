//! Exhaustive LCPS search, used as ground truth.
//!
//! Every common subsequence is induced by some subset of X's positions, so it
//! is enough to walk X's subsets from largest to smallest and stop at the
//! first one that reads as a palindrome and embeds in Y.

use crate::error::{LcpsError, Result};
use crate::seq::{is_palindrome, CpsResult, Seq};

/// Longest X accepted by [`brute_force_lcps`].
pub const MAX_ORACLE_LEN: usize = 20;

pub fn brute_force_lcps(x: &Seq, y: &Seq) -> Result<CpsResult> {
    let n = x.len();
    if n > MAX_ORACLE_LEN {
        return Err(LcpsError::InputTooLarge {
            len: n,
            max: MAX_ORACLE_LEN,
        });
    }
    let mut z = Vec::with_capacity(n);
    for size in (1..=n).rev() {
        for mask in Combinations::new(n, size) {
            z.clear();
            z.extend((0..n).filter(|b| mask >> b & 1 == 1).map(|b| x[b]));
            if !is_palindrome(&z) {
                continue;
            }
            if let Some(y_indices) = greedy_embedding(&z, y) {
                let x_indices = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
                return Ok(CpsResult {
                    z: Seq::new(z),
                    x_indices,
                    y_indices,
                });
            }
        }
    }
    Ok(CpsResult::empty())
}

/// Leftmost 1-based embedding of `z` into `s`, if any.
fn greedy_embedding(z: &[u8], s: &[u8]) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(z.len());
    let mut p = 0;
    for &c in z {
        p += s[p..].iter().position(|&d| d == c)?;
        out.push(p + 1);
        p += 1;
    }
    Some(out)
}

/// All `n`-bit masks with exactly `k` bits set, in increasing order (Gosper's hack).
struct Combinations {
    next: Option<u32>,
    limit: u32,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        debug_assert!(k >= 1 && k <= n && n < 32);
        Combinations {
            next: Some((1u32 << k) - 1),
            limit: 1u32 << n,
        }
    }
}

impl Iterator for Combinations {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        let cur = self.next?;
        let low = cur & cur.wrapping_neg();
        let ripple = cur + low;
        let succ = (((ripple ^ cur) >> 2) / low) | ripple;
        self.next = (succ < self.limit).then_some(succ);
        Some(cur)
    }
}
