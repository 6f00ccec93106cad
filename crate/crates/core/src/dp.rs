//! The four-index dynamic program over substring pairs.
//!
//! `cell(i, j, k, l)` holds the LCPS length of `X[i..=j]` and `Y[k..=l]`.
//! Cells are filled in increasing order of `(j - i + 1, l - k + 1)`, so every
//! shrink of either substring is ready before it is read.
//!
//! Every cell is exact, not only the root: when one side is a single symbol
//! the cell is 1 iff that symbol occurs anywhere in the other side.

use crate::error::{LcpsError, Result};
use crate::scalar::Length;
use crate::seq::{CpsResult, Seq};

/// Default cap on `n * n * m * m` table cells.
pub const DEFAULT_MAX_DP_CELLS: u64 = 1 << 26;

/// Filled LCPS table with cells of type `C`.
#[derive(Clone)]
pub struct DpTableOf<C> {
    n: usize,
    m: usize,
    cells: Vec<C>,
}

impl<C: Length> DpTableOf<C> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// 1-based lookup. Returns 0 for an empty substring (`i > j` or `k > l`)
    /// without touching storage.
    #[inline]
    pub fn cell(&self, i: usize, j: usize, k: usize, l: usize) -> C {
        if i > j || k > l {
            return C::zero();
        }
        self.cells[self.offset(i, j, k, l)]
    }

    /// LCPS length of the full inputs.
    pub fn root(&self) -> C {
        self.cell(1, self.n, 1, self.m)
    }

    #[inline]
    fn offset(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        debug_assert!(1 <= i && j <= self.n && 1 <= k && l <= self.m);
        (((i - 1) * self.n + (j - 1)) * self.m + (k - 1)) * self.m + (l - 1)
    }
}

/// Number of cells a table for lengths `n` and `m` needs, or `None` on overflow.
pub fn table_cells(n: usize, m: usize) -> Option<u64> {
    let (n, m) = (n as u64, m as u64);
    n.checked_mul(n)?.checked_mul(m)?.checked_mul(m)
}

fn check_capacity<C: Length>(n: usize, m: usize, max_cells: u64) -> Result<()> {
    let required = table_cells(n, m);
    match required {
        Some(cells) if cells <= max_cells => {}
        _ => {
            return Err(LcpsError::CapacityExceeded {
                resource: "dp cell",
                required: required.map_or(u128::MAX, u128::from),
                cap: max_cells as u128,
            })
        }
    }
    if n.min(m) > C::max_length() {
        return Err(LcpsError::CapacityExceeded {
            resource: "dp cell width",
            required: n.min(m) as u128,
            cap: C::max_length() as u128,
        });
    }
    Ok(())
}

/// Per-symbol prefix counts: `count(c, p)` is the number of `c` in `s[..p]`.
struct PrefixCounts {
    counts: Vec<u32>,
    len: usize,
}

impl PrefixCounts {
    fn new(s: &[u8], alphabet: &[Option<usize>; 256], sigma: usize) -> Self {
        let len = s.len();
        let mut counts = vec![0u32; sigma * (len + 1)];
        for (p, &c) in s.iter().enumerate() {
            for t in 0..sigma {
                counts[t * (len + 1) + p + 1] = counts[t * (len + 1) + p];
            }
            if let Some(t) = alphabet[c as usize] {
                counts[t * (len + 1) + p + 1] += 1;
            }
        }
        PrefixCounts { counts, len }
    }

    /// Whether symbol id `t` occurs at 1-based positions `lo..=hi`.
    #[inline]
    fn occurs(&self, t: Option<usize>, lo: usize, hi: usize) -> bool {
        t.is_some_and(|t| {
            let row = &self.counts[t * (self.len + 1)..];
            row[hi] > row[lo - 1]
        })
    }
}

pub fn fill_table<C: Length>(x: &Seq, y: &Seq, max_cells: u64) -> Result<DpTableOf<C>> {
    let (n, m) = (x.len(), y.len());
    check_capacity::<C>(n, m, max_cells)?;
    let mut table = DpTableOf {
        n,
        m,
        cells: vec![C::zero(); n * n * m * m],
    };
    if n == 0 || m == 0 {
        return Ok(table);
    }

    // Compact ids for symbols occurring in both inputs; others never match.
    let mut alphabet = [None; 256];
    let mut in_x = [false; 256];
    for &c in x.iter() {
        in_x[c as usize] = true;
    }
    let mut sigma = 0;
    for &c in y.iter() {
        if in_x[c as usize] && alphabet[c as usize].is_none() {
            alphabet[c as usize] = Some(sigma);
            sigma += 1;
        }
    }
    let x_counts = PrefixCounts::new(x, &alphabet, sigma);
    let y_counts = PrefixCounts::new(y, &alphabet, sigma);
    let one = C::one();
    let two = one + one;

    for x_len in 1..=n {
        for y_len in 1..=m {
            for i in 1..=n - x_len + 1 {
                let j = i + x_len - 1;
                let (xi, xj) = (x.at(i), x.at(j));
                for k in 1..=m - y_len + 1 {
                    let l = k + y_len - 1;
                    let value = if x_len == 1 {
                        if y_counts.occurs(alphabet[xi as usize], k, l) { one } else { C::zero() }
                    } else if y_len == 1 {
                        if x_counts.occurs(alphabet[y.at(k) as usize], i, j) { one } else { C::zero() }
                    } else if xi == xj && xi == y.at(k) && xi == y.at(l) {
                        two + table.cell(i + 1, j - 1, k + 1, l - 1)
                    } else {
                        table
                            .cell(i + 1, j, k, l)
                            .max(table.cell(i, j - 1, k, l))
                            .max(table.cell(i, j, k + 1, l))
                            .max(table.cell(i, j, k, l - 1))
                    };
                    let at = table.offset(i, j, k, l);
                    table.cells[at] = value;
                }
            }
        }
    }
    Ok(table)
}

/// Reconstructs one maximal witness by walking the table from the root.
pub fn traceback<C: Length>(table: &DpTableOf<C>, x: &Seq, y: &Seq) -> CpsResult {
    let (mut i, mut j, mut k, mut l) = (1, table.n, 1, table.m);
    let mut outer: Vec<(usize, usize)> = Vec::new();
    let mut inner: Vec<(usize, usize)> = Vec::new();
    let mut center = None;

    while i <= j && k <= l {
        let here = table.cell(i, j, k, l);
        if here.is_zero() {
            break;
        }
        if i == j {
            let q = (k..=l).find(|&q| y.at(q) == x.at(i)).expect("cell > 0 implies a match");
            center = Some((i, q));
            break;
        }
        if k == l {
            let p = (i..=j).find(|&p| x.at(p) == y.at(k)).expect("cell > 0 implies a match");
            center = Some((p, k));
            break;
        }
        let c = x.at(i);
        if c == x.at(j) && c == y.at(k) && c == y.at(l) {
            outer.push((i, k));
            inner.push((j, l));
            (i, j, k, l) = (i + 1, j - 1, k + 1, l - 1);
        } else if table.cell(i + 1, j, k, l) == here {
            i += 1;
        } else if table.cell(i, j - 1, k, l) == here {
            j -= 1;
        } else if table.cell(i, j, k + 1, l) == here {
            k += 1;
        } else {
            debug_assert!(table.cell(i, j, k, l - 1) == here);
            l -= 1;
        }
    }

    outer.extend(center);
    outer.extend(inner.into_iter().rev());
    CpsResult::from_pairs(x, &outer)
}

/// DP solution with a `u16` table.
pub fn dp_lcps(x: &Seq, y: &Seq, max_cells: u64) -> Result<CpsResult> {
    let table = fill_table::<u16>(x, y, max_cells)?;
    Ok(traceback(&table, x, y))
}
