//! Match sets: every position pair `(i, j)` with `x_i = y_j`, grouped by symbol.
//!
//! Matches are never stored as one flat list. Each [`SigmaMatchSet`] keeps the
//! two occurrence lists and yields their Cartesian product on demand.

use std::collections::BTreeMap;

use crate::error::{LcpsError, Result};
use crate::seq::{Seq, Symbol};

/// Default cap on the total match count `r`.
pub const DEFAULT_MAX_MATCHES: u64 = 10_000_000;

/// A 1-based position pair with `x_i = y_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Match {
    pub i: usize,
    pub j: usize,
}

impl Match {
    pub const fn new(i: usize, j: usize) -> Self {
        Match { i, j }
    }
}

/// Sorted occurrence positions of one symbol in X and in Y.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Occurrences {
    pub x_occ: Vec<usize>,
    pub y_occ: Vec<usize>,
}

/// All matches of a single symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaMatchSet {
    pub sigma: Symbol,
    pub x_occ: Vec<usize>,
    pub y_occ: Vec<usize>,
}

impl SigmaMatchSet {
    /// `|x_occ| * |y_occ|`.
    pub fn r_sigma(&self) -> u64 {
        self.x_occ.len() as u64 * self.y_occ.len() as u64
    }

    /// Matches in row-major order: by `i`, then by `j`.
    pub fn matches(&self) -> impl Iterator<Item = Match> + '_ {
        self.x_occ
            .iter()
            .flat_map(move |&i| self.y_occ.iter().map(move |&j| Match::new(i, j)))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MatchSet {
    /// One entry per symbol present in both inputs, ordered by symbol.
    pub per_sigma: Vec<SigmaMatchSet>,
    pub n: usize,
    pub m: usize,
}

impl MatchSet {
    /// Total number of matches.
    pub fn r(&self) -> u64 {
        self.per_sigma.iter().map(SigmaMatchSet::r_sigma).sum()
    }

    pub fn matches(&self) -> impl Iterator<Item = (Symbol, Match)> + '_ {
        self.per_sigma
            .iter()
            .flat_map(|s| s.matches().map(move |mt| (s.sigma, mt)))
    }

    pub fn sigma(&self, sigma: Symbol) -> Option<&SigmaMatchSet> {
        self.per_sigma
            .binary_search_by_key(&sigma, |s| s.sigma)
            .ok()
            .map(|k| &self.per_sigma[k])
    }
}

/// Scans both inputs once. Every symbol occurring in either input gets an
/// entry; a side where it does not occur has an empty list.
pub fn build_occurrence_lists(x: &Seq, y: &Seq) -> BTreeMap<Symbol, Occurrences> {
    let mut occ: BTreeMap<Symbol, Occurrences> = BTreeMap::new();
    for (p, &c) in x.iter().enumerate() {
        occ.entry(c).or_default().x_occ.push(p + 1);
    }
    for (p, &c) in y.iter().enumerate() {
        occ.entry(c).or_default().y_occ.push(p + 1);
    }
    occ
}

/// Builds the match set without any size limit.
pub fn build_match_set(x: &Seq, y: &Seq) -> MatchSet {
    let per_sigma = build_occurrence_lists(x, y)
        .into_iter()
        .filter(|(_, o)| !o.x_occ.is_empty() && !o.y_occ.is_empty())
        .map(|(sigma, o)| SigmaMatchSet {
            sigma,
            x_occ: o.x_occ,
            y_occ: o.y_occ,
        })
        .collect();
    MatchSet {
        per_sigma,
        n: x.len(),
        m: y.len(),
    }
}

/// Like [`build_match_set`], but fails once `r` would exceed `max_matches`.
pub fn build_match_set_capped(x: &Seq, y: &Seq, max_matches: u64) -> Result<MatchSet> {
    let ms = build_match_set(x, y);
    let r = ms.r();
    if r > max_matches {
        return Err(LcpsError::CapacityExceeded {
            resource: "match",
            required: r as u128,
            cap: max_matches as u128,
        });
    }
    Ok(ms)
}
