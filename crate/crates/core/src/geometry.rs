//! Nested-rectangle view of common palindromes.
//!
//! Two matches `(i, j)` and `(k, l)` of the same symbol with `i < k` and
//! `j < l` are opposite corners of a grid rectangle; they supply the outermost
//! pair of a palindrome. A match paired with itself is a degenerate rectangle
//! standing for an odd-length center. Palindromes correspond to chains of
//! strictly nested rectangles, and a rectangle `<(i, j), (k, l)>` maps to the
//! 4-D point `(i, j, -k, -l)` so that nesting becomes strict dominance.

use crate::error::{LcpsError, Result};
use crate::matches::{Match, MatchSet, SigmaMatchSet};
use crate::seq::{validate_witness, CpsResult, Seq, Symbol};

/// Default cap on the rectangle estimate `sum(r_sigma^2)`.
pub const DEFAULT_MAX_RECTS: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect {
    pub sigma: Symbol,
    pub lower: Match,
    pub upper: Match,
}

impl Rect {
    /// A rectangle spanned by two matches of `sigma`; `None` unless the
    /// corners are strictly ordered in both coordinates or identical.
    pub fn new(sigma: Symbol, lower: Match, upper: Match) -> Option<Self> {
        let ok = (lower.i < upper.i && lower.j < upper.j) || lower == upper;
        ok.then_some(Rect { sigma, lower, upper })
    }

    pub fn center(sigma: Symbol, at: Match) -> Self {
        Rect {
            sigma,
            lower: at,
            upper: at,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.lower == self.upper
    }

    /// Palindrome symbols this rectangle contributes.
    pub fn weight(&self) -> u8 {
        if self.is_degenerate() {
            1
        } else {
            2
        }
    }
}

/// Image of a rectangle in 4-D. `source` indexes the rectangle it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point4 {
    pub a: i32,
    pub b: i32,
    pub c: i32,
    pub d: i32,
    pub weight: u8,
    pub source: u32,
}

impl Point4 {
    pub fn is_degenerate(&self) -> bool {
        self.a == -self.c && self.b == -self.d
    }
}

/// Non-degenerate pairs plus degenerate centers produced by one symbol.
fn sigma_rect_count(s: &SigmaMatchSet) -> u64 {
    let choose2 = |v: u64| v * v.saturating_sub(1) / 2;
    let (p, q) = (s.x_occ.len() as u64, s.y_occ.len() as u64);
    choose2(p) * choose2(q) + p * q
}

/// Exact number of rectangles [`enumerate_rectangles`] would emit.
pub fn rectangle_count(ms: &MatchSet) -> u64 {
    ms.per_sigma.iter().map(sigma_rect_count).sum()
}

/// Upper bound `sum(r_sigma^2)` checked against the rectangle cap.
pub fn rectangle_estimate(ms: &MatchSet) -> u128 {
    ms.per_sigma.iter().map(|s| (s.r_sigma() as u128).pow(2)).sum()
}

/// All rectangles of the match set: every strictly ordered pair of same-symbol
/// matches, plus one degenerate rectangle per match. Pairs sharing exactly one
/// coordinate are never emitted.
pub fn enumerate_rectangles(ms: &MatchSet, max_rects: u64) -> Result<Vec<Rect>> {
    let estimate = rectangle_estimate(ms);
    if estimate > max_rects as u128 {
        return Err(LcpsError::CapacityExceeded {
            resource: "rectangle",
            required: estimate,
            cap: max_rects as u128,
        });
    }
    let mut rects = Vec::with_capacity(rectangle_count(ms) as usize);
    for s in &ms.per_sigma {
        for (p, &i) in s.x_occ.iter().enumerate() {
            for (q, &j) in s.y_occ.iter().enumerate() {
                let lower = Match::new(i, j);
                rects.push(Rect::center(s.sigma, lower));
                for &k in &s.x_occ[p + 1..] {
                    for &l in &s.y_occ[q + 1..] {
                        rects.push(Rect {
                            sigma: s.sigma,
                            lower,
                            upper: Match::new(k, l),
                        });
                    }
                }
            }
        }
    }
    Ok(rects)
}

pub fn rect_to_point(r: &Rect, source: u32) -> Point4 {
    Point4 {
        a: r.lower.i as i32,
        b: r.lower.j as i32,
        c: -(r.upper.i as i32),
        d: -(r.upper.j as i32),
        weight: r.weight(),
        source,
    }
}

/// Strict containment of `inner` in the open interior of `outer`.
pub fn is_nested(inner: &Rect, outer: &Rect) -> bool {
    inner.lower.i > outer.lower.i
        && inner.lower.j > outer.lower.j
        && inner.upper.i < outer.upper.i
        && inner.upper.j < outer.upper.j
}

/// `p` is chained to `q` iff `p` exceeds `q` in all four coordinates.
pub fn is_chained(p: &Point4, q: &Point4) -> bool {
    p.a > q.a && p.b > q.b && p.c > q.c && p.d > q.d
}

/// Splits a witness into its rectangles, outermost first: position `t` pairs
/// with position `u - t + 1`, and an odd middle becomes a degenerate center.
pub fn decompose_cps(r: &CpsResult, x: &Seq, y: &Seq) -> Result<Vec<Rect>> {
    if !validate_witness(r, x, y) {
        return Err(LcpsError::InvalidWitness(
            "witness is not a common palindromic subsequence of the inputs".into(),
        ));
    }
    let u = r.len();
    let corner = |t: usize| Match::new(r.x_indices[t], r.y_indices[t]);
    Ok((0..u.div_ceil(2))
        .map(|t| Rect {
            sigma: r.z[t],
            lower: corner(t),
            upper: corner(u - 1 - t),
        })
        .collect())
}
