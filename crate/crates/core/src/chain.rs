//! Maximum-weight chain of 4-D points, and the geometric LCPS built on it.
//!
//! Points are swept in non-increasing fourth coordinate. Every point asks a
//! [`DominanceMaxIndexOf`] for the heaviest chain strictly dominating it in the
//! other three coordinates, then stores its own total. Points sharing a fourth
//! coordinate are processed as one group: all of the group's queries run
//! before any of its inserts, so no two of them can chain.

use crate::dominance::DominanceMaxIndexOf;
use crate::error::Result;
use crate::geometry::{enumerate_rectangles, rect_to_point, Point4, DEFAULT_MAX_RECTS};
use crate::matches::{build_match_set_capped, DEFAULT_MAX_MATCHES};
use crate::scalar::Length;
use crate::seq::{CpsResult, Seq};

/// Points reordered for the sweep, with the boundaries of equal-`d` groups.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SortedPoints {
    pub points: Vec<Point4>,
    /// `groups[g]..groups[g + 1]` is one group; starts with 0 and ends with `points.len()`.
    bounds: Vec<usize>,
}

impl SortedPoints {
    pub fn groups(&self) -> impl Iterator<Item = &[Point4]> + '_ {
        self.bounds.windows(2).map(|w| &self.points[w[0]..w[1]])
    }

    pub fn group_count(&self) -> usize {
        self.bounds.len().saturating_sub(1)
    }
}

/// Stable counting sort of `order` by `key(point) - lo` ascending.
fn counting_pass(points: &[Point4], order: &[u32], key: impl Fn(&Point4) -> i32) -> Vec<u32> {
    let (lo, hi) = order
        .iter()
        .map(|&p| key(&points[p as usize]))
        .fold((i32::MAX, i32::MIN), |(lo, hi), k| (lo.min(k), hi.max(k)));
    let mut starts = vec![0usize; (i64::from(hi) - i64::from(lo) + 2) as usize];
    for &p in order {
        starts[(key(&points[p as usize]) - lo) as usize + 1] += 1;
    }
    for t in 1..starts.len() {
        starts[t] += starts[t - 1];
    }
    let mut out = vec![0u32; order.len()];
    for &p in order {
        let slot = &mut starts[(key(&points[p as usize]) - lo) as usize];
        out[*slot] = p;
        *slot += 1;
    }
    out
}

/// Orders points by `d` descending, then `(a, b, c)` ascending, using four
/// stable counting-sort passes. Linear in the point count plus the
/// coordinate ranges.
pub fn sort_points(points: &[Point4]) -> SortedPoints {
    if points.is_empty() {
        return SortedPoints::default();
    }
    let mut order: Vec<u32> = (0..points.len() as u32).collect();
    order = counting_pass(points, &order, |p| p.c);
    order = counting_pass(points, &order, |p| p.b);
    order = counting_pass(points, &order, |p| p.a);
    order = counting_pass(points, &order, |p| -p.d);

    let sorted: Vec<Point4> = order.iter().map(|&p| points[p as usize]).collect();
    let mut bounds = vec![0];
    bounds.extend((1..sorted.len()).filter(|&t| sorted[t].d != sorted[t - 1].d));
    bounds.push(sorted.len());
    SortedPoints { points: sorted, bounds }
}

/// One swept point and the best chain starting at it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainNodeOf<V> {
    pub point: Point4,
    /// Total weight of the chain from this point inward, inclusive.
    pub value: V,
    /// Node index of the next (inner) point of the chain.
    pub successor: Option<usize>,
}

/// All swept nodes and the heaviest one.
#[derive(Debug, Clone)]
pub struct ChainOf<V> {
    pub nodes: Vec<ChainNodeOf<V>>,
    pub best: Option<usize>,
}

impl<V: Length> ChainOf<V> {
    pub fn value(&self) -> V {
        self.best.map_or(V::zero(), |b| self.nodes[b].value)
    }

    /// The heaviest chain, outermost point first.
    pub fn walk(&self) -> impl Iterator<Item = &ChainNodeOf<V>> + '_ {
        std::iter::successors(self.best.map(|b| &self.nodes[b]), |n| {
            n.successor.map(|s| &self.nodes[s])
        })
    }
}

fn coordinate_range(points: &[Point4], f: impl Fn(&Point4) -> i32) -> std::ops::RangeInclusive<i32> {
    let lo = points.iter().map(&f).min().unwrap_or(0);
    let hi = points.iter().map(&f).max().unwrap_or(-1);
    lo..=hi
}

/// Sweeps sorted points and returns every node with its best chain.
pub fn longest_chain<V: Length>(sorted: &SortedPoints) -> ChainOf<V> {
    let points = &sorted.points;
    let mut index: DominanceMaxIndexOf<V, usize> =
        DominanceMaxIndexOf::new(coordinate_range(points, |p| p.a), coordinate_range(points, |p| p.b));
    let mut nodes: Vec<ChainNodeOf<V>> = Vec::with_capacity(points.len());
    let mut best: Option<usize> = None;

    for group in sorted.groups() {
        let first = nodes.len();
        for &point in group {
            let (inner, successor) = index.query_max_strict(point.a, point.b, point.c);
            let value = V::from(point.weight).expect("weight fits") + inner;
            if best.is_none_or(|b| value > nodes[b].value) {
                best = Some(nodes.len());
            }
            nodes.push(ChainNodeOf { point, value, successor });
        }
        for (id, node) in nodes.iter().enumerate().skip(first) {
            let p = node.point;
            index.insert_or_raise((p.a, p.b, p.c), node.value, id);
        }
    }
    ChainOf { nodes, best }
}

/// Size limits for the geometric solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeomCaps {
    pub max_matches: u64,
    pub max_rects: u64,
}

impl Default for GeomCaps {
    fn default() -> Self {
        GeomCaps {
            max_matches: DEFAULT_MAX_MATCHES,
            max_rects: DEFAULT_MAX_RECTS,
        }
    }
}

/// Turns a heaviest chain back into a palindrome: each weight-2 point adds its
/// two corners, a trailing weight-1 point adds the center.
pub fn chain_witness<V: Length>(chain: &ChainOf<V>, x: &Seq) -> CpsResult {
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for node in chain.walk() {
        let p = node.point;
        outer.push((p.a as usize, p.b as usize));
        if p.weight == 2 {
            inner.push((-p.c as usize, -p.d as usize));
        }
    }
    outer.extend(inner.into_iter().rev());
    CpsResult::from_pairs(x, &outer)
}

pub fn geometric_lcps(x: &Seq, y: &Seq, caps: GeomCaps) -> Result<CpsResult> {
    let ms = build_match_set_capped(x, y, caps.max_matches)?;
    let rects = enumerate_rectangles(&ms, caps.max_rects)?;
    let points: Vec<Point4> = rects
        .iter()
        .enumerate()
        .map(|(t, r)| rect_to_point(r, t as u32))
        .collect();
    drop(rects);
    let chain = longest_chain::<u32>(&sort_points(&points));
    Ok(chain_witness(&chain, x))
}
