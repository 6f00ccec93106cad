//! Longest common palindromic subsequence (LCPS) of two byte strings.
//!
//! Two independent solvers are provided:
//!
//! * [`dp_lcps`]: a dynamic program over all pairs of substrings, `O(n²m²)`
//!   time and cells.
//! * [`geometric_lcps`]: pairs of equal-symbol matches become grid rectangles,
//!   nested rectangles become dominating 4-D points, and the LCPS is the
//!   heaviest chain of points. Fast when matches are sparse.
//!
//! [`brute_force_lcps`] is an exhaustive reference for small inputs. All
//! positions in results are 1-based.
//!
//! ```
//! use lcps_core::{dp_lcps, geometric_lcps, GeomCaps, Seq, DEFAULT_MAX_DP_CELLS};
//!
//! let (x, y) = (Seq::from("aab"), Seq::from("aba"));
//! let r = dp_lcps(&x, &y, DEFAULT_MAX_DP_CELLS).unwrap();
//! assert_eq!(r.z, Seq::from("aa"));
//! assert_eq!(r.x_indices, vec![1, 2]);
//! assert_eq!(geometric_lcps(&x, &y, GeomCaps::default()).unwrap().len(), 2);
//! ```

pub mod bench;
pub mod chain;
pub mod dominance;
pub mod dp;
pub mod error;
pub mod geometry;
pub mod matches;
pub mod oracle;
pub mod scalar;
pub mod seq;

pub use chain::{geometric_lcps, longest_chain, sort_points, GeomCaps, SortedPoints};
pub use dp::{dp_lcps, fill_table, traceback, DEFAULT_MAX_DP_CELLS};
pub use error::{LcpsError, Result};
pub use geometry::{
    decompose_cps, enumerate_rectangles, is_chained, is_nested, rect_to_point, Point4, Rect,
    DEFAULT_MAX_RECTS,
};
pub use matches::{build_match_set, build_match_set_capped, Match, MatchSet, DEFAULT_MAX_MATCHES};
pub use oracle::{brute_force_lcps, MAX_ORACLE_LEN};
pub use scalar::Length;
pub use seq::{is_palindrome, is_subsequence, validate_witness, CpsResult, Seq, Symbol};

/// DP table with 16-bit cells.
pub type DpTable = dp::DpTableOf<u16>;
/// Dominance index with 32-bit chain values.
pub type DominanceMaxIndex<P> = dominance::DominanceMaxIndexOf<u32, P>;
pub type ChainNode = chain::ChainNodeOf<u32>;
pub type Chain = chain::ChainOf<u32>;
