//! Reproducible inputs and a small timing harness for comparing solvers.
//!
//! Strings come from a ChaCha8 stream seeded with [`GenSpec::seed`]; X is
//! drawn first, then Y, so a spec always reproduces the same pair.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::chain::{geometric_lcps, GeomCaps};
use crate::dp::{dp_lcps, DEFAULT_MAX_DP_CELLS};
use crate::error::LcpsError;
use crate::matches::build_match_set;
use crate::oracle::brute_force_lcps;
use crate::seq::{validate_witness, CpsResult, Seq};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub m: usize,
    pub alphabet_size: u16,
    pub seed: u64,
}

/// The `t`-th symbol of a generated alphabet: `'a'` upward, wrapping past 255.
pub fn alphabet_symbol(t: u16) -> u8 {
    ((u16::from(b'a') + t) % 256) as u8
}

/// Two independent uniform strings over the first `alphabet_size` symbols.
///
/// Panics if `alphabet_size` is 0 or above 256.
pub fn generate(spec: &GenSpec) -> (Seq, Seq) {
    assert!(
        (1..=256).contains(&spec.alphabet_size),
        "alphabet size must be in 1..=256"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut draw = |len: usize| -> Seq {
        (0..len)
            .map(|_| alphabet_symbol(rng.gen_range(0..spec.alphabet_size)))
            .collect::<Vec<u8>>()
            .into()
    };
    let x = draw(spec.n);
    let y = draw(spec.m);
    (x, y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Dp,
    Geom,
    Oracle,
}

impl Algo {
    pub const ALL: [Algo; 3] = [Algo::Dp, Algo::Geom, Algo::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Dp => "dp",
            Algo::Geom => "geom",
            Algo::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dp" => Ok(Algo::Dp),
            "geom" => Ok(Algo::Geom),
            "oracle" => Ok(Algo::Oracle),
            other => Err(format!("unknown algorithm {other:?}")),
        }
    }
}

/// Caps handed to every solver run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverCaps {
    pub max_dp_cells: u64,
    pub geom: GeomCaps,
}

impl Default for SolverCaps {
    fn default() -> Self {
        SolverCaps {
            max_dp_cells: DEFAULT_MAX_DP_CELLS,
            geom: GeomCaps::default(),
        }
    }
}

pub fn run_algo(algo: Algo, x: &Seq, y: &Seq, caps: &SolverCaps) -> Result<CpsResult, LcpsError> {
    match algo {
        Algo::Dp => dp_lcps(x, y, caps.max_dp_cells),
        Algo::Geom => geometric_lcps(x, y, caps.geom),
        Algo::Oracle => brute_force_lcps(x, y),
    }
}

/// Runs `algo` `reps` times (at least once) and returns the last result with
/// the median wall time.
pub fn time_algo(
    algo: Algo,
    x: &Seq,
    y: &Seq,
    caps: &SolverCaps,
    reps: usize,
) -> Result<(CpsResult, Duration), LcpsError> {
    let mut times = Vec::with_capacity(reps.max(1));
    let mut last = None;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let r = run_algo(algo, x, y, caps)?;
        times.push(start.elapsed());
        last = Some(r);
    }
    Ok((last.expect("at least one repetition"), median(&mut times)))
}

pub fn median(times: &mut [Duration]) -> Duration {
    times.sort_unstable();
    match times.len() {
        0 => Duration::ZERO,
        n if n % 2 == 1 => times[n / 2],
        n => (times[n / 2 - 1] + times[n / 2]) / 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Ok,
    CapacityExceeded,
    InputTooLarge,
}

impl RowStatus {
    fn from_error(e: &LcpsError) -> Self {
        match e {
            LcpsError::InputTooLarge { .. } => RowStatus::InputTooLarge,
            _ => RowStatus::CapacityExceeded,
        }
    }
}

/// One report line. Serializes to the JSON-lines row format.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub s: u16,
    pub seed: u64,
    pub algo: Algo,
    pub r: u64,
    pub length: Option<usize>,
    pub median_ms: Option<f64>,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BenchError {
    #[error("length mismatch on n={n} m={m} s={s} seed={seed}: {lengths}")]
    Mismatch {
        n: usize,
        m: usize,
        s: u16,
        seed: u64,
        lengths: String,
    },
    #[error("{algo} produced an invalid witness on n={n} m={m} s={s} seed={seed}")]
    InvalidWitness {
        algo: Algo,
        n: usize,
        m: usize,
        s: u16,
        seed: u64,
    },
}

/// Times every algorithm on every spec. Capacity problems become row
/// statuses; a length disagreement or bad witness aborts the suite.
pub fn run_suite(
    specs: &[GenSpec],
    algos: &[Algo],
    reps: usize,
    caps: &SolverCaps,
) -> Result<Vec<BenchRow>, BenchError> {
    let mut report = Vec::with_capacity(specs.len() * algos.len());
    for spec in specs {
        let (x, y) = generate(spec);
        let r = build_match_set(&x, &y).r();
        let rows: Vec<BenchRow> = algos
            .iter()
            .map(|&algo| {
                let mut row = BenchRow {
                    n: spec.n,
                    m: spec.m,
                    s: spec.alphabet_size,
                    seed: spec.seed,
                    algo,
                    r,
                    length: None,
                    median_ms: None,
                    status: RowStatus::Ok,
                };
                match time_algo(algo, &x, &y, caps, reps) {
                    Ok((res, t)) => {
                        if !validate_witness(&res, &x, &y) {
                            return Err(BenchError::InvalidWitness {
                                algo,
                                n: spec.n,
                                m: spec.m,
                                s: spec.alphabet_size,
                                seed: spec.seed,
                            });
                        }
                        row.length = Some(res.len());
                        row.median_ms = Some(t.as_secs_f64() * 1e3);
                    }
                    Err(e) => row.status = RowStatus::from_error(&e),
                }
                Ok(row)
            })
            .collect::<Result<_, _>>()?;

        let mut lengths = rows.iter().filter_map(|r| r.length);
        if let Some(first) = lengths.next() {
            if lengths.any(|l| l != first) {
                let lengths = rows
                    .iter()
                    .map(|r| format!("{}={:?}", r.algo, r.length))
                    .collect::<Vec<_>>()
                    .join(" ");
                return Err(BenchError::Mismatch {
                    n: spec.n,
                    m: spec.m,
                    s: spec.alphabet_size,
                    seed: spec.seed,
                    lengths,
                });
            }
        }
        report.extend(rows);
    }
    Ok(report)
}
