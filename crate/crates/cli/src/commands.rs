use std::io::{self, Write};
use std::time::Instant;

use lcps_core::bench::{run_algo, run_suite, Algo, GenSpec, SolverCaps};
use lcps_core::dp::table_cells;
use lcps_core::geometry::rectangle_count;
use lcps_core::{build_match_set, validate_witness, CpsResult, LcpsError, MatchSet, Seq};
use serde::Serialize;

use crate::args::{AlgoChoice, BenchArgs, Format, InputArgs, SolveArgs};
use crate::input::read_input;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;
pub const EXIT_DISAGREE: i32 = 5;

fn load(input: &InputArgs) -> Result<(Seq, Seq), i32> {
    let read = |src| {
        read_input(&src, input.fasta).map_err(|e| {
            eprintln!("lcps: {e}");
            EXIT_IO
        })
    };
    Ok((read(input.x_source())?, read(input.y_source())?))
}

/// Rectangle count scaled by the dominance index's per-point cost (one
/// staircase per pair of Fenwick levels).
pub fn geometric_work(ms: &MatchSet, n: usize, m: usize) -> f64 {
    let levels = |len: usize| (len as f64 + 1.0).log2().ceil().max(1.0);
    rectangle_count(ms) as f64 * levels(n) * levels(m)
}

/// Algorithms to try for `choice`, in order. `auto` prefers the DP only when
/// its table fits and is smaller than the estimated geometric work; the other
/// solver is kept as a fallback.
pub fn plan(choice: AlgoChoice, x: &Seq, y: &Seq, ms: &MatchSet, caps: &SolverCaps) -> Vec<Algo> {
    if let Some(algo) = choice.fixed() {
        return vec![algo];
    }
    match table_cells(x.len(), y.len()) {
        Some(cells) if cells <= caps.max_dp_cells && geometric_work(ms, x.len(), y.len()) > cells as f64 => {
            vec![Algo::Dp, Algo::Geom]
        }
        _ => vec![Algo::Geom, Algo::Dp],
    }
}

#[derive(Serialize)]
struct SolveJson<'a> {
    x_len: usize,
    y_len: usize,
    algorithm: Algo,
    lcps_length: usize,
    lcps: String,
    x_indices: &'a [usize],
    y_indices: &'a [usize],
    matches: u64,
    elapsed_ms: f64,
}

fn write_text(out: &mut impl Write, r: &CpsResult) -> io::Result<()> {
    writeln!(out, "{}", r.len())?;
    if !r.is_empty() {
        out.write_all(&r.z)?;
        writeln!(out)?;
    }
    Ok(())
}

pub fn solve_command(args: &SolveArgs) -> i32 {
    let (x, y) = match load(&args.input) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let caps = args.caps.caps();
    let ms = build_match_set(&x, &y);

    let start = Instant::now();
    let mut solved = None;
    for algo in plan(args.algo, &x, &y, &ms, &caps) {
        match run_algo(algo, &x, &y, &caps) {
            Ok(r) => {
                solved = Some((algo, r));
                break;
            }
            Err(e) => eprintln!("lcps: {algo}: {e}"),
        }
    }
    let elapsed = start.elapsed();
    let Some((algo, r)) = solved else {
        return EXIT_CAPACITY;
    };
    debug_assert!(validate_witness(&r, &x, &y));

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written = match args.format {
        Format::Text => write_text(&mut out, &r),
        Format::Json => {
            let json = SolveJson {
                x_len: x.len(),
                y_len: y.len(),
                algorithm: algo,
                lcps_length: r.len(),
                lcps: r.z.to_string_lossy(),
                x_indices: &r.x_indices,
                y_indices: &r.y_indices,
                matches: ms.r(),
                elapsed_ms: elapsed.as_secs_f64() * 1e3,
            };
            serde_json::to_writer(&mut out, &json).map_err(io::Error::from).and_then(|()| writeln!(out))
        }
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("lcps: {e}");
            EXIT_IO
        }
    }
}

/// Outcome of one algorithm inside `compare`.
#[derive(Debug, Clone, Serialize)]
pub struct AlgoRun {
    pub algorithm: Algo,
    pub status: &'static str,
    pub lcps_length: Option<usize>,
    pub lcps: Option<String>,
    pub x_indices: Option<Vec<usize>>,
    pub y_indices: Option<Vec<usize>>,
    pub valid: Option<bool>,
    pub elapsed_ms: Option<f64>,
}

impl AlgoRun {
    fn new(algorithm: Algo, x: &Seq, y: &Seq, caps: &SolverCaps) -> Self {
        let start = Instant::now();
        let outcome = run_algo(algorithm, x, y, caps);
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(r) => AlgoRun {
                algorithm,
                status: "ok",
                lcps_length: Some(r.len()),
                lcps: Some(r.z.to_string_lossy()),
                valid: Some(validate_witness(&r, x, y)),
                x_indices: Some(r.x_indices),
                y_indices: Some(r.y_indices),
                elapsed_ms: Some(elapsed_ms),
            },
            Err(e) => AlgoRun {
                algorithm,
                status: match e {
                    LcpsError::InputTooLarge { .. } => "input_too_large",
                    _ => "capacity_exceeded",
                },
                lcps_length: None,
                lcps: None,
                x_indices: None,
                y_indices: None,
                valid: None,
                elapsed_ms: None,
            },
        }
    }

    fn ran(&self) -> bool {
        self.lcps_length.is_some()
    }
}

/// True iff every completed run has a valid witness and all lengths match.
pub fn check_agreement(runs: &[AlgoRun]) -> bool {
    let mut done = runs.iter().filter(|r| r.ran());
    let Some(first) = done.next() else {
        return true;
    };
    first.valid == Some(true)
        && done.all(|r| r.valid == Some(true) && r.lcps_length == first.lcps_length)
}

#[derive(Serialize)]
struct CompareJson<'a> {
    x_len: usize,
    y_len: usize,
    agree: bool,
    results: &'a [AlgoRun],
}

pub fn compare_command(args: &SolveArgs) -> i32 {
    let (x, y) = match load(&args.input) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let caps = args.caps.caps();
    let runs: Vec<AlgoRun> = Algo::ALL.iter().map(|&a| AlgoRun::new(a, &x, &y, &caps)).collect();
    if !runs.iter().any(AlgoRun::ran) {
        eprintln!("lcps: no algorithm could run within the configured caps");
        return EXIT_CAPACITY;
    }
    let agree = check_agreement(&runs);

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written = match args.format {
        Format::Json => {
            let json = CompareJson {
                x_len: x.len(),
                y_len: y.len(),
                agree,
                results: &runs,
            };
            serde_json::to_writer(&mut out, &json).map_err(io::Error::from).and_then(|()| writeln!(out))
        }
        Format::Text => write_compare_text(&mut out, &runs, agree),
    };
    if let Err(e) = written {
        eprintln!("lcps: {e}");
        return EXIT_IO;
    }
    if agree {
        EXIT_OK
    } else {
        eprintln!("lcps: algorithms disagree");
        EXIT_DISAGREE
    }
}

fn write_compare_text(out: &mut impl Write, runs: &[AlgoRun], agree: bool) -> io::Result<()> {
    for r in runs {
        match (r.lcps_length, &r.lcps) {
            (Some(len), Some(z)) => writeln!(
                out,
                "{}\t{}\t{}\t{}\t{:.3}ms",
                r.algorithm,
                len,
                z,
                if r.valid == Some(true) { "valid" } else { "INVALID" },
                r.elapsed_ms.unwrap_or_default()
            )?,
            _ => writeln!(out, "{}\tskipped\t{}", r.algorithm, r.status)?,
        }
    }
    writeln!(out, "{}", if agree { "agree" } else { "DISAGREE" })
}

#[derive(Serialize)]
struct SigmaJson {
    sigma: String,
    byte: u8,
    x_occ: usize,
    y_occ: usize,
    r_sigma: u64,
}

#[derive(Serialize)]
struct MatchesJson {
    x_len: usize,
    y_len: usize,
    r: u64,
    per_sigma: Vec<SigmaJson>,
}

pub fn matches_command(input: &InputArgs) -> i32 {
    let (x, y) = match load(input) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let ms = build_match_set(&x, &y);
    let json = MatchesJson {
        x_len: x.len(),
        y_len: y.len(),
        r: ms.r(),
        per_sigma: ms
            .per_sigma
            .iter()
            .map(|s| SigmaJson {
                sigma: String::from_utf8_lossy(&[s.sigma]).into_owned(),
                byte: s.sigma,
                x_occ: s.x_occ.len(),
                y_occ: s.y_occ.len(),
                r_sigma: s.r_sigma(),
            })
            .collect(),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match serde_json::to_writer(&mut out, &json).map_err(io::Error::from).and_then(|()| writeln!(out)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("lcps: {e}");
            EXIT_IO
        }
    }
}

pub fn bench_command(args: &BenchArgs) -> i32 {
    let specs: Vec<GenSpec> = args
        .n_list
        .iter()
        .flat_map(|&n| {
            args.s_list.iter().map(move |&s| GenSpec {
                n,
                m: n,
                alphabet_size: s,
                seed: args.seed,
            })
        })
        .collect();
    let algos = args.algo.fixed().map_or(Algo::ALL.to_vec(), |a| vec![a]);
    let rows = match run_suite(&specs, &algos, args.reps as usize, &args.caps.caps()) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("lcps: {e}");
            return EXIT_DISAGREE;
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for row in &rows {
        let line = serde_json::to_writer(&mut out, row).map_err(io::Error::from).and_then(|()| writeln!(out));
        if let Err(e) = line {
            eprintln!("lcps: {e}");
            return EXIT_IO;
        }
    }
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(algo: Algo, len: usize, valid: bool) -> AlgoRun {
        AlgoRun {
            algorithm: algo,
            status: "ok",
            lcps_length: Some(len),
            lcps: Some("x".repeat(len)),
            x_indices: Some((1..=len).collect()),
            y_indices: Some((1..=len).collect()),
            valid: Some(valid),
            elapsed_ms: Some(0.0),
        }
    }

    fn skipped(algo: Algo) -> AlgoRun {
        AlgoRun {
            algorithm: algo,
            status: "capacity_exceeded",
            lcps_length: None,
            lcps: None,
            x_indices: None,
            y_indices: None,
            valid: None,
            elapsed_ms: None,
        }
    }

    #[test]
    fn agreement() {
        assert!(check_agreement(&[run(Algo::Dp, 2, true), run(Algo::Geom, 2, true)]));
        assert!(check_agreement(&[run(Algo::Dp, 2, true), skipped(Algo::Geom)]));
        assert!(check_agreement(&[]));
    }

    #[test]
    fn injected_faults() {
        assert!(!check_agreement(&[run(Algo::Dp, 2, true), run(Algo::Geom, 3, true)]));
        assert!(!check_agreement(&[run(Algo::Dp, 2, true), run(Algo::Geom, 2, false)]));
        assert!(!check_agreement(&[run(Algo::Dp, 2, false)]));
    }

    #[test]
    fn auto_plan() {
        let caps = SolverCaps::default();
        // Unary inputs: many rectangles, tiny table.
        let (x, y) = (Seq::from("aaaaaa"), Seq::from("aaaaaa"));
        let ms = build_match_set(&x, &y);
        assert_eq!(plan(AlgoChoice::Auto, &x, &y, &ms, &caps), vec![Algo::Dp, Algo::Geom]);
        // Distinct symbols: few rectangles.
        let (x, y) = (Seq::from("abcdef"), Seq::from("fedcba"));
        let ms = build_match_set(&x, &y);
        assert_eq!(plan(AlgoChoice::Auto, &x, &y, &ms, &caps), vec![Algo::Geom, Algo::Dp]);
        assert_eq!(plan(AlgoChoice::Oracle, &x, &y, &ms, &caps), vec![Algo::Oracle]);
    }
}
