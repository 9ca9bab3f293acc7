//! Batch evaluation of (input, algorithm) jobs for the stats command and
//! the benchmarks. Every job parses one input with one algorithm in both
//! directions and keeps the smaller phrase count. Jobs are independent, so
//! with the `parallel` feature they run on a rayon pool; the sequential
//! path produces identical rows in the same order.

use crate::parsers::{best_of_reverse, Algorithm};
use crate::text::Text;
use serde::Serialize;
use std::time::Instant;

/// One named input to evaluate.
#[derive(Debug, Clone)]
pub struct BatchInput {
    pub name: String,
    pub bytes: Vec<u8>,
}

impl BatchInput {
    pub fn new(name: impl Into<String>, bytes: Vec<u8>) -> BatchInput {
        BatchInput {
            name: name.into(),
            bytes,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Reverse,
}

impl Direction {
    pub fn name(&self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Reverse => "reverse",
        }
    }
}

/// One report row: the phrase count an algorithm reached on a file, with
/// the direction that won and the wall time spent (both directions).
/// `peak_memory_bytes` is the process-wide high-water mark when the
/// platform exposes one, and absent otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub file: String,
    pub n: usize,
    pub algo: Algorithm,
    pub direction: Direction,
    pub phrases: usize,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub peak_memory_bytes: Option<u64>,
}

/// The phrase-count ratio of two algorithms on one file.
#[derive(Debug, Clone, Serialize)]
pub struct RatioRow {
    pub file: String,
    pub lzrr_over_lz77: f64,
}

fn run_one(input: &BatchInput, algo: Algorithm) -> ReportRow {
    let text = Text::from(input.bytes.as_slice());
    let started = Instant::now();
    let best = best_of_reverse(algo, &text);
    let seconds = started.elapsed().as_secs_f64();
    ReportRow {
        file: input.name.clone(),
        n: text.len(),
        algo,
        direction: if best.reversed {
            Direction::Reverse
        } else {
            Direction::Forward
        },
        phrases: best.parse.phrase_count(),
        seconds,
        peak_memory_bytes: peak_rss_bytes(),
    }
}

/// Evaluate every (input, algorithm) pair, one row each, in input-major
/// order. Dispatches to the parallel pool when the feature is enabled.
pub fn run(inputs: &[BatchInput], algos: &[Algorithm]) -> Vec<ReportRow> {
    #[cfg(feature = "parallel")]
    {
        run_parallel(inputs, algos)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_serial(inputs, algos)
    }
}

pub fn run_serial(inputs: &[BatchInput], algos: &[Algorithm]) -> Vec<ReportRow> {
    jobs(inputs, algos)
        .map(|(input, algo)| run_one(input, algo))
        .collect()
}

#[cfg(feature = "parallel")]
pub fn run_parallel(inputs: &[BatchInput], algos: &[Algorithm]) -> Vec<ReportRow> {
    use rayon::prelude::*;
    let jobs: Vec<(&BatchInput, Algorithm)> = jobs(inputs, algos).collect();
    jobs.into_par_iter()
        .map(|(input, algo)| run_one(input, algo))
        .collect()
}

fn jobs<'a>(
    inputs: &'a [BatchInput],
    algos: &'a [Algorithm],
) -> impl Iterator<Item = (&'a BatchInput, Algorithm)> + 'a {
    inputs
        .iter()
        .flat_map(move |input| algos.iter().map(move |&algo| (input, algo)))
}

/// Per-file lzrr/lz77 phrase-count ratios, for the files where both rows
/// exist.
pub fn ratios(rows: &[ReportRow]) -> Vec<RatioRow> {
    let mut out = Vec::new();
    let mut seen: Vec<&str> = Vec::new();
    for row in rows {
        if seen.contains(&row.file.as_str()) {
            continue;
        }
        seen.push(&row.file);
        let of = |algo: Algorithm| {
            rows.iter()
                .find(|r| r.file == row.file && r.algo == algo)
                .map(|r| r.phrases)
        };
        if let (Some(lzrr), Some(lz77)) = (of(Algorithm::Lzrr), of(Algorithm::Lz77)) {
            if lz77 > 0 {
                out.push(RatioRow {
                    file: row.file.clone(),
                    lzrr_over_lz77: lzrr as f64 / lz77 as f64,
                });
            }
        }
    }
    out
}

/// Peak resident set size of this process in bytes, read from
/// /proc/self/status on Linux; None elsewhere.
pub fn peak_rss_bytes() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}
