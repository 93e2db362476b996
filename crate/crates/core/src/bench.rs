//! Naive recurrence versus fast doubling timings.

use std::time::{Duration, Instant};

use crate::error::ParamError;
use crate::rational::Rational;
use crate::sequence::{fast_double, naive_fib_lucas};

pub const DEFAULT_BENCH_NS: [u64; 3] = [1 << 10, 1 << 14, 1 << 18];

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: u64,
    pub naive: Duration,
    pub fast: Duration,
    /// Whether both methods returned the same `(𝓕_n, 𝓛_n)`.
    pub equal: bool,
}

/// Times both methods at `n` and compares their results.
pub fn bench_fib_lucas(p: &Rational, q: &Rational, n: u64) -> Result<BenchRow, ParamError> {
    let start = Instant::now();
    let naive = naive_fib_lucas(p, q, n)?;
    let naive_time = start.elapsed();
    let start = Instant::now();
    let fast = fast_double(p, q, n)?;
    let fast_time = start.elapsed();
    Ok(BenchRow {
        n,
        naive: naive_time,
        fast: fast_time,
        equal: naive == fast,
    })
}
