//! Verification campaigns and the box search behind the CLI.
//!
//! Work is cut into fixed-size contiguous chunks of the enumeration order.
//! Chunk boundaries and per-chunk random streams depend only on the seed
//! and the total, never on the worker count, so reports are identical for
//! any `parallelism`.

pub mod search;
pub mod verify;

use std::ops::Range;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::evaluators::Assignment;

pub use search::{run_search, SearchConfig, SearchMode, SearchReport, Violation};
pub use verify::{run_verify, CheckResult, Suite, VerifyConfig, VerifyReport};

/// Items per chunk.
pub const CHUNK: u64 = 1 << 16;

/// Random stream for one chunk: the seed picks the key, the chunk index
/// picks the stream.
pub fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

pub fn random_assignment<R: Rng>(rng: &mut R, low: i64, high: i64) -> Assignment<i64> {
    Assignment(std::array::from_fn(|_| rng.gen_range(low..=high)))
}

/// Runs `work` over every chunk of `0..total` on `parallelism` threads and
/// folds the results in chunk order with `merge`.
pub fn run_chunked<A, W, M>(total: u64, parallelism: usize, work: W, merge: M) -> Result<Option<A>>
where
    A: Send,
    W: Fn(u64, Range<u64>) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let chunks = total.div_ceil(CHUNK);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    Ok(pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|c| work(c, c * CHUNK..((c + 1) * CHUNK).min(total)))
            .reduce_with(&merge)
    }))
}

/// JSON number carrying an arbitrary-precision integer exactly.
pub fn big_json(v: &BigInt) -> serde_json::Value {
    let n: serde_json::Number = v
        .to_string()
        .parse()
        .expect("decimal integers are JSON numbers");
    serde_json::Value::Number(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunked_runner_is_order_preserving() {
        for threads in [1, 3, 8] {
            let out = run_chunked(
                5 * CHUNK + 7,
                threads,
                |c, r| vec![(c, r.start, r.end)],
                |mut a, b| {
                    a.extend(b);
                    a
                },
            )
            .unwrap()
            .unwrap();
            assert_eq!(out.len(), 6);
            assert_eq!(out[5], (5, 5 * CHUNK, 5 * CHUNK + 7));
            assert!(out.windows(2).all(|w| w[0].2 == w[1].1));
        }
        assert!(run_chunked(0, 2, |_, _| 1, |a, b| a + b).unwrap().is_none());
    }

    #[test]
    fn big_json_is_exact() {
        let v: BigInt = "-123456789012345678901234567890".parse().unwrap();
        assert_eq!(big_json(&v).to_string(), "-123456789012345678901234567890");
    }
}
