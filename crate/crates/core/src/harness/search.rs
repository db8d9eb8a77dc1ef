//! Exhaustive or sampled sweeps of an integer box, asserting that every
//! determinant is `1 (mod 16)` or a multiple of `2^14`.

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use serde::Serialize;

use super::{chunk_rng, random_assignment, run_chunked};
use crate::analysis::check_membership;
use crate::error::{Error, Result};
use crate::evaluators::{eval_factored_checked, Assignment};

/// Largest `|box bound|` accepted. With every `|a_i| <= B` the product is
/// below `2^46 B^16`, which stays inside `i128` for `B <= 32`.
pub const SEARCH_MAX_MAGNITUDE: i64 = 32;

/// Odd values with `|v|` up to this bound are listed in the report.
pub const SMALL_ODD_LIMIT: i128 = 1 << 14;

/// At most this many violating assignments are kept in the report.
pub const MAX_REPORTED_VIOLATIONS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub box_low: i64,
    pub box_high: i64,
    pub mode: SearchMode,
    pub samples: u64,
    pub parallelism: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            box_low: -9,
            box_high: 9,
            mode: SearchMode::Random,
            samples: 1_000_000,
            parallelism: std::thread::available_parallelism().map_or(1, |n| n.get()),
            seed: 0,
        }
    }
}

impl SearchConfig {
    pub fn exhaustive(box_low: i64, box_high: i64, parallelism: usize) -> Self {
        Self {
            box_low,
            box_high,
            mode: SearchMode::Exhaustive,
            parallelism,
            ..Self::default()
        }
    }

    pub fn width(&self) -> u64 {
        (self.box_high - self.box_low + 1) as u64
    }

    /// Number of assignments the run will evaluate.
    pub fn total(&self) -> Result<u64> {
        self.validate()?;
        match self.mode {
            SearchMode::Random => Ok(self.samples),
            SearchMode::Exhaustive => self.width().checked_pow(16).ok_or_else(|| {
                Error::Config(format!(
                    "{}^16 assignments do not fit a u64 count",
                    self.width()
                ))
            }),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.box_low > self.box_high {
            return Err(Error::Config(format!(
                "box_low {} exceeds box_high {}",
                self.box_low, self.box_high
            )));
        }
        if self.box_low.abs() > SEARCH_MAX_MAGNITUDE || self.box_high.abs() > SEARCH_MAX_MAGNITUDE {
            return Err(Error::Config(format!(
                "box bounds must lie in [-{SEARCH_MAX_MAGNITUDE}, {SEARCH_MAX_MAGNITUDE}]"
            )));
        }
        if self.parallelism == 0 {
            return Err(Error::Config("parallelism must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    /// Position in the enumeration (or sample) order.
    pub index: u64,
    pub assignment: Vec<i64>,
    pub value: i128,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SearchReport {
    pub mode: SearchMode,
    pub box_low: i64,
    pub box_high: i64,
    pub seed: u64,
    pub evaluated: u64,
    pub distinct_values: u64,
    pub violation_count: u64,
    pub membership_violations: Vec<Violation>,
    pub min_value: Option<i128>,
    pub max_value: Option<i128>,
    pub achieved_small_odd: Vec<i128>,
    pub runtime_ms: u128,
}

impl SearchReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// The report without its wall-clock field, for reproducibility checks.
    pub fn deterministic(&self) -> Self {
        Self {
            runtime_ms: 0,
            ..self.clone()
        }
    }
}

#[derive(Default)]
struct Acc {
    evaluated: u64,
    values: HashSet<i128>,
    violation_count: u64,
    violations: Vec<Violation>,
    min: Option<i128>,
    max: Option<i128>,
    small_odd: BTreeSet<i128>,
}

impl Acc {
    fn record(&mut self, index: u64, a: &Assignment<i128>) {
        let value = eval_factored_checked(a)
            .expect("validated box keeps the product inside i128")
            .product;
        self.evaluated += 1;
        if self.values.insert(value) {
            self.min = Some(self.min.map_or(value, |m| m.min(value)));
            self.max = Some(self.max.map_or(value, |m| m.max(value)));
            if value & 1 == 1 && value.abs() <= SMALL_ODD_LIMIT {
                self.small_odd.insert(value);
            }
        }
        if !check_membership(&value) {
            self.violation_count += 1;
            if self.violations.len() < MAX_REPORTED_VIOLATIONS {
                self.violations.push(Violation {
                    index,
                    assignment: a.0.iter().map(|&v| v as i64).collect(),
                    value,
                });
            }
        }
    }

    // `self` covers earlier indices than `other`.
    fn merge(mut self, other: Self) -> Self {
        self.evaluated += other.evaluated;
        self.values.extend(other.values);
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
        self.violations.truncate(MAX_REPORTED_VIOLATIONS);
        self.min = match (self.min, other.min) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.max = match (self.max, other.max) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self.small_odd.extend(other.small_odd);
        self
    }
}

/// Mixed-radix odometer over `[low, high]^16`; entry 15 varies fastest.
struct Odometer {
    low: i128,
    high: i128,
    current: Assignment<i128>,
}

impl Odometer {
    fn at(index: u64, low: i64, high: i64) -> Self {
        let width = (high - low + 1) as u64;
        let mut rest = index;
        let mut values = [0i128; 16];
        for slot in values.iter_mut().rev() {
            *slot = i128::from(low) + (rest % width) as i128;
            rest /= width;
        }
        Self {
            low: low.into(),
            high: high.into(),
            current: Assignment(values),
        }
    }

    fn advance(&mut self) {
        for slot in self.current.0.iter_mut().rev() {
            if *slot < self.high {
                *slot += 1;
                return;
            }
            *slot = self.low;
        }
    }
}

pub fn run_search(config: &SearchConfig) -> Result<SearchReport> {
    let total = config.total()?;
    let start = Instant::now();
    let (low, high, seed) = (config.box_low, config.box_high, config.seed);
    let work = |chunk: u64, range: std::ops::Range<u64>| {
        let mut acc = Acc::default();
        match config.mode {
            SearchMode::Exhaustive => {
                let mut odo = Odometer::at(range.start, low, high);
                for index in range {
                    acc.record(index, &odo.current);
                    odo.advance();
                }
            }
            SearchMode::Random => {
                let mut rng = chunk_rng(seed, chunk);
                for index in range {
                    let a = random_assignment(&mut rng, low, high).map(|&v| i128::from(v));
                    acc.record(index, &a);
                }
            }
        }
        acc
    };
    let acc = run_chunked(total, config.parallelism, work, Acc::merge)?.unwrap_or_default();
    Ok(SearchReport {
        mode: config.mode,
        box_low: low,
        box_high: high,
        seed,
        evaluated: acc.evaluated,
        distinct_values: acc.values.len() as u64,
        violation_count: acc.violation_count,
        membership_violations: acc.violations,
        min_value: acc.min,
        max_value: acc.max,
        achieved_small_odd: acc.small_odd.into_iter().collect(),
        runtime_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_matches_index_decoding() {
        let mut odo = Odometer::at(0, -1, 1);
        for i in 0..500u64 {
            assert_eq!(odo.current, Odometer::at(i, -1, 1).current);
            odo.advance();
        }
    }

    #[test]
    fn rejects_bad_configs() {
        let mut c = SearchConfig::exhaustive(1, 0, 1);
        assert!(c.validate().is_err());
        c = SearchConfig::exhaustive(-33, 0, 1);
        assert!(c.validate().is_err());
        c = SearchConfig::exhaustive(-8, 8, 1);
        assert!(c.total().is_err());
        c = SearchConfig::exhaustive(0, 1, 0);
        assert!(c.validate().is_err());
    }

    #[test]
    fn extreme_corner_fits_i128() {
        let a = Assignment(std::array::from_fn(
            |i| if i % 2 == 0 { 32i128 } else { -32 },
        ));
        assert!(eval_factored_checked(&a).is_ok());
    }

    #[test]
    fn small_random_run() {
        let config = SearchConfig {
            samples: 10_000,
            parallelism: 2,
            ..SearchConfig::default()
        };
        let report = run_search(&config).unwrap();
        assert_eq!(report.evaluated, 10_000);
        assert!(report.passed());
        assert!(report
            .achieved_small_odd
            .iter()
            .all(|v| v.rem_euclid(16) == 1));
    }
}
