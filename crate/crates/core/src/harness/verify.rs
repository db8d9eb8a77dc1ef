//! Seeded property sweeps, one named check per identity or congruence.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::search::SEARCH_MAX_MAGNITUDE;
use super::{chunk_rng, random_assignment, run_chunked};
use crate::analysis::{
    check_lemma_2_4, check_lemma_2_5, check_lemma_3_3, check_lemma_3_4, check_lemma_3_4_algebra,
    check_lemma_3_5, check_remark_2_3, Outcome,
};
use crate::error::{Error, Result};
use crate::evaluators::{
    big_f, d4, d4x2, eval_factored, eval_oracle, eval_via_d4x2, frobenius_eval, frobenius_parts,
    group_det, transform, Assignment, Representation,
};
use crate::group::{GroupElement, GroupId};
use crate::witness::WitnessFamily;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Identities,
    Congruences,
    Representations,
    Witnesses,
    All,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    /// Random trials per sampled check.
    pub trials: u64,
    pub seed: u64,
    pub parallelism: usize,
    /// Sampled assignments are drawn from `[-random_bound, random_bound]^16`.
    pub random_bound: i64,
    /// The exhaustive congruence sweep covers `d` in `[-d_box_radius, d_box_radius]^8`.
    pub d_box_radius: i64,
    /// Witness families are checked for `|m| <= witness_range`.
    pub witness_range: i64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            suite: Suite::All,
            trials: 1000,
            seed: 0,
            parallelism: std::thread::available_parallelism().map_or(1, |n| n.get()),
            random_bound: 9,
            d_box_radius: 2,
            witness_range: 1000,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub checked: u64,
    /// Inputs satisfying the check's hypothesis.
    pub applicable: u64,
    pub passed: u64,
    /// First failing input in enumeration order.
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            applicable: 0,
            passed: 0,
            counterexample: None,
        }
    }

    pub fn ok(&self) -> bool {
        self.counterexample.is_none() && self.passed == self.applicable
    }

    fn record(&mut self, outcome: Outcome, input: impl FnOnce() -> String) {
        self.checked += 1;
        match outcome {
            Outcome::NotApplicable => {}
            Outcome::Holds => {
                self.applicable += 1;
                self.passed += 1;
            }
            Outcome::Violated => {
                self.applicable += 1;
                if self.counterexample.is_none() {
                    self.counterexample = Some(input());
                }
            }
        }
    }

    fn record_bool(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.record(
            if ok {
                Outcome::Holds
            } else {
                Outcome::Violated
            },
            input,
        )
    }

    fn merge(mut self, other: Self) -> Self {
        self.checked += other.checked;
        self.applicable += other.applicable;
        self.passed += other.passed;
        self.counterexample = self.counterexample.or(other.counterexample);
        self
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: u64,
    pub checks: Vec<CheckResult>,
    pub runtime_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn merge_all(a: Vec<CheckResult>, b: Vec<CheckResult>) -> Vec<CheckResult> {
    a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
}

/// Runs `per_item` on every index of `0..total`, with one result per check
/// name in `names`.
fn sweep<F>(
    names: &[String],
    total: u64,
    parallelism: usize,
    per_item: F,
) -> Result<Vec<CheckResult>>
where
    F: Fn(u64, &mut [CheckResult]) + Sync + Send,
{
    let fresh = || names.iter().map(CheckResult::new).collect::<Vec<_>>();
    let out = run_chunked(
        total,
        parallelism,
        |_, range| {
            let mut acc = fresh();
            for i in range {
                per_item(i, &mut acc);
            }
            acc
        },
        merge_all,
    )?;
    Ok(out.unwrap_or_else(fresh))
}

fn names(list: &[&str], suffix: &str) -> Vec<String> {
    list.iter().map(|n| format!("{n}{suffix}")).collect()
}

/// Three-way agreement plus the two closed-form splittings.
pub fn identities(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let bound = cfg.random_bound;

    let three_way = names(
        &["three_way_agreement", "lemma_2_2_split", "block_dets_m0_m1"],
        "",
    );
    out.extend(sweep_sampled(&three_way, cfg, cfg.seed, |rng, acc| {
        let a = &random_assignment(rng, -bound, bound);
        let oracle = eval_oracle(a);
        let big = a.to_big();
        let factored = eval_factored(&big).product;
        let frob = frobenius_eval(&big);
        let three =
            matches!(&frob, Ok(z) if z.re == oracle && z.im.is_zero()) && factored == oracle;
        acc[0].record_bool(three, || a.to_string());
        acc[1].record_bool(eval_via_d4x2(&big) == oracle, || a.to_string());
        let parts = frobenius_parts(a);
        let f = big_f(&transform(a).d);
        let dets = parts.block_dets[0].re == f.m0
            && parts.block_dets[0].im == 0
            && parts.block_dets[1].re == f.m1
            && parts.block_dets[1].im == 0;
        acc[2].record_bool(dets, || a.to_string());
    })?);

    let mut circ = CheckResult::new("d4_vs_circulant");
    for x0 in -3i64..=3 {
        for x1 in -3i64..=3 {
            for x2 in -3i64..=3 {
                for x3 in -3i64..=3 {
                    let x = [x0, x1, x2, x3];
                    let ok = BigInt::from(d4(&x)) == group_det(GroupId::C4, &x);
                    circ.record_bool(ok, || format!("{x:?}"));
                }
            }
        }
    }
    out.push(circ);

    out.extend(sweep_sampled(
        &names(&["d4x2_vs_oracle"], ""),
        cfg,
        cfg.seed ^ 0xd4d4,
        |rng, acc| {
            let y: [i64; 8] = std::array::from_fn(|_| rng.gen_range(-5..=5));
            acc[0].record_bool(
                BigInt::from(d4x2(&y)) == group_det(GroupId::C4xC2, &y),
                || format!("{y:?}"),
            );
        },
    )?);
    Ok(out)
}

/// `cfg.trials` sampled items; each chunk draws sequentially from its own
/// stream.
fn sweep_sampled<F>(
    names: &[String],
    cfg: &VerifyConfig,
    seed: u64,
    check: F,
) -> Result<Vec<CheckResult>>
where
    F: Fn(&mut ChaCha8Rng, &mut [CheckResult]) + Sync + Send,
{
    let fresh = || names.iter().map(CheckResult::new).collect::<Vec<_>>();
    let out = run_chunked(
        cfg.trials,
        cfg.parallelism,
        |chunk, range| {
            let mut acc = fresh();
            let mut rng = chunk_rng(seed, chunk);
            for _ in range {
                check(&mut rng, &mut acc);
            }
            acc
        },
        merge_all,
    )?;
    Ok(out.unwrap_or_else(fresh))
}

const CONGRUENCES: [&str; 7] = [
    "remark_2_3",
    "lemma_2_4",
    "lemma_2_5",
    "lemma_3_3",
    "lemma_3_4",
    "lemma_3_4_algebra",
    "lemma_3_5",
];

fn congruence_checks(a: &Assignment<i128>, acc: &mut [CheckResult]) {
    let show = || {
        let v = transform(a);
        format!("a={a} b={:?} c={:?} d={:?}", v.b, v.c, v.d)
    };
    acc[0].record_bool(check_remark_2_3(a), show);
    acc[1].record_bool(check_lemma_2_4(a), show);
    acc[2].record_bool(check_lemma_2_5(a), show);
    acc[3].record(check_lemma_3_3(a), show);
    acc[4].record(check_lemma_3_4(a), show);
    acc[5].record(check_lemma_3_4_algebra(a), show);
    acc[6].record(check_lemma_3_5(a), show);
}

/// The parity and mod-16 / mod-8 congruences on random assignments and on
/// the exhaustive `d`-box with `a_{i+8} = 0`.
pub fn congruences(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let bound = cfg.random_bound;
    let mut out = sweep_sampled(
        &names(&CONGRUENCES, " (random)"),
        cfg,
        cfg.seed,
        |rng, acc| {
            congruence_checks(
                &random_assignment(rng, -bound, bound).map(|&v| i128::from(v)),
                acc,
            )
        },
    )?;
    let r = cfg.d_box_radius;
    let width = (2 * r + 1) as u64;
    let total = width.pow(8);
    out.extend(sweep(
        &names(&CONGRUENCES, " (d-box)"),
        total,
        cfg.parallelism,
        |i, acc| {
            let mut rest = i;
            let mut a = [0i128; 16];
            for slot in a[..8].iter_mut().rev() {
                *slot = i128::from((rest % width) as i64 - r);
                rest /= width;
            }
            congruence_checks(&Assignment(a), acc);
        },
    )?);
    Ok(out)
}

/// Homomorphism on all 256 pairs for each of the ten representations, and
/// the degree count.
pub fn representations() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for rep in Representation::all() {
        let mut c = CheckResult::new(format!("homomorphism_phi_{}", rep.index()));
        for x in GroupElement::all() {
            for y in GroupElement::all() {
                let ok = rep.image(x.multiply(y)) == rep.image(x).mul(&rep.image(y));
                c.record_bool(ok, || format!("x={x} y={y}"));
            }
        }
        out.push(c);
    }
    let mut deg = CheckResult::new("degree_square_sum_16");
    let sum: usize = Representation::all().map(|r| r.degree().pow(2)).sum();
    deg.record_bool(sum == 16, || format!("sum of squared degrees = {sum}"));
    out.push(deg);
    out
}

/// Each family at every `|m| <= witness_range`, through all three evaluators.
pub fn witnesses(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let range = cfg.witness_range;
    let per_family = (2 * range + 1) as u64;
    let list: Vec<String> = WitnessFamily::ALL
        .iter()
        .map(|f| format!("witness_family_{}", f.id()))
        .collect();
    sweep(&list, per_family * 5, cfg.parallelism, |i, acc| {
        let family = WitnessFamily::ALL[(i / per_family) as usize];
        let m = BigInt::from((i % per_family) as i64 - range);
        let a = family.assignment(&m);
        let want = family.value(&m);
        let frob = frobenius_eval(&a);
        let ok = eval_factored(&a).product == want
            && eval_oracle(&a) == want
            && matches!(frob, Ok(z) if z.re == want);
        acc[family as usize].record_bool(ok, || format!("family {} m={m}: {a}", family.id()));
    })
}

pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport> {
    if !(0..=SEARCH_MAX_MAGNITUDE).contains(&cfg.random_bound)
        || !(0..=SEARCH_MAX_MAGNITUDE).contains(&cfg.d_box_radius)
    {
        return Err(Error::Config(format!(
            "sampling bounds must lie in [0, {SEARCH_MAX_MAGNITUDE}] to keep i128 products exact"
        )));
    }
    if cfg.witness_range < 0 {
        return Err(Error::Config("witness range must be nonnegative".into()));
    }
    let start = Instant::now();
    let mut checks = Vec::new();
    let all = cfg.suite == Suite::All;
    if all || cfg.suite == Suite::Identities {
        checks.extend(identities(cfg)?);
    }
    if all || cfg.suite == Suite::Representations {
        checks.extend(representations());
    }
    if all || cfg.suite == Suite::Congruences {
        checks.extend(congruences(cfg)?);
    }
    if all || cfg.suite == Suite::Witnesses {
        checks.extend(witnesses(cfg)?);
    }
    Ok(VerifyReport {
        suite: cfg.suite,
        seed: cfg.seed,
        trials: cfg.trials,
        checks,
        runtime_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representations_pass() {
        let checks = representations();
        assert_eq!(checks.len(), 11);
        assert!(checks.iter().all(CheckResult::ok));
        assert_eq!(checks[0].checked, 256);
    }

    #[test]
    fn failures_keep_first_counterexample() {
        let mut c = CheckResult::new("x");
        c.record_bool(true, || "a".into());
        c.record_bool(false, || "b".into());
        c.record_bool(false, || "c".into());
        assert_eq!(c.counterexample.as_deref(), Some("b"));
        assert!(!c.ok());
        assert_eq!((c.checked, c.applicable, c.passed), (3, 3, 1));
    }
}
