use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use groupdet::harness::{
    big_json, run_search, run_verify, SearchConfig, SearchMode, Suite, VerifyConfig,
};
use groupdet::{
    classify, eval_factored, eval_oracle, frobenius_eval, witness, BigAssignment, BigInt,
    Classification, FactorBreakdown,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "groupdet",
    version,
    about = "Integer group determinants of C2^2 x| C4"
)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the determinant of a 16-value assignment a_0..a_15.
    Eval {
        /// Comma-separated values, e.g. 2,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1
        #[arg(allow_hyphen_values = true, required_unless_present = "input")]
        values: Option<String>,
        /// Read the assignment from a file (one line, `#` comments allowed).
        #[arg(long, conflicts_with = "values")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Decide whether an integer is a group determinant.
    Classify {
        #[arg(allow_hyphen_values = true)]
        n: BigInt,
    },
    /// Print a verified assignment whose determinant is the given integer.
    Witness {
        #[arg(allow_hyphen_values = true)]
        n: BigInt,
    },
    /// Run seeded property sweeps.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        parallelism: Option<usize>,
    },
    /// Sweep an integer box and check every determinant for membership.
    Search {
        #[arg(long, value_enum, default_value_t = SearchMode::Random)]
        mode: SearchMode,
        #[arg(long, default_value_t = -9, allow_hyphen_values = true)]
        box_low: i64,
        #[arg(long, default_value_t = 9, allow_hyphen_values = true)]
        box_high: i64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long)]
        parallelism: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Factored,
    Frobenius,
    All,
}

fn default_parallelism() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn emit(json: bool, value: &Value, text: impl FnOnce()) {
    if json {
        println!("{value}");
    } else {
        text();
    }
}

fn breakdown_json(b: &FactorBreakdown<BigInt>) -> Value {
    json!({
        "d4b": big_json(&b.d4b),
        "d4c": big_json(&b.d4c),
        "m0": big_json(&b.m0),
        "m1": big_json(&b.m1),
        "F": big_json(&b.big_f),
    })
}

fn classification_json(c: &Classification<BigInt>) -> Value {
    json!({
        "achievable": c.achievable,
        "family": c.family.map(|f| f.id()),
        "m": c.m.as_ref().map(big_json),
        "reason": c.reason.code(),
    })
}

fn read_assignment(
    values: Option<String>,
    input: Option<PathBuf>,
) -> Result<BigAssignment, String> {
    let line = match (values, input) {
        (Some(v), _) => v,
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .collect::<Vec<_>>()
                .join(",")
        }
        (None, None) => return Err("no assignment given".into()),
    };
    line.parse().map_err(|e: groupdet::Error| e.to_string())
}

/// Oracle value, factored breakdown and Frobenius real part.
fn evaluate_all(a: &BigAssignment) -> (BigInt, FactorBreakdown<BigInt>, Result<BigInt, String>) {
    let oracle = eval_oracle(a);
    let factored = eval_factored(a);
    let frob = frobenius_eval(a).map(|z| z.re).map_err(|e| e.to_string());
    (oracle, factored, frob)
}

fn cmd_eval(json: bool, a: BigAssignment, method: Method) -> ExitCode {
    let inputs: Vec<Value> = a.values().iter().map(big_json).collect();
    match method {
        Method::Oracle => {
            let v = eval_oracle(&a);
            emit(
                json,
                &json!({"input": inputs, "method": "oracle", "value": big_json(&v)}),
                || println!("{v}"),
            );
        }
        Method::Factored => {
            let b = eval_factored(&a);
            let out = json!({
                "input": inputs, "method": "factored",
                "value": big_json(&b.product), "breakdown": breakdown_json(&b),
            });
            emit(json, &out, || {
                println!("{}", b.product);
                println!(
                    "D4(b)={} D4(c)={} m0={} m1={} F={}",
                    b.d4b, b.d4c, b.m0, b.m1, b.big_f
                );
            });
        }
        Method::Frobenius => match frobenius_eval(&a) {
            Ok(z) => {
                let out = json!({"input": inputs, "method": "frobenius", "value": big_json(&z.re)});
                emit(json, &out, || println!("{}", z.re));
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_FAIL);
            }
        },
        Method::All => {
            let (oracle, factored, frob) = evaluate_all(&a);
            let agree = frob.as_ref().is_ok_and(|f| *f == oracle) && factored.product == oracle;
            let out = json!({
                "input": inputs, "method": "all", "value": big_json(&oracle),
                "values": {
                    "oracle": big_json(&oracle),
                    "factored": big_json(&factored.product),
                    "frobenius": frob.as_ref().map_or(Value::Null, big_json),
                },
                "breakdown": breakdown_json(&factored),
                "agree": agree,
            });
            if agree {
                emit(json, &out, || {
                    println!("oracle     {oracle}");
                    println!("factored   {}", factored.product);
                    println!("frobenius  {oracle}");
                });
            } else {
                if json {
                    println!("{out}");
                }
                eprintln!("error: evaluation methods disagree");
                eprintln!("  assignment {a}");
                eprintln!("  oracle     {oracle}");
                eprintln!("  factored   {:?}", factored);
                eprintln!("  frobenius  {frob:?}");
                return ExitCode::from(EXIT_FAIL);
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_classify(json: bool, n: BigInt) -> ExitCode {
    let c = classify(&n);
    let out = json!({"n": big_json(&n), "classification": classification_json(&c)});
    emit(json, &out, || match (&c.family, &c.m) {
        (Some(f), Some(m)) => println!(
            "{n}: achievable ({}), family {} [{}], m = {m}",
            c.reason.code(),
            f.id(),
            f.value_formula()
        ),
        _ => println!("{n}: not achievable ({})", c.reason.code()),
    });
    if c.achievable {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_witness(json: bool, n: BigInt) -> ExitCode {
    let Some(w) = witness(&n) else {
        let c = classify(&n);
        if json {
            println!(
                "{}",
                json!({"n": big_json(&n), "classification": classification_json(&c)})
            );
        }
        eprintln!("{n} is not a group determinant ({})", c.reason.code());
        return ExitCode::from(EXIT_FAIL);
    };
    let (oracle, factored, frob) = evaluate_all(&w.assignment);
    let verified = oracle == n && factored.product == n && frob.as_ref().is_ok_and(|f| *f == n);
    if !verified {
        eprintln!("error: refusing to print unverified witness for {n}");
        eprintln!(
            "  family {} m={} assignment {}",
            w.family.id(),
            w.m,
            w.assignment
        );
        eprintln!(
            "  oracle {oracle} factored {} frobenius {frob:?}",
            factored.product
        );
        return ExitCode::from(EXIT_FAIL);
    }
    let out = json!({
        "n": big_json(&n),
        "family": w.family.id(),
        "m": big_json(&w.m),
        "assignment": w.assignment.values().iter().map(big_json).collect::<Vec<_>>(),
        "value": big_json(&oracle),
        "breakdown": breakdown_json(&factored),
        "verified": true,
    });
    emit(json, &out, || {
        println!("{}", w.assignment);
        println!(
            "family {} [{}], m = {}; verified by oracle, factored and frobenius",
            w.family.id(),
            w.family.value_formula(),
            w.m
        );
    });
    ExitCode::SUCCESS
}

fn cmd_verify(json: bool, cfg: VerifyConfig) -> ExitCode {
    let report = match run_verify(&cfg) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    emit(
        json,
        &serde_json::to_value(&report).expect("report serializes"),
        || {
            for c in &report.checks {
                let tag = if c.ok() { "PASS" } else { "FAIL" };
                println!(
                    "{tag} {:<32} {}/{} (checked {})",
                    c.name, c.passed, c.applicable, c.checked
                );
                if let Some(x) = &c.counterexample {
                    println!("     counterexample: {x}");
                }
            }
            println!("{} checks in {} ms", report.checks.len(), report.runtime_ms);
        },
    );
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_search(json: bool, cfg: SearchConfig) -> ExitCode {
    let report = match run_search(&cfg) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    emit(
        json,
        &serde_json::to_value(&report).expect("report serializes"),
        || {
            println!("evaluated            {}", report.evaluated);
            println!("distinct values      {}", report.distinct_values);
            println!("membership violations {}", report.violation_count);
            if let (Some(lo), Some(hi)) = (report.min_value, report.max_value) {
                println!("range                [{lo}, {hi}]");
            }
            println!("small odd values     {:?}", report.achieved_small_odd);
            println!("runtime              {} ms", report.runtime_ms);
            for v in &report.membership_violations {
                println!(
                    "VIOLATION #{} value {} at {:?}",
                    v.index, v.value, v.assignment
                );
            }
        },
    );
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval {
            values,
            input,
            method,
        } => match read_assignment(values, input) {
            Ok(a) => cmd_eval(cli.json, a, method),
            Err(e) => usage(e),
        },
        Command::Classify { n } => cmd_classify(cli.json, n),
        Command::Witness { n } => cmd_witness(cli.json, n),
        Command::Verify {
            suite,
            trials,
            seed,
            parallelism,
        } => cmd_verify(
            cli.json,
            VerifyConfig {
                suite,
                trials,
                seed,
                parallelism: parallelism.unwrap_or_else(default_parallelism),
                ..VerifyConfig::default()
            },
        ),
        Command::Search {
            mode,
            box_low,
            box_high,
            samples,
            parallelism,
            seed,
        } => cmd_search(
            cli.json,
            SearchConfig {
                box_low,
                box_high,
                mode,
                samples,
                parallelism: parallelism.unwrap_or_else(default_parallelism),
                seed,
            },
        ),
    }
}
