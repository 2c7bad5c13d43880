//! Thin dispatcher over the shape-avoid library. Every subcommand has a
//! text mode and a `--json` mode that agree on all numbers; counts are
//! printed as exact decimal integers.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 work budget
//! exceeded. Positions in output are 0-based, matching the library.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use shape_avoid::enumeration::{
    avoid_count_22, avoid_count_brute, avoid_count_hook, avoids_shape, cell_sum_bound,
    growth_series, knuth_cell, single_pattern_avoid_count, CountMethod, CountRecord, CountTarget,
    DEFAULT_BUDGET,
};
use shape_avoid::greene::{extract_chain_union, greene_prefix, Direction};
use shape_avoid::tableau::{rsk, shape_of};
use shape_avoid::verify::{run_all_suites, run_suite, SuiteReport, SUITES};
use shape_avoid::witness::{
    brute_force_find_shape, extract_hook, extract_shape, hook_counterexample,
};
use shape_avoid::{CountCache, Error, Partition, Permutation};

#[derive(Parser)]
#[command(name = "shape-avoid", version, about = "RSK-based shape avoidance of permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit one JSON object instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Worker count for parallel scans (default: available parallelism)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Maximum enumeration work units before an operation is refused
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Count cache file
    #[arg(long, global = true, default_value = "./shape-avoid-cache.json")]
    cache: PathBuf,

    /// Seed for randomized property sampling in `verify`
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the insertion and recording tableaux of a permutation
    Rsk {
        #[arg(long)]
        perm: String,
    },
    /// Print the shape of a permutation
    Shape {
        /// Permutation word, e.g. 6,5,1,2,7,8,4,3 (digit shorthand for n <= 9)
        perm: String,
    },
    /// Does the first shape contain the second?
    ContainsShape {
        outer: String,
        inner: String,
    },
    /// Does the first shape dominate the second (prefix sums)?
    Dominates {
        left: String,
        right: String,
    },
    /// Print the conjugate of a shape
    Conjugate {
        shape: String,
    },
    /// Print the chain-union invariant table; with --k, also a witness union
    Greene {
        #[arg(long)]
        perm: String,
        /// Extract a maximum union of this many chains
        #[arg(long)]
        k: Option<usize>,
        /// increasing | decreasing (for the --k witness)
        #[arg(long, default_value = "increasing")]
        direction: String,
    },
    /// List the Knuth cell of a shape
    Cell {
        #[arg(long)]
        shape: String,
    },
    /// Does a permutation avoid a shape (--shape) or a single pattern (--pattern)?
    Avoids {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Count avoiders in S_n by the chosen method
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        pattern: Option<String>,
        /// brute | hook | two-two | bound
        #[arg(long, default_value = "brute")]
        method: String,
    },
    /// Extract a subsequence witness of a given shape
    Witness {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        shape: String,
        /// Fall back to the exhaustive subset oracle
        #[arg(long)]
        oracle: bool,
    },
    /// The tightness fixture for hook extraction (m, k >= 4)
    Counterexample {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run named property suites (all by default)
    Verify {
        /// One of: fact-3.1, thm-4.1, thm-4.4, thm-5.1, thm-6.1, cor-6.4, cor-6.7, greene
        #[arg(long)]
        suite: Option<String>,
    },
    /// Growth roots count^(1/2n) of an avoidance series
    Growth {
        #[arg(long)]
        shape: String,
        /// Largest n in the series
        #[arg(long)]
        n: usize,
        /// brute | hook | two-two
        #[arg(long, default_value = "hook")]
        method: String,
        /// Emit csv (n,root) rows instead of text
        #[arg(long)]
        csv: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_err()
        {
            eprintln!("error: could not configure {jobs} workers");
            return ExitCode::from(1);
        }
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(output) => {
            if cli.json {
                let envelope = json!({
                    "schema": 1,
                    "command": output.command,
                    "inputs": output.inputs,
                    "result": output.result,
                    "method": output.method,
                    "cached": output.cached,
                    "elapsed_ms": start.elapsed().as_millis() as u64,
                });
                println!("{envelope}");
            } else {
                println!("{}", output.text.trim_end());
            }
            ExitCode::from(u8::from(!output.success))
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

struct Output {
    command: &'static str,
    inputs: Value,
    result: Value,
    method: Option<String>,
    cached: bool,
    text: String,
    /// false turns into exit code 1 (e.g. a failed verify suite)
    success: bool,
}

impl Output {
    fn new(command: &'static str, inputs: Value, result: Value, text: String) -> Self {
        Self {
            command,
            inputs,
            result,
            method: None,
            cached: false,
            text,
            success: true,
        }
    }
}

fn parse_perm(s: &str) -> Result<Permutation, Error> {
    s.parse()
}

fn parse_shape(s: &str) -> Result<Partition, Error> {
    s.parse()
}

fn parse_direction(s: &str) -> Result<Direction, Error> {
    match s {
        "increasing" | "inc" => Ok(Direction::Increasing),
        "decreasing" | "dec" => Ok(Direction::Decreasing),
        other => Err(Error::Precondition(format!(
            "direction must be increasing or decreasing, got {other:?}"
        ))),
    }
}

fn shape_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Rsk { perm } => {
            let pi = parse_perm(perm)?;
            let pair = rsk(&pi);
            let text = format!(
                "P:\n{}\nQ:\n{}\nshape: {}",
                pair.p(),
                pair.q(),
                pair.shape()
            );
            Ok(Output::new(
                "rsk",
                json!({ "perm": pi.word() }),
                json!({
                    "p": pair.p().rows(),
                    "q": pair.q().rows(),
                    "shape": pair.shape().parts(),
                }),
                text,
            ))
        }
        Command::Shape { perm } => {
            let pi = parse_perm(perm)?;
            let lambda = shape_of(&pi);
            Ok(Output::new(
                "shape",
                json!({ "perm": pi.word() }),
                shape_json(&lambda),
                lambda.to_string(),
            ))
        }
        Command::ContainsShape { outer, inner } => {
            let outer = parse_shape(outer)?;
            let inner = parse_shape(inner)?;
            let ans = outer.contains(&inner);
            Ok(Output::new(
                "contains-shape",
                json!({ "outer": outer.parts(), "inner": inner.parts() }),
                json!(ans),
                ans.to_string(),
            ))
        }
        Command::Dominates { left, right } => {
            let left = parse_shape(left)?;
            let right = parse_shape(right)?;
            let ans = left.dominates(&right);
            Ok(Output::new(
                "dominates",
                json!({ "left": left.parts(), "right": right.parts() }),
                json!(ans),
                ans.to_string(),
            ))
        }
        Command::Conjugate { shape } => {
            let shape = parse_shape(shape)?;
            let conj = shape.conjugate();
            Ok(Output::new(
                "conjugate",
                json!({ "shape": shape.parts() }),
                shape_json(&conj),
                conj.to_string(),
            ))
        }
        Command::Greene { perm, k, direction } => {
            let pi = parse_perm(perm)?;
            let dir = parse_direction(direction)?;
            let table = |d: Direction| -> Vec<usize> {
                (1..=pi.len()).map(|i| greene_prefix(&pi, i, d)).collect()
            };
            let inc = table(Direction::Increasing);
            let dec = table(Direction::Decreasing);
            let mut text = format!(
                "increasing: {}\ndecreasing: {}",
                join(&inc),
                join(&dec)
            );
            let mut result = json!({ "increasing": inc, "decreasing": dec });
            if let Some(k) = k {
                if *k < 1 || *k > pi.len().max(1) {
                    return Err(Error::Precondition(format!(
                        "k must be between 1 and {}",
                        pi.len().max(1)
                    )));
                }
                let union = extract_chain_union(&pi, *k, dir);
                union.validate(&pi)?;
                text.push_str(&format!(
                    "\nunion of {k} {dir} chains, total {}:",
                    union.total_size()
                ));
                for chain in union.chains() {
                    let values: Vec<usize> = chain.iter().map(|&p| pi.value(p)).collect();
                    text.push_str(&format!(
                        "\n  positions {} values {}",
                        join(chain),
                        join(&values)
                    ));
                }
                result["chains"] = json!(union.chains());
                result["total"] = json!(union.total_size());
            }
            Ok(Output::new(
                "greene",
                json!({ "perm": pi.word(), "k": k, "direction": dir }),
                result,
                text,
            ))
        }
        Command::Cell { shape } => {
            let mu = parse_shape(shape)?;
            let cell = knuth_cell(&mu, cli.budget)?;
            let words: Vec<String> = cell.iter().map(|p| p.to_string()).collect();
            Ok(Output::new(
                "cell",
                json!({ "shape": mu.parts() }),
                json!(cell.iter().map(|p| p.word().to_vec()).collect::<Vec<_>>()),
                words.join("\n"),
            ))
        }
        Command::Avoids {
            perm,
            shape,
            pattern,
        } => {
            let pi = parse_perm(perm)?;
            let (ans, inputs) = match (shape, pattern) {
                (Some(s), None) => {
                    let mu = parse_shape(s)?;
                    (
                        avoids_shape(&pi, &mu, cli.budget)?,
                        json!({ "perm": pi.word(), "shape": mu.parts() }),
                    )
                }
                (None, Some(p)) => {
                    let sigma = parse_perm(p)?;
                    (
                        !shape_avoid::contains_pattern(&pi, &sigma),
                        json!({ "perm": pi.word(), "pattern": sigma.word() }),
                    )
                }
                _ => {
                    return Err(Error::Precondition(
                        "give exactly one of --shape or --pattern".into(),
                    ))
                }
            };
            Ok(Output::new("avoids", inputs, json!(ans), ans.to_string()))
        }
        Command::Count {
            n,
            shape,
            pattern,
            method,
        } => run_count(cli, *n, shape.as_deref(), pattern.as_deref(), method),
        Command::Witness {
            perm,
            shape,
            oracle,
        } => {
            let pi = parse_perm(perm)?;
            let mu = parse_shape(shape)?;
            let inputs = json!({ "perm": pi.word(), "shape": mu.parts(), "oracle": oracle });
            // Constructive extraction when a theorem applies; otherwise the
            // exhaustive subset oracle (forced by --oracle).
            let constructive = if *oracle {
                None
            } else {
                let lambda = shape_of(&pi);
                let rect = Partition::rectangle(mu.part(0), mu.num_parts());
                if lambda.contains(&rect) {
                    Some(extract_shape(&pi, &mu)?)
                } else {
                    match mu.as_hook().map(|(m, k)| extract_hook(&pi, m, k)) {
                        Some(Ok(w)) => Some(w),
                        // hook hypotheses unmet: fall through to the oracle
                        Some(Err(Error::Precondition(_))) | None => None,
                        Some(Err(e)) => return Err(e),
                    }
                }
            };
            let w = match constructive {
                Some(w) => w,
                None => match brute_force_find_shape(&pi, &mu, cli.budget)? {
                    Some(w) => w,
                    None => {
                        return Ok(Output::new(
                            "witness",
                            inputs,
                            json!({ "present": false }),
                            "absent".into(),
                        ))
                    }
                },
            };
            let pattern = w.pattern(&pi)?;
            let text = format!(
                "positions: {}\npattern: {}\nshape: {}",
                join(w.positions()),
                pattern,
                w.shape()
            );
            Ok(Output::new(
                "witness",
                inputs,
                json!({
                    "present": true,
                    "positions": w.positions(),
                    "pattern": pattern.word(),
                    "shape": w.shape().parts(),
                }),
                text,
            ))
        }
        Command::Counterexample { m, k } => {
            let pi = hook_counterexample(*m, *k)?;
            let lambda = shape_of(&pi);
            Ok(Output::new(
                "counterexample",
                json!({ "m": m, "k": k }),
                json!({ "perm": pi.word(), "shape": lambda.parts() }),
                format!("{pi}\nshape: {lambda}"),
            ))
        }
        Command::Verify { suite } => {
            let reports: Vec<SuiteReport> = match suite {
                Some(name) => vec![run_suite(name, cli.seed, cli.budget)?],
                None => run_all_suites(cli.seed, cli.budget)?,
            };
            let mut text = String::new();
            let mut all_passed = true;
            for report in &reports {
                for check in &report.checks {
                    all_passed &= check.passed;
                    text.push_str(&format!(
                        "{} / {}: {} ({})\n",
                        report.suite,
                        check.name,
                        if check.passed { "pass" } else { "FAIL" },
                        check.detail
                    ));
                }
            }
            text.push_str(if all_passed { "all suites passed" } else { "FAILURES" });
            let mut out = Output::new(
                "verify",
                json!({ "suite": suite, "seed": cli.seed, "suites": SUITES }),
                serde_json::to_value(&reports).map_err(|e| Error::Cache(e.to_string()))?,
                text,
            );
            out.success = all_passed;
            Ok(out)
        }
        Command::Growth {
            shape,
            n,
            method,
            csv,
        } => {
            let mu = parse_shape(shape)?;
            let method: CountMethod = method.parse()?;
            let mut cache = CountCache::load(&cli.cache)?;
            let mut counts = Vec::new();
            let mut any_miss = false;
            for i in 1..=*n {
                let rec = match cached_count(&cache, i, &mu, method) {
                    Some(rec) => rec,
                    None => match count_shape(i, &mu, method, cli.budget) {
                        Ok(rec) => {
                            any_miss = true;
                            cache.insert(rec.clone());
                            rec
                        }
                        // formulas refuse below their regime: skip those n
                        Err(Error::Precondition(_)) => continue,
                        Err(e) => return Err(e),
                    },
                };
                counts.push(rec);
            }
            if any_miss {
                cache.save(&cli.cache)?;
            }
            let series = growth_series(&counts, &mu)?;
            let text = if *csv {
                let mut rows = vec!["n,root".to_string()];
                rows.extend(
                    series
                        .points
                        .iter()
                        .map(|p| format!("{},{:.6}", p.n, p.root)),
                );
                rows.join("\n")
            } else {
                let mut lines: Vec<String> = series
                    .points
                    .iter()
                    .map(|p| format!("n={} root={:.6}", p.n, p.root))
                    .collect();
                lines.push(format!(
                    "lower_ref={:.6} upper_ref={:.6}{}",
                    series.lower_ref,
                    series.upper_ref,
                    series
                        .hook_limit
                        .map(|l| format!(" hook_limit={l:.6}"))
                        .unwrap_or_default()
                ));
                lines.join("\n")
            };
            let mut out = Output::new(
                "growth",
                json!({ "shape": mu.parts(), "n": n, "csv": csv }),
                serde_json::to_value(&series).map_err(|e| Error::Cache(e.to_string()))?,
                text,
            );
            out.method = Some(method.as_str().to_string());
            out.cached = !any_miss;
            Ok(out)
        }
    }
}

/// Cache lookup that re-verifies the method tag of the stored record.
fn cached_count(
    cache: &CountCache,
    n: usize,
    mu: &Partition,
    method: CountMethod,
) -> Option<CountRecord> {
    let rec = cache.get(n, &CountTarget::Shape(mu.clone()), method)?;
    (rec.method == method).then(|| rec.clone())
}

fn count_shape(
    n: usize,
    mu: &Partition,
    method: CountMethod,
    budget: u64,
) -> Result<CountRecord, Error> {
    match method {
        CountMethod::Brute => avoid_count_brute(n, mu, budget),
        CountMethod::HookFormula => {
            let (m, k) = mu.as_hook().ok_or_else(|| {
                Error::Precondition(format!("{mu} is not a hook; the hook method needs one"))
            })?;
            avoid_count_hook(n, m, k)
        }
        CountMethod::TwoTwoFormula => {
            if mu.parts() != [2, 2] {
                return Err(Error::Precondition(format!(
                    "the two-two method only counts shape 2,2, got {mu}"
                )));
            }
            avoid_count_22(n)
        }
        CountMethod::CellSumBound => Ok(cell_sum_bound(n, mu)),
    }
}

fn run_count(
    cli: &Cli,
    n: usize,
    shape: Option<&str>,
    pattern: Option<&str>,
    method: &str,
) -> Result<Output, Error> {
    let method: CountMethod = method.parse()?;
    let mut cache = CountCache::load(&cli.cache)?;
    let (target, inputs) = match (shape, pattern) {
        (Some(s), None) => {
            let mu = parse_shape(s)?;
            (
                CountTarget::Shape(mu.clone()),
                json!({ "n": n, "shape": mu.parts(), "method": method.as_str() }),
            )
        }
        (None, Some(p)) => {
            let sigma = parse_perm(p)?;
            if method != CountMethod::Brute {
                return Err(Error::Precondition(
                    "single-pattern counts only support the brute method".into(),
                ));
            }
            (
                CountTarget::Pattern(sigma.clone()),
                json!({ "n": n, "pattern": sigma.word(), "method": method.as_str() }),
            )
        }
        _ => {
            return Err(Error::Precondition(
                "give exactly one of --shape or --pattern".into(),
            ))
        }
    };
    let (rec, cached) = match cache.get(n, &target, method) {
        Some(rec) if rec.method == method => (rec.clone(), true),
        _ => {
            let rec = match &target {
                CountTarget::Shape(mu) => count_shape(n, mu, method, cli.budget)?,
                CountTarget::Pattern(sigma) => single_pattern_avoid_count(n, sigma, cli.budget)?,
            };
            cache.insert(rec.clone());
            cache.save(&cli.cache)?;
            (rec, false)
        }
    };
    let mut out = Output::new(
        "count",
        inputs,
        json!({ "count": rec.count.to_string(), "exact": method.is_exact() }),
        rec.count.to_string(),
    );
    out.method = Some(method.as_str().to_string());
    out.cached = cached;
    Ok(out)
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
