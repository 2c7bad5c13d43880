use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_shape-avoid"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim_end().to_string()
}

fn run_cached(args: &[&str], cache: &Path) -> Output {
    let mut all: Vec<&str> = args.to_vec();
    let cache = cache.to_str().unwrap();
    all.extend(["--cache", cache]);
    bin().args(&all).output().expect("binary runs")
}

#[test]
fn shape_and_rsk() {
    let out = run(&["shape", "65127843"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4,2,1,1");

    let out = run(&["rsk", "--perm", "25314"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("shape: 3,1,1"));
}

#[test]
fn partition_orders() {
    assert_eq!(stdout(&run(&["contains-shape", "4,2,1,1", "2,2"])), "true");
    assert_eq!(stdout(&run(&["contains-shape", "2,2", "3"])), "false");
    assert_eq!(stdout(&run(&["dominates", "3,1", "2,2"])), "true");
    assert_eq!(stdout(&run(&["dominates", "2,2", "3,1"])), "false");
    assert_eq!(stdout(&run(&["conjugate", "4,2,1,1"])), "4,2,1,1");
    assert_eq!(stdout(&run(&["conjugate", "3,1"])), "2,1,1");
}

#[test]
fn greene_cell_avoids() {
    let out = run(&["greene", "--perm", "65127843", "--k", "2"]);
    let text = stdout(&out);
    assert!(text.contains("increasing: 4,6,7,8,8,8,8,8"));
    assert!(text.contains("total 6"));

    let out = run(&["cell", "--shape", "2,2"]);
    assert_eq!(stdout(&out), "2,1,4,3\n2,4,1,3\n3,1,4,2\n3,4,1,2");

    assert_eq!(
        stdout(&run(&["avoids", "--perm", "65127843", "--shape", "4,1,1,1"])),
        "true"
    );
    assert_eq!(
        stdout(&run(&["avoids", "--perm", "25314", "--pattern", "2413"])),
        "false"
    );
}

#[test]
fn count_methods_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("counts.json");
    let args = ["count", "--shape", "2,2", "--n", "6", "--method", "brute"];

    let cold = run_cached(&args, &cache);
    assert!(cold.status.success());
    assert_eq!(stdout(&cold), "232");
    assert!(cache.is_file());

    // warm run: same number, cached flag flips
    let mut jargs: Vec<&str> = args.to_vec();
    jargs.push("--json");
    let warm = run_cached(&jargs, &cache);
    let v: serde_json::Value = serde_json::from_str(&stdout(&warm)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "count");
    assert_eq!(v["result"]["count"], "232");
    assert_eq!(v["method"], "brute");
    assert_eq!(v["cached"], true);
    assert!(v["elapsed_ms"].is_u64());

    // exact formula agrees with brute; the cell-sum bound sits above it
    for (method, expect) in [("two-two", "232"), ("bound", "252")] {
        let out = run_cached(
            &["count", "--shape", "2,2", "--n", "6", "--method", method],
            &cache,
        );
        assert!(out.status.success(), "{method}");
        assert_eq!(stdout(&out), expect, "{method}");
    }
    for (method, expect) in [("hook", "2"), ("brute", "2")] {
        let out = run_cached(
            &["count", "--shape", "2,1", "--n", "6", "--method", method],
            &cache,
        );
        assert!(out.status.success(), "{method}");
        assert_eq!(stdout(&out), expect, "{method}");
    }
    // the hook method refuses non-hook shapes
    let out = run_cached(
        &["count", "--shape", "2,2", "--n", "6", "--method", "hook"],
        &cache,
    );
    assert_eq!(out.status.code(), Some(1));

    let out = run_cached(
        &["count", "--pattern", "123", "--n", "5", "--method", "brute"],
        &cache,
    );
    assert_eq!(stdout(&out), "42");
}

#[test]
fn witness_and_counterexample() {
    // constructive route
    let out = run(&["witness", "--perm", "65127843", "--shape", "2,2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["present"], true);
    assert_eq!(v["result"]["shape"], serde_json::json!([2, 2]));

    // oracle fallback finds a witness the theorems cannot reach
    let out = run(&["witness", "--perm", "25314", "--shape", "2,2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("shape: 2,2"));

    // absent
    let out = run(&["witness", "--perm", "25314", "--shape", "3,3"]);
    assert_eq!(stdout(&out), "absent");

    let out = run(&["counterexample", "--m", "4", "--k", "4"]);
    let text = stdout(&out);
    assert!(text.contains("6,5,1,2,7,8,4,3"));
    assert!(text.contains("shape: 4,2,1,1"));
}

#[test]
fn verify_suite_runs() {
    let out = run(&["verify", "--suite", "cor-6.7", "--seed", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pass"));
    assert!(text.ends_with("all suites passed"));

    let out = run(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn growth_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("counts.json");
    let out = run_cached(
        &["growth", "--shape", "2,2", "--n", "20", "--method", "two-two", "--csv"],
        &cache,
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,root"));
    assert_eq!(text.lines().count(), 21);

    let out = run_cached(
        &["growth", "--shape", "2,2", "--n", "20", "--method", "two-two", "--json"],
        &cache,
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["lower_ref"], 1.0);
    assert_eq!(v["result"]["upper_ref"], 2.0);
    assert_eq!(v["result"]["points"].as_array().unwrap().len(), 20);
    assert_eq!(v["cached"], true);
}

#[test]
fn exit_codes() {
    // domain error
    let out = run(&["shape", "1,1,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));

    // usage error
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    // budget exceeded
    let dir = tempfile::tempdir().unwrap();
    let out = run_cached(
        &["count", "--shape", "2,2", "--n", "12", "--budget", "100"],
        &dir.path().join("counts.json"),
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&run(&["shape", "3,1,4,2"]));
    let out = run(&["shape", "3,1,4,2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let parts: Vec<String> = v["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    assert_eq!(parts.join(","), text);
}
