//! Black-box tests of the command-line binary: exit-code contract, JSON
//! report schemas, byte-for-byte determinism, and cache plumbing.

use std::ffi::OsStr;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn binary() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gammakit"));
    // Keep runs hermetic: the ambient cache variable must not leak in.
    cmd.env_remove("GAMMAKIT_CACHE");
    cmd
}

fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<OsStr>,
{
    binary().args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is valid JSON")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn tmp_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn positive_check_exits_zero() {
    let out = run(["ribbon", "check", "1,1,2", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["verdict"], "positive");
    assert_eq!(report["canonical"], "1,1,2");
    assert_eq!(report["witness"], Value::Null);
}

#[test]
fn failed_check_exits_one() {
    let out = run(["ribbon", "check", "1,2", "--json"]);
    assert_eq!(exit_code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["verdict"], "negative");
    assert_eq!(report["witness"]["partition"], "3");
    assert_eq!(report["witness"]["coefficient"], "-2/3");
}

#[test]
fn usage_and_guard_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["ribbon", "check", "1,x"],            // unparsable composition
        &["ribbon", "check", "0,2"],            // zero part
        &["ribbon", "expand", "17"],            // over the size cap
        &["frobnicate"],                        // unknown subcommand
        &["conjecture", "verify", "--n", "15"], // over the sweep cap
        &["conjecture", "verify", "--n", "0"],  // empty sweep
        &["oracle", "compare", "2,2,2,2,2,2"],  // 12 boxes, cap is 10
        &["oracle", "compare", "1,2", "--vars", "9"], // cross-check cap
        &["oracle", "compare", "2,1/3"],        // inner not contained
        &["basis", "check", "--family", "b3", "--n", "4"], // unknown family
        &["chromatic", "x", "n=2;edges=0-5"],   // endpoint out of range
        &["chromatic", "y", "star:0"],          // empty star
    ];
    for args in cases {
        let out = run(*args);
        assert_eq!(exit_code(&out), 2, "args: {args:?}");
        assert!(!out.stderr.is_empty(), "args: {args:?} should explain on stderr");
    }
}

#[test]
fn help_and_version_exit_zero() {
    let help = run(["--help"]);
    assert_eq!(exit_code(&help), 0);
    assert!(String::from_utf8_lossy(&help.stdout).contains("oracle"));

    let version = run(["--version"]);
    assert_eq!(exit_code(&version), 0);
    assert!(String::from_utf8_lossy(&version.stdout).contains("gammakit"));
}

#[test]
fn expand_reports_both_expansions() {
    let out = run(["ribbon", "expand", "2,1", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["ribbon"], "2,1");
    assert_eq!(report["q_expansion"], serde_json::json!([["3", "-1"], ["2,1", "1"]]));
    assert_eq!(
        report["p_expansion"],
        serde_json::json!([["3", "-2/3"], ["1,1,1", "8/3"]])
    );
}

#[test]
fn conjecture_report_schema() {
    let out = run(["conjecture", "verify", "--n", "6", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    for key in ["n", "match", "p_positive", "predicted", "missing", "extra", "elapsed_ms"] {
        assert!(report.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(report["n"], 6);
    assert_eq!(report["match"], true);
    assert_eq!(report["p_positive"], serde_json::json!(["1,1,1,1,1,1", "1,1,1,3"]));
    assert_eq!(report["missing"], serde_json::json!([]));
    assert_eq!(report["extra"], serde_json::json!([]));
}

#[test]
fn identity_sweep_reports_every_family() {
    let out = run(["identities", "--max-n", "4", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["all_ok"], true);
    let names: Vec<&str> =
        report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        [
            "alternating-convolution",
            "orbit-invariance",
            "determinant-route",
            "product-rule",
            "square-rule",
            "corner-identities",
            "staircase-convolution",
        ]
    );
}

#[test]
fn chromatic_reports_membership_without_failing() {
    // Reports always exit 0; membership is data, not a verdict.
    let star = run(["chromatic", "y", "star:4", "--json"]);
    assert_eq!(exit_code(&star), 0);
    let report = stdout_json(&star);
    assert_eq!(report["function"], "Y");
    assert_eq!(report["in_odd_subalgebra"], true);
    assert_eq!(report["witness"], Value::Null);

    let path = run(["chromatic", "x", "path:3", "--json"]);
    assert_eq!(exit_code(&path), 0);
    let report = stdout_json(&path);
    assert_eq!(report["in_odd_subalgebra"], false);
    assert_eq!(report["witness"]["partition"], "2,1");
}

#[test]
fn oracle_compare_accepts_both_shape_grammars() {
    // The shifted skew shape equal to the ribbon with rows (1,1,2).
    let shape = run(["oracle", "compare", "4,3,2/3,2", "--json"]);
    assert_eq!(exit_code(&shape), 0);
    let report = stdout_json(&shape);
    assert_eq!(report["ribbon"], "1,1,2");
    assert_eq!(report["routes_agree"], true);

    // The same ribbon given as a composition, with the enumeration check.
    let comp = run(["oracle", "compare", "1,1,2", "--vars", "4", "--json"]);
    assert_eq!(exit_code(&comp), 0);
    let report = stdout_json(&comp);
    assert_eq!(report["vars"], 4);
    assert_eq!(report["routes_agree"], true);
    assert_eq!(report["tableau_expansion"], serde_json::json!([["1,1,1,1", "2"]]));
}

#[test]
fn oracle_flags_non_ribbon_shapes() {
    let out = run(["oracle", "compare", "3,2/", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["ribbon"], Value::Null);
    assert_eq!(report["consistent"], true);
    assert_eq!(report["coefficient_sum"], "0");
    assert_eq!(report["negative_witness"]["partition"], "3,1,1");
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["triangle", "classify", "--max-n", "8", "--json"],
        vec!["identities", "--max-n", "5", "--json"],
        vec!["ribbon", "expand", "1,3,1,1,2", "--json"],
        vec!["conjecture", "disconnected", "--max-n", "6", "--json"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(exit_code(&first), 0, "args: {args:?}");
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn cache_flag_round_trips() {
    let path = tmp_path("cache_flag.json");
    let _ = std::fs::remove_file(&path);

    let out = binary()
        .args(["ribbon", "expand", "6", "--cache"])
        .arg(&path)
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 0);
    assert!(path.exists(), "cache file written on exit");

    // A second run loads the same file and produces identical output.
    let again = binary()
        .args(["ribbon", "expand", "6", "--cache"])
        .arg(&path)
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&again), 0);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn cache_env_var_overrides_flag() {
    let env_path = tmp_path("cache_env.json");
    let flag_path = tmp_path("cache_ignored.json");
    let _ = std::fs::remove_file(&env_path);
    let _ = std::fs::remove_file(&flag_path);

    let out = binary()
        .env("GAMMAKIT_CACHE", &env_path)
        .args(["ribbon", "expand", "5", "--cache"])
        .arg(&flag_path)
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 0);
    assert!(env_path.exists(), "environment path wins");
    assert!(!flag_path.exists(), "flag path is ignored when the variable is set");
}

#[test]
fn corrupt_cache_is_a_usage_error() {
    let path = tmp_path("cache_corrupt.json");
    std::fs::write(&path, b"not json").unwrap();

    let out = binary()
        .args(["ribbon", "expand", "3", "--cache"])
        .arg(&path)
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 2);
    assert!(!out.stderr.is_empty());
}
