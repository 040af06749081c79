//! End-to-end tests of the commlie binary: documented outputs, exit codes,
//! and byte-level determinism of the emitted payloads.

use std::process::{Command, Output};

use commlie::report::RunOutput;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commlie"))
        .args(args)
        .env("COMMLIE_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn count_documented_examples() {
    let out = run(&["count", "--family", "gl", "--kind", "pairs", "--n", "2", "--q", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "88\n");

    let out = run(&["count", "--family", "gl", "--kind", "pairs", "--n", "2", "--symbolic"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "q^6 + q^5 - q^3\n");

    let out = run(&["count", "--family", "sp", "--kind", "nilpairs", "--n", "1", "--q", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "33\n");
}

#[test]
fn json_payload_round_trips_and_repeats_identically() {
    let args = [
        "count", "--family", "u", "--kind", "pairs", "--n", "0..3", "--q", "3", "--format", "json",
    ];
    let first = run(&args);
    assert!(first.status.success());
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "payload bytes must repeat");

    let parsed: RunOutput = serde_json::from_str(&stdout(&first)).expect("valid schema");
    assert_eq!(parsed.results.len(), 4);
    let re_emitted = parsed.to_json();
    assert_eq!(re_emitted, stdout(&first), "parse/emit round-trip");
}

#[test]
fn csv_format() {
    let out = run(&[
        "count", "--family", "gl", "--kind", "nilpairs", "--n", "1..2", "--q", "2", "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "family,kind,n,q,backend,value\ngl,nilpotent_pairs,1,2,gen_fn,1\ngl,nilpotent_pairs,2,2,gen_fn,10\n"
    );
}

#[test]
fn oracle_backend_exports_reports() {
    let out = run(&[
        "count", "--family", "gl", "--kind", "pairs", "--n", "2", "--q", "2", "--backend",
        "oracle", "--format", "json",
    ]);
    assert!(out.status.success());
    let parsed: RunOutput = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.results[0].value.to_string(), "88");
    assert_eq!(parsed.results[0].backend.to_string(), "oracle");
}

#[test]
fn verify_passes_and_is_thread_count_independent() {
    let args = ["verify", "--family", "u", "--max-n", "2", "--q", "3"];
    let single = run_with_threads(&args, "1");
    assert!(single.status.success());
    assert!(stdout(&single).contains("0 failed"));
    let several = run_with_threads(&args, "4");
    assert_eq!(single.stdout, several.stdout);

    let out = run(&["verify", "--family", "gl", "--max-n", "3", "--q", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failed"));

    let out = run(&["verify", "--family", "sp", "--max-n", "1", "--q", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failed"));
}

#[test]
fn series_zero_difference() {
    for args in [
        ["series", "--family", "gl", "--q", "2", "--order", "3"],
        ["series", "--family", "u", "--q", "3", "--order", "2"],
        ["series", "--family", "sp", "--q", "3", "--order", "2"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
        assert!(stdout(&out).contains("difference identically zero"), "{args:?}");
    }
    let out = run(&[
        "series", "--family", "gl", "--kind", "nilpairs", "--symbolic", "--order", "4",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("difference identically zero"));
}

#[test]
fn invalid_configurations_exit_2() {
    // symplectic family rejects even q
    let out = run(&["asym", "--family", "sp", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["count", "--family", "sp", "--kind", "pairs", "--n", "1", "--q", "4"]);
    assert_eq!(out.status.code(), Some(2));
    // symbolic class_sum for pairs is undefined
    let out = run(&[
        "count", "--family", "gl", "--kind", "pairs", "--n", "2", "--symbolic", "--backend",
        "class-sum",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // clap usage errors are 2 as well
    let out = run(&["count", "--family", "gl", "--kind", "pairs", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn asym_reports_constant_and_table() {
    let out = run(&["asym", "--family", "gl", "--q", "2", "--max-n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("constant = 10.03212977"), "{text}");
    assert!(text.contains("certified within"));

    let csv = run(&["asym", "--family", "u", "--q", "2", "--max-n", "2", "--format", "csv"]);
    assert!(csv.status.success());
    assert!(stdout(&csv).starts_with("n,ratio,decimal,distance\n"));
}
