//! End-to-end tests of the command-line binary: output values,
//! determinism, JSON round-tripping, and exit codes.

use std::process::{Command, Output};

use schubert_lines::output::{OutputEnvelope, Status};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert-lines"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_paper_values() {
    for (n, d, expect) in [(3, 3, "27"), (4, 5, "2,875"), (5, 7, "698,005")] {
        let out = run(&["count", "--n", &n.to_string(), "--d", &d.to_string()]);
        assert!(out.status.success());
        assert!(
            stdout(&out).contains(expect),
            "count --n {n} --d {d}: got {}",
            stdout(&out)
        );
    }
}

#[test]
fn split_table_rows() {
    let out = run(&["split", "--n", "4", "--d", "5", "--k", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1,600 | 1,275 | 2,875 | ok");

    let out = run(&["split", "--n", "5", "--d", "7", "--k", "5"]);
    assert_eq!(stdout(&out).trim(), "398,125 | 299,880 | 698,005 | ok");

    // below top degree the classes themselves are printed
    let out = run(&["split", "--n", "3", "--d", "2", "--k", "1"]);
    assert_eq!(
        stdout(&out).trim(),
        "2*sigma_{2,1} | 2*sigma_{2,1} | 4*sigma_{2,1} | ok"
    );
}

#[test]
fn verify_sweeps_pass() {
    for args in [
        vec!["verify", "thm33", "--max-sum", "8"],
        vec!["verify", "prop311", "--max-k", "4", "--max-l", "4"],
        vec!["verify", "lemma34", "--max-l", "4"],
        vec!["verify", "eq36", "--max-l", "6"],
        vec!["verify", "lemma37", "--max-l", "9"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
        assert!(stdout(&out).contains("pass"), "{args:?}");
    }
}

#[test]
fn normal_types_output() {
    let out = run(&["normal-types", "--n", "4", "--k", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(-1,-1)");
}

#[test]
fn witness_checks_pass() {
    let out = run(&["witness", "--n", "4", "--d", "5", "--k", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("phi surjective:         true"));
    assert!(text.contains("kernel dimension:       5 (expected 5)"));
}

#[test]
fn witness_argument_error() {
    // d exceeds the largest degree with lines, 2n - 3
    let out = run(&["witness", "--n", "3", "--d", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_envelope_round_trips() {
    let out = run(&["--json", "split", "--n", "4", "--d", "5", "--k", "3"]);
    assert!(out.status.success());
    let env: OutputEnvelope = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(env.command, "split");
    assert_eq!(env.status, Status::Ok);
    assert_eq!(env.parameters["n"], serde_json::json!(4));
    assert_eq!(env.results[0]["counts"]["k"], serde_json::json!("1575"));
    // serialize -> parse -> serialize is stable
    assert_eq!(serde_json::to_string(&env).unwrap(), stdout(&out).trim());
}

#[test]
fn output_is_deterministic() {
    let first = run(&["--json", "verify", "thm33", "--max-sum", "7"]);
    let second = run(&["--json", "verify", "thm33", "--max-sum", "7"]);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.status.success());
}

#[test]
fn quiet_suppresses_tables() {
    let out = run(&["--quiet", "count", "--n", "3", "--d", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
}
