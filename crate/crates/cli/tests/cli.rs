use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn cpitch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cpitch"))
        .args(args)
        .env_remove("CPITCH_MAX_STATES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = cpitch(&full);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1, "{text}");
    serde_json::from_str(text.trim()).unwrap()
}

#[test]
fn outcome_of_worked_example() {
    let out = cpitch(&["outcome", "6,2,4,5|4,3,3,4,6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "R\n");
}

#[test]
fn outcome_trace_shows_stripping_then_pivot() {
    let out = cpitch(&["outcome", "1,1,6,2,4,5|4,3,3,4,6", "--trace"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "R");
    assert_eq!(lines[1].trim(), "StrippedOddTail(left,2)");
    assert!(lines[2].trim().starts_with("Theorem2Case(2)"), "{text}");
}

#[test]
fn oracle_on_empty_sum() {
    let out = cpitch(&["oracle", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "N (oL=L, oR=R)\n");
}

#[test]
fn distinguish_finds_zero_witness() {
    let out = cpitch(&["distinguish", "1|1", "0", "--max-mass", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("witness X = 0: o(G+X) = P, o(H+X) = N"), "{}", stdout(&out));

    let v = json(&["distinguish", "1|1", "0", "--max-mass", "6"]);
    assert_eq!(v["witness"]["x"], "0");
    assert_eq!(v["witness"]["g"], "P");
    assert_eq!(v["witness"]["h"], "N");

    let v = json(&["distinguish", "4|", "0", "--max-mass", "4"]);
    assert!(v["witness"].is_null());
}

#[test]
fn json_lines_have_the_stable_fields() {
    for args in [
        vec!["outcome", "2|2"],
        vec!["oracle", "|1 + 1|"],
        vec!["best-move", "2|", "--player", "L"],
        vec!["reduce", "5,2,1|"],
        vec!["sum", "|1", "3|"],
        vec!["bench", "--bumps", "1000", "--seed", "1"],
    ] {
        let v = json(&args);
        for field in ["position", "outcome", "oL", "oR", "trace", "witness", "states", "millis"] {
            assert!(v.get(field).is_some(), "{args:?} lacks {field}: {v}");
        }
    }
    let v = json(&["oracle", "|1 + 1|"]);
    assert_eq!(v["outcome"], "N");
    assert_eq!(v["oL"], "L");
    assert_eq!(v["oR"], "R");
    assert!(v["states"].as_u64().unwrap() > 0);
}

#[test]
fn sums_need_the_oracle_flag() {
    let out = cpitch(&["outcome", "1| + |1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--oracle"));
    let out = cpitch(&["outcome", "1| + |1", "--oracle"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "N\n");
}

#[test]
fn parse_errors_exit_2_and_name_the_token() {
    let out = cpitch(&["outcome", "3,0|2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`0`"));
    let out = cpitch(&["oracle", "1|2|3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cpitch(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = cpitch(&["--max-states", "5", "oracle", "3,3|3,3"]);
    assert_eq!(out.status.code(), Some(3));

    let out = Command::new(env!("CARGO_BIN_EXE_cpitch"))
        .args(["oracle", "3,3|3,3"])
        .env("CPITCH_MAX_STATES", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn best_move_reports_tie_broken_choice() {
    let out = cpitch(&["best-move", "6,2,4,5|4,3,3,4,6", "--player", "R"]);
    let text = stdout(&out);
    assert!(text.contains("R 3"), "{text}");
    let v = json(&["best-move", "6,4,2,1|2,3,5,7,8", "--player", "L"]);
    let ks: Vec<u64> = v["detail"]["moves"].as_array().unwrap().iter().map(|m| m["k"].as_u64().unwrap()).collect();
    assert!(ks.contains(&2));
    assert!(ks.windows(2).all(|w| w[0] < w[1]));
    let out = cpitch(&["best-move", "1|1", "--player", "L"]);
    assert!(stdout(&out).starts_with("none"));
}

#[test]
fn reduce_and_sum() {
    let out = cpitch(&["reduce", "1,1,6,2,4,5|4,3,3,4,6"]);
    assert_eq!(stdout(&out).lines().next(), Some("6,2,4,5|4,3,3,4,6"));
    let out = cpitch(&["reduce", "7| + |4"]);
    let text = stdout(&out);
    assert!(text.contains("7| = 1|") && text.contains("|4 = |"), "{text}");

    let v = json(&["sum", "|1", "|1"]);
    assert_eq!(v["outcome"], "L");
    assert_eq!(v["detail"]["method"], "unit-count");
    let v = json(&["sum", "2|2", "|1"]);
    assert_eq!(v["detail"]["method"], "oracle");
}

#[test]
fn verify_small_suite_passes() {
    let out = cpitch(&["verify", "--suite", "one-side", "--max-mass", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS one-side"));
}

#[test]
fn bench_is_deterministic_per_seed() {
    let a = json(&["bench", "--bumps", "5000", "--seed", "9"]);
    let b = json(&["bench", "--bumps", "5000", "--seed", "9"]);
    assert_eq!(a["outcome"], b["outcome"]);
    assert_eq!(a["position"], b["position"]);
    assert!(a["detail"]["bumps_per_sec"].as_f64().unwrap() > 0.0);
}

#[test]
fn play_session_over_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cpitch"))
        .args(["play", "2|", "--human", "R", "--first", "L"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"R 1\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("engine plays L 1"), "{text}");
    assert!(text.contains("Left has no move and wins."), "{text}");
}
