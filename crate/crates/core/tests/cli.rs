use std::process::{Command, Output};

use schurlab::skew_bcd::skew_o_jt;
use schurlab::{gp, LaurentPoly};

fn schurlab(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_schurlab"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("SCHURLAB_THREADS", t),
        None => cmd.env_remove("SCHURLAB_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_prints_text() {
    let o = schurlab(&["compute", "sp", "--lambda", "1", "--nvars", "1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x1 + x1^-1");
}

#[test]
fn methods_print_identical_output() {
    for (family, la, mu, n) in [("skew-s", "3,2,1", "2,1", "3"), ("skew-sp", "2,1,0", "1", "2"), ("skew-o", "2,1,0", "1", "2")] {
        let jt = schurlab(&["compute", family, "--lambda", la, "--mu", mu, "--nvars", n, "--method", "jt"], None);
        let gt = schurlab(&["compute", family, "--lambda", la, "--mu", mu, "--nvars", n, "--method", "gt"], None);
        assert_eq!(jt.status.code(), Some(0), "{}", stderr(&jt));
        assert_eq!(stdout(&jt), stdout(&gt), "{family}");
    }
    let a = schurlab(&["compute", "s", "--lambda", "2,1", "--nvars", "3", "--method", "bialternant"], None);
    let b = schurlab(&["compute", "s", "--lambda", "2,1", "--nvars", "3", "--method", "jt"], None);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn json_output_round_trips() {
    let o = schurlab(
        &["compute", "skew-o", "--lambda", "2,1,0", "--mu", "1", "--nvars", "2", "--format", "json"],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let p = LaurentPoly::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(p, skew_o_jt(&gp![2, 1, 0], &gp![1], 2).unwrap());
}

#[test]
fn bad_input_exits_two() {
    let cases: [&[&str]; 5] = [
        &["compute", "sp", "--lambda", "1,2", "--nvars", "1"],
        &["compute", "skew-sp", "--lambda", "2,1", "--mu", "1", "--nvars", "2"],
        &["compute", "s", "--nvars", "1"],
        &["verify", "nonsense"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = schurlab(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn verify_specialization_passes() {
    let o = schurlab(&["verify", "specialization", "--max-weight", "5"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert!(!lines.is_empty());
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["passed"], serde_json::Value::Bool(true), "{line}");
        assert!(v.get("identity_id").is_some() && v.get("elapsed_ms").is_some());
    }
    assert!(stderr(&o).contains(&format!("specialization: {} checks, 0 failed", lines.len())));
}

#[test]
fn thread_count_does_not_change_results() {
    let strip = |o: &Output| -> Vec<serde_json::Value> {
        stdout(o)
            .lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("elapsed_ms");
                v
            })
            .collect()
    };
    let args = ["verify", "branching", "--max-weight", "3", "--max-nvars", "3"];
    let one = schurlab(&args, Some("1"));
    let four = schurlab(&args, Some("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(strip(&one), strip(&four));
}

#[test]
fn expand_reports_both_sides() {
    let o = schurlab(&["expand", "branching", "--family", "sp", "--lambda", "1,0", "--nvars", "2", "--kvars", "1"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("lhs: ") && out.contains("rhs: ") && out.contains("PASS"), "{out}");
    let o = schurlab(&["expand", "skew-cauchy", "--family", "s", "--lambda", "1", "--mu", "1", "--nvars", "1", "--kvars", "1", "--degree", "3"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn help_exits_zero() {
    let o = schurlab(&["--help"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}
