use std::io::Write;
use std::process::{Command, Output, Stdio};

fn edgecrit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgecrit")).args(args).output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_edgecrit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn chi_of_petersen() {
    let o = edgecrit(&["chi", "--builder", "petersen"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Δ=3 χ'=4 class=2");
}

#[test]
fn petersen_minus_vertex_is_critical() {
    let o = edgecrit(&["critical", "--builder", "petersen_minus_vertex"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "delta-critical: true (12/12 edges critical)");
    let o = edgecrit(&["critical", "--builder", "petersen"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "delta-critical: false (0/15 edges critical)");
}

#[test]
fn json_and_text_agree() {
    for builder in ["petersen", "K4", "C5", "P*"] {
        let text = stdout(&edgecrit(&["chi", "--builder", builder]));
        let json: serde_json::Value =
            serde_json::from_str(&stdout(&edgecrit(&["chi", "--builder", builder, "--json"]))).unwrap();
        let expected = format!("Δ={} χ'={} class={}", json["delta"], json["chromatic_index"], json["class"]);
        assert_eq!(text.trim(), expected);

        let text = stdout(&edgecrit(&["critical", "--builder", builder]));
        let json: serde_json::Value =
            serde_json::from_str(&stdout(&edgecrit(&["critical", "--builder", builder, "--json"]))).unwrap();
        assert!(text.contains(&format!("delta-critical: {}", json["delta_critical"])));
    }
}

#[test]
fn color_prints_a_proper_coloring() {
    let o = edgecrit(&["color", "--builder", "K4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["method"], "exact");
    let rows = v["colors"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i + 1..] {
            let shares = (0..2).any(|p| (0..2).any(|q| a[p] == b[q]));
            assert!(!(shares && a[2] == b[2]), "{a} {b}");
        }
    }
    let o = edgecrit(&["color", "--builder", "petersen", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["k"].as_u64(), v["method"].as_str()), (Some(4), Some("fan-rotation")));
}

#[test]
fn split_and_check() {
    let o = edgecrit(&["split", "--builder", "K4", "--vertex", "0", "--part", "1", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("n=5 m=7 Δ=3 overfull=true"), "{out}");
    assert!(out.contains("delta-critical: true (7/7 edges critical)"), "{out}");
    let o = edgecrit(&["split", "--builder", "K4", "--vertex", "0", "--part", "1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn batch_input_on_stdin() {
    let o = with_stdin(&["chi"], "C~\nDQc\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "C~  Δ=3 χ'=3 class=1\nDQc  Δ=2 χ'=2 class=1\n");
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(edgecrit(&["frobnicate"]).status.code(), Some(2));
    let o = edgecrit(&["chi", "--graph6", "!!"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("malformed graph6"));
    assert_eq!(edgecrit(&["chi", "--builder", "nope"]).status.code(), Some(2));
    assert_eq!(edgecrit(&["chi", "--builder", "K4", "--graph6", "C~"]).status.code(), Some(2));
    assert_eq!(edgecrit(&["chi", "--file", "/nonexistent/graphs.g6"]).status.code(), Some(2));
    assert_eq!(edgecrit(&["theorem1", "--m-max", "7"]).status.code(), Some(2));
    assert_eq!(edgecrit(&["theorem1", "--m-max", "10"]).status.code(), Some(2));
    assert_eq!(edgecrit(&["sweep", "--filter", "sideways"]).status.code(), Some(2));
    assert_eq!(edgecrit(&["theorem1", "--resume"]).status.code(), Some(2));
}

#[test]
fn zero_budget_is_undecided() {
    let o = edgecrit(&["chi", "--builder", "K6", "--budget-ms", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).trim(), "Δ=5 χ'=? class=?");
    let o = edgecrit(&["theorem1", "--m-max", "4", "--budget-ms", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn theorem1_passes_up_to_eight() {
    let o = edgecrit(&["theorem1", "--m-max", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("instances: 11 (resumed 0)  pass 11  fail 0  skipped 0  undecided 0"));
    let o = edgecrit(&["theorem1", "--m-max", "8", "--json", "--jobs", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["pass"], 11);
}

#[test]
fn logs_are_deterministic_and_resumable() {
    let dir = tempfile::tempdir().unwrap();
    let log = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let (a, b, c) = (log("a.jsonl"), log("b.jsonl"), log("c.jsonl"));
    assert_eq!(edgecrit(&["theorem1", "--m-max", "8", "--jobs", "1", "--log", &a]).status.code(), Some(0));
    assert_eq!(edgecrit(&["theorem1", "--m-max", "8", "--jobs", "1", "--log", &b]).status.code(), Some(0));
    assert_eq!(edgecrit(&["theorem1", "--m-max", "8", "--jobs", "3", "--log", &c]).status.code(), Some(0));
    let full = std::fs::read(&a).unwrap();
    assert_eq!(full, std::fs::read(&b).unwrap());
    assert_eq!(full, std::fs::read(&c).unwrap());

    // resuming a complete log does no work and leaves it untouched
    let o = edgecrit(&["theorem1", "--m-max", "8", "--log", &a, "--resume"]);
    assert!(stdout(&o).contains("instances: 11 (resumed 11)"));
    assert_eq!(std::fs::read(&a).unwrap(), full);

    // resuming mid-sweep runs only the rest
    let text = String::from_utf8(full.clone()).unwrap();
    let head: String = text.split_inclusive('\n').take(4).collect();
    std::fs::write(&a, &head).unwrap();
    let o = edgecrit(&["theorem1", "--m-max", "8", "--log", &a, "--resume"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(resumed 4)"));
    assert_eq!(std::fs::read(&a).unwrap(), full);

    // a cut-off last line is refused with its position
    std::fs::write(&a, &text[..head.len() + 10]).unwrap();
    let o = edgecrit(&["theorem1", "--m-max", "8", "--log", &a, "--resume"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 5 is truncated"), "{}", stderr(&o));

    // so is a corrupted line
    let mut lines: Vec<&str> = text.lines().collect();
    lines[2] = "{not json";
    std::fs::write(&a, lines.join("\n") + "\n").unwrap();
    let o = edgecrit(&["theorem1", "--m-max", "8", "--log", &a, "--resume"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3 is not a record"), "{}", stderr(&o));

    // and a log from a different sweep
    let o = edgecrit(&["sweep", "--m-max", "8", "--log", &b, "--resume"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1 records"), "{}", stderr(&o));
}

#[test]
fn conjecture_sweep_and_base_order_reading() {
    let o = edgecrit(&["sweep", "--m-max", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass 88  fail 0"));
    // with the threshold read on the base order, a cubic 8-vertex base has a non-critical split
    let o = edgecrit(&["sweep", "--m-max", "8", "--filter", "conjecture-base", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failures = v["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    for f in failures {
        assert_eq!(f["witness"]["delta"], 3);
        assert_eq!(f["witness"]["order"], 9);
    }
}

#[test]
fn lemmas_and_figure1() {
    let o = edgecrit(&["lemmas", "--builder", "P*"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("parity"));
    let o = edgecrit(&["figure1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["outcome"], "pass");
    assert_eq!(v["witness"]["non_elementary"], true);
}
