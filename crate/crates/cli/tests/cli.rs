use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn glmn(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_glmn"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn glmn");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn transform_forward_example() {
    let o = glmn(
        &[
            "transform",
            "--M",
            "1",
            "--N",
            "2",
            "--p",
            "2",
            "--direction",
            "forward",
            "--order",
            "v1",
        ],
        "{\"lambda\":[1],\"theta\":[0,0]}\n",
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"lambda\":[0],\"theta\":[1,0]}\n");
}

#[test]
fn transform_roundtrip_through_cli() {
    let input = "{\"lambda\":[1,1],\"theta\":[0,0,0]}\n{\"lambda\":[-2,5],\"theta\":[3,0,-1]}\n";
    let base = ["--M", "2", "--N", "3", "--p", "3", "--order", "v2"];
    let fwd = glmn(
        &[&["transform", "--direction", "forward"], &base[..]].concat(),
        input,
    );
    assert_eq!(fwd.status.code(), Some(0));
    let back = glmn(
        &[&["transform", "--direction", "inverse"], &base[..]].concat(),
        &stdout(&fwd),
    );
    assert_eq!(stdout(&back), input);
}

#[test]
fn transform_with_trace_and_order_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("order.json");
    std::fs::write(&path, "[[2,1],[2,2],[1,1]]").unwrap();
    let order = format!("file:{}", path.display());
    let o = glmn(
        &[
            "transform",
            "--M",
            "2",
            "--N",
            "3",
            "--p",
            "2",
            "--order",
            &order,
            "--trace",
        ],
        "{\"lambda\":[1,1],\"theta\":[0,0,0]}\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let row = &json_lines(&o)[0];
    assert_eq!(row["lambda"], serde_json::json!([1, 0]));
    let trace = row["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 3);
    assert_eq!(trace[0]["pair"], serde_json::json!([2, 1]));
    assert_eq!(trace[0]["action"], "move");
    assert_eq!(trace[1]["action"], "noop");
}

#[test]
fn invalid_order_file_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("order.json");
    std::fs::write(&path, "[[1,1],[2,1],[2,2]]").unwrap();
    let order = format!("file:{}", path.display());
    let o = glmn(
        &[
            "transform",
            "--M",
            "2",
            "--N",
            "3",
            "--p",
            "2",
            "--order",
            &order,
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_example() {
    let o = glmn(
        &[
            "classify",
            "--M",
            "2",
            "--N",
            "3",
            "--p",
            "2",
            "--convention",
            "uplus",
        ],
        "{\"lambda\":[1,0],\"theta\":[1,0,0]}\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let row = &json_lines(&o)[0];
    assert_eq!(row["relevant"], true);
    assert_eq!(row["mixed_highest_weight"], true);
    assert_eq!(row["standard_dominant"], true);
    assert_eq!(row["weight"]["theta"], serde_json::json!([1, 0, 0]));
}

#[test]
fn classify_csv() {
    let o = glmn(
        &[
            "classify", "--M", "1", "--N", "2", "--p", "3", "--format", "csv",
        ],
        "{\"lambda\":[1],\"theta\":[2,2]}\n",
    );
    assert_eq!(
        stdout(&o),
        "lambda_1,theta_1,theta_2,standard_dominant,mixed_highest_weight,relevant\n1,2,2,true,true,true\n"
    );
}

#[test]
fn malformed_lines_reported_and_skipped() {
    let input = "{\"lambda\":[1],\"theta\":[0,0]}\nnot json\n{\"lambda\":[1,2],\"theta\":[0,0]}\n{\"lambda\":[0],\"theta\":[0,0]}\n";
    let o = glmn(&["classify", "--M", "1", "--N", "2", "--p", "2"], input);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json_lines(&o).len(), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn empty_input_is_ok() {
    let o = glmn(&["classify", "--M", "1", "--N", "2", "--p", "2"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn validation_errors_exit_2() {
    assert_eq!(
        glmn(&["classify", "--M", "1", "--N", "2", "--p", "4"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        glmn(&["classify", "--M", "3", "--N", "3", "--p", "2"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        glmn(
            &["verify", "--M", "1", "--N", "2", "--p", "2", "--box", "x"],
            ""
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        glmn(
            &["classify", "--M", "1", "--N", "2", "--p", "2", "--nope"],
            ""
        )
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn orbit_rep_output() {
    let o = glmn(
        &["orbit-rep", "--M", "1", "--N", "2"],
        "{\"lambda\":[1],\"theta\":[2,0]}\n",
    );
    assert_eq!(
        stdout(&o),
        "{\"size\":2,\"entries\":[[1,1,-3],[2,1,-2],[2,2,0]]}\n"
    );
}

#[test]
fn roots_output() {
    let o = glmn(&["roots", "--M", "1", "--N", "2", "--word", "2,1,3"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(
        v["positive_roots"],
        serde_json::json!([[1, 3], [2, 1], [2, 3]])
    );
    assert_eq!(v["excess_pairs"], serde_json::json!([[1, 1]]));

    let o = glmn(&["roots", "--M", "2", "--N", "3"], "");
    let v = &json_lines(&o)[0];
    assert_eq!(v["word"], serde_json::json!([3, 1, 4, 2, 5]));
    assert_eq!(
        v["excess_pairs"],
        serde_json::json!([[1, 1], [2, 1], [2, 2]])
    );
    assert_eq!(
        v["hasse"],
        serde_json::json!([[[2, 1], [1, 1]], [[2, 1], [2, 2]]])
    );

    let o = glmn(&["roots", "--M", "1", "--N", "2", "--word", "1,1,3"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let o = glmn(&["enumerate", "--M", "1", "--N", "2", "--box", "0:1"], "");
    assert_eq!(json_lines(&o).len(), 8);
    let o = glmn(
        &[
            "enumerate",
            "--M",
            "1",
            "--N",
            "2",
            "--box",
            "0:1",
            "--filter",
            "standard",
        ],
        "",
    );
    assert_eq!(json_lines(&o).len(), 6);
    let o = glmn(
        &[
            "enumerate",
            "--M",
            "1",
            "--N",
            "2",
            "--box",
            "0:1",
            "--format",
            "json",
        ],
        "",
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
}

#[test]
fn enumerate_limit_exit_3() {
    let o = glmn(
        &[
            "enumerate",
            "--M",
            "2",
            "--N",
            "3",
            "--box",
            "-2:2",
            "--limit",
            "100",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_all_passes() {
    let o = glmn(
        &[
            "verify", "--M", "2", "--N", "3", "--p", "2", "--box", "-2:2", "--check", "all",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let reports = json_lines(&o);
    let names: Vec<_> = reports
        .iter()
        .map(|r| r["check_name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["image", "roundtrip", "order", "theorem", "trace"]);
    assert!(reports.iter().all(|r| r["passed"] == true));
}

#[test]
fn verify_capacity_exit_3() {
    let o = glmn(
        &[
            "verify", "--M", "3", "--N", "4", "--p", "2", "--box", "0:0", "--check", "order",
            "--cap", "3",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_theorem_needs_prime() {
    let o = glmn(
        &[
            "verify", "--M", "1", "--N", "2", "--p", "0", "--box", "0:1", "--check", "theorem",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
}
