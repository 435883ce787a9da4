use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_onepoint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn monotone_table() {
    let text = stdout(&[
        "invariants",
        "--problem",
        "monotone",
        "--d-max",
        "5",
        "--g-max",
        "2",
        "--format",
        "table",
    ]);
    let rows: Vec<Vec<&str>> = text.lines().skip(2).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(
        rows,
        vec![
            vec!["1", "1", "0", "0"],
            vec!["2", "1", "1", "1"],
            vec!["3", "2", "10", "42"],
            vec!["4", "5", "70", "735"],
            vec!["5", "14", "420", "8778"],
        ]
    );
}

#[test]
fn oracle_ribbon() {
    assert_eq!(
        stdout(&["oracle", "--kind", "ribbon", "--d", "3", "--format", "pretty"]).trim(),
        "{g=0: 5, g=1: 10}"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&["oracle", "--kind", "ribbon", "--d", "3"])).unwrap();
    assert_eq!(json["counts"]["0"], "5");
    assert_eq!(json["counts"]["1"], "10");
}

#[test]
fn closure_demo_final_line() {
    let text = stdout(&["closure-demo", "monotone", "--format", "pretty"]);
    assert_eq!(
        text.lines().last().unwrap(),
        "d m_g(d) = 2(2d-3) m_g(d-1) + d(d-1)^2 m_{g-1}(d)"
    );
}

#[test]
fn unknown_demo_fails_with_code() {
    let out = run(&["closure-demo", "nope"]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["module"], "cli");
    assert_eq!(err["error"]["code"], "CLI_UNKNOWN_DEMO");
}

#[test]
fn module_errors_carry_codes() {
    let out = run(&["invariants", "--problem", "nonsense", "--d-max", "2", "--g-max", "1"]);
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["module"], "generator");
    let out = run(&["oracle", "--kind", "ribbon", "--d", "9"]);
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["module"], "oracle");
}

#[test]
fn guess_harer_zagier() {
    let args = [
        "guess",
        "--problem",
        "ribbon",
        "--order",
        "2",
        "--degree",
        "3",
        "--n",
        "30",
        "--format",
        "pretty",
    ];
    assert!(stdout(&args).contains("(d+1) a_g(d) = 2(2d-1) a_g(d-1) + (2d-1)(d-1)(2d-3) a_{g-1}(d-2)"));
}

#[test]
fn verify_catalog_recursion() {
    let text = stdout(&[
        "verify",
        "--problem",
        "bms(3)",
        "--recursion",
        "3-bms",
        "--format",
        "pretty",
    ]);
    assert!(text.contains("holds on"), "{text}");
}

#[test]
fn deterministic_and_out_file() {
    let args = [
        "invariants",
        "--problem",
        "double-bms(3;1,0,2)",
        "--d-max",
        "5",
        "--g-max",
        "2",
    ];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let path = std::env::temp_dir().join(format!("onepoint-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let mut with_out = args.to_vec();
    with_out.extend(["--out", p]);
    stdout(&with_out);
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written.trim_end(), a.trim_end());
}

#[test]
fn problem_file_input() {
    let path = std::env::temp_dir().join(format!("onepoint-problem-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"G":{"kind":"rational","num":["1","1"],"den":["1"]},"q":["0","1"]}"#,
    )
    .unwrap();
    let text = stdout(&[
        "invariants",
        "--problem",
        path.to_str().unwrap(),
        "--d-max",
        "4",
        "--g-max",
        "1",
        "--format",
        "table",
    ]);
    std::fs::remove_file(&path).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().skip(2).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows[3], vec!["4", "2", "1"]);
}

#[test]
fn relabelled_ribbon_table() {
    let text = stdout(&[
        "invariants",
        "--problem",
        "ribbon",
        "--d-max",
        "4",
        "--g-max",
        "2",
        "--relabel",
        "--format",
        "table",
    ]);
    let rows: Vec<Vec<&str>> = text.lines().skip(2).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.last().unwrap(), &vec!["4", "14", "70", "21"]);
    assert_eq!(rows.len(), 4);
}
