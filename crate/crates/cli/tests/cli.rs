use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bhr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bhr")).args(args).output().expect("spawn bhr")
}

fn bhr_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bhr"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn bhr");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn status(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn infeasible_list_exits_2_with_witness() {
    let o = bhr(&["realize", "--a", "1", "--b", "1", "--c", "5", "--t", "4", "--json"]);
    assert_eq!(status(&o), 2);
    let j = json(&o);
    assert_eq!(j["outcome"], "infeasible");
    assert_eq!(j["witness"]["divisor"], 4);
}

#[test]
fn realize_json_is_linear_when_t_exceeds_half_v() {
    let o = bhr(&["realize", "--a", "2", "--b", "13", "--c", "5", "--t", "14", "--json"]);
    assert_eq!(status(&o), 0);
    let j = json(&o);
    assert_eq!(j["kind"], "linear");
    assert_eq!(j["v"], 21);
    assert_eq!(j["path"].as_array().unwrap().len(), 21);
    assert!(j["flags"]["extendable_w"].is_number());
}

#[test]
fn odd_t_is_a_usage_error() {
    let o = bhr(&["realize", "--a", "2", "--b", "2", "--c", "5", "--t", "7"]);
    assert_eq!(status(&o), 1);
}

#[test]
fn malformed_arguments_exit_1_and_help_exits_0() {
    assert_eq!(status(&bhr(&["realize", "--a", "x"])), 1);
    assert_eq!(status(&bhr(&["nonsense"])), 1);
    assert_eq!(status(&bhr(&["--help"])), 0);
    assert_eq!(status(&bhr(&["realize", "--a", "1", "--b", "1", "--c", "1", "--t", "4", "--strategy", "nope"])), 1);
}

#[test]
fn verify_accepts_good_paths_and_rejects_bad_ones() {
    let ok = bhr(&["verify", "--kind", "cyclic", "--path", "0,6,5,1,9,7,3,2,8,4", "--list", "1^2,2^2,4^5"]);
    assert_eq!(status(&ok), 0);
    let ok = bhr(&["verify", "--kind", "linear", "--path", "[0,8,7,6,4,2,10,9,1,3,5]", "--list", "1^3,2^4,8^3"]);
    assert_eq!(status(&ok), 0);
    let bad = bhr(&["verify", "--kind", "cyclic", "--path", "0,6,5,1,9,7,3,2,4,8", "--list", "1^2,2^2,4^5"]);
    assert_eq!(status(&bad), 4);
}

#[test]
fn oracle_finds_a_cyclic_path() {
    let o = bhr(&["oracle", "--list", "1,2,4^6", "--kind", "cyclic", "--mode", "first", "--json"]);
    assert_eq!(status(&o), 0);
    let path: Vec<u64> = json(&o)["search"]["outcome"]["path"]
        .as_array()
        .expect("path")
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    let mut sorted = path.clone();
    sorted.sort();
    assert_eq!(sorted, (0..9).collect::<Vec<_>>());
}

#[test]
fn oracle_reports_absence_with_exit_2() {
    let o = bhr(&["oracle", "--list", "1,2,4^5", "--kind", "cyclic"]);
    assert_eq!(status(&o), 2);
}

#[test]
fn oracle_budget_exhaustion_exits_5() {
    let o = bhr(&["oracle", "--list", "1^3,2^12,8^9", "--kind", "cyclic", "--mode", "count", "--max-nodes", "10"]);
    assert_eq!(status(&o), 5);
}

#[test]
fn scan_at_eleven_has_no_discrepancies() {
    let o = bhr(&["scan", "--v", "11", "--universe", "all"]);
    assert_eq!(status(&o), 0);
    assert!(stdout(&o).contains("1001 lists, 0 discrepancies"), "{}", stdout(&o));
}

#[test]
fn expand_and_format_are_inverse() {
    let o = bhr(&["expand", "--expr", "0 > 16 -1> 15", "--t", "16"]);
    assert_eq!(status(&o), 0);
    assert_eq!(stdout(&o).trim(), "0,16,15");

    let o = bhr(&["format", "--path", "0,8,7,6,4,2,10,9,1,3,5", "--t", "8"]);
    assert_eq!(status(&o), 0);
    let expr = stdout(&o);
    let back = bhr(&["expand", "--expr", expr.trim(), "--t", "8"]);
    assert_eq!(stdout(&back).trim(), "0,8,7,6,4,2,10,9,1,3,5");
}

#[test]
fn realize_output_verifies_through_stdin() {
    for (a, b, c, t) in [("2", "13", "5", "14"), ("2", "2", "5", "4"), ("1", "7", "9", "8")] {
        let made = bhr(&["realize", "--a", a, "--b", b, "--c", c, "--t", t, "--json"]);
        assert_eq!(status(&made), 0, "{a},{b},{c},{t}");
        let checked = bhr_stdin(&["verify", "--input", "-"], &made.stdout);
        assert_eq!(status(&checked), 0, "{}", String::from_utf8_lossy(&checked.stdout));
    }
}

#[test]
fn tampered_certificate_fails() {
    let made = bhr(&["realize", "--a", "2", "--b", "13", "--c", "5", "--t", "14", "--json"]);
    let mut j = json(&made);
    let p = j["path"].as_array_mut().unwrap();
    p.swap(1, 2);
    let checked = bhr_stdin(&["verify", "--input", "-"], j.to_string().as_bytes());
    assert_eq!(status(&checked), 4);

    let mut j = json(&made);
    j["flags"]["type1"] = Value::Bool(true);
    let checked = bhr_stdin(&["verify", "--input", "-"], j.to_string().as_bytes());
    assert_eq!(status(&checked), 4);
}

#[test]
fn requested_cyclic_kind_is_honoured() {
    let o = bhr(&["realize", "--a", "2", "--b", "2", "--c", "5", "--t", "4", "--kind", "cyclic", "--json"]);
    assert_eq!(status(&o), 0);
    assert_eq!(json(&o)["kind"], "cyclic");
}

#[test]
fn catalog_lists_and_instantiates() {
    let o = bhr(&["catalog", "--json"]);
    assert_eq!(status(&o), 0);
    assert!(json(&o).as_array().unwrap().len() > 10);
    let o = bhr(&["catalog", "--id", "c{1,2,4^(4k+6)}", "--params", "t=4,k=0", "--json"]);
    assert_eq!(status(&o), 0);
    assert_eq!(json(&o)["v"], 9);
    let o = bhr(&["catalog", "--id", "no-such-family", "--params", "t=4"]);
    assert_eq!(status(&o), 1);
}
