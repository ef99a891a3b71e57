use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tropint(args: &[&str], stdin: &str) -> Output {
  let mut child = Command::new(env!("CARGO_BIN_EXE_tropint"))
    .args(args)
    .stdin(Stdio::piped())
    .stdout(Stdio::piped())
    .stderr(Stdio::piped())
    .spawn()
    .expect("spawn tropint");
  child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
  child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
  String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
  serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn rigid_chain_piped_into_degree() {
  let chain = tropint(&["chain", "rigid-function", "rigid-function", "rigid-surface"], "");
  assert!(chain.status.success(), "{}", String::from_utf8_lossy(&chain.stderr));
  let deg = tropint(&["degree"], &stdout(&chain));
  assert!(deg.status.success());
  assert_eq!(stdout(&deg), "-1\n");
}

#[test]
fn bezout_of_two_lines() {
  let o = tropint(&["bezout", "Lnk:2:1", "Lnk:2:1"], "");
  assert_eq!(o.status.code(), Some(0));
  assert_eq!(stdout(&o), "1 1 1 PASS\n");
}

#[test]
fn pushforward_doubles_both_half_lines() {
  let v = json(&tropint(&["pushforward", "map-f1", "pushfwd-fan"], ""));
  assert_eq!(v["kind"], "cycle");
  assert_eq!(v["ambient_dim"], 1);
  let cells = v["cells"].as_array().unwrap();
  assert_eq!(cells.len(), 2);
  for c in cells {
    assert_eq!(c["weight"], 2);
    assert_eq!(c["ineqs"].as_array().unwrap().len(), 1);
  }
}

#[test]
fn example_round_trips_through_stdin() {
  let a = tropint(&["example", "Lnk:3:1"], "");
  assert!(a.status.success());
  let v = tropint(&["validate", "-"], &stdout(&a));
  assert_eq!(v.status.code(), Some(0));
  let b = tropint(&["intersect", "-", "whole:3"], &stdout(&a));
  assert_eq!(stdout(&b), stdout(&a));
}

#[test]
fn output_is_deterministic() {
  let a = tropint(&["intersect", "conic", "Lnk:2:1"], "");
  let b = tropint(&["intersect", "conic", "Lnk:2:1"], "");
  assert!(a.status.success());
  assert_eq!(a.stdout, b.stdout);
}

#[test]
fn divisor_and_pullback() {
  let d = json(&tropint(&["divisor", "hyperplane:2", "whole:2"], ""));
  assert_eq!(d["dim"], 1);
  assert_eq!(d["cells"].as_array().unwrap().len(), 3);
  let p = json(&tropint(&["pullback", "map-f1", "hyperplane:1"], ""));
  assert_eq!(p["kind"], "function");
  assert_eq!(p["ambient_dim"], 2);
}

#[test]
fn output_flag_writes_file() {
  let dir = std::env::temp_dir().join(format!("tropint-test-{}", std::process::id()));
  std::fs::create_dir_all(&dir).unwrap();
  let path = dir.join("line.svg");
  let o = tropint(&["render", "Lnk:2:1", "--bbox", "-2,-2,2,2", "-o", path.to_str().unwrap()], "");
  assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
  let svg = std::fs::read_to_string(&path).unwrap();
  assert_eq!(svg.matches("<line").count(), 3);
  assert!(svg.contains(r#"x2="400.000" y2="0.000""#));
  std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unbalanced_input_exits_one_with_json() {
  let ray = r#"{"kind":"cycle","format_version":"1","ambient_dim":2,"dim":1,"cells":[{"ineqs":[[1,0,0]],"eqs":[[0,1,0]],"weight":1}]}"#;
  let o = tropint(&["--json", "validate", "-"], ray);
  assert_eq!(o.status.code(), Some(1));
  let e: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
  assert_eq!(e["error"], "unbalanced");
  assert_eq!(e["exit_code"], 1);
  assert_eq!(e["sum"], serde_json::json!(["1", "0"]));
}

#[test]
fn parse_errors_exit_two() {
  let float = r#"{"kind":"cycle","format_version":"1","ambient_dim":1,"dim":0,"cells":[{"eqs":[[1,0.5]]}]}"#;
  let o = tropint(&["--json", "degree", "-"], float);
  assert_eq!(o.status.code(), Some(2));
  let e: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
  assert_eq!(e["error"], "parse");
  assert!(e["message"].as_str().unwrap().contains("$.cells[0].eqs[0][1]"));

  assert_eq!(tropint(&["degree", "no-such-thing"], "").status.code(), Some(2));
  assert_eq!(tropint(&["frobnicate"], "").status.code(), Some(2));
  assert_eq!(tropint(&["degree", "map-f1"], "").status.code(), Some(2));
  assert_eq!(tropint(&["render", "Lnk:3:1"], "").status.code(), Some(2));
}

#[test]
fn non_generic_bezout_is_not_applicable() {
  let o = tropint(&["bezout", "quad-curve", "Lnk:2:1"], "");
  assert_eq!(o.status.code(), Some(0));
  assert!(stdout(&o).trim_end().ends_with("NOT-APPLICABLE"));
}
