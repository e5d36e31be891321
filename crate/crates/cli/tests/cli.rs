use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.apx"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graduality")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_graduality"))
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
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn categoriser_values() {
    let ex4 = fixture("example4");
    let out = stdout(&run(&["value", "--model", "categoriser", ex4.to_str().unwrap()]));
    assert!(out.lines().any(|l| l == "A 78/283"), "{out}");
    assert!(out.lines().any(|l| l == "B1 6/13"), "{out}");
}

#[test]
fn tuple_values_from_stdin() {
    let out = stdout(&run_stdin(&["value", "--model", "tuples"], "arg(a). arg(b). arg(c). att(a,b). att(b,c)."));
    assert_eq!(out, "a [(0^inf),()]\nb [(),(1)]\nc [(2),()]\n");
    let out = stdout(&run_stdin(&["value", "--model", "tuples", "--depth", "1", "-"], "arg(a). att(a,a)."));
    assert_eq!(out, "a [(2,...),(1,3,...)]\n");
}

#[test]
fn comparisons() {
    assert_eq!(stdout(&run(&["compare", "--model", "tuples", "[(2),(3)]", "[(2),(1)]"])), "first-better (exact)\n");
    assert_eq!(stdout(&run(&["compare", "[(2),(1)]", "[(4),(3)]"])), "incomparable (exact)\n");
    assert_eq!(stdout(&run(&["compare", "--model", "categoriser", "1/2", "2/3"])), "second-better (exact)\n");
    assert_eq!(stdout(&run(&["compare", "--model", "labelling", "+", "?"])), "first-better (exact)\n");
    let v = json(&run(&["compare", "--format", "json", "[(2,4,6,...),()]", "[(2,4,6,...),()]"]));
    assert_eq!(v["verdict"], "equivalent");
    assert_eq!(v["exact"], false);
}

#[test]
fn extensions_and_levels() {
    let ex1 = fixture("example1");
    let ex1 = ex1.to_str().unwrap();
    assert_eq!(stdout(&run(&["solve", "--semantics", "preferred", ex1])), "{A1,A4}\n");
    let v = json(&run(&["solve", "--semantics", "stable", "--format", "json", ex1]));
    assert_eq!(v["extensions"], serde_json::json!([["A1", "A4"]]));
    let out = stdout(&run(&["classify", "--model", "categoriser", ex1]));
    assert_eq!(out.lines().next(), Some("A1 uni well-defended:categoriser"));
    let out = stdout(&run_stdin(&["solve", "--semantics", "stable"], "arg(a). arg(b). arg(c). att(a,b). att(b,c). att(c,a)."));
    assert_eq!(out, "");
}

#[test]
fn well_defended_and_dot() {
    let out = stdout(&run_stdin(&["well-defended"], "arg(d). arg(c). arg(b). att(d,c). att(c,b)."));
    assert_eq!(out, "d\nb\n");
    let out = stdout(&run_stdin(&["export-dot"], "arg(a). arg(b). att(a,b)."));
    assert!(out.starts_with("digraph"), "{out}");
    assert!(out.contains("->"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["value", "--depth", "0", "--model", "tuples", fixture("example7").to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run_stdin(&["value"], "att(a,b).").status.code(), Some(2));
    assert_eq!(run(&["compare", "[(3),()]", "[(2),()]"]).status.code(), Some(2));
    assert_eq!(run(&["value", "/no/such/file.apx"]).status.code(), Some(2));
    let big: String = (0..30).map(|i| format!("arg(a{i}). ")).collect();
    assert_eq!(run_stdin(&["solve"], &big).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let ex = fixture("mcycles");
    let ex = ex.to_str().unwrap();
    for args in [
        vec!["value", "--model", "tuples", "--format", "json", ex],
        vec!["classify", "--model", "tuples", "--model", "categoriser", ex],
    ] {
        assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
    }
}
