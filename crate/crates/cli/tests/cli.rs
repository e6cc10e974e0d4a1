use std::process::{Command, Output};

fn permroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permroot"))
        .args(args)
        .env_remove("PERMROOT_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = permroot(args);
    assert_eq!(o.status.code(), Some(0));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn roots_of_identity_in_s4() {
    let v = json(&["roots", "--k", "2", "--type", "1^4", "--format", "json"]);
    assert_eq!(v["total"], "10");
    assert_eq!(v["even"], "4");
    assert_eq!(v["odd"], "6");
    assert_eq!(v["has_root"], true);
    assert_eq!(v["n"], 4);
    assert_eq!(v["k"], 2);
}

#[test]
fn transposition_has_no_square_root() {
    let v = json(&["roots", "--k", "2", "--type", "2^1", "--format", "json"]);
    assert_eq!(v["total"], "0");
    assert_eq!(v["has_root"], false);
}

#[test]
fn first_root_of_three_cycle() {
    let v = json(&["roots", "--k", "1", "--type", "3^1", "--format", "json"]);
    assert_eq!(
        (&v["total"], &v["even"], &v["odd"]),
        (&"1".into(), &"1".into(), &"0".into())
    );
}

#[test]
fn json_schema_is_stable() {
    let v = json(&["roots", "--k", "2", "--type", "1^60", "--format", "json"]);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["n", "k", "total", "even", "odd", "has_root"]);
    // involutions of S_60 exceed 2^64; they must come back as full decimal strings
    let total = v["total"].as_str().unwrap();
    assert!(
        total.len() > 20 && total.bytes().all(|b| b.is_ascii_digit()),
        "{total}"
    );
}

#[test]
fn text_output() {
    let o = permroot(&["roots", "--k", "2", "--type", "2^2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(
        s.contains("total    2\n") && s.contains("odd      2\n"),
        "{s}"
    );
}

#[test]
fn series_dumps() {
    let o = permroot(&["series", "--k", "1", "--max-weight", "2"]);
    assert_eq!(stdout(&o), "1/1\n1/1 1^1\n1/2 1^2\n1/1 2^1\n");
    let o = permroot(&["series", "--k", "2", "--max-weight", "2", "--signed"]);
    assert_eq!(stdout(&o), "1/1\n1/1 1^1\n");
    let o = permroot(&["series", "--k", "2", "--max-weight", "0"]);
    assert_eq!(stdout(&o), "1/1\n");
}

#[test]
fn oeis_bfiles() {
    let o = permroot(&["oeis", "A000704", "--terms", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1\n1 1\n2 1\n3 1\n4 4\n");
    let o = permroot(&["oeis", "A001465", "--terms", "3"]);
    assert_eq!(stdout(&o), "0 0\n1 0\n2 1\n");
    let o = permroot(&["oeis", "--k", "2", "--parity", "even", "--terms", "5"]);
    assert_eq!(stdout(&o), "0 1\n1 1\n2 1\n3 1\n4 4\n");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| permroot(args).status.code();
    assert_eq!(code(&["oeis", "A999999"]), Some(2));
    assert_eq!(code(&["oeis", "A000704", "--terms", "0"]), Some(2));
    assert_eq!(code(&["roots", "--k", "2", "--type", "1^0"]), Some(2));
    assert_eq!(code(&["roots", "--k", "2", "--type", "2,2"]), Some(2));
    assert_eq!(code(&["roots", "--k", "0", "--type", "1"]), Some(2));
    assert_eq!(code(&["series", "--k", "2", "--max-weight", "65"]), Some(2));
    assert_eq!(code(&["verify", "--max-n", "11", "--k", "2"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["verify", "--max-n", "4", "--k", "2"]), Some(0));
}

#[test]
fn parse_error_reports_position() {
    let o = permroot(&["roots", "--k", "2", "--type", "2;3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 1"), "{err}");
}

fn without_elapsed(s: &str) -> String {
    s.lines()
        .filter(|l| !l.starts_with("elapsed"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn verify_sweeps() {
    let o = permroot(&["verify", "--max-n", "0", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 checks, 0 failed"));

    let o = permroot(&["verify", "--max-n", "5", "--k", "2,3,4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("57 checks, 0 failed"));

    let o = permroot(&["verify", "--max-n", "7", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("45 checks, 0 failed"));
}

#[test]
fn verify_report_independent_of_workers() {
    let one = permroot(&["verify", "--max-n", "6", "--k", "2,4,6", "--workers", "1"]);
    let many = permroot(&["verify", "--max-n", "6", "--k", "2,4,6", "--workers", "4"]);
    assert_eq!(
        without_elapsed(&stdout(&one)),
        without_elapsed(&stdout(&many))
    );
    let env = Command::new(env!("CARGO_BIN_EXE_permroot"))
        .args(["verify", "--max-n", "6", "--k", "2,4,6"])
        .env("PERMROOT_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(
        without_elapsed(&stdout(&env)),
        without_elapsed(&stdout(&one))
    );
    let bad_env = Command::new(env!("CARGO_BIN_EXE_permroot"))
        .args(["verify", "--max-n", "2", "--k", "2"])
        .env("PERMROOT_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}
