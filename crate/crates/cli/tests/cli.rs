use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgmirror")).args(args).output().unwrap()
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["mirror", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["res", "--n", "4", "--i", "9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn json_output_parses() {
    for args in [
        vec!["--json", "mirror", "--n", "3"],
        vec!["--json", "theta"],
        vec!["--json", "monodromy"],
        vec!["--json", "ext", "--n", "4", "--i", "1", "--j", "2"],
        vec!["--json", "verify", "--suite", "theta"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(!v.is_null());
    }
}

#[test]
fn verify_all_is_deterministic() {
    let a = run(&["verify", "--suite", "all", "--seed", "7"]);
    let b = run(&["verify", "--suite", "all", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
