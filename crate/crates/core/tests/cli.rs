use std::io::Write;
use std::process::{Command, Output, Stdio};

fn latcon(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_latcon"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
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

#[test]
fn construct_then_analyze() {
    let built = latcon(&["construct", "lfamily", "9"], "");
    assert!(built.status.success());
    let report = latcon(&["analyze", "-"], &stdout(&built));
    assert!(report.status.success());
    let text = stdout(&report);
    assert!(text.contains("Con=16"), "{text}");
    assert!(text.contains("planar=false"), "{text}");
    assert!(text.contains("congruences=few"), "{text}");
}

#[test]
fn verify_reports_no_violations() {
    let o = latcon(&["verify", "7"], "");
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("n=7 classes=53 "));
    assert!(stdout(&o).contains("violations=0"));
}

#[test]
fn errors_have_a_kind_and_exit_code_two() {
    let o = latcon(&["analyze", "-"], "3\n0 1\n1 0\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
    let o = latcon(&["--max-n", "5", "enumerate", "6"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_output() {
    let o = latcon(&["dot", "-"], "3\n0 1\n1 2\n");
    let text = stdout(&o);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("0 -> 1;"));
}
