use std::process::{Command, Output};

fn schurq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn fn_prints_canonical_json() {
    let o = schurq(&["fn", "--basis", "q", "--lambda", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        r#"{"terms":[{"coeff":"4/3","monomial":{"1":"3"}},{"coeff":"-4","monomial":{"3":"1"}}]}"#
    );
}

#[test]
fn hall_littlewood_needs_rho() {
    let o = schurq(&["fn", "--basis", "hl", "--lambda", "1", "--rho", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        r#"{"terms":[{"coeff":"1/2","monomial":{"1":"1"}}]}"#
    );
    assert_eq!(
        schurq(&["fn", "--basis", "hl", "--lambda", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        schurq(&["fn", "--basis", "hl", "--lambda", "1", "--rho", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn coef_dfact() {
    let o = schurq(&["coef", "--name", "dfact", "--args", "-5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), r#""1/3""#);
    let o = schurq(&["coef", "--name", "c-chain", "--args", "3,2,1"]);
    assert_eq!(stdout(&o), r#""2""#);
}

#[test]
fn verify_thm1_small() {
    let o = schurq(&["verify", "--suite", "thm1", "--max-weight", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn act_modes_unavailable_for_k4() {
    let o = schurq(&[
        "act", "--op", "P", "--k", "4", "--m", "0", "--basis", "q", "--lambda", "2", "--mode",
        "modes",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = schurq(&[
        "act", "--op", "P", "--k", "4", "--m", "-1", "--basis", "q", "--lambda", "2", "--mode",
        "all",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agree"], true);
    assert!(v["modes"].is_null());
}

#[test]
fn usage_errors() {
    assert_eq!(schurq(&["tau", "--model", "bgw"]).status.code(), Some(2));
    assert_eq!(
        schurq(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(schurq(&["--help"]).status.code(), Some(0));
}
