//! The installed binary: output and exit codes.

use std::process::Command;

fn germlab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_germlab")).args(args).env_remove("GERMLAB_SEED").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn quartic_invariants() {
    assert_eq!(germlab(&["invariants", "z1^4+z2^4"]), (0, "{\"I2\":\"1\",\"I3\":\"0\",\"Delta\":\"1\",\"J\":\"1\"}\n".into()));
}

#[test]
fn classify_degenerate_sextic() {
    let (code, out) = germlab(&["classify-sextic", "z1^3*z2^3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"label\":\"(iii)\",\"evidence\":{\"pattern\":[3,3]}}\n");
}

#[test]
fn exit_codes() {
    assert_eq!(germlab(&["invariants", "z1 + w"]).0, 1);
    assert_eq!(germlab(&["milnor", "x^6 - y^6", "--unknown"]).0, 1);
    assert_eq!(germlab(&["milnor", "z1^4*z2"]).0, 2);
    assert_eq!(germlab(&["verify", "quartic"]).0, 0);
}

#[test]
fn seed_override() {
    let a = Command::new(env!("CARGO_BIN_EXE_germlab")).args(["verify", "i18"]).env("GERMLAB_SEED", "99").output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 99);
    let (_, out) = germlab(&["verify", "i18", "--seed", "5"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], 5);
}
