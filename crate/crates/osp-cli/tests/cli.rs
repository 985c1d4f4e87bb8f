//! End-to-end tests of the `osp` binary: pinned outputs, JSON round-trips,
//! determinism, exit codes, and the level/env/config precedence of `verify`.

use std::process::{Command, Output};

fn osp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osp"))
        .args(args)
        .env_remove("OSP_VERIFY_LEVEL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn poincare_flag_example() {
    let out = osp(&["poincare", "--space", "flag", "--N", "5", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["coefficients"], serde_json::json!([1, 3, 5, 6, 5, 3, 1]));
    assert_eq!(v["provenance"]["mode"], "enumeration");
}

#[test]
fn dim_odd_example() {
    let out = osp(&["dim-odd", "--lambda", "1,1", "--n", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn fano_example() {
    let out = osp(&["fano", "--k", "3", "--n", "3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["components"], 2);
    assert_eq!(v["result"]["dim_f1"], 9);
    assert_eq!(v["result"]["dim_f2"], 9);
    assert_eq!(v["result"]["rank_h1"], 36);
    assert_eq!(v["result"]["rank_h2"], 32);
    assert_eq!(v["result"]["ranks_extrapolated"], false);
}

#[test]
fn json_round_trips_byte_identical() {
    for args in [
        vec!["poincare", "--space", "flag", "--N", "5", "--json"],
        vec!["weyl", "--N", "4", "--list", "--json"],
        vec!["oracle", "--lambda", "2,1", "--N", "5", "--json"],
        vec!["orbits", "--space", "grassmannian", "--N", "7", "--k", "2", "--json"],
        vec!["koszul", "--k", "3", "--n", "3", "--detail", "--json"],
    ] {
        let emitted = stdout(&osp(&args));
        let parsed: serde_json::Value = serde_json::from_str(&emitted).unwrap();
        assert_eq!(
            serde_json::to_string(&parsed).unwrap(),
            emitted.trim_end(),
            "args: {args:?}"
        );
    }
}

#[test]
fn identical_requests_identical_bytes() {
    let args = ["cells", "--N", "9", "--index", "4,6,8", "--json"];
    let first = osp(&args);
    let second = osp(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.status.success());
}

#[test]
fn echelon_cell_dimensions() {
    let out = osp(&["cells", "--N", "8", "--index", "4,6,8", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["dimension"], 9);
    let out = osp(&["cells", "--N", "9", "--index", "4,6,8", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["dimension"], 12);
}

#[test]
fn bruhat_with_chain_oracle() {
    let out = osp(&["bruhat", "--N", "5", "--left", "0,1,2", "--right", "1b,2b,0", "--oracle", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["leq"], true);
    assert_eq!(v["result"]["chain_leq"], true);
    assert_eq!(v["provenance"]["mode"], "oracle");
}

#[test]
fn shtepin_output_balances() {
    let out = osp(&["shtepin", "--lambda", "1,1", "--n", "1", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["sum"], v["result"]["sp_dim"]);
    assert_eq!(v["result"]["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        vec!["bruhat", "--N", "5", "--left", "0,0,1", "--right", "0,1,2"],
        vec!["dim-odd", "--lambda", "1,x", "--n", "1"],
        vec!["cells", "--N", "8", "--index", "4,6,8", "--k", "3"],
        vec!["orbits", "--space", "grassmannian", "--N", "6", "--k", "2"],
        vec!["verify", "--level", "bogus"],
        vec!["h0", "--lambda", "1,1,1", "--N", "3"],
    ] {
        let out = osp(&args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn verify_quick_passes() {
    let out = osp(&["verify", "--level", "quick"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 14);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("14/14 criteria passed"));
}

#[test]
fn verify_level_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_osp"))
        .args(["verify", "--json"])
        .env("OSP_VERIFY_LEVEL", "full")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["level"], "full");
}

#[test]
fn verify_flag_beats_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_osp"))
        .args(["verify", "--level", "quick", "--json"])
        .env("OSP_VERIFY_LEVEL", "full")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["level"], "quick");
}

#[test]
fn verify_config_file_provides_defaults() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("osp-verify-{}.toml", std::process::id()));
    std::fs::write(&path, "level = \"full\"\n\n[ranges]\nfano_scan_n_max = 7\n").unwrap();
    let out = osp(&["verify", "--config", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["level"], "full");
    let fano = &v["result"]["criteria"].as_array().unwrap()[12];
    assert!(fano["detail"].as_str().unwrap().contains("n ≤ 7"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_config_rejects_unknown_keys() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("osp-verify-bad-{}.toml", std::process::id()));
    std::fs::write(&path, "levle = \"full\"\n").unwrap();
    let out = osp(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn oracle_command_cross_checks() {
    let out = osp(&["oracle", "--lambda", "2", "--N", "3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["trace_free"], 6);
    assert_eq!(v["result"]["formula"], 6);
    assert_eq!(v["provenance"]["mode"], "oracle");
}

#[test]
fn orbits_classify_cells() {
    let out = osp(&[
        "orbits", "--space", "grassmannian", "--N", "7", "--k", "2", "--index", "0,5", "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["cell"]["orbit"], "X_0");
    assert_eq!(v["result"]["orbits"].as_array().unwrap().len(), 2);
}

#[test]
fn bott_vanishing_case() {
    let out = osp(&["bott", "--eta", "0,0,0,0,1,0,0", "--k", "3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["vanishes"], true);
}
