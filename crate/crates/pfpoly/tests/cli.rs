//! End-to-end tests of the `pfpoly` binary: exact outputs, exit codes,
//! and determinism across parallelism settings.

use std::process::{Command, Output};

fn pfpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfpoly"))
        .args(args)
        .env_remove("PFPOLY_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = pfpoly(args);
    assert!(out.status.success(), "unexpected failure: {:?}", out);
    String::from_utf8(out.stdout).unwrap()
}

fn failure_of(args: &[&str]) -> (i32, String) {
    let out = pfpoly(args);
    assert!(!out.status.success());
    (out.status.code().unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn classify_running_example() {
    assert_eq!(
        stdout_of(&["classify", "--u", "0,0,4,4,4,6,8,8"]),
        "{\"m\":[2,3,1,2],\"d\":[\"4\",\"6\",\"8\"],\"simple\":false,\"simplicial\":false}\n"
    );
}

#[test]
fn ehrhart_pentagon() {
    assert_eq!(stdout_of(&["ehrhart", "--u", "1,2"]), "[\"1\",\"7/2\",\"7/2\"]\n");
    assert_eq!(stdout_of(&["ehrhart", "--u", "1,2", "--t", "1"]), "\"8\"\n");
    assert_eq!(stdout_of(&["ehrhart", "--u", "1,2", "--format", "csv"]), "1,7/2,7/2\n");
}

#[test]
fn volume_and_fvector() {
    assert_eq!(stdout_of(&["volume", "--u", "1,2"]), "\"7/2\"\n");
    assert_eq!(stdout_of(&["fvector", "--u", "1,2"]), "[\"5\",\"5\",\"1\"]\n");
    assert_eq!(stdout_of(&["fvector", "--u", "2,2"]), "[\"4\",\"4\",\"1\"]\n");
    assert_eq!(stdout_of(&["fvector", "--u", "0,2"]), "[\"3\",\"3\",\"1\"]\n");
}

#[test]
fn hpoly_stellahedron() {
    // 1 + Σ_k C(3,k) t A_k(t) = 1 + 7t + 7t² + t³ for u = (1,2,3).
    assert_eq!(stdout_of(&["hpoly", "--u", "1,2,3"]), "[\"1\",\"7\",\"7\",\"1\"]\n");
}

#[test]
fn vertices_csv_pentagon() {
    assert_eq!(
        stdout_of(&["vertices", "--u", "1,2", "--format", "csv"]),
        "0,0\n0,2\n1,2\n2,0\n2,1\n"
    );
}

#[test]
fn rays_via_md_input() {
    assert_eq!(
        stdout_of(&["rays", "--m", "1,1", "--format", "csv"]),
        "-1,0\n0,-1\n1,1\n"
    );
}

#[test]
fn decompose_pentagon() {
    assert_eq!(
        stdout_of(&["decompose", "--u", "1,2"]),
        "{\"ehrhart\":[\"1\",\"7/2\",\"7/2\"],\"volume\":\"7/2\",\"decomposition\":\
         [{\"size\":2,\"y\":\"1\"},{\"size\":1,\"y\":\"1\"}]}\n"
    );
    // Rational u: volume and decomposition still work, Ehrhart is null.
    let out = stdout_of(&["decompose", "--u", "1/2,3/2"]);
    assert!(out.contains("\"ehrhart\":null"));
    assert!(out.contains("\"volume\":\"7/4\""));
}

#[test]
fn locate_functional() {
    assert_eq!(stdout_of(&["locate", "--u", "1,2", "--c", "1,-1"]), "\"({2},{0},{1})\"\n");
    assert_eq!(
        stdout_of(&[
            "locate",
            "--u",
            "0,0,4,4,4,6,8,8",
            "--c",
            "1,-2,-3,9,8,1,1,5",
        ]),
        "\"({0,2,3},{},{1,6,7},{8},{4,5})\"\n"
    );
}

#[test]
fn faceposet_segment() {
    assert_eq!(
        stdout_of(&["faceposet", "--u", "1"]),
        "{\"nodes\":[{\"partition\":\"({},{0},{1})\",\"dim\":0},\
         {\"partition\":\"({1},{0})\",\"dim\":0},\
         {\"partition\":\"({},{0,1}*)\",\"dim\":1}],\
         \"covers\":[[0,2],[1,2]]}\n"
    );
}

#[test]
fn check_passes() {
    let out = stdout_of(&["check", "--u", "1,2", "--level", "full"]);
    assert!(out.contains("\"passed\":true"));
}

#[test]
fn exit_codes() {
    // Invalid input.
    let (code, err) = failure_of(&["volume"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let (code, _) = failure_of(&["vertices", "--u", "1,0"]);
    assert_eq!(code, 2);
    let (code, _) = failure_of(&["classify", "--u", "1,2", "--m", "1,1"]);
    assert_eq!(code, 2);
    let (code, _) = failure_of(&["locate", "--u", "1,2", "--c", "1,2,3"]);
    assert_eq!(code, 2);
    // Unsupported computations.
    let (code, err) = failure_of(&["hpoly", "--u", "0,0,4,4,4,6,8,8"]);
    assert_eq!(code, 3);
    assert!(err.starts_with("error:"));
    let (code, _) = failure_of(&["ehrhart", "--u", "1/2,1"]);
    assert_eq!(code, 3);
}

#[test]
fn size_guards() {
    let thirteen = "1,1,1,1,1,1,1,1,1,1,1,1,2";
    let (code, err) = failure_of(&["vertices", "--u", thirteen]);
    assert_eq!(code, 2);
    assert!(err.contains("--force"));
    let (code, _) = failure_of(&["faceposet", "--u", thirteen]);
    assert_eq!(code, 2);
    let (code, _) = failure_of(&["check", "--u", "1,2,3,4,5,6,7", "--level", "full"]);
    assert_eq!(code, 2);
    let (code, _) = failure_of(&["ehrhart", "--u", "1,2,3,4,5,6,7"]);
    assert_eq!(code, 2);
}

#[test]
fn jobs_settings_do_not_change_output() {
    let base = stdout_of(&["vertices", "--u", "0,1,2"]);
    for jobs in ["1", "4", "16"] {
        assert_eq!(stdout_of(&["vertices", "--u", "0,1,2", "--jobs", jobs]), base);
    }
    let out = Command::new(env!("CARGO_BIN_EXE_pfpoly"))
        .args(["vertices", "--u", "0,1,2"])
        .env("PFPOLY_JOBS", "8")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), base);
    // A malformed jobs value is rejected.
    let (code, _) = failure_of(&["volume", "--u", "1,2", "--jobs", "zero"]);
    assert_eq!(code, 2);
}

#[test]
fn deterministic_across_runs() {
    for args in [
        vec!["faceposet", "--u", "1,2,3"],
        vec!["vertices", "--u", "0,0,3,3"],
        vec!["facets", "--u", "1,2,3"],
    ] {
        let first = stdout_of(&args);
        for _ in 0..2 {
            assert_eq!(stdout_of(&args), first);
        }
    }
}
