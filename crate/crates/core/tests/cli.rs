mod common;

use std::fs;

use common::{golden_path, run, EXIT_CODES, GOLDEN};
use seqopt::cli::format::{
    triangle_from_csv, triangle_from_json, triangle_to_csv, triangle_to_json,
};
use seqopt::{Mask, Triangle};

/// Set `UPDATE_GOLDEN=1` to rewrite the files from the current output.
#[test]
fn outputs_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in GOLDEN {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{name}: {err}");
        let path = golden_path(name);
        if update {
            fs::write(&path, &out).unwrap();
            continue;
        }
        let want = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out, want, "{name} differs from golden output");
    }
}

#[test]
fn exit_code_table() {
    for (args, want) in EXIT_CODES {
        let (code, _, err) = run(args);
        assert_eq!(code, *want, "{args:?}: {err}");
        if *want >= 2 {
            assert!(!err.is_empty(), "{args:?} should explain itself on stderr");
        }
    }
}

#[test]
fn golden_triangles_round_trip_byte_for_byte() {
    let csv = fs::read_to_string(golden_path("triangle_01_n6.csv")).unwrap();
    let tri = triangle_from_csv(&csv, &Mask::stirling()).unwrap();
    assert_eq!(tri, Triangle::new(&Mask::stirling(), 6).unwrap());
    assert_eq!(triangle_to_csv(&tri), csv);

    let json = fs::read_to_string(golden_path("triangle_011_n5.json")).unwrap();
    let tri = triangle_from_json(&json).unwrap();
    assert_eq!(tri, Triangle::new(&"011".parse().unwrap(), 5).unwrap());
    assert_eq!(triangle_to_json(&tri), json);
}

#[test]
fn large_values_survive_round_trip() {
    let mask: Mask = "0110".parse().unwrap();
    let tri = Triangle::new(&mask, 25).unwrap();
    assert!(tri.row_sum(25).bits() > 128);
    let csv = triangle_to_csv(&tri);
    assert_eq!(triangle_from_csv(&csv, &mask).unwrap(), tri);
    let json = triangle_to_json(&tri);
    let back = triangle_from_json(&json).unwrap();
    assert_eq!(back, tri);
    assert_eq!(triangle_to_json(&back), json);
}

#[test]
fn out_flag_writes_file_and_leaves_stdout_empty() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tri.csv");
    let (code, out, _) = run(&[
        "triangle",
        "--mask",
        "01",
        "--n",
        "6",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        fs::read_to_string(golden_path("triangle_01_n6.csv")).unwrap()
    );
}

#[test]
fn corrupted_cell_reports_failing_checks() {
    let (code, out, _) = run(&[
        "verify",
        "--mask",
        "011",
        "--n",
        "4",
        "--corrupt-cell",
        "3,2",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("row-sum       FAIL"));
    assert!(out.ends_with("verdict: FAIL\n"));
}

#[test]
fn small_oracle_budget_warns_but_passes() {
    let (code, out, err) = run(&[
        "verify", "--mask", "011", "--n", "5", "--oracle", "--budget", "1000",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(err.contains("warning: oracle skipped for n=5"));
    assert!(out.contains("oracle        PASS    n=1..=4"));
}

#[test]
fn stirling_check_only_runs_for_01() {
    let (code, out, _) = run(&["verify", "--mask", "1101", "--n", "8"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("stirling"));
}

#[test]
fn bounds_json_is_well_formed() {
    let (code, out, _) = run(&[
        "bounds", "--mask", "101", "--n", "6", "--format", "json", "--m1", "1,2",
    ]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["mask"], "101");
    assert_eq!(v["tails"].as_array().unwrap().len(), 2);
}
