#![allow(dead_code)]

use std::path::PathBuf;

/// Golden file name and the argument vector that produces it.
pub const GOLDEN: &[(&str, &[&str])] = &[
    (
        "triangle_01_n6.csv",
        &["triangle", "--mask", "01", "--n", "6", "--format", "csv"],
    ),
    (
        "triangle_011_n5.json",
        &["triangle", "--mask", "011", "--n", "5", "--format", "json"],
    ),
    (
        "triangle_10_n4.txt",
        &["triangle", "--mask", "10", "--n", "4"],
    ),
    (
        "poly_01_n4_zeros.txt",
        &["poly", "--mask", "01", "--n", "4", "--zeros"],
    ),
    (
        "poly_011_n3_falling.txt",
        &[
            "poly", "--mask", "011", "--n", "3", "--kind", "falling", "--zeros",
        ],
    ),
    (
        "verify_011_n4_oracle.txt",
        &["verify", "--mask", "011", "--n", "4", "--oracle"],
    ),
    ("bounds_01_n5.txt", &["bounds", "--mask", "01", "--n", "5"]),
    ("stirling_n30.txt", &["stirling", "--n", "30"]),
];

/// Argument vector and the exit code it must produce.
pub const EXIT_CODES: &[(&[&str], i32)] = &[
    (&["triangle", "--mask", "01", "--n", "5"], 0),
    (&["verify", "--mask", "01", "--n", "10"], 0),
    (&["verify", "--mask", "011", "--n", "4", "--oracle"], 0),
    (
        &[
            "verify",
            "--mask",
            "011",
            "--n",
            "4",
            "--corrupt-cell",
            "3,2",
        ],
        1,
    ),
    (
        &[
            "verify",
            "--mask",
            "01",
            "--n",
            "6",
            "--corrupt-cell",
            "6,6",
        ],
        1,
    ),
    (&["triangle", "--mask", "XY", "--n", "5"], 2),
    (&["triangle", "--mask", "", "--n", "5"], 2),
    (&["triangle", "--mask", "01", "--n", "0"], 2),
    (
        &["poly", "--mask", "01", "--n", "3", "--kind", "sideways"],
        2,
    ),
    (&["frobnicate"], 2),
    (&[], 2),
    (&["--help"], 0),
    (
        &[
            "triangle",
            "--mask",
            "01",
            "--n",
            "3",
            "--out",
            "/nonexistent-dir/x/out.csv",
        ],
        3,
    ),
    (
        &[
            "bounds",
            "--mask",
            "01",
            "--n",
            "4",
            "--out",
            "/nonexistent-dir/x/out.txt",
        ],
        3,
    ),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Runs the CLI in-process and returns `(exit code, stdout, stderr)`.
pub fn run(args: &[&str]) -> (i32, String, String) {
    let argv = std::iter::once("seqopt").chain(args.iter().copied());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = seqopt::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 stdout"),
        String::from_utf8(err).expect("utf-8 stderr"),
    )
}
