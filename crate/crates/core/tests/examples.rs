//! Runs every example's `run_example` so the examples cannot rot.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }
    };
}

example!(triangle);
example!(oracle_histogram);
example!(explicit_sum);
example!(polynomials);
example!(bounds_report);
example!(color_boards);
example!(stirling);

#[test]
fn triangle_rows_and_sums() {
    let out = triangle::run_example(&"011".parse().unwrap(), 5).unwrap();
    assert!(out.contains("[576, 3220, 5693, 3966, 945]  sum=14400"));
}

#[test]
fn oracle_matches_recurrence() {
    let out = oracle_histogram::run_example().unwrap();
    assert!(!out.contains("MISMATCH"));
    assert!(out.contains("records at {1, 3, 5}"));
}

#[test]
fn explicit_sum_cells() {
    let out = explicit_sum::run_example().unwrap();
    assert!(out.contains("O_01(8, 3) = 13132"));
    assert!(out.contains("subset limit 12"));
}

#[test]
fn polynomial_zeros_vanish() {
    let out = polynomials::run_example().unwrap();
    for line in out.lines() {
        let residuals = line.rsplit_once("p(zero) [").unwrap().1;
        assert!(
            residuals
                .trim_end_matches(']')
                .split(", ")
                .all(|r| r == "0"),
            "{line}"
        );
    }
    assert!(out.contains("zeros [0, -1/3, -4/5, -9/7]"));
}

#[test]
fn bounds_hold() {
    let out = bounds_report::run_example(&"0101".parse().unwrap(), 12).unwrap();
    assert!(out.ends_with("all bounds hold: true\n"));
    let out = bounds_report::run_example(&"110".parse().unwrap(), 9).unwrap();
    assert!(out.contains("Lower"));
    assert!(out.ends_with("all bounds hold: true\n"));
}

#[test]
fn color_boards_aggregate_to_triangle() {
    let out = color_boards::run_example().unwrap();
    assert!(out.contains("3 colours: 254 (triangle 254)"));
}

#[test]
fn stirling_rows_match() {
    let out = stirling::run_example().unwrap();
    assert!(out.contains("0 mismatches"));
}
