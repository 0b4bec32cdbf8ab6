//! Flat-file renderings of a [`Triangle`] and their parsers.
//!
//! Big integers are always written as decimal strings so nothing is lost to
//! floating point on the consumer side.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::numbers::{Mask, Triangle};

pub const CSV_HEADER: &str = "n,m,value";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

fn cell_lines(tri: &Triangle, out: &mut String) {
    for (n, m, v) in tri.cells() {
        writeln!(out, "{n},{m},{v}").unwrap();
    }
}

/// Header plus one `n,m,value` line per support cell.
pub fn triangle_to_csv(tri: &Triangle) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    cell_lines(tri, &mut out);
    out
}

/// The CSV body without its header.
pub fn triangle_to_plain(tri: &Triangle) -> String {
    let mut out = String::new();
    cell_lines(tri, &mut out);
    out
}

/// `{"mask": "01", "k": 1, "rows": {"1": {"1": "1"}, ...}}`, rows and cells
/// in numeric order.
pub fn triangle_to_json(tri: &Triangle) -> String {
    let mut rows = Map::new();
    for n in 1..=tri.max_n() {
        let cells: Map<String, Value> = tri
            .support(n)
            .map(|m| (m.to_string(), Value::String(tri.value(n, m).to_string())))
            .collect();
        rows.insert(n.to_string(), Value::Object(cells));
    }
    let doc = json!({
        "mask": tri.mask().to_string(),
        "k": tri.mask().k(),
        "rows": rows,
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("serializing a JSON value");
    out.push('\n');
    out
}

pub fn render_triangle(tri: &Triangle, format: Format) -> String {
    match format {
        Format::Csv => triangle_to_csv(tri),
        Format::Json => triangle_to_json(tri),
        Format::Plain => triangle_to_plain(tri),
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_big(s: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| parse_err(format!("not a nonnegative integer: {s:?}")))
}

/// Assembles rows from sparse `(n, m) -> value` cells, requiring every
/// support cell of rows `1..=max_n` and nothing else.
fn assemble(mask: Mask, cells: BTreeMap<(usize, i64), BigUint>) -> Result<Triangle> {
    let max_n = cells
        .keys()
        .map(|&(n, _)| n)
        .max()
        .ok_or_else(|| parse_err("no cells"))?;
    let offset = mask.last() as i64;
    let mut rows = Vec::with_capacity(max_n);
    let mut used = 0;
    for n in 1..=max_n {
        let mut row = Vec::with_capacity(n);
        for m in offset..offset + n as i64 {
            let v = cells
                .get(&(n, m))
                .ok_or_else(|| parse_err(format!("missing cell n={n}, m={m}")))?;
            row.push(v.clone());
            used += 1;
        }
        rows.push(row);
    }
    if used != cells.len() {
        return Err(parse_err("cells outside the support"));
    }
    Triangle::from_rows(mask, rows)
}

/// Parses [`triangle_to_csv`] output (the header is optional, so plain
/// output parses too). CSV carries no mask, so the caller supplies it.
pub fn triangle_from_csv(text: &str, mask: &Mask) -> Result<Triangle> {
    let mut cells = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.is_empty() || (lineno == 0 && line == CSV_HEADER) {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let [n, m, v] = fields[..] else {
            return Err(parse_err(format!("line {}: expected 3 fields", lineno + 1)));
        };
        let n: usize = n
            .parse()
            .map_err(|_| parse_err(format!("line {}: bad n {n:?}", lineno + 1)))?;
        let m: i64 = m
            .parse()
            .map_err(|_| parse_err(format!("line {}: bad m {m:?}", lineno + 1)))?;
        if cells.insert((n, m), parse_big(v)?).is_some() {
            return Err(parse_err(format!("duplicate cell n={n}, m={m}")));
        }
    }
    assemble(mask.clone(), cells)
}

pub fn triangle_from_json(text: &str) -> Result<Triangle> {
    let doc: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let mask: Mask = doc["mask"]
        .as_str()
        .ok_or_else(|| parse_err("missing \"mask\""))?
        .parse()?;
    if doc["k"].as_u64() != Some(mask.k() as u64) {
        return Err(parse_err("\"k\" does not match the mask length"));
    }
    let rows = doc["rows"]
        .as_object()
        .ok_or_else(|| parse_err("missing \"rows\""))?;
    let mut cells = BTreeMap::new();
    for (n, row) in rows {
        let n: usize = n
            .parse()
            .map_err(|_| parse_err(format!("bad row key {n:?}")))?;
        let row = row
            .as_object()
            .ok_or_else(|| parse_err(format!("row {n} is not an object")))?;
        for (m, v) in row {
            let m: i64 = m
                .parse()
                .map_err(|_| parse_err(format!("bad cell key {m:?}")))?;
            let v = v
                .as_str()
                .ok_or_else(|| parse_err(format!("cell n={n}, m={m} is not a string")))?;
            cells.insert((n, m), parse_big(v)?);
        }
    }
    assemble(mask, cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Mask {
        s.parse().unwrap()
    }

    #[test]
    fn csv_layout() {
        let tri = Triangle::new(&m("01"), 4).unwrap();
        let csv = triangle_to_csv(&tri);
        assert!(csv.starts_with("n,m,value\n1,1,1\n2,1,1\n"));
        assert!(csv.lines().any(|l| l == "4,2,11"));
        let one = Triangle::new(&m("01"), 1).unwrap();
        assert_eq!(triangle_to_plain(&one), "1,1,1\n");
    }

    #[test]
    fn json_layout() {
        let tri = Triangle::new(&m("10"), 2).unwrap();
        let doc: Value = serde_json::from_str(&triangle_to_json(&tri)).unwrap();
        assert_eq!(
            doc,
            json!({"mask": "10", "k": 1, "rows": {"1": {"0": "1"}, "2": {"0": "1", "1": "1"}}})
        );
    }

    #[test]
    fn json_keeps_numeric_row_order() {
        let tri = Triangle::new(&m("01"), 12).unwrap();
        let text = triangle_to_json(&tri);
        let pos = |needle: &str| text.find(needle).unwrap();
        assert!(pos("\"2\": {") < pos("\"10\": {"));
    }

    #[test]
    fn round_trips() {
        for mask in ["01", "110", "0101"] {
            let tri = Triangle::new(&m(mask), 9).unwrap();
            let csv = triangle_to_csv(&tri);
            let back = triangle_from_csv(&csv, &m(mask)).unwrap();
            assert_eq!(back, tri);
            assert_eq!(triangle_to_csv(&back), csv);
            assert_eq!(
                triangle_from_csv(&triangle_to_plain(&tri), &m(mask)).unwrap(),
                tri
            );

            let json = triangle_to_json(&tri);
            let back = triangle_from_json(&json).unwrap();
            assert_eq!(back, tri);
            assert_eq!(triangle_to_json(&back), json);
        }
    }

    #[test]
    fn rejects_malformed() {
        let mask = m("01");
        assert!(triangle_from_csv("", &mask).is_err());
        assert!(triangle_from_csv("n,m,value\n1,1\n", &mask).is_err());
        assert!(triangle_from_csv("1,1,x\n", &mask).is_err());
        assert!(triangle_from_csv("1,1,1\n1,1,1\n", &mask).is_err());
        assert!(triangle_from_csv("1,1,1\n2,1,1\n", &mask).is_err());
        assert!(triangle_from_csv("1,1,1\n1,2,0\n", &mask).is_err());
        assert!(triangle_from_csv("1,0,1\n", &mask).is_err());
        assert!(triangle_from_json("{}").is_err());
        assert!(triangle_from_json(r#"{"mask":"01","k":2,"rows":{"1":{"1":"1"}}}"#).is_err());
        assert!(triangle_from_json(r#"{"mask":"01","k":1,"rows":{"1":{"1":1}}}"#).is_err());
        assert!(triangle_from_json(r#"{"mask":"01","k":1,"rows":{"1":{"1":"1"}}}"#).is_ok());
    }
}
