//! JSON input and output. Rationals are always strings (`"3/7"`, `"-2"`).
//!
//! Weights file:
//!
//! ```json
//! { "pyramid": [1, 2], "lambda": { "1": ["1"], "2": ["0", "1/2"] } }
//! ```
//!
//! Integer entries may also be given as JSON numbers. Every writer emits
//! keys and entries in a fixed order, so equal inputs give equal bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, rat_int, OperatorPolynomial, Rational, SparseVector};
use crate::patterns::GTPattern;
use crate::pyramid::{HighestWeightSpec, Pyramid};
use crate::repbuild::{BranchingDatum, OpKey, Representation};

#[derive(Deserialize)]
struct WeightsFile {
    pyramid: Vec<i64>,
    lambda: BTreeMap<String, Vec<Value>>,
}

fn rational_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(rat_int)
            .ok_or_else(|| Error::Input(format!("number {n} is not an integer; write rationals as strings"))),
        other => Err(Error::Input(format!("expected a rational string, got {other}"))),
    }
}

/// Parses a weights file; `pyramid_override` replaces the file's row lengths.
pub fn parse_weights(text: &str, pyramid_override: Option<&[i64]>) -> Result<HighestWeightSpec> {
    let file: WeightsFile = serde_json::from_str(text).map_err(|e| Error::Input(format!("weights file: {e}")))?;
    let rows = pyramid_override.unwrap_or(&file.pyramid);
    let pyramid = Pyramid::new(rows)?;
    let n = pyramid.height();
    if let Some(key) = file.lambda.keys().find(|k| k.parse::<usize>().map_or(true, |i| i == 0 || i > n)) {
        return Err(Error::ShapeMismatch(format!("lambda row key '{key}' is not in 1..={n}")));
    }
    let grid = (1..=n)
        .map(|i| {
            let row = file
                .lambda
                .get(&i.to_string())
                .ok_or_else(|| Error::ShapeMismatch(format!("lambda row {i} missing")))?;
            row.iter().map(rational_value).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    HighestWeightSpec::new(pyramid, grid)
}

/// Parses comma-separated pyramid rows such as `1,2,2`.
pub fn parse_rows(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| Error::Input(format!("bad pyramid row '{s}'"))))
        .collect()
}

fn grid_strings(grid: &[Vec<Rational>]) -> BTreeMap<String, Vec<String>> {
    grid.iter()
        .enumerate()
        .map(|(i, row)| ((i + 1).to_string(), row.iter().map(ToString::to_string).collect()))
        .collect()
}

#[derive(Serialize)]
struct WeightsOut {
    pyramid: Vec<usize>,
    lambda: BTreeMap<String, Vec<String>>,
}

/// The weights file for `spec`.
pub fn weights_json(spec: &HighestWeightSpec) -> String {
    to_json(&WeightsOut { pyramid: spec.pyramid().rows().to_vec(), lambda: grid_strings(spec.grid()) })
}

#[derive(Serialize)]
struct ColumnOut {
    k: usize,
    triangle: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct PatternOut {
    index: usize,
    columns: Vec<ColumnOut>,
}

#[derive(Serialize)]
struct PatternsOut {
    pyramid: Vec<usize>,
    lambda: BTreeMap<String, Vec<String>>,
    dim: usize,
    patterns: Vec<PatternOut>,
}

fn pattern_out(index: usize, p: &GTPattern) -> PatternOut {
    PatternOut {
        index,
        columns: p
            .columns()
            .iter()
            .map(|c| ColumnOut {
                k: c.k(),
                triangle: c.entries().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
            })
            .collect(),
    }
}

/// Every basis pattern, rows listed from `n` down to the column's top row.
pub fn patterns_json(rep: &Representation) -> String {
    let spec = rep.spec();
    to_json(&PatternsOut {
        pyramid: spec.pyramid().rows().to_vec(),
        lambda: grid_strings(spec.grid()),
        dim: rep.dim(),
        patterns: rep.basis().patterns().iter().enumerate().map(|(i, p)| pattern_out(i, p)).collect(),
    })
}

#[derive(Serialize)]
struct CoeffOut {
    power: usize,
    entries: Vec<(usize, usize, String)>,
}

#[derive(Serialize)]
struct MatrixOut<'a> {
    op: &'a str,
    r: usize,
    dim: usize,
    coeffs: Vec<CoeffOut>,
}

/// One operator polynomial; zero coefficients are omitted.
pub fn matrix_json(key: OpKey, poly: &OperatorPolynomial) -> String {
    let coeffs = poly
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(power, m)| CoeffOut { power, entries: m.entries().map(|(r, c, v)| (r, c, v.to_string())).collect() })
        .collect();
    to_json(&MatrixOut { op: key.name(), r: key.index(), dim: *poly.shape(), coeffs })
}

/// File name for an exported operator, e.g. `tau_low_1.json`.
pub fn matrix_file_name(key: OpKey) -> String {
    format!("{key}.json")
}

#[derive(Serialize)]
struct BranchOut {
    mu: BTreeMap<String, Vec<String>>,
    dim: u64,
    vector: Vec<(usize, String)>,
}

#[derive(Serialize)]
struct BranchesOut {
    pyramid: Vec<usize>,
    lambda: BTreeMap<String, Vec<String>>,
    dim: usize,
    branches: Vec<BranchOut>,
}

fn vector_entries(v: &SparseVector) -> Vec<(usize, String)> {
    v.iter().map(|(i, x)| (i, x.to_string())).collect()
}

/// Branch weights with their dimensions and highest vectors.
pub fn branches_json(rep: &Representation, data: &[BranchingDatum]) -> String {
    let spec = rep.spec();
    to_json(&BranchesOut {
        pyramid: spec.pyramid().rows().to_vec(),
        lambda: grid_strings(spec.grid()),
        dim: rep.dim(),
        branches: data
            .iter()
            .map(|d| BranchOut { mu: grid_strings(d.weight.grid()), dim: d.dim, vector: vector_entries(&d.vector) })
            .collect(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn weights_round_trip() {
        let text = r#"{ "pyramid": [1, 2], "lambda": { "1": ["1"], "2": [0, "1/2"] } }"#;
        let spec = parse_weights(text, None).unwrap();
        assert_eq!(spec.lambda(2, 2), &rat(1, 2));
        let again = parse_weights(&weights_json(&spec), None).unwrap();
        assert_eq!(again, spec);
    }

    #[test]
    fn malformed_weights_are_input_errors() {
        assert!(matches!(parse_weights("{", None), Err(Error::Input(_))));
        let bad = r#"{ "pyramid": [1, 1], "lambda": { "1": ["0.5"], "2": ["0"] } }"#;
        assert!(matches!(parse_weights(bad, None), Err(Error::Input(_))));
        let missing = r#"{ "pyramid": [1, 1], "lambda": { "1": ["1"] } }"#;
        assert!(matches!(parse_weights(missing, None), Err(Error::ShapeMismatch(_))));
        let extra = r#"{ "pyramid": [1], "lambda": { "1": ["1"], "7": ["0"] } }"#;
        assert!(matches!(parse_weights(extra, None), Err(Error::ShapeMismatch(_))));
        let float = r#"{ "pyramid": [1], "lambda": { "1": [0.5] } }"#;
        assert!(matches!(parse_weights(float, None), Err(Error::Input(_))));
    }

    #[test]
    fn pyramid_override_and_rows() {
        let text = r#"{ "pyramid": [1], "lambda": { "1": ["1"], "2": ["0"] } }"#;
        assert!(parse_weights(text, Some(&[1, 1])).is_ok());
        assert_eq!(parse_rows("1, 2,2").unwrap(), vec![1, 2, 2]);
        assert!(parse_rows("1,x").is_err());
    }
}
