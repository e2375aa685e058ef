#![allow(dead_code)]

use wgt_core::exactalg::parse_rational;
use wgt_core::{HighestWeightSpec, Pyramid, Rational, Representation};

pub fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

pub fn spec(rows: &[i64], grid: &[&[&str]]) -> HighestWeightSpec {
    let grid = grid.iter().map(|row| row.iter().map(|s| q(s)).collect()).collect();
    HighestWeightSpec::new(Pyramid::new(rows).unwrap(), grid).unwrap()
}

pub fn rep(rows: &[i64], grid: &[&[&str]]) -> Representation {
    Representation::new(spec(rows, grid))
}

/// (name, rows, grid, dimension).
pub type Configuration = (&'static str, Vec<i64>, Vec<Vec<&'static str>>, usize);

/// The acceptance configurations.
pub fn configurations() -> Vec<Configuration> {
    vec![
        ("p=(1)", vec![1], vec![vec!["3/7"]], 1),
        ("p=(1,1)", vec![1, 1], vec![vec!["1"], vec!["0"]], 2),
        ("p=(1,2)", vec![1, 2], vec![vec!["1"], vec!["0", "1/2"]], 2),
        ("p=(2,2)", vec![2, 2], vec![vec!["2", "1/2"], vec!["0", "-1/2"]], 6),
        ("p=(1,1,1)", vec![1, 1, 1], vec![vec!["2"], vec!["1"], vec!["0"]], 8),
    ]
}

pub fn rep_of(rows: &[i64], grid: &[Vec<&str>]) -> Representation {
    let g: Vec<&[&str]> = grid.iter().map(|r| r.as_slice()).collect();
    rep(rows, &g)
}
