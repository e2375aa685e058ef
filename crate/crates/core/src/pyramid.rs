//! Pyramid shapes and validated highest weights.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactalg::{is_integer, rat_int, Rational, ScalarPoly, UniPoly};

/// Left-justified pyramid with row lengths `p_1 <= ... <= p_n` (top to bottom).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pyramid {
    rows: Vec<usize>,
    heights: Vec<usize>,
}

impl Pyramid {
    pub fn new(rows: &[i64]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidRow("pyramid must have at least one row".into()));
        }
        if let Some(bad) = rows.iter().find(|&&p| p <= 0) {
            return Err(Error::InvalidRow(format!("row length {bad} is not positive")));
        }
        if rows.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotLeftJustified { rows: rows.to_vec() });
        }
        let rows: Vec<usize> = rows.iter().map(|&p| p as usize).collect();
        let width = *rows.last().unwrap();
        let heights = (1..=width).map(|k| rows.iter().filter(|&&p| p >= k).count()).collect();
        Ok(Self { rows, heights })
    }

    /// The one-column pyramid `(1, ..., 1)` of height `n`.
    pub fn one_column(n: usize) -> Self {
        Self::new(&vec![1; n]).expect("one-column pyramid is valid")
    }

    /// Number of rows `n`.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Row lengths `p_1, ..., p_n`.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// `p_i` for 1-based `i`.
    pub fn row(&self, i: usize) -> usize {
        self.rows[i - 1]
    }

    /// Number of columns `l = p_n`.
    pub fn width(&self) -> usize {
        self.heights.len()
    }

    /// Total number of bricks `N`.
    pub fn bricks(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Column heights `q_1 >= ... >= q_l`.
    pub fn column_heights(&self) -> &[usize] {
        &self.heights
    }

    /// `i(k) = min { i : p_i >= k }`, the top row of column `k`.
    pub fn column_start(&self, k: usize) -> usize {
        self.height() - self.heights[k - 1] + 1
    }

    /// `p_1 + ... + p_r`.
    pub fn partial_sum(&self, r: usize) -> usize {
        self.rows[..r].iter().sum()
    }

    pub fn is_one_column(&self) -> bool {
        self.width() == 1
    }
}

/// Weight vector `(lambda_{i(k)}^{(k)}, ..., lambda_n^{(k)})` of column `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnWeight {
    pub k: usize,
    pub start_row: usize,
    pub weights: Vec<Rational>,
}

/// Highest weight `lambda(u)` satisfying dominance and generality.
///
/// Entry `(i, k)` is `lambda_i^{(k)}`, so that
/// `lambda_i(u) = (u + lambda_i^{(1)}) ... (u + lambda_i^{(p_i)})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HighestWeightSpec {
    pyramid: Pyramid,
    entries: Vec<Vec<Rational>>,
}

impl HighestWeightSpec {
    /// Checks shape, dominance and generality; nothing is constructed on failure.
    pub fn new(pyramid: Pyramid, grid: Vec<Vec<Rational>>) -> Result<Self> {
        if grid.len() != pyramid.height() {
            return Err(Error::ShapeMismatch(format!("expected {} rows, got {}", pyramid.height(), grid.len())));
        }
        for (i, row) in grid.iter().enumerate() {
            if row.len() != pyramid.rows[i] {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries, pyramid row length is {}",
                    i + 1,
                    row.len(),
                    pyramid.rows[i]
                )));
            }
        }
        for i in 1..pyramid.height() {
            for k in 1..=pyramid.row(i) {
                let d = &grid[i - 1][k - 1] - &grid[i][k - 1];
                if !is_integer(&d) || d.is_negative() {
                    return Err(Error::NotDominant { i, k });
                }
            }
        }
        let cells: Vec<(usize, usize)> =
            (1..=pyramid.height()).flat_map(|i| (1..=pyramid.row(i)).map(move |k| (i, k))).collect();
        for (a, &(i, k)) in cells.iter().enumerate() {
            for &(j, m) in &cells[a + 1..] {
                if k != m && is_integer(&(&grid[i - 1][k - 1] - &grid[j - 1][m - 1])) {
                    return Err(Error::NotGeneric { i, k, j, m });
                }
            }
        }
        Ok(Self { pyramid, entries: grid })
    }

    pub fn pyramid(&self) -> &Pyramid {
        &self.pyramid
    }

    pub fn n(&self) -> usize {
        self.pyramid.height()
    }

    /// `lambda_i^{(k)}`, 1-based.
    pub fn lambda(&self, i: usize, k: usize) -> &Rational {
        &self.entries[i - 1][k - 1]
    }

    /// `l_i^{(k)} = lambda_i^{(k)} - i + 1`.
    pub fn shifted(&self, i: usize, k: usize) -> Rational {
        self.lambda(i, k) - rat_int(i as i64 - 1)
    }

    pub fn grid(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// `lambda_i(u)`.
    pub fn weight_poly(&self, i: usize) -> Result<ScalarPoly> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange(format!("row {i} not in 1..={}", self.n())));
        }
        Ok(UniPoly::from_linear_factors(&self.entries[i - 1]))
    }

    pub fn column_weight(&self, k: usize) -> ColumnWeight {
        let start_row = self.pyramid.column_start(k);
        let weights = (start_row..=self.n()).map(|i| self.lambda(i, k).clone()).collect();
        ColumnWeight { k, start_row, weights }
    }

    pub fn column_weights(&self) -> Vec<ColumnWeight> {
        (1..=self.pyramid.width()).map(|k| self.column_weight(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn derived_quantities() {
        let p = Pyramid::new(&[1]).unwrap();
        assert_eq!((p.height(), p.bricks(), p.column_heights()), (1, 1, &[1][..]));
        let p = Pyramid::new(&[1, 2]).unwrap();
        assert_eq!((p.height(), p.bricks(), p.width()), (2, 3, 2));
        assert_eq!(p.column_heights(), &[2, 1]);
        assert_eq!(p.column_start(2), 2);
        assert_eq!(Pyramid::new(&[1, 1, 1]).unwrap().column_heights(), &[3]);
        assert_eq!(Pyramid::new(&[2, 2]).unwrap().column_heights(), &[2, 2]);
    }

    #[test]
    fn pyramid_errors() {
        assert!(matches!(Pyramid::new(&[2, 1]), Err(Error::NotLeftJustified { .. })));
        assert!(matches!(Pyramid::new(&[0, 1]), Err(Error::InvalidRow(_))));
        assert!(matches!(Pyramid::new(&[-1]), Err(Error::InvalidRow(_))));
        assert!(matches!(Pyramid::new(&[]), Err(Error::InvalidRow(_))));
    }

    #[test]
    fn validation() {
        let p11 = Pyramid::new(&[1, 1]).unwrap();
        assert!(HighestWeightSpec::new(p11.clone(), vec![ints(&[1]), ints(&[0])]).is_ok());
        assert_eq!(
            HighestWeightSpec::new(p11.clone(), vec![ints(&[0]), ints(&[1])]),
            Err(Error::NotDominant { i: 1, k: 1 })
        );
        assert!(matches!(HighestWeightSpec::new(p11, vec![ints(&[1]), ints(&[0, 1])]), Err(Error::ShapeMismatch(_))));

        let p12 = Pyramid::new(&[1, 2]).unwrap();
        let ok = HighestWeightSpec::new(p12.clone(), vec![ints(&[1]), vec![rat_int(0), rat(1, 2)]]);
        assert!(ok.is_ok());
        assert_eq!(
            HighestWeightSpec::new(p12, vec![ints(&[1]), ints(&[0, 2])]),
            Err(Error::NotGeneric { i: 1, k: 1, j: 2, m: 2 })
        );
    }

    #[test]
    fn weight_polynomials() {
        let p12 = Pyramid::new(&[1, 2]).unwrap();
        let w = HighestWeightSpec::new(p12, vec![ints(&[1]), vec![rat_int(0), rat(1, 2)]]).unwrap();
        assert_eq!(w.weight_poly(1).unwrap(), UniPoly::linear(rat_int(1)));
        assert_eq!(w.weight_poly(2).unwrap(), UniPoly::from_coeffs((), vec![rat_int(0), rat(1, 2), rat_int(1)]));
        assert!(w.weight_poly(3).is_err());
        let zero = HighestWeightSpec::new(Pyramid::new(&[3]).unwrap(), vec![vec![rat_int(0), rat(1, 3), rat(2, 3)]]);
        assert!(zero.is_ok());
        let w = HighestWeightSpec::new(Pyramid::new(&[1]).unwrap(), vec![ints(&[0])]).unwrap();
        assert_eq!(w.weight_poly(1).unwrap(), UniPoly::from_coeffs((), ints(&[0, 1])));
    }
}
