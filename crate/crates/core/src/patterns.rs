//! Gelfand–Tsetlin patterns `Lambda(u)` and the basis they index.
//!
//! A pattern is stored column by column. For column `k` the entries
//! `lambda_{rj}^{(k)}`, `i(k) <= j <= r <= n`, form a classical triangle whose
//! entries all differ from `lambda_n^{(k)}` by integers, so each column keeps
//! that rational base plus an integer-offset triangle.
//!
//! Basis order: lexicographic in column `k` (column 1 most significant),
//! each column ordered by its triangle read top row to bottom row, left to
//! right, larger values first. The highest pattern therefore has index 0.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{rat_int, to_i64, Rational, ScalarPoly, UniPoly};
use crate::exec::Execution;
use crate::pyramid::{ColumnWeight, HighestWeightSpec};

/// Column `k` of a pattern: a classical triangle with rational base.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColumnTriangle {
    k: usize,
    start_row: usize,
    base: Rational,
    /// `rows[0]` is row `n` (length `q_k`), the last row is row `i(k)` (length 1).
    rows: Vec<Vec<i64>>,
}

impl ColumnTriangle {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn start_row(&self) -> usize {
        self.start_row
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    /// Integer offsets relative to [`ColumnTriangle::base`], top row first.
    pub fn offsets(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn n(&self) -> usize {
        self.start_row + self.rows[0].len() - 1
    }

    fn offset(&self, r: usize, i: usize) -> Option<i64> {
        if i < self.start_row || i > r || r > self.n() {
            return None;
        }
        Some(self.rows[self.n() - r][i - self.start_row])
    }

    fn value(&self, offset: i64) -> Rational {
        &self.base + rat_int(offset)
    }

    /// Rows of full rational entries, top row first.
    pub fn entries(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|row| row.iter().map(|&o| self.value(o)).collect()).collect()
    }
}

/// Rows of integer entries strictly below `top` in a classical triangle,
/// in lexicographically descending order.
fn rows_below(top: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(top.len() - 1)];
    for j in 0..top.len() - 1 {
        let mut next = Vec::new();
        for prefix in &out {
            for x in (top[j + 1]..=top[j]).rev() {
                let mut row = prefix.clone();
                row.push(x);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// All classical triangles with the given top row (integers, weakly decreasing).
pub fn classical_triangles(top: &[i64]) -> Vec<Vec<Vec<i64>>> {
    if top.len() <= 1 {
        return vec![vec![top.to_vec()]];
    }
    let mut out = Vec::new();
    for row in rows_below(top) {
        for rest in classical_triangles(&row) {
            let mut t = Vec::with_capacity(top.len());
            t.push(top.to_vec());
            t.extend(rest);
            out.push(t);
        }
    }
    out
}

/// All triangles below a column weight, in basis order.
pub fn enumerate_column_patterns(cw: &ColumnWeight) -> Vec<ColumnTriangle> {
    let base = cw.weights.last().expect("column weight is nonempty").clone();
    let top: Vec<i64> =
        cw.weights.iter().map(|w| to_i64(&(w - &base)).expect("column weight has integer steps")).collect();
    classical_triangles(&top)
        .into_iter()
        .map(|rows| ColumnTriangle { k: cw.k, start_row: cw.start_row, base: base.clone(), rows })
        .collect()
}

/// Dimension of the irreducible `gl_q` module with highest weight `a`:
/// `prod_{i<j} (a_i - a_j + j - i) / (j - i)`.
pub fn weyl_dimension(a: &[Rational]) -> u64 {
    let mut acc = Rational::one();
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            let gap = rat_int((j - i) as i64);
            acc *= (&a[i] - &a[j] + &gap) / gap;
        }
    }
    to_i64(&acc).and_then(|d| u64::try_from(d).ok()).expect("Weyl dimension is a nonnegative integer")
}

/// A Gelfand–Tsetlin pattern associated with a highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GTPattern {
    columns: Vec<ColumnTriangle>,
}

impl GTPattern {
    pub fn columns(&self) -> &[ColumnTriangle] {
        &self.columns
    }

    pub fn n(&self) -> usize {
        self.columns[0].n()
    }

    /// Number of columns with an entry in row `i`, i.e. `p_i`.
    pub fn row_length(&self, i: usize) -> usize {
        self.columns.iter().filter(|c| c.start_row <= i).count()
    }

    /// `lambda_{ri}^{(k)}`, or `None` when the index is not part of the pattern.
    pub fn entry(&self, r: usize, i: usize, k: usize) -> Option<Rational> {
        let col = self.columns.get(k.checked_sub(1)?)?;
        col.offset(r, i).map(|o| col.value(o))
    }

    /// `l_{ri}^{(k)} = lambda_{ri}^{(k)} - i + 1`.
    pub fn shifted(&self, r: usize, i: usize, k: usize) -> Option<Rational> {
        self.entry(r, i, k).map(|x| x - rat_int(i as i64 - 1))
    }

    /// `lambda_{ri}(u) = (u + lambda_{ri}^{(1)}) ... (u + lambda_{ri}^{(p_i)})`.
    pub fn row_poly(&self, r: usize, i: usize) -> Result<ScalarPoly> {
        if i == 0 || i > r || r > self.n() {
            return Err(Error::IndexOutOfRange(format!("(r={r}, i={i}) with n={}", self.n())));
        }
        let roots: Vec<Rational> = (1..=self.row_length(i)).map(|k| self.entry(r, i, k).unwrap()).collect();
        Ok(UniPoly::from_linear_factors(&roots))
    }

    /// Evaluates `lambda_{ri}(x)` without building the polynomial.
    pub fn row_value(&self, r: usize, i: usize, x: &Rational) -> Rational {
        (1..=self.row_length(i)).map(|k| x + self.entry(r, i, k).unwrap()).product()
    }

    /// Whether every entry equals the entry of the top row above it.
    pub fn is_highest(&self) -> bool {
        self.columns.iter().all(|c| {
            let top = &c.rows[0];
            c.rows.iter().all(|row| row.iter().zip(top).all(|(a, b)| a == b))
        })
    }

    /// The pattern with `lambda_{ri}^{(k)}` changed by `sign` (+1 or -1), or
    /// `None` when the result violates interlacing.
    pub fn moved(&self, r: usize, i: usize, k: usize, sign: i64) -> Result<Option<GTPattern>> {
        let col = self.columns.get(k.wrapping_sub(1)).ok_or_else(|| Error::IndexOutOfRange(format!("column {k}")))?;
        let current = col.offset(r, i).ok_or_else(|| Error::IndexOutOfRange(format!("entry (r={r}, i={i}, k={k})")))?;
        if r == self.n() {
            return Err(Error::ImmutableTopRow);
        }
        assert!(sign == 1 || sign == -1, "moves are by one unit");
        let x = current + sign;
        let above_left = col.offset(r + 1, i).unwrap();
        let above_right = col.offset(r + 1, i + 1).unwrap();
        if x > above_left || x < above_right {
            return Ok(None);
        }
        if r > col.start_row {
            if let Some(below) = col.offset(r - 1, i) {
                if x < below {
                    return Ok(None);
                }
            }
            if i > col.start_row {
                if let Some(below_left) = col.offset(r - 1, i - 1) {
                    if x > below_left {
                        return Ok(None);
                    }
                }
            }
        }
        let mut out = self.clone();
        let c = &mut out.columns[k - 1];
        let n = c.n();
        c.rows[n - r][i - c.start_row] = x;
        Ok(Some(out))
    }

    /// Normalization constant `N_Lambda` linking `zeta_Lambda = N_Lambda xi_Lambda`.
    ///
    /// Product over `1 <= i <= r <= n-1`, over `k <= p_i` and the columns `m`
    /// of the listed rows, of rising products of length
    /// `l_i^{(k)} - l_{ri}^{(k)}` starting at `l_j^{(m)} - l_i^{(k)}`
    /// (for `j < i`) or `l_{r-1,j}^{(m)} - l_i^{(k)}` (for `i <= j <= r-1`).
    pub fn normalization_constant(&self) -> Rational {
        let n = self.n();
        let l = |r: usize, i: usize, k: usize| self.shifted(r, i, k).unwrap();
        let mut acc = Rational::one();
        for r in 1..n {
            for i in 1..=r {
                for k in 1..=self.row_length(i) {
                    let li = l(n, i, k);
                    let steps = to_i64(&(&li - l(r, i, k))).expect("same-column difference is an integer");
                    if steps == 0 {
                        continue;
                    }
                    let mut starts = Vec::new();
                    for j in 1..i {
                        starts.extend((1..=self.row_length(j)).map(|m| l(n, j, m) - &li));
                    }
                    if r >= 2 {
                        for j in i..r {
                            starts.extend((1..=self.row_length(j)).map(|m| l(r - 1, j, m) - &li));
                        }
                    }
                    for s in starts {
                        for t in 0..steps {
                            acc *= &s + rat_int(t);
                        }
                    }
                }
            }
        }
        debug_assert!(!acc.is_zero(), "normalization constant vanished");
        acc
    }
}

/// The ordered basis `{ xi_Lambda }` of `L(lambda(u))`.
#[derive(Clone, Debug)]
pub struct BasisIndex {
    spec: HighestWeightSpec,
    per_column: Vec<Vec<ColumnTriangle>>,
    lookup: Vec<HashMap<Vec<Vec<i64>>, usize>>,
    strides: Vec<usize>,
    patterns: Vec<GTPattern>,
}

impl BasisIndex {
    pub fn new(spec: &HighestWeightSpec, exec: Execution) -> Self {
        let per_column: Vec<Vec<ColumnTriangle>> = exec.map(&spec.column_weights(), enumerate_column_patterns);
        let lookup =
            per_column.iter().map(|ts| ts.iter().enumerate().map(|(j, t)| (t.rows.clone(), j)).collect()).collect();
        let mut strides = vec![1; per_column.len()];
        for k in (0..per_column.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * per_column[k + 1].len();
        }
        let dim: usize = per_column.iter().map(Vec::len).product();
        let patterns = (0..dim)
            .map(|idx| GTPattern {
                columns: per_column.iter().zip(&strides).map(|(ts, &s)| ts[(idx / s) % ts.len()].clone()).collect(),
            })
            .collect();
        Self { spec: spec.clone(), per_column, lookup, strides, patterns }
    }

    pub fn spec(&self) -> &HighestWeightSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    pub fn patterns(&self) -> &[GTPattern] {
        &self.patterns
    }

    pub fn pattern(&self, index: usize) -> &GTPattern {
        &self.patterns[index]
    }

    pub fn highest_index(&self) -> usize {
        0
    }

    /// Number of triangles in each column.
    pub fn column_counts(&self) -> Vec<usize> {
        self.per_column.iter().map(Vec::len).collect()
    }

    pub fn index_of(&self, pattern: &GTPattern) -> Option<usize> {
        if pattern.columns.len() != self.per_column.len() {
            return None;
        }
        let mut idx = 0;
        for ((col, table), stride) in pattern.columns.iter().zip(&self.lookup).zip(&self.strides) {
            idx += table.get(&col.rows)? * stride;
        }
        (self.patterns.get(idx) == Some(pattern)).then_some(idx)
    }

    /// Index of the pattern obtained by moving `lambda_{ri}^{(k)}` by `sign`.
    pub fn moved_index(&self, index: usize, r: usize, i: usize, k: usize, sign: i64) -> Option<usize> {
        self.patterns[index]
            .moved(r, i, k, sign)
            .ok()
            .flatten()
            .map(|p| self.index_of(&p).expect("moved pattern is in the basis"))
    }
}

/// `dim L(lambda(u))`, counted as the number of patterns.
pub fn dimension(spec: &HighestWeightSpec) -> usize {
    spec.column_weights().iter().map(|cw| enumerate_column_patterns(cw).len()).product()
}

/// Product of the Weyl dimensions of the column weights.
pub fn weyl_dimension_product(spec: &HighestWeightSpec) -> u64 {
    spec.column_weights().iter().map(|cw| weyl_dimension(&cw.weights)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::pyramid::Pyramid;

    fn spec(rows: &[i64], grid: Vec<Vec<Rational>>) -> HighestWeightSpec {
        HighestWeightSpec::new(Pyramid::new(rows).unwrap(), grid).unwrap()
    }

    fn p12() -> HighestWeightSpec {
        spec(&[1, 2], vec![vec![rat_int(1)], vec![rat_int(0), rat(1, 2)]])
    }

    /// Brute-force count of interlacing triangles, scanning a bounding box.
    fn brute_force_count(top: &[i64]) -> usize {
        if top.len() == 1 {
            return 1;
        }
        let (lo, hi) = (*top.last().unwrap(), top[0]);
        let m = top.len() - 1;
        let mut count = 0;
        let mut row = vec![lo; m];
        loop {
            if (0..m).all(|j| top[j] >= row[j] && row[j] >= top[j + 1]) {
                count += brute_force_count(&row);
            }
            let mut j = 0;
            while j < m && row[j] == hi {
                row[j] = lo;
                j += 1;
            }
            if j == m {
                break;
            }
            row[j] += 1;
        }
        count
    }

    #[test]
    fn classical_counts() {
        assert_eq!(classical_triangles(&[5]).len(), 1);
        assert_eq!(classical_triangles(&[1, 0]).len(), 2);
        assert_eq!(classical_triangles(&[2, 1, 0]).len(), 8);
        for top in [vec![3, 1, 0], vec![2, 2, 0, 0], vec![4, 2, 1, 0]] {
            assert_eq!(classical_triangles(&top).len(), brute_force_count(&top));
            let a: Vec<Rational> = top.iter().map(|&x| rat_int(x)).collect();
            assert_eq!(classical_triangles(&top).len() as u64, weyl_dimension(&a));
        }
    }

    #[test]
    fn triangle_order_is_descending() {
        let ts = classical_triangles(&[1, 0]);
        assert_eq!(ts[0], vec![vec![1, 0], vec![1]]);
        assert_eq!(ts[1], vec![vec![1, 0], vec![0]]);
    }

    #[test]
    fn basis_sizes() {
        let a = rat(3, 7);
        assert_eq!(BasisIndex::new(&spec(&[1], vec![vec![a]]), Execution::Sequential).dim(), 1);
        assert_eq!(BasisIndex::new(&p12(), Execution::Sequential).dim(), 2);
        let s22 = spec(&[2, 2], vec![vec![rat_int(2), rat(1, 2)], vec![rat_int(0), rat(-1, 2)]]);
        assert_eq!(dimension(&s22), 6);
        assert_eq!(weyl_dimension_product(&s22), 6);
        let s111 = spec(&[1, 1, 1], vec![vec![rat_int(2)], vec![rat_int(1)], vec![rat_int(0)]]);
        assert_eq!(dimension(&s111), 8);
    }

    #[test]
    fn index_round_trip() {
        let s22 = spec(&[2, 2], vec![vec![rat_int(2), rat(1, 2)], vec![rat_int(0), rat(-1, 2)]]);
        let b = BasisIndex::new(&s22, Execution::Parallel);
        for (j, p) in b.patterns().iter().enumerate() {
            assert_eq!(b.index_of(p), Some(j));
        }
        assert!(b.pattern(b.highest_index()).is_highest());
    }

    #[test]
    fn moves() {
        let b = BasisIndex::new(&p12(), Execution::Sequential);
        let top = b.pattern(0);
        assert_eq!(top.entry(1, 1, 1), Some(rat_int(1)));
        assert_eq!(top.moved(1, 1, 1, 1).unwrap(), None);
        let low = top.moved(1, 1, 1, -1).unwrap().unwrap();
        assert_eq!(low.entry(1, 1, 1), Some(rat_int(0)));
        assert_eq!(b.index_of(&low), Some(1));
        assert_eq!(low.moved(1, 1, 1, -1).unwrap(), None);
        assert_eq!(low.moved(1, 1, 1, 1).unwrap().as_ref(), Some(top));
        assert_eq!(top.moved(2, 1, 1, -1), Err(Error::ImmutableTopRow));
        assert!(matches!(top.moved(1, 1, 2, -1), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn row_polynomials() {
        let b = BasisIndex::new(&p12(), Execution::Sequential);
        let low = b.pattern(1);
        assert_eq!(low.row_poly(1, 1).unwrap(), UniPoly::from_coeffs((), vec![rat_int(0), rat_int(1)]));
        assert_eq!(low.row_poly(2, 2).unwrap(), p12().weight_poly(2).unwrap());
        assert!(low.row_poly(1, 2).is_err());
    }

    #[test]
    fn normalization_examples() {
        let b = BasisIndex::new(&p12(), Execution::Sequential);
        assert_eq!(b.pattern(0).normalization_constant(), rat_int(1));
        let s1 = spec(&[2], vec![vec![rat(1, 3), rat(2, 3)]]);
        let b1 = BasisIndex::new(&s1, Execution::Sequential);
        assert_eq!(b1.pattern(0).normalization_constant(), rat_int(1));
        // p = (1,1), lambda = (1; 0), pattern lambda_11 = 0:
        // r = i = 1, one rising factor from l_{0,1} - l_1: the j-range i..r-1 is empty
        // and so is 1..i-1, hence N = 1.
        let s11 = spec(&[1, 1], vec![vec![rat_int(1)], vec![rat_int(0)]]);
        let b11 = BasisIndex::new(&s11, Execution::Sequential);
        assert_eq!(b11.pattern(1).normalization_constant(), rat_int(1));
    }
}
