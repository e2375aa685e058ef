//! Sparse rational vectors and square matrices.
//!
//! Matrices are stored row-wise as ordered maps so that iteration order,
//! and therefore every exported file, is deterministic. Explicit zeros are
//! never stored.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Additive, Rational, Ring};

fn add_into(map: &mut BTreeMap<usize, Rational>, key: usize, value: Rational) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Sparse column vector in a basis of size `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVector {
    dim: usize,
    entries: BTreeMap<usize, Rational>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: BTreeMap::new() }
    }

    /// The basis vector `e_index` scaled by `value`.
    pub fn unit(dim: usize, index: usize, value: Rational) -> Self {
        let mut v = Self::zero(dim);
        v.set(index, value);
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Rational {
        self.entries.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, index: usize, value: Rational) {
        assert!(index < self.dim, "index {index} out of range for dimension {}", self.dim);
        if value.is_zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, value);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(&i, v)| (i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// The scalar `c` with `other = c * self`, if one exists.
    ///
    /// Two zero vectors are proportional with `c = 0`; a zero `self` and a
    /// nonzero `other` are not.
    pub fn proportionality(&self, other: &SparseVector) -> Option<Rational> {
        assert_eq!(self.dim, other.dim);
        let Some((&pivot, pv)) = self.entries.iter().next() else {
            return other.entries.is_empty().then(Rational::zero);
        };
        let c = other.get(pivot) / pv;
        (self.scaled(&c) == *other).then_some(c)
    }
}

impl Additive for SparseVector {
    type Shape = usize;

    fn shape(&self) -> usize {
        self.dim
    }

    fn zero_of(dim: &usize) -> Self {
        SparseVector::zero(*dim)
    }

    fn is_null(&self) -> bool {
        self.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn negated(&self) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|(&i, v)| (i, -v)).collect() }
    }

    fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Self { dim: self.dim, entries: self.entries.iter().map(|(&i, v)| (i, v * c)).collect() }
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if c.is_zero() {
            return;
        }
        for (&i, v) in &other.entries {
            add_into(&mut self.entries, i, v * c);
        }
    }

    fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (&i, v) in &other.entries {
            add_into(&mut self.entries, i, v.clone());
        }
    }
}

/// Sparse square matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    dim: usize,
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    pub fn zero(dim: usize) -> Self {
        Self { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| Rational::one()).collect())
    }

    pub fn diagonal(values: Vec<Rational>) -> Self {
        let mut m = Self::zero(values.len());
        for (i, v) in values.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn scalar(dim: usize, c: &Rational) -> Self {
        Self::diagonal(vec![c.clone(); dim])
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions
    /// are summed.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut m = Self::zero(dim);
        for (r, c, v) in entries {
            assert!(r < dim && c < dim, "entry ({r}, {c}) out of range for dimension {dim}");
            add_into(&mut m.rows[r], c, v);
        }
        m
    }

    /// Builds a matrix whose column `j` is `columns[j]`.
    pub fn from_columns(columns: &[SparseVector]) -> Self {
        let dim = columns.len();
        let mut m = Self::zero(dim);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), dim);
            for (i, v) in col.iter() {
                m.rows[i].insert(j, v.clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.rows[row].get(&col).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.dim && col < self.dim);
        if value.is_zero() {
            self.rows[row].remove(&col);
        } else {
            self.rows[row].insert(col, value);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.rows[r].iter().map(|(&c, v)| (c, v))
    }

    pub fn column(&self, c: usize) -> SparseVector {
        let mut v = SparseVector::zero(self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(x) = row.get(&c) {
                v.set(r, x.clone());
            }
        }
        v
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(r, c, _)| r == c)
    }

    pub fn diagonal_entries(&self) -> Vec<Rational> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn apply(&self, v: &SparseVector) -> SparseVector {
        assert_eq!(self.dim, v.dim(), "dimension mismatch");
        let mut out = SparseVector::zero(self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = Rational::zero();
            for (&c, a) in row {
                if let Some(x) = v.entries.get(&c) {
                    acc += a * x;
                }
            }
            out.set(r, acc);
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(self.dim, self.entries().map(|(r, c, v)| (c, r, v.clone())))
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.times(other).minus(&other.times(self))
    }

    /// Conjugation `D^{-1} M D` by an invertible diagonal matrix given by its entries.
    pub fn conjugate_by_diagonal(&self, diag: &[Rational]) -> Self {
        assert_eq!(diag.len(), self.dim);
        Self::from_entries(self.dim, self.entries().map(|(r, c, v)| (r, c, v * &diag[c] / &diag[r])))
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, Rational)> {
        self.entries().next().map(|(r, c, v)| (r, c, v.clone()))
    }
}

impl Additive for SparseMatrix {
    type Shape = usize;

    fn shape(&self) -> usize {
        self.dim
    }

    fn zero_of(dim: &usize) -> Self {
        SparseMatrix::zero(*dim)
    }

    fn is_null(&self) -> bool {
        self.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    fn negated(&self) -> Self {
        self.scaled(&-Rational::one())
    }

    fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Self {
            dim: self.dim,
            rows: self.rows.iter().map(|row| row.iter().map(|(&k, v)| (k, v * c)).collect()).collect(),
        }
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if c.is_zero() {
            return;
        }
        for (mine, theirs) in self.rows.iter_mut().zip(&other.rows) {
            for (&k, v) in theirs {
                add_into(mine, k, v * c);
            }
        }
    }

    fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (mine, theirs) in self.rows.iter_mut().zip(&other.rows) {
            for (&k, v) in theirs {
                add_into(mine, k, v.clone());
            }
        }
    }
}

impl Ring for SparseMatrix {
    fn one_of(dim: &usize) -> Self {
        SparseMatrix::identity(*dim)
    }

    fn times(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BTreeMap::new();
                for (&k, a) in row {
                    for (&j, b) in &other.rows[k] {
                        add_into(&mut acc, j, a * b);
                    }
                }
                acc
            })
            .collect();
        Self { dim: self.dim, rows }
    }
}
