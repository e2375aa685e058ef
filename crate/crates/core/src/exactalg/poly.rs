//! Univariate polynomials in `u` with coefficients in any [`Additive`] type.

use num_traits::{One, Zero};

use super::{binomial, Additive, Rational, Ring, SparseMatrix, SparseVector};

/// Polynomial `sum_j coeffs[j] u^j`.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has an empty coefficient list and [`UniPoly::degree`] returns `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<T: Additive> {
    shape: T::Shape,
    coeffs: Vec<T>,
}

impl<T: Additive> UniPoly<T> {
    pub fn zero(shape: T::Shape) -> Self {
        Self { shape, coeffs: Vec::new() }
    }

    pub fn from_coeffs(shape: T::Shape, coeffs: Vec<T>) -> Self {
        let mut p = Self { shape, coeffs };
        p.normalize();
        p
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(c.shape(), vec![c])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Additive::is_null) {
            self.coeffs.pop();
        }
    }

    pub fn shape(&self) -> &T::Shape {
        &self.shape
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> T {
        self.coeffs.get(j).cloned().unwrap_or_else(|| T::zero_of(&self.shape))
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> T {
        let mut acc = T::zero_of(&self.shape);
        for c in self.coeffs.iter().rev() {
            acc = acc.scaled(x);
            acc.add_assign(c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j).plus(&other.coeff(j))).collect();
        Self::from_coeffs(self.shape.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { shape: self.shape.clone(), coeffs: self.coeffs.iter().map(Additive::negated).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.shape.clone(), self.coeffs.iter().map(|x| x.scaled(c)).collect())
    }

    /// Product with a polynomial having scalar coefficients.
    pub fn mul_scalar_poly(&self, p: &UniPoly<Rational>) -> Self {
        if self.is_zero() || p.is_zero() {
            return Self::zero(self.shape.clone());
        }
        let mut out = vec![T::zero_of(&self.shape); self.coeffs.len() + p.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in p.coeffs.iter().enumerate() {
                out[i + j].add_scaled(a, b);
            }
        }
        Self::from_coeffs(self.shape.clone(), out)
    }

    /// The polynomial `u -> self(u + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        if c.is_zero() || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = vec![T::zero_of(&self.shape); n];
        // (u + c)^j = sum_m C(j, m) c^(j-m) u^m
        let mut powers = vec![Rational::one()];
        for _ in 1..n {
            let next = powers.last().unwrap() * c;
            powers.push(next);
        }
        for (j, a) in self.coeffs.iter().enumerate() {
            for (m, slot) in out.iter_mut().enumerate().take(j + 1) {
                let w = binomial(j as u64, m as u64) * &powers[j - m];
                slot.add_scaled(a, &w);
            }
        }
        Self::from_coeffs(self.shape.clone(), out)
    }

    pub fn map<S: Additive>(&self, shape: S::Shape, f: impl Fn(&T) -> S) -> UniPoly<S> {
        UniPoly::from_coeffs(shape, self.coeffs.iter().map(f).collect())
    }
}

impl<T: Ring> UniPoly<T> {
    pub fn one(shape: T::Shape) -> Self {
        let one = T::one_of(&shape);
        Self::from_coeffs(shape, vec![one])
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.shape.clone());
        }
        let mut out = vec![T::zero_of(&self.shape); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_assign(&a.times(b));
            }
        }
        Self::from_coeffs(self.shape.clone(), out)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Ring::is_unit)
    }
}

impl UniPoly<Rational> {
    /// The monomial `u + a`.
    pub fn linear(a: Rational) -> Self {
        Self::from_coeffs((), vec![a, Rational::one()])
    }

    /// `prod_j (u + roots_shifts[j])`.
    pub fn from_linear_factors<'a>(shifts: impl IntoIterator<Item = &'a Rational>) -> Self {
        shifts.into_iter().fold(Self::one(()), |acc, a| acc.mul(&Self::linear(a.clone())))
    }

    /// `(u + a)^e`.
    pub fn linear_power(a: &Rational, e: usize) -> Self {
        (0..e).fold(Self::one(()), |acc, _| acc.mul(&Self::linear(a.clone())))
    }

    /// `p(u) x` for a fixed element `x`.
    pub fn times_element<T: Additive>(&self, x: &T) -> UniPoly<T> {
        self.map(x.shape(), |c| x.scaled(c))
    }

    /// Lift to a polynomial with scalar-matrix coefficients.
    pub fn to_operator(&self, dim: usize) -> UniPoly<SparseMatrix> {
        self.map(dim, |c| SparseMatrix::scalar(dim, c))
    }
}

impl UniPoly<SparseMatrix> {
    /// The polynomial whose coefficients are column `j` of each matrix coefficient.
    pub fn column(&self, j: usize) -> UniPoly<SparseVector> {
        self.map(self.shape, |m| m.column(j))
    }

    /// Matrix polynomial from its columns, each given as a vector polynomial.
    pub fn from_column_polys(dim: usize, columns: &[UniPoly<SparseVector>]) -> Self {
        assert_eq!(columns.len(), dim);
        let len = columns.iter().map(|c| c.coeffs.len()).max().unwrap_or(0);
        let mut coeffs = vec![SparseMatrix::zero(dim); len];
        let mut triples: Vec<Vec<(usize, usize, Rational)>> = vec![Vec::new(); len];
        for (col, poly) in columns.iter().enumerate() {
            for (power, v) in poly.coeffs.iter().enumerate() {
                triples[power].extend(v.iter().map(|(row, x)| (row, col, x.clone())));
            }
        }
        for (slot, entries) in coeffs.iter_mut().zip(triples) {
            *slot = SparseMatrix::from_entries(dim, entries);
        }
        Self::from_coeffs(dim, coeffs)
    }

    /// Diagonal matrix polynomial with the given scalar polynomial per basis vector.
    pub fn from_diagonal_polys(diag: &[UniPoly<Rational>]) -> Self {
        let dim = diag.len();
        let len = diag.iter().map(|p| p.coeffs.len()).max().unwrap_or(0);
        let coeffs = (0..len).map(|j| SparseMatrix::diagonal(diag.iter().map(|p| p.coeff(j)).collect())).collect();
        Self::from_coeffs(dim, coeffs)
    }

    /// Entry `(row, col)` as a scalar polynomial.
    pub fn entry(&self, row: usize, col: usize) -> UniPoly<Rational> {
        self.map((), |m| m.get(row, col))
    }

    pub fn apply(&self, v: &SparseVector) -> UniPoly<SparseVector> {
        self.map(v.dim(), |m| m.apply(v))
    }
}
