//! The polynomials `H_i^{(s)}(u)` and `A'_{i+1}(u)` entering the bilinear
//! `B`–`C` relations.

use super::generators::{rho_poly, GeneratorTable};
use super::Representation;
use crate::error::{Error, Result};
use crate::exactalg::{rat_int, Additive, OperatorPolynomial, SparseMatrix, UniPoly};

impl GeneratorTable {
    /// `H_i^{(p_{i+1} - p_i)}(u)`.
    pub fn h_top(&self, i: usize) -> Result<OperatorPolynomial> {
        let s = self.pyramid().row(i + 1) - self.pyramid().row(i);
        self.h_poly(i, s)
    }

    /// `A'_{i+1}(u)`, assembled as
    ///
    /// ```text
    /// rho_i(u) a_i(u+1)^{-1} (a_{i+1}(u+1) a_{i-1}(u) + c_i(u+1) b_i(u))
    ///     - H_i^{(p_{i+1}-p_i)}(u-i+1) A_i(u)
    /// ```
    ///
    /// The first product is a Laurent series whose negative powers must
    /// vanish; they are checked up to the truncation order.
    pub fn a_prime(&self, rep: &Representation, i: usize) -> Result<OperatorPolynomial> {
        let n = self.n();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("A'_{{i+1}} needs 1 <= i < n, got i = {i}")));
        }
        let order = self.order();
        let rho = rho_poly(self.pyramid(), i);
        let top = rho.degree().unwrap();
        if order <= top {
            return Err(Error::TruncationTooSmall { order, needed: top + 1 });
        }
        let one = rat_int(1);
        let a_i_next_inv = self.a_series(i).shift(&one, order).invert()?;
        let a_up = self.a_series(i + 1).shift(&one, order);
        let c_up = self.c_series(i).shift(&one, order);
        let inner = a_up.mul(&self.a_series(i - 1)).add(&c_up.mul(self.b_series(i)));
        let series = a_i_next_inv.mul(&inner);

        // rho(u) * series: coefficient of u^{top - m} for m = 0..=order
        let dim = rep.dim();
        let laurent: Vec<SparseMatrix> = (0..=order)
            .map(|m| {
                let mut acc = SparseMatrix::zero(dim);
                for (j, c) in rho.coeffs().iter().enumerate() {
                    if j + m >= top {
                        acc.add_scaled(series.coeff(j + m - top), c);
                    }
                }
                acc
            })
            .collect();
        if let Some(m) = (top + 1..=order).find(|&m| !laurent[m].is_zero()) {
            return Err(Error::NonPolynomial { power: top as i64 - m as i64 });
        }
        let poly_part = UniPoly::from_coeffs(dim, (0..=top).map(|p| laurent[top - p].clone()).collect());
        let h = self.h_top(i)?.shift(&rat_int(1 - i as i64));
        Ok(poly_part.sub(&h.mul(&*rep.a(i)?)))
    }
}

impl Representation {
    /// Builds the generator table to truncation order `order`.
    pub fn generator_series(&self, order: usize) -> Result<GeneratorTable> {
        GeneratorTable::build(self, order)
    }

    /// `H_i^{(p_{i+1} - p_i)}(u)`, from a generator table of order `order`.
    pub fn build_h(&self, i: usize, order: usize) -> Result<OperatorPolynomial> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange(format!("H_i needs 1 <= i < n, got i = {i}")));
        }
        let s = self.pyramid().row(i + 1) - self.pyramid().row(i);
        if order < s.max(1) {
            return Err(Error::TruncationTooSmall { order, needed: s.max(1) });
        }
        self.generator_series(order)?.h_top(i)
    }

    /// `A'_{i+1}(u)`, from a generator table of order `order`.
    pub fn build_a_prime(&self, i: usize, order: usize) -> Result<OperatorPolynomial> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange(format!("A'_{{i+1}} needs 1 <= i < n, got i = {i}")));
        }
        self.generator_series(order)?.a_prime(self, i)
    }
}
