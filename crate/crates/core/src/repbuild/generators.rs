//! Drinfeld generator matrices recovered from `A_i`, `B_i`, `C_i`.
//!
//! With `pi_i(u) = u^{p_1} (u-1)^{p_2} ... (u-i+1)^{p_i}` and
//! `rho_i(u) = u^{p_1} ... (u-i+2)^{p_{i-1}} (u-i+1)^{p_{i+1}}`:
//!
//! ```text
//! a_i(u) = A_i(u) / pi_i(u)      b_i(u) = B_i(u) / rho_i(u)      c_i(u) = C_i(u) / pi_i(u)
//! d_i(u - i + 1) = a_{i-1}(u)^{-1} a_i(u)
//! e_i(u - i + 1) = a_i(u)^{-1} b_i(u)
//! f_i(u - i + 1) = c_i(u) a_i(u)^{-1}
//! 1 + sum_r h_i^{(r)} u^{-r} = d_i(u)^{-1} d_{i+1}(u)
//! ```

use super::Representation;
use crate::error::{Error, Result};
use crate::exactalg::{rat_int, OperatorPolynomial, Rational, ScalarPoly, SparseMatrix, TruncatedSeries, UniPoly};
use crate::pyramid::Pyramid;

type MatSeries = TruncatedSeries<SparseMatrix>;

/// `prod_{m=1}^{i} (u - m + 1)^{p_m}`.
pub fn pi_poly(pyramid: &Pyramid, i: usize) -> ScalarPoly {
    (1..=i).fold(UniPoly::one(()), |acc, m| acc.mul(&UniPoly::linear_power(&rat_int(1 - m as i64), pyramid.row(m))))
}

/// `prod_{m=1}^{i-1} (u - m + 1)^{p_m} * (u - i + 1)^{p_{i+1}}`.
pub fn rho_poly(pyramid: &Pyramid, i: usize) -> ScalarPoly {
    pi_poly(pyramid, i - 1).mul(&UniPoly::linear_power(&rat_int(1 - i as i64), pyramid.row(i + 1)))
}

/// Matrices of the generators `d_i^{(r)}`, `e_i^{(r)}`, `f_i^{(r)}`, `h_i^{(r)}`
/// for `r <= R`, together with the series they were extracted from.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    order: usize,
    pyramid: Pyramid,
    a: Vec<MatSeries>,
    b: Vec<MatSeries>,
    c: Vec<MatSeries>,
    d: Vec<MatSeries>,
    d_prime: Vec<MatSeries>,
    e: Vec<MatSeries>,
    f: Vec<MatSeries>,
    h: Vec<MatSeries>,
}

impl GeneratorTable {
    pub(crate) fn build(rep: &Representation, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::TruncationTooSmall { order, needed: 1 });
        }
        let n = rep.n();
        let dim = rep.dim();
        let pyramid = rep.pyramid().clone();
        let exec = rep.execution();

        let a: Vec<MatSeries> = exec
            .map_range(n, |j| rep.a(j + 1).map(|p| TruncatedSeries::from_ratio(&p, &pi_poly(&pyramid, j + 1), order)))
            .into_iter()
            .collect::<Result<_>>()?;
        let b: Vec<MatSeries> = exec
            .map_range(n - 1, |j| {
                rep.b(j + 1).map(|p| TruncatedSeries::from_ratio(&p, &rho_poly(&pyramid, j + 1), order))
            })
            .into_iter()
            .collect::<Result<_>>()?;
        let c: Vec<MatSeries> = exec
            .map_range(n - 1, |j| {
                rep.c(j + 1).map(|p| TruncatedSeries::from_ratio(&p, &pi_poly(&pyramid, j + 1), order))
            })
            .into_iter()
            .collect::<Result<_>>()?;

        let a_inv: Vec<MatSeries> = exec.map(&a, |s| s.invert()).into_iter().collect::<Result<_>>()?;

        let d: Vec<MatSeries> = exec.map_range(n, |j| {
            if j == 0 {
                a[0].clone()
            } else {
                a_inv[j - 1].mul(&a[j]).shift(&rat_int(j as i64), order)
            }
        });
        let d_prime: Vec<MatSeries> = exec.map(&d, |s| s.invert()).into_iter().collect::<Result<_>>()?;
        let e = exec.map_range(n - 1, |j| a_inv[j].mul(&b[j]).shift(&rat_int(j as i64), order));
        let f = exec.map_range(n - 1, |j| c[j].mul(&a_inv[j]).shift(&rat_int(j as i64), order));
        let h = exec.map_range(n - 1, |j| d_prime[j].mul(&d[j + 1]));

        debug_assert!(d.iter().all(|s| s.coeff(0) == &SparseMatrix::identity(dim)));
        Ok(Self { order, pyramid, a, b, c, d, d_prime, e, f, h })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn pyramid(&self) -> &Pyramid {
        &self.pyramid
    }

    pub fn n(&self) -> usize {
        self.pyramid.height()
    }

    /// Lowest admissible order `p_{i+1} - p_i + 1` of `e_i^{(r)}`.
    pub fn e_start(&self, i: usize) -> usize {
        self.pyramid.row(i + 1) - self.pyramid.row(i) + 1
    }

    /// `d_i^{(r)}` (with `d_i^{(0)} = 1`).
    pub fn d(&self, i: usize, r: usize) -> &SparseMatrix {
        self.d[i - 1].coeff(r)
    }

    /// `d_i'^{(r)}`, the coefficients of `d_i(u)^{-1}`.
    pub fn d_prime(&self, i: usize, r: usize) -> &SparseMatrix {
        self.d_prime[i - 1].coeff(r)
    }

    /// `e_i^{(r)}` for admissible `r`, `None` below `p_{i+1} - p_i + 1` or above `R`.
    pub fn e(&self, i: usize, r: usize) -> Option<&SparseMatrix> {
        (r >= self.e_start(i) && r <= self.order).then(|| self.e[i - 1].coeff(r))
    }

    /// Coefficient of `u^{-r}` in the extracted `e_i(u)`, including orders
    /// below the admissible range (which must vanish).
    pub fn e_raw(&self, i: usize, r: usize) -> &SparseMatrix {
        self.e[i - 1].coeff(r)
    }

    /// `f_i^{(r)}` for `1 <= r <= R`.
    pub fn f(&self, i: usize, r: usize) -> Option<&SparseMatrix> {
        (r >= 1 && r <= self.order).then(|| self.f[i - 1].coeff(r))
    }

    pub fn f_raw(&self, i: usize, r: usize) -> &SparseMatrix {
        self.f[i - 1].coeff(r)
    }

    /// `h_i^{(r)}` (with `h_i^{(0)} = 1`).
    pub fn h(&self, i: usize, r: usize) -> &SparseMatrix {
        self.h[i - 1].coeff(r)
    }

    pub fn d_series(&self, i: usize) -> &MatSeries {
        &self.d[i - 1]
    }

    /// `a_i(u)`; `a_0(u) = 1`.
    pub fn a_series(&self, i: usize) -> MatSeries {
        if i == 0 {
            let dim = *self.a[0].shape();
            return TruncatedSeries::one(dim, self.order);
        }
        self.a[i - 1].clone()
    }

    pub fn b_series(&self, i: usize) -> &MatSeries {
        &self.b[i - 1]
    }

    pub fn c_series(&self, i: usize) -> &MatSeries {
        &self.c[i - 1]
    }

    /// `H_i^{(s)}(u) = u^s + u^{s-1} h_i^{(1)} + ... + h_i^{(s)}`.
    pub fn h_poly(&self, i: usize, s: usize) -> Result<OperatorPolynomial> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange(format!("H_{i} needs 1 <= i < n")));
        }
        if s > self.order {
            return Err(Error::TruncationTooSmall { order: self.order, needed: s });
        }
        let coeffs = (0..=s).map(|j| self.h(i, s - j).clone()).collect();
        Ok(UniPoly::from_coeffs(*self.a[0].shape(), coeffs))
    }

    /// Whether every matrix in the table is diagonal where it must be.
    pub fn diagonal_parts_are_diagonal(&self) -> bool {
        self.d.iter().chain(&self.h).all(|s| s.coeffs().iter().all(SparseMatrix::is_diagonal))
    }

    /// Diagonal entry of `d_i^{(r)}` at basis vector `index`.
    pub fn d_eigenvalue(&self, i: usize, r: usize, index: usize) -> Rational {
        self.d(i, r).get(index, index)
    }
}
