//! Polynomials in two commuting scalar variables `u`, `v` with
//! sparse-matrix coefficients, used to check two-parameter identities.

use std::collections::BTreeMap;

use num_traits::One;
use serde::Serialize;

use super::{Additive, Rational, Ring, SparseMatrix, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    U,
    V,
}

/// Location of a nonzero coefficient entry in a residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub u_power: usize,
    pub v_power: usize,
    pub row: usize,
    pub col: usize,
    pub value: String,
}

/// `sum_{a,b} coeffs[(a, b)] u^a v^b`; zero coefficients are absent.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly {
    dim: usize,
    coeffs: BTreeMap<(usize, usize), SparseMatrix>,
}

impl BiPoly {
    pub fn zero(dim: usize) -> Self {
        Self { dim, coeffs: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn accumulate(&mut self, key: (usize, usize), m: &SparseMatrix) {
        if m.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(key).or_insert_with(|| SparseMatrix::zero(self.dim));
        slot.add_assign(m);
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// A polynomial in one variable, embedded.
    pub fn from_uni(p: &UniPoly<SparseMatrix>, var: Var) -> Self {
        let mut out = Self::zero(*p.shape());
        for (j, c) in p.coeffs().iter().enumerate() {
            let key = match var {
                Var::U => (j, 0),
                Var::V => (0, j),
            };
            out.accumulate(key, c);
        }
        out
    }

    /// The ordered product `left(x) * right(y)` where `x`, `y` name the variables.
    pub fn product(left: &UniPoly<SparseMatrix>, x: Var, right: &UniPoly<SparseMatrix>, y: Var) -> Self {
        let mut out = Self::zero(*left.shape());
        for (a, l) in left.coeffs().iter().enumerate() {
            for (b, r) in right.coeffs().iter().enumerate() {
                let (mut pu, mut pv) = (0, 0);
                for (var, e) in [(x, a), (y, b)] {
                    match var {
                        Var::U => pu += e,
                        Var::V => pv += e,
                    }
                }
                out.accumulate((pu, pv), &l.times(r));
            }
        }
        out
    }

    /// `[left(u), right(v)]`.
    pub fn commutator(left: &UniPoly<SparseMatrix>, right: &UniPoly<SparseMatrix>) -> Self {
        Self::product(left, Var::U, right, Var::V).sub(&Self::product(right, Var::V, left, Var::U))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, m) in &other.coeffs {
            out.accumulate(k, m);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, m) in &other.coeffs {
            out.accumulate(k, &m.negated());
        }
        out
    }

    /// Multiplication by `(u - v)`.
    pub fn times_u_minus_v(&self) -> Self {
        let mut out = Self::zero(self.dim);
        let minus_one = -Rational::one();
        for (&(a, b), m) in &self.coeffs {
            out.accumulate((a + 1, b), m);
            out.accumulate((a, b + 1), &m.scaled(&minus_one));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: usize, b: usize) -> SparseMatrix {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_else(|| SparseMatrix::zero(self.dim))
    }

    /// First nonzero entry, ordered by `(u power, v power, row, col)`.
    pub fn witness(&self) -> Option<Witness> {
        self.coeffs.iter().next().and_then(|(&(a, b), m)| {
            m.first_nonzero().map(|(row, col, value)| Witness {
                u_power: a,
                v_power: b,
                row,
                col,
                value: value.to_string(),
            })
        })
    }
}

/// First nonzero entry of a one-variable residual, reported with `v_power = 0`.
pub(crate) fn uni_witness(p: &UniPoly<SparseMatrix>) -> Option<Witness> {
    p.coeffs().iter().enumerate().find_map(|(j, m)| {
        m.first_nonzero().map(|(row, col, value)| Witness {
            u_power: j,
            v_power: 0,
            row,
            col,
            value: value.to_string(),
        })
    })
}
