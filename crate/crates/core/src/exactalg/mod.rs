//! Exact scalar, polynomial, series and sparse-matrix arithmetic.
//!
//! Everything here is tolerance free: scalars are arbitrary-precision
//! rationals and every container strips exact zeros on construction.
//! Containers are generic over a coefficient type implementing [`Additive`]
//! (and [`Ring`] when products are needed), so the same polynomial and
//! series code serves scalars, sparse vectors and sparse matrices.

mod bipoly;
mod interp;
mod poly;
mod scalar;
mod series;
mod sparse;

pub(crate) use bipoly::uni_witness;
pub use bipoly::{BiPoly, Var, Witness};
pub use interp::lagrange_interpolate;
pub use poly::UniPoly;
pub use scalar::{binomial, is_integer, parse_rational, rat, rat_int, to_i64, Rational};
pub use series::TruncatedSeries;
pub use sparse::{SparseMatrix, SparseVector};

use std::fmt::Debug;

/// Polynomial with rational coefficients.
pub type ScalarPoly = UniPoly<Rational>;
/// Polynomial whose coefficients are sparse matrices.
pub type OperatorPolynomial = UniPoly<SparseMatrix>;

/// A module over the rationals: the minimum a polynomial or series
/// coefficient needs.
///
/// `Shape` carries what is needed to build a zero of the right size
/// (`()` for scalars, the dimension for vectors and matrices).
pub trait Additive: Clone + PartialEq + Debug {
    type Shape: Clone + PartialEq + Debug;

    fn shape(&self) -> Self::Shape;
    fn zero_of(shape: &Self::Shape) -> Self;
    fn is_null(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;

    /// `self += c * other`.
    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        *self = self.plus(&other.scaled(c));
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.plus(other);
    }
}

/// An associative algebra over the rationals with unit.
pub trait Ring: Additive {
    fn one_of(shape: &Self::Shape) -> Self;
    fn times(&self, other: &Self) -> Self;

    fn is_unit(&self) -> bool {
        *self == Self::one_of(&self.shape())
    }
}
