//! Power series in `u^{-1}` truncated at a caller-chosen order.

use num_traits::{One, Zero};

use super::{binomial, Additive, Rational, Ring, UniPoly};
use crate::error::{Error, Result};

/// `sum_{m=0}^{R} coeffs[m] u^{-m} + O(u^{-R-1})`.
///
/// The coefficient vector always has exactly `R + 1` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T: Additive> {
    shape: T::Shape,
    coeffs: Vec<T>,
}

impl<T: Additive> TruncatedSeries<T> {
    pub fn zero(shape: T::Shape, order: usize) -> Self {
        let coeffs = vec![T::zero_of(&shape); order + 1];
        Self { shape, coeffs }
    }

    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` entries.
    pub fn from_coeffs(shape: T::Shape, mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero_of(&shape));
        Self { shape, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn shape(&self) -> &T::Shape {
        &self.shape
    }

    /// Coefficient of `u^{-m}`; panics beyond the truncation order.
    pub fn coeff(&self, m: usize) -> &T {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self { shape: self.shape.clone(), coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|m| self.coeffs[m].plus(&other.coeffs[m])).collect();
        Self { shape: self.shape.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|m| self.coeffs[m].minus(&other.coeffs[m])).collect();
        Self { shape: self.shape.clone(), coeffs }
    }

    /// Product with a scalar series (scalars commute with everything).
    pub fn mul_scalar_series(&self, s: &TruncatedSeries<Rational>) -> Self {
        let order = self.order().min(s.order());
        let mut out = vec![T::zero_of(&self.shape); order + 1];
        for (m, slot) in out.iter_mut().enumerate() {
            for t in 0..=m {
                if !s.coeffs[m - t].is_zero() {
                    slot.add_scaled(&self.coeffs[t], &s.coeffs[m - t]);
                }
            }
        }
        Self { shape: self.shape.clone(), coeffs: out }
    }

    /// Re-expansion of `u -> self(u + c)` in powers of `u^{-1}` to order `order`.
    ///
    /// Uses `(u + c)^{-m} = sum_j (-1)^j C(m + j - 1, j) c^j u^{-m-j}`.
    pub fn shift(&self, c: &Rational, order: usize) -> Self {
        assert!(order <= self.order(), "shift order exceeds series order");
        if c.is_zero() {
            return self.truncate(order);
        }
        let mut powers = vec![Rational::one()];
        for _ in 1..=order {
            let next = -(powers.last().unwrap() * c);
            powers.push(next);
        }
        let mut out = vec![T::zero_of(&self.shape); order + 1];
        out[0] = self.coeffs[0].clone();
        for m in 1..=order {
            if self.coeffs[m].is_null() {
                continue;
            }
            for j in 0..=(order - m) {
                let w = binomial((m + j - 1) as u64, j as u64) * &powers[j];
                out[m + j].add_scaled(&self.coeffs[m], &w);
            }
        }
        Self { shape: self.shape.clone(), coeffs: out }
    }

    /// `num(u) / den(u)` expanded in `u^{-1}`, for monic `den` with
    /// `deg num <= deg den`.
    pub fn from_ratio(num: &UniPoly<T>, den: &UniPoly<Rational>, order: usize) -> Self {
        assert!(den.is_monic(), "denominator must be monic");
        let d = den.degree().unwrap();
        if let Some(dn) = num.degree() {
            assert!(dn <= d, "numerator degree {dn} exceeds denominator degree {d}");
        }
        // num(u) u^{-d} as a series: coefficient of u^{-m} is num_{d-m}
        let head: Vec<T> =
            (0..=order).map(|m| if m <= d { num.coeff(d - m) } else { T::zero_of(num.shape()) }).collect();
        let head = Self { shape: num.shape().clone(), coeffs: head };
        let reversed: Vec<Rational> =
            (0..=order).map(|m| if m <= d { den.coeff(d - m) } else { Rational::zero() }).collect();
        let inv = TruncatedSeries::<Rational>::from_coeffs((), reversed, order)
            .invert()
            .expect("monic denominator has unit leading term");
        head.mul_scalar_series(&inv)
    }
}

impl<T: Ring> TruncatedSeries<T> {
    pub fn one(shape: T::Shape, order: usize) -> Self {
        let mut s = Self::zero(shape, order);
        s.coeffs[0] = T::one_of(&s.shape);
        s
    }

    /// Order-preserving product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![T::zero_of(&self.shape); order + 1];
        for (a, x) in self.coeffs.iter().enumerate().take(order + 1) {
            if x.is_null() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate().take(order + 1 - a) {
                if !y.is_null() {
                    out[a + b].add_assign(&x.times(y));
                }
            }
        }
        Self { shape: self.shape.clone(), coeffs: out }
    }

    /// Two-sided inverse of a series with identity constant term.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_unit() {
            return Err(Error::InvalidSeries);
        }
        let order = self.order();
        let mut inv: Vec<T> = Vec::with_capacity(order + 1);
        inv.push(T::one_of(&self.shape));
        for r in 1..=order {
            let mut acc = T::zero_of(&self.shape);
            for t in 1..=r {
                if !self.coeffs[t].is_null() && !inv[r - t].is_null() {
                    acc.add_assign(&self.coeffs[t].times(&inv[r - t]));
                }
            }
            inv.push(acc.negated());
        }
        Ok(Self { shape: self.shape.clone(), coeffs: inv })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_int};
    use proptest::prelude::*;

    fn ss(cs: &[Rational], order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_coeffs((), cs.to_vec(), order)
    }

    #[test]
    fn invert_identity() {
        let one = TruncatedSeries::<Rational>::one((), 4);
        assert_eq!(one.invert().unwrap(), one);
    }

    #[test]
    fn invert_geometric() {
        let s = ss(&[rat_int(1), rat_int(1)], 5);
        let inv = s.invert().unwrap();
        let expected: Vec<_> = (0..=5).map(|m| rat_int(if m % 2 == 0 { 1 } else { -1 })).collect();
        assert_eq!(inv.coeffs(), &expected[..]);
        assert_eq!(s.mul(&inv), TruncatedSeries::one((), 5));
    }

    #[test]
    fn invert_three_halves() {
        let s = ss(&[rat_int(1), rat(3, 2)], 2);
        let inv = s.invert().unwrap();
        assert_eq!(inv.coeffs(), &[rat_int(1), rat(-3, 2), rat(9, 4)]);
        assert_eq!(s.mul(&inv), TruncatedSeries::one((), 2));
    }

    #[test]
    fn invert_rejects_non_unit() {
        assert_eq!(ss(&[rat_int(2)], 3).invert(), Err(Error::InvalidSeries));
    }

    #[test]
    fn shift_of_u_inverse() {
        let s = ss(&[rat_int(0), rat_int(1)], 3);
        let shifted = s.shift(&rat_int(1), 3);
        assert_eq!(shifted.coeffs(), &[rat_int(0), rat_int(1), rat_int(-1), rat_int(1)]);
        assert_eq!(s.shift(&rat_int(0), 3), s);
    }

    #[test]
    fn ratio_expansion() {
        // u / (u - 1) = 1 + u^-1 + u^-2 + ...
        let num = UniPoly::from_coeffs((), vec![rat_int(0), rat_int(1)]);
        let den = UniPoly::linear(rat_int(-1));
        let s = TruncatedSeries::from_ratio(&num, &den, 4);
        assert_eq!(s.coeffs(), &vec![rat_int(1); 5][..]);
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries<Rational>> {
        prop::collection::vec((-9i64..9, 1i64..5), order).prop_map(move |v| {
            let mut cs = vec![rat_int(1)];
            cs.extend(v.into_iter().map(|(n, d)| rat(n, d)));
            ss(&cs, order)
        })
    }

    proptest! {
        #[test]
        fn inverse_multiplies_back(s in arb_series(6)) {
            let inv = s.invert().unwrap();
            prop_assert_eq!(s.mul(&inv), TruncatedSeries::one((), 6));
            prop_assert_eq!(inv.mul(&s), TruncatedSeries::one((), 6));
        }

        #[test]
        fn shift_is_a_group_action(s in arb_series(6), c1 in -4i64..4, c2 in -4i64..4, d in 1i64..4) {
            let (c1, c2) = (rat(c1, d), rat_int(c2));
            prop_assert_eq!(s.shift(&c1, 6).shift(&c2, 6), s.shift(&(&c1 + &c2), 6));
            prop_assert_eq!(s.shift(&c1, 6).shift(&-&c1, 6), s.clone());
        }
    }
}
