use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{Additive, Ring};
use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(x: &Rational) -> bool {
    x.is_integer()
}

/// Integer value of `x` when it is an integer fitting in `i64`.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// Parses `"num/den"` or `"num"` (optional sign, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim());
            let d = BigInt::from_str(d.trim());
            match (n, d) {
                (Ok(n), Ok(d)) if !d.is_zero() => Some(Rational::new(n, d)),
                _ => None,
            }
        }
        None => BigInt::from_str(t).ok().map(Rational::from_integer),
    };
    parsed.ok_or_else(|| Error::Input(format!("not a rational number: {s:?}")))
}

/// Binomial coefficient C(n, k) as a rational (zero when k > n).
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Rational::from_integer(acc)
}

impl Additive for Rational {
    type Shape = ();

    fn shape(&self) {}

    fn zero_of(_: &()) -> Self {
        Zero::zero()
    }

    fn is_null(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn negated(&self) -> Self {
        -self
    }

    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        *self += other * c;
    }

    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}

impl Ring for Rational {
    fn one_of(_: &()) -> Self {
        One::one()
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn is_unit(&self) -> bool {
        One::is_one(self)
    }
}
