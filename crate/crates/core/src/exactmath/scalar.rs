//! Scalar traits shared by the polynomial, cyclotomic and matrix code.
//!
//! Everything in this crate is exact, so the traits only ask for ring or
//! field operations; there is no notion of tolerance anywhere.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Exact quotient `self / rhs`, or `None` when `rhs` does not divide `self`.
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self>;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Ring for BigInt {
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        r.is_zero().then_some(q)
    }
}

impl Ring for i64 {
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0 || self % rhs != 0 {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Ring for BigRational {
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Field for BigRational {}

impl Ring for Ratio<i64> {
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Field for Ratio<i64> {}

/// Integer embedding into a coefficient ring.
pub trait FromInteger: Ring {
    fn from_bigint(n: &BigInt) -> Self;
    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
}

impl FromInteger for BigInt {
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}

impl FromInteger for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

/// Parses `"a"` or `"a/b"` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Formats a rational as `"a"` or `"a/b"`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        assert_eq!(
            BigInt::from(12).checked_exact_div(&BigInt::from(4)),
            Some(BigInt::from(3))
        );
        assert_eq!(BigInt::from(12).checked_exact_div(&BigInt::from(5)), None);
        assert_eq!(7i64.checked_exact_div(&0), None);
    }

    #[test]
    fn rational_syntax() {
        let r = parse_rational("-6/4").unwrap();
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&parse_rational("5").unwrap()), "5");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }
}
