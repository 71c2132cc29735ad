//! Reduced fractions of integer polynomials: the field `Q(q)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{Field, Ring};
use crate::{Error, IntPolynomial, RatPolynomial, Result};

/// An element of `Q(q)` in canonical form.
///
/// `num` and `den` are coprime in `Z[q]` (no common polynomial factor and no
/// common integer content), `den` has positive leading coefficient, and zero
/// is `0/1`. Two values are equal iff their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    /// Builds the reduced fraction `num / den`.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPolynomial, den: IntPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.checked_div(&g).expect("gcd divides numerator"),
                den.checked_div(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(IntPolynomial::constant(BigInt::from(n)))
    }

    /// `1 / p`.
    pub fn recip_poly(p: &IntPolynomial) -> Result<Self> {
        Self::new(IntPolynomial::one(), p.clone())
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    /// The value as a polynomial when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&IntPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Evaluates at a rational point; `None` when `q0` is a pole.
    pub fn eval(&self, q0: &BigRational) -> Option<BigRational> {
        let to_rat = |p: &IntPolynomial| -> RatPolynomial {
            p.map(|c| BigRational::from_integer(c.clone()))
        };
        let d = to_rat(&self.den).eval(q0);
        if d.is_zero() {
            return None;
        }
        Some(to_rat(&self.num).eval(q0) / d)
    }

    /// First `order + 1` Taylor coefficients at `q = 0`, by long division.
    pub fn series(&self, order: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::NotExpandable);
        }
        let d0 = BigRational::from_integer(d0);
        let den: Vec<BigRational> = self
            .den
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            // num_k = sum_{i<=k} den_i * out_{k-i}
            let mut acc = BigRational::from_integer(self.num.coeff(k));
            for (i, d) in den.iter().enumerate().skip(1).take(k) {
                if !d.is_zero() {
                    acc -= d * &out[k - i];
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }
}

/// Multiplies a vector by the lcm of its denominators, giving a polynomial
/// vector spanning the same `Q(q)`-line.
pub fn clear_denominators(values: &[RationalFunction]) -> Vec<IntPolynomial> {
    let mut lcm = IntPolynomial::one();
    for v in values {
        let g = lcm.gcd(v.den());
        let factor = v.den().checked_div(&g).expect("gcd divides denominator");
        lcm = &lcm * &factor;
    }
    values
        .iter()
        .map(|v| {
            (&lcm * v.num())
                .checked_div(v.den())
                .expect("lcm is a multiple of every denominator")
        })
        .collect()
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: IntPolynomial::zero(),
            den: IntPolynomial::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for RationalFunction {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        &self / &rhs
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero, like the primitive numeric types.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Ring for RationalFunction {
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Field for RationalFunction {}

impl From<IntPolynomial> for RationalFunction {
    fn from(p: IntPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let wrap = |p: &IntPolynomial| {
                if p.term_count() > 1 {
                    format!("({p})")
                } else {
                    p.to_string()
                }
            };
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RF({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(c)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn normalize_examples() {
        let f = RationalFunction::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!((f.num(), f.den()), (&p(&[1, 1]), &p(&[1])));
        let z = RationalFunction::new(p(&[]), p(&[1, 1])).unwrap();
        assert_eq!((z.num(), z.den()), (&p(&[]), &p(&[1])));
        let g = RationalFunction::new(p(&[2, 2]), p(&[-2])).unwrap();
        assert_eq!((g.num(), g.den()), (&p(&[-1, -1]), &p(&[1])));
        assert!(matches!(
            RationalFunction::new(p(&[1]), p(&[])),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn series_examples() {
        let geo = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(geo.series(3).unwrap(), vec![rat(1); 4]);
        let aff = RationalFunction::new(p(&[1, 1]), p(&[1, -1])).unwrap();
        assert_eq!(
            aff.series(4).unwrap(),
            vec![rat(1), rat(2), rat(2), rat(2), rat(2)]
        );
        let poly = RationalFunction::from_poly(p(&[1, 1]));
        assert_eq!(poly.series(2).unwrap(), vec![rat(1), rat(1), rat(0)]);
        let bad = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        assert!(matches!(bad.series(2), Err(Error::NotExpandable)));
    }

    #[test]
    fn field_ops() {
        let a = RationalFunction::new(p(&[1]), p(&[1, 1])).unwrap();
        let two_a = &a + &a;
        assert_eq!(two_a, RationalFunction::new(p(&[2]), p(&[1, 1])).unwrap());
        let one = &a / &a;
        assert!(one.is_one());
        // 1/(1+q) + 1/(1+q) - 1 = (1-q)/(1+q)
        let chi = &two_a - &RationalFunction::one();
        assert_eq!(chi, RationalFunction::new(p(&[1, -1]), p(&[1, 1])).unwrap());
        assert_eq!(chi.eval(&rat(1)), Some(rat(0)));
        assert_eq!(chi.eval(&rat(-1)), None);
    }

    #[test]
    fn display() {
        let f = RationalFunction::new(p(&[1, -1]), p(&[1, 1])).unwrap();
        assert_eq!(f.to_string(), "(-q + 1)/(q + 1)");
    }
}
