//! Elements of the cyclotomic ring `C[y] / Phi_n(y)`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{cyclotomic_polynomial, Polynomial};
use super::scalar::{FromInteger, Ring};
use crate::{Error, Result};

/// A residue modulo the `n`-th cyclotomic polynomial.
///
/// `coeffs` always has degree below `phi(n)`. The modulus is shared between
/// all elements built from the same [`CyclotomicRing`].
#[derive(Clone)]
pub struct CycloElement<C> {
    conductor: usize,
    modulus: Arc<Polynomial<C>>,
    coeffs: Polynomial<C>,
}

/// Factory for elements of a fixed conductor.
#[derive(Clone, Debug)]
pub struct CyclotomicRing<C> {
    conductor: usize,
    modulus: Arc<Polynomial<C>>,
}

impl<C: Ring + FromInteger> CyclotomicRing<C> {
    pub fn new(conductor: usize) -> Self {
        let phi = cyclotomic_polynomial(conductor).map(|c: &BigInt| C::from_bigint(c));
        CyclotomicRing {
            conductor,
            modulus: Arc::new(phi),
        }
    }
}

impl<C: Ring> CyclotomicRing<C> {
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn modulus(&self) -> &Polynomial<C> {
        &self.modulus
    }

    pub fn element(&self, coeffs: Polynomial<C>) -> CycloElement<C> {
        CycloElement {
            conductor: self.conductor,
            modulus: self.modulus.clone(),
            coeffs: coeffs.rem_monic(&self.modulus),
        }
    }

    pub fn zero(&self) -> CycloElement<C> {
        self.element(Polynomial::zero())
    }

    pub fn one(&self) -> CycloElement<C> {
        self.element(Polynomial::one())
    }

    pub fn from_scalar(&self, c: C) -> CycloElement<C> {
        self.element(Polynomial::constant(c))
    }

    /// The primitive root `y^k`, for any integer `k`.
    pub fn root_pow(&self, k: i64) -> CycloElement<C> {
        let n = self.conductor as i64;
        self.element(Polynomial::q_pow(k.rem_euclid(n) as usize))
    }
}

impl<C: Ring> CycloElement<C> {
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &Polynomial<C> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.is_one()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch(self.conductor, other.conductor));
        }
        Ok(())
    }

    fn with(&self, coeffs: Polynomial<C>) -> Self {
        CycloElement {
            conductor: self.conductor,
            modulus: self.modulus.clone(),
            coeffs,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(&self.coeffs + &other.coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(&self.coeffs - &other.coeffs))
    }

    pub fn neg(&self) -> Self {
        self.with(-&self.coeffs)
    }

    /// Product reduced modulo `Phi_n`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with((&self.coeffs * &other.coeffs).rem_monic(&self.modulus)))
    }
}

impl<C: PartialEq> PartialEq for CycloElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor && self.coeffs == other.coeffs
    }
}

impl<C: Eq> Eq for CycloElement<C> {}

impl<C: Hash> Hash for CycloElement<C> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor.hash(state);
        self.coeffs.hash(state);
    }
}

impl<C: fmt::Debug> fmt::Debug for CycloElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo{}{:?}", self.conductor, self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Cyclo, IntCyclo};
    use num_rational::BigRational;

    #[test]
    fn square_of_i_is_minus_one() {
        let ring = CyclotomicRing::<BigRational>::new(4);
        let y = ring.root_pow(1);
        let minus_one = ring.from_scalar(BigRational::from_integer((-1).into()));
        assert_eq!(y.mul(&y).unwrap(), minus_one);
    }

    #[test]
    fn identity_and_inverse() {
        let ring = CyclotomicRing::<BigRational>::new(12);
        let one = ring.one();
        for k in 0..12 {
            let x: Cyclo = ring.root_pow(k);
            assert_eq!(one.mul(&x).unwrap(), x);
        }
        // y * y^11: reduce y^11 modulo q^4 - q^2 + 1 first.
        let y11 = ring.element(Polynomial::q_pow(11));
        assert_eq!(y11.coeffs().degree(), Some(3));
        assert!(ring.root_pow(1).mul(&y11).unwrap().is_one());
        assert_eq!(ring.root_pow(-1), y11);
    }

    #[test]
    fn conductor_mismatch() {
        let a: IntCyclo = CyclotomicRing::new(4).one();
        let b: IntCyclo = CyclotomicRing::new(6).one();
        assert!(matches!(a.mul(&b), Err(Error::ConductorMismatch(4, 6))));
    }

    #[test]
    fn cosine_sum_for_pentagon() {
        // (y + y^-1)^2 = (y + y^-1) + 1 for y a primitive 10th root.
        let ring = CyclotomicRing::<BigInt>::new(10);
        let c = ring.root_pow(1).add(&ring.root_pow(-1)).unwrap();
        let lhs = c.mul(&c).unwrap();
        let rhs = c.add(&ring.one()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
