//! Multiplication, antipode, characters, the bilinear form and the
//! canonical trace of `H_q(W, S)` over a Cayley ball.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::element::HeckeElement;
use crate::coxeter::{
    group_order, is_finite_type, parabolic_subgroup, CayleyBall, GenSet, PoincareTable,
};
use crate::{Error, IntPolynomial, RationalFunction, Result};

/// The two one-dimensional characters with `T_s -> q` and `T_s -> -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearCharacter {
    /// `epsilon_q`, the augmentation.
    AugmentationQ,
    /// `epsilon_{-1}`, the sign character.
    Sign,
}

/// The Hecke algebra restricted to the elements of a ball.
#[derive(Clone, Copy, Debug)]
pub struct HeckeAlgebra<'a> {
    ball: &'a CayleyBall,
}

impl<'a> HeckeAlgebra<'a> {
    pub fn new(ball: &'a CayleyBall) -> Self {
        HeckeAlgebra { ball }
    }

    pub fn ball(&self) -> &'a CayleyBall {
        self.ball
    }

    /// `T_w`.
    pub fn t(&self, w: usize) -> Result<HeckeElement> {
        self.ball.get(w)?;
        Ok(HeckeElement::basis(w))
    }

    /// `T_1`, the unit.
    pub fn one(&self) -> HeckeElement {
        HeckeElement::basis(0)
    }

    /// `T_w` for `w` given as a word in generator indices.
    pub fn t_word(&self, word: &[usize]) -> Result<HeckeElement> {
        Ok(HeckeElement::basis(self.ball.from_word(word)?))
    }

    fn max_length(&self, a: &HeckeElement) -> usize {
        a.max_index().map_or(0, |w| self.ball.length(w))
    }

    /// `T_s * a` from the quadratic relation.
    pub fn left_mul_generator(&self, s: usize, a: &HeckeElement) -> Result<HeckeElement> {
        let q = IntPolynomial::q();
        let q_minus_one = &q - &IntPolynomial::one();
        let mut out = HeckeElement::zero();
        for (w, c) in a.terms() {
            let sw = self.ball.left_mul(s, w).ok_or(Error::RadiusInsufficient {
                required: self.ball.length(w) + 1,
                available: self.ball.radius(),
            })?;
            if self.ball.length(sw) > self.ball.length(w) {
                out.add_term(sw, c);
            } else {
                out.add_term(w, &(&q_minus_one * c));
                out.add_term(sw, &(&q * c));
            }
        }
        Ok(out)
    }

    /// `T_u * b` by folding a reduced word of `u` onto `b` from the right.
    pub fn basis_mul(&self, u: usize, b: &HeckeElement) -> Result<HeckeElement> {
        let mut acc = b.clone();
        for &s in self.ball.word(u).iter().rev() {
            acc = self.left_mul_generator(s, &acc)?;
        }
        Ok(acc)
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        let required = self.max_length(a) + self.max_length(b);
        if !self.ball.covers(required) {
            return Err(Error::RadiusInsufficient {
                required,
                available: self.ball.radius(),
            });
        }
        let mut out = HeckeElement::zero();
        for (u, c) in a.terms() {
            let prod = self.basis_mul(u, b)?;
            for (w, d) in prod.terms() {
                out.add_term(w, &(c * d));
            }
        }
        Ok(out)
    }

    /// `T_w -> T_{w^-1}`, extended linearly.
    pub fn antipode(&self, a: &HeckeElement) -> HeckeElement {
        HeckeElement::from_terms(a.terms().map(|(w, c)| (self.ball.inverse(w), c.clone())))
    }

    pub fn character(&self, chi: LinearCharacter, a: &HeckeElement) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (w, c) in a.terms() {
            let l = self.ball.length(w);
            let v = match chi {
                LinearCharacter::AugmentationQ => c.shift(l),
                LinearCharacter::Sign if l % 2 == 1 => -c,
                LinearCharacter::Sign => c.clone(),
            };
            out += &v;
        }
        out
    }

    /// `<a, b> = sum_w a_w b_w q^l(w)`.
    pub fn bilinear_form(&self, a: &HeckeElement, b: &HeckeElement) -> IntPolynomial {
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut out = IntPolynomial::zero();
        for (w, c) in small.terms() {
            let d = large.coeff(w);
            if !d.is_zero() {
                out += &(c * &d).shift(self.ball.length(w));
            }
        }
        out
    }

    /// `<T_1, a>`, the coefficient of `T_1`.
    pub fn canonical_trace(&self, a: &HeckeElement) -> IntPolynomial {
        a.coeff(0)
    }

    fn check_parabolic(&self, subset: GenSet) -> Result<Vec<usize>> {
        let m = self.ball.system();
        if !is_finite_type(m, subset) {
            return Err(Error::NotFiniteType(format!(
                "W_I for I = {} is infinite",
                m.subset_name(subset)
            )));
        }
        let elems: Vec<usize> = parabolic_subgroup(self.ball, subset)
            .into_iter()
            .map(|e| e.index)
            .collect();
        let order = group_order(m, subset).expect("finite type");
        if elems.len() as u128 != order {
            return Err(Error::RadiusInsufficient {
                required: self.ball.radius() + 1,
                available: self.ball.radius(),
            });
        }
        Ok(elems)
    }

    /// `tau_I = sum_{w in W_I} T_w`.
    pub fn tau(&self, subset: GenSet) -> Result<HeckeElement> {
        let elems = self.check_parabolic(subset)?;
        Ok(HeckeElement::from_terms(
            elems.into_iter().map(|w| (w, IntPolynomial::one())),
        ))
    }

    /// `e_I = tau_I / p_I`.
    pub fn idempotent(&self, subset: GenSet) -> Result<Idempotent> {
        let tau = self.tau(subset)?;
        let poincare = PoincareTable::new(self.ball.system())
            .finite_polynomial(subset)
            .expect("finite type");
        Ok(Idempotent {
            subset,
            inv_poincare: RationalFunction::recip_poly(&poincare)?,
            poincare,
            tau,
        })
    }
}

/// The central idempotent `e_I` of a finite parabolic subalgebra, kept as the
/// pair `(tau_I, 1/p_I)` so that supports stay integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent {
    pub subset: GenSet,
    pub tau: HeckeElement,
    pub poincare: IntPolynomial,
    pub inv_poincare: RationalFunction,
}

impl Idempotent {
    /// `mu(e_I) = coeff_{T_1}(tau_I) / p_I`.
    pub fn canonical_trace(&self) -> RationalFunction {
        &RationalFunction::from_poly(self.tau.coeff(0)) * &self.inv_poincare
    }

    /// Checks that `p_I(q0)` is invertible, as required to specialize `e_I`.
    pub fn check_specialization(&self, q0: &BigRational) -> Result<()> {
        let v = self
            .poincare
            .map(|c: &BigInt| BigRational::from_integer(c.clone()))
            .eval(q0);
        if v.is_zero() {
            return Err(Error::HypothesisViolated(format!(
                "Poincaré value not invertible: p_I({q0}) = 0"
            )));
        }
        Ok(())
    }

    /// `e_I e_I = e_I`, i.e. `tau_I^2 = p_I tau_I`.
    pub fn is_idempotent(&self, alg: &HeckeAlgebra<'_>) -> Result<bool> {
        Ok(alg.mul(&self.tau, &self.tau)? == self.tau.scale(&self.poincare))
    }
}
