//! The induced module `Ind_I^S(R_q) = H (x)_{H_I} R_q` with basis
//! `T_w eta_I`, `w in W^I`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::algebra::HeckeAlgebra;
use super::element::HeckeElement;
use crate::coxeter::{parabolic_decompose, CayleyBall, GenSet};
use crate::{Error, IntPolynomial, Result};

/// A `Z[q]`-combination of `T_w eta_I` with every `w` a minimal coset
/// representative for `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedVector {
    subset: GenSet,
    terms: BTreeMap<usize, IntPolynomial>,
}

impl InducedVector {
    pub fn zero(subset: GenSet) -> Self {
        InducedVector {
            subset,
            terms: BTreeMap::new(),
        }
    }

    /// `eta_I = T_1 eta_I`.
    pub fn eta(subset: GenSet) -> Self {
        let mut v = Self::zero(subset);
        v.terms.insert(0, IntPolynomial::one());
        v
    }

    pub fn subset(&self) -> GenSet {
        self.subset
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: usize) -> IntPolynomial {
        self.terms
            .get(&w)
            .cloned()
            .unwrap_or_else(IntPolynomial::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &IntPolynomial)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    fn add_raw(&mut self, w: usize, c: IntPolynomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(IntPolynomial::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// Adds `c T_w eta_I` for an arbitrary `w`, rewriting it as
    /// `c q^l(w_I) T_{w^I} eta_I`.
    pub fn add_element(&mut self, ball: &CayleyBall, w: usize, c: &IntPolynomial) -> Result<()> {
        let d = parabolic_decompose(ball, ball.get(w)?, self.subset)?;
        self.add_raw(d.coset_part.index, c.shift(d.parabolic_part.length));
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.subset != other.subset {
            return Err(Error::DimensionMismatch(
                "induced vectors over different parabolics".into(),
            ));
        }
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_raw(w, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &IntPolynomial) -> Self {
        let mut out = Self::zero(self.subset);
        for (w, x) in self.terms() {
            out.add_raw(w, x * c);
        }
        out
    }
}

impl<'a> HeckeAlgebra<'a> {
    /// `T_s * v` in `Ind_I^S(R_q)`.
    pub fn induced_action(&self, s: usize, v: &InducedVector) -> Result<InducedVector> {
        let ball = self.ball();
        let q = IntPolynomial::q();
        let q_minus_one = &q - &IntPolynomial::one();
        let mut out = InducedVector::zero(v.subset);
        for (w, c) in v.terms() {
            let sw = ball.left_mul(s, w).ok_or(Error::RadiusInsufficient {
                required: ball.length(w) + 1,
                available: ball.radius(),
            })?;
            if ball.length(sw) > ball.length(w) {
                out.add_element(ball, sw, c)?;
            } else {
                out.add_raw(w, &q_minus_one * c);
                out.add_element(ball, sw, &(&q * c))?;
            }
        }
        Ok(out)
    }

    /// `a * v`, folding each `T_u` of `a` as a reduced word.
    pub fn induced_act(&self, a: &HeckeElement, v: &InducedVector) -> Result<InducedVector> {
        let mut out = InducedVector::zero(v.subset);
        for (u, c) in a.terms() {
            let mut acc = v.scale(c);
            for &s in self.ball().word(u).iter().rev() {
                acc = self.induced_action(s, &acc)?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// `c_I(a) = a eta_I`.
    pub fn c_map(&self, a: &HeckeElement, subset: GenSet) -> Result<InducedVector> {
        let mut out = InducedVector::zero(subset);
        for (w, c) in a.terms() {
            out.add_element(self.ball(), w, c)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{catalog, coset_reps, Extent};

    fn a2() -> CayleyBall {
        let m = catalog("A2").unwrap().with_names(&["s", "t"]).unwrap();
        CayleyBall::build(&m, Extent::Complete).unwrap()
    }

    #[test]
    fn full_parabolic_is_augmentation() {
        let ball = a2();
        let h = HeckeAlgebra::new(&ball);
        let eta = InducedVector::eta(GenSet::full(2));
        for s in 0..2 {
            assert_eq!(
                h.induced_action(s, &eta).unwrap(),
                eta.scale(&IntPolynomial::q())
            );
        }
    }

    #[test]
    fn empty_parabolic_is_regular() {
        let ball = a2();
        let h = HeckeAlgebra::new(&ball);
        for w in 0..ball.len() {
            let mut v = InducedVector::zero(GenSet::EMPTY);
            v.add_element(&ball, w, &IntPolynomial::one()).unwrap();
            for s in 0..2 {
                let prod = h
                    .mul(
                        &h.t(ball.from_word(&[s]).unwrap()).unwrap(),
                        &h.t(w).unwrap(),
                    )
                    .unwrap();
                let expected = h.c_map(&prod, GenSet::EMPTY).unwrap();
                assert_eq!(h.induced_action(s, &v).unwrap(), expected);
            }
        }
    }

    #[test]
    fn a2_example() {
        let ball = a2();
        let h = HeckeAlgebra::new(&ball);
        let t = GenSet::singleton(1);
        let ts = ball.from_word(&[1, 0]).unwrap();
        let mut v = InducedVector::zero(t);
        v.add_element(&ball, ts, &IntPolynomial::one()).unwrap();
        assert_eq!(
            h.induced_action(0, &v).unwrap(),
            v.scale(&IntPolynomial::q())
        );
    }

    #[test]
    fn supports_are_coset_reps() {
        let ball = a2();
        let h = HeckeAlgebra::new(&ball);
        for bits in 0..4u64 {
            let subset = GenSet::from_bits(bits);
            let reps: Vec<usize> = coset_reps(&ball, subset).iter().map(|e| e.index).collect();
            for w in 0..ball.len() {
                let v = h.c_map(&h.t(w).unwrap(), subset).unwrap();
                assert!(v.terms().all(|(x, _)| reps.contains(&x)));
            }
        }
    }
}
