//! Poincaré series `p_(W,S)(q) = sum_w q^l(w)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ball::{CayleyBall, Extent, DEFAULT_MEMORY_CAP};
use super::classify::{finite_decomposition, FiniteType};
use super::system::{CoxeterMatrix, GenSet};
use crate::{Error, IntPolynomial, RationalFunction, Result};

/// `sum_{l(w) <= bound} q^l(w)` over a ball.
pub fn poincare_truncated(ball: &CayleyBall, bound: usize) -> Result<IntPolynomial> {
    if !ball.covers(bound) {
        return Err(Error::RadiusInsufficient {
            required: bound,
            available: ball.radius(),
        });
    }
    let hist = ball.length_histogram();
    Ok(IntPolynomial::new(
        hist.iter()
            .take(bound + 1)
            .map(|&c| BigInt::from(c))
            .collect(),
    ))
}

/// `prod_i [d_i]_q` from the degrees of a finite irreducible type.
pub fn poincare_from_degrees(t: FiniteType) -> IntPolynomial {
    t.degrees()
        .into_iter()
        .fold(IntPolynomial::one(), |acc, d| {
            &acc * &IntPolynomial::new(vec![BigInt::one(); d])
        })
}

/// Memoized evaluation of Poincaré series over subsets of one Coxeter system.
#[derive(Debug)]
pub struct PoincareTable<'a> {
    system: &'a CoxeterMatrix,
    enumeration_cap: usize,
    memo: HashMap<GenSet, RationalFunction>,
}

impl<'a> PoincareTable<'a> {
    pub fn new(system: &'a CoxeterMatrix) -> Self {
        Self::with_cap(system, DEFAULT_MEMORY_CAP)
    }

    /// Irreducible finite components with more than `enumeration_cap`
    /// elements use the product-of-degrees formula instead of enumeration.
    pub fn with_cap(system: &'a CoxeterMatrix, enumeration_cap: usize) -> Self {
        PoincareTable {
            system,
            enumeration_cap,
            memo: HashMap::new(),
        }
    }

    /// Poincaré polynomial of a finite-type subset, or `None` otherwise.
    pub fn finite_polynomial(&self, subset: GenSet) -> Option<IntPolynomial> {
        let comps = finite_decomposition(self.system, subset)?;
        let mut p = IntPolynomial::one();
        for (comp, ty) in comps {
            let factor = if ty.order() <= self.enumeration_cap as u128 {
                let ball = CayleyBall::build(&self.system.restrict(comp), Extent::Complete)
                    .expect("finite component enumerates within cap");
                poincare_truncated(&ball, ball.radius()).expect("complete ball")
            } else {
                poincare_from_degrees(ty)
            };
            p = &p * &factor;
        }
        Some(p)
    }

    /// `p_(W_I, I)` as a reduced rational function. Finite subsets enumerate;
    /// infinite ones use `1/p_I = sum_{J < I} (-1)^(|I|-|J|-1) / p_J`.
    pub fn get(&mut self, subset: GenSet) -> RationalFunction {
        if let Some(v) = self.memo.get(&subset) {
            return v.clone();
        }
        let value = match self.finite_polynomial(subset) {
            Some(p) => RationalFunction::from_poly(p),
            None => {
                let mut inv = RationalFunction::zero();
                for j in subset.proper_subsets() {
                    let term = self.get(j).recip().expect("Poincaré series is nonzero");
                    if (subset.len() - j.len() - 1).is_multiple_of(2) {
                        inv = &inv + &term;
                    } else {
                        inv = &inv - &term;
                    }
                }
                inv.recip().expect("alternating sum of 1/p_J is nonzero")
            }
        };
        self.memo.insert(subset, value.clone());
        value
    }
}

/// Poincaré series of `(W_I, I)`.
pub fn poincare_exact(m: &CoxeterMatrix, subset: GenSet) -> RationalFunction {
    PoincareTable::new(m).get(subset)
}
