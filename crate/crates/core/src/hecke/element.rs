use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::IntPolynomial;

/// A finite `Z[q]`-linear combination of basis elements `T_w`, keyed by
/// element index in the underlying ball. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<usize, IntPolynomial>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: usize) -> Self {
        Self::monomial(w, IntPolynomial::one())
    }

    pub fn monomial(w: usize, c: IntPolynomial) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, IntPolynomial)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, &c);
        }
        out
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

    /// Terms in increasing index order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &IntPolynomial)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: usize, c: &IntPolynomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        HeckeElement {
            terms: self.terms.iter().map(|(&w, c)| (w, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &IntPolynomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HeckeElement {
            terms: self.terms.iter().map(|(&w, x)| (w, x * c)).collect(),
        }
    }

    /// Largest index in the support; indices are sorted by length.
    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }
}
