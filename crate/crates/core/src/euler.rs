//! Hattori-Stallings ranks through the canonical trace, the Euler
//! characteristic `chi_H` and its comparison with the Poincaré series.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coxeter::{
    finite_decomposition, is_finite_type, poincare_from_degrees, poincare_truncated, CayleyBall,
    CoxeterMatrix, Extent, GenSet, PoincareTable, DEFAULT_MEMORY_CAP,
};
use crate::hecke::HeckeAlgebra;
use crate::{Error, IntPolynomial, RationalFunction, Result};

/// `(-1)^(|S \ I| - 1)`, the sign of `I` in the alternating sum over proper
/// subsets of `S`.
pub fn parabolic_sign(whole: GenSet, subset: GenSet) -> i64 {
    if (whole.len() - subset.len() - 1).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `p_I` of a finite-type subset as a product over its irreducible
/// components of `prod [d_i]_q`.
pub fn poincare_by_degrees(m: &CoxeterMatrix, subset: GenSet) -> Option<IntPolynomial> {
    let comps = finite_decomposition(m, subset)?;
    Some(comps.into_iter().fold(IntPolynomial::one(), |acc, (_, t)| {
        &acc * &poincare_from_degrees(t)
    }))
}

/// `mu(r_{H e_I}) = mu(e_I)`, computed from `tau_I` inside the ball.
pub fn hs_rank_trace_idempotent(ball: &CayleyBall, subset: GenSet) -> Result<RationalFunction> {
    Ok(HeckeAlgebra::new(ball)
        .idempotent(subset)?
        .canonical_trace())
}

/// Memoized `chi` over subsets of one system.
#[derive(Debug)]
pub struct ChiTable<'a> {
    system: &'a CoxeterMatrix,
    memo: HashMap<GenSet, RationalFunction>,
}

impl<'a> ChiTable<'a> {
    pub fn new(system: &'a CoxeterMatrix) -> Self {
        ChiTable {
            system,
            memo: HashMap::new(),
        }
    }

    /// `1 / p_I` for finite type, otherwise
    /// `sum_{J < I} (-1)^(|I \ J| - 1) chi(J)`.
    pub fn get(&mut self, subset: GenSet) -> RationalFunction {
        if let Some(v) = self.memo.get(&subset) {
            return v.clone();
        }
        let value = match poincare_by_degrees(self.system, subset) {
            Some(p) => RationalFunction::recip_poly(&p).expect("Poincaré polynomial is nonzero"),
            None => {
                let mut acc = RationalFunction::zero();
                for j in subset.proper_subsets() {
                    let term = self.get(j);
                    if parabolic_sign(subset, j) > 0 {
                        acc = &acc + &term;
                    } else {
                        acc = &acc - &term;
                    }
                }
                acc
            }
        };
        self.memo.insert(subset, value.clone());
        value
    }
}

/// `chi_H` of `(W_I, I)`.
pub fn chi(m: &CoxeterMatrix, subset: GenSet) -> RationalFunction {
    ChiTable::new(m).get(subset)
}

/// The ball radius needed to hold every finite parabolic `W_I`, `I < S`.
pub fn parabolic_radius(m: &CoxeterMatrix) -> usize {
    m.full_set()
        .proper_subsets()
        .filter_map(|i| poincare_by_degrees(m, i))
        .map(|p| p.degree().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

fn chi_via_traces(
    ball: &CayleyBall,
    subset: GenSet,
    memo: &mut HashMap<GenSet, RationalFunction>,
) -> Result<RationalFunction> {
    if let Some(v) = memo.get(&subset) {
        return Ok(v.clone());
    }
    let value = if is_finite_type(ball.system(), subset) {
        hs_rank_trace_idempotent(ball, subset)?
    } else {
        let mut acc = RationalFunction::zero();
        for j in subset.proper_subsets() {
            let term = chi_via_traces(ball, j, memo)?;
            acc = if parabolic_sign(subset, j) > 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    };
    memo.insert(subset, value.clone());
    Ok(value)
}

/// `sum_{I < S} (-1)^(|S \ I| - 1) mu(e_I)`, the alternating sum of the
/// ranks of the terms of the Deodhar resolution, with each `mu(e_I)` read
/// off `tau_I` in the ball.
pub fn chi_via_complex(ball: &CayleyBall) -> Result<RationalFunction> {
    let m = ball.system();
    if is_finite_type(m, m.full_set()) {
        return Err(Error::NotInfiniteType(
            "the Deodhar complex is not a resolution for finite W; use chi".into(),
        ));
    }
    let mut memo = HashMap::new();
    let mut acc = RationalFunction::zero();
    for i in m.full_set().proper_subsets() {
        let term = chi_via_traces(ball, i, &mut memo)?;
        acc = if parabolic_sign(m.full_set(), i) > 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    Ok(acc)
}

/// One summand of the alternating sum defining `chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicTerm {
    pub subset: GenSet,
    pub sign: i64,
    /// `chi(I)`, which is `1 / p_I` when `W_I` is finite.
    pub inv_p: RationalFunction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerResult {
    pub chi: RationalFunction,
    pub poincare: RationalFunction,
    pub product_ok: bool,
    pub per_parabolic: Vec<ParabolicTerm>,
    /// `mu(e_S)` for finite `W` small enough to enumerate.
    pub trace_route: Option<RationalFunction>,
}

impl EulerResult {
    /// Product identity plus, when present, agreement of the trace route.
    pub fn ok(&self) -> bool {
        self.product_ok && self.trace_route.as_ref().is_none_or(|t| *t == self.chi)
    }
}

/// `chi * p = 1`, with `chi` from the parabolic recursion on
/// product-of-degrees base cases and `p` from enumeration.
pub fn verify_theorem_a(m: &CoxeterMatrix) -> Result<EulerResult> {
    let full = m.full_set();
    let mut table = ChiTable::new(m);
    let chi = table.get(full);
    let poincare = PoincareTable::new(m).get(full);
    let product_ok = (&chi * &poincare).is_one();
    let finite = is_finite_type(m, full);
    let per_parabolic = if finite {
        vec![ParabolicTerm {
            subset: full,
            sign: 1,
            inv_p: chi.clone(),
        }]
    } else {
        full.proper_subsets()
            .map(|i| ParabolicTerm {
                subset: i,
                sign: parabolic_sign(full, i),
                inv_p: table.get(i),
            })
            .collect()
    };
    let trace_route = if finite {
        match CayleyBall::build(m, Extent::Complete) {
            Ok(ball) => Some(hs_rank_trace_idempotent(&ball, full)?),
            Err(e) if e.is_resource() => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(EulerResult {
        chi,
        poincare,
        product_ok,
        per_parabolic,
        trace_route,
    })
}

fn series_product(a: &[BigRational], b: &[BigRational], order: usize) -> Vec<BigRational> {
    (0..=order)
        .map(|k| {
            (0..=k)
                .filter(|&i| i < a.len() && k - i < b.len())
                .fold(BigRational::zero(), |acc, i| acc + &a[i] * &b[k - i])
        })
        .collect()
}

/// `(sum_{l(w) <= L} q^l(w)) * series(chi) = 1 + O(q^(L+1))`.
pub fn verify_poincare_series_identity(ball: &CayleyBall, order: usize) -> Result<bool> {
    let counts = poincare_truncated(ball, order)?;
    let p: Vec<BigRational> = (0..=order)
        .map(|k| BigRational::from_integer(counts.coeff(k)))
        .collect();
    let m = ball.system();
    let chi_series = chi(m, m.full_set()).series(order)?;
    let prod = series_product(&p, &chi_series, order);
    Ok(prod
        .iter()
        .enumerate()
        .all(|(k, c)| if k == 0 { c.is_one() } else { c.is_zero() }))
}

/// Finite-type subsets `I` with `p_I(q0) = 0`.
pub fn non_invertible_parabolics(m: &CoxeterMatrix, q0: &BigRational) -> Vec<GenSet> {
    m.full_set()
        .subsets()
        .filter(|&i| {
            poincare_by_degrees(m, i).is_some_and(|p| {
                p.map(|c: &BigInt| BigRational::from_integer(c.clone()))
                    .eval(q0)
                    .is_zero()
            })
        })
        .collect()
}

fn check_hypothesis(m: &CoxeterMatrix, q0: &BigRational) -> Result<()> {
    let bad = non_invertible_parabolics(m, q0);
    if bad.is_empty() {
        return Ok(());
    }
    let names: Vec<String> = bad
        .iter()
        .map(|&i| format!("p_{}({q0}) = 0", m.subset_name(i)))
        .collect();
    Err(Error::HypothesisViolated(format!(
        "{} not invertible",
        names.join(", ")
    )))
}

/// Evaluates `f` at `q0` after checking that every finite parabolic has an
/// invertible Poincaré value there.
pub fn specialize(
    f: &RationalFunction,
    q0: &BigRational,
    m: &CoxeterMatrix,
) -> Result<BigRational> {
    check_hypothesis(m, q0)?;
    f.eval(q0).ok_or_else(|| Error::Pole(q0.to_string()))
}

/// The `chi` recursion carried out in `Q` at `q = q0`.
pub fn chi_at(m: &CoxeterMatrix, q0: &BigRational) -> Result<BigRational> {
    check_hypothesis(m, q0)?;
    fn go(
        m: &CoxeterMatrix,
        q0: &BigRational,
        subset: GenSet,
        memo: &mut BTreeMap<u64, BigRational>,
    ) -> BigRational {
        if let Some(v) = memo.get(&subset.bits()) {
            return v.clone();
        }
        let value = match poincare_by_degrees(m, subset) {
            Some(p) => {
                let v = p
                    .map(|c: &BigInt| BigRational::from_integer(c.clone()))
                    .eval(q0);
                v.recip()
            }
            None => subset.proper_subsets().fold(BigRational::zero(), |acc, j| {
                let term = go(m, q0, j, memo);
                if parabolic_sign(subset, j) > 0 {
                    acc + term
                } else {
                    acc - term
                }
            }),
        };
        memo.insert(subset.bits(), value.clone());
        value
    }
    Ok(go(m, q0, m.full_set(), &mut BTreeMap::new()))
}

/// `chi_via_complex` on a freshly built ball of the required radius.
pub fn chi_via_complex_for(m: &CoxeterMatrix) -> Result<RationalFunction> {
    let ball =
        CayleyBall::build_with_cap(m, Extent::Radius(parabolic_radius(m)), DEFAULT_MEMORY_CAP)?;
    chi_via_complex(&ball)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{catalog, poincare_exact};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn chi_examples() {
        let a1 = catalog("A1").unwrap();
        assert_eq!(chi(&a1, a1.full_set()), rf(&[1], &[1, 1]));
        assert!(chi(&a1, GenSet::EMPTY).is_one());
        let aff = catalog("Atilde1").unwrap();
        assert_eq!(chi(&aff, aff.full_set()), rf(&[1, -1], &[1, 1]));
    }

    #[test]
    fn affine_a2_by_hand() {
        // 3/p_A2 - 3/p_A1 + 1
        let m = catalog("Atilde2").unwrap();
        let three = RationalFunction::from_int(3);
        let expected = &(&(&three * &rf(&[1], &[1, 2, 2, 1])) - &(&three * &rf(&[1], &[1, 1])))
            + &RationalFunction::one();
        assert_eq!(chi(&m, m.full_set()), expected);
        assert_eq!(chi_via_complex_for(&m).unwrap(), expected);
    }

    #[test]
    fn hs_ranks() {
        let m = catalog("A2").unwrap();
        let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
        assert!(hs_rank_trace_idempotent(&ball, GenSet::EMPTY)
            .unwrap()
            .is_one());
        assert_eq!(
            hs_rank_trace_idempotent(&ball, GenSet::singleton(0)).unwrap(),
            rf(&[1], &[1, 1])
        );
        assert_eq!(
            hs_rank_trace_idempotent(&ball, m.full_set()).unwrap(),
            rf(&[1], &[1, 2, 2, 1])
        );
    }

    #[test]
    fn theorem_a_examples() {
        for name in ["A2", "H3", "Atilde1", "Hyp334"] {
            let m = catalog(name).unwrap();
            let r = verify_theorem_a(&m).unwrap();
            assert!(r.ok(), "{name}");
        }
        let aff = verify_theorem_a(&catalog("Atilde1").unwrap()).unwrap();
        assert_eq!(aff.poincare, rf(&[1, 1], &[1, -1]));
        assert_eq!(aff.per_parabolic.len(), 3);
    }

    #[test]
    fn chi_via_complex_rejects_finite() {
        let m = catalog("A2").unwrap();
        let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
        assert!(matches!(
            chi_via_complex(&ball),
            Err(Error::NotInfiniteType(_))
        ));
    }

    #[test]
    fn series_identity() {
        let m = catalog("Atilde1").unwrap();
        let ball = CayleyBall::build(&m, Extent::Radius(8)).unwrap();
        assert!(verify_poincare_series_identity(&ball, 8).unwrap());
        let a2 = CayleyBall::build(&catalog("A2").unwrap(), Extent::Complete).unwrap();
        assert!(verify_poincare_series_identity(&a2, 6).unwrap());
    }

    #[test]
    fn specializations() {
        let a2 = catalog("A2").unwrap();
        let c = chi(&a2, a2.full_set());
        assert_eq!(specialize(&c, &rat(1, 1), &a2).unwrap(), rat(1, 6));
        let err = specialize(&c, &rat(-1, 1), &a2).unwrap_err();
        assert!(err.to_string().contains("p_[s1](-1) = 0"), "{err}");
        let aff = catalog("Atilde1").unwrap();
        let c = chi(&aff, aff.full_set());
        assert_eq!(specialize(&c, &rat(1, 1), &aff).unwrap(), rat(0, 1));
        let p = poincare_exact(&aff, aff.full_set());
        assert!(matches!(
            specialize(&p, &rat(1, 1), &aff),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn specialization_commutes() {
        for name in ["A3", "Atilde2", "Hyp334", "Btilde2"] {
            let m = catalog(name).unwrap();
            let c = chi(&m, m.full_set());
            for q0 in [rat(2, 1), rat(1, 2), rat(3, 1)] {
                assert_eq!(
                    specialize(&c, &q0, &m).unwrap(),
                    chi_at(&m, &q0).unwrap(),
                    "{name}"
                );
            }
        }
    }
}
