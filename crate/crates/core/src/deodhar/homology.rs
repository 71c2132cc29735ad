//! Homology of the complete complex over `Q(q)` and the `H`-action on it.

use std::fmt;

use num_traits::{One, Zero};

use super::complex::DeodharComplex;
use crate::exactmath::{kernel_basis, rank_over_fraction_field, Matrix};
use crate::{Error, IntPolynomial, PolyMatrix, RationalFunction, Result, RfMatrix};

/// How a generator `T_s` acts on a homology group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// By `q`, as on `R_q`.
    Q,
    /// By `-1`, as on `R_{-1}`.
    MinusOne,
    /// Diagonalizable with both eigenvalues `q` and `-1`.
    Split,
    /// None of the above could be verified.
    Unverified,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::Q => "q",
            Action::MinusOne => "-1",
            Action::Split => "q,-1",
            Action::Unverified => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub chain_dims: Vec<usize>,
    /// `rank d_k` for `k = 1..|S|-1`.
    pub ranks: Vec<usize>,
    pub homology: Vec<usize>,
    pub chain_ok: bool,
    /// Action of each generator on `H_0`.
    pub h0_actions: Vec<Action>,
    /// Action of each generator on `H_{|S|-1}`.
    pub top_actions: Vec<Action>,
}

fn common(actions: &[Action]) -> Option<Action> {
    let first = *actions.first()?;
    Some(if actions.iter().all(|&a| a == first) {
        first
    } else {
        Action::Unverified
    })
}

impl HomologyReport {
    /// The action shared by all generators on `H_0`.
    pub fn h0_action(&self) -> Option<Action> {
        common(&self.h0_actions)
    }

    pub fn top_action(&self) -> Option<Action> {
        common(&self.top_actions)
    }

    pub fn chain_euler(&self) -> i64 {
        alternating(&self.chain_dims)
    }

    pub fn homology_euler(&self) -> i64 {
        alternating(&self.homology)
    }

    /// `H_0 = R_q`, `H_{|S|-1} = R_{-1}` and nothing else; for `|S| = 1`
    /// both collapse onto a two-dimensional `H_0`.
    pub fn matches_expected(&self) -> bool {
        let n = self.homology.len();
        if !self.chain_ok {
            return false;
        }
        match n {
            0 => true,
            1 => self.homology == [2] && self.h0_action() == Some(Action::Split),
            _ => {
                let mut expected = vec![0; n];
                expected[0] = 1;
                expected[n - 1] = 1;
                self.homology == expected
                    && self.h0_action() == Some(Action::Q)
                    && self.top_action() == Some(Action::MinusOne)
            }
        }
    }
}

fn alternating(dims: &[usize]) -> i64 {
    dims.iter()
        .enumerate()
        .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

fn unit_vector(n: usize, j: usize) -> Vec<IntPolynomial> {
    let mut v = vec![IntPolynomial::zero(); n];
    v[j] = IntPolynomial::one();
    v
}

fn with_columns(m: &PolyMatrix, cols: &[Vec<IntPolynomial>]) -> PolyMatrix {
    let mut out = m.clone();
    for c in cols {
        out = out.augment(c).expect("column has matching length");
    }
    out
}

/// Representatives of a basis of `C_0 / im d_1`, chosen among unit vectors.
fn cokernel_reps(image: &PolyMatrix, count: usize) -> Vec<Vec<IntPolynomial>> {
    let n = image.rows();
    let mut reps: Vec<Vec<IntPolynomial>> = Vec::new();
    let mut rank = rank_over_fraction_field(image);
    for j in 0..n {
        if reps.len() == count {
            break;
        }
        let e = unit_vector(n, j);
        let mut cols = reps.clone();
        cols.push(e.clone());
        let r = rank_over_fraction_field(&with_columns(image, &cols));
        if r > rank {
            rank = r;
            reps.push(e);
        }
    }
    reps
}

fn lambda_candidates() -> [(Action, IntPolynomial); 2] {
    [
        (Action::Q, IntPolynomial::q()),
        (Action::MinusOne, -IntPolynomial::one()),
    ]
}

/// Finds `lambda` with `A v - lambda v in im(image)` for every representative.
fn action_mod_image(
    a: &PolyMatrix,
    image: &PolyMatrix,
    reps: &[Vec<IntPolynomial>],
) -> Result<Action> {
    if reps.is_empty() {
        return Ok(Action::Unverified);
    }
    let base = rank_over_fraction_field(image);
    'outer: for (action, lambda) in lambda_candidates() {
        for v in reps {
            let av = a.mul_vec(v)?;
            let diff: Vec<IntPolynomial> =
                av.iter().zip(v).map(|(x, y)| x - &(&lambda * y)).collect();
            let aug = image.augment(&diff)?;
            if rank_over_fraction_field(&aug) > base {
                continue 'outer;
            }
        }
        return Ok(action);
    }
    Ok(Action::Unverified)
}

fn to_rf(m: &PolyMatrix) -> RfMatrix {
    m.map(|p| RationalFunction::from_poly(p.clone()))
}

/// Finds `lambda` with `A v = lambda v` on every kernel vector.
fn action_on_kernel(a: &PolyMatrix, kernel: &[Vec<RationalFunction>]) -> Result<Action> {
    if kernel.is_empty() {
        return Ok(Action::Unverified);
    }
    let af = to_rf(a);
    'outer: for (action, lambda) in lambda_candidates() {
        let lambda = RationalFunction::from_poly(lambda);
        for v in kernel {
            let av = af.mul_vec(v)?;
            if av.iter().zip(v).any(|(x, y)| *x != &lambda * y) {
                continue 'outer;
            }
        }
        return Ok(action);
    }
    Ok(Action::Unverified)
}

/// `(A - q)(A + 1) = 0` with neither factor zero.
fn split_action(a: &PolyMatrix) -> Result<Action> {
    let n = a.rows();
    let id = Matrix::<IntPolynomial>::identity(n);
    let shifted = |lambda: &IntPolynomial| -> PolyMatrix {
        let mut m = a.clone();
        for i in 0..n {
            m.add_at(i, i, -(lambda * id.get(i, i)));
        }
        m
    };
    let minus_q = shifted(&IntPolynomial::q());
    let plus_one = shifted(&-IntPolynomial::one());
    let ok = minus_q.mul(&plus_one)?.is_zero() && !minus_q.is_zero() && !plus_one.is_zero();
    Ok(if ok {
        Action::Split
    } else {
        Action::Unverified
    })
}

impl DeodharComplex<'_> {
    /// Homology over `Q(q)` and the generator actions on its end degrees.
    pub fn homology(&self) -> Result<HomologyReport> {
        if self.radius().is_some() {
            return Err(Error::Invalid(
                "homology needs the complete complex; use truncated acyclicity for infinite groups"
                    .into(),
            ));
        }
        let n = self.rank();
        let chain_dims = self.basis().dims();
        let ranks: Vec<usize> = (1..n)
            .map(|k| rank_over_fraction_field(self.differential(k)))
            .collect();
        let rank_of = |k: usize| if k >= 1 && k < n { ranks[k - 1] } else { 0 };
        let homology: Vec<usize> = (0..n)
            .map(|k| chain_dims[k] - rank_of(k) - rank_of(k + 1))
            .collect();
        let chain_ok = self.verify_chain();
        let gens = 0..n;
        let (h0_actions, top_actions) = match n {
            0 => (Vec::new(), Vec::new()),
            1 => {
                let a = split_action(&self.generator_action(0, 0)?)?;
                (vec![a], vec![a])
            }
            _ => {
                let reps = cokernel_reps(self.differential(1), homology[0]);
                let kernel = kernel_basis(&to_rf(self.differential(n - 1)));
                let mut h0 = Vec::with_capacity(n);
                let mut top = Vec::with_capacity(n);
                for s in gens {
                    h0.push(action_mod_image(
                        &self.generator_action(s, 0)?,
                        self.differential(1),
                        &reps,
                    )?);
                    top.push(action_on_kernel(
                        &self.generator_action(s, n - 1)?,
                        &kernel,
                    )?);
                }
                (h0, top)
            }
        };
        Ok(HomologyReport {
            chain_dims,
            ranks,
            homology,
            chain_ok,
            h0_actions,
            top_actions,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{catalog, CayleyBall, CoxeterMatrix, Extent};
    use crate::deodhar::SignMap;

    fn report(m: &CoxeterMatrix, sign: &SignMap) -> HomologyReport {
        let ball = CayleyBall::build(m, Extent::Complete).unwrap();
        DeodharComplex::build(&ball, sign, Extent::Complete)
            .unwrap()
            .homology()
            .unwrap()
    }

    #[test]
    fn a2_and_b2() {
        for name in ["A2", "B2"] {
            let m = catalog(name).unwrap();
            let r = report(&m, &SignMap::identity(2));
            assert_eq!(r.homology, vec![1, 1], "{name}");
            assert_eq!(r.ranks, vec![r.chain_dims[1] - 1]);
            assert_eq!(r.h0_action(), Some(Action::Q));
            assert_eq!(r.top_action(), Some(Action::MinusOne));
            assert!(r.matches_expected());
            assert_eq!(r.chain_euler(), r.homology_euler());
            let swapped = report(&m, &SignMap::new(vec![1, 0]).unwrap());
            assert_eq!(swapped, r);
        }
    }

    #[test]
    fn a1_splits() {
        let m = catalog("A1").unwrap();
        let r = report(&m, &SignMap::identity(1));
        assert_eq!(r.homology, vec![2]);
        assert_eq!(r.h0_action(), Some(Action::Split));
        assert!(r.matches_expected());
    }

    #[test]
    fn rank_zero_is_trivial() {
        let m = CoxeterMatrix::new(vec![], None).unwrap();
        let r = report(&m, &SignMap::identity(0));
        assert!(r.homology.is_empty());
        assert!(r.matches_expected());
    }

    #[test]
    fn truncated_rejected() {
        let m = catalog("A2").unwrap();
        let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
        let c = DeodharComplex::build(&ball, &SignMap::identity(2), Extent::Radius(2)).unwrap();
        assert!(c.homology().is_err());
    }
}
