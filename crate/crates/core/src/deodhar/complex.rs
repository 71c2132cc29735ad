//! The Deodhar complex `C_k = (+)_{|S|-|I|-1 = k} Ind_I^S(R_q)` with the
//! signed canonical maps as differentials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::sign::SignMap;
use crate::coxeter::{coset_reps, is_finite_type, parabolic_decompose, CayleyBall, Extent, GenSet};
use crate::exactmath::Matrix;
use crate::hecke::{HeckeAlgebra, InducedVector};
use crate::{Error, IntPolynomial, PolyMatrix, Result};

/// Largest number of entries allowed in a single dense differential.
pub const MAX_DENSE_ENTRIES: usize = 4_000_000;

/// A basis vector `T_w eta_I` of `Ind_I^S(R_q)`, `w in W^I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub subset: GenSet,
    pub element: usize,
}

/// Ordered bases of the chain groups, with reverse lookup.
#[derive(Clone, Debug)]
pub struct ComplexBasis {
    degrees: Vec<Vec<Cell>>,
    index: Vec<HashMap<Cell, usize>>,
}

impl ComplexBasis {
    /// Number of degrees, `|S|`.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn cells(&self, k: usize) -> &[Cell] {
        &self.degrees[k]
    }

    pub fn dim(&self, k: usize) -> usize {
        self.degrees.get(k).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    pub fn position(&self, k: usize, cell: Cell) -> Option<usize> {
        self.index.get(k)?.get(&cell).copied()
    }
}

#[derive(Clone, Debug)]
pub struct DeodharComplex<'a> {
    ball: &'a CayleyBall,
    sign: SignMap,
    basis: ComplexBasis,
    /// `differentials[k - 1]` is `d_k : C_k -> C_{k-1}`.
    differentials: Vec<PolyMatrix>,
    augmentation: PolyMatrix,
    radius: Option<usize>,
}

/// Degree of the summand indexed by `I`.
pub fn degree(rank: usize, subset: GenSet) -> usize {
    rank - subset.len() - 1
}

impl<'a> DeodharComplex<'a> {
    /// Builds the complex, complete (finite `W` only) or truncated to
    /// `l(w) <= L`.
    pub fn build(ball: &'a CayleyBall, sign: &SignMap, extent: Extent) -> Result<Self> {
        let m = ball.system();
        let rank = m.rank();
        if sign.rank() != rank {
            return Err(Error::DimensionMismatch(format!(
                "sign map on {} generators for a rank {rank} system",
                sign.rank()
            )));
        }
        let radius = match extent {
            Extent::Complete => {
                if !is_finite_type(m, m.full_set()) {
                    return Err(Error::NotFiniteType(
                        "the complete complex needs a finite Coxeter group".into(),
                    ));
                }
                if !ball.is_complete() {
                    return Err(Error::RadiusInsufficient {
                        required: ball.radius() + 1,
                        available: ball.radius(),
                    });
                }
                None
            }
            Extent::Radius(l) => {
                if !ball.covers(l) {
                    return Err(Error::RadiusInsufficient {
                        required: l,
                        available: ball.radius(),
                    });
                }
                Some(l)
            }
        };

        let full = m.full_set();
        let mut degrees: Vec<Vec<Cell>> = vec![Vec::new(); rank];
        let mut subsets: Vec<GenSet> = full.proper_subsets().collect();
        subsets.sort_by_key(|&i| sign.subset_key(i));
        for subset in subsets {
            let k = degree(rank, subset);
            degrees[k].extend(
                coset_reps(ball, subset)
                    .into_iter()
                    .filter(|w| radius.is_none_or(|l| w.length <= l))
                    .map(|w| Cell {
                        subset,
                        element: w.index,
                    }),
            );
        }
        let index = degrees
            .iter()
            .map(|cells| cells.iter().enumerate().map(|(i, &c)| (c, i)).collect())
            .collect();
        let basis = ComplexBasis { degrees, index };
        for k in 1..rank {
            let entries = basis.dim(k) * basis.dim(k - 1);
            if entries > MAX_DENSE_ENTRIES {
                return Err(Error::MemoryGuard {
                    cap: MAX_DENSE_ENTRIES,
                    radius_reached: radius.unwrap_or(ball.radius()),
                });
            }
        }

        let mut differentials = Vec::with_capacity(rank.saturating_sub(1));
        for k in 1..rank {
            let mut d = Matrix::zeros(basis.dim(k - 1), basis.dim(k));
            for (col, cell) in basis.cells(k).iter().enumerate() {
                for s in full.difference(cell.subset).iter() {
                    let target = cell.subset.with(s);
                    let dec = parabolic_decompose(ball, ball.element(cell.element), target)?;
                    let row = basis
                        .position(
                            k - 1,
                            Cell {
                                subset: target,
                                element: dec.coset_part.index,
                            },
                        )
                        .expect("truncation is closed under the differential");
                    let entry = IntPolynomial::q_pow(dec.parabolic_part.length)
                        .scale(&BigInt::from(sign.sign(s, cell.subset)));
                    d.add_at(row, col, entry);
                }
            }
            differentials.push(d);
        }

        let mut augmentation = Matrix::zeros(1, basis.dim(0));
        if rank > 0 {
            for (col, cell) in basis.cells(0).iter().enumerate() {
                let s = full
                    .difference(cell.subset)
                    .iter()
                    .next()
                    .expect("|S \\ I| = 1");
                let entry = IntPolynomial::q_pow(ball.length(cell.element))
                    .scale(&BigInt::from(sign.sign(s, cell.subset)));
                augmentation.set(0, col, entry);
            }
        }

        Ok(DeodharComplex {
            ball,
            sign: sign.clone(),
            basis,
            differentials,
            augmentation,
            radius,
        })
    }

    pub fn ball(&self) -> &'a CayleyBall {
        self.ball
    }

    pub fn sign_map(&self) -> &SignMap {
        &self.sign
    }

    pub fn basis(&self) -> &ComplexBasis {
        &self.basis
    }

    /// `|S|`; the complex lives in degrees `0..rank`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Truncation length, `None` for the complete complex.
    pub fn radius(&self) -> Option<usize> {
        self.radius
    }

    /// `d_k : C_k -> C_{k-1}` for `1 <= k < |S|`.
    pub fn differential(&self, k: usize) -> &PolyMatrix {
        &self.differentials[k - 1]
    }

    pub fn differential_mut(&mut self, k: usize) -> &mut PolyMatrix {
        &mut self.differentials[k - 1]
    }

    /// `epsilon : C_0 -> R_q` as a one-row matrix.
    pub fn augmentation(&self) -> &PolyMatrix {
        &self.augmentation
    }

    /// `d_k d_{k+1} = 0` for all `k` and `epsilon d_1 = 0`.
    pub fn verify_chain(&self) -> bool {
        let rank = self.rank();
        for k in 1..rank.saturating_sub(1) {
            let prod = self
                .differential(k)
                .mul(self.differential(k + 1))
                .expect("consecutive differentials compose");
            if !prod.is_zero() {
                return false;
            }
        }
        if rank >= 2 {
            let prod = self
                .augmentation
                .mul(self.differential(1))
                .expect("augmentation composes with d_1");
            if !prod.is_zero() {
                return false;
            }
        }
        true
    }

    /// Matrix of `T_s` acting on `C_k`, summand by summand.
    pub fn generator_action(&self, s: usize, k: usize) -> Result<PolyMatrix> {
        let alg = HeckeAlgebra::new(self.ball);
        let n = self.basis.dim(k);
        let mut a = Matrix::zeros(n, n);
        for (col, cell) in self.basis.cells(k).iter().enumerate() {
            let mut v = InducedVector::zero(cell.subset);
            v.add_element(self.ball, cell.element, &num_traits::One::one())?;
            for (w, c) in alg.induced_action(s, &v)?.terms() {
                let row = self
                    .basis
                    .position(
                        k,
                        Cell {
                            subset: cell.subset,
                            element: w,
                        },
                    )
                    .ok_or(Error::RadiusInsufficient {
                        required: self.ball.length(w),
                        available: self.radius.unwrap_or(self.ball.radius()),
                    })?;
                if !c.is_zero() {
                    a.add_at(row, col, c.clone());
                }
            }
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::catalog;

    fn complex_dims(name: &str, extent: Extent, ball_extent: Extent) -> Vec<usize> {
        let m = catalog(name).unwrap();
        let ball = CayleyBall::build(&m, ball_extent).unwrap();
        let c = DeodharComplex::build(&ball, &SignMap::identity(m.rank()), extent).unwrap();
        assert!(c.verify_chain());
        c.basis().dims()
    }

    #[test]
    fn a1_single_degree() {
        let m = catalog("A1").unwrap();
        let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
        let c = DeodharComplex::build(&ball, &SignMap::identity(1), Extent::Complete).unwrap();
        assert_eq!(c.basis().dims(), vec![2]);
        let eps: Vec<IntPolynomial> = c.augmentation().row(0).to_vec();
        assert_eq!(
            eps,
            vec![IntPolynomial::from_ints(&[1]), IntPolynomial::q()]
        );
        assert!(c.verify_chain());
    }

    #[test]
    fn dims() {
        assert_eq!(
            complex_dims("A2", Extent::Complete, Extent::Complete),
            vec![6, 6]
        );
        assert_eq!(
            complex_dims("B2", Extent::Complete, Extent::Complete),
            vec![8, 8]
        );
        assert_eq!(
            complex_dims("B3", Extent::Complete, Extent::Complete),
            vec![26, 72, 48]
        );
        assert_eq!(
            complex_dims("Atilde1", Extent::Radius(2), Extent::Radius(3)),
            vec![6, 5]
        );
    }

    #[test]
    fn flipped_sign_breaks_chain() {
        let m = catalog("A2").unwrap();
        let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
        let mut c = DeodharComplex::build(&ball, &SignMap::identity(2), Extent::Complete).unwrap();
        let d = c.differential_mut(1);
        let (r, col) = (0..d.rows())
            .flat_map(|r| (0..d.cols()).map(move |c| (r, c)))
            .find(|&(r, col)| !d.get(r, col).is_zero())
            .unwrap();
        let flipped = -d.get(r, col);
        d.set(r, col, flipped);
        assert!(!c.verify_chain());
    }

    #[test]
    fn truncated_complete_rejected_for_infinite() {
        let m = catalog("Atilde1").unwrap();
        let ball = CayleyBall::build(&m, Extent::Radius(3)).unwrap();
        assert!(matches!(
            DeodharComplex::build(&ball, &SignMap::identity(2), Extent::Complete),
            Err(Error::NotFiniteType(_))
        ));
        assert!(matches!(
            DeodharComplex::build(&ball, &SignMap::identity(2), Extent::Radius(4)),
            Err(Error::RadiusInsufficient { .. })
        ));
    }
}
