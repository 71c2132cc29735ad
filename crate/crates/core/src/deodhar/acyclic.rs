//! Finite certificates of acyclicity for infinite `W`: every cycle of the
//! length-`L` subcomplex bounds a chain of length at most `L'`.

use num_traits::Zero;

use super::complex::{Cell, DeodharComplex};
use super::sign::SignMap;
use crate::coxeter::{is_finite_type, CayleyBall, CoxeterMatrix, Extent};
use crate::exactmath::{clear_denominators, kernel_basis, row_reduce};
use crate::{Error, IntPolynomial, PolyMatrix, RationalFunction, Result, RfMatrix};

/// Outcome for one degree of the augmented complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCertificate {
    pub degree: usize,
    /// Dimension of the cycle space at radius `L`.
    pub cycles: usize,
    pub certified: usize,
    /// Longest element in the support of any witness chain.
    pub witness_max_length: Option<usize>,
    /// Cycles (in radius-`L` coordinates) that were not shown to bound.
    pub uncertified: Vec<Vec<IntPolynomial>>,
}

impl DegreeCertificate {
    pub fn ok(&self) -> bool {
        self.certified == self.cycles
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicityReport {
    pub radius: usize,
    pub coradius: usize,
    /// Chain dimensions at radius `L`.
    pub chain_dims: Vec<usize>,
    pub chain_ok: bool,
    pub augmentation_surjective: bool,
    pub degrees: Vec<DegreeCertificate>,
}

impl AcyclicityReport {
    pub fn certified(&self) -> bool {
        self.chain_ok
            && self.augmentation_surjective
            && self.degrees.iter().all(DegreeCertificate::ok)
    }

    pub fn witness_max_length(&self) -> Option<usize> {
        self.degrees
            .iter()
            .filter_map(|d| d.witness_max_length)
            .max()
    }
}

fn to_rf(m: &PolyMatrix) -> RfMatrix {
    m.map(|p| RationalFunction::from_poly(p.clone()))
}

/// Certifies each column of `cycles` as lying in the column space of
/// `boundary`, from one reduction of `[boundary | cycles]` over `Q(q)`.
/// Returns, per cycle, the witness when there is one.
fn certify_batch(
    boundary: &PolyMatrix,
    cycles: &[Vec<IntPolynomial>],
) -> Result<Vec<Option<Vec<RationalFunction>>>> {
    if cycles.is_empty() {
        return Ok(Vec::new());
    }
    let mut aug = to_rf(boundary);
    for c in cycles {
        let cf: Vec<RationalFunction> =
            c.iter().cloned().map(RationalFunction::from_poly).collect();
        aug = aug.augment(&cf)?;
    }
    let ncols = boundary.cols();
    let ech = row_reduce(&aug);
    let bf = to_rf(boundary);
    let mut out = Vec::with_capacity(cycles.len());
    for (j, cycle) in cycles.iter().enumerate() {
        let col = ncols + j;
        let inconsistent = ech
            .pivots
            .iter()
            .enumerate()
            .any(|(r, &p)| p >= ncols && !ech.reduced.get(r, col).is_zero());
        if inconsistent {
            out.push(None);
            continue;
        }
        let mut x = vec![RationalFunction::zero(); ncols];
        for (r, &p) in ech.pivots.iter().enumerate() {
            if p < ncols {
                x[p] = ech.reduced.get(r, col).clone();
            }
        }
        let image = bf.mul_vec(&x)?;
        let matches = image
            .iter()
            .zip(cycle)
            .all(|(a, b)| *a == RationalFunction::from_poly(b.clone()));
        out.push(matches.then_some(x));
    }
    Ok(out)
}

fn embed(
    small: &DeodharComplex<'_>,
    large: &DeodharComplex<'_>,
    k: usize,
    v: &[IntPolynomial],
) -> Vec<IntPolynomial> {
    let mut out = vec![IntPolynomial::zero(); large.basis().dim(k)];
    for (i, cell) in small.basis().cells(k).iter().enumerate() {
        let j = large
            .basis()
            .position(k, *cell)
            .expect("radius-L cells are radius-L' cells");
        out[j] = v[i].clone();
    }
    out
}

fn cycle_basis(map: &PolyMatrix) -> Vec<Vec<IntPolynomial>> {
    kernel_basis(&to_rf(map))
        .iter()
        .map(|v| clear_denominators(v))
        .collect()
}

/// Builds the complexes at radii `L` and `L'` and certifies that the
/// augmented complex `C -> R_q -> 0` is exact on the radius-`L` part.
pub fn verify_truncated_acyclicity(
    ball: &CayleyBall,
    sign: &SignMap,
    radius: usize,
    coradius: usize,
) -> Result<AcyclicityReport> {
    let m = ball.system();
    if is_finite_type(m, m.full_set()) {
        return Err(Error::NotInfiniteType(
            "acyclicity certificates are for infinite groups; use homology".into(),
        ));
    }
    if coradius < radius {
        return Err(Error::Invalid(format!(
            "coradius {coradius} is smaller than radius {radius}"
        )));
    }
    let small = DeodharComplex::build(ball, sign, Extent::Radius(radius))?;
    let large = DeodharComplex::build(ball, sign, Extent::Radius(coradius))?;
    let n = small.rank();
    let chain_ok = small.verify_chain() && large.verify_chain();
    let augmentation_surjective = small
        .augmentation()
        .row(0)
        .iter()
        .any(|e| e.is_constant() && !e.is_zero() && e.coeff(0).magnitude() == &1u32.into());

    let mut degrees = Vec::with_capacity(n);
    for k in 0..n {
        let outgoing = if k == 0 {
            small.augmentation()
        } else {
            small.differential(k)
        };
        let cycles = cycle_basis(outgoing);
        let mut cert = DegreeCertificate {
            degree: k,
            cycles: cycles.len(),
            certified: 0,
            witness_max_length: None,
            uncertified: Vec::new(),
        };
        if k + 1 < n {
            let lifted: Vec<Vec<IntPolynomial>> =
                cycles.iter().map(|c| embed(&small, &large, k, c)).collect();
            let results = certify_batch(large.differential(k + 1), &lifted)?;
            let cells: &[Cell] = large.basis().cells(k + 1);
            for (cycle, res) in cycles.into_iter().zip(results) {
                match res {
                    Some(x) => {
                        cert.certified += 1;
                        let len = x
                            .iter()
                            .zip(cells)
                            .filter(|(v, _)| !v.is_zero())
                            .map(|(_, c)| ball.length(c.element))
                            .max();
                        cert.witness_max_length = cert.witness_max_length.max(len);
                    }
                    None => cert.uncertified.push(cycle),
                }
            }
        } else {
            cert.uncertified = cycles;
        }
        degrees.push(cert);
    }
    Ok(AcyclicityReport {
        radius,
        coradius,
        chain_dims: small.basis().dims(),
        chain_ok,
        augmentation_surjective,
        degrees,
    })
}

/// Retries with `L' = coradius, coradius + 1, ..., max_coradius` until the
/// certificate succeeds, returning the last report.
pub fn certify_with_retry(
    m: &CoxeterMatrix,
    sign: &SignMap,
    radius: usize,
    coradius: usize,
    max_coradius: usize,
    memory_cap: usize,
) -> Result<AcyclicityReport> {
    let ball =
        CayleyBall::build_with_cap(m, Extent::Radius(max_coradius.max(coradius)), memory_cap)?;
    let mut lp = coradius;
    loop {
        let report = verify_truncated_acyclicity(&ball, sign, radius, lp)?;
        if report.certified() || lp >= max_coradius {
            return Ok(report);
        }
        lp += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::catalog;
    use num_traits::{One, Zero};

    #[test]
    fn affine_a1() {
        let m = catalog("Atilde1").unwrap();
        let ball = CayleyBall::build(&m, Extent::Radius(6)).unwrap();
        let r = verify_truncated_acyclicity(&ball, &SignMap::identity(2), 4, 6).unwrap();
        assert!(r.certified(), "{r:?}");
        assert_eq!(r.degrees[1].cycles, 0);
        assert!(r.degrees[0].cycles > 0);
        assert!(r.witness_max_length().unwrap() <= 6);
    }

    #[test]
    fn equal_radii_still_valid() {
        let m = catalog("Atilde1").unwrap();
        let ball = CayleyBall::build(&m, Extent::Radius(4)).unwrap();
        let r = verify_truncated_acyclicity(&ball, &SignMap::identity(2), 4, 4).unwrap();
        assert!(r.chain_ok);
        let uncertified: usize = r.degrees.iter().map(|d| d.uncertified.len()).sum();
        assert_eq!(
            uncertified,
            r.degrees
                .iter()
                .map(|d| d.cycles - d.certified)
                .sum::<usize>()
        );
    }

    #[test]
    fn batch_rejects_vectors_outside_the_image() {
        let q = IntPolynomial::q();
        let one = IntPolynomial::one();
        let boundary = PolyMatrix::from_rows(vec![vec![one.clone()], vec![q.clone()]]);
        let cycles = vec![
            vec![q.clone(), &q * &q],
            vec![one.clone(), IntPolynomial::zero()],
        ];
        let out = certify_batch(&boundary, &cycles).unwrap();
        assert!(out[0].is_some());
        assert!(out[1].is_none());
    }

    #[test]
    fn retry_reaches_certificate() {
        let m = catalog("Atilde1").unwrap();
        let r = certify_with_retry(&m, &SignMap::identity(2), 3, 3, 6, 10_000).unwrap();
        assert!(r.certified());
        assert!(r.coradius >= 3);
    }

    #[test]
    fn rejects_finite_and_bad_radii() {
        let a2 = catalog("A2").unwrap();
        let ball = CayleyBall::build(&a2, Extent::Complete).unwrap();
        assert!(matches!(
            verify_truncated_acyclicity(&ball, &SignMap::identity(2), 1, 2),
            Err(Error::NotInfiniteType(_))
        ));
        let m = catalog("Atilde1").unwrap();
        let ball = CayleyBall::build(&m, Extent::Radius(4)).unwrap();
        assert!(verify_truncated_acyclicity(&ball, &SignMap::identity(2), 4, 3).is_err());
        assert!(matches!(
            verify_truncated_acyclicity(&ball, &SignMap::identity(2), 4, 5),
            Err(Error::RadiusInsufficient { .. })
        ));
    }
}
