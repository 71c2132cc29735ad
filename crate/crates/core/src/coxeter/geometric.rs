//! The geometric (Tits) reflection representation over a cyclotomic ring.
//!
//! With `n = 2 lcm{m(s,t) finite, >= 3}` and `y` a primitive `n`-th root of
//! unity, `2 cos(pi / m) = y^k + y^-k` for `k = n / 2m`, so every entry of
//! every reflection matrix lies in `Z[y]` and products stay integral.

use num_bigint::BigInt;
use num_integer::Integer;

use super::system::{CoxeterMatrix, Label};
use crate::exactmath::CyclotomicRing;
use crate::IntCyclo;

/// A square matrix of cyclotomic integers, row-major.
pub type RepMatrix = Vec<IntCyclo>;

#[derive(Clone, Debug)]
pub struct GeometricRep {
    rank: usize,
    ring: CyclotomicRing<BigInt>,
    /// `2 B(alpha_s, alpha_t)`.
    two_form: Vec<Vec<IntCyclo>>,
    reflections: Vec<RepMatrix>,
}

impl GeometricRep {
    pub fn new(m: &CoxeterMatrix) -> Self {
        let rank = m.rank();
        let mut lcm = 1u64;
        for s in 0..rank {
            for t in 0..rank {
                if let Label::Finite(l) = m.label(s, t) {
                    if l >= 3 {
                        lcm = lcm.lcm(&(l as u64));
                    }
                }
            }
        }
        let conductor = (2 * lcm) as usize;
        let ring = CyclotomicRing::<BigInt>::new(conductor);
        let two_form: Vec<Vec<IntCyclo>> = (0..rank)
            .map(|s| {
                (0..rank)
                    .map(|t| match m.label(s, t) {
                        Label::Finite(1) => ring.from_scalar(BigInt::from(2)),
                        Label::Finite(2) => ring.zero(),
                        Label::Finite(l) => {
                            let k = (conductor / (2 * l as usize)) as i64;
                            ring.root_pow(k).add(&ring.root_pow(-k)).unwrap().neg()
                        }
                        Label::Infinity => ring.from_scalar(BigInt::from(-2)),
                    })
                    .collect()
            })
            .collect();
        let mut rep = GeometricRep {
            rank,
            ring,
            two_form,
            reflections: Vec::new(),
        };
        let id = rep.identity();
        rep.reflections = (0..rank).map(|s| rep.left_reflect(s, &id)).collect();
        rep
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn conductor(&self) -> usize {
        self.ring.conductor()
    }

    /// `2 B(alpha_s, alpha_t)` as a cyclotomic integer.
    pub fn two_form(&self, s: usize, t: usize) -> &IntCyclo {
        &self.two_form[s][t]
    }

    pub fn reflection(&self, s: usize) -> &RepMatrix {
        &self.reflections[s]
    }

    pub fn identity(&self) -> RepMatrix {
        let n = self.rank;
        (0..n * n)
            .map(|i| {
                if i / n == i % n {
                    self.ring.one()
                } else {
                    self.ring.zero()
                }
            })
            .collect()
    }

    /// `sigma_s * m`. Only row `s` changes:
    /// `row_s <- row_s - sum_t 2B(s,t) row_t`.
    pub fn left_reflect(&self, s: usize, m: &RepMatrix) -> RepMatrix {
        let n = self.rank;
        let mut out = m.clone();
        for j in 0..n {
            let mut acc = m[s * n + j].clone();
            for t in 0..n {
                let b = &self.two_form[s][t];
                let x = &m[t * n + j];
                if b.is_zero() || x.is_zero() {
                    continue;
                }
                acc = acc.sub(&b.mul(x).unwrap()).unwrap();
            }
            out[s * n + j] = acc;
        }
        out
    }

    /// `m * sigma_s`. Column `j` gains `- m[., s] * 2B(s, j)`.
    pub fn right_reflect(&self, m: &RepMatrix, s: usize) -> RepMatrix {
        let n = self.rank;
        let mut out = m.clone();
        for i in 0..n {
            let pivot = &m[i * n + s];
            if pivot.is_zero() {
                continue;
            }
            for j in 0..n {
                let b = &self.two_form[s][j];
                if b.is_zero() {
                    continue;
                }
                out[i * n + j] = out[i * n + j].sub(&pivot.mul(b).unwrap()).unwrap();
            }
        }
        out
    }

    pub fn multiply(&self, a: &RepMatrix, b: &RepMatrix) -> RepMatrix {
        let n = self.rank;
        let mut out = vec![self.ring.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = &a[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &b[k * n + j];
                    if !y.is_zero() {
                        out[i * n + j] = out[i * n + j].add(&x.mul(y).unwrap()).unwrap();
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self, m: &RepMatrix) -> bool {
        *m == self.identity()
    }
}

/// True iff every entry of the matrix is an integer (no `y` terms).
pub fn is_rational(m: &RepMatrix) -> bool {
    m.iter().all(|x| x.coeffs().degree().is_none_or(|d| d == 0))
}
