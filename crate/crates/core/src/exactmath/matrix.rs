//! Dense matrices over exact rings, fraction-free rank over `Z[q]`, and
//! Gaussian elimination over fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::scalar::{Field, Ring};
use crate::{Error, IntPolynomial, RationalFunction, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: T) {
        let idx = r * self.cols + c;
        let cur = std::mem::replace(&mut self.data[idx], T::zero());
        self.data[idx] = cur + v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Matrix product; zero entries of `self` are skipped.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, a.clone() * b.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// `[self | v]`
    pub fn augment(&self, v: &[T]) -> Result<Self> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "augmenting {} rows with a vector of length {}",
                self.rows,
                v.len()
            )));
        }
        let rows = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(v[r].clone());
                row
            })
            .collect::<Vec<_>>();
        if self.rows == 0 {
            return Ok(Self::zeros(0, self.cols + 1));
        }
        Ok(Self::from_rows(rows))
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Heuristic size of an entry, used to pick small pivots.
pub trait PivotCost {
    fn pivot_cost(&self) -> (usize, usize);
}

impl PivotCost for IntPolynomial {
    /// Lowest degree first, then fewest terms.
    fn pivot_cost(&self) -> (usize, usize) {
        (self.degree().unwrap_or(0), self.term_count())
    }
}

impl PivotCost for BigInt {
    fn pivot_cost(&self) -> (usize, usize) {
        (self.abs().bits() as usize, 0)
    }
}

impl PivotCost for BigRational {
    fn pivot_cost(&self) -> (usize, usize) {
        (
            self.numer().bits() as usize + self.denom().bits() as usize,
            0,
        )
    }
}

impl PivotCost for RationalFunction {
    fn pivot_cost(&self) -> (usize, usize) {
        (
            self.num().degree().unwrap_or(0) + self.den().degree().unwrap_or(0),
            self.num().term_count() + self.den().term_count(),
        )
    }
}

/// Finds the cheapest nonzero entry of the trailing submatrix starting at
/// `(k, k)` of the row/column-permuted view.
fn choose_pivot<T: Ring + PivotCost>(
    m: &Matrix<T>,
    row_perm: &[usize],
    col_perm: &[usize],
    k: usize,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), usize, usize)> = None;
    for (ri, &r) in row_perm.iter().enumerate().skip(k) {
        for (ci, &c) in col_perm.iter().enumerate().skip(k) {
            let x = m.get(r, c);
            if x.is_zero() {
                continue;
            }
            let cost = x.pivot_cost();
            if best.as_ref().is_none_or(|(b, _, _)| cost < *b) {
                best = Some((cost, ri, ci));
                if cost == (0, 1) {
                    return Some((ri, ci));
                }
            }
        }
    }
    best.map(|(_, ri, ci)| (ri, ci))
}

/// Rank over the fraction field of an integral domain by fraction-free
/// (Bareiss) elimination with complete pivoting.
///
/// Every intermediate entry is a minor of the permuted input, so each
/// division by the previous pivot is exact.
pub fn fraction_free_rank<T: Ring + PivotCost>(input: &Matrix<T>) -> usize {
    let mut m = input.clone();
    let mut row_perm: Vec<usize> = (0..m.rows).collect();
    let mut col_perm: Vec<usize> = (0..m.cols).collect();
    let mut prev = T::one();
    let mut rank = 0;
    let limit = m.rows.min(m.cols);
    for k in 0..limit {
        let Some((pr, pc)) = choose_pivot(&m, &row_perm, &col_perm, k) else {
            break;
        };
        row_perm.swap(k, pr);
        col_perm.swap(k, pc);
        rank += 1;
        let prow = row_perm[k];
        let pcol = col_perm[k];
        let pivot = m.get(prow, pcol).clone();
        let pivot_row: Vec<(usize, T)> = col_perm[k + 1..]
            .iter()
            .map(|&c| (c, m.get(prow, c).clone()))
            .collect();
        let prev_is_one = prev.is_one();
        for &r in &row_perm[k + 1..] {
            let lead = m.get(r, pcol).clone();
            for (c, top) in &pivot_row {
                let cur = m.get(r, *c).clone();
                let mut val = if lead.is_zero() || top.is_zero() {
                    cur * pivot.clone()
                } else {
                    cur * pivot.clone() - lead.clone() * top.clone()
                };
                if !prev_is_one && !val.is_zero() {
                    val = val
                        .checked_exact_div(&prev)
                        .expect("Bareiss division is exact");
                }
                m.set(r, *c, val);
            }
            m.set(r, pcol, T::zero());
        }
        prev = pivot;
    }
    rank
}

/// Rank of a polynomial matrix over `Q(q)`.
pub fn rank_over_fraction_field(m: &Matrix<IntPolynomial>) -> usize {
    fraction_free_rank(m)
}

/// Reduced row echelon form over a field.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub reduced: Matrix<F>,
    /// Pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
}

impl<F> Echelon<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination with column-ordered pivots and cheapest pivot row.
pub fn row_reduce<F: Field + PivotCost>(input: &Matrix<F>) -> Echelon<F> {
    let mut m = input.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let best = (r..m.rows)
            .filter(|&i| !m.get(i, c).is_zero())
            .min_by_key(|&i| m.get(i, c).pivot_cost());
        let Some(p) = best else { continue };
        if p != r {
            for j in 0..m.cols {
                let a = m.get(p, j).clone();
                let b = m.get(r, j).clone();
                m.set(p, j, b);
                m.set(r, j, a);
            }
        }
        let inv = m.get(r, c).inv();
        for j in c..m.cols {
            let v = m.get(r, j).clone();
            if !v.is_zero() {
                m.set(r, j, v * inv.clone());
            }
        }
        let nz: Vec<(usize, F)> = (c..m.cols)
            .filter(|&j| !m.get(r, j).is_zero())
            .map(|j| (j, m.get(r, j).clone()))
            .collect();
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c).clone();
            if factor.is_zero() {
                continue;
            }
            for (j, v) in &nz {
                let cur = m.get(i, *j).clone();
                m.set(i, *j, cur - factor.clone() * v.clone());
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: m, pivots }
}

pub fn field_rank<F: Field + PivotCost>(m: &Matrix<F>) -> usize {
    row_reduce(m).rank()
}

/// Basis of the right kernel `{x : m x = 0}` over a field.
pub fn kernel_basis<F: Field + PivotCost>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let ech = row_reduce(m);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut x = vec![F::zero(); m.cols()];
        x[free] = F::one();
        for (row, &p) in ech.pivots.iter().enumerate() {
            let v = ech.reduced.get(row, free);
            if !v.is_zero() {
                x[p] = -v.clone();
            }
        }
        basis.push(x);
    }
    basis
}

/// Some `x` with `m x = v`, or `None` when `v` is not in the column space.
pub fn solve<F: Field + PivotCost>(m: &Matrix<F>, v: &[F]) -> Result<Option<Vec<F>>> {
    let aug = m.augment(v)?;
    let ech = row_reduce(&aug);
    if ech.pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![F::zero(); m.cols()];
    for (row, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.reduced.get(row, m.cols()).clone();
    }
    Ok(Some(x))
}

/// Decides whether `v` lies in the `Q(q)`-column space of `m` by comparing
/// `rank(m)` with `rank([m | v])`, and returns a witness `x` with `m x = v`
/// when it does.
pub fn solve_in_image(
    m: &Matrix<IntPolynomial>,
    v: &[IntPolynomial],
) -> Result<Option<Vec<RationalFunction>>> {
    let aug = m.augment(v)?;
    if rank_over_fraction_field(&aug) > rank_over_fraction_field(m) {
        return Ok(None);
    }
    let mf = m.map(|p| RationalFunction::from_poly(p.clone()));
    let vf: Vec<RationalFunction> = v.iter().cloned().map(RationalFunction::from_poly).collect();
    let x = solve(&mf, &vf)?.expect("rank test guarantees solvability");
    Ok(Some(x))
}

/// Evaluates a polynomial matrix at a rational point.
pub fn specialize_matrix(m: &Matrix<IntPolynomial>, q0: &BigRational) -> Matrix<BigRational> {
    m.map(|p| p.map(|c| BigRational::from_integer(c.clone())).eval(q0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(c)
    }

    fn det2(m: &Matrix<IntPolynomial>) -> IntPolynomial {
        m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_over_fraction_field(&Matrix::zeros(3, 3)), 0);
        let mut d = Matrix::zeros(3, 3);
        d.set(0, 0, p(&[0, 1]));
        d.set(1, 1, p(&[0, 0, 1]));
        d.set(2, 2, p(&[1]));
        assert_eq!(rank_over_fraction_field(&d), 3);
        let m = Matrix::from_rows(vec![
            vec![p(&[0, 1]), p(&[0, 0, 1])],
            vec![p(&[1]), p(&[0, 1])],
        ]);
        assert!(det2(&m).is_zero());
        assert_eq!(rank_over_fraction_field(&m), 1);
    }

    #[test]
    fn solve_examples() {
        let zero = Matrix::<IntPolynomial>::zeros(1, 1);
        let x = solve_in_image(&zero, &[p(&[])]).unwrap().unwrap();
        assert!(x[0].is_zero());

        let m = Matrix::from_rows(vec![vec![p(&[0, 1])]]);
        let x = solve_in_image(&m, &[p(&[0, 0, 1])]).unwrap().unwrap();
        assert_eq!(x[0], RationalFunction::from_poly(p(&[0, 1])));

        let m = Matrix::from_rows(vec![vec![p(&[0, 1])], vec![p(&[1])]]);
        let aug = m.augment(&[p(&[1]), p(&[])]).unwrap();
        assert_eq!(rank_over_fraction_field(&aug), 2);
        assert!(solve_in_image(&m, &[p(&[1]), p(&[])]).unwrap().is_none());

        assert!(matches!(
            solve_in_image(&m, &[p(&[1])]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_rows(vec![
            vec![p(&[0, 1]), p(&[0, 0, 1])],
            vec![p(&[1]), p(&[0, 1])],
        ])
        .map(|x| RationalFunction::from_poly(x.clone()));
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        let image = m.mul_vec(&k[0]).unwrap();
        assert!(image.iter().all(Zero::is_zero));
    }

    #[test]
    fn integer_bareiss_matches_rational_rank() {
        let m = Matrix::from_rows(vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(5)],
            vec![BigInt::from(3), BigInt::from(7), BigInt::from(11)],
        ]);
        assert_eq!(fraction_free_rank(&m), 2);
        let r = m.map(|x| BigRational::from_integer(x.clone()));
        assert_eq!(field_rank(&r), 2);
        assert!(Matrix::<BigRational>::identity(2).get(1, 1).is_one());
    }
}
