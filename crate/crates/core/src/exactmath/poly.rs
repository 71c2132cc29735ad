//! Dense univariate polynomials in `q` over an exact coefficient ring.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{FromInteger, Ring};

/// Polynomial with coefficients stored in ascending powers of `q`.
///
/// Trailing zeros are never stored, so the zero polynomial is the empty
/// vector and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `q^k`
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(C::one(), k)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Largest `k` with `q^k` dividing `self`; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `Some((c, k))` when `self = c q^k` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(&C, usize)> {
        let k = self.valuation()?;
        (k + 1 == self.coeffs.len()).then(|| (&self.coeffs[k], k))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Divides by `q^k`; caller guarantees `k <= valuation`.
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.valuation().is_none_or(|v| v >= k));
        Polynomial {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Remainder modulo a monic polynomial. Works over any coefficient ring.
    pub fn rem_monic(&self, modulus: &Self) -> Self {
        let d = modulus.degree().expect("modulus must be nonzero");
        debug_assert!(modulus.leading().is_some_and(|c| c.is_one()));
        if self.coeffs.len() <= d {
            return self.clone();
        }
        let tail: Vec<(usize, C)> = modulus.coeffs[..d]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let mut r = self.coeffs.clone();
        for top in (d..r.len()).rev() {
            let lead = std::mem::replace(&mut r[top], C::zero());
            if lead.is_zero() {
                continue;
            }
            let base = top - d;
            for (i, c) in &tail {
                r[base + i] = r[base + i].clone() - lead.clone() * c.clone();
            }
        }
        r.truncate(d);
        Self::new(r)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder or needs a non-exact coefficient division.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = divisor.coeffs[dd].clone();
        let lower: Vec<(usize, C)> = divisor.coeffs[..dd]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let mut r = self.coeffs.clone();
        let mut quot = vec![C::zero(); nd - dd + 1];
        for top in (dd..=nd).rev() {
            let c = std::mem::replace(&mut r[top], C::zero());
            if c.is_zero() {
                continue;
            }
            let t = c.checked_exact_div(&lead)?;
            let base = top - dd;
            for (i, dc) in &lower {
                r[base + i] = r[base + i].clone() - t.clone() * dc.clone();
            }
            quot[base] = t;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.coeffs[db].clone();
        let mut r = self.clone();
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.coeffs[dr].clone();
            r = &r.scale(&lb) - &b.scale(&lr).shift(dr - db);
            steps -= 1;
        }
        let mut factor = C::one();
        for _ in 0..steps {
            factor = factor * lb.clone();
        }
        r.scale(&factor)
    }

    fn add_into(&mut self, other: &Self, negate: bool) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), C::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if b.is_zero() {
                continue;
            }
            let cur = std::mem::replace(a, C::zero());
            *a = if negate {
                cur - b.clone()
            } else {
                cur + b.clone()
            };
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<C: Ring + FromInteger> Polynomial<C> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C::from_i64(c)).collect())
    }
}

impl<C: Ring> Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for Polynomial<C> {
    fn one() -> Self {
        Polynomial {
            coeffs: vec![C::one()],
        }
    }
}

impl<C: Ring> Add<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out.add_into(rhs, false);
        out
    }
}

impl<C: Ring> Sub<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out.add_into(rhs, true);
        out
    }
}

impl<C: Ring> Mul<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let rhs_terms: Vec<(usize, &C)> = rhs
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in &rhs_terms {
                let cur = std::mem::replace(&mut out[i + j], C::zero());
                out[i + j] = cur + a.clone() * (*b).clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<C: Ring> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<C: Ring> $tr for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Ring> $tr<&Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Ring> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Ring> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        self.add_into(rhs, false);
    }
}

impl<C: Ring> SubAssign<&Polynomial<C>> for Polynomial<C> {
    fn sub_assign(&mut self, rhs: &Polynomial<C>) {
        self.add_into(rhs, true);
    }
}

impl<C: Ring> Ring for Polynomial<C> {
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs)
    }
}

// Integer-coefficient specifics: content, primitive parts and gcd.
impl Polynomial<BigInt> {
    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Greatest common divisor over `Z[q]`, normalized to positive leading
    /// coefficient. Computed with the primitive subresultant remainder
    /// sequence after splitting off powers of `q`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let va = self.valuation().unwrap_or(0);
        let vb = other.valuation().unwrap_or(0);
        let a = self.unshift(va);
        let b = other.unshift(vb);
        let content = a.content().gcd(&b.content());
        let core = if a.is_constant() || b.is_constant() {
            Self::one()
        } else if a.primitive_part() == b.primitive_part() {
            a.primitive_part()
        } else {
            subresultant_gcd(&a.primitive_part(), &b.primitive_part())
        };
        core.scale(&content).shift(va.min(vb))
    }

    fn normalize_sign(&self) -> Self {
        if self.leading().is_some_and(|l| l.is_negative()) {
            -self
        } else {
            self.clone()
        }
    }
}

/// Primitive gcd of two primitive, nonconstant polynomials.
fn subresultant_gcd(a: &Polynomial<BigInt>, b: &Polynomial<BigInt>) -> Polynomial<BigInt> {
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b.primitive_part();
        }
        if r.is_constant() {
            return Polynomial::one();
        }
        let denom = &g * pow(&h, delta);
        a = b;
        b = Polynomial::new(r.coeffs.iter().map(|c| c / &denom).collect());
        g = a.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let num = pow(&g, delta);
            let den = pow(&h, delta - 1);
            num / den
        };
    }
}

fn pow(base: &BigInt, exp: usize) -> BigInt {
    num_traits::pow(base.clone(), exp)
}

/// The `n`-th cyclotomic polynomial, obtained from `q^n - 1` by exact division
/// by every `Phi_d` with `d` a proper divisor of `n`.
pub fn cyclotomic_polynomial(n: usize) -> Polynomial<BigInt> {
    assert!(n >= 1, "cyclotomic index must be positive");
    let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut phis: Vec<Polynomial<BigInt>> = Vec::with_capacity(divisors.len());
    for (i, &d) in divisors.iter().enumerate() {
        let mut p = Polynomial::q_pow(d) - Polynomial::one();
        for (j, &e) in divisors[..i].iter().enumerate() {
            if d % e == 0 {
                p = p.checked_div(&phis[j]).expect("Phi_e divides q^d - 1");
            }
        }
        phis.push(p);
    }
    phis.pop().expect("n has at least one divisor")
}

impl<C: Ring + fmt::Display> fmt::Display for Polynomial<C> {
    /// Descending powers of `q`, e.g. `q^2 - 2*q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}
