use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use heckeuler::exactmath::{
    field_rank, fraction_free_rank, rank_over_fraction_field, specialize_matrix, Matrix,
};
use heckeuler::{IntPolynomial, RationalFunction};

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-20i64..=20, 0..6).prop_map(|c| IntPolynomial::from_ints(&c))
}

fn nonzero_poly() -> impl Strategy<Value = IntPolynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RationalFunction::new(n, d).expect("nonzero den"))
}

fn to_rat(p: &IntPolynomial, x: &BigRational) -> BigRational {
    p.map(|c: &BigInt| BigRational::from_integer(c.clone()))
        .eval(x)
}

proptest! {
    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, IntPolynomial::zero());
        prop_assert_eq!(&a * &IntPolynomial::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), n in -9i64..=9, d in 1i64..=9) {
        let x = BigRational::new(n.into(), d.into());
        prop_assert_eq!(to_rat(&(&a * &b), &x), to_rat(&a, &x) * to_rat(&b, &x));
        prop_assert_eq!(to_rat(&(&a + &b), &x), to_rat(&a, &x) + to_rat(&b, &x));
    }

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert_eq!(&b * &b.recip().unwrap(), RationalFunction::one());
        }
    }

    #[test]
    fn reduced_form_is_canonical(n in poly(), d in nonzero_poly(), k in nonzero_poly()) {
        let f = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let g = RationalFunction::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(f.num(), g.num());
        prop_assert_eq!(f.den(), g.den());
    }

    /// Multiplying the series back by the denominator recovers the numerator.
    #[test]
    fn series_resums(n in poly(), d in nonzero_poly(), order in 0usize..10) {
        prop_assume!(!d.coeff(0).is_zero());
        let f = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let s = f.series(order).unwrap();
        for k in 0..=order {
            let conv = (0..=k).fold(BigRational::zero(), |acc, i| {
                acc + &s[i] * BigRational::from_integer(d.coeff(k - i))
            });
            prop_assert_eq!(conv, BigRational::from_integer(n.coeff(k)));
        }
    }

    /// Specializing can only lower the rank over `Q(q)`.
    #[test]
    fn rank_bounds_specializations(
        rows in 1usize..5,
        cols in 1usize..5,
        entries in prop::collection::vec(poly(), 16),
        n in -9i64..=9,
        d in 1i64..=9,
    ) {
        let m = Matrix::from_rows(
            (0..rows).map(|r| (0..cols).map(|c| entries[r * 4 + c].clone()).collect()).collect(),
        );
        let generic = rank_over_fraction_field(&m);
        let x = BigRational::new(n.into(), d.into());
        prop_assert!(field_rank(&specialize_matrix(&m, &x)) <= generic);
        prop_assert!(generic <= rows.min(cols));
    }

    #[test]
    fn bareiss_matches_gauss_on_integers(entries in prop::collection::vec(-4i64..=4, 20)) {
        let ints = Matrix::from_rows(
            (0..4).map(|r| (0..5).map(|c| BigInt::from(entries[r * 5 + c])).collect()).collect(),
        );
        let rats = ints.map(|x| BigRational::from_integer(x.clone()));
        prop_assert_eq!(fraction_free_rank(&ints), field_rank(&rats));
    }
}

/// A rank drop at a root of a minor: `[[1, q], [q, 1]]` is singular exactly
/// at `q = 1` and `q = -1`.
#[test]
fn rank_drops_only_at_roots() {
    let one = IntPolynomial::one();
    let q = IntPolynomial::q();
    let m = Matrix::from_rows(vec![vec![one.clone(), q.clone()], vec![q, one]]);
    assert_eq!(rank_over_fraction_field(&m), 2);
    for (x, r) in [(1, 1), (-1, 1), (2, 2), (0, 2)] {
        let x = BigRational::from_integer(x.into());
        assert_eq!(field_rank(&specialize_matrix(&m, &x)), r);
    }
}
