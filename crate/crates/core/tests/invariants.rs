use heckeuler::coxeter::{catalog, poincare_exact, CayleyBall, Extent};
use heckeuler::deodhar::{DeodharComplex, SignMap};
use heckeuler::euler::{chi, chi_via_complex_for, verify_theorem_a};
use heckeuler::hecke::HeckeAlgebra;
use heckeuler::suite::{run_all, SuiteConfig};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn homology_does_not_depend_on_the_sign_order() {
    let m = catalog("A3").unwrap();
    let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
    let orders = permutations(3);
    assert_eq!(orders.len(), 6);
    for order in orders {
        let sign = SignMap::new(order.clone()).unwrap();
        let h = DeodharComplex::build(&ball, &sign, Extent::Complete)
            .unwrap()
            .homology()
            .unwrap();
        assert!(h.matches_expected(), "order {order:?}: {h:?}");
    }
}

#[test]
fn theorem_a_for_infinite_systems() {
    for name in ["Atilde1", "Atilde2", "Btilde2", "Hyp334"] {
        let m = catalog(name).unwrap();
        let r = verify_theorem_a(&m).unwrap();
        assert!(r.ok(), "{name}");
        assert_eq!(r.poincare, poincare_exact(&m, m.full_set()));
    }
}

#[test]
fn chi_through_the_complex_matches_the_recursion() {
    for name in ["Atilde1", "Atilde2", "Hyp334"] {
        let m = catalog(name).unwrap();
        assert_eq!(
            chi_via_complex_for(&m).unwrap(),
            chi(&m, m.full_set()),
            "{name}"
        );
    }
}

#[test]
fn parse_and_print_round_trip() {
    let m = catalog("B2").unwrap().with_names(&["s", "t"]).unwrap();
    let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
    let alg = HeckeAlgebra::new(&ball);
    for text in ["(q-1)*T[s] + q*T[]", "T[s,t,s,t]", "-q^2*T[t,s] + 3*T[s]"] {
        let a = alg.parse_element(text).unwrap();
        let printed = alg.format_element(&a);
        assert_eq!(
            alg.parse_element(&printed).unwrap(),
            a,
            "{text} -> {printed}"
        );
    }
}

#[test]
fn all_suites_pass_on_b3() {
    let m = catalog("B3").unwrap();
    let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
    let cfg = SuiteConfig {
        samples: 50,
        ..SuiteConfig::default()
    };
    for s in run_all(&ball, &SignMap::identity(3), &cfg).unwrap() {
        assert!(s.passed(), "{s:?}");
    }
}
