//! Invariant suites run by `verify`: exhaustive on small finite groups,
//! seeded samples otherwise.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coxeter::{
    coset_reps, is_finite_type, left_coset_reps, parabolic_decompose, parabolic_subgroup,
    poincare_truncated, CayleyBall, Extent, GenSet, PoincareTable,
};
use crate::deodhar::{verify_truncated_acyclicity, DeodharComplex, SignMap};
use crate::euler::{chi, chi_via_complex, verify_poincare_series_identity, verify_theorem_a};
use crate::hecke::{HeckeAlgebra, HeckeElement, LinearCharacter};
use crate::report::SuiteOutcome;
use crate::{IntPolynomial, Result};

/// Sampling parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    /// Triple suites are exhaustive when `|ball|^3` is at most this.
    pub exhaustive_limit: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: 200,
            exhaustive_limit: 20_000,
        }
    }
}

#[derive(Debug)]
struct Tally {
    name: String,
    checks: usize,
    failures: usize,
    notes: Vec<String>,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            name: name.into(),
            checks: 0,
            failures: 0,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.notes.len() < 5 {
                self.notes.push(what());
            }
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            name: self.name,
            checks: self.checks,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

/// Index triples `(u, v, w)` satisfying `fits`: all of them when the ball is
/// complete and small, otherwise `samples` seeded draws.
pub fn triples(
    ball: &CayleyBall,
    cfg: &SuiteConfig,
    fits: impl Fn(usize, usize, usize) -> bool,
) -> Vec<(usize, usize, usize)> {
    let n = ball.len();
    if ball.is_complete() && n.pow(3) <= cfg.exhaustive_limit {
        let mut out = Vec::with_capacity(n.pow(3));
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    out.push((u, v, w));
                }
            }
        }
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cfg.samples);
    let mut attempts = 0usize;
    while out.len() < cfg.samples && attempts < cfg.samples * 1000 {
        attempts += 1;
        let t = (
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(0..n),
        );
        if fits(t.0, t.1, t.2) {
            out.push(t);
        }
    }
    out
}

fn covered(ball: &CayleyBall, total: usize) -> bool {
    ball.covers(total)
}

/// Associativity, the antipode as an anti-automorphism, multiplicativity of
/// both characters and their invariance under the antipode.
pub fn algebra_suite(ball: &CayleyBall, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let alg = HeckeAlgebra::new(ball);
    let len = |w: usize| ball.length(w);
    let mut t = Tally::new("algebra");
    let chars = [LinearCharacter::AugmentationQ, LinearCharacter::Sign];
    for (a, b, c) in triples(ball, cfg, |a, b, c| covered(ball, len(a) + len(b) + len(c))) {
        let (ta, tb, tc) = (
            HeckeElement::basis(a),
            HeckeElement::basis(b),
            HeckeElement::basis(c),
        );
        let ab = alg.mul(&ta, &tb)?;
        let left = alg.mul(&ab, &tc)?;
        let right = alg.mul(&ta, &alg.mul(&tb, &tc)?)?;
        t.check(left == right, || {
            format!("(T_{a} T_{b}) T_{c} != T_{a} (T_{b} T_{c})")
        });
        let anti = alg.mul(&alg.antipode(&tb), &alg.antipode(&ta))?;
        t.check(alg.antipode(&ab) == anti, || {
            format!("antipode of T_{a} T_{b}")
        });
        for chi in chars {
            t.check(
                alg.character(chi, &ab) == &alg.character(chi, &ta) * &alg.character(chi, &tb),
                || format!("{chi:?} not multiplicative on ({a}, {b})"),
            );
            t.check(
                alg.character(chi, &alg.antipode(&ab)) == alg.character(chi, &ab),
                || format!("{chi:?} not antipode invariant on T_{a} T_{b}"),
            );
        }
    }
    Ok(t.finish())
}

/// `<T_u T_v, T_w> = <T_v, T_{u^-1} T_w>`.
pub fn form_suite(ball: &CayleyBall, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let alg = HeckeAlgebra::new(ball);
    let len = |w: usize| ball.length(w);
    let mut t = Tally::new("form associativity");
    for (u, v, w) in triples(ball, cfg, |u, v, w| {
        covered(ball, len(u) + len(v)) && covered(ball, len(u) + len(w))
    }) {
        let lhs = alg.bilinear_form(
            &alg.mul(&HeckeElement::basis(u), &HeckeElement::basis(v))?,
            &HeckeElement::basis(w),
        );
        let rhs = alg.bilinear_form(
            &HeckeElement::basis(v),
            &alg.mul(
                &HeckeElement::basis(ball.inverse(u)),
                &HeckeElement::basis(w),
            )?,
        );
        t.check(lhs == rhs, || {
            format!("form identity fails at ({u}, {v}, {w})")
        });
    }
    Ok(t.finish())
}

/// `mu(ab) = mu(ba)` on basis pairs.
pub fn trace_suite(ball: &CayleyBall, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let alg = HeckeAlgebra::new(ball);
    let len = |w: usize| ball.length(w);
    let mut t = Tally::new("trace");
    let mut seen = HashSet::new();
    for (a, b, _) in triples(ball, cfg, |a, b, _| covered(ball, len(a) + len(b))) {
        if !seen.insert((a, b)) {
            continue;
        }
        let (ta, tb) = (HeckeElement::basis(a), HeckeElement::basis(b));
        let ab = alg.canonical_trace(&alg.mul(&ta, &tb)?);
        let ba = alg.canonical_trace(&alg.mul(&tb, &ta)?);
        t.check(ab == ba, || format!("mu(T_{a} T_{b}) != mu(T_{b} T_{a})"));
    }
    Ok(t.finish())
}

/// Finite-type subsets whose parabolic subgroup lies entirely in the ball.
pub fn parabolics_in_ball(ball: &CayleyBall) -> Vec<GenSet> {
    let m = ball.system();
    let table = PoincareTable::new(m);
    m.full_set()
        .subsets()
        .filter(|&i| {
            table
                .finite_polynomial(i)
                .is_some_and(|p| ball.covers(p.degree().unwrap_or(0)))
        })
        .collect()
}

/// `tau_I^2 = p_I tau_I`, centrality in `H_I`, `e_I^nat = e_I` and
/// `T_w e_I = q^l(w_I) T_{w^I} e_I` for every `w` where the product fits.
pub fn idempotent_suite(ball: &CayleyBall) -> Result<SuiteOutcome> {
    let alg = HeckeAlgebra::new(ball);
    let mut t = Tally::new("idempotents");
    for subset in parabolics_in_ball(ball) {
        let name = ball.system().subset_name(subset);
        let e = alg.idempotent(subset)?;
        let top = e.poincare.degree().unwrap_or(0);
        if !ball.covers(2 * top) {
            t.note(format!("{name}: tau^2 skipped, ball too small"));
        } else {
            t.check(e.is_idempotent(&alg)?, || {
                format!("tau^2 != p tau for {name}")
            });
        }
        if ball.covers(top + 1) {
            for s in subset.iter() {
                let ts = HeckeElement::basis(ball.from_word(&[s])?);
                t.check(alg.mul(&ts, &e.tau)? == alg.mul(&e.tau, &ts)?, || {
                    format!("e_{name} does not commute with T_{s}")
                });
            }
        }
        t.check(alg.antipode(&e.tau) == e.tau, || {
            format!("e_{name} not antipode invariant")
        });
        for w in ball.elements() {
            if !ball.covers(w.length + top) {
                continue;
            }
            let d = parabolic_decompose(ball, w, subset)?;
            let lhs = alg.mul(&HeckeElement::basis(w.index), &e.tau)?;
            let rhs = alg
                .mul(&HeckeElement::basis(d.coset_part.index), &e.tau)?
                .scale(&IntPolynomial::q_pow(d.parabolic_part.length));
            t.check(lhs == rhs, || {
                format!("T_w e_I rule fails for w = {}, I = {name}", w.index)
            });
        }
    }
    Ok(t.finish())
}

/// Minimal coset representatives: decomposition and uniqueness, the left
/// version, fibre sizes, shortest elements of cosets, the product rule,
/// the splitting by one generator and monotonicity in `I`.
pub fn coset_suite(ball: &CayleyBall) -> Result<SuiteOutcome> {
    let m = ball.system();
    let mut t = Tally::new("coset machinery");
    let full = m.full_set();
    let r = ball.radius();
    let reps_of: Vec<HashSet<usize>> = full
        .subsets()
        .map(|i| coset_reps(ball, i).into_iter().map(|e| e.index).collect())
        .collect();
    for subset in full.subsets() {
        let name = m.subset_name(subset);
        let reps = &reps_of[subset.bits() as usize];
        let para: Vec<usize> = parabolic_subgroup(ball, subset)
            .iter()
            .map(|e| e.index)
            .collect();
        let para_set: HashSet<usize> = para.iter().copied().collect();
        let mut fibre = vec![0usize; ball.len()];
        for w in ball.elements() {
            // (a) right decomposition
            let d = parabolic_decompose(ball, w, subset)?;
            let (y, u) = (d.coset_part.index, d.parabolic_part.index);
            t.check(
                reps.contains(&y)
                    && para_set.contains(&u)
                    && ball.product(y, u) == Some(w.index)
                    && d.coset_part.length + d.parabolic_part.length == w.length,
                || format!("right decomposition of {} for {name}", w.index),
            );
            fibre[y] += 1;
            // (b) left decomposition
            let dl = parabolic_decompose(ball, ball.element(ball.inverse(w.index)), subset)?;
            let left_u = ball.inverse(dl.parabolic_part.index);
            let left_y = ball.inverse(dl.coset_part.index);
            t.check(
                ball.left_descents(left_y).intersection(subset).is_empty()
                    && para_set.contains(&left_u)
                    && ball.product(left_u, left_y) == Some(w.index)
                    && ball.length(left_u) + ball.length(left_y) == w.length,
                || format!("left decomposition of {} for {name}", w.index),
            );
            // (d) w^I is the unique shortest element of w W_I in the ball
            let coset: Vec<usize> = para
                .iter()
                .filter_map(|&u| ball.product(w.index, u))
                .collect();
            let shortest = coset
                .iter()
                .filter(|&&x| ball.length(x) <= d.coset_part.length);
            let shortest: HashSet<usize> = shortest.copied().collect();
            t.check(shortest.len() == 1 && shortest.contains(&y), || {
                format!(
                    "w^I not the unique shortest in coset of {} for {name}",
                    w.index
                )
            });
        }
        // (c) each coset meets the ball in the expected number of elements
        let mut para_hist = vec![0usize; r + 1];
        for &u in &para {
            para_hist[ball.length(u)] += 1;
        }
        for &y in reps {
            let expected: usize = para_hist.iter().take(r - ball.length(y) + 1).sum();
            t.check(fibre[y] == expected, || {
                format!("fibre of {y} over {name} has {} elements", fibre[y])
            });
        }
        // (e) product rule
        for &y in reps {
            for &u in &para {
                if let Some(yu) = ball.product(y, u) {
                    let d = parabolic_decompose(ball, ball.element(yu), subset)?;
                    t.check(
                        d.coset_part.index == y
                            && d.parabolic_part.index == u
                            && ball.length(yu) == ball.length(y) + ball.length(u),
                        || format!("(y u)^I != y for y = {y}, u = {u}, I = {name}"),
                    );
                }
            }
        }
        // (g) monotonicity
        for sub in subset.subsets() {
            let small = &reps_of[sub.bits() as usize];
            t.check(reps.is_subset(small), || {
                format!("W^{name} not inside W^{}", m.subset_name(sub))
            });
        }
    }
    t.check(reps_of[full.bits() as usize] == HashSet::from([0]), || {
        "W^S != {1}".into()
    });
    t.check(reps_of[0].len() == ball.len(), || "W^{} != W".into());
    // (f) W = ^{s}W + s ^{s}W
    for s in 0..m.rank() {
        let left: HashSet<usize> = left_coset_reps(ball, GenSet::singleton(s))
            .into_iter()
            .map(|e| e.index)
            .collect();
        for w in ball.elements() {
            let inside = left.contains(&w.index);
            let ok = match ball.left_mul(s, w.index) {
                Some(sw) => inside != left.contains(&sw),
                None => inside,
            };
            t.check(ok, || format!("splitting by s{s} fails at {}", w.index));
        }
    }
    Ok(t.finish())
}

/// `T_s (T_w eta_I) = c_I(T_s T_w)` for every `I`, `s` and ball `w`.
pub fn induced_suite(ball: &CayleyBall) -> Result<SuiteOutcome> {
    let alg = HeckeAlgebra::new(ball);
    let m = ball.system();
    let mut t = Tally::new("induced modules");
    for subset in m.full_set().subsets() {
        for w in ball.elements() {
            if !ball.covers(w.length + 1) {
                continue;
            }
            let tw = HeckeElement::basis(w.index);
            let v = alg.c_map(&tw, subset)?;
            for s in 0..m.rank() {
                let ts = HeckeElement::basis(ball.from_word(&[s])?);
                let lhs = alg.induced_action(s, &v)?;
                let rhs = alg.c_map(&alg.mul(&ts, &tw)?, subset)?;
                t.check(lhs == rhs, || {
                    format!(
                        "c_I fails to intertwine T_s{s} at {} for {}",
                        w.index,
                        m.subset_name(subset)
                    )
                });
            }
        }
    }
    Ok(t.finish())
}

/// The identity coefficient of a product inside `H_I` agrees with the one
/// computed in `H`, for finite parabolics in the ball.
pub fn trace_restriction_suite(ball: &CayleyBall) -> Result<SuiteOutcome> {
    let m = ball.system();
    let alg = HeckeAlgebra::new(ball);
    let mut t = Tally::new("trace restriction");
    for subset in parabolics_in_ball(ball) {
        let gens: Vec<usize> = subset.iter().collect();
        let local = CayleyBall::build(&m.restrict(subset), Extent::Complete)?;
        if !ball.covers(2 * local.radius()) {
            continue;
        }
        let local_alg = HeckeAlgebra::new(&local);
        let global = |x: usize| -> Result<usize> {
            let word: Vec<usize> = local.word(x).iter().map(|&s| gens[s]).collect();
            ball.from_word(&word)
        };
        for a in 0..local.len() {
            for b in 0..local.len() {
                let small = local_alg.canonical_trace(
                    &local_alg.mul(&HeckeElement::basis(a), &HeckeElement::basis(b))?,
                );
                let big = alg.canonical_trace(&alg.mul(
                    &HeckeElement::basis(global(a)?),
                    &HeckeElement::basis(global(b)?),
                )?);
                t.check(small == big, || {
                    format!("trace of ({a}, {b}) differs in {}", m.subset_name(subset))
                });
            }
        }
    }
    Ok(t.finish())
}

/// Chain property, sign axiom, and homology (finite `W`) or an acyclicity
/// certificate at `(R - 2, R)` (infinite `W`).
pub fn deodhar_suite(ball: &CayleyBall, sign: &SignMap) -> Result<SuiteOutcome> {
    let m = ball.system();
    let mut t = Tally::new("deodhar complex");
    t.check(sign.satisfies_axiom(), || "sign axiom fails".into());
    if is_finite_type(m, m.full_set()) {
        let c = DeodharComplex::build(ball, sign, Extent::Complete)?;
        t.check(c.verify_chain(), || "d^2 != 0".into());
        let h = c.homology()?;
        t.check(h.matches_expected(), || format!("homology {:?}", h));
        t.check(h.chain_euler() == h.homology_euler(), || {
            "Euler-Poincaré mismatch".into()
        });
        let reversed: Vec<usize> = sign.order().iter().rev().copied().collect();
        let other =
            DeodharComplex::build(ball, &SignMap::new(reversed)?, Extent::Complete)?.homology()?;
        t.check(other.homology == h.homology, || {
            "homology depends on the order".into()
        });
    } else {
        let lp = ball.radius();
        let l = lp.saturating_sub(2);
        let c = DeodharComplex::build(ball, sign, Extent::Radius(lp))?;
        t.check(c.verify_chain(), || "d^2 != 0".into());
        let r = verify_truncated_acyclicity(ball, sign, l, lp)?;
        t.check(r.certified(), || format!("not certified at ({l}, {lp})"));
    }
    Ok(t.finish())
}

/// `chi * p = 1`, the route through the resolution and the series identities.
pub fn euler_suite(ball: &CayleyBall) -> Result<SuiteOutcome> {
    let m = ball.system();
    let mut t = Tally::new("euler characteristic");
    let r = verify_theorem_a(m)?;
    t.check(r.product_ok, || "chi * p != 1".into());
    if let Some(tr) = &r.trace_route {
        t.check(*tr == r.chi, || "mu(e_S) != chi".into());
    }
    if !is_finite_type(m, m.full_set()) {
        match chi_via_complex(ball) {
            Ok(c) => t.check(c == chi(m, m.full_set()), || {
                "resolution route disagrees".into()
            }),
            Err(e) if e.is_resource() => t.note(format!("resolution route skipped: {e}")),
            Err(e) => return Err(e),
        }
    }
    let order = ball.radius();
    t.check(verify_poincare_series_identity(ball, order)?, || {
        "p * chi != 1 + O(q^L)".into()
    });
    let series = r.poincare.series(order)?;
    let counts = poincare_truncated(ball, order)?;
    t.check(
        (0..=order).all(|k| series[k] == num_rational::BigRational::from_integer(counts.coeff(k))),
        || "series of p disagrees with length counts".into(),
    );
    Ok(t.finish())
}

/// Every suite, in a fixed order.
pub fn run_all(ball: &CayleyBall, sign: &SignMap, cfg: &SuiteConfig) -> Result<Vec<SuiteOutcome>> {
    Ok(vec![
        algebra_suite(ball, cfg)?,
        form_suite(ball, cfg)?,
        trace_suite(ball, cfg)?,
        idempotent_suite(ball)?,
        coset_suite(ball)?,
        induced_suite(ball)?,
        trace_restriction_suite(ball)?,
        deodhar_suite(ball, sign)?,
        euler_suite(ball)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::catalog;

    #[test]
    fn a2_everything_passes() {
        let m = catalog("A2").unwrap();
        let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
        let out = run_all(&ball, &SignMap::identity(2), &SuiteConfig::default()).unwrap();
        for s in &out {
            assert!(s.passed(), "{s:?}");
            assert!(s.checks > 0, "{s:?}");
        }
        assert_eq!(out[1].checks, 216);
    }

    #[test]
    fn exhaustive_ignores_seed() {
        let m = catalog("B2").unwrap();
        let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
        let a = form_suite(&ball, &SuiteConfig::default()).unwrap();
        let b = form_suite(
            &ball,
            &SuiteConfig {
                seed: 7,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.checks, 512);
    }

    #[test]
    fn sampled_triples_respect_radius() {
        let m = catalog("Atilde1").unwrap();
        let ball = CayleyBall::build(&m, Extent::Radius(6)).unwrap();
        let cfg = SuiteConfig::default();
        let ts = triples(&ball, &cfg, |u, v, w| {
            ball.length(u) + ball.length(v) <= 6 && ball.length(u) + ball.length(w) <= 6
        });
        assert_eq!(ts.len(), 200);
        assert_eq!(
            ts,
            triples(&ball, &cfg, |u, v, w| {
                ball.length(u) + ball.length(v) <= 6 && ball.length(u) + ball.length(w) <= 6
            })
        );
        assert!(form_suite(&ball, &cfg).unwrap().passed());
    }

    #[test]
    fn affine_cosets_and_deodhar() {
        let m = catalog("Atilde1").unwrap();
        let ball = CayleyBall::build(&m, Extent::Radius(8)).unwrap();
        assert!(coset_suite(&ball).unwrap().passed());
        assert!(deodhar_suite(&ball, &SignMap::identity(2))
            .unwrap()
            .passed());
        assert!(euler_suite(&ball).unwrap().passed());
    }
}
