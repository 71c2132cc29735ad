//! Serializable reports. Polynomials are ascending arrays of decimal
//! strings so that coefficients of any size survive JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use serde::Serialize;

use crate::coxeter::{classify_component, components, group_order, is_finite_type, CoxeterMatrix};
use crate::deodhar::{AcyclicityReport, HomologyReport};
use crate::euler::{specialize, EulerResult};
use crate::exactmath::format_rational;
use crate::{Error, IntPolynomial, RationalFunction};

pub fn poly_json(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl From<&RationalFunction> for RationalJson {
    fn from(f: &RationalFunction) -> Self {
        RationalJson {
            num: poly_json(f.num()),
            den: poly_json(f.den()),
        }
    }
}

fn rf_text(f: &RationalFunction) -> String {
    let wrap = |p: &IntPolynomial| {
        if p.term_count() > 1 {
            format!("({p})")
        } else {
            p.to_string()
        }
    };
    match f.as_polynomial() {
        Some(p) => p.to_string(),
        None => format!("{}/{}", wrap(f.num()), wrap(f.den())),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentInfo {
    pub generators: String,
    pub finite: bool,
    #[serde(rename = "type")]
    pub kind: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParabolicInfo {
    pub subset: String,
    pub finite: bool,
    pub order: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InfoReport {
    pub rank: usize,
    pub names: Vec<String>,
    /// Coxeter matrix entries, `0` for infinity.
    pub labels: Vec<Vec<u64>>,
    pub finite: bool,
    pub order: Option<String>,
    pub components: Vec<ComponentInfo>,
    pub parabolics: Vec<ParabolicInfo>,
}

impl InfoReport {
    pub fn new(m: &CoxeterMatrix) -> Self {
        let full = m.full_set();
        InfoReport {
            rank: m.rank(),
            names: m.names().to_vec(),
            labels: m.codes(),
            finite: is_finite_type(m, full),
            order: group_order(m, full).map(|o| o.to_string()),
            components: components(m, full)
                .into_iter()
                .map(|c| {
                    let kind = classify_component(m, c);
                    ComponentInfo {
                        generators: m.subset_name(c),
                        finite: kind.is_some(),
                        kind: kind.map(|k| k.to_string()),
                    }
                })
                .collect(),
            parabolics: full
                .subsets()
                .map(|i| ParabolicInfo {
                    subset: m.subset_name(i),
                    finite: is_finite_type(m, i),
                    order: group_order(m, i).map(|o| o.to_string()),
                })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "rank: {}", self.rank);
        let _ = writeln!(s, "generators: {}", self.names.join(", "));
        for row in &self.labels {
            let cells: Vec<String> = row
                .iter()
                .map(|&c| if c == 0 { "inf".into() } else { c.to_string() })
                .collect();
            let _ = writeln!(s, "  {}", cells.join(" "));
        }
        match &self.order {
            Some(o) => {
                let _ = writeln!(s, "finite: yes, |W| = {o}");
            }
            None => {
                let _ = writeln!(s, "finite: no");
            }
        }
        for c in &self.components {
            let _ = writeln!(
                s,
                "component {}: {}",
                c.generators,
                c.kind.as_deref().unwrap_or("infinite")
            );
        }
        let _ = writeln!(s, "parabolics:");
        for p in &self.parabolics {
            let _ = writeln!(
                s,
                "  {} {}",
                p.subset,
                p.order
                    .as_deref()
                    .map_or("infinite".to_string(), |o| format!("order {o}"))
            );
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesCheck {
    pub order: usize,
    /// Taylor coefficients of the rational function.
    pub series: Vec<String>,
    /// Number of elements of each length from enumeration.
    pub counts: Vec<String>,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PoincareReport {
    pub poincare: RationalJson,
    pub text: String,
    pub series: Option<SeriesCheck>,
}

impl PoincareReport {
    pub fn new(p: &RationalFunction, series: Option<SeriesCheck>) -> Self {
        PoincareReport {
            poincare: p.into(),
            text: rf_text(p),
            series,
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("p(q) = {}\n", self.text);
        if let Some(c) = &self.series {
            let _ = writeln!(s, "series to order {}: {}", c.order, c.series.join(" "));
            let _ = writeln!(s, "length counts:      {}", c.counts.join(" "));
            let _ = writeln!(s, "match: {}", c.matches);
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HeckeReport {
    pub a: String,
    pub b: String,
    pub product: String,
    pub augmentation: Vec<String>,
    pub sign: Vec<String>,
    pub trace: Vec<String>,
}

impl HeckeReport {
    pub fn text(&self) -> String {
        format!(
            "({}) * ({}) = {}\neps_q = {}\neps_-1 = {}\ntrace = {}\n",
            self.a,
            self.b,
            self.product,
            poly_from_json(&self.augmentation),
            poly_from_json(&self.sign),
            poly_from_json(&self.trace)
        )
    }
}

fn poly_from_json(c: &[String]) -> IntPolynomial {
    IntPolynomial::new(c.iter().map(|x| x.parse().expect("decimal")).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct DeodharReport {
    pub degrees: Vec<usize>,
    pub homology: Vec<usize>,
    pub actions: BTreeMap<String, String>,
    pub certified: bool,
    pub radius: Option<usize>,
    pub coradius: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_max_length: Option<usize>,
}

impl DeodharReport {
    pub fn from_homology(r: &HomologyReport) -> Self {
        let mut actions = BTreeMap::new();
        if let Some(a) = r.h0_action() {
            actions.insert("0".into(), a.to_string());
        }
        if let Some(a) = r.top_action() {
            actions.insert("top".into(), a.to_string());
        }
        DeodharReport {
            degrees: r.chain_dims.clone(),
            homology: r.homology.clone(),
            actions,
            certified: r.matches_expected(),
            radius: None,
            coradius: None,
            cycles: None,
            witness_max_length: None,
        }
    }

    /// For a certificate, `homology[k]` counts the cycles not shown to bound.
    pub fn from_acyclicity(r: &AcyclicityReport) -> Self {
        DeodharReport {
            degrees: r.chain_dims.clone(),
            homology: r.degrees.iter().map(|d| d.cycles - d.certified).collect(),
            actions: BTreeMap::new(),
            certified: r.certified(),
            radius: Some(r.radius),
            coradius: Some(r.coradius),
            cycles: Some(r.degrees.iter().map(|d| d.cycles).collect()),
            witness_max_length: r.witness_max_length(),
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "chain dimensions: {:?}", self.degrees);
        match (&self.cycles, self.radius, self.coradius) {
            (Some(cycles), Some(l), Some(lp)) => {
                let _ = writeln!(s, "radius {l}, coradius {lp}");
                let _ = writeln!(s, "cycles per degree: {cycles:?}");
                let _ = writeln!(s, "uncertified per degree: {:?}", self.homology);
                if let Some(w) = self.witness_max_length {
                    let _ = writeln!(s, "longest witness element: {w}");
                }
            }
            _ => {
                let _ = writeln!(s, "homology dimensions: {:?}", self.homology);
                for (k, a) in &self.actions {
                    let _ = writeln!(s, "action on H_{k}: {a}");
                }
            }
        }
        let _ = writeln!(s, "certified: {}", self.certified);
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ParabolicJson {
    pub sign: i64,
    pub inv_p: RationalJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    pub chi: RationalJson,
    pub poincare: RationalJson,
    pub product_ok: bool,
    pub per_parabolic: BTreeMap<String, ParabolicJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_route_ok: Option<bool>,
    /// `chi(q0)` by point, or `"skipped: ..."` when the hypothesis fails.
    pub specializations: BTreeMap<String, String>,
    /// `p(q0)` by point, `"pole at q0"` or `"skipped: ..."`.
    pub poincare_specializations: BTreeMap<String, String>,
    #[serde(skip)]
    chi_text: String,
    #[serde(skip)]
    poincare_text: String,
}

impl EulerReport {
    pub fn new(m: &CoxeterMatrix, r: &EulerResult, points: &[BigRational]) -> Self {
        let mut specializations = BTreeMap::new();
        let mut poincare_specializations = BTreeMap::new();
        for q0 in points {
            let key = format_rational(q0);
            let entry = |f: &RationalFunction| match specialize(f, q0, m) {
                Ok(v) => format_rational(&v),
                Err(Error::Pole(_)) => format!("pole at {key}"),
                Err(e) => format!("skipped: {e}"),
            };
            specializations.insert(key.clone(), entry(&r.chi));
            poincare_specializations.insert(key.clone(), entry(&r.poincare));
        }
        EulerReport {
            chi: (&r.chi).into(),
            poincare: (&r.poincare).into(),
            product_ok: r.product_ok,
            per_parabolic: r
                .per_parabolic
                .iter()
                .map(|t| {
                    (
                        m.subset_name(t.subset),
                        ParabolicJson {
                            sign: t.sign,
                            inv_p: (&t.inv_p).into(),
                        },
                    )
                })
                .collect(),
            trace_route_ok: r.trace_route.as_ref().map(|t| *t == r.chi),
            specializations,
            poincare_specializations,
            chi_text: rf_text(&r.chi),
            poincare_text: rf_text(&r.poincare),
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "chi = {}", self.chi_text);
        let _ = writeln!(s, "p   = {}", self.poincare_text);
        let _ = writeln!(s, "chi * p = 1: {}", self.product_ok);
        if let Some(t) = self.trace_route_ok {
            let _ = writeln!(s, "mu(e_S) = chi: {t}");
        }
        for (name, term) in &self.per_parabolic {
            let inv = RationalFunction::new(
                poly_from_json(&term.inv_p.num),
                poly_from_json(&term.inv_p.den),
            )
            .expect("nonzero denominator");
            let sign = if term.sign > 0 { '+' } else { '-' };
            let _ = writeln!(s, "  {sign} {name}: {}", rf_text(&inv));
        }
        for (q0, v) in &self.specializations {
            let _ = writeln!(
                s,
                "at q = {q0}: chi = {v}, p = {}",
                self.poincare_specializations[q0]
            );
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub checks: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub system: String,
    pub seed: u64,
    pub suites: Vec<SuiteOutcome>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn new(system: String, seed: u64, suites: Vec<SuiteOutcome>) -> Self {
        let passed = suites.iter().all(SuiteOutcome::passed);
        VerifyReport {
            system,
            seed,
            suites,
            passed,
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<28} {:>8} {:>8}  result", "suite", "checks", "failed");
        for suite in &self.suites {
            let _ = writeln!(
                s,
                "{:<28} {:>8} {:>8}  {}",
                suite.name,
                suite.checks,
                suite.failures,
                if suite.passed() { "pass" } else { "FAIL" }
            );
            for note in &suite.notes {
                let _ = writeln!(s, "    {note}");
            }
        }
        let _ = writeln!(s, "overall: {}", if self.passed { "pass" } else { "FAIL" });
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::catalog;
    use crate::euler::verify_theorem_a;

    #[test]
    fn polynomial_serialization() {
        let p = IntPolynomial::from_ints(&[1, 2, 2, 1]);
        assert_eq!(poly_json(&p), vec!["1", "2", "2", "1"]);
        assert_eq!(poly_from_json(&poly_json(&p)), p);
    }

    #[test]
    fn euler_json_shape() {
        let m = catalog("A2").unwrap();
        let r = verify_theorem_a(&m).unwrap();
        let points = [
            BigRational::from_integer(1.into()),
            BigRational::from_integer((-1).into()),
        ];
        let report = EulerReport::new(&m, &r, &points);
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["chi"]["den"], serde_json::json!(["1", "2", "2", "1"]));
        assert_eq!(v["product_ok"], true);
        assert_eq!(v["specializations"]["1"], "1/6");
        assert!(v["specializations"]["-1"]
            .as_str()
            .unwrap()
            .starts_with("skipped"));
    }

    #[test]
    fn affine_pole() {
        let m = catalog("Atilde1").unwrap();
        let r = verify_theorem_a(&m).unwrap();
        let report = EulerReport::new(&m, &r, &[BigRational::from_integer(1.into())]);
        assert_eq!(report.specializations["1"], "0");
        assert_eq!(report.poincare_specializations["1"], "pole at 1");
        assert_eq!(report.per_parabolic.len(), 3);
    }
}
