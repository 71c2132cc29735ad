//! Coxeter matrices, generator subsets, input parsing and the named catalog.

use std::fmt;

use serde_json::Value;

use crate::{Error, Result};

/// Coxeter label `m(s, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    /// Input encoding: integer labels with `0` standing for infinity.
    pub fn from_code(code: u64) -> Label {
        if code == 0 {
            Label::Infinity
        } else {
            Label::Finite(code as u32)
        }
    }

    pub fn code(self) -> u64 {
        match self {
            Label::Finite(m) => m as u64,
            Label::Infinity => 0,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    /// True when `s` and `t` do not commute (an edge of the Coxeter graph).
    pub fn is_edge(self) -> bool {
        self != Label::Finite(2) && self != Label::Finite(1)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => write!(f, "inf"),
        }
    }
}

/// A subset of the generators, stored as a bit mask over generator indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u64);

pub const MAX_RANK: usize = 63;

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> GenSet {
        assert!(rank <= MAX_RANK);
        GenSet((1u64 << rank) - 1)
    }

    pub fn singleton(s: usize) -> GenSet {
        GenSet(1 << s)
    }

    pub fn from_bits(bits: u64) -> GenSet {
        GenSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn with(self, s: usize) -> GenSet {
        GenSet(self.0 | 1 << s)
    }

    pub fn without(self, s: usize) -> GenSet {
        GenSet(self.0 & !(1 << s))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    /// Generator indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&s| self.contains(s))
    }

    /// All subsets of `self`, including `self` and the empty set, in
    /// increasing order of bit pattern.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(GenSet(cur))
        })
    }

    pub fn proper_subsets(self) -> impl Iterator<Item = GenSet> {
        self.subsets().filter(move |&i| i != self)
    }
}

/// Symmetric Coxeter matrix with named generators, in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    names: Vec<String>,
    labels: Vec<Vec<Label>>,
}

impl CoxeterMatrix {
    /// Validates and builds a matrix from labels in the `0 = infinity`
    /// encoding. Generator names default to `s1, s2, ...`.
    pub fn new(labels: Vec<Vec<Label>>, names: Option<Vec<String>>) -> Result<Self> {
        let rank = labels.len();
        if rank > MAX_RANK {
            return Err(Error::parse(
                "labels",
                format!("rank {rank} exceeds {MAX_RANK}"),
            ));
        }
        for (i, row) in labels.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::parse(
                    format!("labels[{i}]"),
                    format!("row has {} entries, expected {rank}", row.len()),
                ));
            }
        }
        for i in 0..rank {
            if labels[i][i] != Label::Finite(1) {
                return Err(Error::parse(
                    format!("labels[{i}][{i}]"),
                    "diagonal entry must be 1",
                ));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if labels[i][j] != labels[j][i] {
                    return Err(Error::parse(
                        format!("labels[{i}][{j}]"),
                        "labels not symmetric",
                    ));
                }
                if labels[i][j] == Label::Finite(1) {
                    return Err(Error::parse(
                        format!("labels[{i}][{j}]"),
                        "off-diagonal label must be >= 2 or 0 (infinity)",
                    ));
                }
            }
        }
        let names = match names {
            Some(names) => {
                if names.len() != rank {
                    return Err(Error::parse(
                        "names",
                        format!("{} names for rank {rank}", names.len()),
                    ));
                }
                for (i, n) in names.iter().enumerate() {
                    if n.is_empty() || n.contains([',', '[', ']', ' ']) {
                        return Err(Error::parse(
                            format!("names[{i}]"),
                            "invalid generator name",
                        ));
                    }
                    if names[..i].contains(n) {
                        return Err(Error::parse(
                            format!("names[{i}]"),
                            "duplicate generator name",
                        ));
                    }
                }
                names
            }
            None => (1..=rank).map(|i| format!("s{i}")).collect(),
        };
        Ok(CoxeterMatrix { names, labels })
    }

    /// Convenience constructor from integer codes (`0` = infinity).
    pub fn from_codes(codes: &[&[u64]]) -> Result<Self> {
        let labels = codes
            .iter()
            .map(|row| row.iter().map(|&c| Label::from_code(c)).collect())
            .collect();
        Self::new(labels, None)
    }

    pub fn with_names(mut self, names: &[&str]) -> Result<Self> {
        let labels = std::mem::take(&mut self.labels);
        Self::new(labels, Some(names.iter().map(|s| s.to_string()).collect()))
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, s: usize, t: usize) -> Label {
        self.labels[s][t]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn full_set(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    /// Label matrix in the `0 = infinity` encoding.
    pub fn codes(&self) -> Vec<Vec<u64>> {
        self.labels
            .iter()
            .map(|row| row.iter().map(|l| l.code()).collect())
            .collect()
    }

    /// The Coxeter system `(W_I, I)` with generators in increasing index order.
    pub fn restrict(&self, subset: GenSet) -> CoxeterMatrix {
        let idx: Vec<usize> = subset.iter().collect();
        CoxeterMatrix {
            names: idx.iter().map(|&i| self.names[i].clone()).collect(),
            labels: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.labels[i][j]).collect())
                .collect(),
        }
    }

    /// Formats a subset as `[s,t]` using generator names.
    pub fn subset_name(&self, subset: GenSet) -> String {
        let names: Vec<&str> = subset.iter().map(|s| self.name(s)).collect();
        format!("[{}]", names.join(","))
    }

    /// Parses a comma-separated list of generator names into a subset.
    pub fn parse_subset(&self, text: &str) -> Result<GenSet> {
        let text = text.trim().trim_start_matches('[').trim_end_matches(']');
        let mut set = GenSet::EMPTY;
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let s = self
                .generator(part)
                .ok_or_else(|| Error::UnknownGenerator(part.to_string()))?;
            set = set.with(s);
        }
        Ok(set)
    }
}

/// Parses the JSON input format:
/// `{"rank": n, "labels": [[...]], "names": [...]}` or `{"type": "<name>"}`.
pub fn parse_coxeter(input: &str) -> Result<CoxeterMatrix> {
    let value: Value = serde_json::from_str(input).map_err(|e| {
        Error::parse(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::parse("$", "expected a JSON object"))?;
    if let Some(ty) = obj.get("type") {
        let name = ty
            .as_str()
            .ok_or_else(|| Error::parse("type", "expected a string"))?;
        let mut m = catalog(name)?;
        if let Some(names) = obj.get("names") {
            let names = parse_names(names)?;
            m = CoxeterMatrix::new(m.labels, Some(names))?;
        }
        return Ok(m);
    }
    let labels = obj
        .get("labels")
        .ok_or_else(|| Error::parse("$", "missing \"labels\" or \"type\""))?
        .as_array()
        .ok_or_else(|| Error::parse("labels", "expected an array of arrays"))?;
    let mut rows = Vec::with_capacity(labels.len());
    for (i, row) in labels.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::parse(format!("labels[{i}]"), "expected an array"))?;
        let mut parsed = Vec::with_capacity(row.len());
        for (j, x) in row.iter().enumerate() {
            let code = x.as_u64().ok_or_else(|| {
                Error::parse(
                    format!("labels[{i}][{j}]"),
                    "expected a nonnegative integer",
                )
            })?;
            parsed.push(Label::from_code(code));
        }
        rows.push(parsed);
    }
    if let Some(rank) = obj.get("rank") {
        let rank = rank
            .as_u64()
            .ok_or_else(|| Error::parse("rank", "expected a nonnegative integer"))?;
        if rank as usize != rows.len() {
            return Err(Error::parse(
                "rank",
                format!("rank {rank} but {} label rows", rows.len()),
            ));
        }
    }
    let names = obj.get("names").map(parse_names).transpose()?;
    CoxeterMatrix::new(rows, names)
}

fn parse_names(v: &Value) -> Result<Vec<String>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::parse("names", "expected an array of strings"))?;
    arr.iter()
        .enumerate()
        .map(|(i, n)| {
            n.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::parse(format!("names[{i}]"), "expected a string"))
        })
        .collect()
}

/// Names accepted by [`catalog`].
pub fn catalog_names() -> Vec<String> {
    let mut out = Vec::new();
    out.extend((1..=8).map(|n| format!("A{n}")));
    out.extend((2..=8).map(|n| format!("B{n}")));
    out.extend((4..=8).map(|n| format!("D{n}")));
    out.extend(["E6", "E7", "E8", "F4", "H3", "H4"].map(String::from));
    out.extend((5..=12).map(|m| format!("I2({m})")));
    out.extend(["Atilde1", "Atilde2", "Btilde2", "Hyp334", "A1xA1"].map(String::from));
    out
}

fn path(n: usize, edges: &[(usize, usize, u64)]) -> Result<CoxeterMatrix> {
    let mut codes = vec![vec![2u64; n]; n];
    for (i, row) in codes.iter_mut().enumerate() {
        row[i] = 1;
    }
    for &(a, b, m) in edges {
        codes[a][b] = m;
        codes[b][a] = m;
    }
    let rows: Vec<&[u64]> = codes.iter().map(Vec::as_slice).collect();
    CoxeterMatrix::from_codes(&rows)
}

fn chain(n: usize, special: Option<(usize, u64)>) -> Vec<(usize, usize, u64)> {
    (0..n.saturating_sub(1))
        .map(|i| match special {
            Some((pos, m)) if pos == i => (i, i + 1, m),
            _ => (i, i + 1, 3),
        })
        .collect()
}

/// Expands a named Coxeter system (Bourbaki numbering).
pub fn catalog(name: &str) -> Result<CoxeterMatrix> {
    let unknown = || Error::parse("type", format!("unknown catalog name {name:?}"));
    let rank_of = |prefix: &str, lo: usize| -> Option<usize> {
        let n: usize = name.strip_prefix(prefix)?.parse().ok()?;
        (lo..=8).contains(&n).then_some(n)
    };
    if let Some(rest) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        let m: u64 = rest.parse().map_err(|_| unknown())?;
        if m < 2 {
            return Err(unknown());
        }
        return path(2, &[(0, 1, m)]);
    }
    match name {
        "E6" | "E7" | "E8" => {
            let n: usize = name[1..].parse().unwrap();
            // 1-3-4-5-...-n with 2 attached to 4.
            let mut edges = vec![(0, 2, 3), (1, 3, 3)];
            edges.extend((2..n - 1).map(|i| (i, i + 1, 3)));
            return path(n, &edges);
        }
        "F4" => return path(4, &chain(4, Some((1, 4)))),
        "H3" => return path(3, &chain(3, Some((0, 5)))),
        "H4" => return path(4, &chain(4, Some((0, 5)))),
        "Atilde1" => return CoxeterMatrix::from_codes(&[&[1, 0], &[0, 1]]),
        "Atilde2" => return path(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)]),
        "Btilde2" => return path(3, &[(0, 1, 4), (1, 2, 4)]),
        "Hyp334" => return path(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 4)]),
        "A1xA1" => return path(2, &[]),
        _ => {}
    }
    if let Some(n) = rank_of("A", 1) {
        return path(n, &chain(n, None));
    }
    if let Some(n) = rank_of("B", 2) {
        return path(n, &chain(n, Some((n - 2, 4))));
    }
    if let Some(n) = rank_of("D", 4) {
        let mut edges = chain(n - 1, None);
        edges.push((n - 3, n - 1, 3));
        return path(n, &edges);
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_explicit_labels() {
        let m = parse_coxeter(r#"{"labels": [[1,3],[3,1]]}"#).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.label(0, 1), Label::Finite(3));
        assert_eq!(m.names(), ["s1", "s2"]);
    }

    #[test]
    fn catalog_affine_a1() {
        let m = catalog("Atilde1").unwrap();
        assert_eq!(m.codes(), vec![vec![1, 0], vec![0, 1]]);
        let via_json = parse_coxeter(r#"{"type": "Atilde1"}"#).unwrap();
        assert_eq!(m, via_json);
    }

    #[test]
    fn rejects_asymmetric() {
        let err = parse_coxeter(r#"{"labels": [[1,2],[3,1]]}"#).unwrap_err();
        match err {
            Error::Parse { location, message } => {
                assert_eq!(location, "labels[0][1]");
                assert!(message.contains("labels not symmetric"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(parse_coxeter(r#"{"labels": [[2,3],[3,1]]}"#).is_err());
        assert!(parse_coxeter(r#"{"labels": [[1,1],[1,1]]}"#).is_err());
        assert!(parse_coxeter(r#"{"type": "Z9"}"#).is_err());
        assert!(parse_coxeter(r#"{"rank": 3, "labels": [[1,3],[3,1]]}"#).is_err());
        assert!(parse_coxeter("{not json").is_err());
        assert!(parse_coxeter(r#"{"labels": [[1,3],[3,1]], "names": ["a","a"]}"#).is_err());
    }

    #[test]
    fn every_catalog_name_expands() {
        for name in catalog_names() {
            let m = catalog(&name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(m.rank() >= 1, "{name}");
        }
        assert_eq!(catalog("D4").unwrap().label(1, 3), Label::Finite(3));
        assert_eq!(catalog("B3").unwrap().label(1, 2), Label::Finite(4));
        assert_eq!(catalog("E6").unwrap().label(1, 3), Label::Finite(3));
    }

    #[test]
    fn subsets_enumeration() {
        let s = GenSet::from_bits(0b101);
        let subs: Vec<u64> = s.subsets().map(GenSet::bits).collect();
        assert_eq!(subs, vec![0b000, 0b001, 0b100, 0b101]);
        assert_eq!(s.proper_subsets().count(), 3);
        assert_eq!(GenSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn named_subsets() {
        let m = catalog("A2").unwrap().with_names(&["s", "t"]).unwrap();
        let i = m.parse_subset("[t]").unwrap();
        assert_eq!(i, GenSet::singleton(1));
        assert_eq!(m.subset_name(m.full_set()), "[s,t]");
        assert!(matches!(
            m.parse_subset("u"),
            Err(Error::UnknownGenerator(_))
        ));
    }
}
