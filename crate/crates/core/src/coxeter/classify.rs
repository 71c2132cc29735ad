//! Finite-type recognition from the Coxeter diagram.

use std::fmt;

use super::system::{CoxeterMatrix, GenSet, Label};

/// Irreducible finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl FiniteType {
    /// Degrees of the basic invariants. The Poincaré polynomial is
    /// `prod_i (1 + q + ... + q^(d_i - 1))` and `|W| = prod_i d_i`.
    pub fn degrees(self) -> Vec<usize> {
        match self {
            FiniteType::A(n) => (2..=n + 1).collect(),
            FiniteType::B(n) => (1..=n).map(|i| 2 * i).collect(),
            FiniteType::D(n) => {
                let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d
            }
            FiniteType::E(6) => vec![2, 5, 6, 8, 9, 12],
            FiniteType::E(7) => vec![2, 6, 8, 10, 12, 14, 18],
            FiniteType::E(8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
            FiniteType::E(n) => unreachable!("E{n} is not finite"),
            FiniteType::F4 => vec![2, 6, 8, 12],
            FiniteType::H(3) => vec![2, 6, 10],
            FiniteType::H(4) => vec![2, 12, 20, 30],
            FiniteType::H(n) => unreachable!("H{n} is not finite"),
            FiniteType::I2(m) => vec![2, m as usize],
        }
    }

    pub fn order(self) -> u128 {
        self.degrees().iter().map(|&d| d as u128).product()
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Connected components of the Coxeter graph restricted to `subset`, each as
/// a subset, ordered by smallest generator.
pub fn components(m: &CoxeterMatrix, subset: GenSet) -> Vec<GenSet> {
    let mut seen = GenSet::EMPTY;
    let mut out = Vec::new();
    for start in subset.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = GenSet::singleton(start);
        let mut stack = vec![start];
        while let Some(s) = stack.pop() {
            for t in subset.iter() {
                if !comp.contains(t) && m.label(s, t).is_edge() {
                    comp = comp.with(t);
                    stack.push(t);
                }
            }
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

/// Identifies a connected diagram with one of the finite types, or `None`.
pub fn classify_component(m: &CoxeterMatrix, comp: GenSet) -> Option<FiniteType> {
    let nodes: Vec<usize> = comp.iter().collect();
    let n = nodes.len();
    match n {
        0 => return None,
        1 => return Some(FiniteType::A(1)),
        2 => {
            return match m.label(nodes[0], nodes[1]) {
                Label::Finite(mm) => Some(if mm == 3 {
                    FiniteType::A(2)
                } else {
                    FiniteType::I2(mm)
                }),
                Label::Infinity => None,
            }
        }
        _ => {}
    }
    let mut edges = Vec::new();
    for (a, &s) in nodes.iter().enumerate() {
        for (b, &t) in nodes.iter().enumerate().skip(a + 1) {
            let l = m.label(s, t);
            if l.is_edge() {
                edges.push((a, b, l.finite()?));
            }
        }
    }
    if edges.len() != n - 1 {
        return None; // a connected graph with a cycle
    }
    let mut degree = vec![0usize; n];
    for &(a, b, _) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let heavy: Vec<&(usize, usize, u32)> = edges.iter().filter(|e| e.2 != 3).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    let is_leaf = |v: usize| degree[v] == 1;
    match (heavy.as_slice(), branch.as_slice()) {
        ([], []) => Some(FiniteType::A(n)),
        ([], [c]) => {
            if degree[*c] != 3 {
                return None;
            }
            let mut arms = arm_lengths(&edges, *c);
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, _) => Some(FiniteType::D(n)),
                (1, 2, 2) | (1, 2, 3) | (1, 2, 4) => Some(FiniteType::E(n)),
                _ => None,
            }
        }
        ([&(a, b, 4)], []) => {
            if is_leaf(a) || is_leaf(b) {
                Some(FiniteType::B(n))
            } else if n == 4 {
                Some(FiniteType::F4)
            } else {
                None
            }
        }
        ([&(a, b, 5)], []) if n <= 4 && (is_leaf(a) || is_leaf(b)) => Some(FiniteType::H(n)),
        _ => None,
    }
}

fn arm_lengths(edges: &[(usize, usize, u32)], center: usize) -> Vec<usize> {
    let neighbours = |v: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(a, b, _)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    };
    neighbours(center)
        .into_iter()
        .map(|first| {
            let (mut prev, mut cur, mut len) = (center, first, 1);
            loop {
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                match next.as_slice() {
                    [x] => {
                        prev = cur;
                        cur = *x;
                        len += 1;
                    }
                    _ => break len,
                }
            }
        })
        .collect()
}

/// Finite types of the components of `subset`, or `None` if some component
/// is infinite. The empty subset has no components and is finite.
pub fn finite_decomposition(
    m: &CoxeterMatrix,
    subset: GenSet,
) -> Option<Vec<(GenSet, FiniteType)>> {
    components(m, subset)
        .into_iter()
        .map(|c| classify_component(m, c).map(|t| (c, t)))
        .collect()
}

/// True iff `W_subset` is finite.
pub fn is_finite_type(m: &CoxeterMatrix, subset: GenSet) -> bool {
    finite_decomposition(m, subset).is_some()
}

/// `|W_subset|` when finite.
pub fn group_order(m: &CoxeterMatrix, subset: GenSet) -> Option<u128> {
    finite_decomposition(m, subset).map(|d| d.iter().map(|(_, t)| t.order()).product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::system::catalog;

    #[test]
    fn catalog_finiteness() {
        for name in [
            "A1", "A2", "A8", "B2", "B8", "D4", "D8", "E6", "E7", "E8", "F4", "H3", "H4", "I2(7)",
            "A1xA1",
        ] {
            let m = catalog(name).unwrap();
            assert!(is_finite_type(&m, m.full_set()), "{name}");
        }
        for name in ["Atilde1", "Atilde2", "Btilde2", "Hyp334"] {
            let m = catalog(name).unwrap();
            assert!(!is_finite_type(&m, m.full_set()), "{name}");
        }
    }

    #[test]
    fn recognizes_types() {
        let m = catalog("E7").unwrap();
        let d = finite_decomposition(&m, m.full_set()).unwrap();
        assert_eq!(d, vec![(m.full_set(), FiniteType::E(7))]);
        let m = catalog("F4").unwrap();
        assert_eq!(classify_component(&m, m.full_set()), Some(FiniteType::F4));
        assert_eq!(group_order(&m, m.full_set()), Some(1152));
        assert_eq!(
            group_order(&catalog("H4").unwrap(), GenSet::full(4)),
            Some(14400)
        );
    }

    #[test]
    fn empty_and_disconnected_subsets() {
        let m = catalog("Atilde2").unwrap();
        assert!(is_finite_type(&m, GenSet::EMPTY));
        assert_eq!(group_order(&m, GenSet::EMPTY), Some(1));
        assert!(is_finite_type(&m, GenSet::from_bits(0b011)));
        let a1a1 = catalog("A1xA1").unwrap();
        assert_eq!(components(&a1a1, a1a1.full_set()).len(), 2);
        assert_eq!(group_order(&a1a1, a1a1.full_set()), Some(4));
    }

    #[test]
    fn rejects_non_spherical_trees() {
        // Affine D4: a star with four arms.
        let mut codes = vec![vec![2u64; 5]; 5];
        for i in 0..5 {
            codes[i][i] = 1;
        }
        for leaf in 1..5 {
            codes[0][leaf] = 3;
            codes[leaf][0] = 3;
        }
        let rows: Vec<&[u64]> = codes.iter().map(Vec::as_slice).collect();
        let m = CoxeterMatrix::from_codes(&rows).unwrap();
        assert!(!is_finite_type(&m, m.full_set()));
        // H5-style path with a 5 at the end is infinite.
        let m = CoxeterMatrix::from_codes(&[
            &[1, 5, 2, 2, 2],
            &[5, 1, 3, 2, 2],
            &[2, 3, 1, 3, 2],
            &[2, 2, 3, 1, 3],
            &[2, 2, 2, 3, 1],
        ])
        .unwrap();
        assert!(!is_finite_type(&m, m.full_set()));
    }
}
