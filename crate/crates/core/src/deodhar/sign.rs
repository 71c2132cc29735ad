use crate::coxeter::{CoxeterMatrix, GenSet};
use crate::{Error, Result};

/// The sign map of a total order on `S`:
/// `sgn(s, I) = (-1)^#{t in S \ I : t < s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignMap {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl SignMap {
    /// `order[i]` is the `i`-th smallest generator.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &s) in order.iter().enumerate() {
            if s >= n || position[s] != usize::MAX {
                return Err(Error::Invalid(format!(
                    "{order:?} is not a permutation of 0..{n}"
                )));
            }
            position[s] = i;
        }
        Ok(SignMap { order, position })
    }

    /// The input order of the generators.
    pub fn identity(rank: usize) -> Self {
        SignMap {
            order: (0..rank).collect(),
            position: (0..rank).collect(),
        }
    }

    /// Parses a comma-separated list of generator names.
    pub fn from_names(m: &CoxeterMatrix, text: &str) -> Result<Self> {
        let order = text
            .split(',')
            .map(str::trim)
            .map(|n| {
                m.generator(n)
                    .ok_or_else(|| Error::UnknownGenerator(n.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if order.len() != m.rank() {
            return Err(Error::Invalid(format!(
                "order lists {} generators, system has {}",
                order.len(),
                m.rank()
            )));
        }
        Self::new(order)
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self) -> usize {
        self.order.len()
    }

    pub fn position(&self, s: usize) -> usize {
        self.position[s]
    }

    /// `sgn(s, I)` as `+1` or `-1`.
    pub fn sign(&self, s: usize, subset: GenSet) -> i64 {
        let below = (0..self.rank())
            .filter(|&t| !subset.contains(t) && self.position[t] < self.position[s])
            .count();
        if below % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Checks `sgn(s,I) sgn(t,I+s) + sgn(t,I) sgn(s,I+t) = 0` for all `I` and
    /// distinct `s, t` outside `I`.
    pub fn satisfies_axiom(&self) -> bool {
        let full = GenSet::full(self.rank());
        full.subsets().all(|i| {
            let outside: Vec<usize> = full.difference(i).iter().collect();
            outside.iter().all(|&s| {
                outside.iter().filter(|&&t| t != s).all(|&t| {
                    self.sign(s, i) * self.sign(t, i.with(s))
                        + self.sign(t, i) * self.sign(s, i.with(t))
                        == 0
                })
            })
        })
    }

    /// Sorting key making subsets compare lexicographically in this order.
    pub fn subset_key(&self, subset: GenSet) -> Vec<usize> {
        let mut key: Vec<usize> = subset.iter().map(|s| self.position[s]).collect();
        key.sort_unstable();
        key
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn rank_two_values() {
        let sgn = SignMap::identity(2);
        assert_eq!(sgn.sign(0, GenSet::EMPTY), 1);
        assert_eq!(sgn.sign(1, GenSet::EMPTY), -1);
        assert_eq!(sgn.sign(0, GenSet::singleton(1)), 1);
        assert_eq!(sgn.sign(1, GenSet::singleton(0)), 1);
        assert_eq!(SignMap::identity(1).sign(0, GenSet::EMPTY), 1);
    }

    #[test]
    fn axiom_for_all_orders() {
        for n in 0..=4 {
            let perms = permutations(n);
            assert_eq!(perms.len(), (1..=n).product::<usize>());
            for order in perms {
                assert!(SignMap::new(order).unwrap().satisfies_axiom());
            }
        }
    }

    #[test]
    fn top_sign_is_positive() {
        for order in permutations(4) {
            let sgn = SignMap::new(order).unwrap();
            let full = GenSet::full(4);
            for s in 0..4 {
                assert_eq!(sgn.sign(s, full.without(s)), 1);
            }
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(SignMap::new(vec![0, 0]).is_err());
        assert!(SignMap::new(vec![0, 2]).is_err());
    }
}
