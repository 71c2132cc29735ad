//! Breadth-first enumeration of `W` up to a length bound.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use super::classify::is_finite_type;
use super::geometric::{GeometricRep, RepMatrix};
use super::system::{CoxeterMatrix, GenSet};
use crate::{Error, Result};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_MEMORY_CAP: usize = 200_000;

/// How far to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extent {
    Radius(usize),
    Complete,
}

/// An element of a [`CayleyBall`] together with its length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementRef {
    pub index: usize,
    pub length: usize,
}

/// All elements of `W` of length at most `radius`, with multiplication and
/// descent tables.
///
/// Element indices follow BFS discovery order, so they are sorted by length
/// and index 0 is the identity.
#[derive(Clone, Debug)]
pub struct CayleyBall {
    system: CoxeterMatrix,
    rep: GeometricRep,
    matrices: Vec<RepMatrix>,
    lengths: Vec<usize>,
    /// `(s, p)` with `w = s * p` and `l(p) = l(w) - 1`.
    parent: Vec<Option<(usize, usize)>>,
    left_mul: Vec<Vec<Option<usize>>>,
    right_mul: Vec<Vec<Option<usize>>>,
    inverse: Vec<usize>,
    left_descents: Vec<GenSet>,
    right_descents: Vec<GenSet>,
    radius: usize,
    complete: bool,
}

struct Dedup {
    buckets: HashMap<u64, Vec<usize>>,
}

impl Dedup {
    fn key(m: &RepMatrix) -> u64 {
        let mut h = DefaultHasher::new();
        m.hash(&mut h);
        h.finish()
    }

    fn find(&self, matrices: &[RepMatrix], m: &RepMatrix) -> Option<usize> {
        self.buckets
            .get(&Self::key(m))?
            .iter()
            .copied()
            .find(|&i| matrices[i] == *m)
    }

    fn insert(&mut self, m: &RepMatrix, idx: usize) {
        self.buckets.entry(Self::key(m)).or_default().push(idx);
    }
}

impl CayleyBall {
    /// Enumerates with the default memory cap.
    pub fn build(m: &CoxeterMatrix, extent: Extent) -> Result<Self> {
        Self::build_with_cap(m, extent, DEFAULT_MEMORY_CAP)
    }

    pub fn build_with_cap(m: &CoxeterMatrix, extent: Extent, cap: usize) -> Result<Self> {
        if extent == Extent::Complete && !is_finite_type(m, m.full_set()) {
            return Err(Error::NotFiniteType(
                "complete enumeration requested for an infinite Coxeter group".into(),
            ));
        }
        let rank = m.rank();
        let rep = GeometricRep::new(m);
        let max_depth = match extent {
            Extent::Radius(r) => r,
            Extent::Complete => usize::MAX,
        };
        let mut matrices = vec![rep.identity()];
        let mut lengths = vec![0usize];
        let mut parent = vec![None];
        let mut left_mul: Vec<Vec<Option<usize>>> = vec![Vec::new(); rank];
        let mut dedup = Dedup {
            buckets: HashMap::new(),
        };
        dedup.insert(&matrices[0], 0);

        let mut level_start = 0;
        let mut depth = 0;
        loop {
            let level_end = matrices.len();
            if level_start == level_end {
                break;
            }
            for w in level_start..level_end {
                for (s, row) in left_mul.iter_mut().enumerate() {
                    let sw = rep.left_reflect(s, &matrices[w]);
                    let found = match dedup.find(&matrices, &sw) {
                        Some(i) => Some(i),
                        None if depth < max_depth => {
                            if matrices.len() >= cap {
                                return Err(Error::MemoryGuard {
                                    cap,
                                    radius_reached: depth,
                                });
                            }
                            let i = matrices.len();
                            dedup.insert(&sw, i);
                            matrices.push(sw);
                            lengths.push(depth + 1);
                            parent.push(Some((s, w)));
                            Some(i)
                        }
                        None => None,
                    };
                    row.push(found);
                }
            }
            level_start = level_end;
            depth += 1;
            if depth > max_depth {
                break;
            }
        }
        let complete = extent == Extent::Complete;
        let radius = if complete {
            lengths.last().copied().unwrap_or(0)
        } else {
            max_depth
        };

        let n = matrices.len();
        let right_mul: Vec<Vec<Option<usize>>> = (0..n)
            .map(|w| {
                (0..rank)
                    .map(|s| dedup.find(&matrices, &rep.right_reflect(&matrices[w], s)))
                    .collect()
            })
            .collect();
        let mut inverse = vec![0usize; n];
        for w in 1..n {
            let (s, p) = parent[w].expect("non-identity has a parent");
            // (s p)^-1 = p^-1 s
            inverse[w] = right_mul[inverse[p]][s].expect("inverse has the same length");
        }
        let left_descents = (0..n)
            .map(|w| {
                (0..rank).fold(GenSet::EMPTY, |d, s| match left_mul[s][w] {
                    Some(x) if lengths[x] < lengths[w] => d.with(s),
                    _ => d,
                })
            })
            .collect();
        let right_descents = (0..n)
            .map(|w| {
                (0..rank).fold(GenSet::EMPTY, |d, s| match right_mul[w][s] {
                    Some(x) if lengths[x] < lengths[w] => d.with(s),
                    _ => d,
                })
            })
            .collect();
        Ok(CayleyBall {
            system: m.clone(),
            rep,
            matrices,
            lengths,
            parent,
            left_mul,
            right_mul,
            inverse,
            left_descents,
            right_descents,
            radius,
            complete,
        })
    }

    pub fn system(&self) -> &CoxeterMatrix {
        &self.system
    }

    pub fn rep(&self) -> &GeometricRep {
        &self.rep
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// Largest length enumerated. For complete balls this is the length of
    /// the longest element.
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// True when every element of length `<= l` is stored.
    pub fn covers(&self, l: usize) -> bool {
        self.complete || l <= self.radius
    }

    pub fn identity(&self) -> ElementRef {
        self.element(0)
    }

    pub fn element(&self, index: usize) -> ElementRef {
        ElementRef {
            index,
            length: self.lengths[index],
        }
    }

    pub fn get(&self, index: usize) -> Result<ElementRef> {
        if index < self.len() {
            Ok(self.element(index))
        } else {
            Err(Error::InvalidElement(index))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementRef> + '_ {
        (0..self.len()).map(|i| self.element(i))
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub fn matrix(&self, w: usize) -> &RepMatrix {
        &self.matrices[w]
    }

    /// `s * w`, or `None` when it lies outside the ball.
    pub fn left_mul(&self, s: usize, w: usize) -> Option<usize> {
        self.left_mul[s][w]
    }

    /// `w * s`, or `None` when it lies outside the ball.
    pub fn right_mul(&self, w: usize, s: usize) -> Option<usize> {
        self.right_mul[w][s]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    pub fn left_descents(&self, w: usize) -> GenSet {
        self.left_descents[w]
    }

    pub fn right_descents(&self, w: usize) -> GenSet {
        self.right_descents[w]
    }

    /// The BFS parent chain as a reduced word `s_1 ... s_k` with
    /// `w = s_1 s_2 ... s_k`.
    pub fn word(&self, w: usize) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.lengths[w]);
        let mut cur = w;
        while let Some((s, p)) = self.parent[cur] {
            word.push(s);
            cur = p;
        }
        word
    }

    /// Evaluates a word in the generators, failing if some suffix product
    /// leaves the ball.
    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut cur = 0;
        for (i, &s) in word.iter().enumerate().rev() {
            if s >= self.rank() {
                return Err(Error::InvalidElement(s));
            }
            cur = self.left_mul(s, cur).ok_or(Error::RadiusInsufficient {
                required: word.len() - i,
                available: self.radius,
            })?;
        }
        Ok(cur)
    }

    /// `u * v` in `W`, or `None` when some partial product leaves the ball.
    pub fn product(&self, u: usize, v: usize) -> Option<usize> {
        let mut cur = v;
        for &s in self.word(u).iter().rev() {
            cur = self.left_mul(s, cur)?;
        }
        Some(cur)
    }

    /// Number of elements of each length `0..=radius`.
    pub fn length_histogram(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.radius + 1];
        for &l in &self.lengths {
            h[l] += 1;
        }
        h
    }

    /// Indices of elements of length exactly `l`.
    pub fn level(&self, l: usize) -> std::ops::Range<usize> {
        let start = self.lengths.partition_point(|&x| x < l);
        let end = self.lengths.partition_point(|&x| x <= l);
        start..end
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::system::catalog;

    #[test]
    fn a2_complete() {
        let ball = CayleyBall::build(&catalog("A2").unwrap(), Extent::Complete).unwrap();
        assert_eq!(ball.len(), 6);
        assert_eq!(ball.length_histogram(), vec![1, 2, 2, 1]);
        assert!(ball.is_complete());
        assert_eq!(ball.radius(), 3);
    }

    #[test]
    fn affine_a1_ball() {
        let ball = CayleyBall::build(&catalog("Atilde1").unwrap(), Extent::Radius(4)).unwrap();
        assert_eq!(ball.len(), 9);
        assert_eq!(ball.length_histogram(), vec![1, 2, 2, 2, 2]);
        let top = ball.level(4).start;
        assert!(ball.left_mul(0, top).is_none() || ball.left_mul(1, top).is_none());
    }

    #[test]
    fn rank_zero() {
        let m = CoxeterMatrix::new(vec![], None).unwrap();
        let ball = CayleyBall::build(&m, Extent::Complete).unwrap();
        assert_eq!(ball.len(), 1);
        assert_eq!(ball.length_histogram(), vec![1]);
    }

    #[test]
    fn complete_rejected_for_infinite() {
        let m = catalog("Atilde2").unwrap();
        assert!(matches!(
            CayleyBall::build(&m, Extent::Complete),
            Err(Error::NotFiniteType(_))
        ));
    }

    #[test]
    fn memory_guard() {
        let m = catalog("Hyp334").unwrap();
        match CayleyBall::build_with_cap(&m, Extent::Radius(30), 100) {
            Err(Error::MemoryGuard {
                cap,
                radius_reached,
            }) => {
                assert_eq!(cap, 100);
                assert!(radius_reached < 30);
            }
            other => panic!("expected guard, got {other:?}"),
        }
    }

    #[test]
    fn group_orders() {
        for (name, order) in [
            ("B3", 48),
            ("H3", 120),
            ("A3", 24),
            ("I2(7)", 14),
            ("A1xA1", 4),
        ] {
            let ball = CayleyBall::build(&catalog(name).unwrap(), Extent::Complete).unwrap();
            assert_eq!(ball.len(), order, "{name}");
        }
    }

    #[test]
    fn words_round_trip() {
        let ball = CayleyBall::build(&catalog("B3").unwrap(), Extent::Complete).unwrap();
        for w in ball.elements() {
            let word = ball.word(w.index);
            assert_eq!(word.len(), w.length);
            assert_eq!(ball.from_word(&word).unwrap(), w.index);
            let rev: Vec<usize> = word.iter().rev().copied().collect();
            assert_eq!(ball.from_word(&rev).unwrap(), ball.inverse(w.index));
            assert_eq!(ball.product(w.index, ball.inverse(w.index)), Some(0));
        }
    }
}
