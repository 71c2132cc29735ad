//! Minimal coset representatives and parabolic decompositions.

use super::ball::{CayleyBall, ElementRef};
use super::system::GenSet;
use crate::{Error, Result};

/// `w = coset_part * parabolic_part` with lengths adding up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParabolicDecomposition {
    /// `w^I`, the unique element of minimal length in `w W_I`.
    pub coset_part: ElementRef,
    /// `w_I` in `W_I`.
    pub parabolic_part: ElementRef,
}

/// `W^I` intersected with the ball: elements without right descents in `I`,
/// sorted by `(length, index)`.
pub fn coset_reps(ball: &CayleyBall, subset: GenSet) -> Vec<ElementRef> {
    ball.elements()
        .filter(|w| ball.right_descents(w.index).intersection(subset).is_empty())
        .collect()
}

/// Left-coset version `^I W`: elements without left descents in `I`.
pub fn left_coset_reps(ball: &CayleyBall, subset: GenSet) -> Vec<ElementRef> {
    ball.elements()
        .filter(|w| ball.left_descents(w.index).intersection(subset).is_empty())
        .collect()
}

/// Splits `w = w^I w_I` by repeatedly stripping right descents lying in `I`.
pub fn parabolic_decompose(
    ball: &CayleyBall,
    w: ElementRef,
    subset: GenSet,
) -> Result<ParabolicDecomposition> {
    let mut coset = w.index;
    let mut para = 0usize;
    loop {
        let desc = ball.right_descents(coset).intersection(subset);
        let Some(s) = desc.iter().next() else { break };
        coset = ball
            .right_mul(coset, s)
            .expect("a right descent stays inside the ball");
        para = ball.left_mul(s, para).ok_or(Error::RadiusInsufficient {
            required: ball.length(para) + 1,
            available: ball.radius(),
        })?;
    }
    let out = ParabolicDecomposition {
        coset_part: ball.element(coset),
        parabolic_part: ball.element(para),
    };
    debug_assert_eq!(out.coset_part.length + out.parabolic_part.length, w.length);
    Ok(out)
}

/// Elements of the parabolic subgroup `W_I` inside the ball, sorted by index.
pub fn parabolic_subgroup(ball: &CayleyBall, subset: GenSet) -> Vec<ElementRef> {
    let mut member = vec![false; ball.len()];
    member[0] = true;
    let mut stack = vec![0usize];
    while let Some(w) = stack.pop() {
        for s in subset.iter() {
            if let Some(sw) = ball.left_mul(s, w) {
                if !member[sw] {
                    member[sw] = true;
                    stack.push(sw);
                }
            }
        }
    }
    (0..ball.len())
        .filter(|&i| member[i])
        .map(|i| ball.element(i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::ball::Extent;
    use crate::coxeter::system::catalog;

    fn a2() -> CayleyBall {
        let m = catalog("A2").unwrap().with_names(&["s", "t"]).unwrap();
        CayleyBall::build(&m, Extent::Complete).unwrap()
    }

    fn idx(ball: &CayleyBall, word: &[usize]) -> usize {
        ball.from_word(word).unwrap()
    }

    #[test]
    fn a2_coset_reps() {
        let ball = a2();
        let full = coset_reps(&ball, GenSet::full(2));
        assert_eq!(full, vec![ball.identity()]);
        assert_eq!(coset_reps(&ball, GenSet::EMPTY).len(), 6);
        let t = GenSet::singleton(1);
        let mut got: Vec<usize> = coset_reps(&ball, t).iter().map(|e| e.index).collect();
        got.sort();
        let mut expected = vec![0, idx(&ball, &[0]), idx(&ball, &[1, 0])];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn a2_decompose_longest() {
        let ball = a2();
        let sts = ball.element(idx(&ball, &[0, 1, 0]));
        let d = parabolic_decompose(&ball, sts, GenSet::singleton(1)).unwrap();
        assert_eq!(d.coset_part.index, idx(&ball, &[1, 0]));
        assert_eq!(d.parabolic_part.index, idx(&ball, &[1]));
    }

    #[test]
    fn trivial_decompositions() {
        let ball = a2();
        for w in ball.elements() {
            let d = parabolic_decompose(&ball, w, GenSet::EMPTY).unwrap();
            assert_eq!((d.coset_part, d.parabolic_part), (w, ball.identity()));
        }
        let d = parabolic_decompose(&ball, ball.identity(), GenSet::full(2)).unwrap();
        assert_eq!(
            (d.coset_part, d.parabolic_part),
            (ball.identity(), ball.identity())
        );
    }

    #[test]
    fn parabolic_subgroup_sizes() {
        let ball = CayleyBall::build(&catalog("B3").unwrap(), Extent::Complete).unwrap();
        assert_eq!(parabolic_subgroup(&ball, GenSet::from_bits(0b110)).len(), 8);
        assert_eq!(parabolic_subgroup(&ball, GenSet::from_bits(0b101)).len(), 4);
        assert_eq!(parabolic_subgroup(&ball, GenSet::EMPTY).len(), 1);
    }
}
