//! Closed-form grading shifts picked up by fork slides, fork twists, ladder
//! slides, ladder twists and braid-like Reidemeister moves.
//!
//! The same formulas serve finite `N` and the HOMFLY-PT limit; only the
//! first Reidemeister move depends on `N`.

use serde::{Deserialize, Serialize};

use crate::braid::Level;
use crate::error::{Error, Result};
use crate::poly::GradingShift;

/// A crossing between strands colored `left` and `right`; a color of 0
/// stands for an absent strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub left: u32,
    pub right: u32,
}

impl Crossing {
    pub fn new(left: u32, right: u32) -> Self {
        Crossing { left, right }
    }

    pub fn min(self) -> u32 {
        crossing_min(self.left, self.right)
    }
}

pub fn crossing_min(i: u32, j: u32) -> u32 {
    i.min(j)
}

fn exp(x: i64) -> Result<i32> {
    i32::try_from(x).map_err(|_| Error::ExponentOverflow)
}

fn m(a: i64, b: i64) -> i64 {
    a.min(b)
}

/// Which side of the fork the strand passes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ForkSlide {
    /// The strand crosses both prongs; costs `(tq)^α`.
    T1,
    /// Shift-free variant.
    T2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ForkTwist {
    T3,
    T4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reidemeister {
    R1Pos,
    R1Neg,
    R2,
}

/// `(tq)^{min(i,k)+min(j,k)-min(i+j,k)}` for `T1`, identity for `T2`.
pub fn fork_slide_shift(i: u32, j: u32, k: u32, variant: ForkSlide) -> Result<GradingShift> {
    if variant == ForkSlide::T2 {
        return Ok(GradingShift::IDENTITY);
    }
    let (i, j, k) = (i as i64, j as i64, k as i64);
    Ok(GradingShift::tq(exp(m(i, k) + m(j, k) - m(i + j, k))?))
}

/// `T3 → t^{min(i,j)} q^{ij+min(i,j)}`, `T4 → q^{-ij}`.
pub fn fork_twist_shift(i: u32, j: u32, variant: ForkTwist) -> Result<GradingShift> {
    let (i, j) = (i as i64, j as i64);
    Ok(match variant {
        ForkTwist::T3 => GradingShift::new(exp(m(i, j))?, exp(i * j + m(i, j))?, 0),
        ForkTwist::T4 => GradingShift::new(0, exp(-i * j)?, 0),
    })
}

/// `(tq)^α`, `α = min(i,l)+min(j,l)-min(i+k,l)-min(j-k,l)`, for `k ≤ j`.
pub fn ladder_slide_shift(i: u32, j: u32, k: u32, l: u32) -> Result<GradingShift> {
    if k > j {
        return Err(Error::InvalidMove(format!(
            "ladder slide needs k <= j (k={k}, j={j})"
        )));
    }
    let (i, j, k, l) = (i as i64, j as i64, k as i64, l as i64);
    Ok(GradingShift::tq(exp(
        m(i, l) + m(j, l) - m(i + k, l) - m(j - k, l),
    )?))
}

fn check_twist(i: u32, j: u32, k: u32) -> Result<()> {
    if k == 0 || k > i.min(j) {
        return Err(Error::InvalidMove(format!(
            "ladder twist needs 1 <= k <= min(i, j) (i={i}, j={j}, k={k})"
        )));
    }
    Ok(())
}

/// `t^e q^{e+(i-j-k)k}` with `e = min(i-k, j-k) - min(i, k)`.
pub fn ladder_twist_shift(i: u32, j: u32, k: u32) -> Result<GradingShift> {
    check_twist(i, j, k)?;
    let (i, j, k) = (i as i64, j as i64, k as i64);
    let e = m(i - k, j - k) - m(i, k);
    Ok(GradingShift::new(exp(e)?, exp(e + (i - j - k) * k)?, 0))
}

/// The ladder twist rebuilt from its four constituent moves: a fork slide,
/// a fork twist, an inverse fork twist and a second fork slide.
pub fn ladder_twist_proof_composition(i: u32, j: u32, k: u32) -> Result<GradingShift> {
    check_twist(i, j, k)?;
    let (i, j, k) = (i as i64, j as i64, k as i64);
    let slide_in = GradingShift::tq(exp(m(i - k, j + k) - m(k, i - k) - m(j, i - k))?);
    let twist = GradingShift::tq(exp(m(i - k, k))?) * GradingShift::new(0, exp((i - k) * k)?, 0);
    let untwist = GradingShift::tq(exp(-m(j, k))?) * GradingShift::new(0, exp(-j * k)?, 0);
    let slide_out = GradingShift::tq(exp(m(j, k) + m(j, i - k) - m(i, j))?);
    Ok(slide_in * twist * untwist * slide_out)
}

/// Homological shift of an isotopy: total crossing minimum before minus
/// total crossing minimum after.
pub fn isotopy_alpha(before: &[Crossing], after: &[Crossing]) -> i64 {
    let sum = |xs: &[Crossing]| xs.iter().map(|c| c.min() as i64).sum::<i64>();
    sum(before) - sum(after)
}

/// `R2 → t^i q^i`, `R1pos → q^{i(i-N)}`, `R1neg → t^i q^{i(N-i+1)}`.
pub fn reidemeister_shift(mv: Reidemeister, i: u32, level: Level) -> Result<GradingShift> {
    let i64_ = i as i64;
    match mv {
        Reidemeister::R2 => Ok(GradingShift::tq(exp(i64_)?)),
        Reidemeister::R1Pos | Reidemeister::R1Neg => {
            let n = level
                .finite()
                .ok_or(Error::InfiniteLevel("a first Reidemeister move"))? as i64;
            Ok(if mv == Reidemeister::R1Pos {
                GradingShift::new(0, exp(i64_ * (i64_ - n))?, 0)
            } else {
                GradingShift::new(exp(i64_)?, exp(i64_ * (n - i64_ + 1))?, 0)
            })
        }
    }
}

/// Crossing colors on either side of a move, as fed to [`isotopy_alpha`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveCrossings {
    pub before: Vec<Crossing>,
    pub after: Vec<Crossing>,
}

/// Before/after crossings of a fork slide: a strand colored `k` crosses the
/// prongs `i`, `j` before and their merge `i+j` after.
pub fn fork_slide_crossings(i: u32, j: u32, k: u32) -> MoveCrossings {
    MoveCrossings {
        before: vec![Crossing::new(i, k), Crossing::new(j, k)],
        after: vec![Crossing::new(i + j, k)],
    }
}

/// A `T3` fork twist removes one crossing between the prongs.
pub fn fork_twist_crossings(i: u32, j: u32) -> MoveCrossings {
    MoveCrossings {
        before: vec![Crossing::new(i, j)],
        after: vec![],
    }
}

/// A rung `k` slides through a strand colored `l`, changing the colors of
/// the two crossings from `(i, j)` to `(i+k, j-k)`.
pub fn ladder_slide_crossings(i: u32, j: u32, k: u32, l: u32) -> MoveCrossings {
    MoveCrossings {
        before: vec![Crossing::new(i, l), Crossing::new(j, l)],
        after: vec![Crossing::new(i + k, l), Crossing::new(j - k, l)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: i32, q: i32) -> GradingShift {
        GradingShift::new(t, q, 0)
    }

    #[test]
    fn crossing_minimum() {
        assert_eq!(crossing_min(1, 1), 1);
        assert_eq!(crossing_min(2, 5), 2);
        assert_eq!(crossing_min(0, 3), 0);
    }

    #[test]
    fn fork_moves() {
        assert_eq!(fork_slide_shift(1, 1, 1, ForkSlide::T1).unwrap(), s(1, 1));
        assert_eq!(fork_slide_shift(4, 7, 2, ForkSlide::T2).unwrap(), s(0, 0));
        assert_eq!(fork_slide_shift(2, 3, 1, ForkSlide::T1).unwrap(), s(1, 1));
        assert_eq!(fork_twist_shift(1, 1, ForkTwist::T3).unwrap(), s(1, 2));
        assert_eq!(fork_twist_shift(1, 1, ForkTwist::T4).unwrap(), s(0, -1));
        assert_eq!(fork_twist_shift(2, 3, ForkTwist::T3).unwrap(), s(2, 8));
    }

    #[test]
    fn ladder_moves() {
        assert!(ladder_slide_shift(3, 2, 0, 4).unwrap().is_identity());
        assert_eq!(ladder_slide_shift(1, 1, 1, 1).unwrap(), s(1, 1));
        assert!(ladder_slide_shift(2, 3, 1, 2).unwrap().is_identity());
        assert!(ladder_slide_shift(1, 1, 2, 1).is_err());

        assert_eq!(ladder_twist_shift(1, 1, 1).unwrap(), s(-1, -2));
        assert_eq!(ladder_twist_shift(2, 2, 1).unwrap(), s(0, -1));
        assert!(ladder_twist_shift(3, 2, 1).unwrap().is_identity());
        assert!(ladder_twist_shift(3, 2, 0).is_err());
        assert!(ladder_twist_shift(3, 2, 3).is_err());

        assert_eq!(ladder_twist_proof_composition(1, 1, 1).unwrap(), s(-1, -2));
        // the four factors at (2,2,1): t^-1 q^-1 · t q^2 · t^-1 q^-3 · 1
        assert_eq!(ladder_twist_proof_composition(2, 2, 1).unwrap(), s(-1, -2));
        assert!(ladder_twist_proof_composition(3, 2, 1).unwrap().is_identity());
    }

    #[test]
    fn alpha() {
        let xs = [Crossing::new(2, 3), Crossing::new(1, 1)];
        assert_eq!(isotopy_alpha(&xs, &xs), 0);
        // a rung through a full twist on 3 strands lowers 4 crossings by 1
        let before = vec![Crossing::new(2, 2); 4];
        let after = vec![Crossing::new(1, 2); 4];
        assert_eq!(isotopy_alpha(&before, &after), 4);
    }

    #[test]
    fn reidemeister() {
        let two = Level::Finite(2);
        assert_eq!(reidemeister_shift(Reidemeister::R2, 1, two).unwrap(), s(1, 1));
        assert_eq!(reidemeister_shift(Reidemeister::R1Pos, 1, two).unwrap(), s(0, -1));
        assert_eq!(reidemeister_shift(Reidemeister::R1Neg, 1, two).unwrap(), s(1, 2));
        assert!(reidemeister_shift(Reidemeister::R1Pos, 1, Level::Infinite).is_err());
        assert_eq!(
            reidemeister_shift(Reidemeister::R2, 3, Level::Infinite).unwrap(),
            s(3, 3)
        );
    }
}
