//! Crossing complexes as graded lists of ladder webs, and censuses of the
//! resolutions of whole braids.
//!
//! A web in a crossing complex is recorded only by its rung label `r`; the
//! ladder with rung `m` on two `m`-colored strands is the barbell.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::braid::{ColoredBraid, Level};
use crate::diagonal::DiagonalDecomposition;
use crate::error::{Error, Result};
use crate::poly::{GradingShift, LaurentPoly};

/// Default cap on the number of resolutions `resolve_nondiagonals` accepts.
pub const DEFAULT_RESOLUTION_CAP: u128 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingTerm {
    pub rung: u32,
    pub shift: GradingShift,
}

/// Terms of the complex of a crossing between strands colored `i` and `j`,
/// in homological order. Webs with an edge above `N` are dropped.
pub fn crossing_complex(i: u32, j: u32, positive: bool, level: Level) -> Vec<CrossingTerm> {
    let lo = i.min(j);
    let hi = i.max(j);
    let alive = |r: u32| level.admits(hi + r);
    let term = |r: u32, e: u32| CrossingTerm {
        rung: r,
        shift: GradingShift::tq(e as i32),
    };
    if positive {
        (0..=lo).filter(|&r| alive(r)).map(|r| term(r, r)).collect()
    } else {
        (0..=lo)
            .rev()
            .filter(|&r| alive(r))
            .map(|r| term(r, lo - r))
            .collect()
    }
}

/// A unicolored crossing complex written as a mapping cone between the
/// identity web and the subcomplex of ladders with nonzero rung.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeSplit {
    /// Shift carried by the identity (rung 0) web.
    pub identity: GradingShift,
    /// The ladder subcomplex, rungs `1..=m` at shifts `(tq)^r`.
    pub ladder: Vec<CrossingTerm>,
    /// Shift applied to the target of the cone map: `t^-1` on the ladder
    /// part for a positive crossing, trivial for a negative one.
    pub connecting: GradingShift,
}

pub fn cone_split(m: u32, positive: bool, level: Level) -> ConeSplit {
    let ladder = crossing_complex(m, m, true, level)
        .into_iter()
        .filter(|t| t.rung > 0)
        .collect();
    if positive {
        ConeSplit {
            identity: GradingShift::IDENTITY,
            ladder,
            connecting: GradingShift::new(-1, 0, 0),
        }
    } else {
        ConeSplit {
            identity: GradingShift::new(m as i32 - 1, m as i32, 0),
            ladder,
            connecting: GradingShift::IDENTITY,
        }
    }
}

/// Sum of `t^{t} q^{q}` over the terms of one crossing.
pub fn term_poly(terms: &[CrossingTerm]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for t in terms {
        p += &t.shift.to_poly();
    }
    p
}

fn braid_terms(braid: &ColoredBraid) -> Vec<Vec<CrossingTerm>> {
    let m = braid.m();
    braid
        .word()
        .iter()
        .map(|l| crossing_complex(m, m, l.positive, braid.level()))
        .collect()
}

/// Term lists of every crossing, with the derived totals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionCensus {
    pub terms: Vec<Vec<CrossingTerm>>,
    /// Number of webs in the expanded complex, `None` past `u128`.
    pub objects: Option<u128>,
    pub poincare: LaurentPoly,
}

pub fn census(braid: &ColoredBraid) -> ResolutionCensus {
    let terms = braid_terms(braid);
    let objects = terms
        .iter()
        .try_fold(1u128, |acc, t| acc.checked_mul(t.len() as u128));
    let poincare = terms
        .iter()
        .fold(LaurentPoly::one(), |acc, t| &acc * &term_poly(t));
    ResolutionCensus {
        terms,
        objects,
        poincare,
    }
}

/// Product over crossings of the term sums; multiplicative under
/// concatenation of words.
pub fn census_poincare(braid: &ColoredBraid) -> LaurentPoly {
    census(braid).poincare
}

/// Resolution counts of the non-diagonal crossings grouped by which zones
/// end up holding a ladder.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternTable {
    pub resolutions: u128,
    /// Sorted nonempty zones → number of resolutions with exactly that set.
    pub patterns: BTreeMap<Vec<usize>, u128>,
}

/// Counts resolutions of the non-diagonal crossings of `braid` per
/// zone-emptiness pattern. A zone is nonempty when one of its crossings
/// takes a rung of at least 1.
pub fn resolve_nondiagonals(
    braid: &ColoredBraid,
    dec: &DiagonalDecomposition,
    cap: u128,
) -> Result<PatternTable> {
    braid.require_positive()?;
    let m = braid.m();
    let per_crossing = crossing_complex(m, m, true, braid.level()).len() as u128;

    let mut zone_sizes: BTreeMap<usize, u128> = BTreeMap::new();
    let mut total: Option<u128> = Some(1);
    for &zone in dec.zone_of.values() {
        let s = zone_sizes.entry(zone).or_insert(1);
        *s = s.saturating_mul(per_crossing);
        total = total.and_then(|t| t.checked_mul(per_crossing));
    }
    let total = match total {
        Some(t) if t <= cap => t,
        Some(t) => {
            return Err(Error::CapExceeded {
                what: "resolution count",
                count: t.to_string(),
                cap,
            })
        }
        None => {
            return Err(Error::CapExceeded {
                what: "resolution count",
                count: format!("{per_crossing}^{}", dec.zone_of.len()),
                cap,
            })
        }
    };

    // zones where some resolution places a ladder, with their nonempty counts
    let live: Vec<(usize, u128)> = zone_sizes
        .into_iter()
        .filter(|&(_, p)| p > 1)
        .map(|(z, p)| (z, p - 1))
        .collect();
    let mut patterns = BTreeMap::new();
    for mask in 0u64..(1u64 << live.len()) {
        let mut zones = Vec::new();
        let mut count = 1u128;
        for (b, &(z, c)) in live.iter().enumerate() {
            if mask >> b & 1 == 1 {
                zones.push(z);
                count *= c;
            }
        }
        patterns.insert(zones, count);
    }
    Ok(PatternTable {
        resolutions: total,
        patterns,
    })
}
