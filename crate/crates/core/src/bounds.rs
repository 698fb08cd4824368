//! Lower bounds on homological orders from zone-emptiness patterns.
//!
//! A pattern records which zones between used diagonals hold a ladder.
//! Each pattern yields three counts (`b1` nonempty zones, `b2` full twists
//! that can be pulled downward, `b3` upward); the cone of a resolution map
//! is bounded below by the minimum over admissible patterns of
//! `max(b1, 2(n-1)·b2, 2(n-1)·b3)`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::braid::{ColoredBraid, InfiniteBraidSpec};
use crate::diagonal::{decompose, find_diagonals, DiagonalDecomposition};
use crate::error::{Error, Result};

/// Largest candidate set `cone_bound` enumerates subsets of.
pub const DEFAULT_CANDIDATE_CAP: usize = 22;

/// A certified lower bound; `Infinite` when no pattern is admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Bound {
    Finite(u64),
    Infinite,
}

impl Bound {
    pub fn finite(self) -> Option<u64> {
        match self {
            Bound::Finite(v) => Some(v),
            Bound::Infinite => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(v) => write!(f, "{v}"),
            Bound::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Bound::Finite(v) => s.serialize_u64(*v),
            Bound::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZonePattern {
    /// Number of used diagonals; zones are `0..=nz`.
    pub nz: usize,
    pub nonempty: BTreeSet<usize>,
}

impl ZonePattern {
    pub fn new(nz: usize, nonempty: impl IntoIterator<Item = usize>) -> Self {
        ZonePattern {
            nz,
            nonempty: nonempty.into_iter().collect(),
        }
    }
}

/// Nonempty zones other than zone 0.
pub fn b1(p: &ZonePattern) -> u64 {
    p.nonempty.iter().filter(|&&j| j != 0).count() as u64
}

/// Full twists of empty zones below each nonempty zone.
pub fn b2(p: &ZonePattern, n: usize) -> u64 {
    let zones: Vec<usize> = p.nonempty.iter().copied().collect();
    zones
        .iter()
        .enumerate()
        .map(|(i, &j)| {
            let below = zones.get(i + 1).copied().unwrap_or(p.nz);
            ((below - j) / n) as u64
        })
        .sum()
}

/// Full twists of empty zones above each nonempty zone, the one just
/// above being unusable.
pub fn b3(p: &ZonePattern, n: usize) -> u64 {
    let mut prev = 0usize;
    let mut total = 0u64;
    for &j in &p.nonempty {
        let d = (j - prev) as i64;
        total += (d - 1).div_euclid(n as i64).max(0) as u64;
        prev = j;
    }
    total
}

fn pattern_value(p: &ZonePattern, n: usize) -> u64 {
    let w = 2 * (n as u64).saturating_sub(1);
    b1(p).max(w * b2(p, n)).max(w * b3(p, n))
}

/// Minimum of the pattern value over all nonempty subsets of `candidates`.
pub fn cone_bound(n: usize, nz: usize, candidates: &BTreeSet<usize>) -> Result<Bound> {
    cone_bound_forced(n, nz, candidates, None)
}

/// As [`cone_bound`], restricted to subsets containing `forced`.
pub fn cone_bound_forced(
    n: usize,
    nz: usize,
    candidates: &BTreeSet<usize>,
    forced: Option<usize>,
) -> Result<Bound> {
    let free: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&z| Some(z) != forced)
        .collect();
    if free.len() > DEFAULT_CANDIDATE_CAP {
        return Err(Error::CapExceeded {
            what: "candidate zone count",
            count: free.len().to_string(),
            cap: DEFAULT_CANDIDATE_CAP as u128,
        });
    }
    if free.is_empty() && forced.is_none() {
        return Ok(Bound::Infinite);
    }
    let first = if forced.is_some() { 0u64 } else { 1 };
    let best = (first..1u64 << free.len())
        .into_par_iter()
        .map(|mask| {
            let zones = free
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &z)| z)
                .chain(forced);
            pattern_value(&ZonePattern::new(nz, zones), n)
        })
        .min();
    Ok(best.map_or(Bound::Infinite, Bound::Finite))
}

/// A bound together with the reason it is degenerate, if it is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlaggedBound {
    pub value: Bound,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<&'static str>,
}

impl FlaggedBound {
    fn plain(value: Bound) -> Self {
        FlaggedBound { value, flag: None }
    }
}

fn admits_ladder(braid: &ColoredBraid) -> bool {
    braid.level().admits(braid.m() + 1)
}

/// Zones holding a crossing that can be resolved into a ladder.
fn candidate_zones(braid: &ColoredBraid, dec: &DiagonalDecomposition) -> BTreeSet<usize> {
    if !admits_ladder(braid) {
        return BTreeSet::new();
    }
    dec.zone_of.values().copied().collect()
}

/// Bound for the map dropping the last full twist's worth of diagonals.
pub fn bound_f(braid: &ColoredBraid, dec: &DiagonalDecomposition) -> Result<FlaggedBound> {
    braid.require_positive()?;
    if braid.m() == 1 {
        return Ok(FlaggedBound::plain(Bound::Finite(dec.y as u64)));
    }
    if dec.z == 0 {
        return Ok(FlaggedBound {
            value: Bound::Finite(0),
            flag: Some("no full twist target"),
        });
    }
    let candidates = candidate_zones(braid, dec);
    Ok(FlaggedBound::plain(cone_bound(braid.n(), dec.used, &candidates)?))
}

/// Bound for the map replacing the last crossing by its ladders.
pub fn bound_g(braid: &ColoredBraid, dec: &DiagonalDecomposition) -> Result<FlaggedBound> {
    braid.require_positive()?;
    let len = braid.len();
    if len == 0 {
        return Ok(FlaggedBound {
            value: Bound::Finite(0),
            flag: Some("empty word"),
        });
    }
    if !admits_ladder(braid) {
        return Ok(FlaggedBound {
            value: Bound::Infinite,
            flag: Some("last crossing admits no ladder"),
        });
    }
    let n = braid.n();
    if dec.is_used_diagonal(len) {
        // treat the last crossing as non-diagonal: it sits below every
        // used diagonal of the shortened word
        let gens: Vec<usize> = braid.word()[..len - 1].iter().map(|l| l.gen).collect();
        let short = decompose(n, &gens);
        let mut candidates: BTreeSet<usize> = short.zone_of.values().copied().collect();
        candidates.insert(short.used);
        let v = cone_bound_forced(n, short.used, &candidates, Some(short.used))?;
        return Ok(FlaggedBound {
            value: v,
            flag: Some("last crossing was diagonal; diagonals recomputed"),
        });
    }
    let forced = dec.zone_of[&len];
    let candidates = candidate_zones(braid, dec);
    Ok(FlaggedBound::plain(cone_bound_forced(
        n,
        dec.used,
        &candidates,
        Some(forced),
    )?))
}

/// Lower bound for the projection between consecutive twist powers.
pub fn twist_projection_bound(_n: usize, y: u64) -> u64 {
    y
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub ell: usize,
    pub y: usize,
    pub z: usize,
    pub bound_f: FlaggedBound,
    pub bound_g: FlaggedBound,
}

pub fn bound_report(braid: &ColoredBraid) -> Result<BoundReport> {
    let dec = find_diagonals(braid)?;
    Ok(BoundReport {
        ell: braid.len(),
        y: dec.y,
        z: dec.z,
        bound_f: bound_f(braid, &dec)?,
        bound_g: bound_g(braid, &dec)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauchyReport {
    pub reports: Vec<BoundReport>,
    pub y_nondecreasing: bool,
    /// `y` at the last `ℓ` minus `y` at the first.
    pub y_growth: i64,
}

pub fn cauchy_report(spec: &InfiniteBraidSpec, ells: &[usize]) -> Result<CauchyReport> {
    if !spec.is_complete() {
        return Err(Error::NotComplete);
    }
    if !spec.is_positive() {
        return Err(Error::NotPositive);
    }
    let reports = ells
        .iter()
        .map(|&ell| bound_report(&spec.partial_braid(ell)))
        .collect::<Result<Vec<_>>>()?;
    let y_nondecreasing = reports.windows(2).all(|w| w[0].y <= w[1].y);
    let y_growth = match (reports.first(), reports.last()) {
        (Some(a), Some(b)) => b.y as i64 - a.y as i64,
        _ => 0,
    };
    Ok(CauchyReport {
        reports,
        y_nondecreasing,
        y_growth,
    })
}
