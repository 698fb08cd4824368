//! Greedy diagonals of a positive braid word and the zones between them.
//!
//! A diagonal is a subsequence `σ_1, σ_2, …, σ_{n-1}` at strictly
//! increasing positions, i.e. one copy of the fractional twist hidden in the
//! word. Only the first `n·z` diagonals (`z = ⌊y/n⌋` full twists) are used;
//! crossings of later diagonals are treated as non-diagonal.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::braid::ColoredBraid;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalDecomposition {
    pub n: usize,
    pub len: usize,
    /// Every diagonal found, in order. Entry `j` of a diagonal is the
    /// position of its `σ_{j+1}`.
    pub diagonals: Vec<Vec<usize>>,
    pub y: usize,
    pub z: usize,
    /// `n·z`, the number of diagonals kept.
    pub used: usize,
    /// Positions not on any diagonal.
    pub skipped: BTreeSet<usize>,
    /// Zone of every position not on a used diagonal.
    pub zone_of: BTreeMap<usize, usize>,
}

/// Runs the greedy scan on `braid`, which must be positive.
pub fn find_diagonals(braid: &ColoredBraid) -> Result<DiagonalDecomposition> {
    braid.require_positive()?;
    let gens: Vec<usize> = braid.word().iter().map(|l| l.gen).collect();
    Ok(decompose(braid.n(), &gens))
}

/// The greedy scan on a positive word given by generator indices.
pub fn decompose(n: usize, gens: &[usize]) -> DiagonalDecomposition {
    let len = gens.len();
    let mut diagonals: Vec<Vec<usize>> = Vec::new();
    if n >= 2 {
        // per-generator sorted occurrence lists (0-based)
        let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, &g) in gens.iter().enumerate() {
            occ[g].push(i);
        }
        let first_after = |g: usize, p: usize| -> Option<usize> {
            let v = &occ[g];
            let k = v.partition_point(|&x| x < p);
            v.get(k).copied()
        };
        let last_before = |g: usize, p: usize| -> Option<usize> {
            let v = &occ[g];
            let k = v.partition_point(|&x| x < p);
            k.checked_sub(1).map(|k| v[k])
        };

        let mut start = 0;
        'outer: while let Some(p1) = first_after(1, start) {
            let mut diag = vec![p1];
            for g in 2..n {
                match first_after(g, diag[g - 2] + 1) {
                    Some(p) => diag.push(p),
                    None => break 'outer,
                }
            }
            let mut back = diag[n - 2];
            for g in (1..n - 1).rev() {
                back = last_before(g, back).expect("diagonal has an earlier occurrence");
            }
            diagonals.push(diag.iter().map(|p| p + 1).collect());
            start = back + 1;
        }
    }

    let y = diagonals.len();
    let z = y / n;
    let used = n * z;
    let on_any: BTreeSet<usize> = diagonals.iter().flatten().copied().collect();
    let on_used: BTreeSet<usize> = diagonals[..used].iter().flatten().copied().collect();
    let skipped = (1..=len).filter(|p| !on_any.contains(p)).collect();
    let zone_of = (1..=len)
        .filter(|p| !on_used.contains(p))
        .map(|p| {
            let g = gens[p - 1];
            let zone = diagonals[..used].iter().filter(|d| p > d[g - 1]).count();
            (p, zone)
        })
        .collect();

    DiagonalDecomposition {
        n,
        len,
        diagonals,
        y,
        z,
        used,
        skipped,
        zone_of,
    }
}

impl DiagonalDecomposition {
    /// Non-diagonal crossing count for every zone `0..=used`.
    pub fn zone_census(&self) -> BTreeMap<usize, usize> {
        let mut out: BTreeMap<usize, usize> = (0..=self.used).map(|z| (z, 0)).collect();
        for &zone in self.zone_of.values() {
            *out.entry(zone).or_insert(0) += 1;
        }
        out
    }

    /// True if position `p` lies on one of the used diagonals.
    pub fn is_used_diagonal(&self, p: usize) -> bool {
        !self.zone_of.contains_key(&p) && (1..=self.len).contains(&p)
    }
}
