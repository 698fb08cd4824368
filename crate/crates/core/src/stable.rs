//! The stable triply graded algebra `𝒜ₙ = Q[u₁…uₙ, ξ₁…ξₙ]`, its truncations
//! by homological degree, and the decategorified stabilization check on
//! torus braids.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::braid::{ColoredBraid, Level};
use crate::diagonal::find_diagonals;
use crate::error::{Error, Result};
use crate::homfly::{homfly_with, HomflyPoly, MarkovTrace};
use crate::poly::{Exps, GradingShift, LaurentPoly};

/// Tridegree `(t, q, a)`.
pub type Tridegree = (i32, i32, i32);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub degree: Tridegree,
    /// Odd generators square to zero.
    pub odd: bool,
}

pub fn u_degree(k: u32) -> Tridegree {
    let k = k as i32;
    (2 * k - 2, -2 * k, 0)
}

pub fn xi_degree(k: u32) -> Tridegree {
    let k = k as i32;
    (2 * k - 2, 4 - 2 * k, 1)
}

/// `u_k` and `ξ_k` for `k = 1..=n`, interleaved.
pub fn an_generators(n: u32) -> Vec<Generator> {
    (1..=n)
        .flat_map(|k| {
            [
                Generator {
                    name: format!("u{k}"),
                    degree: u_degree(k),
                    odd: false,
                },
                Generator {
                    name: format!("xi{k}"),
                    degree: xi_degree(k),
                    odd: true,
                },
            ]
        })
        .collect()
}

/// Graded dimensions, keyed by tridegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigradedTable {
    pub n: u32,
    /// Only homological degrees below `y` are present.
    pub y: u32,
    pub q_min: i32,
    pub dims: BTreeMap<Tridegree, u64>,
}

impl TrigradedTable {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("t\tq\ta\tdim\n");
        for ((t, q, a), d) in &self.dims {
            out.push_str(&format!("{t}\t{q}\t{a}\t{d}\n"));
        }
        out
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }
}

impl Serialize for TrigradedTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row {
            t: i32,
            q: i32,
            a: i32,
            dim: u64,
        }
        #[derive(Serialize)]
        struct Table {
            n: u32,
            y: u32,
            q_min: i32,
            rows: Vec<Row>,
        }
        Table {
            n: self.n,
            y: self.y,
            q_min: self.q_min,
            rows: self
                .dims
                .iter()
                .map(|(&(t, q, a), &dim)| Row { t, q, a, dim })
                .collect(),
        }
        .serialize(s)
    }
}

/// Dimensions of the span of monomials `u^α ξ^β` of homological degree
/// below `y` and `q`-degree at least `q_min`.
pub fn an_truncated_dims(n: u32, y: u32, q_min: i32) -> TrigradedTable {
    let mut dims = BTreeMap::new();
    // odd part first; each u_k only lowers q, so the even part is pruned
    // as soon as q drops below q_min
    for mask in 0u64..1 << n.min(63) {
        let mut deg = (0i32, 0i32, 0i32);
        for k in 1..=n {
            if mask >> (k - 1) & 1 == 1 {
                let d = xi_degree(k);
                deg = (deg.0 + d.0, deg.1 + d.1, deg.2 + d.2);
            }
        }
        if deg.0 >= y as i32 {
            continue;
        }
        even_part(n, 1, y as i32, q_min, deg, &mut dims);
    }
    TrigradedTable { n, y, q_min, dims }
}

fn even_part(
    n: u32,
    k: u32,
    y: i32,
    q_min: i32,
    deg: Tridegree,
    dims: &mut BTreeMap<Tridegree, u64>,
) {
    if deg.1 < q_min || deg.0 >= y {
        return;
    }
    if k > n {
        *dims.entry(deg).or_insert(0) += 1;
        return;
    }
    let d = u_degree(k);
    let mut cur = deg;
    while cur.1 >= q_min && cur.0 < y {
        even_part(n, k + 1, y, q_min, cur, dims);
        cur = (cur.0 + d.0, cur.1 + d.1, cur.2 + d.2);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkEstimateReport {
    pub n: usize,
    pub ell: usize,
    pub y: usize,
    pub statement: String,
    pub table: TrigradedTable,
}

/// The homology of a positive 1-colored braid agrees with the truncated
/// stable algebra below homological degree `y`.
pub fn link_estimate_report(braid: &ColoredBraid, q_min: i32) -> Result<LinkEstimateReport> {
    braid.require_positive()?;
    if braid.m() != 1 {
        return Err(Error::Precondition(format!(
            "the link estimate needs m=1, got m={}",
            braid.m()
        )));
    }
    let dec = find_diagonals(braid)?;
    let y = dec.y;
    let n = braid.n();
    let statement = if y == 0 {
        "no diagonals: the estimate is vacuous".to_string()
    } else {
        format!(
            "HHH of the closure agrees with A_{n} in homological degrees below {y} \
             (table restricted to q >= {q_min})"
        )
    };
    Ok(LinkEstimateReport {
        n,
        ell: braid.len(),
        y,
        statement,
        table: an_truncated_dims(n as u32, y as u32, q_min),
    })
}

/// Largest strand count the stability check will expand.
pub const MAX_STABILITY_STRANDS: usize = 6;
/// Largest torus word length the stability check will expand.
pub const MAX_STABILITY_CROSSINGS: usize = 200;

/// Highest power of `δ` in `p`.
pub fn delta_degree(p: &HomflyPoly) -> u32 {
    p.terms().map(|(m, _)| m.delta).max().unwrap_or(0)
}

/// `P·z^{clear}` with `z = q − q⁻¹`, as a polynomial in `(a, q)`. `clear`
/// must be at least [`delta_degree`] of `P`.
pub fn specialize(p: &HomflyPoly, clear: u32) -> Result<LaurentPoly> {
    let zq: LaurentPoly = &LaurentPoly::q_pow(1, 1) - &LaurentPoly::q_pow(1, -1);
    let scaled = p * &HomflyPoly::z(clear as i32);
    let mut out = LaurentPoly::zero();
    for (m, c) in scaled.terms() {
        if m.delta > 0 || m.z < 0 {
            return Err(Error::Precondition(format!(
                "{p} times z^{clear} is not a polynomial in a and z"
            )));
        }
        out += &(&LaurentPoly::monomial(c, Exps::new(0, 0, m.a)) * &zq.pow(m.z as u32));
    }
    Ok(out)
}

/// Shifts to lowest `a`- and `q`-degree 0.
pub fn normalize_aq(p: &LaurentPoly) -> LaurentPoly {
    let min_a = p.terms().map(|(e, _)| e.a).min().unwrap_or(0);
    let min_q = p.min_q().unwrap_or(0);
    p.shifted(GradingShift::new(0, -min_q, -min_a))
}

fn q_slice(p: &LaurentPoly, q: i32) -> Vec<(i32, i64)> {
    p.terms().filter(|(e, _)| e.q == q).map(|(e, c)| (e.a, c)).collect()
}

/// Number of lowest `q`-degrees, counted from 0, on which `p` and `r`
/// agree in every `a`-degree.
pub fn agreement(p: &LaurentPoly, r: &LaurentPoly) -> usize {
    let top = p.max_q().unwrap_or(0).max(r.max_q().unwrap_or(0));
    (0..=top)
        .take_while(|&d| q_slice(p, d) == q_slice(r, d))
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityEntry {
    pub k: usize,
    pub homfly: HomflyPoly,
    pub normalized: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub n: usize,
    pub entries: Vec<StabilityEntry>,
    /// Agreement of each consecutive pair.
    pub agreements: Vec<usize>,
    pub nondecreasing: bool,
}

/// HOMFLY-PT polynomials of the torus closures `(σ₁…σ_{n-1})^k`, compared
/// coefficientwise after `z = q − q⁻¹` and normalization. Agreement grows
/// from the lowest `q`-degrees up.
pub fn stability_check(n: usize, ks: &[usize]) -> Result<StabilityReport> {
    if n == 0 {
        return Err(Error::InvalidBraid("at least one strand is needed".into()));
    }
    if n > MAX_STABILITY_STRANDS {
        return Err(Error::CapExceeded {
            what: "strand count",
            count: n.to_string(),
            cap: MAX_STABILITY_STRANDS as u128,
        });
    }
    if ks.windows(2).any(|w| w[0] > w[1]) || ks.contains(&0) {
        return Err(Error::Precondition(
            "k values must be positive and increasing".into(),
        ));
    }
    let mut trace = MarkovTrace::new();
    let mut polys = Vec::new();
    for &k in ks {
        let len = k * (n - 1);
        if len > MAX_STABILITY_CROSSINGS {
            return Err(Error::CapExceeded {
                what: "torus word length",
                count: len.to_string(),
                cap: MAX_STABILITY_CROSSINGS as u128,
            });
        }
        let word: Vec<i64> = (0..k).flat_map(|_| 1..n as i64).collect();
        let braid = ColoredBraid::from_signed(n, &word, 1, Level::Infinite)?;
        polys.push((k, homfly_with(&mut trace, &braid)?));
    }
    // one common power of z clears every δ, so the renormalization is the
    // same monomial for the whole list
    let clear = polys.iter().map(|(_, p)| delta_degree(p)).max().unwrap_or(0);
    let mut entries = Vec::new();
    for (k, homfly) in polys {
        let normalized = normalize_aq(&specialize(&homfly, clear)?);
        entries.push(StabilityEntry {
            k,
            homfly,
            normalized,
        });
    }
    let agreements: Vec<usize> = entries
        .windows(2)
        .map(|w| agreement(&w[0].normalized, &w[1].normalized))
        .collect();
    let nondecreasing = agreements.windows(2).all(|w| w[0] <= w[1]);
    Ok(StabilityReport {
        n,
        entries,
        agreements,
        nondecreasing,
    })
}
