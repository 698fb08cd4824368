//! Evaluation of closed unicolored webs in annular ladder form.
//!
//! A closed web is `n` vertical columns carrying base labels plus a cyclic
//! sequence of rungs, each moving some amount of label between neighbouring
//! columns. Rungs are first simplified with local relations (zero rungs,
//! merges, digons, free circles). Whatever remains is evaluated exactly as
//! a quantum trace through skew Howe duality: a rightward rung on columns
//! `(c, c+1)` acts as the divided power `F_c^{(k)}` of `U_q(gl_n)` and a
//! leftward one as `E_c^{(k)}`, on `⋀(C^N ⊗ C^n)` written as `N` tensor
//! factors (particles) of `⋀(C^n)`.
//!
//! Internally all values are balanced (symmetric under `q -> q^-1`);
//! [`eval_closed_web`] reports them shifted to start at `q^0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{ColoredBraid, Level};
use crate::census::crossing_complex;
use crate::error::{Error, Result};
use crate::poly::{GradingShift, LaurentPoly};
use crate::quantum::balanced_binomial;

/// Largest weight space the trace engine will enumerate.
pub const DEFAULT_STATE_CAP: u128 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// Label moves from column `c` to column `c+1`.
    Right,
    /// Label moves from column `c+1` to column `c`.
    Left,
}

impl Direction {
    fn opposite(self) -> Self {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Rung {
    /// Left column of the pair, 0-based.
    pub col: usize,
    pub amount: u32,
    pub dir: Direction,
}

impl Rung {
    pub fn right(col: usize, amount: u32) -> Self {
        Rung {
            col,
            amount,
            dir: Direction::Right,
        }
    }

    pub fn left(col: usize, amount: u32) -> Self {
        Rung {
            col,
            amount,
            dir: Direction::Left,
        }
    }

    fn commutes_with(&self, other: &Rung) -> bool {
        self.col.abs_diff(other.col) >= 2
    }

    fn apply(&self, labels: &mut [i64]) {
        let k = self.amount as i64;
        let (from, to) = match self.dir {
            Direction::Right => (self.col, self.col + 1),
            Direction::Left => (self.col + 1, self.col),
        };
        labels[from] -= k;
        labels[to] += k;
    }
}

/// A closed web: base labels at a horizontal cut, then the rungs in order
/// going up and around the annulus back to the cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedWeb {
    base: Vec<u32>,
    rungs: Vec<Rung>,
}

impl ClosedWeb {
    /// Checks that every label stays nonnegative and that the labels
    /// return to `base` after one turn.
    pub fn new(base: Vec<u32>, rungs: Vec<Rung>) -> Result<Self> {
        let n = base.len();
        let mut labels: Vec<i64> = base.iter().map(|&x| x as i64).collect();
        for (i, r) in rungs.iter().enumerate() {
            if r.col + 1 >= n {
                return Err(Error::InvalidWeb(format!(
                    "rung {} joins columns {} and {} but there are {n}",
                    i + 1,
                    r.col + 1,
                    r.col + 2
                )));
            }
            r.apply(&mut labels);
            if labels.iter().any(|&x| x < 0) {
                return Err(Error::InvalidWeb(format!(
                    "rung {} moves more label than its column carries",
                    i + 1
                )));
            }
        }
        if labels.iter().zip(&base).any(|(&x, &b)| x != b as i64) {
            return Err(Error::InvalidWeb(
                "labels do not close up around the annulus".into(),
            ));
        }
        Ok(ClosedWeb { base, rungs })
    }

    /// `count` concentric circles labeled `label`.
    pub fn circles(count: usize, label: u32) -> Self {
        ClosedWeb {
            base: vec![label; count],
            rungs: Vec::new(),
        }
    }

    /// Closure of a ladder on `n` columns labeled `m`, with one square
    /// (rung right then back left) for each `(col, amount)`.
    pub fn ladder_closure(n: usize, m: u32, squares: &[(usize, u32)]) -> Result<Self> {
        let rungs = squares
            .iter()
            .flat_map(|&(c, k)| [Rung::right(c, k), Rung::left(c, k)])
            .collect();
        ClosedWeb::new(vec![m; n], rungs)
    }

    pub fn n(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    pub fn rungs(&self) -> &[Rung] {
        &self.rungs
    }

    /// Labels just below rung `i` (`i = rungs.len()` gives the base again).
    fn labels_before(&self, i: usize) -> Vec<i64> {
        let mut labels: Vec<i64> = self.base.iter().map(|&x| x as i64).collect();
        for r in &self.rungs[..i] {
            r.apply(&mut labels);
        }
        labels
    }

    /// Largest label carried by any edge, rungs included.
    pub fn max_label(&self) -> u32 {
        let mut labels: Vec<i64> = self.base.iter().map(|&x| x as i64).collect();
        let mut best = labels.iter().copied().max().unwrap_or(0);
        for r in &self.rungs {
            r.apply(&mut labels);
            best = best.max(r.amount as i64);
            best = best.max(labels[r.col]).max(labels[r.col + 1]);
        }
        best as u32
    }

    pub fn is_zero_web(&self, level: Level) -> bool {
        !level.admits(self.max_label())
    }

    /// Moves the cut so that rung `i` comes first.
    fn rotate(&mut self, i: usize) {
        let labels = self.labels_before(i);
        self.base = labels.iter().map(|&x| x as u32).collect();
        self.rungs.rotate_left(i);
    }
}

impl fmt::Display for ClosedWeb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "base=({})", self.base.iter().join(","))?;
        let rungs = self.rungs.iter().format_with(",", |r, g| {
            let arrow = match r.dir {
                Direction::Right => '>',
                Direction::Left => '<',
            };
            g(&format_args!("{}{}{}", r.col + 1, arrow, r.amount))
        });
        write!(f, " rungs=({rungs})")
    }
}

/// Deletes rungs labeled 0.
pub fn normalize_zero_edges(web: &ClosedWeb) -> ClosedWeb {
    ClosedWeb {
        base: web.base.clone(),
        rungs: web.rungs.iter().copied().filter(|r| r.amount > 0).collect(),
    }
}

/// Result of the local-relation pass: a scalar times a smaller web.
struct Reduced {
    factor: LaurentPoly,
    web: ClosedWeb,
}

/// Looks for a partner of rung 0 further along the cycle, passing only
/// rungs it commutes with.
fn partner(web: &ClosedWeb) -> Option<usize> {
    let first = web.rungs[0];
    for (j, r) in web.rungs.iter().enumerate().skip(1) {
        if r.col == first.col {
            return Some(j);
        }
        if !first.commutes_with(r) {
            return None;
        }
    }
    None
}

fn simplify_once(web: &mut ClosedWeb, factor: &mut LaurentPoly) -> bool {
    for i in 0..web.rungs.len() {
        web.rotate(i);
        let Some(j) = partner(web) else { continue };
        let (a, b) = (web.rungs[0], web.rungs[j]);
        if a.dir == b.dir {
            // F^(a) F^(b) = [a+b, a] F^(a+b), likewise for E
            *factor = &*factor * &balanced_binomial(a.amount + b.amount, a.amount as i64);
            web.rungs[0].amount += b.amount;
            web.rungs.remove(j);
            return true;
        }
        let labels = web.labels_before(0);
        let (source, target) = match a.dir {
            Direction::Right => (labels[a.col], labels[a.col + 1]),
            Direction::Left => (labels[a.col + 1], labels[a.col]),
        };
        if b.amount == a.amount && b.dir == a.dir.opposite() && target == 0 {
            // the rung returns into an empty column: a digon
            *factor = &*factor * &balanced_binomial(source as u32, a.amount as i64);
            web.rungs.remove(j);
            web.rungs.remove(0);
            return true;
        }
    }
    false
}

fn reduce(web: &ClosedWeb, n_level: u32) -> Reduced {
    let mut web = normalize_zero_edges(web);
    let mut factor = LaurentPoly::one();
    while !web.rungs.is_empty() && simplify_once(&mut web, &mut factor) {}
    // columns no rung touches are free circles
    for c in 0..web.n() {
        let touched = web.rungs.iter().any(|r| r.col == c || r.col + 1 == c);
        if !touched && web.base[c] > 0 {
            factor = &factor * &balanced_binomial(n_level, web.base[c] as i64);
            web.base[c] = 0;
        }
    }
    Reduced { factor, web }
}

fn finite_level(level: Level) -> Result<u32> {
    level
        .finite()
        .ok_or(Error::InfiniteLevel("closed web evaluation"))
}

/// A basis vector: per particle, the bitmask of columns it occupies.
type State = Vec<u64>;

fn binomial_count(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

fn weight_space(n_level: u32, labels: &[u32]) -> Vec<State> {
    let mut states = vec![vec![0u64; n_level as usize]];
    for (c, &lab) in labels.iter().enumerate() {
        let mut next = Vec::new();
        for s in &states {
            for rows in (0..n_level as usize).combinations(lab as usize) {
                let mut t = s.clone();
                for j in rows {
                    t[j] |= 1 << c;
                }
                next.push(t);
            }
        }
        states = next;
    }
    states
}

/// Applies `F_c^{(k)}` (rightward) or `E_c^{(k)}` (leftward) to a state.
/// Coproducts `Δ(E) = E⊗1 + K⊗E` and `Δ(F) = F⊗K⁻¹ + 1⊗F` over the
/// particles in order; a moving particle picks up `q^{h}` from each
/// stationary particle before it (for `E`) or `q^{-h}` after it (for `F`).
fn apply_rung(rung: &Rung, state: &State, out: &mut BTreeMap<State, BTreeMap<i32, i64>>, coeff: &BTreeMap<i32, i64>) {
    let c = rung.col;
    let (from, to) = match rung.dir {
        Direction::Right => (c, c + 1),
        Direction::Left => (c + 1, c),
    };
    let movable: Vec<usize> = (0..state.len())
        .filter(|&j| state[j] >> from & 1 == 1 && state[j] >> to & 1 == 0)
        .collect();
    let h = |j: usize| (state[j] >> c & 1) as i32 - (state[j] >> (c + 1) & 1) as i32;
    for chosen in movable.iter().copied().combinations(rung.amount as usize) {
        let mut e = 0i32;
        for j in 0..state.len() {
            if chosen.contains(&j) {
                continue;
            }
            let hj = h(j);
            if hj == 0 {
                continue;
            }
            e += match rung.dir {
                Direction::Left => hj * chosen.iter().filter(|&&t| t > j).count() as i32,
                Direction::Right => -hj * chosen.iter().filter(|&&t| t < j).count() as i32,
            };
        }
        let mut t = state.clone();
        for &j in &chosen {
            t[j] &= !(1 << from);
            t[j] |= 1 << to;
        }
        let slot = out.entry(t).or_default();
        for (&d, &v) in coeff {
            *slot.entry(d + e).or_insert(0) += v;
        }
    }
}

/// Exact balanced value of a closed web by quantum trace.
pub fn eval_trace(web: &ClosedWeb, level: Level, cap: u128) -> Result<LaurentPoly> {
    let n_level = finite_level(level)?;
    if web.is_zero_web(level) {
        return Ok(LaurentPoly::zero());
    }
    if n_level > 64 || web.n() > 64 {
        return Err(Error::Irreducible(
            "trace engine supports at most 64 columns and N <= 64".into(),
        ));
    }
    let dim = web
        .base
        .iter()
        .try_fold(1u128, |acc, &l| acc.checked_mul(binomial_count(n_level, l)));
    match dim {
        Some(d) if d <= cap => {}
        _ => {
            return Err(Error::Irreducible(format!(
                "no local relation applies and the weight space exceeds {cap} states"
            )))
        }
    }
    let pivot: Vec<i32> = (1..=n_level as i32).map(|j| n_level as i32 + 1 - 2 * j).collect();
    let basis = weight_space(n_level, &web.base);
    let partial: Vec<BTreeMap<i32, i64>> = basis
        .par_iter()
        .map(|b| {
            let mut vec: BTreeMap<State, BTreeMap<i32, i64>> = BTreeMap::new();
            vec.insert(b.clone(), BTreeMap::from([(0, 1)]));
            for r in &web.rungs {
                let mut next = BTreeMap::new();
                for (s, coeff) in &vec {
                    apply_rung(r, s, &mut next, coeff);
                }
                next.retain(|_, cf: &mut BTreeMap<i32, i64>| {
                    cf.retain(|_, v| *v != 0);
                    !cf.is_empty()
                });
                vec = next;
            }
            let weight: i32 = b
                .iter()
                .zip(&pivot)
                .map(|(row, p)| p * row.count_ones() as i32)
                .sum();
            vec.remove(b)
                .map(|cf| cf.into_iter().map(|(d, v)| (d + weight, v)).collect())
                .unwrap_or_default()
        })
        .collect();
    let mut total = LaurentPoly::zero();
    for cf in partial {
        for (d, v) in cf {
            total += &LaurentPoly::q_pow(v, d);
        }
    }
    Ok(total)
}

/// Balanced value using local relations only; `Irreducible` when rungs
/// remain after they are exhausted.
pub fn eval_rules_only(web: &ClosedWeb, level: Level) -> Result<LaurentPoly> {
    let n_level = finite_level(level)?;
    if web.is_zero_web(level) {
        return Ok(LaurentPoly::zero());
    }
    let red = reduce(web, n_level);
    if red.web.rungs.is_empty() {
        Ok(red.factor)
    } else {
        Err(Error::Irreducible(format!("stuck at {}", red.web)))
    }
}

/// Balanced value: local relations, then the trace engine on the rest.
pub fn eval_closed_web_balanced(web: &ClosedWeb, level: Level) -> Result<LaurentPoly> {
    eval_closed_web_balanced_capped(web, level, DEFAULT_STATE_CAP)
}

pub fn eval_closed_web_balanced_capped(
    web: &ClosedWeb,
    level: Level,
    cap: u128,
) -> Result<LaurentPoly> {
    let n_level = finite_level(level)?;
    if web.is_zero_web(level) {
        return Ok(LaurentPoly::zero());
    }
    let red = reduce(web, n_level);
    if red.web.rungs.is_empty() {
        return Ok(red.factor);
    }
    Ok(&red.factor * &eval_trace(&red.web, level, cap)?)
}

/// Value normalized to lowest `q`-degree 0, so one 1-labeled circle at
/// `N = 2` gives `1 + q^2`.
pub fn eval_closed_web(web: &ClosedWeb, level: Level) -> Result<LaurentPoly> {
    let v = eval_closed_web_balanced(web, level)?;
    Ok(match v.min_q() {
        Some(lo) => v.shifted(GradingShift::new(0, -lo, 0)),
        None => v,
    })
}

/// Closure of the resolution of `braid` that gives crossing `p` the rung
/// `rungs[p]`.
pub fn resolution_web(braid: &ColoredBraid, rungs: &[u32]) -> Result<ClosedWeb> {
    if rungs.len() != braid.len() {
        return Err(Error::InvalidWeb(format!(
            "{} rung labels for {} crossings",
            rungs.len(),
            braid.len()
        )));
    }
    let squares: Vec<(usize, u32)> = braid
        .word()
        .iter()
        .zip(rungs)
        .filter(|(_, &r)| r > 0)
        .map(|(l, &r)| (l.gen - 1, r))
        .collect();
    ClosedWeb::ladder_closure(braid.n(), braid.m(), &squares)
}

/// `Σ` over resolutions of (grading shift) · (balanced closed value), for
/// any unicolored braid at finite level.
pub fn colored_bracket(braid: &ColoredBraid, cap: u128) -> Result<LaurentPoly> {
    let level = braid.level();
    finite_level(level)?;
    let terms: Vec<_> = braid
        .word()
        .iter()
        .map(|l| crossing_complex(braid.m(), braid.m(), l.positive, level))
        .collect();
    let count = terms
        .iter()
        .try_fold(1u128, |acc, t| acc.checked_mul(t.len() as u128));
    let count = match count {
        Some(c) if c <= cap => c,
        other => {
            return Err(Error::CapExceeded {
                what: "resolution count",
                count: other.map_or("more than 2^128".into(), |c| c.to_string()),
                cap,
            })
        }
    };
    let parts: Vec<Result<LaurentPoly>> = (0..count)
        .into_par_iter()
        .map(|mut idx| {
            let mut rungs = Vec::with_capacity(terms.len());
            let mut shift = GradingShift::IDENTITY;
            for t in &terms {
                let k = t.len() as u128;
                let term = t[(idx % k) as usize];
                idx /= k;
                rungs.push(term.rung);
                shift = shift * term.shift;
            }
            let web = resolution_web(braid, &rungs)?;
            Ok(eval_closed_web_balanced(&web, level)?.shifted(shift))
        })
        .collect();
    let mut total = LaurentPoly::zero();
    for p in parts {
        total += &p?;
    }
    Ok(total)
}

/// The 1-colored `sl_2` bracket of a braid closure.
pub fn sl2_bracket(braid: &ColoredBraid) -> Result<LaurentPoly> {
    if braid.m() != 1 || braid.level() != Level::Finite(2) {
        return Err(Error::Precondition(format!(
            "the sl2 bracket needs m=1 and N=2, got m={} N={}",
            braid.m(),
            braid.level()
        )));
    }
    colored_bracket(braid, crate::census::DEFAULT_RESOLUTION_CAP)
}

/// A web given on the command line: `n=3 m=1 N=2 rungs=(1:1,2>1,2<1)`.
/// `c:k` is a square on columns `c, c+1` (1-based); `c>k` and `c<k` are
/// single rightward and leftward rungs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebSpec {
    pub web: ClosedWeb,
    pub level: Level,
}

impl FromStr for WebSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syntax = |col: usize, msg: String| Error::Syntax { line: 1, col, msg };
        let mut n = None;
        let mut m = None;
        let mut level = None;
        let mut rungs = None;
        let mut rest = s.trim_start();
        while !rest.is_empty() {
            let col = s.len() - rest.len() + 1;
            let Some((key, after)) = rest.split_once('=') else {
                return Err(syntax(col, format!("expected key=value, found {rest:?}")));
            };
            let (value, tail) = if key == "rungs" {
                let close = after
                    .find(')')
                    .filter(|_| after.starts_with('('))
                    .ok_or_else(|| syntax(col, "rungs must be written (..)".into()))?;
                (&after[1..close], &after[close + 1..])
            } else {
                after.split_at(after.find(char::is_whitespace).unwrap_or(after.len()))
            };
            let int = |v: &str| {
                v.parse::<u32>()
                    .map_err(|_| syntax(col, format!("bad value {v:?} for {key}")))
            };
            match key {
                "n" => n = Some(int(value)? as usize),
                "m" => m = Some(int(value)?),
                "N" if value == "inf" => level = Some(Level::Infinite),
                "N" => level = Some(Level::Finite(int(value)?)),
                "rungs" => {
                    let mut out = Vec::new();
                    for item in value.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                        let Some(pos) = item.find([':', '>', '<']) else {
                            return Err(syntax(col, format!("bad rung {item:?}")));
                        };
                        let c = int(&item[..pos])? as usize;
                        let k = int(&item[pos + 1..])?;
                        if c == 0 {
                            return Err(syntax(col, "rung columns start at 1".into()));
                        }
                        match &item[pos..pos + 1] {
                            ":" => out.extend([Rung::right(c - 1, k), Rung::left(c - 1, k)]),
                            ">" => out.push(Rung::right(c - 1, k)),
                            _ => out.push(Rung::left(c - 1, k)),
                        }
                    }
                    rungs = Some(out);
                }
                _ => return Err(syntax(col, format!("unknown key {key:?}"))),
            }
            rest = tail.trim_start();
        }
        let missing = |k: &str| syntax(1, format!("missing {k}="));
        let n = n.ok_or_else(|| missing("n"))?;
        let m = m.ok_or_else(|| missing("m"))?;
        let level = level.ok_or_else(|| missing("N"))?;
        let web = ClosedWeb::new(vec![m; n], rungs.unwrap_or_default())?;
        Ok(WebSpec { web, level })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{quantum_binomial, quantum_int};

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn lvl(n: u32) -> Level {
        Level::Finite(n)
    }

    #[test]
    fn circles_and_theta() {
        assert_eq!(eval_closed_web(&ClosedWeb::circles(1, 1), lvl(2)).unwrap(), p("1 + q^2"));
        let theta = ClosedWeb::ladder_closure(2, 1, &[(0, 1)]).unwrap();
        assert_eq!(eval_closed_web(&theta, lvl(2)).unwrap(), p("1 + q^2"));
        assert_eq!(eval_trace(&theta, lvl(2), 1 << 10).unwrap(), p("q^-1 + q"));
        for n in 1..6 {
            for k in 0..=n {
                let w = ClosedWeb::circles(1, k);
                assert_eq!(
                    eval_trace(&w, lvl(n), 1 << 10).unwrap(),
                    balanced_binomial(n, k as i64)
                );
            }
        }
    }

    #[test]
    fn barbell_chains() {
        for n in 2..6 {
            for b in 1..7 {
                let w = ClosedWeb::ladder_closure(2, 1, &vec![(0, 1); b]).unwrap();
                let want = &quantum_int(2).pow(b as u32) * &quantum_binomial(n, 2);
                assert_eq!(eval_closed_web(&w, lvl(n)).unwrap(), want);
                let bal = eval_closed_web_balanced(&w, lvl(n)).unwrap();
                assert_eq!(eval_trace(&w, lvl(n), 1 << 12).unwrap(), bal);
            }
        }
    }

    #[test]
    fn zero_webs() {
        let w = ClosedWeb::ladder_closure(2, 2, &[(0, 1)]).unwrap();
        assert!(eval_closed_web(&w, lvl(2)).unwrap().is_zero());
        assert!(!eval_closed_web(&w, lvl(3)).unwrap().is_zero());
    }

    #[test]
    fn rules_get_stuck_where_the_trace_does_not() {
        // an H-shaped pair of rungs on three strands
        let w = ClosedWeb::ladder_closure(3, 1, &[(0, 1), (1, 1), (0, 1), (1, 1)]).unwrap();
        assert!(matches!(eval_rules_only(&w, lvl(3)), Err(Error::Irreducible(_))));
        let v = eval_closed_web_balanced(&w, lvl(3)).unwrap();
        assert_eq!(v, v.bar_q());
        assert_eq!(eval_trace(&w, lvl(3), 1 << 12).unwrap(), v);
    }

    #[test]
    fn cap_reports_irreducible() {
        let w = ClosedWeb::ladder_closure(3, 1, &[(0, 1), (1, 1), (0, 1), (1, 1)]).unwrap();
        assert!(matches!(
            eval_closed_web_balanced_capped(&w, lvl(3), 4),
            Err(Error::Irreducible(_))
        ));
    }

    #[test]
    fn invalid_webs() {
        assert!(ClosedWeb::new(vec![1, 1], vec![Rung::right(0, 1)]).is_err());
        assert!(ClosedWeb::new(vec![1, 1], vec![Rung::right(0, 2), Rung::left(0, 2)]).is_err());
        assert!(ClosedWeb::new(vec![1, 1], vec![Rung::right(1, 1)]).is_err());
    }

    #[test]
    fn zero_rungs_drop() {
        let w = ClosedWeb::ladder_closure(2, 1, &[(0, 0)]).unwrap();
        assert!(normalize_zero_edges(&w).rungs().is_empty());
        assert_eq!(eval_closed_web(&w, lvl(2)).unwrap(), p("1 + 2*q^2 + q^4"));
    }

    #[test]
    fn bracket_basics() {
        let unknot = ColoredBraid::from_signed(1, &[], 1, lvl(2)).unwrap();
        assert_eq!(sl2_bracket(&unknot).unwrap(), p("q^-1 + q"));
        let two = ColoredBraid::from_signed(2, &[], 1, lvl(2)).unwrap();
        assert_eq!(sl2_bracket(&two).unwrap(), p("q^-1 + q").pow(2));
        let trefoil = ColoredBraid::from_signed(2, &[1, 1, 1], 1, lvl(2)).unwrap();
        let jones = p("q + q^3 + q^5 - q^9");
        assert_eq!(
            sl2_bracket(&trefoil).unwrap().at_t_sign(-1),
            jones.shifted(GradingShift::new(0, -3, 0))
        );
    }

    #[test]
    fn parse_spec() {
        let s: WebSpec = "n=2 m=1 N=2 rungs=(1:1)".parse().unwrap();
        assert_eq!(s.web, ClosedWeb::ladder_closure(2, 1, &[(0, 1)]).unwrap());
        let s: WebSpec = "n=3 m=1 N=3 rungs=(1>1, 2>1, 2<1, 1<1)".parse().unwrap();
        assert_eq!(s.web.rungs().len(), 4);
        assert!("n=2 m=1 rungs=(1:1)".parse::<WebSpec>().is_err());
        assert!("n=2 m=1 N=2 rungs=(3:1)".parse::<WebSpec>().is_err());
        assert!("n=2 m=1 N=2 rungs=(1>1)".parse::<WebSpec>().is_err());
        let s: WebSpec = "n=1 m=1 N=2".parse().unwrap();
        assert_eq!(s.web, ClosedWeb::circles(1, 1));
    }
}
