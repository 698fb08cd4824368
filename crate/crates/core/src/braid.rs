//! Unicolored braid words, eventually periodic infinite braids, and the
//! text format shared by the library and the CLI.
//!
//! ```text
//! # comments start with '#'
//! n=3 m=2 N=inf
//! tail=1 2
//! 1 2 -1
//! ```
//!
//! The header line is required. `tail=` (and, for bi-infinite braids,
//! `back_prefix=` / `back_tail=`) are optional; the remaining lines hold
//! whitespace-separated signed generator indices. Positions in a word are
//! 1-based throughout the crate.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::GradingShift;

/// The level `N` of an `sl_N` theory, or `∞` for the HOMFLY-PT limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Level {
    Finite(u32),
    Infinite,
}

impl Level {
    pub fn finite(self) -> Option<u32> {
        match self {
            Level::Finite(n) => Some(n),
            Level::Infinite => None,
        }
    }

    /// True when a web edge labelled `label` is not the zero web.
    pub fn admits(self, label: u32) -> bool {
        match self {
            Level::Finite(n) => label <= n,
            Level::Infinite => true,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(n) => write!(f, "{n}"),
            Level::Infinite => f.write_str("inf"),
        }
    }
}

/// One crossing `σ_gen^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, positive: true }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, positive: false }
    }

    pub fn from_signed(x: i64) -> Self {
        Letter {
            gen: x.unsigned_abs() as usize,
            positive: x > 0,
        }
    }

    pub fn signed(self) -> i64 {
        if self.positive {
            self.gen as i64
        } else {
            -(self.gen as i64)
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            positive: !self.positive,
            ..self
        }
    }
}

pub fn word_from_signed(xs: &[i64]) -> Vec<Letter> {
    xs.iter().map(|&x| Letter::from_signed(x)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Warning {
    /// `m = N`: accepted, but the unicolored complexes then collapse to a
    /// single term.
    ColorEqualsLevel,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::ColorEqualsLevel => {
                f.write_str("warning: m = N; every crossing complex has a single term")
            }
        }
    }
}

fn check_color(m: u32, level: Level) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidBraid("color m must be at least 1".into()));
    }
    if let Level::Finite(n) = level {
        if n == 0 {
            return Err(Error::InvalidBraid("level N must be at least 1".into()));
        }
        if m > n {
            return Err(Error::ColorExceedsLevel { m, level: n });
        }
    }
    Ok(())
}

fn check_word(n: usize, word: &[Letter]) -> Result<()> {
    for (i, l) in word.iter().enumerate() {
        if l.gen == 0 || l.gen >= n {
            return Err(Error::InvalidBraid(format!(
                "generator {} at position {} is outside 1..={}",
                l.gen,
                i + 1,
                n.saturating_sub(1)
            )));
        }
    }
    Ok(())
}

/// A finite braid on `n` strands, every strand colored `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredBraid {
    n: usize,
    word: Vec<Letter>,
    m: u32,
    level: Level,
}

impl ColoredBraid {
    pub fn new(n: usize, word: Vec<Letter>, m: u32, level: Level) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidBraid("strand count must be at least 1".into()));
        }
        check_color(m, level)?;
        check_word(n, &word)?;
        Ok(ColoredBraid { n, word, m, level })
    }

    pub fn from_signed(n: usize, word: &[i64], m: u32, level: Level) -> Result<Self> {
        Self::new(n, word_from_signed(word), m, level)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.word.iter().all(|l| l.positive)
    }

    /// Errors with the first negative position if the word is not positive.
    pub fn require_positive(&self) -> Result<()> {
        match self.word.iter().position(|l| !l.positive) {
            Some(i) => Err(Error::NegativeCrossing { position: i + 1 }),
            None => Ok(()),
        }
    }

    pub fn writhe(&self) -> i64 {
        self.word
            .iter()
            .map(|l| if l.positive { 1 } else { -1 })
            .sum()
    }

    pub fn signed_word(&self) -> Vec<i64> {
        self.word.iter().map(|l| l.signed()).collect()
    }

    /// Same strands and colors, different word.
    pub fn with_word(&self, word: Vec<Letter>) -> Result<Self> {
        Self::new(self.n, word, self.m, self.level)
    }

    pub fn with_coloring(&self, m: u32, level: Level) -> Result<Self> {
        Self::new(self.n, self.word.clone(), m, level)
    }

    pub fn concat(&self, other: &ColoredBraid) -> Result<Self> {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        self.with_word(word)
    }

    pub fn warnings(&self) -> Vec<Warning> {
        match self.level {
            Level::Finite(n) if n == self.m => vec![Warning::ColorEqualsLevel],
            _ => vec![],
        }
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[Letter]) -> fmt::Result {
    for (i, l) in w.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{}", l.signed())?;
    }
    Ok(())
}

/// Serializes to the braid file format.
impl fmt::Display for ColoredBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} m={} N={}", self.n, self.m, self.level)?;
        write_word(f, &self.word)?;
        writeln!(f)
    }
}

/// An eventually periodic braid: `prefix` followed by `tail` repeated
/// forever. A bi-infinite braid carries a second pair for the backward
/// direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfiniteBraidSpec {
    n: usize,
    m: u32,
    level: Level,
    prefix: Vec<Letter>,
    tail: Vec<Letter>,
    backward: Option<(Vec<Letter>, Vec<Letter>)>,
}

impl InfiniteBraidSpec {
    pub fn new(
        n: usize,
        m: u32,
        level: Level,
        prefix: Vec<Letter>,
        tail: Vec<Letter>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidBraid(
                "an infinite braid needs at least 2 strands".into(),
            ));
        }
        check_color(m, level)?;
        check_word(n, &prefix)?;
        check_tail(n, &tail)?;
        Ok(InfiniteBraidSpec {
            n,
            m,
            level,
            prefix,
            tail,
            backward: None,
        })
    }

    pub fn from_signed(
        n: usize,
        m: u32,
        level: Level,
        prefix: &[i64],
        tail: &[i64],
    ) -> Result<Self> {
        Self::new(n, m, level, word_from_signed(prefix), word_from_signed(tail))
    }

    pub fn with_backward(mut self, prefix: Vec<Letter>, tail: Vec<Letter>) -> Result<Self> {
        check_word(self.n, &prefix)?;
        check_tail(self.n, &tail)?;
        self.backward = Some((prefix, tail));
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn tail(&self) -> &[Letter] {
        &self.tail
    }

    pub fn backward(&self) -> Option<(&[Letter], &[Letter])> {
        self.backward
            .as_ref()
            .map(|(p, t)| (p.as_slice(), t.as_slice()))
    }

    pub fn is_bi_infinite(&self) -> bool {
        self.backward.is_some()
    }

    pub fn is_positive(&self) -> bool {
        let back_ok = self
            .backward
            .as_ref()
            .map_or(true, |(p, _)| p.iter().all(|l| l.positive));
        self.prefix.iter().all(|l| l.positive) && back_ok
    }

    /// The `ℓ`-th partial braid: the first `ℓ` crossings of the forward word.
    pub fn partial_braid(&self, ell: usize) -> ColoredBraid {
        let word: Vec<Letter> = self
            .prefix
            .iter()
            .chain(self.tail.iter().cycle())
            .take(ell)
            .copied()
            .collect();
        ColoredBraid {
            n: self.n,
            word,
            m: self.m,
            level: self.level,
        }
    }

    fn infinite_gens(&self) -> BTreeSet<usize> {
        let mut g: BTreeSet<usize> = self.tail.iter().map(|l| l.gen).collect();
        if let Some((_, t)) = &self.backward {
            g.extend(t.iter().map(|l| l.gen));
        }
        g
    }

    /// Every generator occurs infinitely often. For a bi-infinite braid both
    /// directions must be complete.
    pub fn is_complete(&self) -> bool {
        let all: BTreeSet<usize> = (1..self.n).collect();
        let fwd: BTreeSet<usize> = self.tail.iter().map(|l| l.gen).collect();
        let back_ok = self
            .backward
            .as_ref()
            .map_or(true, |(_, t)| t.iter().map(|l| l.gen).collect::<BTreeSet<_>>() == all);
        fwd == all && back_ok
    }

    /// `(γ, γᶜ)`: generators occurring infinitely often, and the complement
    /// inside `{0, …, n}`.
    pub fn gamma_sets(&self) -> (BTreeSet<usize>, BTreeSet<usize>) {
        let gamma = self.infinite_gens();
        let comp = (0..=self.n).filter(|i| !gamma.contains(i)).collect();
        (gamma, comp)
    }

    pub fn decompose_noncomplete(&self) -> Result<StructureReport> {
        if !self.is_positive() {
            return Err(Error::NotPositive);
        }
        let (_, comp) = self.gamma_sets();
        let r = self
            .prefix
            .iter()
            .enumerate()
            .filter(|(_, l)| comp.contains(&l.gen))
            .map(|(i, _)| i + 1)
            .last()
            .unwrap_or(0);
        let bounds: Vec<usize> = comp.into_iter().collect();
        let blocks = bounds
            .windows(2)
            .map(|w| w[1] - w[0])
            .filter(|&b| b > 0)
            .collect();
        Ok(StructureReport { r, blocks })
    }

    /// `(tq)^{m·a}` for `a` negative crossings in the prefix.
    pub fn negative_shift(&self) -> Result<GradingShift> {
        if !self.is_complete() {
            return Err(Error::NotComplete);
        }
        let a = self.prefix.iter().filter(|l| !l.positive).count() as i64;
        let e = i32::try_from(a * self.m as i64).map_err(|_| Error::ExponentOverflow)?;
        Ok(GradingShift::tq(e))
    }
}

fn check_tail(n: usize, tail: &[Letter]) -> Result<()> {
    check_word(n, tail)?;
    if tail.is_empty() {
        return Err(Error::InvalidBraid("tail must be nonempty".into()));
    }
    if tail.iter().any(|l| !l.positive) {
        return Err(Error::InvalidBraid("tail must be positive".into()));
    }
    Ok(())
}

impl fmt::Display for InfiniteBraidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} m={} N={}", self.n, self.m, self.level)?;
        f.write_str("tail=")?;
        write_word(f, &self.tail)?;
        writeln!(f)?;
        if let Some((p, t)) = &self.backward {
            f.write_str("back_prefix=")?;
            write_word(f, p)?;
            writeln!(f)?;
            f.write_str("back_tail=")?;
            write_word(f, t)?;
            writeln!(f)?;
        }
        write_word(f, &self.prefix)?;
        writeln!(f)
    }
}

/// Block structure of a positive, possibly non-complete infinite braid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// Last prefix position holding a finitely occurring generator, or 0.
    pub r: usize,
    /// Widths of the projector blocks, left to right.
    pub blocks: Vec<usize>,
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.blocks.iter().map(|b| format!("P_{b}")).collect();
        write!(f, "{} ⊗ C(B_{})", ps.join(" ⊔ "), self.r)
    }
}

/// A parsed braid file: header, optional tails, and the body word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidFile {
    pub n: usize,
    pub m: u32,
    pub level: Level,
    pub body: Vec<Letter>,
    pub tail: Option<Vec<Letter>>,
    pub back_prefix: Option<Vec<Letter>>,
    pub back_tail: Option<Vec<Letter>>,
}

impl BraidFile {
    pub fn braid(&self) -> Result<ColoredBraid> {
        ColoredBraid::new(self.n, self.body.clone(), self.m, self.level)
    }

    pub fn spec(&self) -> Result<InfiniteBraidSpec> {
        let tail = self
            .tail
            .clone()
            .ok_or_else(|| Error::InvalidBraid("missing tail= line".into()))?;
        let spec = InfiniteBraidSpec::new(self.n, self.m, self.level, self.body.clone(), tail)?;
        match (&self.back_prefix, &self.back_tail) {
            (None, None) => Ok(spec),
            (p, Some(t)) => spec.with_backward(p.clone().unwrap_or_default(), t.clone()),
            (Some(_), None) => Err(Error::InvalidBraid("back_prefix= without back_tail=".into())),
        }
    }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Splits `s` into whitespace-separated tokens with 1-based columns.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out.into_iter()
        .map(|(b, t)| (s[..b].chars().count() + 1, t))
        .collect()
}

fn parse_letters(n: usize, line: usize, base_col: usize, s: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for (col, tok) in tokens(s) {
        let col = base_col + col - 1;
        let x: i64 = tok
            .parse()
            .map_err(|_| syntax(line, col, format!("expected a signed integer, found '{tok}'")))?;
        if x == 0 || x.unsigned_abs() as usize >= n {
            return Err(Error::GeneratorOutOfRange {
                index: x,
                max: n.saturating_sub(1),
                line,
                col,
            });
        }
        out.push(Letter::from_signed(x));
    }
    Ok(out)
}

pub fn parse_braid_file(text: &str) -> Result<BraidFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hl, header) = lines
        .next()
        .ok_or_else(|| syntax(1, 1, "missing header line 'n=<int> m=<int> N=<int|inf>'"))?;
    let (mut n, mut m, mut level) = (None, None, None);
    for (col, tok) in tokens(header) {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| syntax(hl, col, format!("expected key=value, found '{tok}'")))?;
        let vcol = col + key.chars().count() + 1;
        let bad = || syntax(hl, vcol, format!("bad value '{val}' for {key}"));
        match key {
            "n" => n = Some(val.parse::<usize>().map_err(|_| bad())?),
            "m" => m = Some(val.parse::<u32>().map_err(|_| bad())?),
            "N" => {
                level = Some(if val == "inf" || val == "∞" {
                    Level::Infinite
                } else {
                    Level::Finite(val.parse::<u32>().map_err(|_| bad())?)
                })
            }
            _ => return Err(syntax(hl, col, format!("unknown header key '{key}'"))),
        }
    }
    let n = n.ok_or_else(|| syntax(hl, 1, "header is missing n="))?;
    let m = m.ok_or_else(|| syntax(hl, 1, "header is missing m="))?;
    let level = level.ok_or_else(|| syntax(hl, 1, "header is missing N="))?;
    if n == 0 {
        return Err(syntax(hl, 1, "n must be at least 1"));
    }
    check_color(m, level)?;

    let mut file = BraidFile {
        n,
        m,
        level,
        body: Vec::new(),
        tail: None,
        back_prefix: None,
        back_tail: None,
    };
    for (ln, line) in lines {
        let trimmed = line.trim_start();
        let indent = line.chars().count() - trimmed.chars().count();
        let keyed = ["tail=", "back_prefix=", "back_tail="]
            .into_iter()
            .find(|k| trimmed.starts_with(k));
        match keyed {
            Some(key) => {
                let rest = &trimmed[key.len()..];
                let base = indent + key.len() + 1;
                let word = parse_letters(n, ln, base, rest)?;
                let slot = match key {
                    "tail=" => &mut file.tail,
                    "back_prefix=" => &mut file.back_prefix,
                    _ => &mut file.back_tail,
                };
                if slot.is_some() {
                    return Err(syntax(ln, indent + 1, format!("duplicate {key} line")));
                }
                *slot = Some(word);
            }
            None => file.body.extend(parse_letters(n, ln, 1, line)?),
        }
    }
    Ok(file)
}

/// Parses a finite braid. Files with a `tail=` line describe infinite
/// braids and are rejected here; see [`parse_spec`].
pub fn parse_braid(text: &str) -> Result<ColoredBraid> {
    let f = parse_braid_file(text)?;
    if f.tail.is_some() {
        return Err(Error::InvalidBraid(
            "file describes an infinite braid (has tail=)".into(),
        ));
    }
    f.braid()
}

pub fn parse_spec(text: &str) -> Result<InfiniteBraidSpec> {
    parse_braid_file(text)?.spec()
}
