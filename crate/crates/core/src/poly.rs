//! Sparse Laurent polynomials in the homological variable `t`, the quantum
//! variable `q` and the Hochschild variable `a`, with exact `i64`
//! coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Exps`], whose derived ordering
//! is lexicographic in `(t, a, q)`. That ordering is also the serialization
//! order, so printing is deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent triple of a monomial. Field order fixes the term ordering.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Exps {
    pub t: i32,
    pub a: i32,
    pub q: i32,
}

impl Exps {
    pub const ZERO: Exps = Exps { t: 0, a: 0, q: 0 };

    pub fn new(t: i32, q: i32, a: i32) -> Self {
        Exps { t, a, q }
    }

    pub fn checked_add(self, o: Exps) -> Result<Exps> {
        Ok(Exps {
            t: self.t.checked_add(o.t).ok_or(Error::ExponentOverflow)?,
            a: self.a.checked_add(o.a).ok_or(Error::ExponentOverflow)?,
            q: self.q.checked_add(o.q).ok_or(Error::ExponentOverflow)?,
        })
    }
}

/// A monomial grading shift `t^t q^q a^a`. Composition adds exponents.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct GradingShift {
    pub t: i32,
    pub q: i32,
    pub a: i32,
}

impl GradingShift {
    pub const IDENTITY: GradingShift = GradingShift { t: 0, q: 0, a: 0 };

    pub fn new(t: i32, q: i32, a: i32) -> Self {
        GradingShift { t, q, a }
    }

    /// `(tq)^e`
    pub fn tq(e: i32) -> Self {
        GradingShift { t: e, q: e, a: 0 }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn compose(self, o: GradingShift) -> GradingShift {
        self * o
    }

    pub fn exps(self) -> Exps {
        Exps::new(self.t, self.q, self.a)
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::monomial(1, self.exps())
    }
}

impl Mul for GradingShift {
    type Output = GradingShift;
    fn mul(self, o: GradingShift) -> GradingShift {
        let e = self
            .exps()
            .checked_add(o.exps())
            .expect("exponent overflow");
        GradingShift::new(e.t, e.q, e.a)
    }
}

impl fmt::Display for GradingShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_poly(), f)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exps, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, Exps::ZERO)
    }

    pub fn monomial(c: i64, e: Exps) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `c * q^j`
    pub fn q_pow(c: i64, j: i32) -> Self {
        Self::monomial(c, Exps::new(0, j, 0))
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, i64)>>(it: I) -> Result<Self> {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exps) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// Terms in serialization order.
    pub fn terms(&self) -> impl Iterator<Item = (Exps, i64)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    pub fn add_term(&mut self, e: Exps, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::CoefficientOverflow)?;
        if *slot == 0 {
            self.terms.remove(&e);
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &LaurentPoly) -> Result<LaurentPoly> {
        let mut out = self.clone();
        for (e, c) in o.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, o: &LaurentPoly) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                let c = c1.checked_mul(c2).ok_or(Error::CoefficientOverflow)?;
                out.add_term(e1.checked_add(e2)?, c)?;
            }
        }
        Ok(out)
    }

    pub fn checked_shift(&self, s: GradingShift) -> Result<LaurentPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            terms.insert(e.checked_add(s.exps())?, c);
        }
        Ok(LaurentPoly { terms })
    }

    /// Multiply by a monomial shift. Panics on exponent overflow.
    pub fn shifted(&self, s: GradingShift) -> LaurentPoly {
        self.checked_shift(s).expect("exponent overflow")
    }

    pub fn scale(&self, k: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(e, c.checked_mul(k).expect("coefficient overflow"))
                .expect("coefficient overflow");
        }
        out
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitute `t = s` for `s = ±1`.
    pub fn at_t_sign(&self, s: i64) -> LaurentPoly {
        assert!(s == 1 || s == -1);
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            let sign = if s == -1 && e.t.rem_euclid(2) == 1 { -1 } else { 1 };
            out.add_term(Exps { t: 0, ..e }, sign * c)
                .expect("coefficient overflow");
        }
        out
    }

    /// Substitute `q = 1`.
    pub fn at_q_one(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(Exps { q: 0, ..e }, c)
                .expect("coefficient overflow");
        }
        out
    }

    /// `q -> q^{-1}`
    pub fn bar_q(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms()
                .map(|(e, c)| (Exps { q: -e.q, ..e }, c))
                .collect(),
        }
    }

    /// Constant term value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Exps::ZERO).copied(),
            _ => None,
        }
    }

    pub fn min_q(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.q).min()
    }

    pub fn max_q(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.q).max()
    }

    pub fn max_t(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.t).max()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        self.checked_add(o).expect("coefficient overflow")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: LaurentPoly) -> LaurentPoly {
        &self + &o
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, o: &LaurentPoly) {
        for (e, c) in o.terms() {
            self.add_term(e, c).expect("coefficient overflow");
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        &self - &o
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on exponent or coefficient overflow; use `checked_mul` to
    /// recover instead.
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        &self * &o
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, first: &mut bool, name: char, e: i32) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (idx, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut first = true;
            if mag != 1 || e == Exps::ZERO {
                write!(f, "{mag}")?;
                first = false;
            }
            write_var(f, &mut first, 't', e.t)?;
            write_var(f, &mut first, 'q', e.q)?;
            write_var(f, &mut first, 'a', e.a)?;
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses the text form written by `Display`: a signed sum of terms
/// `c*t^i*q^j*a^k`, factors in any order, `*` optional.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |col: usize, msg: &str| Error::Syntax {
            line: 1,
            col: col + 1,
            msg: msg.to_string(),
        };
        let b = s.as_bytes();
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < b.len() && b[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let read_int = |i: &mut usize| -> Option<i64> {
            let start = *i;
            if *i < b.len() && (b[*i] == b'-' || b[*i] == b'+') {
                *i += 1;
            }
            let digits = *i;
            while *i < b.len() && b[*i].is_ascii_digit() {
                *i += 1;
            }
            if *i == digits {
                *i = start;
                return None;
            }
            s[start..*i].parse().ok()
        };

        let mut out = LaurentPoly::zero();
        skip_ws(&mut i);
        if i == b.len() {
            return Err(err(0, "empty polynomial"));
        }
        let mut first = true;
        loop {
            skip_ws(&mut i);
            let mut sign = 1i64;
            if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
                if b[i] == b'-' {
                    sign = -1;
                }
                i += 1;
                skip_ws(&mut i);
            } else if !first {
                return Err(err(i, "expected '+' or '-'"));
            }
            first = false;

            let mut coeff: i64 = 1;
            let mut e = Exps::ZERO;
            let mut factors = 0;
            loop {
                skip_ws(&mut i);
                if i >= b.len() {
                    break;
                }
                match b[i] {
                    b'0'..=b'9' => {
                        let start = i;
                        let c = read_int(&mut i).ok_or_else(|| err(start, "bad coefficient"))?;
                        coeff = coeff.checked_mul(c).ok_or(Error::CoefficientOverflow)?;
                    }
                    v @ (b't' | b'q' | b'a') => {
                        i += 1;
                        let mut k: i64 = 1;
                        if i < b.len() && b[i] == b'^' {
                            i += 1;
                            let start = i;
                            k = read_int(&mut i).ok_or_else(|| err(start, "bad exponent"))?;
                        }
                        let k = i32::try_from(k).map_err(|_| Error::ExponentOverflow)?;
                        let add = match v {
                            b't' => Exps::new(k, 0, 0),
                            b'q' => Exps::new(0, k, 0),
                            _ => Exps::new(0, 0, k),
                        };
                        e = e.checked_add(add)?;
                    }
                    _ => return Err(err(i, "unexpected character")),
                }
                factors += 1;
                skip_ws(&mut i);
                if i < b.len() && b[i] == b'*' {
                    i += 1;
                    continue;
                }
                if i < b.len() && matches!(b[i], b't' | b'q' | b'a' | b'0'..=b'9') {
                    continue;
                }
                break;
            }
            if factors == 0 {
                return Err(err(i, "missing term"));
            }
            out.add_term(e, sign * coeff)?;
            skip_ws(&mut i);
            if i >= b.len() {
                break;
            }
        }
        Ok(out)
    }
}
