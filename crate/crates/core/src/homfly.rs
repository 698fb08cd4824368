//! HOMFLY-PT polynomials of braid closures through the Hecke algebra and
//! its Markov trace.
//!
//! Convention: `a⁻¹·P(L+) − a·P(L−) = z·P(L0)` with the unknot at 1. Closures
//! with several components involve `δ = (a⁻¹ − a)/z`; it is kept as a
//! formal symbol with the rule `δ·z = a⁻¹ − a`, so that no term ever holds
//! both a positive power of `δ` and a positive power of `z`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::braid::ColoredBraid;
use crate::error::{Error, Result};

/// Exponents of `δ`, `z` and `a`, in display order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomflyMonomial {
    pub delta: u32,
    pub z: i32,
    pub a: i32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomflyPoly {
    terms: BTreeMap<HomflyMonomial, i64>,
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k as i64).fold(1, |acc, i| acc * (n as i64 - i) / (i + 1))
}

impl HomflyPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0, 0)
    }

    pub fn monomial(c: i64, delta: u32, z: i32, a: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(HomflyMonomial { delta, z, a }, c);
        p
    }

    pub fn a(e: i32) -> Self {
        Self::monomial(1, 0, 0, e)
    }

    pub fn z(e: i32) -> Self {
        Self::monomial(1, 0, e, 0)
    }

    pub fn delta() -> Self {
        Self::monomial(1, 1, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (HomflyMonomial, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn coeff(&self, delta: u32, z: i32, a: i32) -> i64 {
        self.terms
            .get(&HomflyMonomial { delta, z, a })
            .copied()
            .unwrap_or(0)
    }

    /// Adds `c·δ^d z^e a^f`, rewriting `δz` into `a⁻¹ − a` as needed.
    fn add_term(&mut self, m: HomflyMonomial, c: i64) {
        if c == 0 {
            return;
        }
        let s = m.delta.min(m.z.max(0) as u32);
        if s == 0 {
            let slot = self.terms.entry(m).or_insert(0);
            *slot += c;
            if *slot == 0 {
                self.terms.remove(&m);
            }
            return;
        }
        // δ^s z^s = (a⁻¹ − a)^s = Σ_i C(s,i) (−1)^i a^{2i−s}
        for i in 0..=s {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            self.add_term(
                HomflyMonomial {
                    delta: m.delta - s,
                    z: m.z - s as i32,
                    a: m.a + 2 * i as i32 - s as i32,
                },
                c * sign * binomial(s, i),
            );
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (&m, &c) in &self.terms {
            out.add_term(m, c * k);
        }
        out
    }
}

impl Add for &HomflyPoly {
    type Output = HomflyPoly;
    fn add(self, o: &HomflyPoly) -> HomflyPoly {
        let mut out = self.clone();
        for (&m, &c) in &o.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl Neg for &HomflyPoly {
    type Output = HomflyPoly;
    fn neg(self) -> HomflyPoly {
        self.scale(-1)
    }
}

impl Sub for &HomflyPoly {
    type Output = HomflyPoly;
    fn sub(self, o: &HomflyPoly) -> HomflyPoly {
        self + &(-o)
    }
}

impl Mul for &HomflyPoly {
    type Output = HomflyPoly;
    fn mul(self, o: &HomflyPoly) -> HomflyPoly {
        let mut out = HomflyPoly::zero();
        for (x, &c) in &self.terms {
            for (y, &d) in &o.terms {
                out.add_term(
                    HomflyMonomial {
                        delta: x.delta + y.delta,
                        z: x.z + y.z,
                        a: x.a + y.a,
                    },
                    c * d,
                );
            }
        }
        out
    }
}

fn power(f: &mut fmt::Formatter<'_>, var: &str, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => f.write_str(var),
        _ => write!(f, "{var}^{e}"),
    }
}

/// Terms sorted by `(δ, z, a)`, e.g. `2a^2 - a^4 + a^2z^2`.
impl fmt::Display for HomflyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let bare = m.delta == 0 && m.z == 0 && m.a == 0;
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if c.abs() != 1 || bare {
                write!(f, "{}", c.abs())?;
            }
            power(f, "δ", m.delta as i64)?;
            power(f, "a", m.a as i64)?;
            power(f, "z", m.z as i64)?;
        }
        Ok(())
    }
}

impl Serialize for HomflyPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A permutation in one-line notation, 0-based values.
pub type Perm = Vec<u8>;

fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

/// Element of the Hecke algebra `H_n` in the standard basis `T_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    pub n: usize,
    pub terms: BTreeMap<Perm, HomflyPoly>,
}

impl HeckeElement {
    pub fn identity(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::from([(identity(n), HomflyPoly::one())]),
        }
    }

    pub fn basis(w: Perm) -> Self {
        HeckeElement {
            n: w.len(),
            terms: BTreeMap::from([(w, HomflyPoly::one())]),
        }
    }

    fn add(&mut self, w: Perm, c: HomflyPoly) {
        let slot = self.terms.entry(w.clone()).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &[u8]) -> HomflyPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }
}

/// Right multiplication by `T_i` (`positive`) or `T_i⁻¹ = T_i − z`.
/// `i` is 1-based.
pub fn hecke_multiply(elt: &HeckeElement, i: usize, positive: bool) -> Result<HeckeElement> {
    if i == 0 || i >= elt.n {
        return Err(Error::InvalidBraid(format!(
            "generator {i} is outside 1..={}",
            elt.n.saturating_sub(1)
        )));
    }
    let z = HomflyPoly::z(1);
    let mut out = HeckeElement {
        n: elt.n,
        terms: BTreeMap::new(),
    };
    for (w, c) in &elt.terms {
        let mut ws = w.clone();
        ws.swap(i - 1, i);
        if w[i - 1] < w[i] {
            out.add(ws, c.clone());
        } else {
            out.add(ws, c.clone());
            out.add(w.clone(), c * &z);
        }
        if !positive {
            out.add(w.clone(), -&(c * &z));
        }
    }
    Ok(out)
}

/// The unnormalized Markov trace `W` with `W(1 on 1 strand) = 1`,
/// `W(x) = δ·W(x)` when a strand is added and `W(x T_{n-1} y) = a⁻¹ W(xy)`.
#[derive(Default)]
pub struct MarkovTrace {
    memo: HashMap<Perm, HomflyPoly>,
}

impl MarkovTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn trace(&mut self, elt: &HeckeElement) -> HomflyPoly {
        let mut total = HomflyPoly::zero();
        for (w, c) in &elt.terms {
            total = &total + &(c * &self.trace_basis(w));
        }
        total
    }

    fn trace_basis(&mut self, w: &[u8]) -> HomflyPoly {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let n = w.len();
        let v = if n <= 1 {
            HomflyPoly::one()
        } else if w[n - 1] as usize == n - 1 {
            &HomflyPoly::delta() * &self.trace_basis(&w[..n - 1])
        } else {
            // w = w' s_{n-1} s_{n-2} ... s_j, with w' fixing the top strand
            let j = w.iter().position(|&x| x as usize == n - 1).unwrap();
            let mut shorter = w.to_vec();
            for k in j..n - 1 {
                shorter.swap(k, k + 1);
            }
            shorter.pop();
            let mut elt = HeckeElement::basis(shorter);
            for k in (j + 1..=n - 2).rev() {
                elt = hecke_multiply(&elt, k, true).expect("generator in range");
            }
            &HomflyPoly::a(-1) * &self.trace(&elt)
        };
        self.memo.insert(w.to_vec(), v.clone());
        v
    }
}

/// Expands the braid word in `H_n`.
pub fn braid_element(braid: &ColoredBraid) -> HeckeElement {
    let mut elt = HeckeElement::identity(braid.n());
    for l in braid.word() {
        elt = hecke_multiply(&elt, l.gen, l.positive).expect("braid generators are in range");
    }
    elt
}

pub fn homfly_with(trace: &mut MarkovTrace, braid: &ColoredBraid) -> Result<HomflyPoly> {
    if braid.m() != 1 {
        return Err(Error::Precondition(format!(
            "HOMFLY-PT needs 1-colored strands, got m={}",
            braid.m()
        )));
    }
    let w = i32::try_from(braid.writhe()).map_err(|_| Error::ExponentOverflow)?;
    Ok(&HomflyPoly::a(w) * &trace.trace(&braid_element(braid)))
}

/// HOMFLY-PT polynomial of the closure of a 1-colored braid.
pub fn homfly_polynomial(braid: &ColoredBraid) -> Result<HomflyPoly> {
    homfly_with(&mut MarkovTrace::new(), braid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::Level;

    fn braid(n: usize, w: &[i64]) -> ColoredBraid {
        ColoredBraid::from_signed(n, w, 1, Level::Infinite).unwrap()
    }

    #[test]
    fn multiplication() {
        let e = HeckeElement::identity(2);
        let s1 = hecke_multiply(&e, 1, true).unwrap();
        assert_eq!(s1, HeckeElement::basis(vec![1, 0]));
        let sq = hecke_multiply(&s1, 1, true).unwrap();
        assert_eq!(sq.coeff(&[0, 1]), HomflyPoly::one());
        assert_eq!(sq.coeff(&[1, 0]), HomflyPoly::z(1));
        assert_eq!(hecke_multiply(&s1, 1, false).unwrap(), e);
        assert!(hecke_multiply(&e, 2, true).is_err());
    }

    #[test]
    fn delta_rewrites() {
        let p = &HomflyPoly::delta() * &HomflyPoly::z(1);
        assert_eq!(p, &HomflyPoly::a(-1) - &HomflyPoly::a(1));
        let p = &HomflyPoly::monomial(1, 2, 0, 0) * &HomflyPoly::z(3);
        assert!(p.terms().all(|(m, _)| m.delta == 0 && m.z == 1));
    }

    #[test]
    fn small_links() {
        assert_eq!(homfly_polynomial(&braid(1, &[])).unwrap(), HomflyPoly::one());
        assert_eq!(homfly_polynomial(&braid(2, &[])).unwrap(), HomflyPoly::delta());
        assert_eq!(homfly_polynomial(&braid(2, &[1])).unwrap(), HomflyPoly::one());
        assert_eq!(homfly_polynomial(&braid(2, &[-1])).unwrap(), HomflyPoly::one());
        let t = homfly_polynomial(&braid(2, &[1, 1, 1])).unwrap();
        assert_eq!(t.to_string(), "2a^2 - a^4 + a^2z^2");
        let mirror = homfly_polynomial(&braid(2, &[-1, -1, -1])).unwrap();
        assert_eq!(mirror.to_string(), "-a^-4 + 2a^-2 + a^-2z^2");
        // figure eight is amphichiral
        let f8 = homfly_polynomial(&braid(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!(f8.to_string(), "a^-2 - 1 + a^2 - z^2");
    }

    #[test]
    fn stabilization() {
        let b = braid(2, &[1, 1, 1]);
        let s = braid(3, &[1, 1, 1, 2]);
        let t = braid(3, &[1, 1, 1, -2]);
        let p = homfly_polynomial(&b).unwrap();
        assert_eq!(homfly_polynomial(&s).unwrap(), p);
        assert_eq!(homfly_polynomial(&t).unwrap(), p);
    }
}
