//! Sparse Laurent polynomials in `q` with rational coefficients.
//!
//! Exponents are stored in quarter units: the internal variable is
//! `v = q^{1/4}`, so the term `(e, c)` means `c · q^{e/4}`. Every pairing of
//! weights in types B, C, D lies in `¼ℤ`, so this grid is closed under all
//! operations the library performs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_e q^{e/4}`; terms sorted by ascending `e`,
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    terms: Vec<(i32, Rational)>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c))
    }

    /// `c · q^{quarter/4}`.
    pub fn monomial(quarter: i32, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            QLaurent {
                terms: vec![(quarter, c)],
            }
        }
    }

    /// `q^k` for an integer `k`.
    pub fn q_pow(k: i32) -> Self {
        Self::monomial(4 * k, Rational::one())
    }

    /// `sign · q^k`.
    pub fn signed_q_pow(sign: i64, k: i32) -> Self {
        Self::monomial(4 * k, Rational::from_integer(sign))
    }

    /// Builds from arbitrary `(quarter, coeff)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<i32, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += &c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: BTreeMap<i32, Rational>) -> Self {
        QLaurent {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(i32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if this polynomial has no `q`-dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Highest term `(quarter, coeff)`.
    pub fn lead(&self) -> Option<&(i32, Rational)> {
        self.terms.last()
    }

    /// Lowest term `(quarter, coeff)`.
    pub fn trail(&self) -> Option<&(i32, Rational)> {
        self.terms.first()
    }

    pub fn coeff(&self, quarter: i32) -> Rational {
        match self.terms.binary_search_by_key(&quarter, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Multiplies by `q^{quarter/4}`.
    pub fn shift(&self, quarter: i32) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (e + quarter, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QLaurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else if take_b {
                let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate_other {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        QLaurent { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return QLaurent {
                terms: self.terms.iter().map(|(x, d)| (x + e, d * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let mut acc: BTreeMap<i32, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                *acc.entry(e1 + e2).or_default() += &(c1 * c2);
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Eliminates the top term repeatedly; since every quotient exponent must
    /// lie between `lead(self) − lead(divisor)` and
    /// `trail(self) − trail(divisor)`, falling below that window proves a
    /// nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (dlead_e, dlead_c) = divisor.lead().cloned().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if divisor.is_monomial() {
            let inv = dlead_c.recip()?;
            return Ok(self.shift(-dlead_e).scale(&inv));
        }
        let floor = self.trail().unwrap().0 - divisor.trail().unwrap().0;
        let mut rem = self.clone();
        let mut quot: Vec<(i32, Rational)> = Vec::new();
        while let Some((e, c)) = rem.lead().cloned() {
            let m = e - dlead_e;
            if m < floor {
                return Err(Error::NotDivisible(format!("({self}) / ({divisor})")));
            }
            let qc = c.checked_div(&dlead_c)?;
            rem = rem.sub(&divisor.shift(m).scale(&qc));
            quot.push((m, qc));
        }
        quot.reverse();
        Ok(QLaurent { terms: quot })
    }

    /// Evaluates at `q^{1/4} = s`, i.e. `q = s⁴`.
    pub fn eval(&self, s: &Rational) -> Result<Rational> {
        if s.is_zero() {
            return Err(Error::ZeroBase);
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            total += &(c * &s.pow(*e as i64)?);
        }
        Ok(total)
    }

    /// LaTeX rendering, e.g. `q^{3} - 2q^{-1/2}`.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else if latex {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            } else {
                format!("({}/{})", abs.numer(), abs.denom())
            };
            let exp = quarter_str(*e);
            match (*e == 0, abs.is_one()) {
                (true, _) => out.push_str(&coeff),
                (false, true) => {}
                (false, false) => out.push_str(&coeff),
            }
            if *e != 0 {
                if *e == 4 {
                    out.push('q');
                } else if latex {
                    out.push_str(&format!("q^{{{exp}}}"));
                } else {
                    out.push_str(&format!("q^{exp}"));
                }
            }
        }
        out
    }
}

fn quarter_str(e: i32) -> String {
    let g = num_integer::gcd(e.abs(), 4).max(1);
    let (n, d) = (e / g, 4 / g);
    if d == 1 {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent[{self}]")
    }
}

impl From<Rational> for QLaurent {
    fn from(c: Rational) -> Self {
        QLaurent::constant(c)
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        QLaurent::add(self, rhs)
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        QLaurent::sub(self, rhs)
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        QLaurent::mul(self, rhs)
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent::neg(self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: i32,
    c: Rational,
}

impl Serialize for QLaurent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(e, c)| TermJson { e: *e, c: c.clone() })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QLaurent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermJson>::deserialize(d)?;
        Ok(QLaurent::from_terms(v.into_iter().map(|t| (t.e, t.c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::rat;

    fn q(k: i32) -> QLaurent {
        QLaurent::q_pow(k)
    }

    #[test]
    fn sums_and_cancellation() {
        assert_eq!(q(1).add(&QLaurent::zero()), q(1));
        let a = q(1).sub(&q(-1));
        assert!(a.add(&q(-1).sub(&q(1))).is_zero());
        let b = q(2).add(&QLaurent::one()).add(&q(2).sub(&QLaurent::one()));
        assert_eq!(b, QLaurent::monomial(8, rat(2, 1)));
    }

    #[test]
    fn products() {
        let h = QLaurent::monomial(2, Rational::one());
        assert_eq!(h.mul(&h), q(1));
        let p = q(1).sub(&q(-1)).mul(&q(1).add(&q(-1)));
        assert_eq!(p, q(2).sub(&q(-2)));
    }

    #[test]
    fn exact_division() {
        let num = q(2).sub(&q(-2));
        let den = q(1).sub(&q(-1));
        assert_eq!(num.div_exact(&den).unwrap(), q(1).add(&q(-1)));
        assert_eq!(num.div_exact(&QLaurent::one()).unwrap(), num);
        let bad = q(2).add(&QLaurent::one()).div_exact(&q(1).sub(&QLaurent::one()));
        assert!(matches!(bad, Err(Error::NotDivisible(_))));
        assert_eq!(num.div_exact(&QLaurent::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation_at_s() {
        assert_eq!(q(1).eval(&Rational::one()).unwrap(), Rational::one());
        let v = q(1).sub(&q(-1)).eval(&rat(2, 1)).unwrap();
        assert_eq!(v, rat(255, 16));
        assert_eq!(QLaurent::monomial(2, Rational::one()).eval(&rat(3, 1)).unwrap(), rat(9, 1));
        assert_eq!(q(1).eval(&Rational::zero()), Err(Error::ZeroBase));
    }

    #[test]
    fn rendering() {
        let p = q(3).sub(&QLaurent::monomial(-2, rat(2, 1)));
        assert_eq!(p.to_string(), "q^3 - 2q^-1/2");
        assert_eq!(p.to_latex(), "q^{3} - 2q^{-1/2}");
        assert_eq!(QLaurent::zero().to_string(), "0");
        assert_eq!(QLaurent::from_int(-1).to_string(), "-1");
    }

    #[test]
    fn json_round_trip() {
        let p = q(3).add(&QLaurent::monomial(-2, rat(-1, 2)));
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"[{"e":-2,"c":"-1/2"},{"e":12,"c":"1/1"}]"#);
        assert_eq!(serde_json::from_str::<QLaurent>(&js).unwrap(), p);
    }
}
