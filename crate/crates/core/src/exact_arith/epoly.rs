//! Polynomials in abstract symbols `E₁…Eₙ` with [`QLaurent`] coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::qlaurent::QLaurent;
use super::ring::{ExactDivRing, Ring};
use crate::error::{Error, Result};

/// Sparse polynomial; the key is the exponent vector (length `nsyms`).
#[derive(Clone, PartialEq, Eq)]
pub struct EPoly {
    nsyms: usize,
    terms: BTreeMap<Vec<u32>, QLaurent>,
}

impl EPoly {
    pub fn zero(nsyms: usize) -> Self {
        EPoly {
            nsyms,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nsyms: usize, c: QLaurent) -> Self {
        let mut p = Self::zero(nsyms);
        if !c.is_zero() {
            p.terms.insert(vec![0; nsyms], c);
        }
        p
    }

    pub fn one(nsyms: usize) -> Self {
        Self::constant(nsyms, QLaurent::one())
    }

    /// The symbol with 0-based index `i` (displayed as `E_{i+1}`).
    pub fn symbol(nsyms: usize, i: usize) -> Result<Self> {
        if i >= nsyms {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                range: format!("0..{nsyms}"),
            });
        }
        let mut exps = vec![0; nsyms];
        exps[i] = 1;
        let mut p = Self::zero(nsyms);
        p.terms.insert(exps, QLaurent::one());
        Ok(p)
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, QLaurent)>>(
        nsyms: usize,
        terms: I,
    ) -> Result<Self> {
        let mut p = Self::zero(nsyms);
        for (exps, c) in terms {
            if exps.len() != nsyms {
                return Err(Error::LengthMismatch {
                    left: exps.len(),
                    right: nsyms,
                });
            }
            p.add_term(exps, &c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: &QLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                let s = v.add(c);
                if s.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exps, c.clone());
            }
        }
    }

    pub fn nsyms(&self) -> usize {
        self.nsyms
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &QLaurent)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> QLaurent {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Highest 0-based symbol index that occurs, if any.
    pub fn max_symbol(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|e| e.iter().rposition(|&x| x > 0))
            .max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Coefficient of `E_i^1` with all other exponents zero — the linear
    /// coefficient of a single symbol.
    pub fn linear_coeff(&self, i: usize) -> QLaurent {
        let mut exps = vec![0; self.nsyms];
        exps[i] = 1;
        self.coeff(&exps)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.nsyms, other.nsyms, "EPoly symbol count mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        EPoly {
            nsyms: self.nsyms,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &QLaurent) -> Self {
        let mut out = Self::zero(self.nsyms);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), &x.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(self.nsyms);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nsyms);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative in symbol `i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nsyms);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, &c.scale(&(e[i] as i64).into()));
        }
        out
    }

    /// Evaluates in any ring: symbol `i` ↦ `values[i]`, coefficients through
    /// `embed`.
    pub fn eval<R: Ring>(&self, values: &[R], one: &R, embed: impl Fn(&QLaurent) -> R) -> Result<R> {
        if values.len() != self.nsyms {
            return Err(Error::LengthMismatch {
                left: values.len(),
                right: self.nsyms,
            });
        }
        // cache powers per symbol
        let mut powers: Vec<Vec<R>> = values.iter().map(|v| vec![one.clone(), v.clone()]).collect();
        let mut acc = one.zero_like();
        for (e, c) in &self.terms {
            let mut t = embed(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().times(&values[i]);
                    powers[i].push(next);
                }
                t = t.times(&powers[i][k as usize]);
            }
            acc = acc.plus(&t);
        }
        Ok(acc)
    }

    /// Substitutes polynomials (over a possibly different symbol count) for
    /// every symbol.
    pub fn substitute(&self, values: &[EPoly]) -> Result<EPoly> {
        let m = values.first().map(|v| v.nsyms).unwrap_or(0);
        self.eval(values, &EPoly::one(m), |c| EPoly::constant(m, c.clone()))
    }

    /// Exact multivariate division by lex-leading-term elimination.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check(divisor);
        let (dlead_e, dlead_c) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nsyms);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&dlead_e).any(|(a, b)| a < b) {
                return Err(Error::NotDivisible(format!("({self}) / ({divisor})")));
            }
            let m: Vec<u32> = e.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            let qc = c.div_exact(&dlead_c)?;
            let mut mono = Self::zero(self.nsyms);
            mono.terms.insert(m.clone(), qc.clone());
            rem = rem.sub(&mono.mul(divisor));
            quot.add_term(m, &qc);
        }
        Ok(quot)
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("E{}", i + 1)
                        } else {
                            format!("E{}^{}", i + 1, k)
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EPoly[{self}]")
    }
}

impl Ring for EPoly {
    fn zero_like(&self) -> Self {
        EPoly::zero(self.nsyms)
    }
    fn one_like(&self) -> Self {
        EPoly::one(self.nsyms)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl ExactDivRing for EPoly {
    fn div_exact_by(&self, other: &Self) -> Result<Self> {
        self.div_exact(other)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u32>,
    coeff: QLaurent,
}

impl Serialize for EPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(e, c)| TermJson {
                exps: e.clone(),
                coeff: c.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::Rational;

    fn e(n: usize, i: usize) -> EPoly {
        EPoly::symbol(n, i).unwrap()
    }

    /// `(1 − q⁻¹L)(1 − q⁻¹L⁻¹) = q⁻²(1 − qL)(1 − qL⁻¹)` with denominators
    /// cleared: multiply both sides by `L`, treating `L` as a symbol.
    #[test]
    fn cleared_unit_identity() {
        let l = e(1, 0);
        let one = EPoly::one(1);
        let qm1 = EPoly::constant(1, QLaurent::q_pow(-1));
        let q1 = EPoly::constant(1, QLaurent::q_pow(1));
        // L·(1 − q⁻¹L)(1 − q⁻¹L⁻¹) = (1 − q⁻¹L)(L − q⁻¹)
        let lhs = one.sub(&qm1.mul(&l)).mul(&l.sub(&qm1));
        // L·q⁻²(1 − qL)(1 − qL⁻¹) = q⁻²(1 − qL)(L − q)
        let rhs = one
            .sub(&q1.mul(&l))
            .mul(&l.sub(&q1))
            .scale(&QLaurent::q_pow(-2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_and_eval() {
        let p = e(2, 0).pow(3).add(&e(2, 0).mul(&e(2, 1)).scale(&QLaurent::q_pow(1)));
        let d = p.partial(0);
        let expect = e(2, 0).pow(2).scale(&QLaurent::from_int(3)).add(&e(2, 1).scale(&QLaurent::q_pow(1)));
        assert_eq!(d, expect);
        let vals = [Rational::from_integer(2), Rational::from_integer(5)];
        let v = p
            .eval(&vals, &Rational::one(), |c| c.eval(&Rational::one()).unwrap())
            .unwrap();
        assert_eq!(v, Rational::from_integer(18));
    }

    #[test]
    fn division_round_trip() {
        let a = e(3, 0).add(&e(3, 2).scale(&QLaurent::q_pow(2))).add(&EPoly::one(3));
        let b = e(3, 1).sub(&e(3, 0)).scale(&QLaurent::q_pow(-1).add(&QLaurent::one()));
        assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
        assert!(matches!(a.div_exact(&b), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn max_symbol_tracks_support() {
        let p = e(4, 1).mul(&e(4, 0));
        assert_eq!(p.max_symbol(), Some(1));
        assert_eq!(EPoly::one(4).max_symbol(), None);
        assert!(EPoly::symbol(2, 2).is_err());
    }
}
