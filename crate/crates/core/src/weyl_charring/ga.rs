//! The group algebra `K[P]` of the weight lattice: finite sums `Σ c_μ e^μ`
//! with `QLaurent` coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use super::signed_perm::SignedPerm;
use crate::error::{Error, Result};
use crate::exact_arith::{ExactDivRing, QLaurent, Rational, Ring};
use crate::root_data::Weight;

#[derive(Clone, PartialEq, Eq)]
pub struct GAElem {
    rank: usize,
    terms: BTreeMap<Weight, QLaurent>,
}

fn accumulate(acc: &mut HashMap<Weight, QLaurent>, w: Weight, c: &QLaurent) {
    use std::collections::hash_map::Entry;
    match acc.entry(w) {
        Entry::Occupied(mut o) => {
            let s = o.get().add(c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c.clone());
            }
        }
    }
}

impl GAElem {
    pub fn zero(rank: usize) -> Self {
        GAElem {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, QLaurent::one())
    }

    pub fn constant(rank: usize, c: QLaurent) -> Self {
        Self::monomial(Weight::zero(rank), c)
    }

    /// `c · e^w`.
    pub fn monomial(w: Weight, c: QLaurent) -> Self {
        let mut g = Self::zero(w.rank());
        if !c.is_zero() {
            g.terms.insert(w, c);
        }
        g
    }

    /// `e^w` with coefficient 1.
    pub fn exp(w: Weight) -> Self {
        Self::monomial(w, QLaurent::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, QLaurent)>>(rank: usize, terms: I) -> Result<Self> {
        let mut acc = HashMap::new();
        for (w, c) in terms {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    left: w.rank(),
                    right: rank,
                });
            }
            accumulate(&mut acc, w, &c);
        }
        Ok(Self::from_hash(rank, acc))
    }

    pub(crate) fn from_hash(rank: usize, acc: HashMap<Weight, QLaurent>) -> Self {
        GAElem {
            rank,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, &QLaurent)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Weight) -> QLaurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Lexicographically highest term.
    pub fn lead(&self) -> Option<(&Weight, &QLaurent)> {
        self.terms.iter().next_back()
    }

    /// Lexicographically lowest term.
    pub fn trail(&self) -> Option<(&Weight, &QLaurent)> {
        self.terms.iter().next()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    fn add_term(&mut self, w: Weight, c: &QLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                let s = v.add(c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&QLaurent::from_int(-1))
    }

    pub fn scale(&self, c: &QLaurent) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        GAElem {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// Multiplies by `e^w`.
    pub fn shift(&self, w: &Weight) -> Self {
        GAElem {
            rank: self.rank,
            terms: self.terms.iter().map(|(v, c)| (v.add(w), c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.rank);
        }
        let mut acc: HashMap<Weight, QLaurent> = HashMap::with_capacity(self.len() * other.len());
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                accumulate(&mut acc, w1.add(w2), &c1.mul(c2));
            }
        }
        Self::from_hash(self.rank, acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `w(x)`: `e^μ ↦ e^{w(μ)}` termwise.
    pub fn act(&self, w: &SignedPerm) -> Result<Self> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: w.rank(),
                right: self.rank,
            });
        }
        Ok(GAElem {
            rank: self.rank,
            terms: self.terms.iter().map(|(v, c)| (w.act_weight(v), c.clone())).collect(),
        })
    }

    /// Every weight has integer coordinates.
    pub fn has_integer_support(&self) -> bool {
        self.terms.keys().all(Weight::is_integral)
    }

    /// The coefficient of `e^0` if the element is a constant.
    pub fn as_constant(&self) -> Option<QLaurent> {
        match self.terms.len() {
            0 => Some(QLaurent::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Exact division `self / den` by cancellation of the lexicographically
    /// leading term. Every quotient monomial lies between
    /// `lead(num) − lead(den)` and `trail(num) − trail(den)`; dropping below
    /// that window proves a nonzero remainder.
    pub fn div_exact(&self, den: &Self) -> Result<Self> {
        self.check_rank(den)?;
        let (dlead_w, dlead_c) = den.lead().map(|(w, c)| (w.clone(), c.clone())).ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero(self.rank));
        }
        let floor = self.trail().unwrap().0.sub(den.trail().unwrap().0);
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((w, c)) = rem.pop_last() {
            let m = w.sub(&dlead_w);
            if m < floor {
                return Err(Error::NotDivisible(format!(
                    "group-algebra remainder at e^{w} does not cancel"
                )));
            }
            let qc = c.div_exact(&dlead_c)?;
            for (dw, dc) in den.terms.iter().rev().skip(1) {
                let key = m.add(dw);
                let delta = qc.mul(dc);
                match rem.get_mut(&key) {
                    Some(v) => {
                        let s = v.sub(&delta);
                        if s.is_zero() {
                            rem.remove(&key);
                        } else {
                            *v = s;
                        }
                    }
                    None => {
                        rem.insert(key, delta.neg());
                    }
                }
            }
            quot.insert(m, qc);
        }
        Ok(GAElem {
            rank: self.rank,
            terms: quot,
        })
    }

    /// Evaluates with `q^{1/4} = s` and `e^{εᵢ/2} = half_point[i]`
    /// (so `e^{εᵢ} = half_point[i]²`).
    pub fn eval(&self, s: &Rational, half_point: &[Rational]) -> Result<Rational> {
        if half_point.len() != self.rank {
            return Err(Error::LengthMismatch {
                left: half_point.len(),
                right: self.rank,
            });
        }
        if s.is_zero() || half_point.iter().any(Rational::is_zero) {
            return Err(Error::ZeroBase);
        }
        // coefficients evaluate once per distinct polynomial; powers are cached
        let mut pow_cache: Vec<HashMap<i32, Rational>> = vec![HashMap::new(); self.rank];
        let mut total = Rational::zero();
        for (w, c) in &self.terms {
            let mut v = c.eval(s)?;
            for (i, &d) in w.doubled().iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let p = pow_cache[i]
                    .entry(d)
                    .or_insert_with(|| half_point[i].pow(d as i64).expect("nonzero base"));
                v *= p;
            }
            total += &v;
        }
        Ok(total)
    }

    /// Evaluates with `e^{εᵢ} = point[i]`; requires integer-grid support.
    pub fn eval_full(&self, s: &Rational, point: &[Rational]) -> Result<Rational> {
        if !self.has_integer_support() {
            return Err(Error::GridMismatch(
                "half-integer weights need the values of e^{eps_i/2}".into(),
            ));
        }
        if point.len() != self.rank {
            return Err(Error::LengthMismatch {
                left: point.len(),
                right: self.rank,
            });
        }
        if s.is_zero() || point.iter().any(Rational::is_zero) {
            return Err(Error::ZeroBase);
        }
        let mut total = Rational::zero();
        for (w, c) in &self.terms {
            let mut v = c.eval(s)?;
            for (i, &d) in w.doubled().iter().enumerate() {
                v *= &point[i].pow((d / 2) as i64)?;
            }
            total += &v;
        }
        Ok(total)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, c)| {
                let coeff = if c.is_one() { String::new() } else { format!("({})", c.to_latex()) };
                if w.is_zero() {
                    if coeff.is_empty() { "1".into() } else { coeff }
                } else {
                    format!("{coeff}e^{{{}}}", weight_latex(w))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn weight_latex(w: &Weight) -> String {
    let mut out = String::new();
    for (i, &d) in w.doubled().iter().enumerate() {
        if d == 0 {
            continue;
        }
        let sign = if d < 0 { "-" } else if out.is_empty() { "" } else { "+" };
        let a = d.abs();
        let c = match (a % 2 == 0, a) {
            (true, 2) => String::new(),
            (true, _) => (a / 2).to_string(),
            (false, _) => format!("\\tfrac{{{a}}}{{2}}"),
        };
        out.push_str(&format!("{sign}{c}\\varepsilon_{{{}}}", i + 1));
    }
    out
}

impl fmt::Display for GAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, c)| format!("({c})*e^{w}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for GAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GAElem[{self}]")
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    weight: &'a [i32],
    coeff: &'a QLaurent,
}

impl Serialize for GAElem {
    /// `[{"weight": [doubled ints], "coeff": QLaurent}]`, lexicographic.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(w, c)| TermJson {
                weight: w.doubled(),
                coeff: c,
            })
            .collect();
        v.serialize(s)
    }
}

impl Ring for GAElem {
    fn zero_like(&self) -> Self {
        GAElem::zero(self.rank)
    }
    fn one_like(&self) -> Self {
        GAElem::one(self.rank)
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

impl ExactDivRing for GAElem {
    fn div_exact_by(&self, other: &Self) -> Result<Self> {
        self.div_exact(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(d: &[i32]) -> GAElem {
        GAElem::exp(Weight::from_doubled(d.iter().copied()))
    }

    #[test]
    fn division_round_trip() {
        let x = e(&[2, 0]).add(&e(&[0, -2]).scale(&QLaurent::q_pow(1))).add(&GAElem::one(2));
        let y = e(&[1, 1]).sub(&e(&[-1, -1])).mul(&e(&[2, -2]).sub(&GAElem::one(2)));
        assert_eq!(x.mul(&y).div_exact(&y).unwrap(), x);
        assert!(matches!(x.div_exact(&y), Err(Error::NotDivisible(_))));
        assert_eq!(x.div_exact(&GAElem::zero(2)), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        let x = e(&[2, 0]).add(&e(&[1, 1]));
        let s = Rational::one();
        let pt = [Rational::from_integer(2), Rational::from_integer(3)];
        assert_eq!(x.eval(&s, &pt).unwrap(), Rational::from_integer(4 + 6));
        assert!(matches!(x.eval_full(&s, &pt), Err(Error::GridMismatch(_))));
        assert_eq!(e(&[2, 0]).eval_full(&s, &pt).unwrap(), Rational::from_integer(2));
    }

    #[test]
    fn json_shape() {
        let x = e(&[2, 0]).scale(&QLaurent::q_pow(1));
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"[{"weight":[2,0],"coeff":[{"e":4,"c":"1/1"}]}]"#
        );
    }
}
