use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

pub type Coords = SmallVec<[i32; 8]>;

/// A weight `Σ λᵢ εᵢ`, stored as doubled integer coordinates `2λᵢ`.
///
/// The derived ordering is lexicographic on coordinates, which is the
/// monomial order used by the alternant division.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(Coords);

impl Weight {
    pub fn from_doubled<I: IntoIterator<Item = i32>>(d: I) -> Self {
        Weight(d.into_iter().collect())
    }

    pub fn from_integers<I: IntoIterator<Item = i32>>(c: I) -> Self {
        Weight(c.into_iter().map(|x| 2 * x).collect())
    }

    /// Accepts only coordinates on the half-integer grid.
    pub fn from_rationals(c: &[Rational]) -> Result<Self> {
        let two = Rational::from_integer(2);
        let mut out = Coords::new();
        for x in c {
            let d = (x * &two)
                .to_i64()
                .and_then(|v| i32::try_from(v).ok())
                .ok_or_else(|| Error::GridMismatch(format!("{x:?} is not a half-integer")))?;
            out.push(d);
        }
        Ok(Weight(out))
    }

    pub fn zero(n: usize) -> Self {
        Weight(SmallVec::from_elem(0, n))
    }

    /// `εᵢ` with a 0-based index.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.0[i] = 2;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    pub fn doubled_mut(&mut self) -> &mut Coords {
        &mut self.0
    }

    pub fn coord(&self, i: usize) -> Rational {
        Rational::new(self.0[i] as i64, 2).expect("nonzero denominator")
    }

    pub fn coords(&self) -> Vec<Rational> {
        (0..self.rank()).map(|i| self.coord(i)).collect()
    }

    /// All coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x % 2 == 0)
    }

    /// All coordinates are strictly half-integers.
    pub fn is_spin(&self) -> bool {
        self.0.iter().all(|x| x % 2 != 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> Self {
        Weight(self.0.iter().map(|a| k * a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// `(a, b) = Σ aᵢbᵢ`.
pub fn pairing(a: &Weight, b: &Weight) -> Result<Rational> {
    if a.rank() != b.rank() {
        return Err(Error::LengthMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(Rational::new(pairing_quarters(a, b), 4).expect("nonzero"))
}

/// `4·(a, b)` as an integer — the exponent of `q^{(a,b)}` on the quarter grid.
pub fn pairing_quarters(a: &Weight, b: &Weight) -> i64 {
    a.0.iter().zip(&b.0).map(|(x, y)| (*x as i64) * (*y as i64)).sum()
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&d| if d % 2 == 0 { (d / 2).to_string() } else { format!("{d}/2") })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `a,b,c` where each entry is an integer or `p/2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Weight::default());
        }
        let coords: Vec<Rational> = s.split(',').map(|t| t.parse()).collect::<Result<_>>()?;
        Weight::from_rationals(&coords)
    }
}

impl Serialize for Weight {
    /// Arrays of `"num/den"` strings.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Rational>::deserialize(d)?;
        Weight::from_rationals(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    #[test]
    fn parse_and_display() {
        let w: Weight = "3/2, 1/2".parse().unwrap();
        assert_eq!(w.doubled(), &[3, 1]);
        assert_eq!(w.to_string(), "(3/2, 1/2)");
        assert!("1/3,0".parse::<Weight>().is_err());
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"["3/2","1/2"]"#);
    }

    #[test]
    fn pairing_values() {
        let e1 = Weight::unit(2, 0);
        assert_eq!(pairing(&e1, &e1).unwrap(), Rational::one());
        let rho = Weight::from_doubled([3, 1]);
        assert_eq!(pairing(&rho, &e1).unwrap(), rat(3, 2));
        assert!(pairing(&rho, &Weight::zero(3)).is_err());
    }
}
