//! Root systems of types B, C and D in the `ε`-basis.
//!
//! Conventions:
//!
//! | type | simple roots                          | ρ                 | c_n    | κ_n   | d      |
//! |------|---------------------------------------|-------------------|--------|-------|--------|
//! | B_n  | `εᵢ − εᵢ₊₁`, `εₙ`                     | `Σ (n−i+½) εᵢ`    | `2n`   | `n−½` | `2n+1` |
//! | C_n  | `εᵢ − εᵢ₊₁`, `2εₙ`                    | `Σ (n−i+1) εᵢ`    | `2n+1` | `n`   | `2n`   |
//! | D_n  | `εᵢ − εᵢ₊₁`, `εₙ₋₁ + εₙ`              | `Σ (n−i) εᵢ`      | `2n−1` | `n−1` | `2n`   |
//!
//! `c_n` and `κ_n` are the constants of the eigenvalue formula and of the
//! splitting `ρₙ = κₙ ε₁ + ρₙ₋₁`; `d` is the dimension of the natural module.

mod weight;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use weight::{pairing, pairing_quarters, Weight};

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    B,
    C,
    D,
}

impl LieType {
    pub fn min_rank(self) -> usize {
        match self {
            LieType::B => 2,
            LieType::C => 3,
            LieType::D => 4,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::Parse(format!("unknown Lie type {other:?}"))),
        }
    }
}

/// A fully tabulated root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub rank: usize,
    pub positive_roots: Vec<Weight>,
    pub simple_roots: Vec<Weight>,
    pub rho: Weight,
    pub fundamental_weights: Vec<Weight>,
    pub c_n: i64,
    pub kappa_n: Rational,
    pub dim_natural: usize,
    /// The index set of the Casimir formulas: `−n…−1, 1…n`, plus `0`
    /// (with `ε₀ = 0`) in type B.
    pub index_set: Vec<i32>,
}

/// Builds the root system of type `t` and rank `n`.
pub fn build_root_system(t: LieType, n: usize) -> Result<RootSystem> {
    if n < t.min_rank() {
        return Err(Error::RankTooSmall {
            lie_type: t,
            rank: n,
            min: t.min_rank(),
        });
    }
    let e = |i: usize| Weight::unit(n, i);
    let mut positive_roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            positive_roots.push(e(i).sub(&e(j)));
            positive_roots.push(e(i).add(&e(j)));
        }
        match t {
            LieType::B => positive_roots.push(e(i)),
            LieType::C => positive_roots.push(e(i).scale(2)),
            LieType::D => {}
        }
    }
    let mut simple_roots: Vec<Weight> = (0..n - 1).map(|i| e(i).sub(&e(i + 1))).collect();
    simple_roots.push(match t {
        LieType::B => e(n - 1),
        LieType::C => e(n - 1).scale(2),
        LieType::D => e(n - 2).add(&e(n - 1)),
    });
    let rho = Weight::from_doubled((0..n).map(|i| {
        let k = (n - 1 - i) as i32;
        match t {
            LieType::B => 2 * k + 1,
            LieType::C => 2 * k + 2,
            LieType::D => 2 * k,
        }
    }));
    let prefix = |r: usize| Weight::from_doubled((0..n).map(|i| if i < r { 2 } else { 0 }));
    let half_all = |last: i32| Weight::from_doubled((0..n).map(|i| if i + 1 == n { last } else { 1 }));
    let fundamental_weights = (1..=n)
        .map(|r| match (t, r) {
            (LieType::B, r) if r == n => half_all(1),
            (LieType::D, r) if r == n - 1 => half_all(-1),
            (LieType::D, r) if r == n => half_all(1),
            _ => prefix(r),
        })
        .collect();
    let (c_n, kappa_doubled, dim_natural) = match t {
        LieType::B => (2 * n as i64, 2 * n as i64 - 1, 2 * n + 1),
        LieType::C => (2 * n as i64 + 1, 2 * n as i64, 2 * n),
        LieType::D => (2 * n as i64 - 1, 2 * n as i64 - 2, 2 * n),
    };
    let mut index_set: Vec<i32> = (1..=n as i32).map(|i| -i).rev().collect();
    if t == LieType::B {
        index_set.push(0);
    }
    index_set.extend(1..=n as i32);
    Ok(RootSystem {
        lie_type: t,
        rank: n,
        positive_roots,
        simple_roots,
        rho,
        fundamental_weights,
        c_n,
        kappa_n: Rational::new(kappa_doubled, 2)?,
        dim_natural,
        index_set,
    })
}

impl RootSystem {
    /// `ε_a` for `a` in the index set; `ε₋ᵢ = −εᵢ`, `ε₀ = 0`.
    pub fn eps(&self, a: i32) -> Weight {
        match a {
            0 => Weight::zero(self.rank),
            a if a > 0 => Weight::unit(self.rank, a as usize - 1),
            a => Weight::unit(self.rank, (-a) as usize - 1).neg(),
        }
    }

    /// `2α/(α, α)`.
    pub fn coroot(alpha: &Weight) -> Weight {
        // (α, α) ∈ {1, 2, 4}; coordinates stay on the half grid.
        let len4 = pairing_quarters(alpha, alpha) as i32;
        Weight::from_doubled(alpha.doubled().iter().map(|x| 8 * x / len4))
    }

    /// `ϖᵢ` with 1-based `i`.
    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                range: format!("1..={}", self.rank),
            });
        }
        Ok(self.fundamental_weights[i - 1].clone())
    }

    /// Positive roots `α` with `(α, ε₁) > 0`.
    pub fn roots_positive_on_eps1(&self) -> Vec<Weight> {
        self.positive_roots
            .iter()
            .filter(|a| a.doubled()[0] > 0)
            .cloned()
            .collect()
    }

    /// Lies in the weight lattice of this type.
    pub fn is_weight(&self, w: &Weight) -> bool {
        if w.rank() != self.rank {
            return false;
        }
        match self.lie_type {
            LieType::C => w.is_integral(),
            LieType::B | LieType::D => w.is_integral() || w.is_spin(),
        }
    }

    /// Dominance in `ε`-coordinates: `λ₁ ≥ … ≥ λₙ ≥ 0` (B, C) or
    /// `λ₁ ≥ … ≥ λₙ₋₁ ≥ |λₙ|` (D), together with lattice membership.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        if !self.is_weight(w) {
            return false;
        }
        let d = w.doubled();
        let n = self.rank;
        let chain = (0..n - 1).all(|i| d[i] >= d[i + 1]);
        match self.lie_type {
            LieType::B | LieType::C => chain && d[n - 1] >= 0,
            LieType::D => (0..n - 2).all(|i| d[i] >= d[i + 1]) && d[n - 2] >= d[n - 1].abs(),
        }
    }

    /// Coordinates of `w` in the basis of simple roots (Gaussian
    /// elimination over ℚ).
    pub fn simple_root_coordinates(&self, w: &Weight) -> Vec<Rational> {
        let n = self.rank;
        // augmented matrix: columns = simple roots, rhs = w
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = self.simple_roots.iter().map(|a| a.coord(i)).collect();
                row.push(w.coord(i));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("simple roots form a basis");
            m.swap(col, piv);
            let inv = m[col][col].recip().expect("nonzero pivot");
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&f * p);
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n].clone()).collect()
    }
}

/// A hook weight `λ_k^r = (k−r)ε₁ + μ_{r̄}` or, in type D, its barred
/// companion `(k−n+1)ε₁ + ε₂ + … + εₙ₋₁ − εₙ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookWeight {
    pub k: i64,
    pub r: usize,
    pub bar: bool,
    pub weight: Weight,
}

/// The folded index `r̄` for the hook weights.
pub fn r_bar(rs: &RootSystem, r: usize) -> usize {
    let n = rs.rank;
    match rs.lie_type {
        LieType::B => r.min(2 * n - 1 - r),
        LieType::C => r.min(2 * n - r).min(n - 1),
        LieType::D => r.min(2 * n - 2 - r),
    }
}

/// Largest admissible `r` for the hook weights of this type.
pub fn max_hook_r(rs: &RootSystem) -> usize {
    let n = rs.rank;
    match rs.lie_type {
        LieType::B => 2 * n - 1,
        LieType::C => 2 * n,
        LieType::D => 2 * n - 2,
    }
}

pub fn hook_weight(rs: &RootSystem, k: i64, r: usize, bar: bool) -> Result<HookWeight> {
    let n = rs.rank;
    let max_r = max_hook_r(rs);
    if r > max_r {
        return Err(Error::IndexOutOfRange {
            index: r as i64,
            range: format!("0..={max_r}"),
        });
    }
    let mut d = vec![0i32; n];
    if bar {
        if rs.lie_type != LieType::D || r != n - 1 {
            return Err(Error::BarNotApplicable);
        }
        d[0] = 2 * (k as i32 - n as i32 + 1);
        for x in d.iter_mut().take(n - 1).skip(1) {
            *x = 2;
        }
        d[n - 1] = -2;
    } else {
        d[0] = 2 * (k as i32 - r as i32);
        for x in d.iter_mut().skip(1).take(r_bar(rs, r)) {
            *x = 2;
        }
    }
    Ok(HookWeight {
        k,
        r,
        bar,
        weight: Weight::from_doubled(d),
    })
}

/// The type-C sign `τ_r`: `1` for `r ≤ n−1`, `0` for `r = n`, `−1` above.
pub fn tau(rs: &RootSystem, r: usize) -> Result<i32> {
    if rs.lie_type != LieType::C {
        return Err(Error::WrongType {
            expected: LieType::C,
            actual: rs.lie_type,
        });
    }
    let n = rs.rank;
    if r > 2 * n {
        return Err(Error::IndexOutOfRange {
            index: r as i64,
            range: format!("0..={}", 2 * n),
        });
    }
    Ok(match r.cmp(&n) {
        std::cmp::Ordering::Less => 1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => -1,
    })
}

/// `∏_{α>0} (λ+ρ, α)/(ρ, α)`.
pub fn weyl_dimension(rs: &RootSystem, lam: &Weight) -> Rational {
    let shifted = lam.add(&rs.rho);
    let mut num = Rational::one();
    let mut den = Rational::one();
    for a in &rs.positive_roots {
        num *= &Rational::from_integer(pairing_quarters(&shifted, a));
        den *= &Rational::from_integer(pairing_quarters(&rs.rho, a));
    }
    &num / &den
}

/// JSON view `{type, rank, rho, c_n}` plus the root lists.
#[derive(Serialize)]
pub struct RootSystemJson {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub rho: Weight,
    pub c_n: i64,
    pub kappa_n: Rational,
    pub dim_natural: usize,
    pub positive_roots: Vec<Weight>,
    pub simple_roots: Vec<Weight>,
    pub fundamental_weights: Vec<Weight>,
}

impl From<&RootSystem> for RootSystemJson {
    fn from(rs: &RootSystem) -> Self {
        RootSystemJson {
            lie_type: rs.lie_type,
            rank: rs.rank,
            rho: rs.rho.clone(),
            c_n: rs.c_n,
            kappa_n: rs.kappa_n.clone(),
            dim_natural: rs.dim_natural,
            positive_roots: rs.positive_roots.clone(),
            simple_roots: rs.simple_roots.clone(),
            fundamental_weights: rs.fundamental_weights.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    fn rs(t: LieType, n: usize) -> RootSystem {
        build_root_system(t, n).unwrap()
    }

    #[test]
    fn tabulated_constants() {
        let b2 = rs(LieType::B, 2);
        assert_eq!(b2.rho, Weight::from_doubled([3, 1]));
        assert_eq!(b2.positive_roots.len(), 4);
        assert_eq!(b2.c_n, 4);
        let c3 = rs(LieType::C, 3);
        assert_eq!(c3.rho, Weight::from_integers([3, 2, 1]));
        assert_eq!(c3.positive_roots.len(), 9);
        assert_eq!(c3.c_n, 7);
        let d4 = rs(LieType::D, 4);
        assert_eq!(d4.rho, Weight::from_integers([3, 2, 1, 0]));
        assert_eq!(d4.positive_roots.len(), 12);
        assert_eq!(d4.c_n, 7);
        assert_eq!(d4.kappa_n, rat(3, 1));
        assert_eq!(b2.kappa_n, rat(3, 2));
    }

    #[test]
    fn rank_limits() {
        for (t, bad) in [(LieType::B, 1), (LieType::C, 2), (LieType::D, 3)] {
            assert!(matches!(build_root_system(t, bad), Err(Error::RankTooSmall { .. })));
        }
    }

    #[test]
    fn fundamental_weights_match_table() {
        let b2 = rs(LieType::B, 2);
        assert_eq!(b2.fundamental_weight(1).unwrap(), Weight::from_integers([1, 0]));
        assert_eq!(b2.fundamental_weight(2).unwrap(), Weight::from_doubled([1, 1]));
        let d4 = rs(LieType::D, 4);
        assert_eq!(d4.fundamental_weight(3).unwrap(), Weight::from_doubled([1, 1, 1, -1]));
        assert!(d4.fundamental_weight(5).is_err());
        assert!(d4.fundamental_weight(0).is_err());
        // (ϖₙ, ϖₙ) = n/4 in type B
        let b4 = rs(LieType::B, 4);
        let w = b4.fundamental_weight(4).unwrap();
        assert_eq!(pairing(&w, &w).unwrap(), rat(1, 1));
    }

    #[test]
    fn hooks() {
        let b3 = rs(LieType::B, 3);
        assert_eq!(hook_weight(&b3, 2, 1, false).unwrap().weight, Weight::from_integers([1, 1, 0]));
        let c3 = rs(LieType::C, 3);
        assert_eq!(hook_weight(&c3, 5, 4, false).unwrap().weight, Weight::from_integers([1, 1, 1]));
        let d4 = rs(LieType::D, 4);
        assert_eq!(
            hook_weight(&d4, 4, 3, true).unwrap().weight,
            Weight::from_integers([1, 1, 1, -1])
        );
        assert_eq!(hook_weight(&d4, 4, 2, true), Err(Error::BarNotApplicable));
        assert_eq!(hook_weight(&b3, 4, 3, true), Err(Error::BarNotApplicable));
        assert!(hook_weight(&d4, 9, 7, false).is_err());
    }

    #[test]
    fn tau_table() {
        let c3 = rs(LieType::C, 3);
        assert_eq!(tau(&c3, 0).unwrap(), 1);
        assert_eq!(tau(&c3, 3).unwrap(), 0);
        assert_eq!(tau(&c3, 5).unwrap(), -1);
        assert!(tau(&rs(LieType::B, 3), 0).is_err());
    }

    #[test]
    fn dominance() {
        let d4 = rs(LieType::D, 4);
        assert!(d4.is_dominant(&Weight::from_integers([1, 1, 1, -1])));
        assert!(!d4.is_dominant(&Weight::from_integers([1, 1, 0, -1])));
        let c3 = rs(LieType::C, 3);
        assert!(!c3.is_dominant(&Weight::from_doubled([1, 1, 1])));
        let b2 = rs(LieType::B, 2);
        assert!(b2.is_dominant(&Weight::from_doubled([1, 1])));
        assert!(!b2.is_dominant(&Weight::from_doubled([2, 1])));
    }

    #[test]
    fn index_set() {
        assert_eq!(rs(LieType::B, 2).index_set, vec![-2, -1, 0, 1, 2]);
        assert_eq!(rs(LieType::C, 3).index_set, vec![-3, -2, -1, 1, 2, 3]);
    }
}
