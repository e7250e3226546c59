use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::root_data::{LieType, RootSystem, Weight};

/// Largest rank for which the Weyl group may be enumerated.
pub const ENUMERATION_LIMIT: usize = 7;

/// `w(εᵢ) = signs[i] · ε_{perm[i]}` (0-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: SmallVec<[u8; 8]>,
    signs: SmallVec<[i8; 8]>,
}

impl SignedPerm {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::LengthMismatch {
                left: signs.len(),
                right: n,
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Parse(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::Parse(format!("signs {signs:?} must be ±1")));
        }
        Ok(SignedPerm {
            perm: perm.into_iter().map(|p| p as u8).collect(),
            signs: signs.into_iter().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n as u8).collect(),
            signs: SmallVec::from_elem(1, n),
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> impl Iterator<Item = usize> + '_ {
        self.perm.iter().map(|&p| p as usize)
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn num_sign_flips(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    /// Determinant of the signed permutation matrix.
    pub fn sgn(&self) -> i64 {
        let n = self.perm.len();
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        let flips = self.num_sign_flips();
        if (inversions + flips).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let perm = other.perm.iter().map(|&p| self.perm[p as usize]).collect();
        let signs = other
            .perm
            .iter()
            .zip(&other.signs)
            .map(|(&p, &s)| s * self.signs[p as usize])
            .collect();
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.perm.len();
        let mut perm: SmallVec<[u8; 8]> = SmallVec::from_elem(0, n);
        let mut signs: SmallVec<[i8; 8]> = SmallVec::from_elem(1, n);
        for i in 0..n {
            let p = self.perm[i] as usize;
            perm[p] = i as u8;
            signs[p] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    /// Action on weights: `new[perm[i]] = signs[i]·old[i]`.
    pub fn act_weight(&self, w: &Weight) -> Weight {
        let d = w.doubled();
        let mut out = Weight::zero(d.len());
        let o = out.doubled_mut();
        for i in 0..d.len() {
            o[self.perm[i] as usize] = self.signs[i] as i32 * d[i];
        }
        out
    }

    /// The reflection `s_α` for a root `α` of type B, C or D.
    pub fn reflection(alpha: &Weight) -> Result<Self> {
        let d = alpha.doubled();
        let n = d.len();
        let support: Vec<usize> = (0..n).filter(|&i| d[i] != 0).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut signs = vec![1i8; n];
        match support.as_slice() {
            [i] => signs[*i] = -1,
            [i, j] if d[*i].abs() == d[*j].abs() => {
                perm.swap(*i, *j);
                if d[*i].signum() == d[*j].signum() {
                    signs[*i] = -1;
                    signs[*j] = -1;
                }
            }
            _ => return Err(Error::Parse(format!("{alpha} is not a root of type B/C/D"))),
        }
        SignedPerm::new(perm, signs)
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .perm
            .iter()
            .zip(&self.signs)
            .enumerate()
            .map(|(i, (p, s))| format!("{}→{}{}", i + 1, if *s < 0 { "-" } else { "" }, p + 1))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // lexicographic order, generated iteratively
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Every element of `W`, in a fixed deterministic order.
pub fn enumerate_weyl(rs: &RootSystem) -> Result<Vec<SignedPerm>> {
    let n = rs.rank;
    if n > ENUMERATION_LIMIT {
        return Err(Error::RankTooLargeForEnumeration {
            rank: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    for p in permutations(n) {
        for mask in 0u32..(1 << n) {
            if rs.lie_type == LieType::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            out.push(SignedPerm {
                perm: p.iter().map(|&x| x as u8).collect(),
                signs: (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect(),
            });
        }
    }
    Ok(out)
}

/// Simple reflections of `rs`, in the order of `rs.simple_roots`.
pub fn simple_reflections(rs: &RootSystem) -> Vec<SignedPerm> {
    rs.simple_roots
        .iter()
        .map(|a| SignedPerm::reflection(a).expect("simple roots are roots"))
        .collect()
}

/// Left coset representatives of `Wₙ/Wₙ₋₁`, where `Wₙ₋₁` fixes `ε₁`:
/// `(1,i)(−1,−i)`, `(1,−i)(−1,i)` for `2 ≤ i ≤ n`, the identity, and
/// `(1,−1)(n,−n)`.
pub fn coset_reps(rs: &RootSystem) -> Vec<SignedPerm> {
    let n = rs.rank;
    let mut out = Vec::new();
    for i in 1..n {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(0, i);
        out.push(SignedPerm::new(perm.clone(), vec![1; n]).unwrap());
        let mut signs = vec![1i8; n];
        signs[0] = -1;
        signs[i] = -1;
        out.push(SignedPerm::new(perm, signs).unwrap());
    }
    out.push(SignedPerm::identity(n));
    let mut signs = vec![1i8; n];
    signs[0] = -1;
    signs[n - 1] = -1;
    out.push(SignedPerm::new((0..n).collect(), signs).unwrap());
    out
}

/// Elements of `W` fixing `ε₁` — the embedded copy of `Wₙ₋₁`.
pub fn stabilizer_of_eps1(group: &[SignedPerm]) -> Vec<SignedPerm> {
    group
        .iter()
        .filter(|w| w.perm[0] == 0 && w.signs[0] == 1)
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::build_root_system;
    use std::collections::HashSet;

    #[test]
    fn group_orders() {
        let cases = [(LieType::B, 2, 8), (LieType::D, 4, 192), (LieType::C, 3, 48)];
        for (t, n, size) in cases {
            let rs = build_root_system(t, n).unwrap();
            let w = enumerate_weyl(&rs).unwrap();
            assert_eq!(w.len(), size);
            let set: HashSet<_> = w.iter().cloned().collect();
            assert_eq!(set.len(), size);
        }
    }

    #[test]
    fn signs() {
        let rs = build_root_system(LieType::B, 2).unwrap();
        assert_eq!(SignedPerm::identity(2).sgn(), 1);
        let s12 = SignedPerm::reflection(&rs.simple_roots[0]).unwrap();
        assert_eq!(s12.sgn(), -1);
        let f1 = SignedPerm::reflection(&Weight::unit(2, 0)).unwrap();
        let f2 = SignedPerm::reflection(&Weight::unit(2, 1)).unwrap();
        assert_eq!(f1.compose(&f2).sgn(), 1);
        assert_eq!(s12.act_weight(&Weight::unit(2, 0)), Weight::unit(2, 1));
    }

    #[test]
    fn reflections_fix_hyperplane_and_negate_root() {
        let rs = build_root_system(LieType::C, 3).unwrap();
        for a in &rs.positive_roots {
            let s = SignedPerm::reflection(a).unwrap();
            assert_eq!(s.act_weight(a), a.neg());
            assert_eq!(s.sgn(), -1);
            assert_eq!(s.compose(&s), SignedPerm::identity(3));
        }
    }

    #[test]
    fn compose_matches_action() {
        let rs = build_root_system(LieType::D, 4).unwrap();
        let w = enumerate_weyl(&rs).unwrap();
        let x = Weight::from_integers([4, 3, 2, 1]);
        for (a, b) in w.iter().zip(w.iter().rev()).take(50) {
            assert_eq!(a.compose(b).act_weight(&x), a.act_weight(&b.act_weight(&x)));
            assert_eq!(a.compose(&a.inverse()), SignedPerm::identity(4));
            assert_eq!(a.compose(b).sgn(), a.sgn() * b.sgn());
        }
    }

    #[test]
    fn enumeration_guard() {
        let rs = build_root_system(LieType::B, 8).unwrap();
        assert!(matches!(
            enumerate_weyl(&rs),
            Err(Error::RankTooLargeForEnumeration { .. })
        ));
    }
}
