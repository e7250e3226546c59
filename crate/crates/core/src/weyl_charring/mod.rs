//! Weyl groups as signed permutations, the antisymmetrizer, the Weyl
//! denominator and characters in the group algebra of the weight lattice.

mod ga;
mod signed_perm;

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

pub use ga::GAElem;
pub use signed_perm::{
    coset_reps, enumerate_weyl, simple_reflections, stabilizer_of_eps1, SignedPerm,
    ENUMERATION_LIMIT,
};

use crate::error::{Error, Result};
use crate::exact_arith::{QLaurent, Rational};
use crate::root_data::{LieType, RootSystem, Weight};

/// How to build the Weyl denominator `Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DenominatorMode {
    /// `∏_{α>0} (e^{α/2} − e^{−α/2})`
    Product,
    /// `𝐀(e^ρ)`
    Alternant,
}

/// Everything derived from one root system that is expensive to rebuild:
/// the enumerated Weyl group, `Δ`, the exterior-power characters and a cache
/// of irreducible characters.
pub struct WeylContext {
    rs: RootSystem,
    group: Vec<SignedPerm>,
    generators: Vec<SignedPerm>,
    half_roots: Vec<Weight>,
    delta: GAElem,
    ext: Vec<GAElem>,
    chars: Mutex<HashMap<Weight, GAElem>>,
}

/// `sgn(w)` — the determinant of the signed permutation matrix.
pub fn sgn(w: &SignedPerm) -> i64 {
    w.sgn()
}

/// `w(x)`.
pub fn act(w: &SignedPerm, x: &GAElem) -> Result<GAElem> {
    x.act(w)
}

/// `num / den`, exactly.
pub fn ga_div_exact(num: &GAElem, den: &GAElem) -> Result<GAElem> {
    num.div_exact(den)
}

/// Evaluates `x` at `q^{1/4} = s`, `e^{εᵢ/2} = half_point[i]`.
pub fn ga_eval(x: &GAElem, s: &Rational, half_point: &[Rational]) -> Result<Rational> {
    x.eval(s, half_point)
}

fn binomial(half_root: &Weight) -> GAElem {
    GAElem::exp(half_root.clone()).sub(&GAElem::exp(half_root.neg()))
}

fn antisym_chunk(x: &GAElem, ws: &[SignedPerm]) -> HashMap<Weight, QLaurent> {
    let mut acc: HashMap<Weight, QLaurent> = HashMap::new();
    for w in ws {
        let negate = w.sgn() < 0;
        for (v, c) in x.terms() {
            let key = w.act_weight(v);
            use std::collections::hash_map::Entry;
            match acc.entry(key) {
                Entry::Occupied(mut o) => {
                    let s = if negate { o.get().sub(c) } else { o.get().add(c) };
                    if s.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = s;
                    }
                }
                Entry::Vacant(e) => {
                    e.insert(if negate { c.neg() } else { c.clone() });
                }
            }
        }
    }
    acc
}

fn merge_into(mut a: HashMap<Weight, QLaurent>, b: HashMap<Weight, QLaurent>) -> HashMap<Weight, QLaurent> {
    use std::collections::hash_map::Entry;
    for (w, c) in b {
        match a.entry(w) {
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }
    a
}

impl WeylContext {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let group = enumerate_weyl(rs)?;
        let half_roots: Vec<Weight> = rs
            .positive_roots
            .iter()
            .map(|a| Weight::from_doubled(a.doubled().iter().map(|x| x / 2)))
            .collect();
        let delta = half_roots
            .iter()
            .fold(GAElem::one(rs.rank), |acc, h| acc.mul(&binomial(h)));
        let ext = exterior_powers(rs);
        Ok(WeylContext {
            rs: rs.clone(),
            generators: simple_reflections(rs),
            group,
            half_roots,
            delta,
            ext,
            chars: Mutex::new(HashMap::new()),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn group(&self) -> &[SignedPerm] {
        &self.group
    }

    fn check_rank(&self, x: &GAElem) -> Result<()> {
        if x.rank() != self.rs.rank {
            return Err(Error::RankMismatch {
                left: x.rank(),
                right: self.rs.rank,
            });
        }
        Ok(())
    }

    /// `𝐀(x) = Σ_w sgn(w) w(x)`, summed in parallel chunks of `W`.
    pub fn antisymmetrize(&self, x: &GAElem) -> Result<GAElem> {
        self.check_rank(x)?;
        let chunk = (self.group.len() / rayon::current_num_threads().max(1)).clamp(8, 256);
        let acc = self
            .group
            .par_chunks(chunk)
            .map(|ws| antisym_chunk(x, ws))
            .reduce(HashMap::new, merge_into);
        Ok(GAElem::from_hash(self.rs.rank, acc))
    }

    /// Single-threaded reference for [`Self::antisymmetrize`].
    pub fn antisymmetrize_sequential(&self, x: &GAElem) -> Result<GAElem> {
        self.check_rank(x)?;
        Ok(GAElem::from_hash(self.rs.rank, antisym_chunk(x, &self.group)))
    }

    /// `𝐀(e^μ)` for a single weight.
    pub fn alternant(&self, mu: &Weight) -> Result<GAElem> {
        self.antisymmetrize_sequential(&GAElem::exp(mu.clone()))
    }

    pub fn delta(&self) -> &GAElem {
        &self.delta
    }

    pub fn weyl_denominator(&self, mode: DenominatorMode) -> Result<GAElem> {
        match mode {
            DenominatorMode::Product => Ok(self.delta.clone()),
            DenominatorMode::Alternant => self.alternant(&self.rs.rho),
        }
    }

    /// `x / Δ`, dividing by one binomial factor `e^{α/2} − e^{−α/2}` at a
    /// time (each step is exact whenever the total division is).
    pub fn divide_by_delta(&self, x: &GAElem) -> Result<GAElem> {
        self.check_rank(x)?;
        let mut cur = x.clone();
        for h in &self.half_roots {
            cur = cur.div_exact(&binomial(h))?;
        }
        Ok(cur)
    }

    /// `x · Δ`, one binomial factor at a time.
    pub fn multiply_by_delta(&self, x: &GAElem) -> Result<GAElem> {
        self.check_rank(x)?;
        Ok(self.half_roots.iter().fold(x.clone(), |acc, h| acc.mul(&binomial(h))))
    }

    /// `χ(λ) = 𝐀(e^{λ+ρ}) / Δ`.
    pub fn weyl_character(&self, lam: &Weight) -> Result<GAElem> {
        if lam.rank() != self.rs.rank {
            return Err(Error::RankMismatch {
                left: lam.rank(),
                right: self.rs.rank,
            });
        }
        if !self.rs.is_dominant(lam) {
            return Err(Error::NotDominant(lam.to_string()));
        }
        if let Some(c) = self.chars.lock().expect("cache lock").get(lam) {
            return Ok(c.clone());
        }
        let num = self.alternant(&lam.add(&self.rs.rho))?;
        let chi = self.divide_by_delta(&num)?;
        self.chars
            .lock()
            .expect("cache lock")
            .insert(lam.clone(), chi.clone());
        Ok(chi)
    }

    /// `e_r = Ch(⋀^r V)`; zero outside `0…d`.
    pub fn ext_power_char(&self, r: i64) -> GAElem {
        if r < 0 || r as usize >= self.ext.len() {
            GAElem::zero(self.rs.rank)
        } else {
            self.ext[r as usize].clone()
        }
    }

    /// Invariance under every simple reflection (hence under all of `W`).
    pub fn is_w_invariant(&self, x: &GAElem) -> bool {
        self.generators
            .iter()
            .all(|s| x.act(s).map(|y| &y == x).unwrap_or(false))
    }

    /// Invariance checked element by element over the whole group.
    pub fn is_w_invariant_full(&self, x: &GAElem) -> bool {
        self.group.iter().all(|w| x.act(w).map(|y| &y == x).unwrap_or(false))
    }

    /// `w(x) = sgn(w)·x` for every `w ∈ W`.
    pub fn is_alternating(&self, x: &GAElem) -> bool {
        self.group.iter().all(|w| {
            let y = x.act(w).expect("rank checked");
            if w.sgn() > 0 {
                &y == x
            } else {
                y == x.neg()
            }
        })
    }
}

/// `Σ_r e_r t^r = (1+t)^{[B]} ∏ᵢ (1 + t e^{εᵢ})(1 + t e^{−εᵢ})`.
fn exterior_powers(rs: &RootSystem) -> Vec<GAElem> {
    let n = rs.rank;
    let mut coeffs = vec![GAElem::one(n)];
    let times_linear = |c: &mut Vec<GAElem>, x: GAElem| {
        let mut next = vec![GAElem::zero(n); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i] = next[i].add(a);
            next[i + 1] = next[i + 1].add(&a.mul(&x));
        }
        *c = next;
    };
    if rs.lie_type == LieType::B {
        times_linear(&mut coeffs, GAElem::one(n));
    }
    for i in 0..n {
        times_linear(&mut coeffs, GAElem::exp(Weight::unit(n, i)));
        times_linear(&mut coeffs, GAElem::exp(Weight::unit(n, i).neg()));
    }
    debug_assert_eq!(coeffs.len(), rs.dim_natural + 1);
    coeffs
}

/// `𝐀(x)` for a root system, enumerating `W` on the fly.
pub fn antisymmetrize(x: &GAElem, rs: &RootSystem) -> Result<GAElem> {
    WeylContext::new(rs)?.antisymmetrize(x)
}

pub fn weyl_denominator(rs: &RootSystem, mode: DenominatorMode) -> Result<GAElem> {
    WeylContext::new(rs)?.weyl_denominator(mode)
}

pub fn weyl_character(rs: &RootSystem, lam: &Weight) -> Result<GAElem> {
    WeylContext::new(rs)?.weyl_character(lam)
}

/// `e_r`; `IndexOutOfRange` outside `0…d` (the context method returns 0
/// there instead, following the convention `e_r = 0`).
pub fn ext_power_char(rs: &RootSystem, r: i64) -> Result<GAElem> {
    if r < 0 || r as usize > rs.dim_natural {
        return Err(Error::IndexOutOfRange {
            index: r,
            range: format!("0..={}", rs.dim_natural),
        });
    }
    Ok(exterior_powers(rs).swap_remove(r as usize))
}

/// `∏_{α>0}(λ+ρ, α)/(ρ, α)` — the Weyl dimension formula.
pub use crate::root_data::weyl_dimension;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::build_root_system;

    fn ctx(t: LieType, n: usize) -> WeylContext {
        WeylContext::new(&build_root_system(t, n).unwrap()).unwrap()
    }

    fn ones(n: usize) -> Vec<Rational> {
        vec![Rational::one(); n]
    }

    #[test]
    fn denominator_modes_agree_b2() {
        let c = ctx(LieType::B, 2);
        let alt = c.weyl_denominator(DenominatorMode::Alternant).unwrap();
        assert_eq!(alt, *c.delta());
        assert_eq!(alt.len(), 8);
        let (w, coeff) = alt.lead().unwrap();
        assert_eq!(*w, c.root_system().rho);
        assert!(coeff.is_one());
        for s in simple_reflections(c.root_system()) {
            assert_eq!(alt.act(&s).unwrap(), alt.neg());
        }
    }

    #[test]
    fn natural_character_b2() {
        let c = ctx(LieType::B, 2);
        let chi = c.weyl_character(&Weight::from_integers([1, 0])).unwrap();
        let expect = [[2, 0], [0, 2], [0, 0], [0, -2], [-2, 0]]
            .iter()
            .fold(GAElem::zero(2), |acc, d| acc.add(&GAElem::exp(Weight::from_doubled(*d))));
        assert_eq!(chi, expect);
        assert_eq!(chi, c.ext_power_char(1));
        assert_eq!(chi.eval(&Rational::one(), &ones(2)).unwrap(), Rational::from_integer(5));
    }

    #[test]
    fn spin_character_b2() {
        let c = ctx(LieType::B, 2);
        let chi = c.weyl_character(&Weight::from_doubled([1, 1])).unwrap();
        assert_eq!(chi.len(), 4);
        assert!(chi.terms().all(|(w, c)| w.is_spin() && c.is_one()));
        assert_eq!(chi.eval(&Rational::one(), &ones(2)).unwrap(), Rational::from_integer(4));
    }

    #[test]
    fn c3_small_characters() {
        let c = ctx(LieType::C, 3);
        let chi = c.weyl_character(&Weight::from_integers([1, 0, 0])).unwrap();
        assert_eq!(chi.len(), 6);
        assert_eq!(chi.eval(&Rational::one(), &ones(3)).unwrap(), Rational::from_integer(6));
        let w2 = c.weyl_character(&Weight::from_integers([1, 1, 0])).unwrap();
        assert_eq!(c.ext_power_char(2), w2.add(&GAElem::one(3)));
        assert!(c.weyl_character(&Weight::from_integers([0, 1, 0])).is_err());
    }

    #[test]
    fn lemma_vanishing_on_walls() {
        let c = ctx(LieType::D, 4);
        // (λ, ε₂ − ε₃) = 0
        let x = c.alternant(&Weight::from_integers([3, 1, 1, 0])).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn delta_vanishes_on_hyperplane() {
        let c = ctx(LieType::C, 3);
        let pt = [Rational::from_integer(2), Rational::from_integer(2), Rational::from_integer(3)];
        assert!(c.delta().eval(&Rational::one(), &pt).unwrap().is_zero());
    }

    #[test]
    fn ext_power_conventions() {
        let c = ctx(LieType::B, 3);
        assert_eq!(c.ext_power_char(0), GAElem::one(3));
        assert!(c.ext_power_char(-1).is_zero());
        assert!(c.ext_power_char(8).is_zero());
        for r in 0..=7 {
            assert_eq!(c.ext_power_char(r), c.ext_power_char(7 - r));
        }
        assert!(ext_power_char(c.root_system(), 8).is_err());
    }

    #[test]
    fn parallel_equals_sequential() {
        let c = ctx(LieType::B, 3);
        let x = GAElem::exp(Weight::from_integers([2, 1, 0]))
            .add(&GAElem::exp(Weight::from_doubled([1, -3, 1])).scale(&QLaurent::q_pow(-2)));
        assert_eq!(c.antisymmetrize(&x).unwrap(), c.antisymmetrize_sequential(&x).unwrap());
    }
}
