//! Eigenvalues of `C_{n,ℓ}` on simple modules: the closed eigenvalue sum
//! and the evaluation of the Harish-Chandra image at `λ + ρ`.
//!
//! The closed sum has removable `0/0` terms at many dominant weights (for
//! instance every `λ` with `λₙ = 0` in types B and D). [`eigenvalue_direct`]
//! therefore evaluates it as the limit `x → 1` of the same sum with
//! `q^{(2ε_a, λ+ρ)}` replaced by `q^{(2ε_a, λ+ρ)} x^{a}`, using truncated
//! Laurent series in `h = x − 1`. Where nothing degenerates this coincides
//! with plain evaluation ([`eigenvalue_literal`]).

use super::series::Series;
use super::Engine;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::root_data::{LieType, RootSystem, Weight};

fn check_dominant(rs: &RootSystem, lam: &Weight) -> Result<()> {
    if lam.rank() != rs.rank {
        return Err(Error::RankMismatch {
            left: lam.rank(),
            right: rs.rank,
        });
    }
    if !rs.is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_string()));
    }
    Ok(())
}

/// The point `e^{ε_a/2} ↦ q^{(ε_a, λ+ρ)} = s^{4(λ+ρ)_a}` as values for
/// [`crate::weyl_charring::GAElem::eval`].
pub fn hc_point(rs: &RootSystem, lam: &Weight, s: &Rational) -> Result<Vec<Rational>> {
    let shifted = lam.add(&rs.rho);
    shifted
        .doubled()
        .iter()
        .map(|&d| s.pow(2 * d as i64))
        .collect()
}

/// Per-index data: `y_a = (2ε_a, λ+ρ)` (an integer), `n_a = (ε_a, ε_a)`,
/// and the perturbation exponent `m_a = a`.
struct Index {
    y: i64,
    n: i64,
    m: i64,
}

fn indices(rs: &RootSystem, lam: &Weight) -> Vec<Index> {
    let shifted = lam.add(&rs.rho);
    rs.index_set
        .iter()
        .map(|&a| {
            let (y, n) = match a {
                0 => (0, 0),
                a if a > 0 => (shifted.doubled()[a as usize - 1] as i64, 1),
                a => (-(shifted.doubled()[(-a) as usize - 1] as i64), 1),
            };
            Index { y, n, m: a as i64 }
        })
        .collect()
}

/// A factor `Σ cᵢ x^{mᵢ}` of one summand, as `(coefficient, x-exponent)`.
type Binomials = Vec<(Rational, i64)>;

/// Numerator and denominator factors of the summand for index `a`.
fn summand_factors(rs: &RootSystem, idx: &[Index], ai: usize, ell: u32, q: &Rational) -> Result<(Vec<Binomials>, Vec<Binomials>)> {
    let qp = |e: i64| q.pow(e);
    let a = &idx[ai];
    let c = rs.c_n;
    let xa = qp(a.y + a.n)?;
    let xa2 = &xa * &xa;
    let one = Rational::one();
    let mut num: Vec<Binomials> = vec![vec![(qp(c - a.n)?, 0)]];
    let mut den: Vec<Binomials> = Vec::new();
    // f(a) = (X² − 1 + extra)/(X² − 1) in a type-dependent form
    let x2m1: Binomials = vec![(xa2.clone(), 2 * a.m), (-&one, 0)];
    match rs.lie_type {
        LieType::B if a.m != 0 => {
            let qd = q - &q.recip()?;
            num.push(vec![(xa2.clone(), 2 * a.m), (-&one, 0), (&qd * &xa, a.m)]);
            den.push(x2m1);
        }
        LieType::B => {}
        LieType::C => {
            num.push(vec![(xa2.clone(), 2 * a.m), (-q.pow(-2)?, 0)]);
            den.push(x2m1);
        }
        LieType::D => {
            num.push(vec![(xa2.clone(), 2 * a.m), (-q.pow(2)?, 0)]);
            den.push(x2m1);
        }
    }
    let qd = q - &q.recip()?;
    for _ in 0..ell {
        num.push(vec![(&xa * &qp(-c)?, a.m), (-&one, 0)]);
        den.push(vec![(qd.clone(), 0)]);
    }
    for (bi, b) in idx.iter().enumerate() {
        if bi == ai {
            continue;
        }
        num.push(vec![(xa.clone(), a.m), (-qp(b.y - b.n)?, b.m)]);
        den.push(vec![(xa.clone(), a.m), (-qp(b.y + b.n)?, b.m)]);
    }
    Ok((num, den))
}

fn eval_at_one(f: &Binomials) -> Rational {
    f.iter().fold(Rational::zero(), |acc, (c, _)| &acc + c)
}

/// Plain evaluation of the closed eigenvalue sum; `DegenerateEvaluation`
/// as soon as any denominator vanishes.
pub fn eigenvalue_literal(rs: &RootSystem, lam: &Weight, ell: u32, s: &Rational) -> Result<Rational> {
    check_dominant(rs, lam)?;
    if s.is_zero() {
        return Err(Error::ZeroBase);
    }
    let q = s.pow(4)?;
    let idx = indices(rs, lam);
    let mut total = Rational::zero();
    for ai in 0..idx.len() {
        let (num, den) = summand_factors(rs, &idx, ai, ell, &q)?;
        let mut t = num.iter().fold(Rational::one(), |acc, f| &acc * &eval_at_one(f));
        for f in &den {
            let d = eval_at_one(f);
            if d.is_zero() {
                return Err(Error::DegenerateEvaluation(format!(
                    "summand {} of the eigenvalue sum has a zero denominator at {lam}",
                    rs.index_set[ai]
                )));
            }
            t = &t / &d;
        }
        total += &t;
    }
    Ok(total)
}

/// The closed eigenvalue sum, with removable singularities resolved by an
/// exact limit.
pub fn eigenvalue_direct(rs: &RootSystem, lam: &Weight, ell: u32, s: &Rational) -> Result<Rational> {
    match eigenvalue_literal(rs, lam, ell, s) {
        Err(Error::DegenerateEvaluation(_)) => eigenvalue_limit(rs, lam, ell, s),
        other => other,
    }
}

fn eigenvalue_limit(rs: &RootSystem, lam: &Weight, ell: u32, s: &Rational) -> Result<Rational> {
    let q = s.pow(4)?;
    let idx = indices(rs, lam);
    let mut items = Vec::with_capacity(idx.len());
    for ai in 0..idx.len() {
        let (num, den) = summand_factors(rs, &idx, ai, ell, &q)?;
        // valuation of the summand decides how many orders are needed:
        // terms h^v … h^0, nothing at all when v > 0
        let mut v = 0;
        let mut vanishes = false;
        for f in &num {
            match Series::valuation_of(f) {
                Some(x) => v += x,
                None => vanishes = true,
            }
        }
        if vanishes {
            continue;
        }
        for f in &den {
            v -= Series::valuation_of(f).ok_or_else(|| {
                Error::DegenerateEvaluation(format!("identically vanishing factor at {lam}"))
            })?;
        }
        if v > 0 {
            continue;
        }
        let prec = (1 - v) as usize;
        let mut t = Series::constant(Rational::one(), prec);
        for f in &num {
            t = t.mul(&Series::from_binomials(f, prec));
        }
        for f in &den {
            t = t.div(&Series::from_binomials(f, prec))?;
        }
        items.push(t);
    }
    let (principal, constant) = Series::sum_principal_and_constant(&items)?;
    if principal.iter().any(|c| !c.is_zero()) {
        return Err(Error::DegenerateEvaluation(format!(
            "the eigenvalue sum has a genuine pole at {lam}"
        )));
    }
    Ok(constant)
}

/// `ω_λ(C_{n,ℓ})` from the Harish-Chandra image: the numerator evaluated at
/// `e^{ε_a} ↦ q^{(2ε_a, λ+ρ)}`, divided by `(q⁻¹ − q)^ℓ` at `q = s⁴`. For
/// `ℓ = 0` this is `G_{n,0}`, the quantum dimension of the natural module.
pub fn eigenvalue_via_hc(engine: &Engine, lam: &Weight, ell: u32, s: &Rational) -> Result<Rational> {
    let rs = engine.root_system();
    check_dominant(rs, lam)?;
    let pt = hc_point(rs, lam, s)?;
    if ell == 0 {
        return engine.ch_g_via_antisym(0)?.body.eval(s, &pt);
    }
    let num = engine.hc_numerator(ell)?.eval(s, &pt)?;
    let den = super::hc_denominator(ell).eval(s)?;
    if den.is_zero() {
        return Err(Error::DegenerateEvaluation("(q^-1 - q)^l vanishes at s^4 = 1".into()));
    }
    Ok(&num / &den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;
    use crate::root_data::build_root_system;

    #[test]
    fn limit_matches_literal_when_regular() {
        let rs = build_root_system(LieType::C, 3).unwrap();
        let lam = Weight::from_integers([3, 1, 1]);
        let s = rat(2, 1);
        for ell in 1..=3 {
            let lit = eigenvalue_literal(&rs, &lam, ell, &s).unwrap();
            assert_eq!(eigenvalue_limit(&rs, &lam, ell, &s).unwrap(), lit);
        }
    }

    #[test]
    fn zero_weight_is_degenerate_in_type_d() {
        let rs = build_root_system(LieType::D, 4).unwrap();
        let lam = Weight::zero(4);
        assert!(matches!(
            eigenvalue_literal(&rs, &lam, 1, &rat(2, 1)),
            Err(Error::DegenerateEvaluation(_))
        ));
        assert!(eigenvalue_direct(&rs, &lam, 1, &rat(2, 1)).is_ok());
    }

    #[test]
    fn agrees_with_hc_route_b2() {
        let rs = build_root_system(LieType::B, 2).unwrap();
        let eng = Engine::new(&rs).unwrap();
        let s = rat(2, 1);
        for lam in [[0, 0], [1, 0], [2, 1], [3, 3], [1, 1]] {
            let lam = Weight::from_integers(lam);
            for ell in 0..=2 {
                assert_eq!(
                    eigenvalue_direct(&rs, &lam, ell, &s).unwrap(),
                    eigenvalue_via_hc(&eng, &lam, ell, &s).unwrap(),
                    "λ={lam} ℓ={ell}"
                );
            }
        }
    }

    #[test]
    fn rejects_non_dominant() {
        let rs = build_root_system(LieType::B, 2).unwrap();
        let lam = Weight::from_integers([0, 1]);
        assert!(matches!(
            eigenvalue_direct(&rs, &lam, 1, &rat(2, 1)),
            Err(Error::NotDominant(_))
        ));
    }
}
