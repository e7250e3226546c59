//! Numeric evaluation of the rational-function forms of `G_{n,k}` and
//! `C⁰_{n,ℓ}`. These never manipulate rational functions symbolically;
//! they evaluate at a rational point and so serve as an independent oracle
//! for the group-algebra constructions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_arith::{EPoly, QLaurent, Rational};
use crate::root_data::{LieType, RootSystem};

struct Point {
    q: Rational,
    l: BTreeMap<i32, Rational>,
}

fn degenerate(what: &str) -> Error {
    Error::DegenerateEvaluation(format!("vanishing denominator: {what}"))
}

impl Point {
    /// `L_a = point[a−1]`, `L_{−a} = L_a⁻¹`, `q = s⁴`.
    fn new(rs: &RootSystem, s: &Rational, point: &[Rational]) -> Result<Self> {
        if point.len() != rs.rank {
            return Err(Error::LengthMismatch {
                left: point.len(),
                right: rs.rank,
            });
        }
        if s.is_zero() || point.iter().any(Rational::is_zero) {
            return Err(Error::ZeroBase);
        }
        let mut l = BTreeMap::new();
        for (i, x) in point.iter().enumerate() {
            l.insert(i as i32 + 1, x.clone());
            l.insert(-(i as i32) - 1, x.recip()?);
        }
        Ok(Point { q: s.pow(4)?, l })
    }

    fn div(num: Rational, den: &Rational, what: &str) -> Result<Rational> {
        if den.is_zero() {
            return Err(degenerate(what));
        }
        Ok(&num / den)
    }

    /// `P_{n,a} = ∏_{b ≠ ±a} (qL_a − q⁻¹L_b)/(L_a − L_b)`.
    fn p(&self, a: i32) -> Result<Rational> {
        let qi = self.q.recip()?;
        let la = &self.l[&a];
        let mut acc = Rational::one();
        for (b, lb) in &self.l {
            if *b == a || *b == -a {
                continue;
            }
            let num = &(&self.q * la) - &(&qi * lb);
            acc = &acc * &Self::div(num, &(la - lb), "L_a - L_b")?;
        }
        Ok(acc)
    }

    /// The per-type prefactor multiplying `L_a^k P_{n,a}`.
    fn prefactor(&self, t: LieType, a: i32) -> Result<Rational> {
        let q = &self.q;
        let qi = q.recip()?;
        let la = &self.l[&a];
        let lai = la.recip()?;
        let den = la - &lai;
        match t {
            LieType::B => {
                let num = &(&(&(q * la) - &(&qi * &lai)) + q) - &qi;
                Self::div(num, &den, "L_a - L_a^-1")
            }
            LieType::C => {
                let q2 = q * q;
                let num = &(&q2 * la) - &(&q2.recip()? * &lai);
                Self::div(num, &den, "L_a - L_a^-1")
            }
            LieType::D => Ok(Rational::one()),
        }
    }
}

/// The rational form of `G_{n,k}` at `L_a = point[a−1]`, `q = s⁴`:
/// `[q^{−k}] + Σ_{a∈I} pre_a L_a^k P_{n,a}`, the bracket only in type B.
pub fn g_rational_eval(rs: &RootSystem, k: u32, s: &Rational, point: &[Rational]) -> Result<Rational> {
    let pt = Point::new(rs, s, point)?;
    let mut total = if rs.lie_type == LieType::B {
        pt.q.pow(-(k as i64))?
    } else {
        Rational::zero()
    };
    for &a in pt.l.keys() {
        let term = &(&pt.prefactor(rs.lie_type, a)? * &pt.l[&a].pow(k as i64)?) * &pt.p(a)?;
        total += &term;
    }
    Ok(total)
}

/// The rational form of `C⁰_{n,ℓ}`:
/// `Σ_a pre_a ((q^{1−c_n} L_a − 1)/(q − q⁻¹))^ℓ P_{n,a}`, plus
/// `((q^{−c_n} − 1)/(q − q⁻¹))^ℓ` in type B.
pub fn c0_rational_eval(rs: &RootSystem, ell: u32, s: &Rational, point: &[Rational]) -> Result<Rational> {
    let pt = Point::new(rs, s, point)?;
    let q = &pt.q;
    let qdiff = q - &q.recip()?;
    if qdiff.is_zero() {
        return Err(degenerate("q - q^-1"));
    }
    let shift = q.pow(1 - rs.c_n)?;
    let mut total = Rational::zero();
    if rs.lie_type == LieType::B {
        let base = &(&q.pow(-rs.c_n)? - &Rational::one()) / &qdiff;
        total = base.pow(ell as i64)?;
    }
    for &a in pt.l.keys() {
        let base = &(&(&shift * &pt.l[&a]) - &Rational::one()) / &qdiff;
        let term = &(&pt.prefactor(rs.lie_type, a)? * &base.pow(ell as i64)?) * &pt.p(a)?;
        total += &term;
    }
    Ok(total)
}

/// `q^{2n} ∏_{b∈I}(1 − q⁻¹L_b)/(1 − qL_b) = 1`, checked symbolically in
/// `ℚ[q^{±1/4}][L₁…Lₙ]` after multiplying each `±b` pair by `L_b`.
pub fn unit_product_identity_holds(rs: &RootSystem) -> Result<bool> {
    let n = rs.rank;
    let one = EPoly::one(n);
    let c = |x: QLaurent| EPoly::constant(n, x);
    let mut lhs = c(QLaurent::q_pow(2 * n as i32));
    let mut rhs = one.clone();
    for i in 0..n {
        let l = EPoly::symbol(n, i)?;
        // L·(1 − q⁻¹L)(1 − q⁻¹L⁻¹) = (1 − q⁻¹L)(L − q⁻¹)
        let num = one
            .sub(&l.scale(&QLaurent::q_pow(-1)))
            .mul(&l.sub(&c(QLaurent::q_pow(-1))));
        let den = one
            .sub(&l.scale(&QLaurent::q_pow(1)))
            .mul(&l.sub(&c(QLaurent::q_pow(1))));
        lhs = lhs.mul(&num);
        rhs = rhs.mul(&den);
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;
    use crate::root_data::build_root_system;

    #[test]
    fn degenerate_points_are_reported() {
        let rs = build_root_system(LieType::C, 3).unwrap();
        let pt = [rat(2, 1), rat(2, 1), rat(3, 1)];
        assert!(matches!(
            g_rational_eval(&rs, 1, &rat(2, 1), &pt),
            Err(Error::DegenerateEvaluation(_))
        ));
        let pt = [rat(1, 1), rat(2, 1), rat(3, 1)];
        assert!(matches!(
            g_rational_eval(&rs, 1, &rat(2, 1), &pt),
            Err(Error::DegenerateEvaluation(_))
        ));
    }

    #[test]
    fn unit_product() {
        for (t, n) in [(LieType::B, 2), (LieType::C, 3), (LieType::D, 4)] {
            assert!(unit_product_identity_holds(&build_root_system(t, n).unwrap()).unwrap());
        }
    }
}
