//! The hook expansion of `G_{n,k}` rewritten in the symbols `E_r = e_r`,
//! and its triangular inversion.
//!
//! Writing `g_k = L_k E_k + R_k(E₁…E_{k−1})` with `L_k` a nonzero Laurent
//! polynomial, induction on `k` gives identities
//!
//! ```text
//! D_k · E_k = N_k(G₁…G_k)
//! ```
//!
//! with `D_k ∈ ℚ[q^{±1/4}]` and `N_k` a polynomial whose `G_k`-coefficient
//! is `D_k / L_k`. Keeping `D_k` explicit keeps everything inside Laurent
//! polynomials; `c_k = 1/L_k`.

use serde::Serialize;

use super::jt::{jt_character_e, reduction_convention, EBasisExpr};
use super::partition::Partition;
use crate::casimir::Engine;
use crate::error::{Error, Result};
use crate::exact_arith::{det_exact, EPoly, QLaurent};
use crate::root_data::LieType;

/// `g_k` in the E-basis, built from the hook expansion of `Ch G_{n,k}`.
///
/// Characters of hooks are replaced by their Jacobi–Trudi forms. In type D
/// at `k = n` the expansion contains `χ(λ) + χ(λ̄)` for the hook `λ` with
/// `n` parts; that sum is exactly what the Jacobi–Trudi determinant of `λ`
/// produces, so the barred constituent is absorbed rather than given its
/// own symbol.
pub fn g_in_e_basis(engine: &Engine, k: u32) -> Result<EBasisExpr> {
    let rs = engine.root_system();
    let n = rs.rank;
    if k == 0 || k as usize > n {
        return Err(Error::IndexOutOfRange {
            index: k as i64,
            range: format!("1..={n}"),
        });
    }
    let mut poly = EPoly::zero(n);
    for (c, w) in engine.hook_terms(k)? {
        if w.is_zero() {
            poly = poly.add(&EPoly::constant(n, c));
            continue;
        }
        if rs.lie_type == LieType::D && w.doubled()[n - 1] < 0 {
            // already contained in the JT determinant of the unbarred hook
            continue;
        }
        let lam = Partition::from_weight(&w)
            .ok_or_else(|| Error::NotDominant(format!("hook weight {w} is not a partition")))?;
        poly = poly.add(&jt_character_e(engine.weyl(), &lam)?.scale(&c));
    }
    Ok(EBasisExpr {
        poly,
        reduction_convention: reduction_convention(rs),
    })
}

/// `c_k = numerator / denominator`. When `L_k` is a monomial the division
/// is carried out and `denominator = 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Coefficient {
    pub numerator: QLaurent,
    pub denominator: QLaurent,
}

impl Coefficient {
    fn inverse_of(l: &QLaurent) -> Self {
        match QLaurent::one().div_exact(l) {
            Ok(inv) if l.is_monomial() => Coefficient {
                numerator: inv,
                denominator: QLaurent::one(),
            },
            _ => Coefficient {
                numerator: QLaurent::one(),
                denominator: l.clone(),
            },
        }
    }

    pub fn is_nonzero(&self) -> bool {
        !self.numerator.is_zero() && !self.denominator.is_zero()
    }
}

/// One step of the inversion: `den · E_k = num(G₁…G_k)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolvedStep {
    pub k: u32,
    /// The E-basis expression `g_k` the step inverts.
    pub g: EPoly,
    /// `L_k`, the coefficient of `E_k` in `g_k`.
    pub leading: QLaurent,
    pub c: Coefficient,
    /// `N_k`, a polynomial in `G₁…G_k` (symbol `i` is `G_{i+1}`).
    pub num: EPoly,
    /// `D_k`.
    pub den: QLaurent,
    /// `Q_k · D_k = N_k − (D_k/L_k) G_k`, a polynomial in `G₁…G_{k−1}`.
    pub q_num: EPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TriangularSolution {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub steps: Vec<SolvedStep>,
}

impl TriangularSolution {
    /// Substitutes `G_j ↦ g_j(E)` into every `N_k` and checks
    /// `N_k(g) = D_k E_k` exactly.
    pub fn round_trip(&self) -> Result<Vec<bool>> {
        let n = self.rank;
        let mut gs: Vec<EPoly> = self.steps.iter().map(|s| s.g.clone()).collect();
        while gs.len() < n {
            gs.push(EPoly::zero(n));
        }
        self.steps
            .iter()
            .map(|s| {
                let lhs = s.num.substitute(&gs)?;
                let rhs = EPoly::symbol(n, s.k as usize - 1)?.scale(&s.den);
                Ok(lhs == rhs)
            })
            .collect()
    }
}

/// Splits `g = A·E_i + B` with `B` free of `E_i`; requires `deg_{E_i} g ≤ 1`.
fn split_linear(g: &EPoly, i: usize) -> Result<(EPoly, EPoly)> {
    let n = g.nsyms();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (e, c) in g.terms() {
        match e[i] {
            0 => b.push((e.clone(), c.clone())),
            1 => {
                let mut e2 = e.clone();
                e2[i] = 0;
                a.push((e2, c.clone()));
            }
            _ => return Err(Error::SingularLeadingCoefficient(i + 1)),
        }
    }
    Ok((EPoly::from_terms(n, a)?, EPoly::from_terms(n, b)?))
}

/// Inverts `g₁…g_n` triangularly. Fails with `SingularLeadingCoefficient(k)`
/// when `g_k` involves a symbol above `E_k`, is not linear in `E_k`, or has
/// a non-constant or zero `E_k` coefficient.
pub fn triangular_solve(engine: &Engine) -> Result<TriangularSolution> {
    let rs = engine.root_system();
    let n = rs.rank;
    let mut steps: Vec<SolvedStep> = Vec::with_capacity(n);
    for k in 1..=n as u32 {
        let ki = k as usize - 1;
        let g = g_in_e_basis(engine, k)?.poly;
        if g.max_symbol().is_some_and(|m| m > ki) {
            return Err(Error::SingularLeadingCoefficient(k as usize));
        }
        let (a, rest) = split_linear(&g, ki)?;
        let leading = match a.max_symbol() {
            None => a.coeff(&vec![0; n]),
            Some(_) => return Err(Error::SingularLeadingCoefficient(k as usize)),
        };
        if leading.is_zero() {
            return Err(Error::SingularLeadingCoefficient(k as usize));
        }
        // L_k E_k = G_k − R_k(E_<k); clear the denominators D_j of E_j.
        let maxdeg: Vec<u32> = (0..ki).map(|j| rest.degree_in(j)).collect();
        let mult = maxdeg
            .iter()
            .zip(&steps)
            .fold(QLaurent::one(), |acc, (&d, s)| acc.mul(&s.den.pow(d)));
        let mut q_num = EPoly::zero(n);
        for (e, c) in rest.terms() {
            let mut t = EPoly::constant(n, c.clone());
            for j in 0..ki {
                t = t.mul(&steps[j].num.pow(e[j]));
                t = t.scale(&steps[j].den.pow(maxdeg[j] - e[j]));
            }
            q_num = q_num.sub(&t);
        }
        let num = EPoly::symbol(n, ki)?.scale(&mult).add(&q_num);
        steps.push(SolvedStep {
            k,
            g,
            c: Coefficient::inverse_of(&leading),
            den: leading.mul(&mult),
            leading,
            num,
            q_num,
        });
    }
    Ok(TriangularSolution {
        lie_type: rs.lie_type,
        rank: n,
        steps,
    })
}

/// `∂g_i/∂E_j` for `i, j = 1…n`.
pub fn jacobian(solution: &TriangularSolution) -> Vec<Vec<EPoly>> {
    solution
        .steps
        .iter()
        .map(|s| (0..solution.rank).map(|j| s.g.partial(j)).collect())
        .collect()
}

/// Checks that the Jacobian is lower triangular with constant diagonal
/// `L_i` and returns its determinant `∏ L_i`.
pub fn jacobian_determinant(solution: &TriangularSolution) -> Result<Option<QLaurent>> {
    let jac = jacobian(solution);
    let n = solution.rank;
    for (i, row) in jac.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let ok = match j.cmp(&i) {
                std::cmp::Ordering::Greater => x.is_zero(),
                std::cmp::Ordering::Equal => *x == EPoly::constant(n, solution.steps[i].leading.clone()),
                std::cmp::Ordering::Less => true,
            };
            if !ok {
                return Ok(None);
            }
        }
    }
    let det = det_exact(&jac, &EPoly::one(n))?;
    Ok(det.max_symbol().is_none().then(|| det.coeff(&vec![0; n])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Rational;
    use crate::root_data::build_root_system;

    fn engine(t: LieType, n: usize) -> Engine {
        Engine::new(&build_root_system(t, n).unwrap()).unwrap()
    }

    #[test]
    fn first_step_is_a_monomial() {
        for (t, n) in [(LieType::B, 2), (LieType::B, 3), (LieType::C, 3), (LieType::D, 4)] {
            let eng = engine(t, n);
            let sol = triangular_solve(&eng).unwrap();
            let s1 = &sol.steps[0];
            assert!(s1.q_num.is_zero(), "{t}{n}");
            assert!(s1.c.numerator.is_monomial() && s1.c.denominator.is_one());
            if t == LieType::B {
                assert_eq!(s1.c.numerator, QLaurent::q_pow(1 - 2 * n as i32));
            }
        }
    }

    #[test]
    fn leading_coefficients_type_b() {
        let eng = engine(LieType::B, 3);
        let sol = triangular_solve(&eng).unwrap();
        for s in &sol.steps {
            let k = s.k as i32;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let expect = (0..k).fold(QLaurent::zero(), |acc, r| acc.add(&QLaurent::q_pow(5 - 2 * r)));
            assert_eq!(s.leading, expect.scale(&Rational::from_integer(sign)));
        }
    }

    #[test]
    fn round_trip_and_jacobian() {
        for (t, n) in [(LieType::B, 2), (LieType::C, 3), (LieType::D, 4)] {
            let eng = engine(t, n);
            let sol = triangular_solve(&eng).unwrap();
            assert!(sol.round_trip().unwrap().iter().all(|&b| b), "{t}{n}");
            let det = jacobian_determinant(&sol).unwrap().unwrap();
            let prod = sol.steps.iter().fold(QLaurent::one(), |acc, s| acc.mul(&s.leading));
            assert_eq!(det, prod);
        }
    }

    #[test]
    fn rejects_out_of_range() {
        let eng = engine(LieType::C, 3);
        assert!(g_in_e_basis(&eng, 0).is_err());
        assert!(g_in_e_basis(&eng, 4).is_err());
    }
}
