//! Jacobi–Trudi determinants in the exterior-power characters `e_r`.
//!
//! * B, D: `χ(λ) = ½ det(e_{λ'ᵢ−i+j} + e_{λ'ᵢ−i−j+2})`
//! * C:    `χ(λ) = det(e_{λ'ᵢ−i+j} − e_{λ'ᵢ−i−j})`
//!
//! with `1 ≤ i, j ≤ λ₁`. The first column of the B/D matrix is
//! `2e_{λ'ᵢ−i+1}`, so the halving is always exact; it is nevertheless checked
//! coefficient by coefficient.

use serde::Serialize;

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::exact_arith::{det_exact, EPoly, QLaurent, Rational};
use crate::root_data::{LieType, RootSystem};
use crate::weyl_charring::{GAElem, WeylContext};

/// Where to evaluate the determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JtTarget {
    /// Entries are the exterior-power characters in the group algebra.
    GroupAlgebra,
    /// Entries are symbols `E₁…Eₙ` after folding.
    EBasis,
}

/// An expression in the symbols `E₁…Eₙ`, with the folding rules recorded.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EBasisExpr {
    pub poly: EPoly,
    pub reduction_convention: String,
}

pub fn reduction_convention(rs: &RootSystem) -> String {
    format!(
        "e_0 = 1; e_r = 0 for r < 0 or r > {d}; e_r = e_({d}-r) for {n} < r <= {d}",
        d = rs.dim_natural,
        n = rs.rank
    )
}

#[derive(Debug)]
pub enum JtValue {
    GroupAlgebra(GAElem),
    EBasis(EBasisExpr),
}

/// Folds an exterior-power index: `None` for zero, `Some(0)` for one,
/// `Some(i)` for the symbol `Eᵢ` (1-based).
pub fn fold_index(rs: &RootSystem, r: i64) -> Option<usize> {
    let d = rs.dim_natural as i64;
    let n = rs.rank as i64;
    if r < 0 || r > d {
        None
    } else if r > n {
        Some((d - r) as usize)
    } else {
        Some(r as usize)
    }
}

/// `e_r` in the E-basis.
pub fn e_symbol(rs: &RootSystem, r: i64) -> EPoly {
    let n = rs.rank;
    match fold_index(rs, r) {
        None => EPoly::zero(n),
        Some(0) => EPoly::one(n),
        Some(i) => EPoly::symbol(n, i - 1).expect("folded index within rank"),
    }
}

/// The JT matrix as lists of `(sign, index)` pairs; entry `(i, j)` is
/// `Σ sign · e_index`.
pub fn jt_index_matrix(lie_type: LieType, lam: &Partition) -> Vec<Vec<Vec<(i64, i64)>>> {
    let conj = lam.conjugate();
    let m = conj.len();
    (1..=m as i64)
        .map(|i| {
            let li = conj.parts()[i as usize - 1] as i64;
            (1..=m as i64)
                .map(|j| match lie_type {
                    LieType::B | LieType::D => vec![(1, li - i + j), (1, li - i - j + 2)],
                    LieType::C => vec![(1, li - i + j), (-1, li - i - j)],
                })
                .collect()
        })
        .collect()
}

fn check_len(rs: &RootSystem, lam: &Partition) -> Result<()> {
    if lam.len() > rs.rank {
        return Err(Error::PartitionTooLong {
            partition: lam.to_string(),
            rank: rs.rank,
        });
    }
    Ok(())
}

fn halve(c: &QLaurent, at: &dyn std::fmt::Display) -> Result<QLaurent> {
    let two = Rational::from_integer(2);
    let half = Rational::new(1, 2)?;
    for (_, x) in c.terms() {
        let h = x.checked_div(&two)?;
        if !h.is_integer() {
            return Err(Error::HalvingFailed(at.to_string()));
        }
    }
    Ok(c.scale(&half))
}

/// The raw determinant (before any halving) in the E-basis.
pub fn jt_det_ebasis(rs: &RootSystem, lam: &Partition) -> Result<EPoly> {
    check_len(rs, lam)?;
    let n = rs.rank;
    let m: Vec<Vec<EPoly>> = jt_index_matrix(rs.lie_type, lam)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|entry| {
                    entry.into_iter().fold(EPoly::zero(n), |acc, (s, r)| {
                        let e = e_symbol(rs, r);
                        if s > 0 { acc.add(&e) } else { acc.sub(&e) }
                    })
                })
                .collect()
        })
        .collect();
    det_exact(&m, &EPoly::one(n))
}

/// The raw determinant (before any halving) in the group algebra.
pub fn jt_det_ga(ctx: &WeylContext, lam: &Partition) -> Result<GAElem> {
    let rs = ctx.root_system();
    check_len(rs, lam)?;
    let n = rs.rank;
    let m: Vec<Vec<GAElem>> = jt_index_matrix(rs.lie_type, lam)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|entry| {
                    entry.into_iter().fold(GAElem::zero(n), |acc, (s, r)| {
                        let e = ctx.ext_power_char(r);
                        if s > 0 { acc.add(&e) } else { acc.sub(&e) }
                    })
                })
                .collect()
        })
        .collect();
    det_exact(&m, &GAElem::one(n))
}

/// `χ(λ)` by the Jacobi–Trudi formula in the requested ring.
pub fn jt_character(ctx: &WeylContext, lam: &Partition, target: JtTarget) -> Result<JtValue> {
    let rs = ctx.root_system();
    let halving = matches!(rs.lie_type, LieType::B | LieType::D);
    match target {
        JtTarget::EBasis => {
            let det = jt_det_ebasis(rs, lam)?;
            let poly = if halving {
                let terms = det
                    .terms()
                    .map(|(e, c)| Ok((e.clone(), halve(c, lam)?)))
                    .collect::<Result<Vec<_>>>()?;
                EPoly::from_terms(rs.rank, terms)?
            } else {
                det
            };
            Ok(JtValue::EBasis(EBasisExpr {
                poly,
                reduction_convention: reduction_convention(rs),
            }))
        }
        JtTarget::GroupAlgebra => {
            let det = jt_det_ga(ctx, lam)?;
            let body = if halving {
                let terms = det
                    .terms()
                    .map(|(w, c)| Ok((w.clone(), halve(c, lam)?)))
                    .collect::<Result<Vec<_>>>()?;
                GAElem::from_terms(rs.rank, terms)?
            } else {
                det
            };
            Ok(JtValue::GroupAlgebra(body))
        }
    }
}

/// GA-mode convenience wrapper.
pub fn jt_character_ga(ctx: &WeylContext, lam: &Partition) -> Result<GAElem> {
    match jt_character(ctx, lam, JtTarget::GroupAlgebra)? {
        JtValue::GroupAlgebra(g) => Ok(g),
        JtValue::EBasis(_) => unreachable!(),
    }
}

/// E-basis convenience wrapper.
pub fn jt_character_e(ctx: &WeylContext, lam: &Partition) -> Result<EPoly> {
    match jt_character(ctx, lam, JtTarget::EBasis)? {
        JtValue::EBasis(e) => Ok(e.poly),
        JtValue::GroupAlgebra(_) => unreachable!(),
    }
}

/// For a hook `(a, 1^r)` the matrix, after halving its first column in
/// types B and D, is the upper Hessenberg matrix with first row
/// `e_{r+1}, e_{r+2} + e_r, e_{r+3} + e_{r−1}, …` (B, D) or
/// `e_{r+1} − e_{r−1}, e_{r+2} − e_{r−2}, …` (C) and rows
/// `0, …, 0, 1, e₁, e₂, …` below. Compared entry by entry.
pub fn hook_matrix_is_hessenberg(rs: &RootSystem, arm: u32, leg: usize) -> Result<bool> {
    let lam = Partition::hook(arm, leg);
    check_len(rs, &lam)?;
    let idx = jt_index_matrix(rs.lie_type, &lam);
    let n = rs.rank;
    let halving = matches!(rs.lie_type, LieType::B | LieType::D);
    let half = QLaurent::constant(Rational::new(1, 2)?);
    let actual = |i: usize, j: usize| -> EPoly {
        let v = idx[i][j].iter().fold(EPoly::zero(n), |acc, (s, r)| {
            let e = e_symbol(rs, *r);
            if *s > 0 { acc.add(&e) } else { acc.sub(&e) }
        });
        if halving && j == 0 { v.scale(&half) } else { v }
    };
    let r = leg as i64;
    let printed = |i: usize, j: usize| -> EPoly {
        let (i1, j1) = (i as i64 + 1, j as i64 + 1);
        if i1 > 1 {
            return e_symbol(rs, j1 - i1 + 1);
        }
        match rs.lie_type {
            LieType::B | LieType::D if j1 == 1 => e_symbol(rs, r + 1),
            LieType::B | LieType::D => e_symbol(rs, r + j1).add(&e_symbol(rs, r + 2 - j1)),
            LieType::C => e_symbol(rs, r + j1).sub(&e_symbol(rs, r - j1)),
        }
    };
    let m = idx.len();
    Ok((0..m).all(|i| (0..m).all(|j| actual(i, j) == printed(i, j))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::build_root_system;

    fn ctx(t: LieType, n: usize) -> WeylContext {
        WeylContext::new(&build_root_system(t, n).unwrap()).unwrap()
    }

    #[test]
    fn single_box() {
        for (t, n) in [(LieType::B, 2), (LieType::C, 3), (LieType::D, 4)] {
            let c = ctx(t, n);
            let e1 = jt_character_e(&c, &Partition::new(vec![1])).unwrap();
            assert_eq!(e1, EPoly::symbol(n, 0).unwrap());
            assert_eq!(jt_character_ga(&c, &Partition::new(vec![1])).unwrap(), c.ext_power_char(1));
        }
    }

    #[test]
    fn folding() {
        let b3 = build_root_system(LieType::B, 3).unwrap();
        assert_eq!(fold_index(&b3, 5), Some(2));
        assert_eq!(fold_index(&b3, 7), Some(0));
        assert_eq!(fold_index(&b3, 8), None);
        assert_eq!(fold_index(&b3, -1), None);
        let c3 = build_root_system(LieType::C, 3).unwrap();
        assert_eq!(fold_index(&c3, 4), Some(2));
    }

    #[test]
    fn small_partitions_match_weyl() {
        let c = ctx(LieType::C, 3);
        for lam in Partition::enumerate(3, 3) {
            let w = lam.to_weight(3).unwrap();
            assert_eq!(jt_character_ga(&c, &lam).unwrap(), c.weyl_character(&w).unwrap(), "{lam}");
        }
    }

    #[test]
    fn too_long() {
        let c = ctx(LieType::B, 2);
        assert!(matches!(
            jt_character_ga(&c, &Partition::new(vec![1, 1, 1])),
            Err(Error::PartitionTooLong { .. })
        ));
    }

    #[test]
    fn hessenberg_hooks() {
        for (t, n) in [(LieType::B, 3), (LieType::C, 3), (LieType::D, 4)] {
            let rs = build_root_system(t, n).unwrap();
            for arm in 1..=3 {
                for leg in 0..n {
                    assert!(hook_matrix_is_hessenberg(&rs, arm, leg).unwrap(), "{t}{n} {arm},{leg}");
                }
            }
        }
    }
}
