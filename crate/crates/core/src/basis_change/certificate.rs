//! A machine-checked certificate that `G_{n,1}, G_{n,2}, …` together with
//! a few extra characters generate the invariant part of the group algebra.
//!
//! The character ring is polynomial in the fundamental characters. Over the
//! solved range those equal simple expressions in the `e_r`, and the
//! triangular solution writes each `e_r` as a polynomial in the `G_{n,k}`.
//! The fundamental characters outside the solved range are the extra
//! generators.

use rayon::prelude::*;
use serde::Serialize;

use super::triangular::{jacobian_determinant, triangular_solve, TriangularSolution};
use crate::casimir::Engine;
use crate::error::{Error, Result};
use crate::root_data::{LieType, RootSystem, Weight};
use crate::weyl_charring::GAElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// A fundamental character that is not reached by the `e_r`; attached as
/// computed, without an e-expression.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtraGenerator {
    pub index: usize,
    pub weight: Weight,
    pub dimension: String,
    pub num_terms: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateReport {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    /// `k` runs over `1..=solved_range`.
    pub solved_range: usize,
    pub extra_generators: Vec<ExtraGenerator>,
    pub checks: Vec<Check>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }
}

/// `n−1` (B), `n` (C), `n−2` (D): the fundamental characters `χ(ϖ_r)` with
/// `r` in this range are polynomials in the `e_r`.
pub fn solved_range(rs: &RootSystem) -> usize {
    match rs.lie_type {
        LieType::B => rs.rank - 1,
        LieType::C => rs.rank,
        LieType::D => rs.rank - 2,
    }
}

/// Indices `r` of the fundamental characters listed as extra generators.
pub fn extra_indices(rs: &RootSystem) -> Vec<usize> {
    (solved_range(rs) + 1..=rs.rank).collect()
}

/// The e-expression of `χ(ϖ_r)` over the solved range:
/// `e_r` in types B and D, `e_r − e_{r−2}` in type C.
pub fn fundamental_in_e(engine: &Engine, r: usize) -> GAElem {
    let w = engine.weyl();
    let r = r as i64;
    match engine.root_system().lie_type {
        LieType::B | LieType::D => w.ext_power_char(r),
        LieType::C => w.ext_power_char(r).sub(&w.ext_power_char(r - 2)),
    }
}

fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        detail: if ok { String::new() } else { detail.into() },
    }
}

fn from_result(name: String, r: Result<bool>, detail: &str) -> Check {
    match r {
        Ok(ok) => check(name, ok, detail),
        Err(e) => check(name, false, format!("{detail}: {e}")),
    }
}

fn solution_checks(engine: &Engine, sol: &TriangularSolution, range: usize) -> Vec<Check> {
    let n = sol.rank;
    let mut out = Vec::new();
    out.push(check(
        "solved_range",
        sol.steps.len() >= range,
        format!("solved {} of {range} steps", sol.steps.len()),
    ));
    for s in &sol.steps {
        out.push(check(
            format!("c_{}_nonzero", s.k),
            s.c.is_nonzero(),
            "zero leading coefficient",
        ));
    }
    match sol.round_trip() {
        Ok(flags) => {
            for (s, ok) in sol.steps.iter().zip(flags) {
                out.push(check(format!("round_trip_e_{}", s.k), ok, "N_k(g) != D_k E_k"));
            }
        }
        Err(e) => out.push(check("round_trip", false, e.to_string())),
    }
    out.push(match jacobian_determinant(sol) {
        Ok(Some(det)) => check("jacobian", !det.is_zero(), "zero determinant"),
        Ok(None) => check("jacobian", false, "not triangular with constant diagonal"),
        Err(e) => check("jacobian", false, e.to_string()),
    });

    // GA-level soundness: substitute e_r, Ch G_{n,k} for the symbols.
    let w = engine.weyl();
    let rank = engine.root_system().rank;
    let e_vals: Vec<GAElem> = (1..=n as i64).map(|r| w.ext_power_char(r)).collect();
    let embed = |c: &crate::exact_arith::QLaurent| GAElem::constant(rank, c.clone());
    let one = GAElem::one(rank);
    let g_vals: Result<Vec<GAElem>> = (1..=n as u32)
        .map(|k| engine.ch_g_via_antisym(k).map(|i| i.body))
        .collect();
    let g_vals = match g_vals {
        Ok(v) => v,
        Err(e) => {
            out.push(check("ga_values", false, e.to_string()));
            return out;
        }
    };
    let ga_checks: Vec<Check> = sol
        .steps
        .par_iter()
        .flat_map_iter(|s| {
            let k = s.k as usize;
            let g_ok = s.g.eval(&e_vals, &one, embed).map(|v| v == g_vals[k - 1]);
            let inv_ok = s
                .num
                .eval(&g_vals, &one, embed)
                .map(|v| v == e_vals[k - 1].scale(&s.den));
            [
                from_result(format!("ga_g_{k}_in_e"), g_ok, "g_k(e) != Ch G_{n,k}"),
                from_result(format!("ga_e_{k}_in_g"), inv_ok, "N_k(Ch G) != D_k e_k"),
            ]
        })
        .collect();
    out.extend(ga_checks);
    out
}

/// Runs every sub-check and records its status.
pub fn certificate_report(engine: &Engine) -> Result<CertificateReport> {
    let rs = engine.root_system();
    let range = solved_range(rs);
    let mut checks = Vec::new();
    match triangular_solve(engine) {
        Ok(sol) => checks.extend(solution_checks(engine, &sol, range)),
        Err(e) => checks.push(check("triangular_solve", false, e.to_string())),
    }
    let fundamental: Vec<Check> = (1..=range)
        .into_par_iter()
        .map(|r| {
            let ok = rs
                .fundamental_weight(r)
                .and_then(|wt| engine.weyl().weyl_character(&wt))
                .map(|chi| chi == fundamental_in_e(engine, r));
            from_result(format!("fundamental_{r}_in_e"), ok, "chi(w_r) != e-expression")
        })
        .collect();
    checks.extend(fundamental);
    let mut extra_generators = Vec::new();
    for r in extra_indices(rs) {
        let wt = rs.fundamental_weight(r)?;
        let chi = engine.weyl().weyl_character(&wt)?;
        let invariant = engine.weyl().is_w_invariant(&chi);
        checks.push(check(format!("extra_{r}_invariant"), invariant, "not W-invariant"));
        extra_generators.push(ExtraGenerator {
            index: r,
            dimension: crate::root_data::weyl_dimension(rs, &wt).to_string(),
            weight: wt,
            num_terms: chi.len(),
        });
    }
    Ok(CertificateReport {
        lie_type: rs.lie_type,
        rank: rs.rank,
        solved_range: range,
        extra_generators,
        checks,
    })
}

/// The certificate, or `CertificateFailed` naming the first failing check.
pub fn generation_certificate(engine: &Engine) -> Result<CertificateReport> {
    let report = certificate_report(engine)?;
    if let Some(c) = report.first_failure() {
        return Err(Error::CertificateFailed(format!("{}: {}", c.name, c.detail)));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::build_root_system;

    fn report(t: LieType, n: usize) -> CertificateReport {
        generation_certificate(&Engine::new(&build_root_system(t, n).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn extra_generators_per_type() {
        assert!(report(LieType::C, 3).extra_generators.is_empty());
        let b2 = report(LieType::B, 2);
        assert_eq!(b2.extra_generators.len(), 1);
        assert_eq!(b2.extra_generators[0].weight, Weight::from_doubled([1, 1]));
        assert_eq!(b2.extra_generators[0].dimension, "4/1");
        let d4 = report(LieType::D, 4);
        let idx: Vec<usize> = d4.extra_generators.iter().map(|g| g.index).collect();
        assert_eq!(idx, vec![3, 4]);
        assert!(d4.extra_generators.iter().all(|g| g.dimension == "8/1"));
    }
}
