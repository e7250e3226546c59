use serde::Serialize;

use super::Engine;
use crate::error::{Error, Result};
use crate::exact_arith::QLaurent;
use crate::root_data::Weight;
use crate::weyl_charring::GAElem;

/// One irreducible constituent of `Ch G_{n,k}`: `coefficient · q^{power} · χ(weight)`.
///
/// For non-trivial weights `power` is stored relative to `q^{2n}` so that
/// lists for different ranks can be compared; for the trivial constituent
/// it is absolute (`relative_to_rank = false`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Constituent {
    /// Integer coordinates of the highest weight with trailing zeros removed.
    pub partition: Vec<i32>,
    /// Exponent of `q`, in quarter units.
    pub power_quarters: i32,
    pub relative_to_rank: bool,
    pub coefficient: crate::exact_arith::Rational,
}

/// Decomposes `Ch G_{n,k}` (antisymmetrizer route) into irreducible
/// characters by repeatedly peeling off the character of the
/// lexicographically highest weight, which is always dominant for a
/// `W`-invariant element.
pub fn constituents(engine: &Engine, k: u32) -> Result<Vec<Constituent>> {
    let rs = engine.root_system();
    let n = rs.rank as u32;
    let upper = n;
    if k == 0 || k > upper {
        return Err(Error::IndexOutOfRange {
            index: k as i64,
            range: format!("1..={upper}"),
        });
    }
    let mut rest = engine.ch_g_via_antisym(k)?.body;
    let mut out = Vec::new();
    while let Some((w, c)) = rest.lead().map(|(w, c)| (w.clone(), c.clone())) {
        if !rs.is_dominant(&w) {
            return Err(Error::NotDominant(w.to_string()));
        }
        let chi = if w.is_zero() {
            GAElem::one(rs.rank)
        } else {
            engine.weyl().weyl_character(&w)?
        };
        rest = rest.sub(&chi.scale(&c));
        push_terms(&mut out, &w, &c, 8 * n as i32);
    }
    out.sort();
    Ok(out)
}

fn push_terms(out: &mut Vec<Constituent>, w: &Weight, c: &QLaurent, rank_shift: i32) {
    let mut partition: Vec<i32> = w.doubled().iter().map(|d| d / 2).collect();
    while partition.last() == Some(&0) {
        partition.pop();
    }
    let relative = !w.is_zero();
    for (e, coeff) in c.terms() {
        out.push(Constituent {
            partition: partition.clone(),
            power_quarters: if relative { e - rank_shift } else { *e },
            relative_to_rank: relative,
            coefficient: coeff.clone(),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Rational;
    use crate::root_data::{build_root_system, LieType};

    #[test]
    fn type_b_k2() {
        let eng = Engine::new(&build_root_system(LieType::B, 2).unwrap()).unwrap();
        let got = constituents(&eng, 2).unwrap();
        let c = |p: Vec<i32>, e: i32, rel: bool, s: i64| Constituent {
            partition: p,
            power_quarters: 4 * e,
            relative_to_rank: rel,
            coefficient: Rational::from_integer(s),
        };
        let mut expect = vec![c(vec![2], -1, true, 1), c(vec![1, 1], -3, true, -1), c(vec![], -2, false, 1)];
        expect.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn k1_single_constituent() {
        let eng = Engine::new(&build_root_system(LieType::C, 3).unwrap()).unwrap();
        let got = constituents(&eng, 1).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].partition, vec![1]);
        assert!(constituents(&eng, 0).is_err());
        assert!(constituents(&eng, 4).is_err());
    }
}
