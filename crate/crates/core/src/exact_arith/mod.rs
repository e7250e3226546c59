//! Exact arithmetic: rationals, `q`-Laurent polynomials, polynomials in
//! abstract symbols, and determinants over any of these rings.

pub mod det;
pub mod epoly;
pub mod qlaurent;
pub mod rational;
pub mod ring;

pub use det::{det_bareiss, det_cofactor, det_exact};
pub use epoly::EPoly;
pub use qlaurent::QLaurent;
pub use rational::{rat, Rational};
pub use ring::{ExactDivRing, Ring};

/// Convenience wrappers named after the operations they realize.
pub fn ql_add(a: &QLaurent, b: &QLaurent) -> QLaurent {
    a.add(b)
}

pub fn ql_mul(a: &QLaurent, b: &QLaurent) -> QLaurent {
    a.mul(b)
}

pub fn ql_div_exact(a: &QLaurent, b: &QLaurent) -> crate::Result<QLaurent> {
    a.div_exact(b)
}

pub fn ql_eval(a: &QLaurent, s: &Rational) -> crate::Result<Rational> {
    a.eval(s)
}
