use super::qlaurent::QLaurent;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Minimal commutative-ring interface used by the generic determinant code.
///
/// Method names avoid clashing with `std::ops` so that implementing types
/// can keep their operator overloads.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
}

/// A ring with exact division, where `a.div_exact_by(b)` succeeds iff `b`
/// divides `a`.
pub trait ExactDivRing: Ring {
    fn div_exact_by(&self, other: &Self) -> Result<Self>;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl ExactDivRing for Rational {
    fn div_exact_by(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.checked_div(other)
    }
}

impl Ring for QLaurent {
    fn zero_like(&self) -> Self {
        QLaurent::zero()
    }
    fn one_like(&self) -> Self {
        QLaurent::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl ExactDivRing for QLaurent {
    fn div_exact_by(&self, other: &Self) -> Result<Self> {
        self.div_exact(other)
    }
}
