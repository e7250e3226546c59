//! Truncated Laurent series in `h` over ℚ, used to take exact limits of
//! the eigenvalue sum along a perturbation `x = 1 + h`.

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// Orders of leading cancellation tolerated in a single factor.
const EXTRA: usize = 8;

/// `h^val · Σ_{j<N} coeffs[j] h^j`, known up to (excluding) `h^{val+N}`.
#[derive(Clone, Debug)]
pub(crate) struct Series {
    val: i64,
    coeffs: Vec<Rational>,
}

impl Series {
    fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn constant(c: Rational, prec: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); prec];
        coeffs[0] = c;
        Series { val: 0, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The order of vanishing of `Σ cᵢ (1+h)^{mᵢ}` at `h = 0`, or `None`
    /// if it vanishes beyond the first `EXTRA` orders.
    pub fn valuation_of(terms: &[(Rational, i64)]) -> Option<i64> {
        let raw = Self::expand(terms, EXTRA);
        raw.iter().position(|x| !x.is_zero()).map(|v| v as i64)
    }

    fn expand(terms: &[(Rational, i64)], total: usize) -> Vec<Rational> {
        let mut raw = vec![Rational::zero(); total];
        for (c, m) in terms {
            // generalized binomial coefficients of (1+h)^m
            let mut b = Rational::one();
            for (j, slot) in raw.iter_mut().enumerate() {
                *slot += &(c * &b);
                let num = Rational::from_integer(m - j as i64);
                b = &(&b * &num) / &Rational::from_integer(j as i64 + 1);
            }
        }
        raw
    }

    /// `Σ cᵢ (1+h)^{mᵢ}`, normalized so the leading coefficient is nonzero.
    /// Expands `EXTRA` orders beyond `prec` to absorb leading cancellation.
    pub fn from_binomials(terms: &[(Rational, i64)], prec: usize) -> Self {
        let raw = Self::expand(terms, prec + EXTRA);
        match raw.iter().position(|x| !x.is_zero()) {
            Some(v) if v < EXTRA => Series {
                val: v as i64,
                coeffs: raw[v..v + prec].to_vec(),
            },
            // identically zero to the working precision
            _ => Series {
                val: 0,
                coeffs: vec![Rational::zero(); prec],
            },
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let mut coeffs = vec![Rational::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                coeffs[i + j] += &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        Series {
            val: self.val + other.val,
            coeffs,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::DegenerateEvaluation("series inverse of zero".into()));
        }
        let n = self.precision();
        let a0inv = self.coeffs[0].recip()?;
        let mut out = vec![Rational::zero(); n];
        out[0] = a0inv.clone();
        for k in 1..n {
            let mut s = Rational::zero();
            for j in 1..=k {
                s += &(&self.coeffs[j] * &out[k - j]);
            }
            out[k] = -(&s * &a0inv);
        }
        Ok(Series {
            val: -self.val,
            coeffs: out,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Coefficients of `h^j` for `lo ≤ j ≤ 0` in a sum of series, provided
    /// every summand is known through `h^0`.
    pub fn sum_principal_and_constant(items: &[Series]) -> Result<(Vec<Rational>, Rational)> {
        let lo = items.iter().map(|s| s.val).min().unwrap_or(0).min(0);
        for s in items {
            if !s.is_zero() && s.val + s.precision() as i64 <= 0 {
                return Err(Error::DegenerateEvaluation(
                    "series precision exhausted before the constant term".into(),
                ));
            }
        }
        let width = (-lo) as usize + 1;
        let mut acc = vec![Rational::zero(); width];
        for s in items {
            if s.is_zero() {
                continue;
            }
            for (j, c) in s.coeffs.iter().enumerate() {
                let e = s.val + j as i64;
                if e > 0 {
                    break;
                }
                acc[(e - lo) as usize] += c;
            }
        }
        let constant = acc.pop().unwrap();
        Ok((acc, constant))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    #[test]
    fn removable_singularity() {
        // ((1+h)^2 − 1)/((1+h) − 1) → 2
        let num = Series::from_binomials(&[(Rational::one(), 2), (rat(-1, 1), 0)], 6);
        let den = Series::from_binomials(&[(Rational::one(), 1), (rat(-1, 1), 0)], 6);
        let q = num.div(&den).unwrap();
        let (principal, c) = Series::sum_principal_and_constant(&[q]).unwrap();
        assert!(principal.iter().all(Rational::is_zero));
        assert_eq!(c, rat(2, 1));
    }

    #[test]
    fn poles_cancel_in_sums() {
        // 1/h − 1/((1+h)^1 − 1) = 0
        let h = Series::from_binomials(&[(Rational::one(), 1), (rat(-1, 1), 0)], 5);
        let a = Series::constant(Rational::one(), 5).div(&h).unwrap();
        let b = Series::constant(rat(-1, 1), 5).div(&h).unwrap();
        let (principal, c) = Series::sum_principal_and_constant(&[a, b]).unwrap();
        assert!(principal.iter().all(Rational::is_zero));
        assert!(c.is_zero());
    }

    #[test]
    fn negative_exponent_expansion() {
        // (1+h)^{-1} = 1 − h + h² − …
        let s = Series::from_binomials(&[(Rational::one(), -1)], 4);
        assert_eq!(s.coeffs, vec![rat(1, 1), rat(-1, 1), rat(1, 1), rat(-1, 1)]);
    }
}
