//! Determinants over an abstract exact ring.

use std::collections::HashMap;

use super::ring::{ExactDivRing, Ring};
use crate::error::{Error, Result};

fn check_square<R>(m: &[Vec<R>]) -> Result<usize> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::LengthMismatch {
                left: row.len(),
                right: n,
            });
        }
    }
    Ok(n)
}

/// Laplace expansion along successive rows, memoized on the set of columns
/// already used. Cost is `O(n·2ⁿ)` ring operations. `one` supplies the ring
/// identity for the empty matrix.
pub fn det_cofactor<R: Ring>(m: &[Vec<R>], one: &R) -> Result<R> {
    let n = check_square(m)?;
    if n > 24 {
        return Err(Error::IndexOutOfRange {
            index: n as i64,
            range: "0..=24".into(),
        });
    }
    let mut memo: HashMap<u32, R> = HashMap::new();
    Ok(minor(m, 0, 0, one, &mut memo))
}

fn minor<R: Ring>(m: &[Vec<R>], row: usize, used: u32, one: &R, memo: &mut HashMap<u32, R>) -> R {
    let n = m.len();
    if row == n {
        return one.clone();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = one.zero_like();
    let mut sign_neg = false;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero_elem() {
            let sub = minor(m, row + 1, used | (1 << col), one, memo);
            let term = entry.times(&sub);
            acc = if sign_neg { acc.minus(&term) } else { acc.plus(&term) };
        }
        sign_neg = !sign_neg;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact in
/// an integral domain, so the ring only needs exact division.
pub fn det_bareiss<R: ExactDivRing>(m: &[Vec<R>], one: &R) -> Result<R> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(one.clone());
    }
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut negate = false;
    let mut prev = one.clone();
    for k in 0..n - 1 {
        if a[k][k].is_zero_elem() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero_elem()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(one.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num.div_exact_by(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.negate() } else { d })
}

/// The library's determinant: memoized cofactor expansion.
pub fn det_exact<R: Ring>(m: &[Vec<R>], one: &R) -> Result<R> {
    det_cofactor(m, one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::qlaurent::QLaurent;
    use crate::exact_arith::rational::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn small_cases() {
        let one = Rational::one();
        assert_eq!(det_exact(&[vec![r(7)]], &one).unwrap(), r(7));
        let id: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| r((i == j) as i64)).collect())
            .collect();
        assert_eq!(det_exact(&id, &one).unwrap(), one);
        let m = vec![vec![r(2), r(3)], vec![r(5), r(7)]];
        assert_eq!(det_exact(&m, &one).unwrap(), r(-1));
        assert_eq!(det_bareiss(&m, &one).unwrap(), r(-1));
        let empty: Vec<Vec<Rational>> = vec![];
        assert_eq!(det_exact(&empty, &one).unwrap(), one);
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let one = Rational::one();
        let m = vec![
            vec![r(0), r(1), r(2)],
            vec![r(1), r(0), r(3)],
            vec![r(4), r(-3), r(8)],
        ];
        assert_eq!(det_bareiss(&m, &one).unwrap(), det_cofactor(&m, &one).unwrap());
    }

    #[test]
    fn qlaurent_matrix() {
        let q = QLaurent::q_pow;
        let one = QLaurent::one();
        let m = vec![
            vec![q(1), q(-1).add(&one), QLaurent::zero()],
            vec![one.clone(), q(2), q(-3)],
            vec![q(1).sub(&q(-1)), one.clone(), q(1)],
        ];
        assert_eq!(det_cofactor(&m, &one).unwrap(), det_bareiss(&m, &one).unwrap());
    }

    #[test]
    fn rejects_ragged() {
        let m = vec![vec![r(1), r(2)], vec![r(3)]];
        assert!(det_exact(&m, &Rational::one()).is_err());
    }
}
