//! Exact linear algebra over the integers and rationals.
//!
//! Matrices here are small (one row per plumbing vertex), so everything is
//! done with arbitrary precision and no attempt at clever pivoting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Leading principal minors `D_1, ..., D_n` of a square integer matrix,
/// computed by fraction-free (Bareiss) elimination without row exchanges.
///
/// Elimination stops at the first vanishing minor; the returned vector then
/// ends with that zero.
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &pivot - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = pivot;
    }
    minors
}

/// Determinant via Bareiss elimination with row exchanges.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Solves `m x = rhs` exactly. Returns `None` when `m` is singular.
pub fn solve(m: &[Vec<i64>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut v: Vec<BigRational> = row
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect();
            v.push(r.clone());
            v
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(p, k);
        let inv = a[k][k].recip();
        for j in k..=n {
            a[k][j] = &a[k][j] * &inv;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in k..=n {
                    let v = &a[i][j] - &f * &a[k][j];
                    a[i][j] = v;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

pub fn is_integral(x: &BigRational) -> bool {
    x.denom().abs().is_one()
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_minors_and_det() {
        let m = vec![vec![-2, 1], vec![1, -2]];
        assert_eq!(leading_minors(&m), vec![BigInt::from(-2), BigInt::from(3)]);
        assert_eq!(determinant(&m), BigInt::from(3));
    }

    #[test]
    fn determinant_needs_row_swap() {
        let m = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(determinant(&m), BigInt::from(-1));
        assert_eq!(leading_minors(&m), vec![BigInt::zero()]);
    }

    #[test]
    fn solve_small_system() {
        let m = vec![vec![2, 1], vec![1, 3]];
        let rhs = vec![
            BigRational::from_integer(1.into()),
            BigRational::from_integer(2.into()),
        ];
        let x = solve(&m, &rhs).unwrap();
        assert_eq!(x[0], BigRational::new(1.into(), 5.into()));
        assert_eq!(x[1], BigRational::new(3.into(), 5.into()));
        assert!(solve(&[vec![1, 2], vec![2, 4]], &rhs).is_none());
    }
}
