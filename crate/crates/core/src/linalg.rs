//! Exact dense elimination: fraction-free rank, determinants and pivot
//! positivity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix by Bareiss elimination.
///
/// Columns without a pivot are skipped, so the matrix need not be square.
pub fn rank_integer(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let factor = m[r][col].clone();
            for c in col + 1..cols {
                let v = &pivot * &m[r][c] - &factor * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Clears denominators row by row.
pub fn integer_rows(m: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect()
}

/// Rank of a rational matrix; row scaling does not change the rank.
pub fn rank_rational(m: &[Vec<BigRational>]) -> usize {
    rank_integer(integer_rows(m))
}

/// Determinant over any field by Gaussian elimination with a nonzero
/// pivot search.
pub fn determinant<R: crate::field::Field>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    let mut det = R::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return R::zero();
        };
        if p != col {
            m.swap(p, col);
            det = det.negate();
        }
        let pivot = m[col][col].clone();
        det = det.times(&pivot);
        let inv = pivot.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].times(&inv);
            for c in col..n {
                let v = m[r][c].minus(&f.times(&m[col][c]));
                m[r][c] = v;
            }
        }
    }
    det
}

/// Rank over any field with exact zero tests.
pub fn rank_field<R: crate::field::Field>(mut m: Vec<Vec<R>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].times(&inv);
            for c in col..cols {
                let v = m[r][c].minus(&f.times(&m[rank][c]));
                m[r][c] = v;
            }
        }
        rank += 1;
    }
    rank
}

/// True iff every leading principal minor is positive, i.e. elimination
/// without row exchanges meets only positive pivots.
pub fn leading_minors_positive(m: &[Vec<BigRational>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        let pivot = a[k][k].clone();
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &pivot;
            for c in k..n {
                let v = &a[r][c] - &f * &a[k][c];
                a[r][c] = v;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank_integer(ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_integer(ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 1, 1]])), 2);
        assert_eq!(rank_integer(ints(&[&[1, 0, 0, 3], &[0, 0, 2, 1]])), 2);
        assert_eq!(rank_integer(vec![]), 0);
    }

    #[test]
    fn determinant_matches_cofactor() {
        let m: Vec<Vec<BigRational>> = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        // 2(12-1) - 1(4-0) = 18
        assert_eq!(determinant(m.clone()), BigRational::from_integer(18.into()));
        assert!(leading_minors_positive(&m));
    }

    #[test]
    fn indefinite_is_rejected() {
        let m: Vec<Vec<BigRational>> = [[1, 2], [2, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        assert!(!leading_minors_positive(&m));
    }
}
