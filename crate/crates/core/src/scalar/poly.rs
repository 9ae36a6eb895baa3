//! Dense univariate polynomials over ℚ, ascending coefficients. Only what
//! fraction reduction needs: division with remainder and gcd.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn trim(p: &mut Vec<BigRational>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &[BigRational]) -> usize {
    p.len() - 1
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r: Vec<BigRational> = a.to_vec();
    trim(&mut r);
    let db = degree(b);
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quot = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let dr = degree(&r);
        let c = &r[dr] * &lead_inv;
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                r[shift + k] -= &c * bk;
            }
        }
        quot[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut quot);
    (quot, r)
}

fn make_monic(mut p: Vec<BigRational>) -> Vec<BigRational> {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            let inv = lead.recip();
            for c in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
    p
}

/// Monic gcd of two nonzero polynomials.
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigRational::one()];
        }
        let (_, r) = divrem(&x, &y);
        x = make_monic(y);
        y = r;
    }
    make_monic(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::laurent::int;

    fn v(c: &[i64]) -> Vec<BigRational> {
        c.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn divrem_exact() {
        // (x^2 - 1) / (x - 1) = x + 1
        let (q, r) = divrem(&v(&[-1, 0, 1]), &v(&[-1, 1]));
        assert_eq!(q, v(&[1, 1]));
        assert!(r.is_empty());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1+x)(1+x+x^2) and (1+x)(1-x)
        let a = v(&[1, 2, 2, 1]);
        let b = v(&[1, 0, -1]);
        assert_eq!(gcd(&a, &b), v(&[1, 1]));
    }

    #[test]
    fn coprime_gcd_is_one() {
        assert_eq!(gcd(&v(&[1, 1]), &v(&[2, 1])), v(&[1]));
    }
}
