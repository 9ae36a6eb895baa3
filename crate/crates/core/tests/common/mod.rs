#![allow(dead_code)]

use heckesym::{Hecke, Permutation, RationalScalar, Ring};
use num_rational::BigRational;
use proptest::prelude::*;

pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Σ c μ^e T_w with small integer c.
pub fn element(n: usize) -> impl Strategy<Value = Hecke> {
    let count: usize = (1..=n).product();
    prop::collection::vec((0..count, -3i64..=3, -2i32..=2), 1..5).prop_map(move |terms| {
        let perms = Permutation::all(n);
        let mut h = Hecke::generic_zero(n);
        for (k, c, e) in terms {
            let coeff = RationalScalar::from_int(c).times(&RationalScalar::mu_pow(e));
            h = h.add(&Hecke::generic_basis(perms[k]).scale(&coeff));
        }
        h
    })
}

/// Σ c T_w with small integer c, no μ.
pub fn integer_element(n: usize) -> impl Strategy<Value = Hecke> {
    let count: usize = (1..=n).product();
    prop::collection::vec((0..count, -3i64..=3), 1..5).prop_map(move |terms| {
        let perms = Permutation::all(n);
        let mut h = Hecke::generic_zero(n);
        for (k, c) in terms {
            h = h.add(&Hecke::generic_basis(perms[k]).scale(&RationalScalar::from_int(c)));
        }
        h
    })
}

pub fn word_element(n: usize, letters: &[usize]) -> Hecke {
    Hecke::generic_one(n).right_mul_word(letters).unwrap()
}
