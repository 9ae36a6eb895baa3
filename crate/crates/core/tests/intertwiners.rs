//! Quantum determinants and their left inverses: norms, worked examples,
//! the bimodule law and the special-object checker.

use heckesym::intertwiners::{
    contract, diagonal_projector, iterated_left_inverse, left_inverse_apply, left_inverse_with, quantum_determinant,
    scalar_multiple_of_identity, scalar_of, special_object_check, verify_braided_relation, verify_lemma51,
    verify_lemma54, verify_lemma56, IndexSet,
};
use heckesym::model::{gq_operator, TensorOperator, TensorVector};
use heckesym::{Permutation, RationalScalar, Ring};
use proptest::prelude::*;

mod common;
use common::int;

/// n!_q at q = 4, as an integer product of 1 + 4 + … + 4^{k−1}.
fn q_factorial_at_4(n: u32) -> i64 {
    (1..=n).map(|k| (0..k).map(|j| 4i64.pow(j)).sum::<i64>()).product()
}

#[test]
fn determinant_coefficients() {
    let idx = IndexSet::new(4, vec![1, 2, 4]).unwrap();
    let s = quantum_determinant(&idx);
    assert_eq!(s.terms().len(), 6);
    for p in Permutation::all(3) {
        let word: Vec<usize> = (1..=3).map(|j| idx.indices()[p.get(j) - 1]).collect();
        let k = p.inversions();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let expect = RationalScalar::from_int(sign).times(&RationalScalar::mu_pow(k as i32));
        assert_eq!(s.coeff(&word), expect, "{:?}", word);
    }
}

#[test]
fn norms_are_q_factorials() {
    for d in 1..=4 {
        for idx in IndexSet::all(d) {
            let s = quantum_determinant(&idx);
            let norm = scalar_of(&contract(&s, &s, 0).unwrap()).unwrap();
            let n = idx.len() as u32;
            assert_eq!(norm, RationalScalar::q_factorial(n).unwrap(), "{}", idx);
            assert_eq!(norm.evaluate_rational(&int(2)).unwrap(), int(q_factorial_at_4(n)));
        }
    }
}

#[test]
fn left_inverse_of_g_d2() {
    let phi = left_inverse_apply(&IndexSet::full(2), &gq_operator(2)).unwrap();
    assert_eq!(scalar_multiple_of_identity(&phi), Some(RationalScalar::lambda_d(-2).unwrap()));
    // λ₋₂ = −1/(1 + q) at q = 4
    assert_eq!(RationalScalar::lambda_d(-2).unwrap().evaluate_rational(&int(2)).unwrap(), common::rat(-1, 5));
}

#[test]
fn left_inverse_of_identity_is_identity() {
    for d in 2..=3 {
        let one = TensorOperator::identity(d, 2);
        assert_eq!(left_inverse_apply(&IndexSet::full(d), &one).unwrap(), TensorOperator::identity(d, 1));
    }
}

#[test]
fn gapped_pair_example() {
    // (S*⊗1)(1⊗g)(S⊗1) for S = S_{13} in d = 3: −1 on ψ₁ and ψ₃, q − 1 on ψ₂
    let s = quantum_determinant(&IndexSet::new(3, vec![1, 3]).unwrap());
    let got = left_inverse_with(&s, &gq_operator(3), &RationalScalar::one()).unwrap();
    let q = RationalScalar::q();
    let expect = diagonal_projector::<RationalScalar>(3, [1, 3])
        .scale(&RationalScalar::from_int(-1))
        .add(&diagonal_projector(3, [2]).scale(&q.minus(&RationalScalar::one())))
        .unwrap();
    assert_eq!(got, expect);
}

#[test]
fn iterated_inverse_of_a_product() {
    // Φ₂Φ₃(ε(g₁g₂)) = λ² at λ = λ₋₃
    let d = 3;
    let g = gq_operator(d);
    let one = TensorOperator::identity(d, 1);
    let t = g.tensor(&one).unwrap().compose(&one.tensor(&g).unwrap()).unwrap();
    let l = RationalScalar::lambda_d(-3).unwrap();
    assert_eq!(iterated_left_inverse(d, &t).unwrap(), one.scale(&l.times(&l)));
}

#[test]
fn lemma_checks_pass_for_small_d() {
    for d in 2..=3 {
        for idx in IndexSet::all(d) {
            for r in verify_lemma51(d, &idx).unwrap().into_iter().chain(verify_lemma54(d, &idx).unwrap()) {
                assert!(r.is_ok(), "{:?}", r);
            }
        }
        for k in 1..d {
            assert!(verify_lemma56(d, k).unwrap().iter().all(|r| r.is_ok()));
        }
        assert!(verify_braided_relation(d).unwrap().iter().all(|r| r.is_ok()));
    }
}

#[test]
fn special_object_examples() {
    for d in 2..=3 {
        let s = quantum_determinant(&IndexSet::full(d));
        let w = special_object_check(&s, d).unwrap();
        assert!(w.all_pass());
        assert_eq!(w.left_inverse_value, Some(RationalScalar::lambda_d(-(d as i32)).unwrap()));

        let w = special_object_check(&s.scale(&RationalScalar::from_int(2)), d).unwrap();
        assert_eq!(w.failed(), vec!["6.1", "6.2", "6.3"]);

        // −S passes too: the conditions only see R up to sign
        assert!(special_object_check(&s.scale(&RationalScalar::from_int(-1)), d).unwrap().all_pass());

        let flat: Vec<usize> = (1..=d).collect();
        let w = special_object_check(&TensorVector::basis(d, &flat).unwrap(), d).unwrap();
        assert!(w.failed().contains(&"6.3"));
    }
    assert!(special_object_check(&quantum_determinant(&IndexSet::full(2)), 3).is_err());
}

fn sparse_operator(d: usize, n: usize) -> impl Strategy<Value = TensorOperator<RationalScalar>> {
    let dim = d.pow(n as u32);
    prop::collection::vec((0..dim, 0..dim, -3i64..=3), 0..8).prop_map(move |entries| {
        entries.into_iter().fold(TensorOperator::zero(d, n, n), |acc, (i, j, c)| {
            let e = TensorOperator::from_entries(d, n, n, [((i, j), RationalScalar::from_int(c))]).unwrap();
            acc.add(&e).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bimodule_law(x in sparse_operator(2, 3), t in sparse_operator(2, 2)) {
        let idx = IndexSet::full(2);
        let one = TensorOperator::identity(2, 1);
        let right = x.compose(&one.tensor(&t).unwrap()).unwrap();
        let left = one.tensor(&t).unwrap().compose(&x).unwrap();
        let phi = left_inverse_apply(&idx, &x).unwrap();
        prop_assert_eq!(left_inverse_apply(&idx, &right).unwrap(), phi.compose(&t).unwrap());
        prop_assert_eq!(left_inverse_apply(&idx, &left).unwrap(), t.compose(&phi).unwrap());
    }

    #[test]
    fn left_inverse_is_linear(x in sparse_operator(3, 2), y in sparse_operator(3, 2), c in -3i64..=3) {
        let idx = IndexSet::full(3);
        let c = RationalScalar::from_int(c);
        let lhs = left_inverse_apply(&idx, &x.scale(&c).add(&y).unwrap()).unwrap();
        let rhs = left_inverse_apply(&idx, &x).unwrap().scale(&c).add(&left_inverse_apply(&idx, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
