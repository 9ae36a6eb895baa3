//! H_n(q) against a from-scratch left regular representation, plus
//! algebraic properties of the product, the involution and α.

use std::collections::BTreeMap;

use heckesym::hecke::{generator, section_word};
use heckesym::{Hecke, Involution, Permutation};
use num_rational::BigRational;
use proptest::prelude::*;

mod common;
use common::{element, word_element};

fn rat(n: i64) -> BigRational {
    common::int(n)
}

/// Elements of H_n(q₀) as one-line permutation → coefficient, built only
/// from the length dichotomy T_s T_w = T_{sw} or (q−1)T_w + qT_{sw}.
struct Oracle {
    q: BigRational,
}

impl Oracle {
    fn left_gen(&self, i: usize, x: &BTreeMap<Vec<usize>, BigRational>) -> BTreeMap<Vec<usize>, BigRational> {
        let mut out: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
        let mut add = |w: Vec<usize>, c: BigRational| {
            let e = out.entry(w).or_insert_with(|| rat(0));
            *e += c;
        };
        for (w, c) in x {
            let sw: Vec<usize> = w
                .iter()
                .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                .collect();
            let pos_i = w.iter().position(|&v| v == i).unwrap();
            let pos_j = w.iter().position(|&v| v == i + 1).unwrap();
            if pos_i < pos_j {
                add(sw, c.clone());
            } else {
                add(w.clone(), c * (&self.q - rat(1)));
                add(sw, c * &self.q);
            }
        }
        out.retain(|_, c| *c != rat(0));
        out
    }

    fn word(&self, n: usize, letters: &[usize]) -> BTreeMap<Vec<usize>, BigRational> {
        let mut x = BTreeMap::new();
        x.insert((1..=n).collect(), rat(1));
        for &a in letters.iter().rev() {
            x = self.left_gen(a, &x);
        }
        x
    }
}

fn specialized(h: &Hecke, q0: &BigRational) -> BTreeMap<Vec<usize>, BigRational> {
    h.at_rational_q(q0)
        .unwrap()
        .terms()
        .iter()
        .map(|(w, c)| (w.images(), c.clone()))
        .collect()
}

fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..n, 0..=max_len)
}

#[test]
fn quadratic_relation_example() {
    // g₁² = (q−1)g₁ + q, read off the oracle at q₀ = 3: 2·g₁ + 3
    let oracle = Oracle { q: rat(3) };
    let sq = oracle.word(2, &[1, 1]);
    assert_eq!(sq[&vec![1, 2]], rat(3));
    assert_eq!(sq[&vec![2, 1]], rat(2));
    assert_eq!(specialized(&word_element(2, &[1, 1]), &rat(3)), sq);
}

#[test]
fn reversal_is_one_basis_element() {
    let a = word_element(3, &[1, 2, 1]);
    let b = word_element(3, &[2, 1, 2]);
    assert_eq!(a, b);
    assert_eq!(a.len(), 1);
    let w = *a.terms().keys().next().unwrap();
    assert_eq!(w.images(), vec![3, 2, 1]);
    assert_eq!(section_word(&w).len(), 3);
}

#[test]
fn dimension_is_factorial() {
    // every basis word times every generator stays inside S_n
    for n in 1..=5 {
        let perms = Permutation::all(n);
        assert_eq!(perms.len(), (1..=n).product::<usize>());
        for w in &perms {
            for i in 1..n {
                let h = generator(n, i).unwrap().multiply(&Hecke::generic_basis(*w)).unwrap();
                assert!(h.terms().keys().all(|p| p.order() == n));
                assert!(h.len() <= 2);
            }
        }
    }
}

#[test]
fn braid_relations_up_to_six() {
    for n in 3..=6 {
        for i in 1..n - 1 {
            assert_eq!(word_element(n, &[i, i + 1, i]), word_element(n, &[i + 1, i, i + 1]));
        }
        for i in 1..n {
            for j in i + 2..n {
                assert_eq!(word_element(n, &[i, j]), word_element(n, &[j, i]));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_match_oracle(u in letters(4, 7), v in letters(4, 7)) {
        let oracle = Oracle { q: rat(3) };
        let product = word_element(4, &u).multiply(&word_element(4, &v)).unwrap();
        let mut uv = u.clone();
        uv.extend(&v);
        prop_assert_eq!(specialized(&product, &rat(3)), oracle.word(4, &uv));
    }

    #[test]
    fn words_match_oracle_at_fraction(u in letters(5, 6)) {
        let q0 = BigRational::new(2.into(), 7.into());
        let oracle = Oracle { q: q0.clone() };
        prop_assert_eq!(specialized(&word_element(5, &u), &q0), oracle.word(5, &u));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn associativity(a in element(4), b in element(4), c in element(4)) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn star_is_antimultiplicative(a in element(4), b in element(4), unit in any::<bool>()) {
        let mode = if unit { Involution::UnitCircle } else { Involution::Real };
        let lhs = a.multiply(&b).unwrap().star(mode);
        let rhs = b.star(mode).multiply(&a.star(mode)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.star(mode).star(mode), a);
    }

    #[test]
    fn alpha_is_an_automorphism(a in element(4), b in element(4)) {
        let lhs = a.multiply(&b).unwrap().alpha_dual();
        let rhs = a.alpha_dual().multiply(&b.alpha_dual()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.alpha_dual().alpha_dual(), a);
    }

    #[test]
    fn shift_is_multiplicative(a in element(3), b in element(3)) {
        let lhs = a.multiply(&b).unwrap().shift();
        let rhs = a.shift().multiply(&b.shift()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
