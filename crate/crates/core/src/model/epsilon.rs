use std::collections::BTreeMap;

use super::generators::LocalGenerator;
use super::operator::TensorOperator;
use crate::error::Result;
use crate::field::Field;
use crate::hecke::{peel, Hecke, HeckeElement, Permutation};
use crate::scalar::RationalScalar;

/// ε(h) on H^⊗n for a local generator g.
///
/// Writing h = Σ_i g_i⋯g_1 σ(h_i) along the first step of the canonical
/// words gives ε(h) = Σ_i ε(g_i⋯g_1)(1 ⊗ ε(h_i)), so the recursion runs
/// once per order instead of once per basis word.
pub fn epsilon_with<R: Field>(h: &HeckeElement<R>, gen: &LocalGenerator<R>) -> TensorOperator<R> {
    let n = h.order();
    let d = gen.d();
    if n <= 1 {
        let c = h.coeff(&Permutation::identity(n));
        return TensorOperator::identity(d, n).scale(&c);
    }
    let mut parts: BTreeMap<usize, Vec<(Permutation, R)>> = BTreeMap::new();
    for (w, c) in h.terms() {
        let (i, rest) = peel(w);
        parts.entry(i).or_default().push((rest, c.clone()));
    }
    let mut acc = TensorOperator::zero(d, n, n);
    for (i, terms) in parts {
        let hi = HeckeElement::from_terms(n - 1, h.q().clone(), terms).expect("orders agree");
        let mut x = epsilon_with(&hi, gen).pad_left(1);
        for a in 1..=i {
            x = gen.apply_left(a, &x);
        }
        acc = acc.add(&x).expect("same shape");
    }
    acc
}

/// ε(h) for the generic model over ℚ(μ).
pub fn epsilon_rep(h: &Hecke, d: usize) -> TensorOperator<RationalScalar> {
    epsilon_with(h, &LocalGenerator::jimbo_woronowicz(d, &RationalScalar::mu()))
}

/// ε′ = ε ∘ α, i.e. g_i ↦ (q − 1) − ε(g_i).
pub fn epsilon_prime(h: &Hecke, d: usize) -> TensorOperator<RationalScalar> {
    epsilon_rep(&h.alpha_dual(), d)
}

/// ε(g_i) on H^⊗n.
pub fn epsilon_generator(n: usize, i: usize, d: usize) -> Result<TensorOperator<RationalScalar>> {
    Ok(epsilon_rep(&crate::hecke::generator(n, i)?, d))
}
