//! Quantum determinants, their partial contractions, left inverses and the
//! identity checks built on them.

mod lemmas;
mod special_object;

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::{Field, Involution, Ring};
use crate::hecke::{Hecke, Permutation};
use crate::model::{TensorOperator, TensorVector};
use crate::scalar::RationalScalar;

pub use lemmas::{
    verify_braided_relation, verify_conjugate_equations, verify_conjugate_equations_numeric, verify_lemma51,
    verify_lemma54, verify_lemma56,
};
pub use special_object::{special_object_check, special_object_reports, SpecialObjectWitness};

/// Increasing indices i_1 < … < i_n in 1..=d.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    d: usize,
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn new(d: usize, indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty()
            || indices.windows(2).any(|w| w[0] >= w[1])
            || indices[0] == 0
            || *indices.last().expect("nonempty") > d
        {
            return Err(Error::InvalidArgument(format!(
                "{:?} is not an increasing index set in 1..={}",
                indices, d
            )));
        }
        Ok(Self { d, indices })
    }

    /// (1, …, d).
    pub fn full(d: usize) -> Self {
        Self {
            d,
            indices: (1..=d).collect(),
        }
    }

    /// All index sets of size n, lexicographic.
    pub fn all_of_size(d: usize, n: usize) -> Vec<Self> {
        (1..=d)
            .combinations(n)
            .map(|indices| Self { d, indices })
            .collect()
    }

    /// Every index set for dimension d, by size then lexicographic.
    pub fn all(d: usize) -> Vec<Self> {
        (1..=d).flat_map(|n| Self::all_of_size(d, n)).collect()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.d
    }

    /// Orthogonal projection of H onto span{ψ_i : i ∈ idx}.
    pub fn projector<R: Ring>(&self) -> TensorOperator<R> {
        diagonal_projector(self.d, self.indices.iter().copied())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.indices.iter().join(","))
    }
}

/// Diagonal projector onto the span of the given 1-based basis vectors.
pub fn diagonal_projector<R: Ring>(d: usize, indices: impl IntoIterator<Item = usize>) -> TensorOperator<R> {
    TensorOperator::from_entries(d, 1, 1, indices.into_iter().map(|i| ((i - 1, i - 1), R::one())))
        .expect("indices in range")
}

/// k-fold tensor power of an operator.
pub fn tensor_power<R: Ring>(op: &TensorOperator<R>, k: usize) -> TensorOperator<R> {
    (0..k).fold(TensorOperator::identity(op.d(), 0), |acc, _| {
        acc.tensor(op).expect("same d")
    })
}

/// S_idx = Σ_p (−μ)^{inv(p)} ψ_{i_{p(1)}} ⊗ … ⊗ ψ_{i_{p(n)}}.
pub fn quantum_determinant(idx: &IndexSet) -> TensorVector<RationalScalar> {
    let n = idx.len();
    let terms = Permutation::all(n).into_iter().map(|p| {
        let word: Vec<usize> = (1..=n).map(|j| idx.indices[p.get(j) - 1]).collect();
        let c = RationalScalar::from_int(-1).pow(p.inversions() as u32) * RationalScalar::mu_pow(p.inversions() as i32);
        (word, c)
    });
    TensorVector::from_terms(idx.d, n, terms).expect("indices in range")
}

/// (a* ⊗ 1_m) ∘ (1_k ⊗ b) : H^⊗k → H^⊗m with m = k + n_b − n_a, the
/// adjoint taken with real scalars.
pub fn contract<R: Field>(a: &TensorVector<R>, b: &TensorVector<R>, k: usize) -> Result<TensorOperator<R>> {
    if a.d() != b.d() {
        return Err(Error::ShapeMismatch(format!("local dimensions {} and {}", a.d(), b.d())));
    }
    let total = k + b.n();
    if total < a.n() {
        return Err(Error::ShapeMismatch(format!(
            "cannot contract {} factors against {} + {}",
            a.n(),
            k,
            b.n()
        )));
    }
    let m = total - a.n();
    let right = b.op().pad_left(k);
    let left = a.op().adjoint(Involution::Real).pad_right(m);
    left.compose(&right)
}

/// The single entry of a 1×1 operator (a full contraction).
pub fn scalar_of<R: Ring>(op: &TensorOperator<R>) -> Option<R> {
    (op.dim_in() == 1 && op.dim_out() == 1).then(|| op.get(0, 0))
}

/// c if op = c·1, else `None`.
pub fn scalar_multiple_of_identity<R: Ring>(op: &TensorOperator<R>) -> Option<R> {
    if op.n_in() != op.n_out() {
        return None;
    }
    let c = op.get(0, 0);
    let id = TensorOperator::identity(op.d(), op.n_in()).scale(&c);
    (*op == id).then_some(c)
}

/// Φ(T) = (1/norm)(v* ⊗ 1_{r−1})(1_{n−1} ⊗ T)(v ⊗ 1_{r−1}) for T on H^⊗r
/// and v ∈ H^⊗n.
pub fn left_inverse_with<R: Field>(v: &TensorVector<R>, t: &TensorOperator<R>, norm: &R) -> Result<TensorOperator<R>> {
    let r = t.n_in();
    if r == 0 || t.n_out() != r || t.d() != v.d() {
        return Err(Error::ShapeMismatch(format!(
            "left inverse needs a square operator on at least one factor with d={}",
            v.d()
        )));
    }
    let n = v.n();
    let inner = t.pad_left(n - 1);
    let right = v.op().pad_right(r - 1);
    let left = v.op().adjoint(Involution::Real).pad_right(r - 1);
    let inv = norm
        .inv()
        .ok_or_else(|| Error::PoleAtPoint("normalization vanishes".into()))?;
    Ok(left.compose(&inner.compose(&right)?)?.scale(&inv))
}

/// Φ^{idx}_r(T), normalized by n!_q.
pub fn left_inverse_apply(idx: &IndexSet, t: &TensorOperator<RationalScalar>) -> Result<TensorOperator<RationalScalar>> {
    let s = quantum_determinant(idx);
    left_inverse_with(&s, t, &RationalScalar::q_factorial(idx.len() as u32)?)
}

/// Φ_2 ∘ … ∘ Φ_r applied to T on H^⊗r, using the full determinant.
pub fn iterated_left_inverse(d: usize, t: &TensorOperator<RationalScalar>) -> Result<TensorOperator<RationalScalar>> {
    let idx = IndexSet::full(d);
    let mut x = t.clone();
    while x.n_in() > 1 {
        x = left_inverse_apply(&idx, &x)?;
    }
    Ok(x)
}

/// g_1⋯g_n in H_{n+1}(q).
pub fn cycle_word(n: usize) -> Result<Hecke> {
    let letters: Vec<usize> = (1..=n).collect();
    Hecke::generic_one(n + 1).right_mul_word(&letters)
}

/// The block swap in S_{m+n}: j ↦ j + n for j ≤ m, j ↦ j − m otherwise.
pub fn block_swap(m: usize, n: usize) -> Permutation {
    let images: Vec<usize> = (1..=m + n).map(|j| if j <= m { j + n } else { j - m }).collect();
    Permutation::from_images(&images).expect("block swap is a permutation")
}
