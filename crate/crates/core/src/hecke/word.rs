//! Canonical reduced words from the recursion
//! B_{n+1} = σ(B_n) ∪ g_1 σ(B_n) ∪ … ∪ g_n⋯g_1 σ(B_n).

use super::permutation::Permutation;
use crate::error::{Error, Result};

/// A canonical basis word, recorded by its descent tuple (i_2, …, i_n) with
/// 0 ≤ i_k ≤ k−1. Level k contributes the factor g_{i_k}⋯g_1 applied to the
/// σ-shifted lower levels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisWord {
    order: usize,
    descents: Vec<usize>,
}

impl BasisWord {
    pub fn new(order: usize, descents: Vec<usize>) -> Result<Self> {
        if order == 0 || descents.len() != order - 1 {
            return Err(Error::InvalidArgument(format!(
                "order {} needs {} descent entries",
                order,
                order.saturating_sub(1)
            )));
        }
        for (k, &i) in descents.iter().enumerate() {
            let level = k + 2;
            if i > level - 1 {
                return Err(Error::InvalidArgument(format!(
                    "descent entry {} at level {} exceeds {}",
                    i,
                    level,
                    level - 1
                )));
            }
        }
        Ok(Self { order, descents })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// (i_2, …, i_n).
    pub fn descents(&self) -> &[usize] {
        &self.descents
    }

    /// The generator indices of the reduced word, left to right.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        // the outermost level sits leftmost and is shifted least
        for (depth, &i) in self.descents.iter().rev().enumerate() {
            out.extend((1..=i).rev().map(|a| a + depth));
        }
        out
    }

    /// Word length Σ i_k.
    pub fn len(&self) -> usize {
        self.descents.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn permutation(&self) -> Permutation {
        let mut w = Permutation::identity(self.order);
        for a in self.letters() {
            w = w.swap_positions(a);
        }
        w
    }
}

/// Section s_q: the canonical word of a permutation.
pub fn section_word(w: &Permutation) -> BasisWord {
    let mut descents = Vec::with_capacity(w.order().saturating_sub(1));
    let mut cur = *w;
    while cur.order() > 1 {
        let (i, rest) = peel(&cur);
        descents.push(i);
        cur = rest;
    }
    descents.reverse();
    BasisWord {
        order: w.order(),
        descents,
    }
}

/// Inverse of [`section_word`].
pub fn project_permutation(b: &BasisWord) -> Permutation {
    b.permutation()
}

/// Splits w = c_i ∘ σ(w') with c_i = s_i⋯s_1, returning (i, w').
pub(crate) fn peel(w: &Permutation) -> (usize, Permutation) {
    let n = w.order();
    let i = w.get(1) - 1;
    // c_i⁻¹ sends v ↦ v+1 for v ≤ i, i+1 ↦ 1, and fixes the rest
    let inv_c = |v: usize| {
        if v <= i {
            v + 1
        } else if v == i + 1 {
            1
        } else {
            v
        }
    };
    let images: Vec<usize> = (2..=n).map(|j| inv_c(w.get(j)) - 1).collect();
    (i, Permutation::from_images(&images).expect("peeled permutation is valid"))
}

/// Canonical letters of a permutation, cached per call site when hot.
pub fn canonical_letters(w: &Permutation) -> Vec<usize> {
    let mut out = Vec::with_capacity(w.inversions());
    let mut cur = *w;
    let mut depth = 0;
    while cur.order() > 1 {
        let (i, rest) = peel(&cur);
        out.extend((1..=i).rev().map(|a| a + depth));
        cur = rest;
        depth += 1;
    }
    out
}
