//! Inputs shared by the benchmarks.

use heckesym::{Hecke, Permutation, RationalScalar, Ring};

/// Σ_w (1 + μ^{inv(w)}) T_w: every basis element, with mixed coefficients.
pub fn dense_element(n: usize) -> Hecke {
    Permutation::all(n).into_iter().fold(Hecke::generic_zero(n), |acc, w| {
        let c = RationalScalar::one().plus(&RationalScalar::mu_pow(w.inversions() as i32));
        acc.add(&Hecke::generic_basis(w).scale(&c))
    })
}

/// The longest element T_{w₀} of H_n.
pub fn longest(n: usize) -> Hecke {
    let images: Vec<usize> = (1..=n).rev().collect();
    Hecke::generic_basis(Permutation::from_images(&images).expect("reversal"))
}
