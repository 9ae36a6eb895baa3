use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::generators::LocalGenerator;
use super::operator::{digits_of, index_of};
use crate::error::{Error, Result};
use crate::field::Ring;
use crate::hecke::{canonical_letters, Permutation};
use crate::linalg::rank_integer;

/// dim span{ε(T_w) : w ∈ S_n} on H^⊗n, dim H = d, at q = q₀.
///
/// Works in the rescaled basis f_x = μ^{−inv(x)}ψ_x, where ε(g_i) has
/// entries in ℚ(q₀); this conjugation does not change the dimension, and
/// neither does scaling the generator by the denominator of q₀. Every
/// ε(T_w) preserves the weight spaces (rearrangements of a fixed word), so
/// the rank of the stacked matrix M is read off the Gram matrix M·Mᵀ
/// accumulated one column f_y at a time. Columns whose words have the same
/// relative order give identical blocks and are visited once.
pub fn image_algebra_dimension(n: usize, d: usize, q0: &BigRational) -> Result<usize> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be positive".into()));
    }
    let a = q0.numer().clone();
    let b = q0.denom().clone();
    let m = [&a, &b, &(&a - &b)]
        .iter()
        .map(|x| x.to_f64().map(f64::abs).unwrap_or(f64::INFINITY))
        .fold(1.0, f64::max);
    // crude bound on |Gram entries|: d^n (2m)^{n(n-1)}
    let bits = (n * (n - 1)) as f64 * (2.0 * m).log2() + n as f64 * (d as f64).log2();
    let gram: Vec<Vec<BigInt>> = match (a.to_i128(), b.to_i128()) {
        (Some(ai), Some(bi)) if bits < 120.0 => {
            let gen = LocalGenerator::gauge_scaled(d, &ai, &bi);
            weight_gram(n, &gen)
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect()
        }
        _ => weight_gram(n, &LocalGenerator::gauge_scaled(d, &a, &b)),
    };
    Ok(rank_integer(gram))
}

/// Words in [0, d)ⁿ whose letters are exactly {0, …, k−1} for some k.
fn packed_words(n: usize, d: usize) -> Vec<Vec<usize>> {
    (0..d.pow(n as u32))
        .map(|k| digits_of(k, d, n))
        .filter(|y| {
            let max = *y.iter().max().expect("n > 0");
            (0..=max).all(|v| y.contains(&v))
        })
        .collect()
}

/// Distinct rearrangements of `y`, sorted.
fn weight_space(y: &[usize]) -> Vec<Vec<usize>> {
    let mut v = y.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next lexicographic permutation handles repeated letters
    loop {
        let n = v.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

fn weight_gram<R: Ring>(n: usize, gen: &LocalGenerator<R>) -> Vec<Vec<R>> {
    let d = gen.d();
    let mut perms = Permutation::all(n);
    perms.sort_by_key(|w| w.inversions());
    let pos: HashMap<Permutation, usize> = perms.iter().enumerate().map(|(k, w)| (*w, k)).collect();
    // T_w = g_a T_{s_a w} with a the first canonical letter
    let steps: Vec<Option<(usize, usize)>> = perms
        .iter()
        .map(|w| canonical_letters(w).first().map(|&a| (a, pos[&w.swap_values(a)])))
        .collect();
    let size = perms.len();

    packed_words(n, d)
        .par_iter()
        .map(|y| {
            let space = weight_space(y);
            let index: HashMap<usize, usize> =
                space.iter().enumerate().map(|(k, x)| (index_of(x, d), k)).collect();
            let start = index[&index_of(y, d)];
            let mut vecs: Vec<Vec<R>> = Vec::with_capacity(size);
            for step in &steps {
                let v = match step {
                    None => {
                        let mut v = vec![R::zero(); space.len()];
                        v[start] = R::one();
                        v
                    }
                    Some((a, prev)) => apply_site(gen, *a, &vecs[*prev], &space, &index, d),
                };
                vecs.push(v);
            }
            let mut g = vec![vec![R::zero(); size]; size];
            for i in 0..size {
                for j in i..size {
                    let mut s = R::zero();
                    for (x, y) in vecs[i].iter().zip(&vecs[j]) {
                        if !x.is_zero() && !y.is_zero() {
                            s = s.plus(&x.times(y));
                        }
                    }
                    g[i][j] = s.clone();
                    g[j][i] = s;
                }
            }
            g
        })
        .reduce(
            || vec![vec![R::zero(); size]; size],
            |mut acc, g| {
                for (ra, rg) in acc.iter_mut().zip(g) {
                    for (a, x) in ra.iter_mut().zip(rg) {
                        *a = a.plus(&x);
                    }
                }
                acc
            },
        )
}

fn apply_site<R: Ring>(
    gen: &LocalGenerator<R>,
    a: usize,
    v: &[R],
    space: &[Vec<usize>],
    index: &HashMap<usize, usize>,
    d: usize,
) -> Vec<R> {
    let mut out = vec![R::zero(); v.len()];
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let x = &space[k];
        let pair = x[a - 1] * d + x[a];
        for (p, g) in gen.column(pair) {
            let mut z = x.clone();
            z[a - 1] = p / d;
            z[a] = p % d;
            let t = index[&index_of(&z, d)];
            out[t] = out[t].plus(&g.times(c));
        }
    }
    out
}
