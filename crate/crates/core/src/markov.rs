//! The Markov trace ω_λ on H_∞(q), Gram matrices and the λ ladder.
//!
//! ω_λ is the unique linear functional with ω(1) = 1, ω(xy) = ω(yx) and
//! ω(x g_n) = λ ω(x) for x ∈ H_n(q). A permutation moving n factors as
//! w = u·s_{n−1}⋯s_k with u ∈ S_{n−1} and lengths adding, so
//!
//! ```text
//! ω(T_w) = ω(T_u g_{n−1} g_{n−2}⋯g_k) = λ · ω(g_{n−2}⋯g_k T_u)
//! ```
//!
//! by cyclicity, and the right side lives in H_{n−1}(q). This is what
//! [`markov_trace_with`] evaluates, memoized per permutation.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::{Field, Involution, Ring};
use crate::hecke::{canonical_letters, Hecke, HeckeElement, Permutation};
use crate::linalg;
use crate::report::Witness;
use crate::scalar::{lambda_d_at, RationalScalar};

/// w ∈ S_n with w(n) = n, viewed in S_{n−1}.
fn restrict(w: &Permutation) -> Permutation {
    let n = w.order();
    Permutation::from_images(&w.images()[..n - 1]).expect("w fixes n")
}

/// Memoized evaluation of ω_λ on basis words.
pub struct TraceTable<R> {
    q: R,
    lambda: R,
    memo: HashMap<Permutation, R>,
}

impl<R: Field> TraceTable<R> {
    pub fn new(q: R, lambda: R) -> Self {
        Self {
            q,
            lambda,
            memo: HashMap::new(),
        }
    }

    pub fn basis(&mut self, w: &Permutation) -> R {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let n = w.order();
        let v = if n <= 1 {
            R::one()
        } else if w.get(n) == n {
            self.basis(&restrict(w))
        } else {
            // T_w = T_u g_{n−1}⋯g_k with k = w⁻¹(n) and u fixing n
            let k = w.position_of(n);
            let mut u = *w;
            for j in k..n {
                u = u.swap_positions(j);
            }
            let mut x = HeckeElement::basis(restrict(&u), self.q.clone());
            for a in k..n - 1 {
                x = x.left_mul_generator(a).expect("letter below order");
            }
            let inner = self.element(&x);
            self.lambda.times(&inner)
        };
        self.memo.insert(*w, v.clone());
        v
    }

    pub fn element(&mut self, h: &HeckeElement<R>) -> R {
        let mut acc = R::zero();
        for (w, c) in h.terms() {
            acc = acc.plus(&c.times(&self.basis(w)));
        }
        acc
    }
}

/// ω_λ(h) for an element over any field.
pub fn markov_trace_with<R: Field>(h: &HeckeElement<R>, lambda: &R) -> R {
    TraceTable::new(h.q().clone(), lambda.clone()).element(h)
}

/// ω_λ(h) over ℚ(μ).
pub fn markov_trace(h: &Hecke, lambda: &RationalScalar) -> RationalScalar {
    markov_trace_with(h, lambda)
}

/// Π λ^{(k−1)} over the cycles of each basis permutation, extended
/// linearly.
///
/// This agrees with ω_λ on words such as g_1 and g_1g_2 but not in general:
/// on the reversal g_2g_1g_2 of S_3 it gives λ whereas ω_λ gives
/// λ((q−1)λ + q). Kept for comparison only.
pub fn cycle_rule_functional<R: Field>(h: &HeckeElement<R>, lambda: &R) -> R {
    let mut acc = R::zero();
    for (w, c) in h.terms() {
        let e: usize = w.cycle_lengths().iter().map(|k| k - 1).sum();
        acc = acc.plus(&c.times(&lambda.pow(e as u32)));
    }
    acc
}

/// G[v][w] = ω_λ(T_v* T_w) in the real regime, rows and columns in
/// lexicographic permutation order.
///
/// Each row is obtained by pulling the trace vector back through the
/// letters of T_{v⁻¹}, one generator at a time.
pub fn gram_matrix_with<R: Field>(n: usize, lambda: &R, q: &R) -> Vec<Vec<R>> {
    let perms = Permutation::all(n);
    let index: HashMap<Permutation, usize> = perms.iter().enumerate().map(|(k, w)| (*w, k)).collect();
    let mut table = TraceTable::new(q.clone(), lambda.clone());
    let trace: Vec<R> = perms.iter().map(|w| table.basis(w)).collect();
    let qm1 = q.minus(&R::one());
    perms
        .par_iter()
        .map(|v| {
            let mut f = trace.clone();
            // f_j(y) = f_{j−1}(g_{a_j} y) along T_{v⁻¹} = g_{a_1}⋯g_{a_k}
            for a in canonical_letters(&v.inverse()) {
                let prev = f.clone();
                for (k, u) in perms.iter().enumerate() {
                    let su = index[&u.swap_values(a)];
                    f[k] = if u.left_ascent(a) {
                        prev[su].clone()
                    } else {
                        qm1.times(&prev[k]).plus(&q.times(&prev[su]))
                    };
                }
            }
            f
        })
        .collect()
}

pub fn gram_matrix(n: usize, lambda: &RationalScalar) -> Vec<Vec<RationalScalar>> {
    gram_matrix_with(n, lambda, &RationalScalar::q())
}

/// Exact rank of the Gram matrix at a rational point.
pub fn gram_rank(n: usize, lambda: &BigRational, q0: &BigRational) -> usize {
    linalg::rank_rational(&gram_matrix_with(n, lambda, q0))
}

/// All leading principal minors of the Gram matrix are positive.
pub fn gram_positive_definite(n: usize, lambda: &BigRational, q0: &BigRational) -> bool {
    linalg::leading_minors_positive(&gram_matrix_with(n, lambda, q0))
}

/// Exact-rational CSV, one "numerator/denominator" cell per entry.
pub fn gram_csv(g: &[Vec<BigRational>]) -> String {
    let mut out = String::new();
    for row in g {
        let cells: Vec<String> = row.iter().map(|x| format!("{}/{}", x.numer(), x.denom())).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// ω_λ(h*h) = 0 at q = q₀.
pub fn kernel_membership(h: &Hecke, lambda: &BigRational, q0: &BigRational) -> Result<bool> {
    let hq = h.at_rational_q(q0)?;
    let hh = hq.star(Involution::Real).multiply(&hq)?;
    Ok(Ring::is_zero(&markov_trace_with(&hh, lambda)))
}

/// At λ = λ₋d the kernel starts at A_{d+1}: A_{d+1} is in it, A_d is
/// not. Returns the first violation.
pub fn kernel_matches_ladder(d: usize, lambda: &BigRational, q0: &BigRational) -> Result<Option<Witness>> {
    let top = crate::special::build_a(d as i32 + 1, d + 1)?;
    if !kernel_membership(&top, lambda, q0)? {
        return Ok(Some(Witness::new(format!("A_{}", d + 1), "not in kernel")));
    }
    let below = crate::special::build_a(d as i32, d + 1)?;
    if kernel_membership(&below, lambda, q0)? {
        return Ok(Some(Witness::new(format!("A_{}", d), "in kernel")));
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaClass {
    Interval,
    Ladder(i32),
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceParameter {
    pub lambda: BigRational,
    pub q: BigRational,
    pub class: LambdaClass,
}

impl fmt::Display for LambdaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaClass::Interval => write!(f, "interval"),
            LambdaClass::Ladder(d) => write!(f, "ladder({})", d),
            LambdaClass::Invalid => write!(f, "invalid"),
        }
    }
}

pub const DEFAULT_PROBE_BOUND: u32 = 12;

/// Ladder value λ_d(q₀) for some 0 < |d| ≤ probe bound, else the interval
/// [0, q₀ − 1], else invalid.
pub fn classify_lambda(lambda: &BigRational, q0: &BigRational, probe_bound: u32) -> TraceParameter {
    let mut class = LambdaClass::Invalid;
    'probe: for k in 1..=probe_bound as i32 {
        for d in [-k, k] {
            if lambda_d_at(d, q0).map(|v| &v == lambda).unwrap_or(false) {
                class = LambdaClass::Ladder(d);
                break 'probe;
            }
        }
    }
    if class == LambdaClass::Invalid {
        let upper = q0 - BigRational::one();
        if !lambda.is_negative() && *lambda <= upper {
            class = LambdaClass::Interval;
        }
    }
    TraceParameter {
        lambda: lambda.clone(),
        q: q0.clone(),
        class,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::generator;
    use crate::scalar::int;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn lam() -> RationalScalar {
        // any transcendental-looking stand-in works for the identities below
        RationalScalar::mu_pow(3)
    }

    #[test]
    fn small_words() {
        let l = lam();
        assert_eq!(markov_trace(&Hecke::generic_one(3), &l), RationalScalar::one());
        assert_eq!(markov_trace(&generator(2, 1).unwrap(), &l), l);
        let g12 = generator(3, 1).unwrap().multiply(&generator(3, 2).unwrap()).unwrap();
        assert_eq!(markov_trace(&g12, &l), l.clone() * l.clone());
    }

    #[test]
    fn cycle_rule_differs_on_reversal() {
        let l = lam();
        let g1 = generator(3, 1).unwrap();
        let g2 = generator(3, 2).unwrap();
        let rev = g2.multiply(&g1).unwrap().multiply(&g2).unwrap();
        assert_eq!(cycle_rule_functional(&rev, &l), l);
        let q = RationalScalar::q();
        let expected = l.clone() * ((q.clone() - RationalScalar::one()) * l + q);
        assert_eq!(markov_trace(&rev, &lam()), expected);
    }

    #[test]
    fn gram_n2() {
        let l = lam();
        let q = RationalScalar::q();
        let g = gram_matrix(2, &l);
        assert_eq!(g[0], vec![RationalScalar::one(), l.clone()]);
        assert_eq!(g[1][0], l);
        assert_eq!(g[1][1], (q.clone() - RationalScalar::one()) * l + q);
    }

    #[test]
    fn gram_det_vanishes_on_ladder() {
        let g = gram_matrix(3, &RationalScalar::lambda_d(-2).unwrap());
        assert!(Ring::is_zero(&linalg::determinant(g)));
        let g = gram_matrix(3, &lam());
        assert!(!Ring::is_zero(&linalg::determinant(g)));
    }

    #[test]
    fn ranks() {
        let q0 = int(2);
        assert_eq!(gram_rank(3, &rat(-1, 3), &q0), 5);
        assert_eq!(gram_rank(4, &rat(-1, 3), &q0), 14);
        assert_eq!(gram_rank(3, &rat(1, 2), &q0), 6);
    }

    #[test]
    fn kernel_examples() {
        let q0 = int(2);
        let a3 = crate::special::build_a(3, 3).unwrap();
        assert!(kernel_membership(&a3, &rat(-1, 3), &q0).unwrap());
        assert!(!kernel_membership(&generator(3, 1).unwrap(), &rat(-1, 3), &q0).unwrap());
        assert!(!kernel_membership(&a3, &rat(1, 2), &q0).unwrap());
    }

    #[test]
    fn classification() {
        let q0 = int(2);
        assert_eq!(classify_lambda(&rat(-1, 3), &q0, 8).class, LambdaClass::Ladder(-2));
        assert_eq!(classify_lambda(&rat(1, 2), &q0, 8).class, LambdaClass::Interval);
        assert_eq!(classify_lambda(&int(-5), &q0, 8).class, LambdaClass::Invalid);
    }

    #[test]
    fn csv_cells() {
        let s = gram_csv(&[vec![rat(1, 1), rat(-1, 3)]]);
        assert_eq!(s, "1/1,-1/3\n");
    }
}
