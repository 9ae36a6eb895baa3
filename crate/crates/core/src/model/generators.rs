use super::operator::TensorOperator;
use crate::field::{Field, Ring};
use crate::scalar::RationalScalar;

/// A two-site operator stored column by column: `cols[a*d + b]` lists the
/// images of ψ_a ⊗ ψ_b as (pair index, coefficient).
#[derive(Clone, Debug, PartialEq)]
pub struct LocalGenerator<R> {
    d: usize,
    cols: Vec<Vec<(usize, R)>>,
}

impl<R: Ring> LocalGenerator<R> {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn column(&self, pair: usize) -> &[(usize, R)] {
        &self.cols[pair]
    }

    /// The model generator for a given μ (q = μ²):
    ///
    /// ```text
    /// g ψ_i⊗ψ_j = −μ ψ_j⊗ψ_i                        i < j
    /// g ψ_i⊗ψ_i = −ψ_i⊗ψ_i
    /// g ψ_i⊗ψ_j = (q−1) ψ_i⊗ψ_j − μ ψ_j⊗ψ_i          i > j
    /// ```
    pub fn jimbo_woronowicz(d: usize, mu: &R) -> Self {
        let q = mu.times(mu);
        let qm1 = q.minus(&R::one());
        let neg_mu = mu.negate();
        Self::from_rule(d, |i, j| {
            use std::cmp::Ordering::*;
            match i.cmp(&j) {
                Less => vec![((j, i), neg_mu.clone())],
                Equal => vec![((i, i), R::one().negate())],
                Greater => vec![((i, j), qm1.clone()), ((j, i), neg_mu.clone())],
            }
        })
    }

    /// The same generator in the rescaled basis f_x = μ^{−inv(x)} ψ_x, where
    /// only q appears:
    ///
    /// ```text
    /// g f_ab = −q f_ba                 a < b
    /// g f_aa = −f_aa
    /// g f_ab = (q−1) f_ab − f_ba       a > b
    /// ```
    pub fn gauge(d: usize, q: &R) -> Self {
        Self::gauge_scaled(d, q, &R::one())
    }

    /// b·g in the rescaled basis for q = a/b, given as (a, b): all entries
    /// are then ring elements.
    pub fn gauge_scaled(d: usize, a: &R, b: &R) -> Self {
        let neg_a = a.negate();
        let neg_b = b.negate();
        let amb = a.minus(b);
        Self::from_rule(d, |i, j| {
            use std::cmp::Ordering::*;
            match i.cmp(&j) {
                Less => vec![((j, i), neg_a.clone())],
                Equal => vec![((i, i), neg_b.clone())],
                Greater => vec![((i, j), amb.clone()), ((j, i), neg_b.clone())],
            }
        })
    }

    fn from_rule(d: usize, rule: impl Fn(usize, usize) -> Vec<((usize, usize), R)>) -> Self {
        let mut cols = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                cols.push(
                    rule(i, j)
                        .into_iter()
                        .map(|((a, b), c)| (a * d + b, c))
                        .collect(),
                );
            }
        }
        Self { d, cols }
    }

    pub fn to_operator(&self) -> TensorOperator<R> {
        let d = self.d;
        TensorOperator::from_entries(
            d,
            2,
            2,
            self.cols
                .iter()
                .enumerate()
                .flat_map(|(col, list)| list.iter().map(move |(row, c)| ((*row, col), c.clone()))),
        )
        .expect("pair indices in range")
    }

    /// (1^{⊗(i−1)} ⊗ g ⊗ 1) ∘ op, acting on output sites i, i+1 (1-based).
    pub fn apply_left(&self, i: usize, op: &TensorOperator<R>) -> TensorOperator<R> {
        let d = self.d;
        let n = op.n_out();
        assert!(i >= 1 && i < n, "site {} out of range for {} factors", i, n);
        let low = d.pow((n - i - 1) as u32);
        let block = d * d;
        let mut out = Vec::with_capacity(op.nnz() * 2);
        for (&(row, col), v) in op.entries() {
            let pair = (row / low) % block;
            let base = row - pair * low;
            for (p, c) in &self.cols[pair] {
                out.push(((base + p * low, col), c.times(v)));
            }
        }
        TensorOperator::from_entries(d, n, op.n_in(), out).expect("indices in range")
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LocalGenerator<S> {
        LocalGenerator {
            d: self.d,
            cols: self
                .cols
                .iter()
                .map(|l| l.iter().map(|(p, c)| (*p, f(c))).collect())
                .collect(),
        }
    }
}

/// g_q on H ⊗ H over ℚ(μ).
pub fn gq_operator(d: usize) -> TensorOperator<RationalScalar> {
    LocalGenerator::jimbo_woronowicz(d, &RationalScalar::mu()).to_operator()
}

/// e_q = (1 + g_q)/(q + 1) over ℚ(μ).
pub fn eq_operator(d: usize) -> TensorOperator<RationalScalar> {
    eq_from(&gq_operator(d), &RationalScalar::q())
}

pub fn eq_from<R: Field>(g: &TensorOperator<R>, q: &R) -> TensorOperator<R> {
    let s = q.plus(&R::one()).inv().expect("q != -1");
    g.add(&TensorOperator::identity(g.d(), 2)).expect("same shape").scale(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::operator::TensorVector;

    fn q() -> RationalScalar {
        RationalScalar::q()
    }

    #[test]
    fn d1_is_minus_one() {
        let g = gq_operator(1);
        assert_eq!(g.entries().len(), 1);
        assert_eq!(g.get(0, 0), RationalScalar::from_int(-1));
    }

    #[test]
    fn d2_action() {
        let g = gq_operator(2);
        let mu = RationalScalar::mu();
        let v12 = TensorVector::basis(2, &[1, 2]).unwrap();
        let img = TensorVector::apply(&g, &v12).unwrap();
        assert_eq!(img.terms(), vec![(vec![2, 1], -mu.clone())]);
        let v21 = TensorVector::basis(2, &[2, 1]).unwrap();
        let img = TensorVector::apply(&g, &v21).unwrap();
        assert_eq!(img.coeff(&[2, 1]), q() - RationalScalar::one());
        assert_eq!(img.coeff(&[1, 2]), -mu);
        let v11 = TensorVector::basis(2, &[1, 1]).unwrap();
        assert_eq!(TensorVector::apply(&g, &v11).unwrap(), v11.scale(&RationalScalar::from_int(-1)));
    }

    #[test]
    fn hecke_relation() {
        for d in 1..=4 {
            let g = gq_operator(d);
            let lhs = g.compose(&g).unwrap();
            let rhs = g
                .scale(&(q() - RationalScalar::one()))
                .add(&TensorOperator::identity(d, 2).scale(&q()))
                .unwrap();
            assert_eq!(lhs, rhs, "d = {}", d);
        }
    }

    #[test]
    fn eq_idempotent_and_kills_diagonal() {
        let e = eq_operator(3);
        assert_eq!(e.compose(&e).unwrap(), e);
        let v = TensorVector::basis(3, &[2, 2]).unwrap();
        assert!(TensorVector::apply(&e, &v).unwrap().is_zero());
    }

    #[test]
    fn apply_left_matches_kron() {
        let gen = LocalGenerator::jimbo_woronowicz(2, &RationalScalar::mu());
        let g = gen.to_operator();
        let id = TensorOperator::identity(2, 3);
        let direct = TensorOperator::identity(2, 1).tensor(&g).unwrap();
        assert_eq!(gen.apply_left(2, &id), direct);
        assert_eq!(gen.apply_left(1, &id), g.tensor(&TensorOperator::identity(2, 1)).unwrap());
    }
}
