use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;

use super::permutation::Permutation;
use super::word::canonical_letters;
use crate::error::{Error, Result};
use crate::field::{Field, Involution, Ring};
use crate::scalar::RationalScalar;

/// An element of H_n(q) in the T-basis, coefficients in `R`.
///
/// The parameter q travels with the element so that the same code serves
/// the generic algebra over ℚ(μ) and its specializations.
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeElement<R> {
    order: usize,
    q: R,
    terms: BTreeMap<Permutation, R>,
}

/// The generic algebra over ℚ(μ) with q = μ².
pub type Hecke = HeckeElement<RationalScalar>;

fn accumulate<R: Ring>(map: &mut BTreeMap<Permutation, R>, w: Permutation, c: R) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get().plus(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

impl<R: Field> HeckeElement<R> {
    pub fn zero(order: usize, q: R) -> Self {
        Self {
            order,
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(order: usize, c: R, q: R) -> Self {
        let mut e = Self::zero(order, q);
        accumulate(&mut e.terms, Permutation::identity(order), c);
        e
    }

    pub fn one(order: usize, q: R) -> Self {
        Self::scalar(order, R::one(), q)
    }

    pub fn basis(w: Permutation, q: R) -> Self {
        let mut e = Self::zero(w.order(), q);
        e.terms.insert(w, R::one());
        e
    }

    /// T_{s_i}.
    pub fn generator_with(order: usize, i: usize, q: R) -> Result<Self> {
        if i == 0 || i >= order {
            return Err(Error::IndexOutOfRange { index: i, order });
        }
        Ok(Self::basis(Permutation::identity(order).swap_positions(i), q))
    }

    /// e_i = (1 + g_i)/(q + 1).
    pub fn idempotent_with(order: usize, i: usize, q: R) -> Result<Self> {
        let g = Self::generator_with(order, i, q.clone())?;
        let s = q
            .plus(&R::one())
            .inv()
            .ok_or_else(|| Error::PoleAtPoint("q = -1".into()))?;
        Ok(g.add(&Self::one(order, q)).scale(&s))
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, R)>>(order: usize, q: R, iter: I) -> Result<Self> {
        let mut e = Self::zero(order, q);
        for (w, c) in iter {
            if w.order() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: w.order(),
                });
            }
            accumulate(&mut e.terms, w, c);
        }
        Ok(e)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn q(&self) -> &R {
        &self.q
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, R> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> R {
        self.terms.get(w).cloned().unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if self.q != other.q {
            return Err(Error::ParameterMismatch);
        }
        Ok(())
    }

    /// Sum; panics on order mismatch (use [`Self::try_add`] to recover).
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("compatible operands")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            accumulate(&mut out.terms, *w, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&R::one().negate())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.order, self.q.clone());
        }
        Self {
            order: self.order,
            q: self.q.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (*w, x.times(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    fn left_generator_terms(
        terms: &BTreeMap<Permutation, R>,
        i: usize,
        q: &R,
        qm1: &R,
    ) -> BTreeMap<Permutation, R> {
        let mut out = BTreeMap::new();
        for (w, c) in terms {
            let sw = w.swap_values(i);
            if w.left_ascent(i) {
                accumulate(&mut out, sw, c.clone());
            } else {
                accumulate(&mut out, *w, qm1.times(c));
                accumulate(&mut out, sw, q.times(c));
            }
        }
        out
    }

    fn right_generator_terms(
        terms: &BTreeMap<Permutation, R>,
        i: usize,
        q: &R,
        qm1: &R,
    ) -> BTreeMap<Permutation, R> {
        let mut out = BTreeMap::new();
        for (w, c) in terms {
            let ws = w.swap_positions(i);
            if w.right_ascent(i) {
                accumulate(&mut out, ws, c.clone());
            } else {
                accumulate(&mut out, *w, qm1.times(c));
                accumulate(&mut out, ws, q.times(c));
            }
        }
        out
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.order {
            return Err(Error::IndexOutOfRange {
                index: i,
                order: self.order,
            });
        }
        Ok(())
    }

    /// g_i · self.
    pub fn left_mul_generator(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let qm1 = self.q.minus(&R::one());
        Ok(Self {
            order: self.order,
            q: self.q.clone(),
            terms: Self::left_generator_terms(&self.terms, i, &self.q, &qm1),
        })
    }

    /// self · g_i.
    pub fn right_mul_generator(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let qm1 = self.q.minus(&R::one());
        Ok(Self {
            order: self.order,
            q: self.q.clone(),
            terms: Self::right_generator_terms(&self.terms, i, &self.q, &qm1),
        })
    }

    /// Product in H_n(q): each left basis word acts letter by letter on the
    /// right factor. Coefficients are brought to a common denominator first
    /// so that the inner loop stays on cheap representatives.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let da = R::common_denominator(self.terms.values());
        let db = R::common_denominator(other.terms.values());
        let b_terms: BTreeMap<Permutation, R> = if db.is_one() {
            other.terms.clone()
        } else {
            other.terms.iter().map(|(w, c)| (*w, c.times(&db))).collect()
        };
        let qm1 = self.q.minus(&R::one());
        let mut acc = BTreeMap::new();
        for (v, c) in &self.terms {
            let c = if da.is_one() { c.clone() } else { c.times(&da) };
            let mut x = b_terms.clone();
            for &a in canonical_letters(v).iter().rev() {
                x = Self::left_generator_terms(&x, a, &self.q, &qm1);
            }
            for (w, d) in x {
                accumulate(&mut acc, w, c.times(&d));
            }
        }
        let denom = da.times(&db);
        if !denom.is_one() {
            let inv = denom.inv().expect("common denominator is nonzero");
            acc = acc
                .into_iter()
                .map(|(w, c)| (w, c.times(&inv)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
        }
        Ok(Self {
            order: self.order,
            q: self.q.clone(),
            terms: acc,
        })
    }

    /// Applies the word g_{a_1}⋯g_{a_k} on the left.
    pub fn left_mul_word(&self, letters: &[usize]) -> Result<Self> {
        let mut x = self.clone();
        for &a in letters.iter().rev() {
            x = x.left_mul_generator(a)?;
        }
        Ok(x)
    }

    /// Applies the word g_{a_1}⋯g_{a_k} on the right.
    pub fn right_mul_word(&self, letters: &[usize]) -> Result<Self> {
        let mut x = self.clone();
        for &a in letters {
            x = x.right_mul_generator(a)?;
        }
        Ok(x)
    }

    /// σ: g_i ↦ g_{i+1}, into order n+1.
    pub fn shift(&self) -> Self {
        Self {
            order: self.order + 1,
            q: self.q.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.shift(), c.clone())).collect(),
        }
    }

    pub fn shift_by(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |x, _| x.shift())
    }

    /// ι_{n,m}: the same element in H_m(q).
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: m,
            });
        }
        Ok(Self {
            order: m,
            q: self.q.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.embed(m), c.clone())).collect(),
        })
    }

    /// The standard involution for the given regime.
    ///
    /// When the conjugate of q equals q, g_i* = g_i and T_w* = T_{w⁻¹}.
    /// Otherwise each letter maps to ((q̄+1)g_i + (q̄−q))/(q+1) along the
    /// reversed canonical word.
    pub fn star(&self, mode: Involution) -> Self {
        let qbar = self.q.conj(mode);
        if qbar == self.q {
            return Self {
                order: self.order,
                q: self.q.clone(),
                terms: self
                    .terms
                    .iter()
                    .map(|(w, c)| (w.inverse(), c.conj(mode)))
                    .collect(),
            };
        }
        let denom = self.q.plus(&R::one()).inv().expect("q != -1");
        let alpha = qbar.plus(&R::one()).times(&denom);
        let beta = qbar.minus(&self.q).times(&denom);
        let mut out = Self::zero(self.order, self.q.clone());
        for (w, c) in &self.terms {
            let mut x = Self::one(self.order, self.q.clone());
            for a in canonical_letters(w) {
                let gx = x.left_mul_generator(a).expect("letter in range");
                x = gx.scale(&alpha).add(&x.scale(&beta));
            }
            out = out.add(&x.scale(&c.conj(mode)));
        }
        out
    }

    /// The automorphism α: g_i ↦ q − 1 − g_i.
    pub fn alpha_dual(&self) -> Self {
        let qm1 = self.q.minus(&R::one());
        let mut out = Self::zero(self.order, self.q.clone());
        for (w, c) in &self.terms {
            let mut x = Self::scalar(self.order, c.clone(), self.q.clone());
            for &a in canonical_letters(w).iter().rev() {
                let gx = x.left_mul_generator(a).expect("letter in range");
                x = x.scale(&qm1).sub(&gx);
            }
            out = out.add(&x);
        }
        out
    }

    /// Maps coefficients (and q) into another field.
    pub fn specialize<S: Field>(&self, q: S, f: impl Fn(&R) -> Result<S>) -> Result<HeckeElement<S>> {
        let mut out = HeckeElement::zero(self.order, q);
        for (w, c) in &self.terms {
            accumulate(&mut out.terms, *w, f(c)?);
        }
        Ok(out)
    }

    /// The coefficient of largest modulus under `abs`, with its basis word.
    pub fn max_term_by(&self, abs: impl Fn(&R) -> f64) -> Option<(Permutation, f64)> {
        self.terms
            .iter()
            .map(|(w, c)| (*w, abs(c)))
            .fold(None, |best, (w, a)| match best {
                Some((_, b)) if b >= a => best,
                _ => Some((w, a)),
            })
    }
}

impl Hecke {
    pub fn generic_one(order: usize) -> Self {
        Self::one(order, RationalScalar::q())
    }

    pub fn generic_zero(order: usize) -> Self {
        Self::zero(order, RationalScalar::q())
    }

    pub fn generic_basis(w: Permutation) -> Self {
        Self::basis(w, RationalScalar::q())
    }

    pub fn generic_scalar(order: usize, c: RationalScalar) -> Self {
        Self::scalar(order, c, RationalScalar::q())
    }

    /// Specialization at a rational μ₀.
    pub fn at_rational_mu(&self, mu: &BigRational) -> Result<HeckeElement<BigRational>> {
        let q = self.q.evaluate_rational(mu)?;
        self.specialize(q, |c| c.evaluate_rational(mu))
    }

    /// Specialization at a rational q₀; fails on odd powers of μ.
    pub fn at_rational_q(&self, q: &BigRational) -> Result<HeckeElement<BigRational>> {
        self.specialize(q.clone(), |c| c.evaluate_q(q))
    }

    /// Specialization at a complex μ₀.
    pub fn at_complex_mu(&self, mu: Complex64) -> Result<HeckeElement<Complex64>> {
        let q = self.q.evaluate_complex(mu)?;
        self.specialize(q, |c| c.evaluate_complex(mu))
    }
}

/// g_i in H_n(q) over ℚ(μ).
pub fn generator(n: usize, i: usize) -> Result<Hecke> {
    Hecke::generator_with(n, i, RationalScalar::q())
}

/// e_i = (1 + g_i)/(q + 1) over ℚ(μ).
pub fn idempotent_e(n: usize, i: usize) -> Result<Hecke> {
    Hecke::idempotent_with(n, i, RationalScalar::q())
}

pub fn multiply<R: Field>(a: &HeckeElement<R>, b: &HeckeElement<R>) -> Result<HeckeElement<R>> {
    a.multiply(b)
}

impl<R: Field + fmt::Display> fmt::Display for HeckeElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}) * {}", c, w)?;
        }
        Ok(())
    }
}
