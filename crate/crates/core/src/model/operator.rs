use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Field, Involution, Ring};

/// Row-major multi-index: the first tensor factor is the most significant
/// digit. Digits are 0-based.
pub fn digits_of(mut index: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = index % d;
        index /= d;
    }
    out
}

pub fn index_of(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}

/// A sparse linear map H^⊗n_in → H^⊗n_out with dim H = d.
///
/// Vectors are operators with `n_in = 0` and covectors have `n_out = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOperator<R> {
    d: usize,
    n_out: usize,
    n_in: usize,
    entries: BTreeMap<(usize, usize), R>,
}

fn insert_add<R: Ring>(map: &mut BTreeMap<(usize, usize), R>, key: (usize, usize), c: R) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
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

impl<R: Ring> TensorOperator<R> {
    pub fn zero(d: usize, n_out: usize, n_in: usize) -> Self {
        Self {
            d,
            n_out,
            n_in,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(d: usize, n: usize) -> Self {
        let mut op = Self::zero(d, n, n);
        for k in 0..d.pow(n as u32) {
            op.entries.insert((k, k), R::one());
        }
        op
    }

    pub fn from_entries<I>(d: usize, n_out: usize, n_in: usize, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), R)>,
    {
        let mut op = Self::zero(d, n_out, n_in);
        let (ro, ci) = (op.dim_out(), op.dim_in());
        for ((r, c), v) in iter {
            if r >= ro || c >= ci {
                return Err(Error::ShapeMismatch(format!(
                    "entry ({}, {}) outside {}x{}",
                    r, c, ro, ci
                )));
            }
            insert_add(&mut op.entries, (r, c), v);
        }
        Ok(op)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn dim_out(&self) -> usize {
        self.d.pow(self.n_out as u32)
    }

    pub fn dim_in(&self) -> usize {
        self.d.pow(self.n_in as u32)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), R> {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> R {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.d, self.n_out, self.n_in) != (other.d, other.n_out, other.n_in) {
            return Err(Error::ShapeMismatch(format!(
                "(d={}, {}<-{}) vs (d={}, {}<-{})",
                self.d, self.n_out, self.n_in, other.d, other.n_out, other.n_in
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (k, v) in &other.entries {
            insert_add(&mut out.entries, *k, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&R::one().negate()))
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.d, self.n_out, self.n_in);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.entries {
            let x = v.times(c);
            if !x.is_zero() {
                out.entries.insert(*k, x);
            }
        }
        out
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.d != other.d || self.n_in != other.n_out {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose (d={}, {}<-{}) with (d={}, {}<-{})",
                self.d, self.n_out, self.n_in, other.d, other.n_out, other.n_in
            )));
        }
        let mut out = Self::zero(self.d, self.n_out, other.n_in);
        for (&(i, j), a) in &self.entries {
            for (&(_, k), b) in other.entries.range((j, 0)..(j + 1, 0)) {
                insert_add(&mut out.entries, (i, k), a.times(b));
            }
        }
        Ok(out)
    }

    /// Kronecker product; `self` acts on the leading factors.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::ShapeMismatch(format!("local dimensions {} and {}", self.d, other.d)));
        }
        let (ro, ci) = (other.dim_out(), other.dim_in());
        let mut out = Self::zero(self.d, self.n_out + other.n_out, self.n_in + other.n_in);
        for (&(i, j), a) in &self.entries {
            for (&(k, l), b) in &other.entries {
                out.entries.insert((i * ro + k, j * ci + l), a.times(b));
            }
        }
        Ok(out)
    }

    /// 1_{H^⊗k} ⊗ self.
    pub fn pad_left(&self, k: usize) -> Self {
        Self::identity(self.d, k).tensor(self).expect("same d")
    }

    /// self ⊗ 1_{H^⊗k}.
    pub fn pad_right(&self, k: usize) -> Self {
        self.tensor(&Self::identity(self.d, k)).expect("same d")
    }

    pub fn transpose(&self) -> Self {
        Self {
            d: self.d,
            n_out: self.n_in,
            n_in: self.n_out,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TensorOperator<S> {
        self.try_map(|x| Ok(f(x))).expect("infallible")
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<TensorOperator<S>> {
        let mut out = TensorOperator::zero(self.d, self.n_out, self.n_in);
        for (k, v) in &self.entries {
            let x = f(v)?;
            if !x.is_zero() {
                out.entries.insert(*k, x);
            }
        }
        Ok(out)
    }

    /// Largest entry under `abs`, with its position.
    pub fn max_entry_by(&self, abs: impl Fn(&R) -> f64) -> Option<((usize, usize), f64)> {
        self.entries
            .iter()
            .map(|(k, v)| (*k, abs(v)))
            .fold(None, |best, (k, a)| match best {
                Some((_, b)) if b >= a => best,
                _ => Some((k, a)),
            })
    }

    pub fn to_dense(&self) -> Vec<Vec<R>> {
        let mut m = vec![vec![R::zero(); self.dim_in()]; self.dim_out()];
        for (&(i, j), v) in &self.entries {
            m[i][j] = v.clone();
        }
        m
    }

    /// Human-readable position "(row digits | col digits)", 1-based.
    pub fn describe_entry(&self, row: usize, col: usize) -> String {
        let fmt = |idx: usize, n: usize| {
            digits_of(idx, self.d, n)
                .iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join("")
        };
        format!("({}|{})", fmt(row, self.n_out), fmt(col, self.n_in))
    }

    /// First differing entry, as (position, difference).
    pub fn first_difference(&self, other: &Self) -> Option<(String, R)> {
        if self.same_shape(other).is_err() {
            return Some(("shape".into(), R::one()));
        }
        let diff = self.sub(other).expect("same shape");
        diff.entries
            .iter()
            .next()
            .map(|(&(i, j), v)| (diff.describe_entry(i, j), v.clone()))
    }
}

impl<R: Field> TensorOperator<R> {
    /// Conjugate transpose under the given involution of the scalars.
    pub fn adjoint(&self, mode: Involution) -> Self {
        Self {
            d: self.d,
            n_out: self.n_in,
            n_in: self.n_out,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.conj(mode))).collect(),
        }
    }
}

/// The flip θ(ψ_i ⊗ ψ_j) = ψ_j ⊗ ψ_i.
pub fn flip<R: Ring>(d: usize) -> TensorOperator<R> {
    let mut op = TensorOperator::zero(d, 2, 2);
    for i in 0..d {
        for j in 0..d {
            op.entries.insert((j * d + i, i * d + j), R::one());
        }
    }
    op
}

/// An element of H^⊗n.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorVector<R>(TensorOperator<R>);

impl<R: Ring> TensorVector<R> {
    pub fn zero(d: usize, n: usize) -> Self {
        Self(TensorOperator::zero(d, n, 0))
    }

    /// ψ_{i_1} ⊗ … ⊗ ψ_{i_n}, indices 1-based.
    pub fn basis(d: usize, indices: &[usize]) -> Result<Self> {
        Self::from_terms(d, indices.len(), [(indices.to_vec(), R::one())])
    }

    /// Σ c ψ_{i_1} ⊗ … with 1-based index tuples.
    pub fn from_terms<I>(d: usize, n: usize, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, R)>,
    {
        let mut v = Self::zero(d, n);
        for (idx, c) in iter {
            if idx.len() != n || idx.iter().any(|&i| i == 0 || i > d) {
                return Err(Error::ShapeMismatch(format!("index {:?} for d={}, n={}", idx, d, n)));
            }
            let digits: Vec<usize> = idx.iter().map(|i| i - 1).collect();
            insert_add(&mut v.0.entries, (index_of(&digits, d), 0), c);
        }
        Ok(v)
    }

    pub fn from_operator(op: TensorOperator<R>) -> Result<Self> {
        if op.n_in != 0 {
            return Err(Error::ShapeMismatch("operator is not a vector".into()));
        }
        Ok(Self(op))
    }

    pub fn op(&self) -> &TensorOperator<R> {
        &self.0
    }

    pub fn into_op(self) -> TensorOperator<R> {
        self.0
    }

    pub fn d(&self) -> usize {
        self.0.d
    }

    pub fn n(&self) -> usize {
        self.0.n_out
    }

    /// Coefficient of ψ_{i_1} ⊗ …, 1-based.
    pub fn coeff(&self, indices: &[usize]) -> R {
        let digits: Vec<usize> = indices.iter().map(|i| i - 1).collect();
        self.0.get(index_of(&digits, self.d()), 0)
    }

    /// (1-based index tuple, coefficient) pairs in lexicographic order.
    pub fn terms(&self) -> Vec<(Vec<usize>, R)> {
        self.0
            .entries
            .iter()
            .map(|(&(r, _), c)| {
                let idx = digits_of(r, self.d(), self.n()).iter().map(|x| x + 1).collect();
                (idx, c.clone())
            })
            .collect()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self(self.0.scale(c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.add(&other.0)?))
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.tensor(&other.0)?))
    }

    pub fn apply(op: &TensorOperator<R>, v: &Self) -> Result<Self> {
        Ok(Self(op.compose(&v.0)?))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

#[derive(Serialize, Deserialize)]
struct OperatorWire<R> {
    d: usize,
    n_out: usize,
    n_in: usize,
    entries: Vec<(usize, usize, R)>,
}

impl<R: Ring + Serialize> Serialize for TensorOperator<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OperatorWire {
            d: self.d,
            n_out: self.n_out,
            n_in: self.n_in,
            entries: self.entries.iter().map(|(&(i, j), v)| (i, j, v.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for TensorOperator<R> {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = OperatorWire::<R>::deserialize(de)?;
        if w.entries.iter().any(|(_, _, v)| v.is_zero()) {
            return Err(D::Error::custom("stored zero entry"));
        }
        Self::from_entries(w.d, w.n_out, w.n_in, w.entries.into_iter().map(|(i, j, v)| ((i, j), v)))
            .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct VectorWire<R> {
    d: usize,
    n: usize,
    entries: Vec<(usize, R)>,
}

impl<R: Ring + Serialize> Serialize for TensorVector<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VectorWire {
            d: self.d(),
            n: self.n(),
            entries: self.0.entries.iter().map(|(&(i, _), v)| (i, v.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for TensorVector<R> {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = VectorWire::<R>::deserialize(de)?;
        if w.entries.iter().any(|(_, v)| v.is_zero()) {
            return Err(D::Error::custom("stored zero entry"));
        }
        TensorOperator::from_entries(w.d, w.n, 0, w.entries.into_iter().map(|(i, v)| ((i, 0), v)))
            .map(Self)
            .map_err(D::Error::custom)
    }
}
