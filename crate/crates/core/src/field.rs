//! Coefficient traits shared by the symbolic, exact-rational and floating
//! point back ends.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

/// Which involution of the ground field is in force.
///
/// `Real` treats μ (and hence q) as real; `UnitCircle` treats μ as a point
/// of modulus one, so that conjugation substitutes μ ↦ μ⁻¹.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Involution {
    Real,
    UnitCircle,
}

/// Commutative ring operations used by the sparse operator kernels.
///
/// Method names are spelled out instead of relying on `std::ops` so that
/// generic code reads the same for every back end.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A field with an involution.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
    fn conj(&self, mode: Involution) -> Self;

    fn over(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.times(&i))
    }

    /// A common denominator for `values`; multiplying each value by it should
    /// produce cheap (denominator-free) representatives. Defaults to one.
    fn common_denominator<'a, I>(_values: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        Self: 'a,
    {
        Self::one()
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        BigRational::from_integer(BigInt::from(0))
    }
    fn one() -> Self {
        BigRational::from_integer(BigInt::from(1))
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self, _mode: Involution) -> Self {
        self.clone()
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Field for Complex64 {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
    /// Complex numbers carry their own conjugation; the regime only matters
    /// for formal scalars.
    fn conj(&self, _mode: Involution) -> Self {
        Complex64::conj(self)
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Field for f64 {
    fn inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
    fn conj(&self, _mode: Involution) -> Self {
        *self
    }
}

/// Machine integers for the integer-valued gauge operators. Overflow panics;
/// callers that may overflow use [`checked_ops`] instead.
impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(n: i64) -> Self {
        n as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("i128 overflow")
    }
    fn minus(&self, other: &Self) -> Self {
        self.checked_sub(*other).expect("i128 overflow")
    }
    fn times(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("i128 overflow")
    }
    fn negate(&self) -> Self {
        -*self
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        BigInt::from(0)
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// Overflow-aware helpers for the `i128` fast path.
pub mod checked_ops {
    pub fn mul_add(acc: i128, a: i128, b: i128) -> Option<i128> {
        a.checked_mul(b).and_then(|p| acc.checked_add(p))
    }
}
