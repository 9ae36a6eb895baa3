//! Exact arithmetic in ℚ(√S) for a non-square positive integer `S`.
//!
//! Used to specialize μ-dependent quantities at μ = √q₀ when q₀ is rational
//! but not a square, e.g. q₀ = 2.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::field::{Field, Involution, Ring};

/// The number `a + b·√S`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Surd<const S: u64> {
    pub a: BigRational,
    pub b: BigRational,
}

impl<const S: u64> Surd<S> {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        debug_assert!(!is_square(S), "radicand must not be a perfect square");
        Self { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Self::new(a, BigRational::zero())
    }

    /// √S itself.
    pub fn root() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    fn radicand() -> BigRational {
        BigRational::from_integer(BigInt::from(S))
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, e: i32) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Some(base.pow(e.unsigned_abs()))
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (S as f64).sqrt()
    }

    /// Sign of the real number `a + b√S`.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // opposite signs: compare a² with b²S
        let a2 = &self.a * &self.a;
        let b2s = &self.b * &self.b * Self::radicand();
        if a2 > b2s {
            sa
        } else {
            sb
        }
    }
}

fn sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn is_square(s: u64) -> bool {
    let r = (s as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).any(|x| x * x == s)
}

impl<const S: u64> Ring for Surd<S> {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        Self::new(&self.a + &o.a, &self.b + &o.b)
    }
    fn minus(&self, o: &Self) -> Self {
        Self::new(&self.a - &o.a, &self.b - &o.b)
    }
    fn times(&self, o: &Self) -> Self {
        let a = &self.a * &o.a + &self.b * &o.b * Self::radicand();
        let b = &self.a * &o.b + &self.b * &o.a;
        Self::new(a, b)
    }
    fn negate(&self) -> Self {
        Self::new(-&self.a, -&self.b)
    }
}

impl<const S: u64> Field for Surd<S> {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        let norm = &self.a * &self.a - &self.b * &self.b * Self::radicand();
        Some(Self::new(&self.a / &norm, -&self.b / &norm))
    }
    fn conj(&self, _mode: Involution) -> Self {
        self.clone()
    }
}

impl<const S: u64> fmt::Display for Surd<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, S)
    }
}
