//! Exact scalars: rational functions of μ over ℚ, with q = μ².

mod laurent;
mod poly;
mod serde_impl;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;

pub use laurent::LaurentPoly;
pub(crate) use laurent::{int, pow_rational};

use crate::error::{Error, Result};
use crate::field::{Field, Involution, Ring};
use crate::surd::Surd;

/// Default modulus below which a complex denominator counts as a pole.
pub const DEFAULT_POLE_TOLERANCE: f64 = 1e-12;

/// A reduced fraction of Laurent polynomials in μ.
///
/// Canonical form: numerator and denominator share no nonunit factor, the
/// denominator's lowest exponent is 0 and its lowest coefficient is 1.
/// Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalScalar {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// μ^k.
    pub fn mu_pow(k: i32) -> Self {
        Self::from_laurent(LaurentPoly::monomial(BigRational::one(), k))
    }

    pub fn mu() -> Self {
        Self::mu_pow(1)
    }

    /// q^k = μ^{2k}.
    pub fn q_pow(k: i32) -> Self {
        Self::mu_pow(2 * k)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when the value is a function of q alone.
    pub fn is_even(&self) -> bool {
        self.num.is_even() && self.den.is_even()
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return <Self as Ring>::zero();
        }
        if den.is_monomial() {
            let (e, c) = den.terms()[0].clone();
            return Self::from_laurent(num.scale(&c.recip()).shift(-e));
        }
        let (na, mut n) = num.to_dense();
        let (da, mut d) = den.to_dense();
        if n.len() > 1 {
            let g = poly::gcd(&n, &d);
            if g.len() > 1 {
                n = poly::divrem(&n, &g).0;
                d = poly::divrem(&d, &g).0;
            }
        }
        let c0 = d[0].clone();
        if !c0.is_one() {
            let inv = c0.recip();
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c *= &inv;
            }
        }
        let den = LaurentPoly::from_dense(0, d);
        let num = LaurentPoly::from_dense(na - da, n);
        if den.is_one() {
            return Self::from_laurent(num);
        }
        Self { num, den }
    }

    /// 1 + q + … + q^{n−1}.
    pub fn q_integer(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("q-integer needs n >= 1".into()));
        }
        Ok(Self::from_laurent(LaurentPoly::from_terms(
            (0..n as i32).map(|k| (2 * k, BigRational::one())),
        )))
    }

    /// n!_q = ∏_{k=1}^n (1 + q + … + q^{k−1}).
    pub fn q_factorial(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("q-factorial needs n >= 1".into()));
        }
        let mut acc = <Self as Ring>::one();
        for k in 1..=n {
            acc = acc.times(&Self::q_integer(k)?);
        }
        Ok(acc)
    }

    /// n!_{1/q}, the q-factorial at the inverse parameter.
    pub fn q_factorial_inverse_parameter(n: u32) -> Result<Self> {
        Ok(Self::q_factorial(n)?.conjugate(Involution::UnitCircle))
    }

    /// λ_d = q^d (q − 1) / (q^d − 1).
    pub fn lambda_d(d: i32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("lambda_d needs d != 0".into()));
        }
        let qd = Self::q_pow(d);
        let num = qd.times(&Self::q().minus(&<Self as Ring>::one()));
        let den = qd.minus(&<Self as Ring>::one());
        Ok(num.over(&den).expect("q^d - 1 is nonzero"))
    }

    pub fn evaluate_rational(&self, mu: &BigRational) -> Result<BigRational> {
        let pole = || Error::PoleAtPoint(mu.to_string());
        let d = self.den.eval_rational(mu).ok_or_else(pole)?;
        if Ring::is_zero(&d) {
            return Err(pole());
        }
        let n = self.num.eval_rational(mu).ok_or_else(pole)?;
        Ok(n / d)
    }

    pub fn evaluate_complex(&self, mu: Complex64) -> Result<Complex64> {
        self.evaluate_complex_with_tolerance(mu, DEFAULT_POLE_TOLERANCE)
    }

    pub fn evaluate_complex_with_tolerance(&self, mu: Complex64, tol: f64) -> Result<Complex64> {
        let pole = || Error::PoleAtPoint(format!("{}", mu));
        if mu.norm() <= tol && self.num.min_exp().map_or(false, |e| e < 0) {
            return Err(pole());
        }
        let d = self.den.eval_complex(mu);
        if d.norm() <= tol {
            return Err(pole());
        }
        Ok(self.num.eval_complex(mu) / d)
    }

    /// Value at q = q₀ for scalars that depend on q only.
    pub fn evaluate_q(&self, q: &BigRational) -> Result<BigRational> {
        if !self.is_even() {
            return Err(Error::OddInMu);
        }
        let pole = || Error::PoleAtPoint(format!("q = {}", q));
        let d = self.den.eval_even_at_q(q).ok_or_else(pole)?;
        if d.is_zero() {
            return Err(pole());
        }
        let n = self.num.eval_even_at_q(q).ok_or_else(pole)?;
        Ok(n / d)
    }

    /// Exact value at μ = √S.
    pub fn evaluate_surd<const S: u64>(&self) -> Result<Surd<S>> {
        let pole = || Error::PoleAtPoint(format!("sqrt({})", S));
        let d = eval_laurent_surd::<S>(&self.den);
        if Ring::is_zero(&d) {
            return Err(pole());
        }
        let n = eval_laurent_surd::<S>(&self.num);
        Ok(n.times(&d.inv().ok_or_else(pole)?))
    }

    pub fn conjugate(&self, mode: Involution) -> Self {
        match mode {
            Involution::Real => self.clone(),
            Involution::UnitCircle => {
                Self::canonical(self.num.invert_variable(), self.den.invert_variable())
            }
        }
    }

    fn lcm_den(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        if a.is_one() || a == b {
            return b.clone();
        }
        if b.is_one() {
            return a.clone();
        }
        let (_, da) = a.to_dense();
        let (_, db) = b.to_dense();
        let g = poly::gcd(&da, &db);
        let quotient = poly::divrem(&da, &g).0;
        LaurentPoly::from_dense(0, quotient).mul(b)
    }
}

fn eval_laurent_surd<const S: u64>(p: &LaurentPoly) -> Surd<S> {
    let root = Surd::<S>::root();
    let mut acc = <Surd<S> as Ring>::zero();
    for (e, c) in p.terms() {
        let m = root.powi(*e).expect("sqrt is invertible");
        acc = acc.plus(&m.times(&Surd::rational(c.clone())));
    }
    acc
}

impl Ring for RationalScalar {
    fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }
    fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.add(&other.num));
        }
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::canonical(self.num.add(&other.num), self.den.clone());
        }
        Self::canonical(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn times(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.mul(&other.num));
        }
        if self.num.is_zero() || other.num.is_zero() {
            return <Self as Ring>::zero();
        }
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn negate(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Field for RationalScalar {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::canonical(self.den.clone(), self.num.clone()))
        }
    }

    fn conj(&self, mode: Involution) -> Self {
        self.conjugate(mode)
    }

    fn common_denominator<'a, I>(values: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut acc = LaurentPoly::one();
        for v in values {
            if !v.den.is_one() {
                acc = Self::lcm_den(&acc, &v.den);
            }
        }
        Self::from_laurent(acc)
    }
}

impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            self.num.write_ascii(f)
        } else {
            write!(f, "(")?;
            self.num.write_ascii(f)?;
            write!(f, ")/(")?;
            self.den.write_ascii(f)?;
            write!(f, ")")
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a RationalScalar> for &'a RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: &'a RationalScalar) -> RationalScalar {
                $body(self, rhs)
            }
        }
        impl $tr for RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: RationalScalar) -> RationalScalar {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RationalScalar, b: &RationalScalar| a.plus(b));
forward_binop!(Sub, sub, |a: &RationalScalar, b: &RationalScalar| a.minus(b));
forward_binop!(Mul, mul, |a: &RationalScalar, b: &RationalScalar| a.times(b));
forward_binop!(Div, div, |a: &RationalScalar, b: &RationalScalar| a.over(b)
    .expect("division by zero scalar"));

impl Neg for RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        self.negate()
    }
}

impl Neg for &RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        self.negate()
    }
}

impl From<i64> for RationalScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for RationalScalar {
    fn from(c: BigRational) -> Self {
        Self::from_rational(c)
    }
}

pub fn q_integer(n: u32) -> Result<RationalScalar> {
    RationalScalar::q_integer(n)
}

pub fn q_factorial(n: u32) -> Result<RationalScalar> {
    RationalScalar::q_factorial(n)
}

pub fn lambda_d(d: i32) -> Result<RationalScalar> {
    RationalScalar::lambda_d(d)
}

pub fn evaluate_rational(s: &RationalScalar, mu: &BigRational) -> Result<BigRational> {
    s.evaluate_rational(mu)
}

pub fn evaluate_complex(s: &RationalScalar, mu: Complex64) -> Result<Complex64> {
    s.evaluate_complex(mu)
}

pub fn conjugate_scalar(s: &RationalScalar, mode: Involution) -> RationalScalar {
    s.conjugate(mode)
}

/// Value of λ_d at a rational q₀, computed directly from the closed form.
pub fn lambda_d_at(d: i32, q: &BigRational) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::InvalidArgument("lambda_d needs d != 0".into()));
    }
    let qd = pow_rational(q, d);
    let den = &qd - BigRational::one();
    if den.is_zero() {
        return Err(Error::PoleAtPoint(format!("q = {}", q)));
    }
    Ok(qd * (q - BigRational::one()) / den)
}

/// e^{iπ/m}.
pub fn root_of_unity_mu(m: u32) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::PI / m as f64)
}
