//! Wire form: `{"numerator": [[exp, num, den], …], "denominator": […]}`,
//! exponent ascending. Integers that fit in i64 are JSON numbers, larger
//! ones are decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, RationalScalar};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Small(i64),
    Big(String),
}

impl WireInt {
    fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => WireInt::Small(v),
            None => WireInt::Big(n.to_string()),
        }
    }

    fn to_big(&self) -> Result<BigInt, String> {
        match self {
            WireInt::Small(v) => Ok(BigInt::from(*v)),
            WireInt::Big(s) => s.parse().map_err(|_| format!("bad integer `{}`", s)),
        }
    }
}

type WireTerm = (i32, WireInt, WireInt);

#[derive(Serialize, Deserialize)]
struct WireScalar {
    numerator: Vec<WireTerm>,
    denominator: Vec<WireTerm>,
}

fn to_wire(p: &LaurentPoly) -> Vec<WireTerm> {
    p.terms()
        .iter()
        .map(|(e, c)| (*e, WireInt::from_big(c.numer()), WireInt::from_big(c.denom())))
        .collect()
}

fn from_wire(terms: &[WireTerm]) -> Result<LaurentPoly, String> {
    let mut out = Vec::with_capacity(terms.len());
    let mut last: Option<i32> = None;
    for (e, n, d) in terms {
        if last.map_or(false, |l| l >= *e) {
            return Err("exponents must be strictly ascending".into());
        }
        last = Some(*e);
        let n = n.to_big()?;
        let d = d.to_big()?;
        if !d.is_positive() {
            return Err("coefficient denominators must be positive".into());
        }
        if n.is_zero() {
            return Err("zero coefficients are not stored".into());
        }
        out.push((*e, BigRational::new(n, d)));
    }
    Ok(LaurentPoly::from_sorted_unchecked(out))
}

impl Serialize for RationalScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WireScalar {
            numerator: to_wire(&self.num),
            denominator: to_wire(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = WireScalar::deserialize(d)?;
        let num = from_wire(&w.numerator).map_err(D::Error::custom)?;
        let den = from_wire(&w.denominator).map_err(D::Error::custom)?;
        RationalScalar::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{lambda_d, q_factorial};

    #[test]
    fn round_trip_is_bit_exact() {
        for s in [lambda_d(-3).unwrap(), q_factorial(4).unwrap(), RationalScalar::from_int(0)] {
            let text = serde_json::to_string(&s).unwrap();
            let back: RationalScalar = serde_json::from_str(&text).unwrap();
            assert_eq!(back, s);
            assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }
    }

    #[test]
    fn wire_layout() {
        let text = serde_json::to_string(&lambda_d(-2).unwrap()).unwrap();
        assert_eq!(text, r#"{"numerator":[[0,-1,1]],"denominator":[[0,1,1],[2,1,1]]}"#);
    }

    #[test]
    fn big_integers_become_strings() {
        let big = BigInt::from(10).pow(30);
        let s = RationalScalar::from_rational(BigRational::from_integer(big));
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.contains("\"1000000000000000000000000000000\""));
        let back: RationalScalar = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn rejects_zero_denominator() {
        let text = r#"{"numerator":[[0,1,1]],"denominator":[]}"#;
        assert!(serde_json::from_str::<RationalScalar>(text).is_err());
    }
}
