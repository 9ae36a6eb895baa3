use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::generators::{eq_from, gq_operator};
use super::operator::{flip, TensorOperator};
use crate::error::{Error, Result};
use crate::field::{Field, Involution, Ring};
use crate::report::{tolerance_witness, VerificationReport, Witness};
use crate::scalar::root_of_unity_mu;

/// A specialization point for μ.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelPoint {
    Rational(BigRational),
    /// μ₀ = e^{iπ/m}.
    RootOfUnity(u32),
    Complex(Complex64),
}

impl ModelPoint {
    pub fn complex(&self) -> Complex64 {
        match self {
            ModelPoint::Rational(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            ModelPoint::RootOfUnity(m) => root_of_unity_mu(*m),
            ModelPoint::Complex(z) => *z,
        }
    }

    /// Whether q₀ = μ₀² is a positive real number.
    pub fn q_positive(&self) -> bool {
        match self {
            ModelPoint::Rational(r) => !Ring::is_zero(r),
            ModelPoint::RootOfUnity(m) => *m == 1,
            ModelPoint::Complex(z) => {
                let q = z * z;
                q.im.abs() <= 1e-12 * q.norm().max(1.0) && q.re > 0.0
            }
        }
    }
}

impl FromStr for ModelPoint {
    type Err = Error;

    /// A rational "p/r" or the literal "e^{i pi/m}".
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if let Some(rest) = compact.strip_prefix("e^") {
            let inner = rest
                .strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
                .unwrap_or(rest);
            let m = inner
                .strip_prefix("ipi/")
                .and_then(|m| m.parse::<u32>().ok())
                .filter(|&m| m > 0)
                .ok_or_else(|| Error::Parse(format!("`{}` is not of the form e^{{i pi/m}}", s)))?;
            return Ok(ModelPoint::RootOfUnity(m));
        }
        compact
            .parse::<BigRational>()
            .map(ModelPoint::Rational)
            .map_err(|_| Error::Parse(format!("`{}` is neither a rational nor e^{{i pi/m}}", s)))
    }
}

impl fmt::Display for ModelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelPoint::Rational(r) => write!(f, "{}", r),
            ModelPoint::RootOfUnity(m) => write!(f, "e^{{i pi/{}}}", m),
            ModelPoint::Complex(z) => write!(f, "{}", z),
        }
    }
}

fn max_norm(op: &TensorOperator<Complex64>) -> (String, f64) {
    op.max_entry_by(|z| z.norm())
        .map(|((i, j), r)| (op.describe_entry(i, j), r))
        .unwrap_or_else(|| ("none".into(), 0.0))
}

/// Largest entry of e_q − e_q* at μ₀; exact zero for rational points.
pub fn selfadjoint_residual(d: usize, point: &ModelPoint) -> Result<(String, f64)> {
    let g = gq_operator(d);
    match point {
        ModelPoint::Rational(mu) => {
            let gr = g.try_map(|c| c.evaluate_rational(mu))?;
            let e = eq_from(&gr, &(mu * mu));
            let diff = e.sub(&e.adjoint(Involution::Real))?;
            Ok(diff
                .max_entry_by(|x| x.abs().to_f64().unwrap_or(f64::INFINITY))
                .map(|((i, j), r)| (diff.describe_entry(i, j), r))
                .unwrap_or_else(|| ("none".into(), 0.0)))
        }
        _ => {
            let mu = point.complex();
            let gc = g.try_map(|c| c.evaluate_complex(mu))?;
            let e = eq_from(&gc, &(mu * mu));
            Ok(max_norm(&e.sub(&e.adjoint(Involution::UnitCircle))?))
        }
    }
}

/// e_q is selfadjoint exactly when q is a positive real; the report passes
/// when the observation agrees with that prediction.
pub fn check_selfadjointness(d: usize, point: &ModelPoint, tolerance: f64) -> Result<VerificationReport> {
    let (term, residual) = selfadjoint_residual(d, point)?;
    let observed = residual <= tolerance;
    let predicted = point.q_positive();
    let report = VerificationReport::new("prop-4.3")
        .param("d", d)
        .param("mu", point)
        .param("selfadjoint", observed)
        .with_note(format!("max |e - e*| = {:.3e}", residual));
    Ok(if observed == predicted {
        report.pass()
    } else {
        report.fail(Witness::new(term, format!("{:e}", residual)))
    })
}

/// At |q| = 1 the flip θ lies in the algebra generated by g_q and g_q*:
/// with P = ((g⁻¹)* − g)/(q − 1) and (1 − q)T = ½((g⁻¹)*g + g(g⁻¹)*) − q,
/// one has T = μθ + (1 − μ)(1 − P²).
pub fn verify_permutation_recovery(d: usize, point: &ModelPoint, tolerance: f64) -> Result<VerificationReport> {
    let report = VerificationReport::new("prop-4.4").param("d", d).param("mu", point);
    let mu = point.complex();
    let q = mu * mu;
    if (mu.norm() - 1.0).abs() > 1e-12 || (q - 1.0).norm() < 1e-12 {
        return Ok(report.skipped("precondition: needs |mu| = 1 and q != 1"));
    }
    let one = Complex64::new(1.0, 0.0);
    let g = gq_operator(d).try_map(|c| c.evaluate_complex(mu))?;
    let id = TensorOperator::<Complex64>::identity(d, 2);
    let ginv = g.sub(&id.scale(&(q - one)))?.scale(&Field::inv(&q).expect("q != 0"));
    let ginv_star = ginv.adjoint(Involution::UnitCircle);
    let p = ginv_star.sub(&g)?.scale(&Field::inv(&(q - one)).expect("q != 1"));
    let sym = ginv_star.compose(&g)?.add(&g.compose(&ginv_star)?)?.scale(&Complex64::new(0.5, 0.0));
    let t = sym.sub(&id.scale(&q))?.scale(&Field::inv(&(one - q)).expect("q != 1"));
    let theta = flip::<Complex64>(d);
    let rhs = theta
        .scale(&mu)
        .add(&id.sub(&p.compose(&p)?)?.scale(&(one - mu)))?;
    let check_inverse = ginv.compose(&g)?.sub(&id)?;
    let (term, residual) = max_norm(&t.sub(&rhs)?);
    let (term_inv, residual_inv) = max_norm(&check_inverse);
    let (term, residual) = if residual_inv > residual {
        (format!("g^-1 g - 1 at {}", term_inv), residual_inv)
    } else {
        (format!("T - (mu theta + (1-mu)(1-P^2)) at {}", term), residual)
    };
    Ok(report
        .param("tolerance", tolerance)
        .outcome(tolerance_witness(term, residual, tolerance)))
}
