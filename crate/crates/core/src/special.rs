//! The q-symmetrizers A_{±n}, their right-handed twin B_n and the
//! idempotents E_{±n}.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{Field, Involution, Ring};
use crate::hecke::{Hecke, HeckeElement};
use crate::report::{hecke_difference, tolerance_witness, VerificationReport, Witness};
use crate::scalar::{root_of_unity_mu, RationalScalar};

/// A_k in H_{|k|}(q) for the given parameter.
///
/// A_{n+1} = Σ_i c^i g_i⋯g_1 σ(A_n) with c = 1 for k > 0 and c = −q⁻¹ for
/// k < 0.
pub fn build_a_with<R: Field>(k: i32, q: R) -> Result<HeckeElement<R>> {
    if k == 0 {
        return Err(Error::InvalidArgument("A_0 is undefined".into()));
    }
    let c = if k > 0 {
        R::one()
    } else {
        q.inv()
            .ok_or_else(|| Error::PoleAtPoint("q = 0".into()))?
            .negate()
    };
    let mut a = HeckeElement::one(1, q);
    for n in 1..k.unsigned_abs() as usize {
        let base = a.shift();
        let mut term = base.clone();
        let mut acc = base;
        let mut weight = R::one();
        for i in 1..=n {
            term = term.left_mul_generator(i)?;
            weight = weight.times(&c);
            acc = acc.add(&term.scale(&weight));
        }
        a = acc;
    }
    Ok(a)
}

/// A_k embedded in H_order(q) over ℚ(μ).
pub fn build_a(k: i32, order: usize) -> Result<Hecke> {
    check_order(k, order)?;
    build_a_with(k, RationalScalar::q())?.embed(order)
}

/// B_{n+1} = Σ_i σ(B_n) g_1⋯g_i.
pub fn build_b(n: usize) -> Result<Hecke> {
    if n == 0 {
        return Err(Error::InvalidArgument("B_0 is undefined".into()));
    }
    let mut b = Hecke::generic_one(1);
    for m in 1..n {
        let base = b.shift();
        let mut term = base.clone();
        let mut acc = base;
        for i in 1..=m {
            term = term.right_mul_generator(i)?;
            acc = acc.add(&term);
        }
        b = acc;
    }
    Ok(b)
}

fn check_order(k: i32, order: usize) -> Result<()> {
    let need = k.unsigned_abs() as usize;
    if k == 0 {
        return Err(Error::InvalidArgument("index 0 is undefined".into()));
    }
    if order < need {
        return Err(Error::OrderMismatch {
            left: need,
            right: order,
        });
    }
    Ok(())
}

/// The normalizing factor of E_k: |k|!_q for k > 0, |k|!_{1/q} otherwise.
pub fn idempotent_norm(k: i32) -> Result<RationalScalar> {
    let n = k.unsigned_abs();
    if k > 0 {
        RationalScalar::q_factorial(n)
    } else {
        RationalScalar::q_factorial_inverse_parameter(n)
    }
}

/// E_k = A_k / |k|!_{q^{±1}} in H_order(q).
pub fn build_idempotent(k: i32, order: usize) -> Result<Hecke> {
    let a = build_a(k, order)?;
    let inv = idempotent_norm(k)?.inv().expect("q-factorial is nonzero");
    Ok(a.scale(&inv))
}

fn q() -> RationalScalar {
    RationalScalar::q()
}

fn eq_report(id: &str, n: usize, checks: impl IntoIterator<Item = (String, Hecke, Hecke)>) -> VerificationReport {
    let mut witness = None;
    for (label, lhs, rhs) in checks {
        if let Some(w) = hecke_difference(&lhs, &rhs) {
            witness = Some(Witness::new(format!("{}: {}", label, w.term), w.residual));
            break;
        }
    }
    VerificationReport::new(id).param("n", n).outcome(witness)
}

/// Parts a, b, c and e for given A_n and A_{−n} (so that corrupted inputs
/// can be checked too).
pub fn lemma21_checks(n: usize, a_pos: &Hecke, a_neg: &Hecke) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let minus_one = RationalScalar::from_int(-1);

    let mut part_a = Vec::new();
    let mut part_b = Vec::new();
    for j in 1..n {
        let g = crate::hecke::generator(n, j)?;
        part_a.push((format!("g{}*A", j), g.multiply(a_pos)?, a_pos.scale(&q())));
        part_a.push((format!("A*g{}", j), a_pos.multiply(&g)?, a_pos.scale(&q())));
        part_b.push((format!("g{}*A-", j), g.multiply(a_neg)?, a_neg.scale(&minus_one)));
        part_b.push((format!("A-*g{}", j), a_neg.multiply(&g)?, a_neg.scale(&minus_one)));
    }
    out.push(eq_report("lemma-2.1a", n, part_a));
    out.push(eq_report("lemma-2.1b", n, part_b));

    let mut part_c = Vec::new();
    for k in 0..n {
        let m = (n - k) as i32;
        let lhs = build_a_with(m, q())?.shift_by(k).multiply(a_pos)?;
        part_c.push((
            format!("sigma^{}(A_{})*A", k, m),
            lhs,
            a_pos.scale(&RationalScalar::q_factorial(m as u32)?),
        ));
        let lhs = build_a_with(-m, q())?.shift_by(k).multiply(a_neg)?;
        part_c.push((
            format!("sigma^{}(A_-{})*A-", k, m),
            lhs,
            a_neg.scale(&RationalScalar::q_factorial_inverse_parameter(m as u32)?),
        ));
    }
    out.push(eq_report("lemma-2.1c", n, part_c));

    let mut part_e = Vec::new();
    for (label, a, norm) in [
        ("E", a_pos, RationalScalar::q_factorial(n as u32)?),
        ("E-", a_neg, RationalScalar::q_factorial_inverse_parameter(n as u32)?),
    ] {
        let e = a.scale(&norm.inv().expect("nonzero"));
        part_e.push((format!("{}^2", label), e.multiply(&e)?, e.clone()));
        for j in 1..n {
            let g = crate::hecke::generator(n, j)?;
            part_e.push((format!("[g{},{}]", j, label), g.multiply(&e)?, e.multiply(&g)?));
        }
    }
    out.push(eq_report("lemma-2.1e", n, part_e));
    Ok(out)
}

pub fn verify_lemma21(n: usize) -> Result<Vec<VerificationReport>> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let a_pos = build_a(n as i32, n)?;
    let a_neg = build_a(-(n as i32), n)?;
    lemma21_checks(n, &a_pos, &a_neg)
}

/// B_n = A_n.
pub fn verify_b_equals_a(n: usize) -> Result<VerificationReport> {
    let b = build_b(n)?;
    let a = build_a(n as i32, n)?;
    Ok(eq_report("lemma-2.1-bn", n, [("B_n - A_n".to_string(), b, a)]))
}

/// α(A_k) = q^{k(k−1)/2} A_{−k} in H_n.
pub fn verify_alpha_symmetrizer(k: usize, n: usize) -> Result<VerificationReport> {
    let a = build_a(k as i32, n)?;
    let rhs = build_a(-(k as i32), n)?.scale(&RationalScalar::q_pow((k * (k - 1) / 2) as i32));
    Ok(eq_report("alpha-ak", n, [(format!("alpha(A_{})", k), a.alpha_dual(), rhs)]).param("k", k))
}

fn max_abs(h: &HeckeElement<Complex64>) -> (String, f64) {
    h.max_term_by(|c| c.norm())
        .map(|(w, r)| (w.to_string(), r))
        .unwrap_or_else(|| ("0".to_string(), 0.0))
}

/// A_n*A_n and A_n² at μ₀ = e^{iπ/m}, where q₀ = e^{2πi/m}.
///
/// Returns reports `cor-2.2a` and `lemma-2.1d`; both are skipped when
/// q₀ⁿ ≠ 1.
pub fn verify_nilpotency(n: usize, m: u32, tolerance: f64) -> Result<Vec<VerificationReport>> {
    let ids = ["cor-2.2a", "lemma-2.1d"];
    let base = |id: &str| {
        VerificationReport::new(id)
            .param("n", n)
            .param("m", m)
            .param("mu", format!("e^{{i pi/{}}}", m))
    };
    if m < 3 || n % m as usize != 0 {
        return Ok(ids
            .iter()
            .map(|id| base(id).skipped(format!("q^{} != 1 at q = e^(2 pi i/{})", n, m)))
            .collect());
    }
    let mu = root_of_unity_mu(m);
    let a = build_a_with(n as i32, mu * mu)?;
    let star_prod = a.star(Involution::UnitCircle).multiply(&a)?;
    let square = a.multiply(&a)?;
    let mut out = Vec::new();
    for (id, h) in ids.iter().zip([star_prod, square]) {
        let (term, r) = max_abs(&h);
        out.push(base(id).param("tolerance", tolerance).outcome(tolerance_witness(term, r, tolerance)));
    }
    Ok(out)
}

/// Scalar χ with E·X = χ·E, if one exists.
pub fn idempotent_character(e: &Hecke, x: &Hecke) -> Result<Option<RationalScalar>> {
    let ex = e.multiply(x)?;
    let Some((w, c)) = e.terms().iter().next() else {
        return Ok(Some(RationalScalar::zero()));
    };
    let chi = ex.coeff(w).over(c).expect("nonzero coefficient");
    Ok((ex == e.scale(&chi)).then_some(chi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::generator;

    #[test]
    fn a2_examples() {
        let g = generator(2, 1).unwrap();
        let one = Hecke::generic_one(2);
        assert_eq!(build_a(2, 2).unwrap(), one.add(&g));
        let qinv = RationalScalar::q_pow(-1);
        assert_eq!(build_a(-2, 2).unwrap(), one.sub(&g.scale(&qinv)));
    }

    #[test]
    fn a3_expansion() {
        let g1 = generator(3, 1).unwrap();
        let g2 = generator(3, 2).unwrap();
        let mut expected = Hecke::generic_one(3).add(&g1).add(&g2);
        expected = expected.add(&g1.multiply(&g2).unwrap());
        expected = expected.add(&g2.multiply(&g1).unwrap());
        expected = expected.add(&g2.multiply(&g1).unwrap().multiply(&g2).unwrap());
        assert_eq!(build_a(3, 3).unwrap(), expected);
    }

    #[test]
    fn b_small_cases() {
        assert_eq!(build_b(1).unwrap(), Hecke::generic_one(1));
        assert_eq!(build_b(2).unwrap(), build_a(2, 2).unwrap());
    }

    #[test]
    fn e2_is_e1() {
        assert_eq!(build_idempotent(2, 2).unwrap(), crate::hecke::idempotent_e(2, 1).unwrap());
    }

    #[test]
    fn order_checks() {
        assert!(matches!(build_a(3, 2), Err(Error::OrderMismatch { .. })));
        assert!(build_a(0, 2).is_err());
    }

    #[test]
    fn nilpotency_skip() {
        let r = verify_nilpotency(3, 4, 1e-10).unwrap();
        assert!(r.iter().all(|x| x.status == crate::report::Status::Skipped));
    }

    #[test]
    fn nilpotency_small() {
        for (n, m) in [(3, 3), (4, 4)] {
            let r = verify_nilpotency(n, m, 1e-10).unwrap();
            assert!(r.iter().all(|x| x.passed()), "{:?}", r);
        }
    }

    #[test]
    fn lemma21_small() {
        let r = verify_lemma21(3).unwrap();
        assert!(r.iter().all(|x| x.passed()), "{:?}", r);
    }

    #[test]
    fn dropping_a_term_fails() {
        let mut a = build_a(3, 3).unwrap();
        let w = *a.terms().keys().last().unwrap();
        a = a.sub(&Hecke::generic_basis(w));
        let r = lemma21_checks(3, &a, &build_a(-3, 3).unwrap()).unwrap();
        let part_a = r.iter().find(|x| x.check_id == "lemma-2.1a").unwrap();
        assert!(!part_a.passed());
        assert!(part_a.witness.is_some());
    }
}
