use std::collections::BTreeMap;

use super::{contract, cycle_word, left_inverse_with, scalar_multiple_of_identity, scalar_of};
use crate::error::{Error, Result};
use crate::field::{Involution, Ring};
use crate::model::{epsilon_rep, gq_operator, TensorOperator, TensorVector};
use crate::report::{VerificationReport, Witness};
use crate::scalar::RationalScalar;
use crate::special::build_a;

/// Outcome of testing a candidate R ∈ H^⊗d against conditions 6.1 to 6.4.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialObjectWitness {
    pub r: TensorVector<RationalScalar>,
    pub d: usize,
    /// "6.1" … "6.4" → failure witness, `None` when the condition holds.
    pub checks: BTreeMap<String, Option<Witness>>,
    /// Φ(ε(g₁)) with R in place of S; only computed when every condition holds.
    pub left_inverse_value: Option<RationalScalar>,
}

impl SpecialObjectWitness {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(Option::is_none)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, w)| w.is_some())
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

fn neg_mu_pow(k: usize) -> RationalScalar {
    RationalScalar::from_int(if k % 2 == 0 { 1 } else { -1 }).times(&RationalScalar::mu_pow(k as i32))
}

fn differ(lhs: &TensorOperator<RationalScalar>, rhs: &TensorOperator<RationalScalar>) -> Option<Witness> {
    lhs.first_difference(rhs)
        .map(|(t, c)| Witness::new(t, c.to_string()))
}

pub fn special_object_check(r: &TensorVector<RationalScalar>, d: usize) -> Result<SpecialObjectWitness> {
    if d < 2 || r.d() != d || r.n() != d {
        return Err(Error::ShapeMismatch(format!(
            "candidate must lie in H^{{x{}}} with dim H = {} >= 2",
            d, d
        )));
    }
    let one = TensorOperator::identity(d, 1);
    let rop = r.op();
    let mut checks = BTreeMap::new();

    let norm = scalar_of(&contract(r, r, 0)?).expect("full contraction");
    let fact = RationalScalar::q_factorial(d as u32)?;
    checks.insert(
        "6.1".to_string(),
        (norm != fact).then(|| Witness::new("R*R", format!("{} != {}", norm, fact))),
    );

    let partial = contract(r, r, 1)?;
    let expect = one.scale(&RationalScalar::q_factorial(d as u32 - 1)?.times(&neg_mu_pow(d - 1)));
    checks.insert("6.2".to_string(), differ(&partial, &expect));

    let rr = rop.compose(&rop.adjoint(Involution::Real))?;
    checks.insert("6.3".to_string(), differ(&rr, &epsilon_rep(&build_a(d as i32, d)?, d)));

    let lhs = epsilon_rep(&cycle_word(d)?, d).compose(&rop.tensor(&one)?)?;
    let rhs = one.tensor(rop)?.scale(&neg_mu_pow(d - 1).negate());
    checks.insert("6.4".to_string(), differ(&lhs, &rhs));

    let mut witness = SpecialObjectWitness {
        r: r.clone(),
        d,
        checks,
        left_inverse_value: None,
    };
    if witness.all_pass() {
        let phi = left_inverse_with(r, &gq_operator(d), &fact)?;
        witness.left_inverse_value = scalar_multiple_of_identity(&phi);
    }
    Ok(witness)
}

/// One report per condition plus the left-inverse value, labelled with
/// the candidate's name.
pub fn special_object_reports(w: &SpecialObjectWitness, candidate: &str) -> Result<Vec<VerificationReport>> {
    let base = |id: String| VerificationReport::new(id).param("d", w.d).param("candidate", candidate);
    let mut out: Vec<VerificationReport> = w
        .checks
        .iter()
        .map(|(k, wit)| base(format!("special-object-{}", k)).outcome(wit.clone()))
        .collect();
    let phi = base("special-object-phi".into());
    out.push(match &w.left_inverse_value {
        None if !w.all_pass() => phi.skipped(format!("conditions {} fail", w.failed().join(", "))),
        None => phi.fail(Witness::new("Phi(eps(g1))", "not a multiple of the identity")),
        Some(v) => {
            let expect = RationalScalar::lambda_d(-(w.d as i32))?;
            let r = phi.param("value", v);
            if *v == expect {
                r.pass()
            } else {
                r.fail(Witness::new("Phi(eps(g1)) - lambda_{-d}", v.minus(&expect).to_string()))
            }
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{quantum_determinant, IndexSet};
    use super::*;

    #[test]
    fn determinant_is_special() {
        for d in 2..=3 {
            let s = quantum_determinant(&IndexSet::full(d));
            let w = special_object_check(&s, d).unwrap();
            assert!(w.all_pass(), "{:?}", w.checks);
            assert_eq!(w.left_inverse_value, Some(RationalScalar::lambda_d(-(d as i32)).unwrap()));
            assert!(special_object_reports(&w, "S").unwrap().iter().all(|r| r.passed()));
        }
    }

    #[test]
    fn corrupted_candidates() {
        let s = quantum_determinant(&IndexSet::full(2));
        let w = special_object_check(&s.scale(&RationalScalar::from_int(2)), 2).unwrap();
        assert_eq!(w.failed(), vec!["6.1", "6.2", "6.3"]);
        assert!(w.left_inverse_value.is_none());
        let v = TensorVector::basis(2, &[1, 2]).unwrap();
        let w = special_object_check(&v, 2).unwrap();
        assert!(w.failed().contains(&"6.3"));
    }
}
