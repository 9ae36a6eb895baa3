use num_rational::BigRational;

use super::operator::TensorOperator;
use crate::error::{Error, Result};
use crate::field::Ring;
use crate::linalg::rank_rational;
use crate::scalar::RationalScalar;

/// Eigenvalues among {q₀, −1} with multiplicities, at μ = μ₀.
///
/// Each multiplicity is N − rank(op − c·1); zero multiplicities are
/// omitted. Fails with `NotSupportedSpectrum` if the probes do not account
/// for the whole space.
pub fn spectrum_at(op: &TensorOperator<RationalScalar>, mu0: &BigRational) -> Result<Vec<(BigRational, usize)>> {
    let q0 = mu0 * mu0;
    let probes = [q0, BigRational::from_i64(-1)];
    spectrum_with_probes(&op.try_map(|c| c.evaluate_rational(mu0))?, &probes)
}

pub fn spectrum_with_probes(
    op: &TensorOperator<BigRational>,
    probes: &[BigRational],
) -> Result<Vec<(BigRational, usize)>> {
    if op.n_in() != op.n_out() {
        return Err(Error::ShapeMismatch("spectrum of a non-square operator".into()));
    }
    let n = op.dim_in();
    let id = TensorOperator::<BigRational>::identity(op.d(), op.n_in());
    let mut out = Vec::new();
    let mut seen: Vec<&BigRational> = Vec::new();
    let mut total = 0;
    for c in probes {
        if seen.contains(&c) {
            continue;
        }
        seen.push(c);
        let shifted = op.sub(&id.scale(c))?;
        let mult = n - rank_rational(&shifted.to_dense());
        if mult > 0 {
            out.push((c.clone(), mult));
            total += mult;
        }
    }
    if total != n {
        return Err(Error::NotSupportedSpectrum {
            found: total,
            expected: n,
        });
    }
    Ok(out)
}
