use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::VerifyError;
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Proves positivity on all of `x < 0`.
    CoefficientAlternation,
    /// Attests positivity at the sampled points only.
    RationalGrid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateDetail {
    /// `c_i = (-1)^i [x^i] P`, all nonnegative.
    Coefficients(Vec<BigInt>),
    /// Sample points with the positive values found there.
    Samples(Vec<(BigRational, BigRational)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCertificate {
    pub kind: CertificateKind,
    pub detail: CertificateDetail,
}

/// Evidence that `P(x) > 0` for `x < 0`.
///
/// Writing `P(x) = Σ (-1)^i c_i x^i`, every term `c_i |x|^i` is nonnegative
/// when all `c_i ≥ 0`, and some `c_i > 0` with `i ≥ 1` makes the sum
/// strictly positive. Failing that, every grid point must give a positive
/// value. When neither holds the result is [`VerifyError::Inconclusive`];
/// the message names a nonpositive sample if one was found.
pub fn certify_positive_on_negatives(
    p: &IntPolynomial,
    grid: &[BigRational],
) -> Result<SignCertificate, VerifyError> {
    if p.is_zero() {
        return Err(VerifyError::ZeroPolynomial);
    }
    let alternated: Vec<BigInt> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .collect();
    let nonnegative = alternated.iter().all(|c| !c.is_negative());
    let strict = alternated.iter().skip(1).any(Signed::is_positive);
    if nonnegative && strict {
        return Ok(SignCertificate {
            kind: CertificateKind::CoefficientAlternation,
            detail: CertificateDetail::Coefficients(alternated),
        });
    }

    let mut samples = Vec::with_capacity(grid.len());
    for x in grid {
        if !x.is_negative() {
            return Err(VerifyError::NonNegativePoint(x.to_string()));
        }
        let value = p.eval(x);
        if !value.is_positive() {
            return Err(VerifyError::Inconclusive(format!("P({x}) = {value}")));
        }
        samples.push((x.clone(), value));
    }
    if samples.is_empty() {
        return Err(VerifyError::Inconclusive("coefficients do not alternate and the grid is empty".into()));
    }
    Ok(SignCertificate { kind: CertificateKind::RationalGrid, detail: CertificateDetail::Samples(samples) })
}

/// The first grid point where `p` is not positive.
pub(crate) fn nonpositive_sample(p: &IntPolynomial, grid: &[BigRational]) -> Option<(BigRational, BigRational)> {
    grid.iter().map(|x| (x.clone(), p.eval(x))).find(|(_, value)| !value.is_positive())
}
