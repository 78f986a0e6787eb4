use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::certificate::nonpositive_sample;
use super::{
    certify_positive_on_negatives, xi, CertificateDetail, Outcome, Theorem, VerificationReport, VerifyError, Witness,
};
use crate::chromatic::chromatic_polynomial;
use crate::graph::Graph;
use crate::poly::IntPolynomial;

/// `(-1)^n [(x - n + 1) Σ_u P(G-u, x) - n P(G, x)]`, positive on `x < 0`
/// for every non-complete graph and identically zero for `K_n`.
pub fn compare_k_polynomial(g: &Graph) -> IntPolynomial {
    let n = g.order();
    let summed: IntPolynomial = (0..n)
        .map(|u| chromatic_polynomial(&g.delete_vertex(u).expect("vertex in range")))
        .sum();
    let value = summed.mul_linear(n as i64 - 1) - chromatic_polynomial(g).scale(&BigInt::from(n));
    if n % 2 == 0 {
        value
    } else {
        -value
    }
}

/// `N(x) = P'(G) P(Q) - P(G) P'(Q)`. On `x < 0` the product `P(G) P(Q)` is
/// positive, so `N > 0` there exactly when `ε(G, x) > ε(Q, x)`.
pub fn compare_q_polynomial(g: &Graph, q: &Graph) -> IntPolynomial {
    let (pg, pq) = (chromatic_polynomial(g), chromatic_polynomial(q));
    &pg.derivative() * &pq - &pg * &pq.derivative()
}

fn certified(base: VerificationReport, p: &IntPolynomial, grid: &[BigRational]) -> VerificationReport {
    match certify_positive_on_negatives(p, grid) {
        Ok(cert) => {
            let witness = match &cert.detail {
                CertificateDetail::Coefficients(c) => Witness::vector("alternated-coefficients", c),
                CertificateDetail::Samples(samples) => {
                    let points: Vec<_> = samples.iter().map(|(x, v)| format!("{x}:{v}")).collect();
                    Witness::vector("samples", &points)
                }
            };
            VerificationReport { outcome: Outcome::Holds, ..base }
                .with_certificate(cert.kind)
                .with_witness(witness)
        }
        Err(_) => match nonpositive_sample(p, grid) {
            Some((x, value)) => VerificationReport { outcome: Outcome::Violation, ..base }
                .with_witness(Witness::Point { x: x.to_string(), value: value.to_string() }),
            None => VerificationReport { outcome: Outcome::Inconclusive, ..base },
        },
    }
}

/// `ε(G, x) < ε(K_n, x)` for `x < 0`: `ξ(G, x) > 0` on the grid, and the
/// aggregate polynomial certified positive on all negatives.
pub fn check_compare_k(g: &Graph, grid: &[BigRational]) -> Result<VerificationReport, VerifyError> {
    if g.is_complete() {
        return Err(VerifyError::Complete);
    }
    let base = VerificationReport::new(g, Theorem::CompareK, Outcome::Inconclusive);
    for x in grid {
        let value = xi(g, x)?;
        if !value.is_positive() {
            return Ok(VerificationReport { outcome: Outcome::Violation, ..base }
                .with_witness(Witness::Point { x: x.to_string(), value: value.to_string() }));
        }
    }
    Ok(certified(base, &compare_k_polynomial(g), grid))
}

/// `ε(G, x) > ε(Q, x)` for `x < 0`, where `Q` is a chordal proper spanning
/// subgraph of `G`.
pub fn check_compare_q(g: &Graph, q: &Graph, grid: &[BigRational]) -> Result<VerificationReport, VerifyError> {
    if !q.is_chordal_proper_spanning_subgraph(g)? {
        return Err(VerifyError::NotChordalProperSubgraph);
    }
    let base = VerificationReport::new(g, Theorem::CompareQ, Outcome::Inconclusive);
    Ok(certified(base, &compare_q_polynomial(g, q), grid))
}
