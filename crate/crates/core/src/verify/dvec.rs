use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Outcome, Theorem, VerificationReport, VerifyError, Witness};
use crate::chromatic::chromatic_polynomial;
use crate::graph::Graph;
use crate::poly::IntPolynomial;

/// `d_1, .., d_n` with
/// `(-1)^n [(x-n+1) Σ_u P(G-u) - n P(G)] = Σ (-1)^i d_i x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DVector {
    d: Vec<BigInt>,
}

impl DVector {
    pub fn as_slice(&self) -> &[BigInt] {
        &self.d
    }

    /// `d_i` for `1 ≤ i ≤ n`.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.d[i - 1]
    }

    /// One-based indices with `d_i = 0`.
    pub fn zero_indices(&self) -> Vec<usize> {
        (1..=self.d.len()).filter(|&i| self.get(i).is_zero()).collect()
    }

    /// `Σ (-1)^i d_i x^i`.
    pub fn polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend(self.d.iter().enumerate().map(|(k, d)| if k % 2 == 0 { -d } else { d.clone() }));
        IntPolynomial::new(coeffs)
    }
}

/// `|[x^i] P|`, which is `a_i` for `i ≥ 1` and `1` only for the order-0 graph at `i = 0`.
fn magnitude(p: &IntPolynomial, i: usize) -> BigInt {
    p.coeff(i).abs()
}

/// Computes the `d_i` from vertex-deleted coefficients and again by
/// expanding the polynomial; the two must agree.
pub fn d_vector(g: &Graph) -> Result<DVector, VerifyError> {
    let n = g.order();
    if n == 0 {
        return Err(VerifyError::Hypothesis("d_vector needs at least one vertex"));
    }
    let p = chromatic_polynomial(g);
    let deleted: Vec<IntPolynomial> = (0..n)
        .map(|u| g.delete_vertex(u).map(|h| chromatic_polynomial(&h)))
        .collect::<Result<_, _>>()?;

    let by_coefficients: Vec<BigInt> = (1..=n)
        .map(|i| {
            let deleted_part: BigInt = deleted
                .iter()
                .map(|q| magnitude(q, i - 1) + BigInt::from(n - 1) * magnitude(q, i))
                .sum();
            deleted_part - BigInt::from(n) * magnitude(&p, i)
        })
        .collect();

    let summed: IntPolynomial = deleted.into_iter().sum();
    let mut expanded = summed.mul_linear(n as i64 - 1) - p.scale(&BigInt::from(n));
    if n % 2 == 1 {
        expanded = -expanded;
    }
    if !expanded.coeff(0).is_zero() || expanded.degree().is_some_and(|deg| deg > n) {
        return Err(VerifyError::DMismatch { index: 0 });
    }
    for (k, d) in by_coefficients.iter().enumerate() {
        let i = k + 1;
        let signed = if i % 2 == 0 { expanded.coeff(i) } else { -expanded.coeff(i) };
        if &signed != d {
            return Err(VerifyError::DMismatch { index: i });
        }
    }
    Ok(DVector { d: by_coefficients })
}

/// Indices `i` with `d_i = 0` for a non-complete graph: `i = n`,
/// `1 ≤ i ≤ c - 2`, `i = c - 1 ≥ 1` without isolated vertices, and
/// `i = c = 1` for a cycle.
pub fn predicted_zero_indices(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let c = g.component_count();
    let isolated = !g.isolated_vertices().is_empty();
    (1..=n)
        .filter(|&i| {
            i == n
                || i + 2 <= c
                || (c >= 2 && i == c - 1 && !isolated)
                || (i == 1 && c == 1 && g.is_cycle())
        })
        .collect()
}

/// Nonnegativity of every `d_i` and the exact zero pattern.
pub fn check_pos_d(g: &Graph) -> VerificationReport {
    let report = |outcome| VerificationReport::new(g, Theorem::PositiveD, outcome);
    let d = match d_vector(g) {
        Ok(d) => d,
        Err(VerifyError::DMismatch { index }) => {
            return report(Outcome::Violation).with_witness(Witness::Index { i: index, value: "route mismatch".into() })
        }
        // The order-0 graph has no coefficients to check.
        Err(_) => return report(Outcome::EqualityCase),
    };
    if let Some(i) = (1..=g.order()).find(|&i| d.get(i).is_negative()) {
        return report(Outcome::Violation).with_witness(Witness::Index { i, value: d.get(i).to_string() });
    }
    if g.is_complete() {
        let outcome = if d.zero_indices().len() == g.order() { Outcome::EqualityCase } else { Outcome::Violation };
        return report(outcome).with_witness(Witness::vector("d", d.as_slice()));
    }
    let zeros = d.zero_indices();
    let predicted = predicted_zero_indices(g);
    if zeros != predicted {
        let i = zeros
            .iter()
            .chain(&predicted)
            .copied()
            .find(|i| zeros.contains(i) != predicted.contains(i))
            .expect("the sets differ");
        return report(Outcome::Violation).with_witness(Witness::Index { i, value: d.get(i).to_string() });
    }
    report(Outcome::Holds).with_witness(Witness::vector("d", d.as_slice()))
}
