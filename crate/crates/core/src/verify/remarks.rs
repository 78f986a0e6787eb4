use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::VerifyError;
use crate::chromatic::{chromatic_polynomial, Coefficients};
use crate::graph::Graph;
use crate::orientation::count_acyclic;
use crate::poly::IntPolynomial;

/// `P(G, x) / P(K_n, x)` strictly decreasing in `x` across the sample
/// points, which must be negative.
pub fn ratio_to_complete_decreasing(g: &Graph, grid: &[BigRational]) -> Result<bool, VerifyError> {
    let mut points = grid.to_vec();
    for x in &points {
        super::require_negative(x)?;
    }
    points.sort();
    points.dedup();
    let p = chromatic_polynomial(g);
    let kn = IntPolynomial::falling_factorial(g.order());
    let ratios: Vec<BigRational> = points.iter().map(|x| p.eval(x) / kn.eval(x)).collect();
    Ok(ratios.windows(2).all(|w| w[0] > w[1]))
}

/// `Σ i a_i / Σ a_i > 1 + 1/2 + .. + 1/n`.
pub fn harmonic_mean_exceeds(g: &Graph) -> bool {
    let a = Coefficients::of_graph(g);
    let n = a.order();
    let weighted: BigInt = (1..=n).map(|i| BigInt::from(i) * a.get(i)).sum();
    let harmonic = (1..=n).fold(BigRational::zero(), |acc, k| {
        acc + BigRational::new(BigInt::one(), BigInt::from(k))
    });
    BigRational::new(weighted, a.total()) > harmonic
}

/// `(Σ_u α(G - u), α(G))` counted by orientation enumeration.
pub fn acyclic_deletion_sum(g: &Graph) -> (BigInt, BigInt) {
    let deleted = (0..g.order())
        .map(|u| count_acyclic(&g.delete_vertex(u).expect("vertex in range")))
        .sum();
    (deleted, count_acyclic(g))
}
