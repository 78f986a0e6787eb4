use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{require_negative, VerifyError};
use crate::chromatic::chromatic_polynomial;
use crate::graph::{Graph, GraphError};
use crate::poly::IntPolynomial;
use crate::scalar::Scalar;

/// Two exact values that an identity claims are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn sign(n: usize) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn rational(value: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

fn xi_of<S: Scalar>(p: &IntPolynomial, n: usize, x: &S) -> S {
    let poles = (0..n).fold(S::zero(), |acc, i| acc + S::one() / (x.clone() - S::from_i64(i as i64)));
    let value = p.eval(x) * poles - p.derivative().eval(x);
    if n % 2 == 0 {
        value
    } else {
        -value
    }
}

/// `ξ(G, x) = (-1)^n P(G, x) Σ_{i<n} 1/(x - i) + (-1)^{n+1} P'(G, x)`.
///
/// Zero for complete graphs and positive for all others when `x < 0`.
pub fn xi<S: Scalar>(g: &Graph, x: &S) -> Result<S, VerifyError> {
    if !x.is_negative() {
        return Err(VerifyError::NonNegativePoint(format!("{x:?}")));
    }
    Ok(xi_of(&chromatic_polynomial(g), g.order(), x))
}

/// For isolated `u`:
/// `ξ(G) = -x ξ(G-u) + (-1)^{n-1} (n-1) P(G-u) / (n-1-x)`.
pub fn xi_identity_isolated(g: &Graph, u: usize, x: &BigRational) -> Result<IdentityCheck, VerifyError> {
    require_negative(x)?;
    let rest = g.delete_vertex(u)?;
    if g.degree(u) != 0 {
        return Err(VerifyError::NotIsolated(u));
    }
    let n = g.order();
    let p_rest = chromatic_polynomial(&rest);
    let lhs = xi_of(&chromatic_polynomial(g), n, x);
    let correction = BigRational::from_integer(sign(n - 1) * BigInt::from(n - 1)) * p_rest.eval(x)
        / (rational(n - 1) - x);
    let rhs = -x.clone() * xi_of(&p_rest, n - 1, x) + correction;
    Ok(IdentityCheck { lhs, rhs })
}

/// The graphs `G_1, .., G_{d-1}`: `G_i` is `G - u` with the `i`-th
/// neighbour of `u` joined to every later one, neighbours taken in
/// ascending index order. Indices are those of `G - u`.
pub fn correction_graphs(g: &Graph, u: usize) -> Result<Vec<Graph>, GraphError> {
    let (rest, map) = g.delete_vertex_with_map(u)?;
    let neighbors: Vec<usize> = g.neighbors(u).iter().map(|w| map.get(w).expect("neighbour survives")).collect();
    Ok((0..neighbors.len().saturating_sub(1))
        .map(|i| {
            let joins: Vec<_> = neighbors[i + 1..]
                .iter()
                .filter(|&&w| !rest.has_edge(neighbors[i], w))
                .map(|&w| (neighbors[i], w))
                .collect();
            rest.with_edges(&joins).expect("joins are new edges of G - u")
        })
        .collect())
}

/// Both sides of `P(G) = (x - 1) P(G-u) - Σ P(G_i)` as polynomials.
pub fn vertex_recurrence(g: &Graph, u: usize) -> Result<(IntPolynomial, IntPolynomial), VerifyError> {
    let rest = g.delete_vertex(u)?;
    if g.degree(u) == 0 {
        return Err(VerifyError::Isolated(u));
    }
    let corrections: IntPolynomial = correction_graphs(g, u)?.iter().map(chromatic_polynomial).sum();
    let rhs = chromatic_polynomial(&rest).mul_linear(1) - corrections;
    Ok((chromatic_polynomial(g), rhs))
}

/// For `d(u) ≥ 1`:
/// `ξ(G) = (1-x) ξ(G-u) + Σ ξ(G_i) + (-1)^n [(x-n+1) P(G-u) - P(G)] / (n-x-1)`.
pub fn xi_identity_recursive(g: &Graph, u: usize, x: &BigRational) -> Result<IdentityCheck, VerifyError> {
    require_negative(x)?;
    let rest = g.delete_vertex(u)?;
    if g.degree(u) == 0 {
        return Err(VerifyError::Isolated(u));
    }
    let n = g.order();
    let p = chromatic_polynomial(g);
    let p_rest = chromatic_polynomial(&rest);
    let lhs = xi_of(&p, n, x);

    let corrections: BigRational = correction_graphs(g, u)?
        .iter()
        .map(|h| xi_of(&chromatic_polynomial(h), n - 1, x))
        .fold(BigRational::zero(), |acc, v| acc + v);
    let shift = x - rational(n - 1);
    let tail = BigRational::from_integer(sign(n)) * (shift * p_rest.eval(x) - p.eval(x))
        / (rational(n - 1) - x);
    let rhs = (BigRational::one() - x) * xi_of(&p_rest, n - 1, x) + corrections + tail;
    Ok(IdentityCheck { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::epsilon_at;
    use crate::graph::LabeledGraphs;
    use crate::verify::default_grid;
    use num_traits::Signed;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn complete_graphs_vanish() {
        for n in 1..=6 {
            for x in default_grid() {
                assert!(xi(&Graph::complete(n), &x).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn path_on_three_at_minus_one() {
        // P = x^3 - 2x^2 + x, P(-1) = -4, P'(-1) = 8:
        // ξ = (-1)^3 (-4)(-1 - 1/2 - 1/3) + 8 = -22/3 + 8 = 2/3.
        assert_eq!(xi(&Graph::path(3), &q(-1, 1)).unwrap(), q(2, 3));
        assert!(xi(&Graph::path(3), &-1.0f64).unwrap() > 0.0);
    }

    #[test]
    fn rejects_nonnegative_points() {
        assert!(matches!(xi(&Graph::path(3), &q(0, 1)), Err(VerifyError::NonNegativePoint(_))));
        assert!(xi_identity_isolated(&Graph::empty(2), 0, &q(1, 2)).is_err());
    }

    #[test]
    fn xi_positive_and_matches_epsilon_gap() {
        for n in 1..=5 {
            let kn = Graph::complete(n);
            for g in LabeledGraphs::new(n).filter(|g| !g.is_complete()) {
                let p = chromatic_polynomial(&g);
                for x in default_grid() {
                    let value = xi(&g, &x).unwrap();
                    assert!(Signed::is_positive(&value), "{g:?} at {x}");
                    let gap = epsilon_at(&kn, &x).unwrap() - epsilon_at(&g, &x).unwrap();
                    let scaled = BigRational::from_integer(sign(n)) * value / p.eval(&x);
                    assert_eq!(scaled, gap);
                }
            }
        }
    }

    #[test]
    fn isolated_identity_examples() {
        let k1_k2 = Graph::empty(1).disjoint_union(&Graph::complete(2));
        assert!(xi_identity_isolated(&k1_k2, 0, &q(-1, 1)).unwrap().holds());
        for u in 0..3 {
            assert!(xi_identity_isolated(&Graph::empty(3), u, &q(-2, 1)).unwrap().holds());
        }
        let k3_k1 = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert!(xi_identity_isolated(&k3_k1, 3, &q(-1, 2)).unwrap().holds());
        assert_eq!(xi_identity_isolated(&k3_k1, 0, &q(-1, 2)), Err(VerifyError::NotIsolated(0)));
    }

    #[test]
    fn correction_graph_shapes() {
        let star = Graph::star(3);
        let gs = correction_graphs(&star, 0).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0], Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap());
        assert_eq!(gs[1], Graph::from_edges(3, &[(1, 2)]).unwrap());
        assert_eq!(correction_graphs(&Graph::complete(3), 0).unwrap(), vec![Graph::complete(2)]);
        assert!(correction_graphs(&Graph::path(3), 0).unwrap().is_empty());
    }

    #[test]
    fn recursive_identity_examples() {
        for u in 0..3 {
            assert!(xi_identity_recursive(&Graph::complete(3), u, &q(-1, 1)).unwrap().holds());
        }
        assert!(xi_identity_recursive(&Graph::star(3), 0, &q(-2, 1)).unwrap().holds());
        assert!(xi_identity_recursive(&Graph::path(3), 0, &q(-1, 1)).unwrap().holds());
        assert_eq!(xi_identity_recursive(&Graph::empty(2), 1, &q(-1, 1)), Err(VerifyError::Isolated(1)));
    }

    #[test]
    fn identities_hold_exhaustively_to_order_four() {
        let points = [q(-1, 2), q(-1, 1), q(-3, 1)];
        for n in 1..=4 {
            for g in LabeledGraphs::new(n) {
                for u in 0..n {
                    if g.degree(u) == 0 {
                        for x in &points {
                            assert!(xi_identity_isolated(&g, u, x).unwrap().holds());
                        }
                    } else {
                        let (lhs, rhs) = vertex_recurrence(&g, u).unwrap();
                        assert_eq!(lhs, rhs, "{g:?} u={u}");
                        for x in &points {
                            assert!(xi_identity_recursive(&g, u, x).unwrap().holds(), "{g:?} u={u} x={x}");
                        }
                    }
                }
            }
        }
    }
}
