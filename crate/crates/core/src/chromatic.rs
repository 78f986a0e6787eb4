//! Chromatic polynomials by accelerated deletion–contraction, the
//! nonnegative coefficients `a_i`, and the `ε` family of derived values.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::IntPolynomial;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChromaticError {
    #[error("the zero polynomial is not a chromatic polynomial")]
    ZeroPolynomial,
    #[error("coefficient of x^{power} breaks the alternating sign pattern")]
    SignPattern { power: usize },
    #[error("nonzero constant term in a chromatic polynomial of positive degree")]
    ConstantTerm,
    #[error("P(G, x) vanishes at x = {0}")]
    ChromaticRoot(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("mean size disagrees between routes: {coefficients} vs {derivative}")]
    MeanMismatch { coefficients: BigRational, derivative: BigRational },
}

/// How deletion–contraction chooses the edge to branch on. The result is
/// independent of the choice; only the running time changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgePick {
    /// An edge whose endpoints share the most neighbours.
    #[default]
    Densest,
    /// A uniformly random edge from a seeded generator.
    Random(u64),
}

struct DeletionContraction {
    memo: HashMap<Graph, IntPolynomial>,
    pick: EdgePick,
    rng: StdRng,
}

impl DeletionContraction {
    fn new(pick: EdgePick) -> Self {
        let seed = match pick {
            EdgePick::Random(seed) => seed,
            EdgePick::Densest => 0,
        };
        Self { memo: HashMap::new(), pick, rng: StdRng::seed_from_u64(seed) }
    }

    fn branch_edge(&mut self, g: &Graph) -> (usize, usize) {
        let edges = g.edges();
        match self.pick {
            EdgePick::Random(_) => edges[self.rng.gen_range(0..edges.len())],
            EdgePick::Densest => *edges
                .iter()
                .max_by_key(|&&(u, v)| {
                    (g.neighbors(u).intersection(g.neighbors(v)).len(), std::cmp::Reverse((u, v)))
                })
                .expect("caller checked the graph has edges"),
        }
    }

    fn solve(&mut self, g: &Graph) -> IntPolynomial {
        if let Some(p) = self.memo.get(g) {
            return p.clone();
        }
        let p = self.solve_uncached(g);
        self.memo.insert(g.clone(), p.clone());
        p
    }

    fn solve_uncached(&mut self, g: &Graph) -> IntPolynomial {
        let n = g.order();
        let m = g.edge_count();
        if m == 0 {
            return IntPolynomial::monomial(n);
        }
        let components = g.components();
        if components.len() > 1 {
            return components
                .blocks()
                .iter()
                .map(|block| self.solve(&g.induced_subgraph(block).0))
                .fold(IntPolynomial::one(), |acc, p| &acc * &p);
        }
        if g.is_complete() {
            return IntPolynomial::falling_factorial(n);
        }
        if m + 1 == n {
            // Connected with n - 1 edges: a tree.
            return IntPolynomial::monomial(1) * IntPolynomial::x_minus(1).pow(n - 1);
        }
        if let Some(u) = (0..n).find(|&u| g.is_simplicial(u)) {
            let rest = g.delete_vertex(u).expect("vertex in range");
            return self.solve(&rest).mul_linear(g.degree(u) as i64);
        }
        let (u, v) = self.branch_edge(g);
        let deleted = self.solve(&g.delete_edge(u, v).expect("edge present"));
        let contracted = self.solve(&g.contract_edge(u, v).expect("edge present"));
        &deleted - &contracted
    }
}

/// Exact `P(G, x)`. The order-0 graph has `P = 1`.
pub fn chromatic_polynomial(g: &Graph) -> IntPolynomial {
    chromatic_polynomial_with(g, EdgePick::Densest)
}

/// [`chromatic_polynomial`] with an explicit branching rule. The memo table
/// lives only for this call.
pub fn chromatic_polynomial_with(g: &Graph, pick: EdgePick) -> IntPolynomial {
    DeletionContraction::new(pick).solve(g)
}

/// The coefficients `a_1, .., a_n` with `P(G, x) = Σ (-1)^(n-i) a_i x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coefficients {
    a: Vec<BigInt>,
}

impl Coefficients {
    /// Reads the coefficients off a chromatic polynomial, checking the sign
    /// pattern. The order is the degree of `p`.
    pub fn from_polynomial(p: &IntPolynomial) -> Result<Self, ChromaticError> {
        let n = p.degree().ok_or(ChromaticError::ZeroPolynomial)?;
        if n > 0 && !p.coeff(0).is_zero() {
            return Err(ChromaticError::ConstantTerm);
        }
        let a = (1..=n)
            .map(|i| {
                let c = p.coeff(i);
                let a_i = if (n - i) % 2 == 0 { c } else { -c };
                if a_i.is_negative() {
                    Err(ChromaticError::SignPattern { power: i })
                } else {
                    Ok(a_i)
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { a })
    }

    pub fn of_graph(g: &Graph) -> Self {
        Self::from_polynomial(&chromatic_polynomial(g)).expect("deletion–contraction keeps signs")
    }

    pub fn order(&self) -> usize {
        self.a.len()
    }

    /// `a_i`, with `a_i = 0` for `i = 0` and `i > n`.
    pub fn get(&self, i: usize) -> BigInt {
        match i {
            0 => BigInt::zero(),
            _ => self.a.get(i - 1).cloned().unwrap_or_default(),
        }
    }

    /// `[a_1, .., a_n]`.
    pub fn as_slice(&self) -> &[BigInt] {
        &self.a
    }

    /// `Σ a_i`, which equals `(-1)^n P(G, -1)`.
    pub fn total(&self) -> BigInt {
        self.a.iter().sum()
    }
}

/// `b_i = a_{n-i} / Σ a_j` for `i = 0, .., n-1`: the size distribution of a
/// uniformly random broken-cycle-free spanning subgraph.
pub fn b_distribution(g: &Graph) -> Vec<BigRational> {
    let coeffs = Coefficients::of_graph(g);
    let n = coeffs.order();
    let total = coeffs.total();
    (0..n)
        .map(|i| BigRational::new(coeffs.get(n - i), total.clone()))
        .collect()
}

/// Mean size `ε(G)` of a broken-cycle-free spanning subgraph.
///
/// Computed from the coefficients and again as `n + P'(-1) / P(-1)`; the
/// two must agree exactly. The order-0 graph has mean `0`.
pub fn epsilon_mean(g: &Graph) -> Result<BigRational, ChromaticError> {
    epsilon_mean_of(&chromatic_polynomial(g))
}

/// [`epsilon_mean`] for an already computed chromatic polynomial.
pub fn epsilon_mean_of(p: &IntPolynomial) -> Result<BigRational, ChromaticError> {
    let coeffs = Coefficients::from_polynomial(p)?;
    let n = coeffs.order();
    if n == 0 {
        return Ok(BigRational::zero());
    }
    let weighted: BigInt = (1..=n).map(|i| BigInt::from(n - i) * coeffs.get(i)).sum();
    let from_coefficients = BigRational::new(weighted, coeffs.total());

    let minus_one = -BigRational::one();
    let from_derivative = BigRational::from_integer(BigInt::from(n))
        + p.derivative().eval(&minus_one) / p.eval(&minus_one);

    if from_coefficients != from_derivative {
        return Err(ChromaticError::MeanMismatch {
            coefficients: from_coefficients,
            derivative: from_derivative,
        });
    }
    Ok(from_coefficients)
}

/// `ε(G, x) = P'(G, x) / P(G, x)`.
pub fn epsilon_at<S: Scalar>(g: &Graph, x: &S) -> Result<S, ChromaticError> {
    log_derivative(&chromatic_polynomial(g), x)
}

/// `p'(x) / p(x)`, failing at roots of `p`.
pub fn log_derivative<S: Scalar>(p: &IntPolynomial, x: &S) -> Result<S, ChromaticError> {
    let value = p.eval(x);
    if value.is_zero() {
        return Err(ChromaticError::ChromaticRoot(format!("{x:?}")));
    }
    Ok(p.derivative().eval(x) / value)
}

/// The degrees `d_{Q_i}(u_i)` along a perfect elimination ordering, so that
/// `ε(Q, x) = Σ 1 / (x - d_i)` and `P(Q, x) = Π (x - d_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplePoles {
    order: Vec<usize>,
    degrees: Vec<usize>,
}

impl SimplePoles {
    /// The elimination ordering the degrees were read along.
    pub fn ordering(&self) -> &[usize] {
        &self.order
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// The degrees as a sorted multiset.
    pub fn sorted(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }

    /// `Σ 1 / (x - d_i)`, or `None` when `x` hits a pole.
    pub fn eval<S: Scalar>(&self, x: &S) -> Option<S> {
        self.degrees.iter().try_fold(S::zero(), |acc, &d| {
            let gap = x.clone() - S::from_i64(d as i64);
            (!gap.is_zero()).then(|| acc + S::one() / gap)
        })
    }

    /// `Π (x - d_i)`.
    pub fn polynomial(&self) -> IntPolynomial {
        self.degrees
            .iter()
            .fold(IntPolynomial::one(), |acc, &d| acc.mul_linear(d as i64))
    }
}

/// Symbolic `ε(Q, x)` of a chordal graph as a sum of simple poles.
pub fn epsilon_chordal(q: &Graph) -> Result<SimplePoles, ChromaticError> {
    let order = q.perfect_elimination_ordering().ok_or(ChromaticError::NotChordal)?;
    let mut seen = crate::graph::VertexSet::new();
    let degrees = order
        .iter()
        .map(|&u| {
            let d = q.neighbors(u).intersection(&seen).len();
            seen.insert(u);
            d
        })
        .collect();
    Ok(SimplePoles { order, degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LabeledGraphs;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    /// Counts proper colourings with `k` colours by backtracking.
    fn count_colourings(g: &Graph, k: usize) -> i64 {
        fn go(g: &Graph, k: usize, colour: &mut Vec<usize>) -> i64 {
            let v = colour.len();
            if v == g.order() {
                return 1;
            }
            let mut total = 0;
            for c in 0..k {
                if (0..v).all(|w| !g.has_edge(v, w) || colour[w] != c) {
                    colour.push(c);
                    total += go(g, k, colour);
                    colour.pop();
                }
            }
            total
        }
        go(g, k, &mut Vec::new())
    }

    /// Lagrange interpolation through `(k, P(k))` for `k = 0..=n`, exact.
    fn interpolate(points: &[(i64, i64)]) -> Vec<BigRational> {
        let mut result = vec![BigRational::zero(); points.len()];
        for (j, &(xj, yj)) in points.iter().enumerate() {
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (m, &(xm, _)) in points.iter().enumerate() {
                if m == j {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, c) in basis.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * q(xm, 1);
                }
                basis = next;
                denom *= q(xj - xm, 1);
            }
            for (k, c) in basis.iter().enumerate() {
                result[k] += c * q(yj, 1) / &denom;
            }
        }
        result
    }

    fn oracle_polynomial(g: &Graph) -> IntPolynomial {
        let points: Vec<_> = (0..=g.order() as i64).map(|k| (k, count_colourings(g, k as usize))).collect();
        let coeffs = interpolate(&points);
        assert!(coeffs.iter().all(|c| c.is_integer()));
        IntPolynomial::new(coeffs.into_iter().map(|c| c.to_integer()).collect())
    }

    #[test]
    fn c4_matches_colouring_oracle() {
        let expected = IntPolynomial::from_i64s(&[0, -3, 6, -4, 1]);
        assert_eq!(oracle_polynomial(&Graph::cycle(4)), expected);
        assert_eq!(chromatic_polynomial(&Graph::cycle(4)), expected);
    }

    #[test]
    fn basic_polynomials() {
        assert_eq!(chromatic_polynomial(&Graph::complete(3)), IntPolynomial::from_i64s(&[0, 2, -3, 1]));
        assert_eq!(chromatic_polynomial(&Graph::empty(3)), IntPolynomial::monomial(3));
        assert_eq!(chromatic_polynomial(&Graph::empty(0)), IntPolynomial::one());
    }

    #[test]
    fn every_graph_to_order_six_matches_colouring_oracle() {
        for n in 0..=6 {
            for g in LabeledGraphs::new(n).step_by(if n == 6 { 97 } else { 1 }) {
                assert_eq!(chromatic_polynomial(&g), oracle_polynomial(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn coefficient_examples() {
        let of = |g: &Graph| Coefficients::of_graph(g).as_slice().to_vec();
        assert_eq!(of(&Graph::cycle(4)), ints(&[3, 6, 4, 1]));
        assert_eq!(of(&Graph::complete(3)), ints(&[2, 3, 1]));
        assert_eq!(of(&Graph::star(3)), ints(&[1, 3, 3, 1]));
        let c = Coefficients::of_graph(&Graph::cycle(4));
        assert_eq!(c.get(0), BigInt::zero());
        assert_eq!(c.get(5), BigInt::zero());
        assert_eq!(c.total(), BigInt::from(14));
    }

    #[test]
    fn coefficient_errors() {
        let bad = IntPolynomial::from_i64s(&[0, 3, 6, -4, 1]);
        assert_eq!(Coefficients::from_polynomial(&bad), Err(ChromaticError::SignPattern { power: 1 }));
        assert_eq!(
            Coefficients::from_polynomial(&IntPolynomial::zero()),
            Err(ChromaticError::ZeroPolynomial)
        );
        assert_eq!(
            Coefficients::from_polynomial(&IntPolynomial::from_i64s(&[1, 1])),
            Err(ChromaticError::ConstantTerm)
        );
    }

    #[test]
    fn evaluation_examples() {
        let minus_one = q(-1, 1);
        assert_eq!(chromatic_polynomial(&Graph::complete(3)).eval(&minus_one), q(-6, 1));
        assert_eq!(chromatic_polynomial(&Graph::cycle(4)).eval(&minus_one), q(14, 1));
    }

    #[test]
    fn b_distribution_examples() {
        assert_eq!(b_distribution(&Graph::complete(3)), vec![q(1, 6), q(3, 6), q(2, 6)]);
        assert_eq!(b_distribution(&Graph::complete(2)), vec![q(1, 2), q(1, 2)]);
        assert_eq!(b_distribution(&Graph::empty(2)), vec![q(1, 1), q(0, 1)]);
        for g in LabeledGraphs::new(4) {
            assert_eq!(b_distribution(&g).iter().sum::<BigRational>(), q(1, 1));
        }
    }

    #[test]
    fn mean_size_examples() {
        for n in 1..=7 {
            assert_eq!(epsilon_mean(&Graph::path(n)).unwrap(), q(n as i64 - 1, 2));
            assert_eq!(epsilon_mean(&Graph::star(n - 1)).unwrap(), q(n as i64 - 1, 2));
            let harmonic: BigRational = (1..=n as i64).map(|k| q(1, k)).sum();
            assert_eq!(epsilon_mean(&Graph::complete(n)).unwrap(), q(n as i64, 1) - harmonic);
        }
        assert_eq!(epsilon_mean(&Graph::cycle(4)).unwrap(), q(25, 14));
        assert_eq!(epsilon_mean(&Graph::empty(0)).unwrap(), q(0, 1));
    }

    #[test]
    fn epsilon_at_examples() {
        assert_eq!(epsilon_at(&Graph::complete(3), &q(-1, 1)).unwrap(), q(-11, 6));
        for n in 1..=6 {
            assert_eq!(epsilon_at(&Graph::path(n), &q(-1, 1)).unwrap(), q(-(n as i64) - 1, 2));
        }
        assert_eq!(epsilon_at(&Graph::cycle(4), &q(-1, 1)).unwrap(), q(-31, 14));
        assert!(matches!(epsilon_at(&Graph::complete(3), &q(2, 1)), Err(ChromaticError::ChromaticRoot(_))));
        let approx: f64 = epsilon_at(&Graph::complete(3), &-1.0).unwrap();
        assert!((approx + 11.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn chordal_poles() {
        for n in 1..=6 {
            assert_eq!(epsilon_chordal(&Graph::complete(n)).unwrap().sorted(), (0..n).collect::<Vec<_>>());
            let mut tree = vec![1; n];
            tree[0] = 0;
            assert_eq!(epsilon_chordal(&Graph::path(n)).unwrap().sorted(), tree);
        }
        assert_eq!(epsilon_chordal(&Graph::complete(1)).unwrap().degrees(), &[0]);
        assert_eq!(epsilon_chordal(&Graph::cycle(4)), Err(ChromaticError::NotChordal));
    }

    #[test]
    fn chordal_poles_agree_with_epsilon_at() {
        let grid = [q(-1, 4), q(-1, 2), q(-1, 1), q(-7, 3)];
        for g in LabeledGraphs::new(5).filter(Graph::is_chordal) {
            let poles = epsilon_chordal(&g).unwrap();
            assert_eq!(poles.polynomial(), chromatic_polynomial(&g));
            for x in &grid {
                assert_eq!(poles.eval(x).unwrap(), epsilon_at(&g, x).unwrap());
            }
        }
    }

    #[test]
    fn sign_alternation_and_components_multiply() {
        for n in 0..=6 {
            for g in LabeledGraphs::new(n).step_by(if n == 6 { 7 } else { 1 }) {
                let coeffs = Coefficients::of_graph(&g);
                let c = g.component_count();
                assert_eq!(coeffs.get(n), BigInt::from(u8::from(n > 0)));
                for i in 1..=n {
                    assert_eq!(coeffs.get(i).is_zero(), i < c, "{g:?} i={i}");
                }
            }
        }
    }

    #[test]
    fn simplicial_vertex_splits_epsilon() {
        let grid = [q(-1, 2), q(-1, 1), q(-3, 1)];
        for g in LabeledGraphs::new(5) {
            for u in (0..5).filter(|&u| g.is_simplicial(u)) {
                let rest = g.delete_vertex(u).unwrap();
                for x in &grid {
                    let pole = BigRational::one() / (x - q(g.degree(u) as i64, 1));
                    assert_eq!(epsilon_at(&g, x).unwrap(), pole + epsilon_at(&rest, x).unwrap());
                }
            }
        }
    }

    fn small_graph() -> impl Strategy<Value = Graph> {
        (1usize..=7).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), 0u64..(1u64 << pairs))
        })
        .prop_map(|(n, mask)| LabeledGraphs::new(n).graph_at(mask))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn deletion_contraction_identity(g in small_graph(), seed in any::<u64>()) {
            let p = chromatic_polynomial(&g);
            prop_assert_eq!(&chromatic_polynomial_with(&g, EdgePick::Random(seed)), &p);
            for (u, v) in g.edges() {
                let split = &chromatic_polynomial(&g.delete_edge(u, v).unwrap())
                    - &chromatic_polynomial(&g.contract_edge(u, v).unwrap());
                prop_assert_eq!(&split, &p);
            }
        }

        #[test]
        fn disjoint_union_multiplies(a in small_graph(), b in small_graph()) {
            let union = a.disjoint_union(&b);
            prop_assert_eq!(
                chromatic_polynomial(&union),
                &chromatic_polynomial(&a) * &chromatic_polynomial(&b)
            );
        }
    }
}
