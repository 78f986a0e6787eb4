//! End-to-end acceptance checks. Runs without the libtest harness so each
//! criterion prints exactly one PASS/FAIL line; exits nonzero on any FAIL.

use std::process::ExitCode;
use std::time::Instant;

use chromatic_core::broken_cycle::{whitney_coefficient, EdgeOrdering};
use chromatic_core::chromatic::{chromatic_polynomial, epsilon_mean, Coefficients};
use chromatic_core::graph::LabeledGraphs;
use chromatic_core::orientation::{
    count_acyclic, count_unique_source, interp_coefficient_orientation, interp_coefficient_partition_with,
};
use chromatic_core::scalar::approx;
use chromatic_core::verify::{
    acyclic_deletion_sum, certify_positive_on_negatives, check_compare_q, compare_k_polynomial, d_vector,
    default_grid, vertex_recurrence, xi_identity_isolated, xi_identity_recursive, CertificateKind, Outcome,
};
use chromatic_core::{Graph, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Verdict = Result<String, String>;

fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn harmonic(n: usize) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, k| acc + Rational::new(BigInt::one(), BigInt::from(k)))
}

fn all_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(LabeledGraphs::new).collect()
}

/// Proper colourings with `k` colours, by backtracking.
fn colourings(g: &Graph, k: i64) -> BigInt {
    fn go(g: &Graph, k: i64, colour: &mut Vec<i64>) -> u64 {
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
    BigInt::from(go(g, k, &mut Vec::new()))
}

/// Turns an error into a failure message instead of a silent pass.
macro_rules! attempt {
    ($g:expr, $e:expr) => {
        match $e {
            Ok(value) => value,
            Err(error) => return Some(format!("{:?}: {}", $g, error)),
        }
    };
}

fn first_failure<T: Sync>(items: Vec<T>, check: impl Fn(&T) -> Option<String> + Sync) -> Option<String> {
    items.par_iter().find_map_first(|item| check(item))
}

/// 1. `ε(T_n) < ε(G) < ε(K_n)` for connected, non-tree, non-complete graphs,
/// 4 ≤ n ≤ 6, against the closed forms `(n-1)/2` and `n - H_n`.
fn conjecture_sweep() -> Verdict {
    let graphs: Vec<Graph> = (4..=6)
        .flat_map(LabeledGraphs::new)
        .filter(|g| g.is_connected() && !g.is_tree() && !g.is_complete())
        .collect();
    let count = graphs.len();
    let failure = first_failure(graphs, |g| {
        let n = g.order();
        let lower = Rational::new(BigInt::from(n - 1), BigInt::from(2));
        let upper = Rational::from_integer(BigInt::from(n)) - harmonic(n);
        let value = attempt!(g, epsilon_mean(g));
        (!(lower < value && value < upper)).then(|| format!("{g:?}: {lower} < {value} < {upper} fails"))
    });
    failure.map_or(Ok(format!("{count} graphs")), Err)
}

/// 2. Whitney counts equal `a_i` for every graph n ≤ 6 under 5 random
/// edge rankings each.
fn whitney() -> Verdict {
    let graphs = all_graphs(6);
    let count = graphs.len();
    let indexed: Vec<(usize, Graph)> = graphs.into_iter().enumerate().collect();
    let failure = first_failure(indexed, |(index, g)| {
        let a = Coefficients::of_graph(g);
        let mut rng = ChaCha8Rng::seed_from_u64(*index as u64);
        for _ in 0..5 {
            let eta = EdgeOrdering::shuffled(g, &mut rng);
            for i in 1..=g.order() {
                let value = attempt!(g, whitney_coefficient(g, &eta, i));
                if value != a.get(i) {
                    return Some(format!("{g:?} {eta:?} i={i}: {value} vs {}", a.get(i)));
                }
            }
        }
        None
    });
    failure.map_or(Ok(format!("{count} graphs x 5 rankings")), Err)
}

/// 3. `α(G) = (-1)^n P(G, -1)` for all graphs and `α(G, v) = a_1` for every
/// `v` of every connected graph, n ≤ 6.
fn stanley_greene_zaslavsky() -> Verdict {
    let graphs = all_graphs(6);
    let count = graphs.len();
    let minus_one = rational(-1, 1);
    let failure = first_failure(graphs, |g| {
        let n = g.order();
        let signed = chromatic_polynomial(g).eval(&minus_one) * rational(if n % 2 == 0 { 1 } else { -1 }, 1);
        let alpha = Rational::from_integer(count_acyclic(g));
        if alpha != signed {
            return Some(format!("{g:?}: alpha {alpha} vs {signed}"));
        }
        if g.is_connected() {
            let a1 = Coefficients::of_graph(g).get(1);
            for v in 0..n {
                let sourced = attempt!(g, count_unique_source(g, v));
                if sourced != a1 {
                    return Some(format!("{g:?} v={v}: {sourced} vs a_1 = {a1}"));
                }
            }
        }
        None
    });
    failure.map_or(Ok(format!("{count} graphs")), Err)
}

/// 4. Both partition interpretations give `a_i` for every `i`, every anchor
/// `v` and a random ranking, n ≤ 5.
fn new_interpretations() -> Verdict {
    let graphs = all_graphs(5);
    let count = graphs.len();
    let indexed: Vec<(usize, Graph)> = graphs.into_iter().enumerate().collect();
    let failure = first_failure(indexed, |(index, g)| {
        let n = g.order();
        let a = Coefficients::of_graph(g);
        let eta = EdgeOrdering::shuffled(g, &mut ChaCha8Rng::seed_from_u64(*index as u64));
        for i in 1..=n {
            let by_trees = attempt!(g, interp_coefficient_partition_with(g, &eta, i));
            if by_trees != a.get(i) {
                return Some(format!("{g:?} i={i}: partition {by_trees} vs {}", a.get(i)));
            }
            let by_anchor: Vec<BigInt> =
                attempt!(g, (0..n).map(|v| interp_coefficient_orientation(g, i, v)).collect::<Result<_, _>>());
            if by_anchor.iter().any(|value| value != &by_anchor[0]) {
                return Some(format!("{g:?} i={i}: anchor dependence {by_anchor:?}"));
            }
            if by_anchor[0] != a.get(i) {
                return Some(format!("{g:?} i={i}: orientation {} vs {}", by_anchor[0], a.get(i)));
            }
        }
        None
    });
    failure.map_or(Ok(format!("{count} graphs, all anchors")), Err)
}

/// 5. Both `d_i` routes agree, `d_i ≥ 0`, and the zero set is exactly the
/// four listed cases for non-complete graphs (all of `1..=n` for `K_n`),
/// n ≤ 6.
fn d_machinery() -> Verdict {
    let graphs = all_graphs(6);
    let count = graphs.len();
    let failure = first_failure(graphs, |g| {
        let d = attempt!(g, d_vector(g));
        let n = g.order();
        let c = g.component_count();
        let isolated = (0..n).any(|u| g.degree(u) == 0);
        let cycle = c == 1 && n >= 3 && (0..n).all(|u| g.degree(u) == 2);
        let expected_zero = |i: usize| {
            g.is_complete()
                || i == n
                || (1 <= i && i + 2 <= c)
                || (c >= 2 && i == c - 1 && !isolated)
                || (i == 1 && c == 1 && cycle)
        };
        for i in 1..=n {
            let value = d.get(i);
            if value.is_negative() || value.is_zero() != expected_zero(i) {
                return Some(format!("{g:?}: d_{i} = {value}"));
            }
        }
        None
    });
    failure.map_or(Ok(format!("{count} graphs")), Err)
}

fn chordal_proper_spanning_subgraphs(g: &Graph) -> Vec<Graph> {
    let edges = g.edges();
    (0..(1u64 << edges.len()) - 1)
        .map(|mask| {
            let kept: Vec<_> = (0..edges.len()).filter(|k| mask >> k & 1 == 1).map(|k| edges[k]).collect();
            Graph::from_edges(g.order(), &kept).expect("subset of edges")
        })
        .filter(Graph::is_chordal)
        .collect()
}

/// 6. The aggregate polynomial has an alternation certificate for every
/// non-complete connected graph, n ≤ 6; every chordal proper spanning
/// subgraph comparison holds, n ≤ 5.
fn certificates() -> Verdict {
    let grid = default_grid();
    let connected: Vec<Graph> =
        all_graphs(6).into_iter().filter(|g| g.is_connected() && !g.is_complete()).collect();
    let connected_count = connected.len();
    if let Some(failure) = first_failure(connected, |g| match certify_positive_on_negatives(&compare_k_polynomial(g), &grid) {
        Ok(cert) if cert.kind == CertificateKind::CoefficientAlternation => None,
        other => Some(format!("{g:?}: {other:?}")),
    }) {
        return Err(failure);
    }

    let graphs = all_graphs(5);
    let per_graph: Vec<Result<(usize, usize), String>> = graphs
        .par_iter()
        .map(|g| {
            let mut tally = (0, 0);
            for q in chordal_proper_spanning_subgraphs(g) {
                let report = check_compare_q(g, &q, &grid).map_err(|e| format!("{g:?} Q={q:?}: {e}"))?;
                match (report.outcome, report.certificate_kind) {
                    (Outcome::Holds, Some(CertificateKind::CoefficientAlternation)) => tally.0 += 1,
                    (Outcome::Holds, _) => tally.1 += 1,
                    (other, _) => return Err(format!("{g:?} Q={q:?}: {other}")),
                }
            }
            Ok(tally)
        })
        .collect();
    let mut pairs = (0, 0);
    for result in per_graph {
        let (alternation, grid_only) = result?;
        pairs.0 += alternation;
        pairs.1 += grid_only;
    }
    Ok(format!(
        "{connected_count} alternation certificates; {} (G, Q) pairs hold ({} by alternation, {} on the grid)",
        pairs.0 + pairs.1,
        pairs.0,
        pairs.1
    ))
}

/// 7. The vertex recurrence and both ξ identities hold at -1/2, -1, -3 for
/// every applicable `(G, u)`, n ≤ 5.
fn recurrences() -> Verdict {
    let points = [rational(-1, 2), rational(-1, 1), rational(-3, 1)];
    let graphs = all_graphs(5);
    let checked = graphs.iter().map(Graph::order).sum::<usize>();
    let failure = first_failure(graphs, |g| {
        for u in 0..g.order() {
            for x in &points {
                let holds = if g.degree(u) == 0 {
                    xi_identity_isolated(g, u, x).map(|c| c.holds())
                } else {
                    let recurrence = vertex_recurrence(g, u).map(|(lhs, rhs)| lhs.eval(x) == rhs.eval(x));
                    let identity = xi_identity_recursive(g, u, x).map(|c| c.holds());
                    recurrence.and_then(|r| identity.map(|i| r && i))
                };
                match holds {
                    Ok(true) => {}
                    other => return Some(format!("{g:?} u={u} x={x}: {other:?}")),
                }
            }
        }
        None
    });
    failure.map_or(Ok(format!("{checked} (G, u) pairs x 3 points")), Err)
}

/// 8. Spot values, with colouring counts as the independent oracle for the
/// small ones.
fn spot_values() -> Verdict {
    let c4 = Graph::cycle(4);
    let eps_c4 = epsilon_mean(&c4).map_err(|e| e.to_string())?;
    if eps_c4 != rational(25, 14) {
        return Err(format!("eps(C_4) = {eps_c4}"));
    }
    let p_c4 = chromatic_polynomial(&c4);
    // (k-1)^4 + (k-1) at k = 0..3 pins down the quartic with its leading 1.
    for k in 0..4 {
        let expected = Rational::from_integer(colourings(&c4, k));
        if p_c4.eval(&rational(k, 1)) != expected {
            return Err(format!("P(C_4, {k}) disagrees with colouring count"));
        }
    }
    if p_c4.eval(&rational(-1, 1)) != rational(14, 1) {
        return Err("P(C_4, -1) != 14".into());
    }
    let a_k3 = Coefficients::of_graph(&Graph::complete(3));
    if a_k3.as_slice() != [2, 3, 1].map(BigInt::from) {
        return Err(format!("a(K_3) = {:?}", a_k3.as_slice()));
    }
    let n = 1000;
    let h = harmonic(n);
    let eps_kn = epsilon_mean(&Graph::complete(n)).map_err(|e| e.to_string())?;
    if eps_kn != Rational::from_integer(BigInt::from(n)) - &h {
        return Err("eps(K_1000) != 1000 - H_1000".into());
    }
    let gap = (approx(&h) - ((n as f64).ln() + 0.577216)).abs();
    if gap >= 1e-3 {
        return Err(format!("|H_1000 - (ln 1000 + gamma)| = {gap}"));
    }
    Ok(format!("eps(C_4) = 25/14, P(C_4,-1) = 14, a(K_3) = (2,3,1), eps(K_1000) = 1000 - H_1000, gap {gap:.2e}"))
}

/// 9. `Σ_u α(G - u) ≥ α(G)`, with equality exactly for complete graphs, n ≤ 6.
fn deletion_average() -> Verdict {
    let graphs = all_graphs(6);
    let count = graphs.len();
    let failure = first_failure(graphs, |g| {
        let (deleted, whole) = acyclic_deletion_sum(g);
        let ok = if g.is_complete() { deleted == whole } else { deleted > whole };
        (!ok).then(|| format!("{g:?}: {deleted} vs {whole}"))
    });
    failure.map_or(Ok(format!("{count} graphs")), Err)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 9] = [
        ("conjecture sweep, 4 <= n <= 6", conjecture_sweep),
        ("Whitney broken-cycle oracle, n <= 6", whitney),
        ("Stanley and Greene-Zaslavsky, n <= 6", stanley_greene_zaslavsky),
        ("partition and orientation interpretations, n <= 5", new_interpretations),
        ("d_i routes, signs and zero cases, n <= 6", d_machinery),
        ("certificates for x < 0", certificates),
        ("recurrence identities, n <= 5", recurrences),
        ("spot values", spot_values),
        ("acyclic orientations of vertex-deleted subgraphs, n <= 6", deletion_average),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({elapsed:.1}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} ({elapsed:.1}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
