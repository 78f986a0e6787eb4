//! Exact chromatic polynomials of small simple graphs, together with
//! independent combinatorial oracles for their coefficients and the
//! machinery to certify inequalities between logarithmic derivatives
//! `P'(G, x) / P(G, x)` on the negative real axis.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: labelled simple graphs on bitset adjacency, structural
//!   operations, chordality, connected partitions and text formats.
//! * [`poly`]: dense big-integer polynomials.
//! * [`chromatic`]: deletion–contraction, coefficient sign convention,
//!   mean broken-cycle-free subgraph size and `ε(G, x)`.
//! * [`broken_cycle`]: Whitney's broken-cycle enumeration oracle.
//! * [`orientation`]: acyclic-orientation counts and the partition based
//!   coefficient interpretations.
//! * [`verify`]: `ξ(G, x)`, the `d_i` coefficients, sign certificates and
//!   exhaustive sweeps.
//!
//! Evaluation routines are generic over [`Scalar`], so the same code runs
//! in exact arithmetic ([`Rational`]) or in `f64` for display purposes.

pub mod broken_cycle;
pub mod chromatic;
pub mod graph;
pub mod orientation;
pub mod poly;
pub mod scalar;
pub mod verify;

pub use graph::{Graph, OrderedPartition, VertexPartition, VertexSet};
pub use poly::IntPolynomial;
pub use scalar::Scalar;

/// Arbitrary-precision integer used for every coefficient and count.
pub type Integer = num_bigint::BigInt;

/// Exact rational scalar; all inequality checks run in this type.
pub type Rational = num_rational::BigRational;

/// Double precision scalar, used only for human-readable rendering.
pub type Approx = f64;
