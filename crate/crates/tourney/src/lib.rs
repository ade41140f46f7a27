//! Entropy of tournaments and directed graphs.
//!
//! A tournament is an orientation of the complete graph. Its Laplacian
//! `L = D - A` (out-degrees on the diagonal) is normalized by the trace to
//! give a density-like matrix whose spectrum defines Renyi entropies
//! `H_a = log2(sum lambda^a) / (1 - a)` and, when the spectrum is real,
//! the von Neumann entropy `sum lambda * log2(1/lambda)`.
//!
//! The crate keeps every route exact until the final logarithm:
//!
//! * [`tournament`] — bit-packed tournaments, structural predicates,
//!   subtournament counting, canonical forms, isomorphism.
//! * [`enumeration`] — isomorphism-free generation of all tournaments, of
//!   regular tournaments, and of score sequences; distinct-value censuses.
//! * [`spectral`] — exact integer Laplacians, characteristic polynomials by
//!   the Faddeev–LeVerrier recurrence, square-free factorization, and an
//!   Aberth–Ehrlich root finder with residual checks.
//! * [`entropy`] — closed-form integer power sums of the Laplacian spectrum,
//!   exact Renyi comparisons, arc-reversal balancing steps, closed forms for
//!   the two 3-tournaments.
//! * [`walks`] — the lazy-walk Markov matrix of a digraph, the von Neumann
//!   entropy as a trace series, a Monte Carlo return-probability estimator,
//!   and entropy upper bounds.
//! * [`order`] — entropy partial orders on sets of tournaments with exact
//!   comparisons, covering relations, and DOT/CSV export.

mod canon;
pub mod entropy;
pub mod enumeration;
mod error;
pub mod order;
pub mod spectral;
pub mod tournament;
pub mod walks;

pub use error::{Error, Result};
pub use tournament::{
    CanonicalForm, FourCounts, RotationalSymbol, ScoreSequence, Tournament, MAX_N,
};
