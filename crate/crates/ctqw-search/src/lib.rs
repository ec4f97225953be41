//! Continuous-time quantum-walk spatial search on Erdős–Rényi graphs.
//!
//! The walk searches for a marked vertex `w` by evolving the uniform state
//! under `H = -|w><w| - γA`, where `A` is the adjacency matrix and `γ` the
//! hopping rate. This crate provides:
//!
//! * reproducible `G(n, p)` sampling with a pinned RNG ([`graph`], [`rng`]);
//! * the spectral quantities the search analysis rests on — principal
//!   eigenvector overlap, concentration of `λ₁`, the rescaled spectral
//!   norm of `A - 𝔼A`, good vertex sets ([`spectral`]);
//! * exact walk dynamics by diagonalization, success-probability series,
//!   optimal measurement times, and the two-level comparison ([`evolution`]);
//! * a sweep harness that contrasts the exact hopping rate `1/λ₁(A)` with
//!   the mean-field simplification `1/(np)` across `(n, p)` grids, plus the
//!   detuning and counterexample studies ([`experiments`]);
//! * a thin CLI over all of the above ([`cli`]).
//!
//! Everything is deterministic given the seeds recorded in the outputs.

pub mod cli;
pub mod error;
pub mod evolution;
pub mod experiments;
pub mod graph;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
