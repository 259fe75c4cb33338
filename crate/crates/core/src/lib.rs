//! Numerics for quantum transition-edge detectors.
//!
//! A detector prepares a probe, lets it evolve under either the unperturbed
//! Hamiltonian `H0` or the perturbed `H1`, and measures. The squared overlap
//! of the two final states (the Loschmidt echo, or fidelity) fixes the best
//! achievable error probability. This crate computes that fidelity for the
//! transverse-field Ising chain, the degenerate parametric oscillator and the
//! normal-phase Dicke model, checks every closed form against brute-force
//! simulation, and evaluates the heterodyne Fisher information of a damped
//! parametric oscillator near threshold.
//!
//! Units are natural: `hbar = 1`, all rates in inverse time.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bosonic;
pub mod detection;
pub mod error;
pub mod exec;
pub mod expm;
pub mod gaussian;
pub mod ising;
pub mod oracle;
pub mod quadrature;
pub mod spectral;

pub use detection::{BinaryHypothesis, Fidelity};
pub use error::{Error, ErrorKind, Result};
pub use exec::Execution;
