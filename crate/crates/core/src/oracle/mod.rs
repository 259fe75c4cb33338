//! Brute-force references: dense diagonalisation of spin chains and
//! truncated bosonic modes, photon statistics, and direct minimisation over
//! qubit measurements. Slow, but free of the approximations the analytic
//! modules rely on.

mod dense;
mod fock;
mod qubit;
mod spin;

pub use dense::{
    evolve_dense, ground_state_dense, DenseHermitian, Echo, GroundState, Spectrum, StateVector,
    DEGENERACY_GAP, MAX_DENSE_DIM,
};
pub use fock::{
    annihilation, dicke_reference_truncation, fock_dicke_fidelities, fock_dicke_fidelity,
    fock_opo_fidelities, fock_opo_fidelity, opo_hamiltonian_fock, photon_number_distribution,
    squeezed_vacuum, ConvergedFidelity, FockDickeOracle, FockOpoOracle, PhotonDistribution,
    SqueezedFockBasis, CONVERGENCE_TOL, LEAKAGE_TOL, MAX_DICKE_TRUNCATION, MIN_OPO_TRUNCATION,
};
pub use qubit::optimal_qubit_discrimination;
pub use spin::{
    ising_hamiltonian_dense, spin_chain_fidelity_bruteforce, SpinChainOracle, MAX_SPIN_SITES,
};
