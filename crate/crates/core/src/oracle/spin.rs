use nalgebra::DMatrix;

use super::dense::{ground_state_from, DenseHermitian, Echo, GroundState};
use crate::detection::Fidelity;
use crate::error::{ensure_finite, Error, Result};
use crate::ising::IsingParams;

pub const MAX_SPIN_SITES: usize = 12;

/// `-J sum_j (sz_j sz_{j+1} + g sx_j)` on a periodic ring, in the `sz` product
/// basis (bit `j` of the index set means spin `j` down).
pub fn ising_hamiltonian_dense(n_sites: usize, coupling: f64, g: f64) -> Result<DenseHermitian> {
    if !(2..=MAX_SPIN_SITES).contains(&n_sites) {
        return Err(Error::invalid(format!(
            "dense chains need 2..={MAX_SPIN_SITES} sites, got {n_sites}"
        )));
    }
    ensure_finite("J", coupling)?;
    ensure_finite("g", g)?;
    let dim = 1usize << n_sites;
    let mut h = DMatrix::<f64>::zeros(dim, dim);
    for s in 0..dim {
        let mut zz = 0.0;
        for j in 0..n_sites {
            let next = (j + 1) % n_sites;
            let aligned = ((s >> j) & 1) == ((s >> next) & 1);
            zz += if aligned { 1.0 } else { -1.0 };
            h[(s ^ (1 << j), s)] -= coupling * g;
        }
        h[(s, s)] -= coupling * zz;
    }
    DenseHermitian::from_real(h)
}

/// Echo of the dense chain for one `(N, J, g0, g1)`, reusable across times.
#[derive(Debug, Clone)]
pub struct SpinChainOracle {
    ground: GroundState,
    echo: Echo,
    partner_echo: Option<Echo>,
}

impl SpinChainOracle {
    pub fn new(n_sites: usize, coupling: f64, g0: f64, g1: f64) -> Result<Self> {
        let h0 = ising_hamiltonian_dense(n_sites, coupling, g0)?;
        let ground = ground_state_from(&h0.spectrum()?)?;
        let h1 = ising_hamiltonian_dense(n_sites, coupling, g1)?.spectrum()?;
        let echo = h1.echo(&ground.state)?;
        let partner_echo = ground.partner.as_ref().map(|p| h1.echo(p)).transpose()?;
        Ok(SpinChainOracle {
            ground,
            echo,
            partner_echo,
        })
    }

    pub fn ground_state(&self) -> &GroundState {
        &self.ground
    }

    /// `|<psi| exp(-i H1 t) |psi>|^2`; the `exp(i H0 t)` factor is a phase on
    /// the ground state.
    pub fn fidelity(&self, t: f64) -> Result<Fidelity> {
        self.echo.fidelity(t)
    }

    /// The same for the second ground vector when the lowest level is degenerate.
    pub fn partner_fidelity(&self, t: f64) -> Option<Result<Fidelity>> {
        self.partner_echo.as_ref().map(|e| e.fidelity(t))
    }
}

/// Dense-diagonalisation echo of the periodic chain described by `params`
/// (the momentum grid field is irrelevant here).
pub fn spin_chain_fidelity_bruteforce(params: &IsingParams) -> Result<Fidelity> {
    params.validate()?;
    SpinChainOracle::new(params.n_sites, params.coupling, params.g0, params.g1)?.fidelity(params.t)
}
