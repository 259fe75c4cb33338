//! Zero-mean pure Gaussian states under quadratic bosonic Hamiltonians.
//!
//! Conventions: `hbar = 1`, quadratures `r = (q1, p1, ..., qn, pn)` with
//! `q = (a + a^dag)/sqrt 2`, `p = -i (a - a^dag)/sqrt 2`, vacuum covariance
//! `I/2`. A Hamiltonian is `H = r^T M r / 2 + offset` and generates
//! `dr/dt = Omega M r`, so covariances evolve as `S sigma S^T` with
//! `S = exp(Omega M t)`. For two pure states the squared overlap is
//! `det(sigma_a + sigma_b)^(-1/2)`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::detection::Fidelity;
use crate::error::{ensure_finite, Error, Result};
use crate::expm::expm;

/// Normal-mode frequencies below this are treated as critical.
pub const MIN_NORMAL_FREQUENCY: f64 = 1e-10;
/// Tolerance on symplectic eigenvalues `1/2` for a pure state.
pub const PURITY_TOL: f64 = 1e-9;

/// The canonical form `Omega = diag([[0, 1], [-1, 0]], ...)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticForm {
    pub n_modes: usize,
}

impl SymplecticForm {
    pub fn new(n_modes: usize) -> Self {
        SymplecticForm { n_modes }
    }

    pub fn matrix(&self) -> DMatrix<f64> {
        let d = 2 * self.n_modes;
        DMatrix::from_fn(d, d, |i, j| {
            if i % 2 == 0 && j == i + 1 {
                1.0
            } else if i % 2 == 1 && j + 1 == i {
                -1.0
            } else {
                0.0
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticHamiltonian {
    n_modes: usize,
    m: DMatrix<f64>,
    /// Energy shift from normal ordering; never enters a fidelity.
    pub constant_offset: f64,
}

impl QuadraticHamiltonian {
    /// Builds `H = r^T M r / 2 + offset`. `M` is symmetrised.
    pub fn new(m: DMatrix<f64>, constant_offset: f64) -> Result<Self> {
        let d = m.nrows();
        if d == 0 || !d.is_multiple_of(2) || m.ncols() != d {
            return Err(Error::invalid(format!(
                "quadratic form must be 2n x 2n, got {} x {}",
                m.nrows(),
                m.ncols()
            )));
        }
        if m.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("quadratic form entry".into()));
        }
        let sym = (&m + m.transpose()) * 0.5;
        Ok(QuadraticHamiltonian {
            n_modes: d / 2,
            m: sym,
            constant_offset,
        })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    /// The dynamical generator `Omega M`.
    pub fn generator(&self) -> DMatrix<f64> {
        SymplecticForm::new(self.n_modes).matrix() * &self.m
    }

    /// Eigenvalues of `Omega M`: `+-i eps` for a stable mode, a real pair
    /// `+-kappa` for an exponentially growing one.
    pub fn generator_spectrum(&self) -> Vec<Complex64> {
        let mut ev: Vec<Complex64> = self
            .generator()
            .complex_eigenvalues()
            .iter()
            .copied()
            .collect();
        ev.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        ev
    }

    /// Largest exponential growth rate `max Re(eig(Omega M))`, zero when stable.
    pub fn max_growth_rate(&self) -> f64 {
        self.generator_spectrum()
            .iter()
            .map(|z| z.re)
            .fold(0.0, f64::max)
    }

    /// Normal-mode frequencies in ascending order. Requires `M > 0`.
    pub fn normal_mode_frequencies(&self) -> Result<Vec<f64>> {
        Ok(self.decompose()?.frequencies)
    }

    fn decompose(&self) -> Result<Decomposition> {
        let eig = self.m.clone().symmetric_eigen();
        let min_eig = eig.eigenvalues.min();
        if min_eig <= 0.0 {
            let rate = self.max_growth_rate();
            return Err(Error::Unstable(format!(
                "no ground state: quadratic form has eigenvalue {min_eig:.6e}, growth rate {rate:.6e}"
            )));
        }
        let root = &eig.eigenvectors
            * DMatrix::from_diagonal(&eig.eigenvalues.map(f64::sqrt))
            * eig.eigenvectors.transpose();
        let inv_root = &eig.eigenvectors
            * DMatrix::from_diagonal(&eig.eigenvalues.map(|x| 1.0 / x.sqrt()))
            * eig.eigenvectors.transpose();
        // A = M^(1/2) Omega M^(1/2) is antisymmetric; -A^2 has eigenvalues eps^2, each twice.
        let a = &root * SymplecticForm::new(self.n_modes).matrix() * &root;
        let neg_a2 = -(&a * &a);
        let neg_a2 = (&neg_a2 + neg_a2.transpose()) * 0.5;
        let eig_a = neg_a2.symmetric_eigen();
        let mut squared: Vec<f64> = eig_a.eigenvalues.iter().copied().collect();
        squared.sort_by(f64::total_cmp);
        let frequencies: Vec<f64> = squared.chunks(2).map(|p| p[0].max(0.0).sqrt()).collect();
        let abs_a = &eig_a.eigenvectors
            * DMatrix::from_diagonal(&eig_a.eigenvalues.map(|x| x.max(0.0).sqrt()))
            * eig_a.eigenvectors.transpose();
        Ok(Decomposition {
            inv_root,
            abs_a,
            frequencies,
        })
    }
}

struct Decomposition {
    inv_root: DMatrix<f64>,
    abs_a: DMatrix<f64>,
    frequencies: Vec<f64>,
}

/// Zero-mean pure Gaussian state, stored as its quadrature covariance.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    n_modes: usize,
    sigma: DMatrix<f64>,
}

impl GaussianState {
    pub fn vacuum(n_modes: usize) -> Self {
        GaussianState {
            n_modes,
            sigma: DMatrix::identity(2 * n_modes, 2 * n_modes) * 0.5,
        }
    }

    /// Validates symmetry, positivity and purity.
    pub fn from_covariance(sigma: DMatrix<f64>) -> Result<Self> {
        let d = sigma.nrows();
        if d == 0 || !d.is_multiple_of(2) || sigma.ncols() != d {
            return Err(Error::invalid("covariance must be 2n x 2n"));
        }
        let scale = sigma.abs().max();
        if (&sigma - sigma.transpose()).abs().max() > 1e-12 * scale.max(1.0) {
            return Err(Error::invalid("covariance is not symmetric"));
        }
        let state = GaussianState {
            n_modes: d / 2,
            sigma: (&sigma + sigma.transpose()) * 0.5,
        };
        let nu = state.symplectic_eigenvalues()?;
        if let Some(bad) = nu.iter().find(|v| (*v - 0.5).abs() > PURITY_TOL) {
            return Err(Error::invalid(format!(
                "state is not pure: symplectic eigenvalue {bad}"
            )));
        }
        Ok(state)
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn covariance(&self) -> &DMatrix<f64> {
        &self.sigma
    }

    /// Symplectic eigenvalues in ascending order (all `1/2` for a pure state).
    pub fn symplectic_eigenvalues(&self) -> Result<Vec<f64>> {
        let chol = self
            .sigma
            .clone()
            .cholesky()
            .ok_or_else(|| Error::invalid("covariance is not positive definite"))?;
        let l = chol.l();
        let a = l.transpose() * SymplecticForm::new(self.n_modes).matrix() * &l;
        let neg_a2 = -(&a * &a);
        let neg_a2 = (&neg_a2 + neg_a2.transpose()) * 0.5;
        let mut sq: Vec<f64> = neg_a2.symmetric_eigenvalues().iter().copied().collect();
        sq.sort_by(f64::total_cmp);
        Ok(sq.chunks(2).map(|p| p[0].max(0.0).sqrt()).collect())
    }
}

/// `S = exp(Omega M t)`; stable and unstable generators alike.
pub fn symplectic_propagator(h: &QuadraticHamiltonian, t: f64) -> Result<DMatrix<f64>> {
    ensure_finite("t", t)?;
    expm(&(h.generator() * t))
}

pub fn evolve(state: &GaussianState, h: &QuadraticHamiltonian, t: f64) -> Result<GaussianState> {
    if state.n_modes != h.n_modes {
        return Err(Error::DimensionMismatch {
            expected: h.n_modes,
            actual: state.n_modes,
        });
    }
    let s = symplectic_propagator(h, t)?;
    let sigma = &s * &state.sigma * s.transpose();
    Ok(GaussianState {
        n_modes: state.n_modes,
        sigma: (&sigma + sigma.transpose()) * 0.5,
    })
}

/// Covariance of the Gaussian ground state of a positive-definite `H`.
///
/// With `A = M^(1/2) Omega M^(1/2)` the ground state is
/// `sigma = M^(-1/2) |A| M^(-1/2) / 2`, where `|A| = sqrt(-A^2)`.
pub fn ground_state(h: &QuadraticHamiltonian) -> Result<GaussianState> {
    let dec = h.decompose()?;
    if let Some(&eps) = dec.frequencies.first() {
        if eps < MIN_NORMAL_FREQUENCY {
            return Err(Error::Unstable(format!(
                "normal-mode frequency {eps:.3e} is critical; no isolated ground state"
            )));
        }
    }
    let sigma = &dec.inv_root * &dec.abs_a * &dec.inv_root * 0.5;
    Ok(GaussianState {
        n_modes: h.n_modes,
        sigma: (&sigma + sigma.transpose()) * 0.5,
    })
}

/// Squared overlap `|<a|b>|^2 = det(sigma_a + sigma_b)^(-1/2)`.
///
/// The determinant comes from a Cholesky factor and is accumulated as a log,
/// so strongly squeezed or amplified states do not overflow.
pub fn pure_overlap(a: &GaussianState, b: &GaussianState) -> Result<Fidelity> {
    if a.n_modes != b.n_modes {
        return Err(Error::DimensionMismatch {
            expected: a.n_modes,
            actual: b.n_modes,
        });
    }
    let sum = &a.sigma + &b.sigma;
    let chol = sum.cholesky().ok_or_else(|| {
        Error::invalid("sigma_a + sigma_b is not positive definite; corrupted state")
    })?;
    let log_sqrt_det: f64 = chol.l().diagonal().iter().map(|x| x.ln()).sum();
    Fidelity::clamped((-log_sqrt_det).exp())
}
