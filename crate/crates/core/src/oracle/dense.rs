use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::detection::Fidelity;
use crate::error::{Error, Result};

/// Largest dimension handed to the dense eigensolver.
pub const MAX_DENSE_DIM: usize = 8192;

/// Ground-state gap below which the level is reported as degenerate.
pub const DEGENERACY_GAP: f64 = 1e-10;

const HERMITICITY_TOL: f64 = 1e-9;
const NORM_TOL: f64 = 1e-10;

/// Complex Hermitian matrix, symmetrised on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseHermitian {
    matrix: DMatrix<Complex64>,
    real: bool,
}

impl DenseHermitian {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        let n = matrix.nrows();
        if matrix.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: matrix.ncols(),
            });
        }
        if n == 0 || n > MAX_DENSE_DIM {
            return Err(Error::invalid(format!(
                "dimension {n} outside 1..={MAX_DENSE_DIM}"
            )));
        }
        if matrix
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite("Hamiltonian matrix entry".into()));
        }
        let adjoint = matrix.adjoint();
        let scale = 1.0 + matrix.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let asym = (&matrix - &adjoint)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if asym > HERMITICITY_TOL * scale {
            return Err(Error::invalid(format!(
                "matrix is not Hermitian (deviation {asym:.3e})"
            )));
        }
        let matrix = (matrix + adjoint).scale(0.5);
        let real = matrix.iter().all(|z| z.im == 0.0);
        Ok(DenseHermitian { matrix, real })
    }

    pub fn from_real(matrix: DMatrix<f64>) -> Result<Self> {
        Self::new(matrix.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// Full eigendecomposition, eigenvalues ascending. Real matrices take the
    /// cheaper real symmetric path.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let (values, vectors) = if self.real {
            let eig = self.matrix.map(|z| z.re).symmetric_eigen();
            (
                eig.eigenvalues,
                eig.eigenvectors.map(|x| Complex64::new(x, 0.0)),
            )
        } else {
            let eig = self.matrix.clone().symmetric_eigen();
            (eig.eigenvalues, eig.eigenvectors)
        };
        if values.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("eigenvalue".into()));
        }
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
        let values: Vec<f64> = order.iter().map(|&i| values[i]).collect();
        let vectors = DMatrix::from_fn(vectors.nrows(), order.len(), |r, c| vectors[(r, order[c])]);
        Ok(Spectrum { values, vectors })
    }
}

/// Eigenpairs of a [`DenseHermitian`], ascending in energy.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// Eigenvectors as columns.
    pub vectors: DMatrix<Complex64>,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn eigenstate(&self, k: usize) -> StateVector {
        StateVector {
            amplitudes: self.vectors.column(k).into_owned(),
        }
    }

    /// `exp(-i H t) |psi>`.
    pub fn propagate(&self, state: &StateVector, t: f64) -> Result<StateVector> {
        let c = self.coefficients(state)?;
        let phased = DVector::from_iterator(
            c.len(),
            c.iter()
                .zip(&self.values)
                .map(|(ck, e)| ck * Complex64::from_polar(1.0, -e * t)),
        );
        Ok(StateVector {
            amplitudes: &self.vectors * phased,
        })
    }

    /// Expansion of `state` over the eigenbasis, for repeated return
    /// amplitudes at many times.
    pub fn echo(&self, state: &StateVector) -> Result<Echo> {
        let c = self.coefficients(state)?;
        Ok(Echo {
            energies: self.values.clone(),
            weights: c.iter().map(|z| z.norm_sqr()).collect(),
        })
    }

    fn coefficients(&self, state: &StateVector) -> Result<DVector<Complex64>> {
        if state.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: state.dim(),
            });
        }
        Ok(self.vectors.adjoint() * &state.amplitudes)
    }
}

/// `<psi| exp(-i H t) |psi> = sum_k w_k exp(-i E_k t)`.
#[derive(Debug, Clone)]
pub struct Echo {
    energies: Vec<f64>,
    weights: Vec<f64>,
}

impl Echo {
    pub fn amplitude(&self, t: f64) -> Complex64 {
        self.energies
            .iter()
            .zip(&self.weights)
            .map(|(e, w)| Complex64::from_polar(*w, -e * t))
            .sum()
    }

    pub fn fidelity(&self, t: f64) -> Result<Fidelity> {
        Fidelity::clamped(self.amplitude(t).norm_sqr())
    }
}

/// Unit-norm complex amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: DVector<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: DVector<Complex64>) -> Result<Self> {
        let norm = amplitudes.norm();
        if !((norm - 1.0).abs() <= NORM_TOL) {
            return Err(Error::invalid(format!("state norm {norm} differs from 1")));
        }
        Ok(StateVector { amplitudes })
    }

    /// Rescales to unit norm; rejects the zero vector.
    pub fn normalized(amplitudes: DVector<Complex64>) -> Result<Self> {
        let norm = amplitudes.norm();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::invalid(
                "cannot normalise a zero or non-finite vector",
            ));
        }
        Ok(StateVector {
            amplitudes: amplitudes.unscale(norm),
        })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::normalized(DVector::from_iterator(
            amplitudes.len(),
            amplitudes.iter().map(|&x| Complex64::new(x, 0.0)),
        ))
    }

    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::invalid(format!(
                "basis index {index} outside 0..{dim}"
            )));
        }
        let mut v = DVector::zeros(dim);
        v[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { amplitudes: v })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    /// `|<self|other>|^2`.
    pub fn overlap_sq(&self, other: &StateVector) -> Result<Fidelity> {
        Fidelity::clamped(self.inner(other)?.norm_sqr())
    }
}

#[derive(Debug, Clone)]
pub struct GroundState {
    pub energy: f64,
    pub state: StateVector,
    /// `E1 - E0`; infinite for a one-dimensional space.
    pub gap: f64,
    /// Second vector of the lowest level when `gap` is below [`DEGENERACY_GAP`].
    pub partner: Option<StateVector>,
}

pub fn ground_state_dense(h: &DenseHermitian) -> Result<GroundState> {
    ground_state_from(&h.spectrum()?)
}

pub(crate) fn ground_state_from(spectrum: &Spectrum) -> Result<GroundState> {
    let gap = if spectrum.dim() > 1 {
        spectrum.values[1] - spectrum.values[0]
    } else {
        f64::INFINITY
    };
    Ok(GroundState {
        energy: spectrum.values[0],
        state: spectrum.eigenstate(0),
        gap,
        partner: (gap < DEGENERACY_GAP).then(|| spectrum.eigenstate(1)),
    })
}

/// `exp(-i H t) |psi>` by full diagonalisation.
pub fn evolve_dense(state: &StateVector, h: &DenseHermitian, t: f64) -> Result<StateVector> {
    if state.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            actual: state.dim(),
        });
    }
    h.spectrum()?.propagate(state, t)
}
