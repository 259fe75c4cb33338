//! Truncated Fock-space references for the parametric oscillator and the
//! two-mode Dicke model. Truncation is a hard cutoff on the ladder matrix
//! `<n-1|a|n> = sqrt(n)`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::dense::{DenseHermitian, Echo, Spectrum, StateVector};
use crate::bosonic::{bogoliubov, BogoliubovCoefficients, DickeParams, OpoParams};
use crate::detection::Fidelity;
use crate::error::{ensure_finite, Error, Result};

pub const MIN_OPO_TRUNCATION: usize = 50;
pub const MAX_DICKE_TRUNCATION: usize = 40;

/// Largest fidelity change between truncations that counts as converged.
pub const CONVERGENCE_TOL: f64 = 1e-8;

/// Largest probability mass allowed outside a reported photon distribution.
pub const LEAKAGE_TOL: f64 = 1e-8;

/// Truncated annihilation operator on `dim` levels.
pub fn annihilation(dim: usize) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        a[(n - 1, n)] = (n as f64).sqrt();
    }
    a
}

/// `w a^dag a + i lam (a^dag^2 - a^2)` on `dim` levels.
pub fn opo_hamiltonian_fock(omega: f64, lam: f64, dim: usize) -> Result<DenseHermitian> {
    ensure_finite("omega", omega)?;
    ensure_finite("lambda", lam)?;
    let a = annihilation(dim);
    let ad = a.transpose();
    let number = &ad * &a;
    let pair = &ad * &ad - &a * &a;
    let h = DMatrix::from_fn(dim, dim, |i, j| {
        Complex64::new(omega * number[(i, j)], lam * pair[(i, j)])
    });
    DenseHermitian::new(h)
}

/// Same Hamiltonian restricted to even photon numbers `0, 2, .., < dim`, in
/// the frame `a -> e^(i pi/4) a` where it becomes `w n + lam (a^dag^2 + a^2)`
/// and therefore real and tridiagonal.
fn opo_even_sector(omega: f64, lam: f64, dim: usize) -> Result<DenseHermitian> {
    let levels = dim.div_ceil(2);
    let mut h = DMatrix::<f64>::zeros(levels, levels);
    for m in 0..levels {
        let n = 2 * m;
        h[(m, m)] = omega * n as f64;
        if m + 1 < levels {
            let c = lam * (((n + 1) * (n + 2)) as f64).sqrt();
            h[(m, m + 1)] = c;
            h[(m + 1, m)] = c;
        }
    }
    DenseHermitian::from_real(h)
}

/// Rotated even-sector amplitude `x_m` on `|2m>` back to the lab frame:
/// multiply by `e^(i pi n/4) = i^m`.
fn even_sector_to_lab(amplitudes: &DVector<Complex64>, dim: usize) -> DVector<Complex64> {
    let mut out = DVector::zeros(dim);
    let mut phase = Complex64::new(1.0, 0.0);
    for (m, x) in amplitudes.iter().enumerate() {
        out[2 * m] = phase * x;
        phase *= Complex64::new(0.0, 1.0);
    }
    out
}

/// Unnormalised vacuum of `b = mu a + i nu a^dag` on `dim` levels, with
/// `c_0 = mu^(-1/2)` and `c_(n+1) = -i (nu/mu) sqrt(n/(n+1)) c_(n-1)`, so its
/// squared norm falls short of one by the truncated tail.
fn squeezed_vacuum_raw(mu: f64, nu: f64, dim: usize) -> DVector<Complex64> {
    let mut c = DVector::zeros(dim);
    c[0] = Complex64::new(mu.powf(-0.5), 0.0);
    let ratio = Complex64::new(0.0, -nu / mu);
    let mut n = 1;
    while n + 1 < dim {
        c[n + 1] = ratio * ((n as f64) / (n as f64 + 1.0)).sqrt() * c[n - 1];
        n += 2;
    }
    c
}

/// Vacuum of `b = mu a + i nu a^dag`, normalised on the truncated space.
pub fn squeezed_vacuum(mu: f64, nu: f64, dim: usize) -> Result<StateVector> {
    check_mode_pair(mu, nu)?;
    StateVector::normalized(squeezed_vacuum_raw(mu, nu, dim))
}

fn check_mode_pair(mu: f64, nu: f64) -> Result<()> {
    if !(mu >= 1.0) || !((mu * mu - nu * nu - 1.0).abs() < 1e-9) {
        return Err(Error::invalid(format!(
            "need mu^2 - nu^2 = 1 with mu >= 1, got mu = {mu}, nu = {nu}"
        )));
    }
    Ok(())
}

/// Dense echo of the truncated oscillator for one parameter set, reusable
/// across times.
#[derive(Debug, Clone)]
pub struct FockOpoOracle {
    dim: usize,
    ground: StateVector,
    spectrum: Spectrum,
    echo: Echo,
    analytic_overlap: f64,
}

impl FockOpoOracle {
    pub fn new(params: &OpoParams, dim: usize) -> Result<Self> {
        params.validate()?;
        if dim < MIN_OPO_TRUNCATION {
            return Err(Error::invalid(format!(
                "truncation {dim} below {MIN_OPO_TRUNCATION}"
            )));
        }
        let g0 = params.g0();
        if !(0.0..1.0).contains(&g0) {
            return Err(Error::invalid(format!("H0 needs 0 <= g0 < 1, got {g0}")));
        }
        let h0 = opo_even_sector(params.omega0, params.lambda0, dim)?.spectrum()?;
        let ground = h0.eigenstate(0);

        // Cross-check against the closed-form squeezed vacuum, expressed in
        // the same rotated even sector (coefficients pick up a factor i^-m).
        let c = ground_coefficients(g0)?;
        let lab = squeezed_vacuum_raw(c.mu0, c.nu0, dim);
        let mut rotated = DVector::<Complex64>::zeros(ground.dim());
        let mut phase = Complex64::new(1.0, 0.0);
        for m in 0..ground.dim() {
            rotated[m] = phase * lab[2 * m];
            phase *= Complex64::new(0.0, -1.0);
        }
        let analytic = StateVector::normalized(rotated)?;
        let analytic_overlap = analytic.overlap_sq(&ground)?.value();
        if 1.0 - analytic_overlap > CONVERGENCE_TOL {
            return Err(Error::NonConvergence {
                what: "truncated H0 ground state (increase the truncation)",
                achieved: 1.0 - analytic_overlap,
                requested: CONVERGENCE_TOL,
            });
        }

        let spectrum = opo_even_sector(params.omega1, params.lambda1, dim)?.spectrum()?;
        let echo = spectrum.echo(&ground)?;
        Ok(FockOpoOracle {
            dim,
            ground,
            spectrum,
            echo,
            analytic_overlap,
        })
    }

    pub fn truncation(&self) -> usize {
        self.dim
    }

    /// `|<g|psi0>|^2` between the closed-form and dense ground states.
    pub fn analytic_ground_overlap(&self) -> f64 {
        self.analytic_overlap
    }

    pub fn fidelity(&self, t: f64) -> Result<Fidelity> {
        self.echo.fidelity(t)
    }

    /// `exp(-i H1 t)|psi0>` in the lab-frame Fock basis of `a`.
    pub fn evolved_state(&self, t: f64) -> Result<StateVector> {
        let psi = self.spectrum.propagate(&self.ground, t)?;
        StateVector::normalized(even_sector_to_lab(psi.amplitudes(), self.dim))
    }
}

/// `b0` coefficients of H0 alone; `g1` does not enter them.
fn ground_coefficients(g0: f64) -> Result<BogoliubovCoefficients> {
    bogoliubov(g0, 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergedFidelity {
    pub fidelity: Fidelity,
    /// Truncation the returned value was computed at.
    pub truncation: usize,
    /// `|dF|` against the previous truncation.
    pub change: f64,
}

fn accept(
    coarse: &[Fidelity],
    fine: &[Fidelity],
    truncation: usize,
) -> std::result::Result<Vec<ConvergedFidelity>, f64> {
    let changes: Vec<f64> = coarse
        .iter()
        .zip(fine)
        .map(|(a, b)| (a.value() - b.value()).abs())
        .collect();
    let worst = changes.iter().copied().fold(0.0, f64::max);
    if worst < CONVERGENCE_TOL {
        Ok(fine
            .iter()
            .zip(changes)
            .map(|(&fidelity, change)| ConvergedFidelity {
                fidelity,
                truncation,
                change,
            })
            .collect())
    } else {
        Err(worst)
    }
}

/// Oscillator echo at several times from one set of diagonalisations.
/// Recomputes at `2D` and accepts when every `|dF| < 1e-8`; otherwise tries
/// `4D` once more before giving up.
pub fn fock_opo_fidelities(
    params: &OpoParams,
    dim: usize,
    times: &[f64],
) -> Result<Vec<ConvergedFidelity>> {
    let at = |d: usize| -> Result<Vec<Fidelity>> {
        let o = FockOpoOracle::new(params, d)?;
        times.iter().map(|&t| o.fidelity(t)).collect()
    };
    let base = at(dim)?;
    let double = at(2 * dim)?;
    let worst = match accept(&base, &double, 2 * dim) {
        Ok(v) => return Ok(v),
        Err(w) => w,
    };
    let quad = at(4 * dim)?;
    accept(&double, &quad, 4 * dim).map_err(|w| Error::NonConvergence {
        what: "Fock truncation of the oscillator echo",
        achieved: w.min(worst),
        requested: CONVERGENCE_TOL,
    })
}

pub fn fock_opo_fidelity(params: &OpoParams, dim: usize) -> Result<ConvergedFidelity> {
    Ok(fock_opo_fidelities(params, dim, &[params.t])?[0])
}

/// Number states `|n_b>` of `b = mu a + i nu a^dag`, built as
/// `(b^dag)^n |0_b> / sqrt(n!)` on the truncated space.
#[derive(Debug, Clone)]
pub struct SqueezedFockBasis {
    states: Vec<StateVector>,
}

impl SqueezedFockBasis {
    pub fn new(mu: f64, nu: f64, dim: usize, n_max: usize) -> Result<Self> {
        check_mode_pair(mu, nu)?;
        let vacuum = squeezed_vacuum_raw(mu, nu, dim);
        check_truncation(&vacuum)?;
        let mut states = vec![StateVector::normalized(vacuum)?];
        for n in 0..n_max {
            let prev = states[n].amplitudes();
            // b^dag = mu a^dag - i nu a
            let mut next = DVector::<Complex64>::zeros(dim);
            for k in 0..dim {
                if k + 1 < dim {
                    next[k + 1] += prev[k] * (mu * ((k + 1) as f64).sqrt());
                }
                if k > 0 {
                    next[k - 1] += prev[k] * Complex64::new(0.0, -nu * (k as f64).sqrt());
                }
            }
            next.unscale_mut(((n + 1) as f64).sqrt());
            check_truncation(&next)?;
            states.push(StateVector::normalized(next)?);
        }
        Ok(SqueezedFockBasis { states })
    }

    pub fn from_bogoliubov(c: &BogoliubovCoefficients, dim: usize, n_max: usize) -> Result<Self> {
        Self::new(c.mu0, c.nu0, dim, n_max)
    }

    pub fn n_max(&self) -> usize {
        self.states.len() - 1
    }

    pub fn number_state(&self, n: usize) -> Option<&StateVector> {
        self.states.get(n)
    }

    /// `|<n_b|psi>|^2`.
    pub fn probability(&self, state: &StateVector, n: usize) -> Result<f64> {
        let basis = self.states.get(n).ok_or_else(|| {
            Error::invalid(format!("number state {n} beyond n_max = {}", self.n_max()))
        })?;
        Ok(basis.inner(state)?.norm_sqr())
    }
}

/// Rejects vectors with more than [`LEAKAGE_TOL`] of their weight in the top
/// tenth of the levels, where the hard cutoff distorts them.
fn check_truncation(v: &DVector<Complex64>) -> Result<()> {
    let dim = v.len();
    let edge = dim - dim / 10;
    let tail: f64 = v.iter().skip(edge).map(|z| z.norm_sqr()).sum::<f64>() / v.norm_squared();
    if tail > LEAKAGE_TOL {
        return Err(Error::NonConvergence {
            what: "squeezed number state does not fit in the truncation",
            achieved: tail,
            requested: LEAKAGE_TOL,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhotonDistribution {
    /// `P(n)` for `n = 0..=n_max`.
    pub probabilities: Vec<f64>,
    /// `1 - sum P(n)`.
    pub leakage: f64,
}

/// Photon statistics of `state` in the `b`-mode number basis. Fails when more
/// than [`LEAKAGE_TOL`] of the probability lies beyond the basis.
pub fn photon_number_distribution(
    state: &StateVector,
    basis: &SqueezedFockBasis,
) -> Result<PhotonDistribution> {
    let probabilities = (0..=basis.n_max())
        .map(|n| basis.probability(state, n))
        .collect::<Result<Vec<_>>>()?;
    let leakage = 1.0 - probabilities.iter().sum::<f64>();
    if leakage > LEAKAGE_TOL {
        return Err(Error::NonConvergence {
            what: "photon-number distribution (raise n_max or the truncation)",
            achieved: leakage,
            requested: LEAKAGE_TOL,
        });
    }
    Ok(PhotonDistribution {
        probabilities,
        leakage,
    })
}

/// `w (a^dag a + b^dag b) + lam (a + a^dag)(b + b^dag)` restricted to even
/// total photon number, with `dim` levels per mode.
fn dicke_even_sector(omega: f64, lam: f64, dim: usize) -> Result<DenseHermitian> {
    ensure_finite("omega", omega)?;
    ensure_finite("lambda", lam)?;
    let states: Vec<(usize, usize)> = (0..dim)
        .flat_map(|na| (0..dim).map(move |nb| (na, nb)))
        .filter(|(na, nb)| (na + nb) % 2 == 0)
        .collect();
    let mut slot = vec![usize::MAX; dim * dim];
    for (i, &(na, nb)) in states.iter().enumerate() {
        slot[na * dim + nb] = i;
    }
    let index = |na: usize, nb: usize| slot[na * dim + nb];
    let mut h = DMatrix::<f64>::zeros(states.len(), states.len());
    for (i, &(na, nb)) in states.iter().enumerate() {
        h[(i, i)] = omega * (na + nb) as f64;
        for (ma, xa) in [
            (na.wrapping_sub(1), (na as f64).sqrt()),
            (na + 1, ((na + 1) as f64).sqrt()),
        ] {
            if ma >= dim {
                continue;
            }
            for (mb, xb) in [
                (nb.wrapping_sub(1), (nb as f64).sqrt()),
                (nb + 1, ((nb + 1) as f64).sqrt()),
            ] {
                if mb >= dim {
                    continue;
                }
                h[(index(ma, mb), i)] += lam * xa * xb;
            }
        }
    }
    DenseHermitian::from_real(h)
}

#[derive(Debug, Clone)]
pub struct FockDickeOracle {
    dim: usize,
    echo: Echo,
}

impl FockDickeOracle {
    pub fn new(params: &DickeParams, dim: usize) -> Result<Self> {
        if !(2..=MAX_DICKE_TRUNCATION).contains(&dim) {
            return Err(Error::invalid(format!(
                "per-mode truncation must lie in 2..={MAX_DICKE_TRUNCATION}, got {dim}"
            )));
        }
        for (name, w) in [("omega0", params.omega0), ("omega1", params.omega1)] {
            if !(ensure_finite(name, w)? > 0.0) {
                return Err(Error::invalid(format!("{name} must be positive")));
            }
        }
        if !(params.g0().abs() < 1.0) {
            return Err(Error::invalid(format!(
                "H0 needs |g0| < 1, got {}",
                params.g0()
            )));
        }
        let h0 = dicke_even_sector(params.omega0, params.lambda0, dim)?.spectrum()?;
        let h1 = dicke_even_sector(params.omega1, params.lambda1, dim)?.spectrum()?;
        let echo = h1.echo(&h0.eigenstate(0))?;
        Ok(FockDickeOracle { dim, echo })
    }

    pub fn truncation(&self) -> usize {
        self.dim
    }

    pub fn fidelity(&self, t: f64) -> Result<Fidelity> {
        self.echo.fidelity(t)
    }
}

/// Truncation the Dicke result is checked against: `2D` where the dimension
/// cap allows it, otherwise the cap itself, or `D - 10` at the cap.
pub fn dicke_reference_truncation(dim: usize) -> usize {
    if 2 * dim <= MAX_DICKE_TRUNCATION {
        2 * dim
    } else if dim < MAX_DICKE_TRUNCATION {
        MAX_DICKE_TRUNCATION
    } else {
        dim - 10
    }
}

/// Two-mode echo at several times, accepted when the reference truncation
/// changes no value by more than `1e-8`. The result is the one at the larger
/// of the two truncations.
pub fn fock_dicke_fidelities(
    params: &DickeParams,
    dim: usize,
    times: &[f64],
) -> Result<Vec<ConvergedFidelity>> {
    let at = |d: usize| -> Result<Vec<Fidelity>> {
        let o = FockDickeOracle::new(params, d)?;
        times.iter().map(|&t| o.fidelity(t)).collect()
    };
    let reference = dicke_reference_truncation(dim);
    let (a, b) = (at(dim)?, at(reference)?);
    let (coarse, fine, used) = if reference > dim {
        (a, b, reference)
    } else {
        (b, a, dim)
    };
    accept(&coarse, &fine, used).map_err(|w| Error::NonConvergence {
        what: "Fock truncation of the two-mode echo",
        achieved: w,
        requested: CONVERGENCE_TOL,
    })
}

pub fn fock_dicke_fidelity(params: &DickeParams, dim: usize) -> Result<ConvergedFidelity> {
    Ok(fock_dicke_fidelities(params, dim, &[params.t])?[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bosonic::{dicke_fidelity, opo_fidelity_exact};
    use crate::oracle::dense::{evolve_dense, ground_state_dense};

    #[test]
    fn oscillator_vacuum() {
        let h = opo_hamiltonian_fock(1.0, 0.0, 50).unwrap();
        let gs = ground_state_dense(&h).unwrap();
        assert!(gs.energy.abs() < 1e-12);
        assert!((gs.state.amplitudes()[0].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn lab_frame_ground_state_is_the_squeezed_vacuum() {
        let g0 = 0.6;
        let c = bogoliubov(g0, 2.0).unwrap();
        let gs = ground_state_dense(&opo_hamiltonian_fock(1.0, g0 / 2.0, 80).unwrap()).unwrap();
        let sv = squeezed_vacuum(c.mu0, c.nu0, 80).unwrap();
        assert!((sv.overlap_sq(&gs.state).unwrap().value() - 1.0).abs() < 1e-10);
        // energy offset: w' / 2 - w / 2
        assert!((gs.energy - 0.5 * (c.omega_prime(1.0) - 1.0)).abs() < 1e-10);
    }

    #[test]
    fn pure_squeezer_vacuum_return() {
        // exp(lam t (a^dag^2 - a^2)) is a squeezer with r = 2 lam t, and
        // |<0|S(r)|0>|^2 = 1 / cosh r
        let h = opo_hamiltonian_fock(0.0, 0.25, 200).unwrap();
        let vac = StateVector::basis(200, 0).unwrap();
        for t in [0.5, 1.0, 2.0] {
            let out = evolve_dense(&vac, &h, t).unwrap();
            let f = vac.overlap_sq(&out).unwrap().value();
            let r: f64 = 2.0 * 0.25 * t;
            assert!((f - 1.0 / r.cosh()).abs() < 1e-10, "t {t}: {f}");
        }
    }

    #[test]
    fn even_sector_matches_full_lab_frame() {
        let p = OpoParams::from_criticality(1.0, 0.6, 1.25, 1.2);
        let oracle = FockOpoOracle::new(&p, 60).unwrap();
        let h0 = opo_hamiltonian_fock(p.omega0, p.lambda0, 60).unwrap();
        let h1 = opo_hamiltonian_fock(p.omega1, p.lambda1, 60).unwrap();
        let psi = ground_state_dense(&h0).unwrap().state;
        let full = psi
            .overlap_sq(&evolve_dense(&psi, &h1, p.t).unwrap())
            .unwrap()
            .value();
        assert!((oracle.fidelity(p.t).unwrap().value() - full).abs() < 1e-12);
        let lab = oracle.evolved_state(p.t).unwrap();
        let direct = evolve_dense(&psi, &h1, p.t).unwrap();
        assert!((lab.overlap_sq(&direct).unwrap().value() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn opo_oracle_matches_closed_form() {
        let p = OpoParams::from_criticality(1.0, 0.8, 1.25, 0.0);
        let times = [0.0, 0.5 / p.lambda1, 1.0 / p.lambda1];
        let got = fock_opo_fidelities(&p, 100, &times).unwrap();
        assert_eq!(got[0].fidelity.value(), 1.0);
        for (r, &t) in got.iter().zip(&times) {
            let exact = opo_fidelity_exact(&OpoParams { t, ..p }).unwrap().value();
            assert!((r.fidelity.value() - exact).abs() < 1e-6);
            assert!(r.change < CONVERGENCE_TOL);
        }
    }

    #[test]
    fn opo_oracle_preconditions() {
        let p = OpoParams::from_criticality(1.0, 0.8, 1.25, 1.0);
        assert!(FockOpoOracle::new(&p, 20).is_err());
        assert!(FockOpoOracle::new(&OpoParams::from_criticality(1.0, 1.2, 1.25, 1.0), 60).is_err());
    }

    #[test]
    fn photon_statistics() {
        let p = OpoParams::from_criticality(1.0, 0.6, 1.1, 0.0);
        let c = bogoliubov(0.6, 1.1).unwrap();
        let oracle = FockOpoOracle::new(&p, 400).unwrap();
        let basis = SqueezedFockBasis::from_bogoliubov(&c, 400, 80).unwrap();

        let start = oracle.evolved_state(0.0).unwrap();
        let d = photon_number_distribution(&start, &basis).unwrap();
        assert!((d.probabilities[0] - 1.0).abs() < 1e-10);

        let t = 1.5;
        let psi = oracle.evolved_state(t).unwrap();
        let d = photon_number_distribution(&psi, &basis).unwrap();
        assert!(d.leakage.abs() < LEAKAGE_TOL);
        let exact = opo_fidelity_exact(&OpoParams { t, ..p }).unwrap().value();
        assert!((d.probabilities[0] - exact).abs() < 1e-6);
        let odd: f64 = d.probabilities.iter().skip(1).step_by(2).sum();
        assert!(odd < 1e-10);
    }

    #[test]
    fn leakage_is_reported() {
        let p = OpoParams::from_criticality(1.0, 0.6, 1.25, 4.0);
        let c = bogoliubov(0.6, 1.25).unwrap();
        let oracle = FockOpoOracle::new(&p, 120).unwrap();
        let basis = SqueezedFockBasis::from_bogoliubov(&c, 120, 4).unwrap();
        assert!(photon_number_distribution(&oracle.evolved_state(p.t).unwrap(), &basis).is_err());
    }

    #[test]
    fn dicke_trivial_cases() {
        let p = DickeParams::from_criticality(1.0, 0.9, 1.1, 0.0);
        assert!(
            (FockDickeOracle::new(&p, 12)
                .unwrap()
                .fidelity(0.0)
                .unwrap()
                .value()
                - 1.0)
                .abs()
                < 1e-12
        );
        let shifted = DickeParams {
            omega0: 1.0,
            omega1: 1.7,
            lambda0: 0.0,
            lambda1: 0.0,
            t: 3.0,
        };
        let o = FockDickeOracle::new(&shifted, 10).unwrap();
        assert!((o.fidelity(3.0).unwrap().value() - 1.0).abs() < 1e-12);
        assert!(FockDickeOracle::new(&p, 41).is_err());
        assert_eq!(dicke_reference_truncation(16), 32);
        assert_eq!(dicke_reference_truncation(30), 40);
        assert_eq!(dicke_reference_truncation(40), 30);
    }

    #[test]
    fn dicke_oracle_matches_engine_at_moderate_coupling() {
        let p = DickeParams::from_criticality(1.0, 0.5, 0.7, 0.0);
        let times = [0.5, 1.5];
        let got = fock_dicke_fidelities(&p, 20, &times).unwrap();
        for (r, &t) in got.iter().zip(&times) {
            let engine = dicke_fidelity(&p.with_time(t)).unwrap().fidelity.value();
            assert!((r.fidelity.value() - engine).abs() < 1e-8);
        }
    }
}
