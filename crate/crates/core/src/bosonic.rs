//! Bosonic transition-edge models: the degenerate parametric oscillator
//! `H = w a^dag a + i lam (a^dag^2 - a^2)` and the normal-phase Dicke model
//! `H = w (a^dag a + b^dag b) + lam (a^dag + a)(b^dag + b)`, both with
//! criticality parameter `g = 2 lam / w`.
//!
//! The detector is biased below threshold (`g0 < 1`) and the perturbation
//! pushes it above (`g1 > 1`). The probe starts in the ground state of `H0`.
//! The pump is treated as undepleted, so the late-time saturation of the
//! fidelity is not captured by anything here.

use nalgebra::DMatrix;

use crate::detection::{BinaryHypothesis, ErrorExponent, Fidelity};
use crate::error::{ensure_finite, Error, Result};
use crate::gaussian::{evolve, ground_state, pure_overlap, QuadraticHamiltonian};

/// Per-mode decay `2 lam1^2 delta t^2` above which the multimode expansion is
/// flagged as outside its validity window.
pub const MULTIMODE_VALIDITY: f64 = 0.05;

/// `-ln sech(x) = ln cosh(x)` without overflow.
fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// `ln(1 + e^y)` without overflow.
fn softplus(y: f64) -> f64 {
    y.max(0.0) + (-y.abs()).exp().ln_1p()
}

/// `ln sinh(x)` for `x > 0`.
fn ln_sinh(x: f64) -> f64 {
    if x < 1.0 {
        x.sinh().ln()
    } else {
        x + (-(-2.0 * x).exp()).ln_1p() - std::f64::consts::LN_2
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpoParams {
    pub omega0: f64,
    pub omega1: f64,
    pub lambda0: f64,
    pub lambda1: f64,
    pub t: f64,
}

impl OpoParams {
    /// Equal detunings `omega` under both hypotheses, pumps set from `g0`, `g1`.
    pub fn from_criticality(omega: f64, g0: f64, g1: f64, t: f64) -> Self {
        OpoParams {
            omega0: omega,
            omega1: omega,
            lambda0: 0.5 * g0 * omega,
            lambda1: 0.5 * g1 * omega,
            t,
        }
    }

    pub fn g0(&self) -> f64 {
        2.0 * self.lambda0 / self.omega0
    }

    pub fn g1(&self) -> f64 {
        2.0 * self.lambda1 / self.omega1
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("omega0", self.omega0), ("omega1", self.omega1)] {
            if !(ensure_finite(name, v)? > 0.0) {
                return Err(Error::invalid(format!("{name} must be positive")));
            }
        }
        ensure_finite("lambda0", self.lambda0)?;
        ensure_finite("lambda1", self.lambda1)?;
        if !(ensure_finite("t", self.t)? >= 0.0) {
            return Err(Error::invalid("t must be non-negative"));
        }
        Ok(())
    }
}

/// First-order criticality shift from a detuning change `d_omega` at fixed
/// pump: `delta ~ -2 lam0 d_omega / omega0^2`.
pub fn perturbation_from_detuning_shift(lambda0: f64, omega0: f64, d_omega: f64) -> f64 {
    -2.0 * lambda0 * d_omega / (omega0 * omega0)
}

/// Bogoliubov coefficients for `b0 = mu0 a + i nu0 a^dag` (diagonalises H0)
/// and `b1 = mu1 a + i nu1 a^dag = mu' b0 + i nu' b0^dag` (brings H1 to a
/// pure squeezer `i lam' (b1^dag^2 - b1^2)`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BogoliubovCoefficients {
    pub nu0: f64,
    pub mu0: f64,
    pub nu1: f64,
    pub mu1: f64,
    pub mu_prime: f64,
    pub nu_prime: f64,
    /// `sqrt(1 - g0^2)`, so that `omega' = omega0 * omega_scale`.
    pub omega_scale: f64,
    /// `sqrt(1 - g1^-2)`, so that `lambda' = lambda1 * lambda_scale`.
    pub lambda_scale: f64,
}

impl BogoliubovCoefficients {
    /// Normal-mode frequency of H0.
    pub fn omega_prime(&self, omega0: f64) -> f64 {
        omega0 * self.omega_scale
    }

    /// Effective squeezing rate of H1.
    pub fn lambda_prime(&self, lambda1: f64) -> f64 {
        lambda1 * self.lambda_scale
    }
}

pub fn bogoliubov(g0: f64, g1: f64) -> Result<BogoliubovCoefficients> {
    ensure_finite("g0", g0)?;
    ensure_finite("g1", g1)?;
    if !(0.0..1.0).contains(&g0) || g1 <= 1.0 {
        return Err(Error::invalid(format!(
            "need 0 <= g0 < 1 < g1 (below/above threshold), got g0 = {g0}, g1 = {g1}"
        )));
    }
    let omega_scale = (1.0 - g0 * g0).sqrt();
    let lambda_scale = (1.0 - 1.0 / (g1 * g1)).sqrt();
    let nu0 = std::f64::consts::FRAC_1_SQRT_2 * (1.0 / omega_scale - 1.0).sqrt();
    let mu0 = (1.0 + nu0 * nu0).sqrt();
    let nu1 = std::f64::consts::FRAC_1_SQRT_2 * (1.0 / lambda_scale - 1.0).sqrt();
    let mu1 = (1.0 + nu1 * nu1).sqrt();
    Ok(BogoliubovCoefficients {
        nu0,
        mu0,
        nu1,
        mu1,
        mu_prime: mu1 * mu0 - nu1 * nu0,
        nu_prime: nu1 * mu0 - mu1 * nu0,
        omega_scale,
        lambda_scale,
    })
}

/// `-ln F` for [`opo_fidelity_exact`], finite even when `F` underflows.
pub fn opo_neg_log_fidelity_exact(params: &OpoParams) -> Result<f64> {
    params.validate()?;
    let c = bogoliubov(params.g0(), params.g1())?;
    let x = 2.0 * c.lambda_prime(params.lambda1) * params.t;
    if x == 0.0 {
        return Ok(0.0);
    }
    let amplitude = 1.0 + 2.0 * c.nu_prime * c.nu_prime;
    Ok(0.5 * softplus(2.0 * (amplitude.ln() + ln_sinh(x.abs()))))
}

/// `F = [1 + (1 + 2 nu'^2)^2 sinh^2(2 lam' t)]^(-1/2)`.
pub fn opo_fidelity_exact(params: &OpoParams) -> Result<Fidelity> {
    Fidelity::clamped((-opo_neg_log_fidelity_exact(params)?).exp())
}

/// The same fidelity from the Gaussian engine: ground state of H0, evolved
/// under H1, overlapped with itself.
pub fn opo_fidelity_engine(params: &OpoParams) -> Result<Fidelity> {
    params.validate()?;
    let h0 = build_opo_hamiltonian(params.omega0, params.lambda0)?;
    let h1 = build_opo_hamiltonian(params.omega1, params.lambda1)?;
    let start = ground_state(&h0)?;
    pure_overlap(&start, &evolve(&start, &h1, params.t)?)
}

/// `-ln sech(2 lam1 sqrt(delta) t)`.
pub fn opo_neg_log_fidelity_worst_case(lambda1: f64, delta: f64, t: f64) -> Result<f64> {
    ensure_finite("lambda1", lambda1)?;
    ensure_finite("t", t)?;
    if !(ensure_finite("delta", delta)? > 0.0) {
        return Err(Error::invalid(format!(
            "delta must be positive, got {delta}"
        )));
    }
    Ok(ln_cosh(2.0 * lambda1 * delta.sqrt() * t))
}

/// Worst-case fidelity `sech(2 lam1 sqrt(delta) t)`, reached when
/// `g0 = 1 - delta/2` and `g1 = 1 + delta/2` so that `nu' ~ 0`.
pub fn opo_fidelity_worst_case(lambda1: f64, delta: f64, t: f64) -> Result<Fidelity> {
    Fidelity::clamped((-opo_neg_log_fidelity_worst_case(lambda1, delta, t)?).exp())
}

/// `delta' ~ [-ln(F'/2)]^2 / (4 lam1^2 t^2)`; falls as `1/t^2`.
pub fn opo_detectable_perturbation(target: Fidelity, lambda1: f64, t: f64) -> Result<f64> {
    let f = target.value();
    if !(f > 0.0 && f < 1.0) {
        return Err(Error::invalid(format!(
            "target fidelity must lie in (0, 1), got {f}"
        )));
    }
    if !(ensure_finite("lambda1", lambda1)? > 0.0) || !(ensure_finite("t", t)? > 0.0) {
        return Err(Error::invalid("need lambda1 > 0 and t > 0"));
    }
    Ok((-(f / 2.0).ln()).powi(2) / (4.0 * lambda1 * lambda1 * t * t))
}

/// N independent oscillators, each decaying only slightly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultimodeResult {
    /// `exp(-2 N lam1^2 delta t^2)`.
    pub fidelity: f64,
    pub neg_log_fidelity: f64,
    /// `-ln F' / (2 N lam1^2 t^2)`; scales as `1/N`.
    pub detectable_perturbation: f64,
    /// Unexpanded `sech(2 lam1 sqrt(delta) t)^N`.
    pub product_fidelity: f64,
    pub product_neg_log_fidelity: f64,
    /// False when the per-mode decay exceeds [`MULTIMODE_VALIDITY`].
    pub within_validity: bool,
}

pub fn opo_multimode(
    n_modes: u64,
    lambda1: f64,
    delta: f64,
    t: f64,
    target: Fidelity,
) -> Result<MultimodeResult> {
    if n_modes == 0 {
        return Err(Error::invalid("need at least one mode"));
    }
    let f_target = target.value();
    if !(f_target > 0.0 && f_target < 1.0) {
        return Err(Error::invalid(format!(
            "target fidelity must lie in (0, 1), got {f_target}"
        )));
    }
    if !(ensure_finite("lambda1", lambda1)? > 0.0) || !(ensure_finite("t", t)? > 0.0) {
        return Err(Error::invalid("need lambda1 > 0 and t > 0"));
    }
    let n = n_modes as f64;
    let per_mode = 2.0 * lambda1 * lambda1 * delta * t * t;
    let neg_log = n * per_mode;
    let product_neg_log = n * opo_neg_log_fidelity_worst_case(lambda1, delta, t)?;
    Ok(MultimodeResult {
        fidelity: (-neg_log).exp(),
        neg_log_fidelity: neg_log,
        detectable_perturbation: -f_target.ln() / (2.0 * n * lambda1 * lambda1 * t * t),
        product_fidelity: (-product_neg_log).exp(),
        product_neg_log_fidelity: product_neg_log,
        within_validity: per_mode <= MULTIMODE_VALIDITY,
    })
}

/// Photon counting in the `b0` mode: decide H0 on zero counts, H1 otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KennedyReceiver {
    /// False alarm probability; H0 never produces a count.
    pub p10: f64,
    /// Miss probability, equal to the fidelity.
    pub p01: f64,
    pub error_probability: f64,
    /// `-ln p1 - ln F`.
    pub error_exponent: ErrorExponent,
}

impl KennedyReceiver {
    /// Asymptotic optimal exponent `-ln p0 - ln p1 - ln F`; exceeds
    /// [`Self::error_exponent`] by exactly `-ln p0`.
    pub fn asymptotic_optimal_exponent(&self, prior: &BinaryHypothesis) -> f64 {
        self.error_exponent.value() - prior.p0().ln()
    }
}

pub fn kennedy_receiver(params: &OpoParams, prior: &BinaryHypothesis) -> Result<KennedyReceiver> {
    let neg_log_f = opo_neg_log_fidelity_exact(params)?;
    let f = (-neg_log_f).exp();
    let pe = f * prior.p1();
    let error_exponent = if prior.p1() == 0.0 {
        ErrorExponent::PerfectDetection
    } else {
        ErrorExponent::Finite(-prior.p1().ln() + neg_log_f)
    };
    Ok(KennedyReceiver {
        p10: 0.0,
        p01: f,
        error_probability: pe,
        error_exponent,
    })
}

/// `M = [[w, 2 lam], [2 lam, w]]`, offset `-w/2` from `a^dag a = (q^2 + p^2 - 1)/2`.
pub fn build_opo_hamiltonian(omega: f64, lam: f64) -> Result<QuadraticHamiltonian> {
    if !(ensure_finite("omega", omega)? > 0.0) {
        return Err(Error::invalid("omega must be positive"));
    }
    ensure_finite("lambda", lam)?;
    let m = DMatrix::from_row_slice(2, 2, &[omega, 2.0 * lam, 2.0 * lam, omega]);
    QuadraticHamiltonian::new(m, -0.5 * omega)
}

/// Two-mode form over `(q_a, p_a, q_b, p_b)`; the coupling is `2 lam q_a q_b`.
///
/// Normal-mode frequencies are `w sqrt(1 +- g)`.
pub fn build_dicke_hamiltonian(omega: f64, lam: f64) -> Result<QuadraticHamiltonian> {
    if !(ensure_finite("omega", omega)? > 0.0) {
        return Err(Error::invalid("omega must be positive"));
    }
    ensure_finite("lambda", lam)?;
    let mut m = DMatrix::<f64>::identity(4, 4) * omega;
    m[(0, 2)] = 2.0 * lam;
    m[(2, 0)] = 2.0 * lam;
    QuadraticHamiltonian::new(m, -omega)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DickeParams {
    pub omega0: f64,
    pub omega1: f64,
    pub lambda0: f64,
    pub lambda1: f64,
    pub t: f64,
}

impl DickeParams {
    pub fn from_criticality(omega: f64, g0: f64, g1: f64, t: f64) -> Self {
        DickeParams {
            omega0: omega,
            omega1: omega,
            lambda0: 0.5 * g0 * omega,
            lambda1: 0.5 * g1 * omega,
            t,
        }
    }

    pub fn g0(&self) -> f64 {
        2.0 * self.lambda0 / self.omega0
    }

    pub fn g1(&self) -> f64 {
        2.0 * self.lambda1 / self.omega1
    }

    pub fn with_time(self, t: f64) -> Self {
        DickeParams { t, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DickeFidelity {
    pub fidelity: Fidelity,
    /// `F cosh(w1 sqrt(delta) t)` with `delta = g1 - g0`; `None` when `delta <= 0`.
    pub envelope_factor: Option<f64>,
    /// Growth rate of the unstable normal mode of H1 (zero if H1 is stable).
    /// For equal frequencies this is `w1 sqrt(g1 - 1)`.
    pub unstable_rate: f64,
}

pub fn dicke_fidelity(params: &DickeParams) -> Result<DickeFidelity> {
    if !(ensure_finite("t", params.t)? >= 0.0) {
        return Err(Error::invalid("t must be non-negative"));
    }
    let h0 = build_dicke_hamiltonian(params.omega0, params.lambda0)?;
    let h1 = build_dicke_hamiltonian(params.omega1, params.lambda1)?;
    let start = ground_state(&h0)?;
    let fidelity = pure_overlap(&start, &evolve(&start, &h1, params.t)?)?;
    let delta = params.g1() - params.g0();
    let envelope_factor =
        (delta > 0.0).then(|| fidelity.value() * (params.omega1 * delta.sqrt() * params.t).cosh());
    Ok(DickeFidelity {
        fidelity,
        envelope_factor,
        unstable_rate: h1.max_growth_rate(),
    })
}
