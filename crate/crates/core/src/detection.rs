//! Binary quantum detection theory for pure states.
//!
//! Two hypotheses H0 and H1 prepare pure states whose squared overlap is the
//! fidelity `F`. Everything here is a closed-form function of `F` and the
//! priors, plus a finite-difference estimate of the quantum Fisher
//! information for a one-parameter fidelity family.

use crate::error::{ensure_finite, Error, Result};

/// Tolerance on `p0 + p1 = 1`.
pub const PRIOR_SUM_TOL: f64 = 1e-12;
/// Values of `1 - 4 p0 p1 F` down to this negative level are clamped to zero.
pub const HELSTROM_CLAMP_TOL: f64 = 1e-12;
/// Default step for the Fisher-information second difference.
pub const DEFAULT_QFI_STEP: f64 = 1e-3;

/// Squared overlap `|<psi0|psi1>|^2` between two pure states, in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Fidelity(f64);

impl Fidelity {
    pub const ONE: Fidelity = Fidelity(1.0);
    pub const ZERO: Fidelity = Fidelity(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::invalid(format!(
                "fidelity must lie in [0, 1], got {value}"
            )));
        }
        Ok(Fidelity(value))
    }

    /// Clamps values that left `[0, 1]` through rounding. NaN is rejected.
    pub fn clamped(value: f64) -> Result<Self> {
        if value.is_nan() {
            return Err(Error::NonFinite("fidelity is NaN".into()));
        }
        Ok(Fidelity(value.clamp(0.0, 1.0)))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `-ln F`, infinite for `F = 0`.
    pub fn neg_log(self) -> f64 {
        -self.0.ln()
    }
}

/// Prior probabilities of the two hypotheses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinaryHypothesis {
    p0: f64,
    p1: f64,
}

impl BinaryHypothesis {
    pub fn new(p0: f64, p1: f64) -> Result<Self> {
        ensure_finite("p0", p0)?;
        ensure_finite("p1", p1)?;
        if p0 < 0.0 || p1 < 0.0 {
            return Err(Error::invalid(format!(
                "priors must be non-negative, got ({p0}, {p1})"
            )));
        }
        if (p0 + p1 - 1.0).abs() > PRIOR_SUM_TOL {
            return Err(Error::invalid(format!(
                "priors must sum to 1, got {}",
                p0 + p1
            )));
        }
        Ok(BinaryHypothesis { p0, p1 })
    }

    /// Priors `(p0, 1 - p0)`.
    pub fn from_p0(p0: f64) -> Result<Self> {
        Self::new(p0, 1.0 - p0)
    }

    pub fn equal() -> Self {
        BinaryHypothesis { p0: 0.5, p1: 0.5 }
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }
}

/// Minimum average error probability over all measurements (Helstrom bound).
///
/// Evaluated as `2 p0 p1 F / (1 + sqrt(1 - 4 p0 p1 F))`, which equals
/// `(1 - sqrt(1 - 4 p0 p1 F)) / 2` without the cancellation at small `F`.
pub fn helstrom_min_error(fidelity: Fidelity, prior: &BinaryHypothesis) -> Result<f64> {
    let x = 4.0 * prior.p0 * prior.p1 * fidelity.0;
    let mut arg = 1.0 - x;
    if arg < -HELSTROM_CLAMP_TOL {
        return Err(Error::invalid(format!("1 - 4 p0 p1 F = {arg} is negative")));
    }
    arg = arg.clamp(0.0, 1.0);
    Ok(0.5 * x / (1.0 + arg.sqrt()))
}

/// Error exponent `-ln Pe` of the optimal measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErrorExponent {
    Finite(f64),
    /// The states are orthogonal (or one prior vanishes): `Pe = 0`.
    PerfectDetection,
}

impl ErrorExponent {
    /// The exponent as a float, `+inf` for perfect detection.
    pub fn value(self) -> f64 {
        match self {
            ErrorExponent::Finite(v) => v,
            ErrorExponent::PerfectDetection => f64::INFINITY,
        }
    }
}

/// `-ln` of [`helstrom_min_error`]. For `F << 1` this tends to
/// `-ln p0 - ln p1 - ln F`.
pub fn optimal_error_exponent(
    fidelity: Fidelity,
    prior: &BinaryHypothesis,
) -> Result<ErrorExponent> {
    let pe = helstrom_min_error(fidelity, prior)?;
    if pe == 0.0 {
        Ok(ErrorExponent::PerfectDetection)
    } else {
        Ok(ErrorExponent::Finite(-pe.ln()))
    }
}

/// Parameters of the product-state baseline: `N` copies of a probe whose
/// generator `q` has Gaussian statistics with variance `var_q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardModelParams {
    pub n_copies: u64,
    pub var_q: f64,
    pub delta: f64,
    pub t: f64,
}

impl StandardModelParams {
    pub fn validate(&self) -> Result<()> {
        if self.n_copies == 0 {
            return Err(Error::invalid("n_copies must be at least 1"));
        }
        ensure_finite("delta", self.delta)?;
        if !(ensure_finite("var_q", self.var_q)? >= 0.0) {
            return Err(Error::invalid("var_q must be non-negative"));
        }
        if !(ensure_finite("t", self.t)? >= 0.0) {
            return Err(Error::invalid("t must be non-negative"));
        }
        Ok(())
    }
}

/// Baseline fidelity `exp(-N var_q delta^2 t^2)`.
pub fn standard_fidelity(params: &StandardModelParams) -> Result<Fidelity> {
    params.validate()?;
    let exponent = params.n_copies as f64 * params.var_q * params.delta.powi(2) * params.t.powi(2);
    Fidelity::new((-exponent).exp())
}

/// Perturbation that brings the baseline fidelity down to `target`:
/// `sqrt(-ln F') / (sqrt(N) dq t)`.
pub fn standard_detectable_perturbation(
    target: Fidelity,
    n_copies: u64,
    dq: f64,
    t: f64,
) -> Result<f64> {
    if !(target.0 > 0.0 && target.0 < 1.0) {
        return Err(Error::invalid(format!(
            "target fidelity must lie in (0, 1), got {}",
            target.0
        )));
    }
    if n_copies == 0 {
        return Err(Error::invalid("n_copies must be at least 1"));
    }
    if !(ensure_finite("dq", dq)? > 0.0) || !(ensure_finite("t", t)? > 0.0) {
        return Err(Error::invalid(
            "no perturbation is detectable with dq = 0 or t = 0",
        ));
    }
    Ok((-target.0.ln()).sqrt() / ((n_copies as f64).sqrt() * dq * t))
}

/// Fidelity `F'` at which the Helstrom error equals `target_error`.
///
/// Closed-form inverse: `F' = Pe (1 - Pe) / (p0 p1)`.
pub fn fidelity_for_target_error(target_error: f64, prior: &BinaryHypothesis) -> Result<Fidelity> {
    ensure_finite("target error", target_error)?;
    let reachable = prior.p0.min(prior.p1);
    if target_error < 0.0 || target_error > reachable + HELSTROM_CLAMP_TOL {
        return Err(Error::invalid(format!(
            "target error {target_error} is outside [0, min(p0, p1)] = [0, {reachable}]"
        )));
    }
    if target_error == 0.0 {
        return Ok(Fidelity::ZERO);
    }
    Fidelity::clamped(target_error * (1.0 - target_error) / (prior.p0 * prior.p1))
}

/// Quantum Fisher information `G = -2 d^2F/d delta^2` at `delta = 0`.
///
/// Central second differences at steps `h` and `h/2`, combined by one
/// Richardson step so the `O(h^2)` truncation term cancels.
pub fn quantum_fisher_information<F>(fidelity_fn: F, step: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::invalid(format!("step must be positive, got {step}")));
    }
    let f0 = fidelity_fn(0.0);
    if !f0.is_finite() {
        return Err(Error::NonFinite(format!("F(0) = {f0}")));
    }
    if (f0 - 1.0).abs() > 1e-9 {
        return Err(Error::invalid(format!(
            "F(0) = {f0}; the family must reduce to identical states at zero perturbation"
        )));
    }
    let second_difference = |h: f64| -> Result<f64> {
        let plus = fidelity_fn(h);
        let minus = fidelity_fn(-h);
        if !plus.is_finite() || !minus.is_finite() {
            return Err(Error::NonFinite(format!("F(+-{h}) = ({plus}, {minus})")));
        }
        Ok(-2.0 * (plus - 2.0 * f0 + minus) / (h * h))
    };
    let coarse = second_difference(step)?;
    let fine = second_difference(0.5 * step)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Fisher matrix `G_jk = -2 d^2F/(d delta_j d delta_k)` for a vector
/// perturbation, from central (mixed) second differences.
pub fn quantum_fisher_matrix<F>(fidelity_fn: F, dim: usize, step: f64) -> Result<Vec<Vec<f64>>>
where
    F: Fn(&[f64]) -> f64,
{
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::invalid(format!("step must be positive, got {step}")));
    }
    let origin = vec![0.0; dim];
    let f0 = fidelity_fn(&origin);
    if (f0 - 1.0).abs() > 1e-9 || !f0.is_finite() {
        return Err(Error::invalid(format!("F(0) = {f0}, expected 1")));
    }
    let eval = |shifts: &[(usize, f64)]| {
        let mut x = origin.clone();
        for &(i, s) in shifts {
            x[i] += s;
        }
        fidelity_fn(&x)
    };
    let h = step;
    let mut g = vec![vec![0.0; dim]; dim];
    #[allow(clippy::needless_range_loop)]
    for j in 0..dim {
        g[j][j] = -2.0 * (eval(&[(j, h)]) - 2.0 * f0 + eval(&[(j, -h)])) / (h * h);
        for k in 0..j {
            let mixed =
                eval(&[(j, h), (k, h)]) - eval(&[(j, h), (k, -h)]) - eval(&[(j, -h), (k, h)])
                    + eval(&[(j, -h), (k, -h)]);
            let v = -2.0 * mixed / (4.0 * h * h);
            g[j][k] = v;
            g[k][j] = v;
        }
    }
    if g.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("Fisher matrix entry".into()));
    }
    Ok(g)
}
