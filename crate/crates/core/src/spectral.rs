//! Heterodyne spectrum of a damped parametric oscillator and the Fisher
//! information it carries about the resonance frequency `omega_m`.
//!
//! Frequencies `Omega` are measured in units of `2|lam|`. With
//! `Gamma = gamma / (2|lam|)`, `g = 2|lam| / omega_m` and `u = g^-2 - 1`, the
//! idler gain is `V = Gamma^2 / D` where
//! `D = [Omega^2 - (u - Gamma^2/4)]^2 + u Gamma^2`. Threshold sits at
//! `g = (1 - Gamma^2/4)^(-1/2)`, i.e. `u = -Gamma^2/4`; for `Gamma >= 2` the
//! damped oscillator never reaches it.
//!
//! "Normalized" Fisher information means `G gamma^3 / (omega_m^2 t)`, which
//! depends on `g` and `Gamma` only.

use std::f64::consts::PI;

use crate::error::{ensure_finite, Error, Result};
use crate::exec::{map_ordered, Execution};
use crate::quadrature::{integrate_half_line, QuadOptions};

/// Relative distance from threshold treated as "at threshold".
pub const THRESHOLD_TOL: f64 = 1e-12;

/// Default upper end of a sweep, as a fraction of the threshold `g`.
pub const SWEEP_CAP: f64 = 0.9999;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParams {
    pub omega_m: f64,
    pub lam: f64,
    pub gamma: f64,
    pub s_in: f64,
    pub s_prime: f64,
    pub t: f64,
}

impl SpectralParams {
    /// `S_in = S' = 1/2`.
    pub fn quantum_limited(omega_m: f64, lam: f64, gamma: f64, t: f64) -> Self {
        SpectralParams {
            omega_m,
            lam,
            gamma,
            s_in: 0.5,
            s_prime: 0.5,
            t,
        }
    }

    pub fn gamma_norm(&self) -> f64 {
        self.gamma / (2.0 * self.lam.abs())
    }

    pub fn g(&self) -> f64 {
        2.0 * self.lam.abs() / self.omega_m
    }

    pub fn is_quantum_limited(&self) -> bool {
        self.s_in == 0.5 && self.s_prime == 0.5
    }

    pub fn validate(&self) -> Result<()> {
        if !(ensure_finite("omega_m", self.omega_m)? > 0.0) {
            return Err(Error::invalid("omega_m must be positive"));
        }
        if ensure_finite("lam", self.lam)? == 0.0 {
            return Err(Error::invalid("lam must be non-zero"));
        }
        if !(ensure_finite("gamma", self.gamma)? > 0.0) {
            return Err(Error::invalid("gamma must be positive"));
        }
        if !(ensure_finite("t", self.t)? > 0.0) {
            return Err(Error::invalid("t must be positive"));
        }
        if !(ensure_finite("s_in", self.s_in)? >= 0.0)
            || !(ensure_finite("s_prime", self.s_prime)? >= 0.0)
        {
            return Err(Error::invalid("noise powers must be non-negative"));
        }
        Ok(())
    }
}

/// Threshold criticality `(1 - Gamma^2/4)^(-1/2)`; infinite for `Gamma >= 2`.
pub fn threshold_g(gamma_norm: f64) -> f64 {
    let s = 1.0 - 0.25 * gamma_norm * gamma_norm;
    if s > 0.0 {
        1.0 / s.sqrt()
    } else {
        f64::INFINITY
    }
}

fn check_gamma(gamma_norm: f64) -> Result<()> {
    if !(ensure_finite("Gamma", gamma_norm)? > 0.0) {
        return Err(Error::invalid(format!(
            "Gamma must be positive, got {gamma_norm}"
        )));
    }
    Ok(())
}

fn check_below_threshold(g: f64, gamma_norm: f64) -> Result<()> {
    check_gamma(gamma_norm)?;
    if !(ensure_finite("g", g)? > 0.0) {
        return Err(Error::invalid(format!("g must be positive, got {g}")));
    }
    let g_th = threshold_g(gamma_norm);
    if g >= g_th {
        return Err(Error::invalid(format!(
            "g = {g} is at or above threshold {g_th}; the spectral analysis does not apply"
        )));
    }
    Ok(())
}

fn denominator(omega: f64, u: f64, gamma_norm: f64) -> f64 {
    let g2 = gamma_norm * gamma_norm;
    let a = omega * omega - (u - 0.25 * g2);
    a * a + u * g2
}

/// `V(Omega)`; [`Error::Divergent`] where the denominator is not positive.
pub fn idler_gain(omega: f64, g: f64, gamma_norm: f64) -> Result<f64> {
    let u = 1.0 / (g * g) - 1.0;
    let d = denominator(omega, u, gamma_norm);
    if !(d > 0.0) {
        return Err(Error::Divergent(format!(
            "idler gain at Omega = {omega}, g = {g}, Gamma = {gamma_norm}"
        )));
    }
    Ok(gamma_norm * gamma_norm / d)
}

/// `dV/dg = -4 Gamma^2 [Omega^2 - (u + Gamma^2/4)] / (g^3 D^2)`.
pub fn idler_gain_derivative(omega: f64, g: f64, gamma_norm: f64) -> Result<f64> {
    let u = 1.0 / (g * g) - 1.0;
    let d = denominator(omega, u, gamma_norm);
    if !(d > 0.0) {
        return Err(Error::Divergent(format!(
            "idler gain derivative at Omega = {omega}, g = {g}"
        )));
    }
    let g2 = gamma_norm * gamma_norm;
    Ok(-4.0 * g2 * (omega * omega - u - 0.25 * g2) / (g * g * g * d * d))
}

/// `S = (1 + 2V) S_in + S'`.
pub fn output_spectrum(omega: f64, params: &SpectralParams) -> Result<f64> {
    params.validate()?;
    let v = idler_gain(omega, params.g(), params.gamma_norm())?;
    Ok((1.0 + 2.0 * v) * params.s_in + params.s_prime)
}

/// Location of the spectral peak, `sqrt(u - Gamma^2/4)`, when real.
pub fn peak_frequency(g: f64, gamma_norm: f64) -> Option<f64> {
    let a = 1.0 / (g * g) - 1.0 - 0.25 * gamma_norm * gamma_norm;
    (a > 0.0).then(|| a.sqrt())
}

/// Peak positions and their half-widths, plus one point at the overall scale.
fn breakpoints(gs: &[f64], gamma_norm: f64) -> Vec<f64> {
    let mut points = vec![gamma_norm.max(1.0)];
    for &g in gs {
        let u = 1.0 / (g * g) - 1.0;
        match peak_frequency(g, gamma_norm) {
            Some(r) => {
                let w = (u.max(0.0)).sqrt() * gamma_norm / (2.0 * r);
                points.extend([r, r + w, r - w]);
            }
            None => points.push((u + 0.25 * gamma_norm * gamma_norm).abs() / gamma_norm),
        }
    }
    points.retain(|p| p.is_finite() && *p > 0.0);
    points
}

/// `int_{-inf}^{inf} f(Omega) dOmega / 2pi` for even `f`.
fn spectral_integral<F>(f: F, points: &[f64], opts: &QuadOptions) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let r = integrate_half_line(f, points, opts)?;
    Ok(r.value / PI)
}

/// `ln cosh(x/2) = ln[(1 + e^x) / (2 e^(x/2))]`, accurate for small `x`.
fn ln_cosh_half(x: f64) -> f64 {
    let a = x.abs();
    if a < 1.0 {
        let s = (0.25 * a).sinh();
        (2.0 * s * s).ln_1p()
    } else {
        0.5 * a + (-a).exp().ln_1p() - std::f64::consts::LN_2
    }
}

/// Bhattacharyya distance between quantum-limited spectra at `g` and `g_prime`.
pub fn bhattacharyya_distance(
    g: f64,
    g_prime: f64,
    gamma_norm: f64,
    lam: f64,
    t: f64,
) -> Result<f64> {
    bhattacharyya_distance_with_noise(
        g,
        g_prime,
        gamma_norm,
        lam,
        t,
        0.5,
        0.5,
        &QuadOptions::default(),
    )
}

/// `B = 2|lam| t int dOmega/2pi ln[(S + S') / (2 sqrt(S S'))]`.
#[allow(clippy::too_many_arguments)]
pub fn bhattacharyya_distance_with_noise(
    g: f64,
    g_prime: f64,
    gamma_norm: f64,
    lam: f64,
    t: f64,
    s_in: f64,
    s_prime: f64,
    opts: &QuadOptions,
) -> Result<f64> {
    check_below_threshold(g, gamma_norm)?;
    check_below_threshold(g_prime, gamma_norm)?;
    ensure_finite("lam", lam)?;
    ensure_finite("t", t)?;
    if !(s_in >= 0.0 && s_prime >= 0.0 && s_in + s_prime > 0.0) {
        return Err(Error::invalid(
            "noise powers must be non-negative and not both zero",
        ));
    }
    if g == g_prime {
        return Ok(0.0);
    }
    let (ua, ub) = (1.0 / (g * g) - 1.0, 1.0 / (g_prime * g_prime) - 1.0);
    let g2 = gamma_norm * gamma_norm;
    let integrand = |w: f64| {
        let sa = (1.0 + 2.0 * g2 / denominator(w, ua, gamma_norm)) * s_in + s_prime;
        let sb = (1.0 + 2.0 * g2 / denominator(w, ub, gamma_norm)) * s_in + s_prime;
        ln_cosh_half((sa / sb).ln())
    };
    let integral = spectral_integral(integrand, &breakpoints(&[g, g_prime], gamma_norm), opts)?;
    Ok(2.0 * lam.abs() * t * integral)
}

/// Normalized Fisher information below threshold,
/// `g^6 Gamma^3 int dOmega/2pi (dV/dg)^2 / (V + 1)^2`.
pub fn normalized_fisher(g: f64, gamma_norm: f64) -> Result<f64> {
    normalized_fisher_with(g, gamma_norm, &QuadOptions::default())
}

pub fn normalized_fisher_with(g: f64, gamma_norm: f64, opts: &QuadOptions) -> Result<f64> {
    check_below_threshold(g, gamma_norm)?;
    let scale = g.powi(6) * gamma_norm.powi(3);
    let integrand = |w: f64| {
        let v = idler_gain(w, g, gamma_norm).unwrap_or(f64::NAN);
        let dv = idler_gain_derivative(w, g, gamma_norm).unwrap_or(f64::NAN);
        let r = dv / (v + 1.0);
        scale * r * r
    };
    spectral_integral(integrand, &breakpoints(&[g], gamma_norm), opts)
}

/// The same quantity written as
/// `(16 / Gamma) int dOmega/2pi [Omega^2 - (u + Gamma^2/4)]^2 V^4 / (V + 1)^2`.
pub fn normalized_fisher_v4(g: f64, gamma_norm: f64) -> Result<f64> {
    check_below_threshold(g, gamma_norm)?;
    let u = 1.0 / (g * g) - 1.0;
    let c = u + 0.25 * gamma_norm * gamma_norm;
    let integrand = |w: f64| {
        let v = idler_gain(w, g, gamma_norm).unwrap_or(f64::NAN);
        let p = w * w - c;
        let v2 = v * v;
        16.0 / gamma_norm * p * p * v2 * v2 / ((v + 1.0) * (v + 1.0))
    };
    spectral_integral(
        integrand,
        &breakpoints(&[g], gamma_norm),
        &QuadOptions::default(),
    )
}

/// Normalized Fisher information exactly at threshold,
/// `16 int dx/2pi (x^2 + 1)^-2 [1 + Gamma^2 x^2 (x^2 + 1)]^-2`.
///
/// Lies strictly between 1.532 and 4 for `0 < Gamma < 2`.
pub fn normalized_fisher_threshold(gamma_norm: f64) -> Result<f64> {
    check_gamma(gamma_norm)?;
    let g2 = gamma_norm * gamma_norm;
    let integrand = |x: f64| {
        let x2 = x * x;
        let a = x2 + 1.0;
        let b = 1.0 + g2 * x2 * a;
        16.0 / (a * a * b * b)
    };
    let knee = 1.0 / gamma_norm.sqrt();
    spectral_integral(
        integrand,
        &[knee.min(1.0), knee.max(1.0)],
        &QuadOptions::default(),
    )
}

fn absolute_scale(params: &SpectralParams) -> f64 {
    params.omega_m * params.omega_m * params.t / params.gamma.powi(3)
}

/// Fisher information at threshold in absolute units.
pub fn fisher_threshold(params: &SpectralParams) -> Result<f64> {
    params.validate()?;
    Ok(normalized_fisher_threshold(params.gamma_norm())? * absolute_scale(params))
}

/// Fisher information about `omega_m` carried by a quantum-limited output
/// spectrum observed for time `t`. Exactly at threshold the dedicated
/// threshold integral is used; above it there is no stationary spectrum.
pub fn fisher_information(params: &SpectralParams) -> Result<f64> {
    params.validate()?;
    if !params.is_quantum_limited() {
        return Err(Error::invalid(
            "the Fisher integral assumes quantum-limited noise (S_in = S' = 1/2)",
        ));
    }
    let (g, gamma_norm) = (params.g(), params.gamma_norm());
    let g_th = threshold_g(gamma_norm);
    let normalized = if (g - g_th).abs() <= THRESHOLD_TOL * g_th {
        normalized_fisher_threshold(gamma_norm)?
    } else {
        normalized_fisher(g, gamma_norm)?
    };
    Ok(normalized * absolute_scale(params))
}

/// Fisher information from the curvature of the Bhattacharyya distance,
/// `G = 4 (dg/domega_m)^2 d^2B/dg'^2` at `g' = g`, with the second derivative
/// taken by a symmetric difference of relative step `rel_step`.
pub fn fisher_via_bhattacharyya(params: &SpectralParams, rel_step: f64) -> Result<f64> {
    params.validate()?;
    if !(rel_step > 0.0 && rel_step < 0.1) {
        return Err(Error::invalid("relative step must lie in (0, 0.1)"));
    }
    let (g, gamma_norm) = (params.g(), params.gamma_norm());
    let h = rel_step * g;
    let opts = QuadOptions {
        rel_tol: 1e-11,
        ..Default::default()
    };
    let b = |gp: f64| {
        bhattacharyya_distance_with_noise(
            g,
            gp,
            gamma_norm,
            params.lam,
            params.t,
            params.s_in,
            params.s_prime,
            &opts,
        )
    };
    let curvature = (b(g + h)? + b(g - h)?) / (h * h);
    let dg_domega = -g / params.omega_m;
    Ok(4.0 * dg_domega * dg_domega * curvature)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub g: f64,
    pub normalized_fisher: Option<f64>,
    /// Why the point failed, when it did.
    pub error: Option<String>,
}

/// Normalized Fisher information at every `g` of the grid, in grid order.
/// Failed points are flagged and the sweep carries on.
pub fn fisher_sweep(gamma_norm: f64, g_grid: &[f64], exec: Execution) -> Vec<SweepPoint> {
    map_ordered(g_grid, exec, |&g| match normalized_fisher(g, gamma_norm) {
        Ok(v) => SweepPoint {
            g,
            normalized_fisher: Some(v),
            error: None,
        },
        Err(e) => SweepPoint {
            g,
            normalized_fisher: None,
            error: Some(e.to_string()),
        },
    })
}

/// `n` log-spaced points from `start` to `end` inclusive.
pub fn log_spaced(start: f64, end: f64, n: usize) -> Result<Vec<f64>> {
    if !(start > 0.0 && end >= start && end.is_finite()) {
        return Err(Error::invalid("log spacing needs 0 < start <= end"));
    }
    Ok(match n {
        0 => vec![],
        1 => vec![start],
        _ => {
            let (a, b) = (start.ln(), end.ln());
            (0..n)
                .map(|i| {
                    if i == n - 1 {
                        end
                    } else {
                        (a + (b - a) * i as f64 / (n - 1) as f64).exp()
                    }
                })
                .collect()
        }
    })
}
