//! Loschmidt echo of the periodic transverse-field Ising chain
//! `H_m = -J sum_j (sz_j sz_{j+1} + g_m sx_j)`.
//!
//! The echo factorises over pairs of Bloch modes `(phi, -phi)`:
//!
//! ```text
//! F = prod_k [1 - sin^2(eps1(k) t) sin^2(theta1(k) - theta0(k))]
//! eps1(k)    = 2J sqrt(1 + g1^2 - 2 g1 cos phi(k))
//! theta_m(k) = atan2(sin phi(k), g_m - cos phi(k))
//! ```
//!
//! Two momentum grids are offered. [`MomentumGrid::Integer`] uses
//! `phi = 2 pi k / N`; [`MomentumGrid::HalfShifted`] uses
//! `phi = 2 pi (k - 1/2) / N`. The ground state of the periodic chain lives in
//! the even fermion-parity sector, whose modes are the half-shifted ones, and
//! only that grid reproduces dense diagonalisation at finite `N` (to machine
//! precision). Both grids agree as `N -> infinity`.

use std::f64::consts::PI;

use crate::detection::Fidelity;
use crate::error::{ensure_finite, Error, Result};
use crate::exec::{chunked_sum, Execution};

/// Above this many sites the product is accumulated as a sum of logarithms.
pub const LOG_SPACE_THRESHOLD: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MomentumGrid {
    /// `phi(k) = 2 pi k / N`, `k = 1..N/2`.
    #[default]
    Integer,
    /// `phi(k) = 2 pi (k - 1/2) / N`, `k = 1..N/2`.
    HalfShifted,
}

impl MomentumGrid {
    pub fn phi(self, k: usize, n_sites: usize) -> f64 {
        let k = match self {
            MomentumGrid::Integer => k as f64,
            MomentumGrid::HalfShifted => k as f64 - 0.5,
        };
        2.0 * PI * k / n_sites as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsingParams {
    pub n_sites: usize,
    /// Spin coupling `J` (inverse time).
    pub coupling: f64,
    /// Transverse field under H0, in units of `J`.
    pub g0: f64,
    /// Transverse field under H1, in units of `J`.
    pub g1: f64,
    pub t: f64,
    pub grid: MomentumGrid,
}

impl IsingParams {
    pub fn new(n_sites: usize, coupling: f64, g0: f64, g1: f64, t: f64) -> Result<Self> {
        let p = IsingParams {
            n_sites,
            coupling,
            g0,
            g1,
            t,
            grid: MomentumGrid::default(),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_grid(self, grid: MomentumGrid) -> Self {
        IsingParams { grid, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_sites < 2 || !self.n_sites.is_multiple_of(2) {
            return Err(Error::invalid(format!(
                "chain length must be even and >= 2, got {}",
                self.n_sites
            )));
        }
        if !(ensure_finite("J", self.coupling)? > 0.0) {
            return Err(Error::invalid("coupling J must be positive"));
        }
        ensure_finite("g0", self.g0)?;
        ensure_finite("g1", self.g1)?;
        if !(ensure_finite("t", self.t)? >= 0.0) {
            return Err(Error::invalid("t must be non-negative"));
        }
        Ok(())
    }

    /// Perturbation `g1 - g0`.
    pub fn delta(&self) -> f64 {
        self.g1 - self.g0
    }
}

/// One Bloch-mode pair of the free-fermion solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochMode {
    pub k: usize,
    pub phi: f64,
    /// Quasiparticle energy under H1.
    pub epsilon1: f64,
    pub theta0: f64,
    pub theta1: f64,
}

impl BlochMode {
    /// `sin^2(eps1 t) sin^2(theta1 - theta0)`; the mode's factor is one minus this.
    pub fn decay(&self, t: f64) -> f64 {
        (self.epsilon1 * t).sin().powi(2) * (self.theta1 - self.theta0).sin().powi(2)
    }
}

fn mode_unchecked(k: usize, p: &IsingParams) -> BlochMode {
    let phi = p.grid.phi(k, p.n_sites);
    let (s, c) = phi.sin_cos();
    let epsilon1 = 2.0 * p.coupling * (1.0 + p.g1 * p.g1 - 2.0 * p.g1 * c).max(0.0).sqrt();
    BlochMode {
        k,
        phi,
        epsilon1,
        theta0: s.atan2(p.g0 - c),
        theta1: s.atan2(p.g1 - c),
    }
}

pub fn bloch_mode(k: usize, params: &IsingParams) -> Result<BlochMode> {
    params.validate()?;
    if k == 0 || k > params.n_sites / 2 {
        return Err(Error::invalid(format!(
            "mode index {k} outside 1..={}",
            params.n_sites / 2
        )));
    }
    Ok(mode_unchecked(k, params))
}

/// Exact echo as a product over the `N/2` mode pairs.
pub fn ising_fidelity_exact(params: &IsingParams) -> Result<Fidelity> {
    ising_fidelity_exact_with(params, Execution::default())
}

pub fn ising_fidelity_exact_with(params: &IsingParams, exec: Execution) -> Result<Fidelity> {
    params.validate()?;
    let half = params.n_sites / 2;
    if params.n_sites <= LOG_SPACE_THRESHOLD {
        let f: f64 = (1..=half)
            .map(|k| 1.0 - mode_unchecked(k, params).decay(params.t))
            .product();
        return Fidelity::clamped(f);
    }
    let log_f = log_product(params, exec);
    Fidelity::clamped(log_f.exp())
}

/// `-ln F` from the exact product, always accumulated in log space.
///
/// Stays accurate when `F` itself would underflow.
pub fn ising_neg_log_fidelity_exact(params: &IsingParams, exec: Execution) -> Result<f64> {
    params.validate()?;
    Ok(-log_product(params, exec))
}

fn log_product(params: &IsingParams, exec: Execution) -> f64 {
    let half = params.n_sites / 2;
    chunked_sum(1..half + 1, exec, |k| {
        (-mode_unchecked(k, params).decay(params.t)).ln_1p()
    })
}

/// Thermodynamic-limit exponent `-ln F ~ N J^2 delta^2 t^2 / g1^2` for
/// `g1 > 1` and `N J^2 delta^2 t^2` for `g1 <= 1`.
///
/// Valid for small `delta` and short times where every mode decays only
/// slightly (`eps1 t << 1`); the formula itself is evaluated for any input.
pub fn ising_log_fidelity_asymptotic(
    n_sites: usize,
    coupling: f64,
    g1: f64,
    delta: f64,
    t: f64,
) -> f64 {
    let base = n_sites as f64 * coupling.powi(2) * delta.powi(2) * t.powi(2);
    if g1 > 1.0 {
        base / (g1 * g1)
    } else {
        base
    }
}

/// Time at which the asymptotic exponent reaches `-ln target`; scales as
/// `1 / sqrt(N)`.
pub fn ising_time_for_target_fidelity(
    target: Fidelity,
    n_sites: usize,
    coupling: f64,
    delta: f64,
    g1: f64,
) -> Result<f64> {
    let f = target.value();
    if !(f > 0.0 && f < 1.0) {
        return Err(Error::invalid(format!(
            "target fidelity must lie in (0, 1), got {f}"
        )));
    }
    if ensure_finite("delta", delta)? == 0.0 {
        return Err(Error::invalid("delta = 0 never changes the fidelity"));
    }
    if n_sites == 0 || !(ensure_finite("J", coupling)? > 0.0) {
        return Err(Error::invalid("need N >= 1 and J > 0"));
    }
    let scale = if g1 > 1.0 { g1 } else { 1.0 };
    Ok((-f.ln()).sqrt() / ((n_sites as f64).sqrt() * coupling * delta.abs()) * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn params(n: usize, g0: f64, g1: f64, t: f64) -> IsingParams {
        IsingParams::new(n, 1.0, g0, g1, t).unwrap()
    }

    #[test]
    fn symmetry_point_angle() {
        let p = params(8, 0.0, 0.0, 1.0);
        let m = bloch_mode(2, &p).unwrap();
        assert_relative_eq!(m.phi, PI / 2.0, epsilon = 1e-15);
        assert_relative_eq!(m.theta0, PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn paramagnetic_limit_angles_vanish() {
        let p = params(16, 1e9, 1e9, 1.0);
        for k in 1..=8 {
            let m = bloch_mode(k, &p).unwrap();
            assert!(m.theta0.abs() < 1e-8 && m.theta1.abs() < 1e-8);
        }
    }

    #[test]
    fn quasiparticle_energy() {
        let p = params(8, 0.9, 1.1, 1.0);
        let m = bloch_mode(1, &p).unwrap();
        let expected = 2.0 * (1.0 + 1.21 - 2.2 * (PI / 4.0).cos()).sqrt();
        assert_relative_eq!(m.epsilon1, expected, epsilon = 1e-14);
        assert!(bloch_mode(0, &p).is_err());
        assert!(bloch_mode(5, &p).is_err());
    }

    #[test]
    fn endpoint_mode_contributes_one() {
        // phi = pi on the integer grid: sin phi = 0 so theta0 = theta1.
        let p = params(8, 0.5, 0.7, 0.9);
        let m = bloch_mode(4, &p).unwrap();
        assert!(m.decay(p.t) < 1e-30);
    }

    #[test]
    fn trivial_echoes() {
        assert_eq!(
            ising_fidelity_exact(&params(20, 0.7, 0.7, 3.0))
                .unwrap()
                .value(),
            1.0
        );
        assert_eq!(
            ising_fidelity_exact(&params(20, 0.7, 1.3, 0.0))
                .unwrap()
                .value(),
            1.0
        );
    }

    #[test]
    fn rejects_bad_params() {
        assert!(IsingParams::new(7, 1.0, 0.5, 0.6, 1.0).is_err());
        assert!(IsingParams::new(0, 1.0, 0.5, 0.6, 1.0).is_err());
        assert!(IsingParams::new(8, 0.0, 0.5, 0.6, 1.0).is_err());
        assert!(IsingParams::new(8, 1.0, 0.5, 0.6, -1.0).is_err());
    }

    #[test]
    fn asymptotic_examples() {
        assert_relative_eq!(
            ising_log_fidelity_asymptotic(100, 1.0, 1.5, 0.01, 1.0),
            0.01 / 2.25,
            epsilon = 1e-15
        );
        let at_crit = ising_log_fidelity_asymptotic(64, 0.7, 1.0, 0.02, 0.3);
        let above = ising_log_fidelity_asymptotic(64, 0.7, 1.0 + 1e-12, 0.02, 0.3);
        assert_relative_eq!(at_crit, above, max_relative = 1e-10);
    }

    #[test]
    fn asymptotic_kink_at_critical_point() {
        // d/dg1 of the exponent: 0 from the left, -2 N J^2 delta^2 t^2 from the right.
        let (n, j, d, t) = (1000, 1.0, 0.01, 0.5);
        let h = 1e-6;
        let f = |g: f64| ising_log_fidelity_asymptotic(n, j, g, d, t);
        let left = (f(1.0) - f(1.0 - h)) / h;
        let right = (f(1.0 + h) - f(1.0)) / h;
        let base = n as f64 * j * j * d * d * t * t;
        assert!(left.abs() < 1e-9);
        assert!((right + 2.0 * base).abs() / (2.0 * base) < 1e-4);
    }

    #[test]
    fn time_for_target() {
        let target = Fidelity::new((-1.0f64).exp()).unwrap();
        let t = ising_time_for_target_fidelity(target, 10_000, 1.0, 1e-2, 1.2).unwrap();
        assert_relative_eq!(t, 1.2, epsilon = 1e-12);
        let t4 = ising_time_for_target_fidelity(target, 40_000, 1.0, 1e-2, 1.2).unwrap();
        assert_relative_eq!(t4, 0.6, epsilon = 1e-12);
        assert!(ising_time_for_target_fidelity(target, 100, 1.0, 0.0, 1.2).is_err());
        for g1 in [0.6, 1.0, 1.7] {
            let t = ising_time_for_target_fidelity(target, 500, 0.8, -3e-3, g1).unwrap();
            let e = ising_log_fidelity_asymptotic(500, 0.8, g1, -3e-3, t);
            assert!((e - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn log_space_agrees_with_direct_product() {
        let p = params(10_000, 1.1, 1.15, 0.03).with_grid(MomentumGrid::HalfShifted);
        let direct = ising_fidelity_exact(&p).unwrap().value();
        let logged = ising_neg_log_fidelity_exact(&p, Execution::Sequential).unwrap();
        assert_relative_eq!(-direct.ln(), logged, max_relative = 1e-10);
    }

    #[test]
    fn parallel_product_is_bit_identical() {
        let p = params(1 << 18, 1.199, 1.2, 0.05);
        let a = ising_neg_log_fidelity_exact(&p, Execution::Sequential).unwrap();
        let b = ising_neg_log_fidelity_exact(&p, Execution::Parallel).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn grids_converge_at_large_n() {
        let n = 1 << 16;
        let t = 0.1;
        let p = params(n, 1.199, 1.2, t);
        let a = ising_neg_log_fidelity_exact(&p, Execution::default()).unwrap();
        let b = ising_neg_log_fidelity_exact(
            &p.with_grid(MomentumGrid::HalfShifted),
            Execution::default(),
        )
        .unwrap();
        assert!((a - b).abs() / b < 0.01);
    }

    #[test]
    fn time_rescaling_keeps_exponent() {
        let (g1, d) = (1.2, 1e-3);
        let t0 = 0.05;
        let e = |n: usize, t: f64| {
            ising_neg_log_fidelity_exact(&params(n, g1 - d, g1, t), Execution::default()).unwrap()
        };
        let base = e(1 << 16, t0);
        let doubled = e(1 << 17, t0 / 2f64.sqrt());
        assert!((base - doubled).abs() / base < 0.05);
    }

    proptest! {
        #[test]
        fn factors_and_product_in_unit_interval(
            half in 1usize..40,
            g0 in -3.0f64..3.0,
            g1 in -3.0f64..3.0,
            t in 0.0f64..20.0,
            shifted in any::<bool>(),
        ) {
            let grid = if shifted { MomentumGrid::HalfShifted } else { MomentumGrid::Integer };
            let p = IsingParams::new(2 * half, 1.0, g0, g1, t).unwrap().with_grid(grid);
            for k in 1..=half {
                let s = bloch_mode(k, &p).unwrap().decay(t);
                prop_assert!((0.0..=1.0).contains(&(1.0 - s)));
            }
            let f = ising_fidelity_exact(&p).unwrap().value();
            prop_assert!((0.0..=1.0).contains(&f));
        }
    }
}
