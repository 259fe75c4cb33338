//! Per-model evaluation: resolved parameters in, named values out.

use critdet::bosonic::{
    bogoliubov, dicke_fidelity, kennedy_receiver, opo_fidelity_engine, opo_fidelity_exact,
    opo_fidelity_worst_case, opo_multimode, opo_neg_log_fidelity_exact,
    opo_neg_log_fidelity_worst_case, DickeParams, OpoParams,
};
use critdet::detection::helstrom_min_error;
use critdet::ising::{
    ising_fidelity_exact_with, ising_log_fidelity_asymptotic, ising_neg_log_fidelity_exact,
    ising_time_for_target_fidelity, IsingParams, MomentumGrid,
};
use critdet::oracle::{
    fock_dicke_fidelity, fock_opo_fidelity, optimal_qubit_discrimination,
    spin_chain_fidelity_bruteforce, FockOpoOracle, SqueezedFockBasis,
};
use critdet::spectral::{
    fisher_via_bhattacharyya, normalized_fisher, normalized_fisher_threshold, normalized_fisher_v4,
    threshold_g, SpectralParams, THRESHOLD_TOL,
};
use critdet::{BinaryHypothesis, Execution, Fidelity};

use crate::config::Params;
use crate::error::{CliError, Result};

pub type Outputs = Vec<(&'static str, f64)>;

/// One evaluable model: the parameters it reads and how to evaluate it.
#[derive(Clone, Copy)]
pub struct Model {
    pub name: &'static str,
    /// Numeric keys, i.e. the ones that can be swept.
    pub keys: &'static [&'static str],
    pub eval: fn(&Params, bool) -> Result<Outputs>,
}

pub const HELSTROM: Model = Model {
    name: "helstrom",
    keys: &["fidelity", "p0"],
    eval: helstrom,
};
pub const ISING_EXACT: Model = Model {
    name: "ising exact",
    keys: &["n", "j", "g0", "g1", "t"],
    eval: ising_exact,
};
pub const ISING_ASYMPTOTIC: Model = Model {
    name: "ising asymptotic",
    keys: &["n", "j", "g1", "delta", "t"],
    eval: ising_asymptotic,
};
pub const ISING_TIME: Model = Model {
    name: "ising time-for-f",
    keys: &["target_fidelity", "n", "j", "g1", "delta"],
    eval: ising_time,
};
pub const OPO_FIDELITY: Model = Model {
    name: "opo fidelity",
    keys: &["omega", "g0", "g1", "t"],
    eval: opo_fidelity,
};
pub const OPO_WORST_CASE: Model = Model {
    name: "opo worst-case",
    keys: &["lambda1", "delta", "t"],
    eval: opo_worst_case,
};
pub const OPO_MULTIMODE: Model = Model {
    name: "opo multimode",
    keys: &["n_modes", "lambda1", "delta", "t", "target_fidelity"],
    eval: opo_multimode_eval,
};
pub const OPO_RECEIVER: Model = Model {
    name: "opo receiver",
    keys: &["omega", "g0", "g1", "t", "p0"],
    eval: opo_receiver,
};
pub const DICKE: Model = Model {
    name: "dicke fidelity",
    keys: &["omega", "g0", "g1", "t"],
    eval: dicke,
};
pub const FISHER_THRESHOLD: Model = Model {
    name: "fisher threshold",
    keys: &["gamma_norm"],
    eval: fisher_threshold_eval,
};
pub const FISHER_POINT: Model = Model {
    name: "fisher point",
    keys: &["gamma_norm", "g"],
    eval: fisher_point,
};

pub const DEFAULT_OPO_TRUNCATION: usize = 200;
pub const DEFAULT_RECEIVER_TRUNCATION: usize = 300;
pub const DEFAULT_DICKE_TRUNCATION: usize = 30;
/// Relative step of the Bhattacharyya second difference.
pub const BHATTACHARYYA_STEP: f64 = 1e-3;

fn helstrom(p: &Params, oracle: bool) -> Result<Outputs> {
    let f = Fidelity::new(p.f64("fidelity")?)?;
    let prior = BinaryHypothesis::from_p0(p.f64("p0")?)?;
    let pe = helstrom_min_error(f, &prior)?;
    let mut out = vec![("min_error_probability", pe)];
    if oracle {
        let search = optimal_qubit_discrimination(f, &prior);
        out.extend([
            ("oracle_min_error_probability", search),
            ("abs_diff", (pe - search).abs()),
        ]);
    }
    Ok(out)
}

pub fn parse_grid(p: &Params) -> Result<MomentumGrid> {
    match p.raw("grid") {
        None | Some("integer") => Ok(MomentumGrid::Integer),
        Some("half-shifted") | Some("half_shifted") => Ok(MomentumGrid::HalfShifted),
        Some(other) => Err(CliError::invalid(format!(
            "unknown grid `{other}` (integer or half-shifted)"
        ))),
    }
}

fn ising_params(p: &Params, g0: f64, g1: f64, t: f64) -> Result<IsingParams> {
    Ok(IsingParams::new(p.usize("n")?, p.f64_or("j", 1.0)?, g0, g1, t)?.with_grid(parse_grid(p)?))
}

fn ising_exact(p: &Params, oracle: bool) -> Result<Outputs> {
    let params = ising_params(p, p.f64("g0")?, p.f64("g1")?, p.f64("t")?)?;
    let f = ising_fidelity_exact_with(&params, Execution::default())?.value();
    let neg_log = ising_neg_log_fidelity_exact(&params, Execution::default())?;
    let mut out = vec![("fidelity", f), ("neg_log_fidelity", neg_log)];
    if oracle {
        let dense = spin_chain_fidelity_bruteforce(&params)?.value();
        out.extend([("oracle_fidelity", dense), ("abs_diff", (f - dense).abs())]);
    }
    Ok(out)
}

fn ising_asymptotic(p: &Params, oracle: bool) -> Result<Outputs> {
    let (n, j, g1, delta, t) = (
        p.usize("n")?,
        p.f64_or("j", 1.0)?,
        p.f64("g1")?,
        p.f64("delta")?,
        p.f64("t")?,
    );
    let neg_log = ising_log_fidelity_asymptotic(n, j, g1, delta, t);
    let mut out = vec![
        ("neg_log_fidelity", neg_log),
        ("fidelity", (-neg_log).exp()),
    ];
    if oracle {
        let exact = ising_neg_log_fidelity_exact(
            &ising_params(p, g1 - delta, g1, t)?,
            Execution::default(),
        )?;
        out.extend([
            ("exact_neg_log_fidelity", exact),
            ("abs_diff", (neg_log - exact).abs()),
        ]);
    }
    Ok(out)
}

fn ising_time(p: &Params, oracle: bool) -> Result<Outputs> {
    let target = Fidelity::new(p.f64("target_fidelity")?)?;
    let (n, j, g1, delta) = (
        p.usize("n")?,
        p.f64_or("j", 1.0)?,
        p.f64("g1")?,
        p.f64("delta")?,
    );
    let t = ising_time_for_target_fidelity(target, n, j, delta, g1)?;
    let mut out = vec![("time", t)];
    if oracle {
        let exact =
            ising_fidelity_exact_with(&ising_params(p, g1 - delta, g1, t)?, Execution::default())?
                .value();
        out.extend([
            ("exact_fidelity", exact),
            ("abs_diff", (exact - target.value()).abs()),
        ]);
    }
    Ok(out)
}

fn opo_params(p: &Params) -> Result<OpoParams> {
    let params = OpoParams::from_criticality(
        p.f64_or("omega", 1.0)?,
        p.f64("g0")?,
        p.f64("g1")?,
        p.f64("t")?,
    );
    params.validate()?;
    Ok(params)
}

fn opo_fidelity(p: &Params, oracle: bool) -> Result<Outputs> {
    let params = opo_params(p)?;
    let f = opo_fidelity_exact(&params)?.value();
    let mut out = vec![
        ("fidelity", f),
        ("neg_log_fidelity", opo_neg_log_fidelity_exact(&params)?),
        ("engine_fidelity", opo_fidelity_engine(&params)?.value()),
    ];
    if oracle {
        let r = fock_opo_fidelity(&params, p.usize_or("truncation", DEFAULT_OPO_TRUNCATION)?)?;
        let v = r.fidelity.value();
        out.extend([
            ("oracle_fidelity", v),
            ("abs_diff", (f - v).abs()),
            ("oracle_truncation", r.truncation as f64),
        ]);
    }
    Ok(out)
}

fn opo_worst_case(p: &Params, oracle: bool) -> Result<Outputs> {
    let (lambda1, delta, t) = (p.f64("lambda1")?, p.f64("delta")?, p.f64("t")?);
    let f = opo_fidelity_worst_case(lambda1, delta, t)?.value();
    let mut out = vec![
        ("fidelity", f),
        (
            "neg_log_fidelity",
            opo_neg_log_fidelity_worst_case(lambda1, delta, t)?,
        ),
    ];
    if oracle {
        let (g0, g1) = (1.0 - 0.5 * delta, 1.0 + 0.5 * delta);
        let exact =
            opo_fidelity_exact(&OpoParams::from_criticality(2.0 * lambda1 / g1, g0, g1, t))?
                .value();
        out.extend([("exact_fidelity", exact), ("abs_diff", (f - exact).abs())]);
    }
    Ok(out)
}

fn opo_multimode_eval(p: &Params, _oracle: bool) -> Result<Outputs> {
    let n_modes: u64 = p
        .parse("n_modes")?
        .ok_or_else(|| CliError::invalid("missing parameter `n_modes`"))?;
    let target = Fidelity::new(p.f64("target_fidelity")?)?;
    let r = opo_multimode(
        n_modes,
        p.f64("lambda1")?,
        p.f64("delta")?,
        p.f64("t")?,
        target,
    )?;
    Ok(vec![
        ("fidelity", r.fidelity),
        ("neg_log_fidelity", r.neg_log_fidelity),
        ("product_fidelity", r.product_fidelity),
        ("product_neg_log_fidelity", r.product_neg_log_fidelity),
        ("detectable_perturbation", r.detectable_perturbation),
        ("within_validity", if r.within_validity { 1.0 } else { 0.0 }),
    ])
}

fn opo_receiver(p: &Params, oracle: bool) -> Result<Outputs> {
    let params = opo_params(p)?;
    let prior = BinaryHypothesis::from_p0(p.f64_or("p0", 0.5)?)?;
    let r = kennedy_receiver(&params, &prior)?;
    let optimal = r.asymptotic_optimal_exponent(&prior);
    let mut out = vec![
        ("p10", r.p10),
        ("p01", r.p01),
        ("error_probability", r.error_probability),
        ("error_exponent", r.error_exponent.value()),
        ("optimal_error_exponent", optimal),
        ("exponent_gap", optimal - r.error_exponent.value()),
    ];
    if oracle {
        let dim = p.usize_or("truncation", DEFAULT_RECEIVER_TRUNCATION)?;
        let state = FockOpoOracle::new(&params, dim)?.evolved_state(params.t)?;
        let basis =
            SqueezedFockBasis::from_bogoliubov(&bogoliubov(params.g0(), params.g1())?, dim, 0)?;
        let vacuum = basis.probability(&state, 0)?;
        out.extend([("oracle_p01", vacuum), ("abs_diff", (r.p01 - vacuum).abs())]);
    }
    Ok(out)
}

fn dicke(p: &Params, oracle: bool) -> Result<Outputs> {
    let params = DickeParams::from_criticality(
        p.f64_or("omega", 1.0)?,
        p.f64("g0")?,
        p.f64("g1")?,
        p.f64("t")?,
    );
    let r = dicke_fidelity(&params)?;
    let f = r.fidelity.value();
    let mut out = vec![
        ("fidelity", f),
        ("neg_log_fidelity", r.fidelity.neg_log()),
        ("envelope_factor", r.envelope_factor.unwrap_or(f64::NAN)),
        ("unstable_rate", r.unstable_rate),
    ];
    if oracle {
        let c = fock_dicke_fidelity(&params, p.usize_or("truncation", DEFAULT_DICKE_TRUNCATION)?)?;
        let v = c.fidelity.value();
        out.extend([
            ("oracle_fidelity", v),
            ("abs_diff", (f - v).abs()),
            ("oracle_truncation", c.truncation as f64),
        ]);
    }
    Ok(out)
}

fn fisher_threshold_eval(p: &Params, _oracle: bool) -> Result<Outputs> {
    Ok(vec![(
        "normalized_fisher",
        normalized_fisher_threshold(p.f64("gamma_norm")?)?,
    )])
}

/// Normalized Fisher information, switching to the threshold integral at
/// threshold.
pub fn normalized_fisher_at(g: f64, gamma_norm: f64) -> Result<f64> {
    let g_th = threshold_g(gamma_norm);
    Ok(if (g - g_th).abs() <= THRESHOLD_TOL * g_th {
        normalized_fisher_threshold(gamma_norm)?
    } else {
        normalized_fisher(g, gamma_norm)?
    })
}

/// The Bhattacharyya route in normalized units: with `lam = 1/2` and
/// `omega_m = 1/g`, `G gamma^3 / (omega_m^2 t)` at `t = 1`.
pub fn normalized_fisher_bhattacharyya(g: f64, gamma_norm: f64) -> Result<f64> {
    let params = SpectralParams::quantum_limited(1.0 / g, 0.5, gamma_norm, 1.0);
    let absolute = fisher_via_bhattacharyya(&params, BHATTACHARYYA_STEP)?;
    Ok(absolute * gamma_norm.powi(3) * g * g)
}

fn fisher_point(p: &Params, oracle: bool) -> Result<Outputs> {
    let (gamma_norm, g) = (p.f64("gamma_norm")?, p.f64("g")?);
    let v = normalized_fisher_at(g, gamma_norm)?;
    let mut out = vec![("normalized_fisher", v)];
    if oracle {
        let v4 = normalized_fisher_v4(g, gamma_norm)?;
        let b = normalized_fisher_bhattacharyya(g, gamma_norm)?;
        out.extend([
            ("oracle_normalized_fisher", v4),
            ("abs_diff", (v - v4).abs()),
            ("bhattacharyya_normalized_fisher", b),
        ]);
    }
    Ok(out)
}
