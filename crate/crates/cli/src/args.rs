use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::Scale;

const UNITS: &str = "\
Units: natural units throughout, hbar = 1. Frequencies, couplings and rates
(omega, j, lambda1) are angular frequencies in inverse time; t is in the
matching time unit. g, g0, g1 are dimensionless criticality parameters with
the transition at g = 1; delta = g1 - g0. Fisher values are printed in the
normalized form G gamma^3 / (omega_m^2 t).

Exit codes: 0 ok, 2 invalid input, 3 numerical non-convergence, 4 I/O error.";

#[derive(Debug, Parser)]
#[command(name = "critdet", version, about = "Transition-edge detector numerics", after_help = UNITS)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GlobalArgs {
    /// Write the result table as CSV.
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Write a line chart of the first output against the first column.
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Read parameters from a config file; flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Pair each value with an independent brute-force evaluation.
    #[arg(long, global = true)]
    pub oracle_check: bool,
    /// Worker threads for sweeps (default: number of cores).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    /// Logarithmic x axis in the SVG chart.
    #[arg(long, global = true)]
    pub log_x: bool,
    /// Logarithmic y axis in the SVG chart.
    #[arg(long, global = true)]
    pub log_y: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum error probability for two pure states.
    Helstrom(HelstromArgs),
    /// Transverse-field Ising chain.
    #[command(subcommand)]
    Ising(IsingCommand),
    /// Degenerate parametric oscillator.
    #[command(subcommand)]
    Opo(OpoCommand),
    /// Two-mode Dicke model in the normal-phase approximation.
    #[command(subcommand)]
    Dicke(DickeCommand),
    /// Fisher information of the damped parametric oscillator spectrum.
    #[command(subcommand)]
    Fisher(FisherCommand),
    /// Closed form against brute force.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum IsingCommand {
    /// Exact fidelity as a product over momentum modes.
    Exact(IsingExactArgs),
    /// Thermodynamic-limit exponent for small delta.
    Asymptotic(IsingAsymptoticArgs),
    /// Time at which the asymptotic fidelity reaches a target.
    TimeForF(IsingTimeArgs),
}

#[derive(Debug, Subcommand)]
pub enum OpoCommand {
    /// Exact fidelity for g0 < 1 < g1.
    Fidelity(OpoFidelityArgs),
    /// Worst case g0 = 1 - delta/2, g1 = 1 + delta/2.
    WorstCase(OpoWorstCaseArgs),
    /// N independent oscillators.
    Multimode(OpoMultimodeArgs),
    /// Photon-counting receiver.
    Receiver(OpoReceiverArgs),
}

#[derive(Debug, Subcommand)]
pub enum DickeCommand {
    /// Fidelity from the two-mode Gaussian propagator.
    Fidelity(DickeArgs),
}

#[derive(Debug, Subcommand)]
pub enum FisherCommand {
    /// Normalized Fisher information at threshold.
    Threshold(FisherThresholdArgs),
    /// Normalized Fisher information at one g below threshold.
    Point(FisherPointArgs),
    /// Normalized Fisher information over a grid of g.
    Sweep(FisherSweepArgs),
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Run a model with --oracle-check forced on.
    #[command(subcommand)]
    Compare(CompareModel),
}

#[derive(Debug, Subcommand)]
pub enum CompareModel {
    Helstrom(HelstromArgs),
    Ising(IsingExactArgs),
    Opo(OpoFidelityArgs),
    Receiver(OpoReceiverArgs),
    Dicke(DickeArgs),
    Fisher(FisherPointArgs),
}

/// Generic one-parameter sweep.
#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    /// Parameter to sweep (config key name, e.g. t or g1).
    #[arg(long, value_name = "VAR")]
    pub sweep: Option<String>,
    #[arg(long)]
    pub start: Option<f64>,
    #[arg(long)]
    pub stop: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_enum)]
    pub scale: Option<Scale>,
}

impl SweepArgs {
    pub fn flags(&self) -> Vec<(&'static str, Option<String>)> {
        vec![
            ("variable", self.sweep.clone()),
            ("start", s(self.start)),
            ("stop", s(self.stop)),
            ("points", s(self.points)),
            ("scale", s(self.scale)),
        ]
    }
}

fn s<T: ToString>(v: Option<T>) -> Option<String> {
    v.map(|x| x.to_string())
}

/// Flag values keyed by config name.
pub trait ModelArgs {
    const SECTION: &'static str;
    fn flags(&self) -> Vec<(&'static str, Option<String>)>;
    fn sweep(&self) -> Option<&SweepArgs> {
        None
    }
}

macro_rules! model_args {
    ($name:ident, $section:literal, { $($(#[$doc:meta])* $field:ident : $ty:ty),* $(,)? }, sweep) => {
        model_args!(@def $name, { $($(#[$doc])* $field: $ty),* }, { #[command(flatten)] pub sweep: SweepArgs, });
        impl ModelArgs for $name {
            const SECTION: &'static str = $section;
            fn flags(&self) -> Vec<(&'static str, Option<String>)> {
                vec![$((stringify!($field), s(self.$field.clone()))),*]
            }
            fn sweep(&self) -> Option<&SweepArgs> {
                Some(&self.sweep)
            }
        }
    };
    ($name:ident, $section:literal, { $($(#[$doc:meta])* $field:ident : $ty:ty),* $(,)? }) => {
        model_args!(@def $name, { $($(#[$doc])* $field: $ty),* }, {});
        impl ModelArgs for $name {
            const SECTION: &'static str = $section;
            fn flags(&self) -> Vec<(&'static str, Option<String>)> {
                vec![$((stringify!($field), s(self.$field.clone()))),*]
            }
        }
    };
    (@def $name:ident, { $($(#[$doc:meta])* $field:ident : $ty:ty),* }, { $($extra:tt)* }) => {
        #[derive(Debug, Clone, Default, Args)]
        pub struct $name {
            $($(#[$doc])* #[arg(long)] pub $field: Option<$ty>,)*
            $($extra)*
        }
    };
}

model_args!(HelstromArgs, "helstrom", {
    /// Fidelity |<psi0|psi1>|^2 in [0, 1].
    fidelity: f64,
    /// Prior of H0; p1 = 1 - p0.
    p0: f64,
}, sweep);

model_args!(IsingExactArgs, "ising", {
    /// Number of sites (even).
    n: usize,
    /// Spin coupling J [default: 1].
    j: f64,
    g0: f64,
    g1: f64,
    t: f64,
    /// Momentum grid: integer (default) or half-shifted.
    grid: String,
}, sweep);

model_args!(IsingAsymptoticArgs, "ising", {
    n: usize,
    /// Spin coupling J [default: 1].
    j: f64,
    g1: f64,
    delta: f64,
    t: f64,
    /// Grid used for the exact product under --oracle-check.
    grid: String,
}, sweep);

model_args!(IsingTimeArgs, "ising", {
    target_fidelity: f64,
    n: usize,
    /// Spin coupling J [default: 1].
    j: f64,
    g1: f64,
    delta: f64,
    /// Grid used for the exact product under --oracle-check.
    grid: String,
}, sweep);

model_args!(OpoFidelityArgs, "opo", {
    /// Mode frequency [default: 1].
    omega: f64,
    g0: f64,
    g1: f64,
    t: f64,
    /// Starting Fock truncation for --oracle-check [default: 200].
    truncation: usize,
}, sweep);

model_args!(OpoWorstCaseArgs, "opo", {
    lambda1: f64,
    delta: f64,
    t: f64,
}, sweep);

model_args!(OpoMultimodeArgs, "opo", {
    n_modes: u64,
    lambda1: f64,
    delta: f64,
    t: f64,
    /// Fidelity defining the detectable perturbation.
    target_fidelity: f64,
}, sweep);

model_args!(OpoReceiverArgs, "opo", {
    /// Mode frequency [default: 1].
    omega: f64,
    g0: f64,
    g1: f64,
    t: f64,
    /// Prior of H0 [default: 0.5].
    p0: f64,
    /// Fock truncation for --oracle-check [default: 300].
    truncation: usize,
}, sweep);

model_args!(DickeArgs, "dicke", {
    /// Mode frequency [default: 1].
    omega: f64,
    g0: f64,
    g1: f64,
    t: f64,
    /// Fock truncation per mode for --oracle-check, at most 40 [default: 30].
    truncation: usize,
}, sweep);

model_args!(FisherThresholdArgs, "fisher", {
    /// Damping over pump, gamma / (2 lambda), in (0, 2].
    gamma_norm: f64,
});

model_args!(FisherPointArgs, "fisher", {
    /// Damping over pump, gamma / (2 lambda).
    gamma_norm: f64,
    g: f64,
}, sweep);

model_args!(FisherSweepArgs, "fisher", {
    /// Damping over pump, gamma / (2 lambda).
    gamma_norm: f64,
    /// Lower end of the g grid [default: 0.5].
    g_min: f64,
    /// Upper end of the g grid [default: 0.9999 of the threshold].
    g_max: f64,
    /// Number of grid points [default: 200].
    points: usize,
    /// Grid spacing: linear (default) or log.
    scale: Scale,
});
