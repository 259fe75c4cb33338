//! Command-line front end for `critdet`.
//!
//! [`run`] resolves a parsed command line against an optional config file,
//! evaluates the model (once or over a sweep), and writes the result to
//! stdout, CSV and SVG. Sweep points are evaluated in parallel when the
//! `parallel` feature is on; output order and bytes do not depend on it.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::io::Write;
use std::path::PathBuf;

use critdet::exec::map_ordered;
use critdet::spectral::{normalized_fisher_v4, threshold_g, SWEEP_CAP};
use critdet::Execution;

pub use args::Cli;
use args::{
    Command, CompareModel, DickeCommand, FisherCommand, FisherSweepArgs, IsingCommand, ModelArgs,
    OpoCommand, OracleCommand,
};
use commands::{normalized_fisher_at, Model};
use config::{grid, ConfigFile, Params, Scale, SweepSpec};
pub use error::{CliError, Result};
use output::{csv_string, format_value, svg_line_chart, write_text, Table};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputSpec {
    pub csv: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub log_x: bool,
    pub log_y: bool,
}

/// A fully resolved invocation.
#[derive(Clone)]
pub struct RunConfig {
    pub model: Model,
    pub params: Params,
    pub sweep: Option<SweepSpec>,
    pub output: OutputSpec,
    pub oracle_check: bool,
    pub threads: Option<usize>,
}

enum Job {
    Model(RunConfig),
    FisherSweep {
        params: Params,
        output: OutputSpec,
        oracle_check: bool,
        threads: Option<usize>,
    },
}

/// What a job produced, before anything is written.
pub struct Computed {
    pub table: Table,
    /// Single evaluation (printed as values rather than as a table).
    pub single: bool,
    pub warnings: Vec<String>,
}

fn resolve_output(
    global: &args::GlobalArgs,
    file: Option<&ConfigFile>,
) -> Result<(OutputSpec, bool, Option<usize>)> {
    let on = |b: bool| b.then(|| "true".to_string());
    let p = Params::resolve(
        "output",
        file,
        [
            ("csv", global.csv.as_ref().map(|p| p.display().to_string())),
            ("svg", global.svg.as_ref().map(|p| p.display().to_string())),
            ("oracle_check", on(global.oracle_check)),
            ("threads", global.threads.map(|n| n.to_string())),
            ("log_x", on(global.log_x)),
            ("log_y", on(global.log_y)),
        ],
    );
    let output = OutputSpec {
        csv: p.raw("csv").map(PathBuf::from),
        svg: p.raw("svg").map(PathBuf::from),
        log_x: p.flag("log_x")?,
        log_y: p.flag("log_y")?,
    };
    let threads = p.parse::<usize>("threads")?;
    if threads == Some(0) {
        return Err(CliError::invalid("--threads must be at least 1"));
    }
    Ok((output, p.flag("oracle_check")?, threads))
}

fn model_job<A: ModelArgs>(
    a: &A,
    model: Model,
    file: Option<&ConfigFile>,
    output: OutputSpec,
    oracle_check: bool,
    threads: Option<usize>,
) -> Result<Job> {
    let params = Params::resolve(A::SECTION, file, a.flags());
    let sweep = match a.sweep() {
        Some(s) => SweepSpec::from_params(&Params::resolve("sweep", file, s.flags()))?,
        None => None,
    };
    if let Some(s) = &sweep {
        if !model.keys.contains(&s.variable.as_str()) {
            return Err(CliError::invalid(format!(
                "`{}` cannot sweep `{}`; choose one of: {}",
                model.name,
                s.variable,
                model.keys.join(", ")
            )));
        }
    }
    Ok(Job::Model(RunConfig {
        model,
        params,
        sweep,
        output,
        oracle_check,
        threads,
    }))
}

fn build_job(cli: &Cli) -> Result<Job> {
    let file = cli
        .global
        .config
        .as_deref()
        .map(ConfigFile::load)
        .transpose()?;
    let file = file.as_ref();
    let (output, oracle, threads) = resolve_output(&cli.global, file)?;
    macro_rules! job {
        ($args:expr, $model:expr) => {
            model_job($args, $model, file, output, oracle, threads)
        };
        ($args:expr, $model:expr, forced) => {
            model_job($args, $model, file, output, true, threads)
        };
    }
    match &cli.command {
        Command::Helstrom(a) => job!(a, commands::HELSTROM),
        Command::Ising(IsingCommand::Exact(a)) => job!(a, commands::ISING_EXACT),
        Command::Ising(IsingCommand::Asymptotic(a)) => job!(a, commands::ISING_ASYMPTOTIC),
        Command::Ising(IsingCommand::TimeForF(a)) => job!(a, commands::ISING_TIME),
        Command::Opo(OpoCommand::Fidelity(a)) => job!(a, commands::OPO_FIDELITY),
        Command::Opo(OpoCommand::WorstCase(a)) => job!(a, commands::OPO_WORST_CASE),
        Command::Opo(OpoCommand::Multimode(a)) => job!(a, commands::OPO_MULTIMODE),
        Command::Opo(OpoCommand::Receiver(a)) => job!(a, commands::OPO_RECEIVER),
        Command::Dicke(DickeCommand::Fidelity(a)) => job!(a, commands::DICKE),
        Command::Fisher(FisherCommand::Threshold(a)) => job!(a, commands::FISHER_THRESHOLD),
        Command::Fisher(FisherCommand::Point(a)) => job!(a, commands::FISHER_POINT),
        Command::Fisher(FisherCommand::Sweep(a)) => Ok(Job::FisherSweep {
            params: Params::resolve(FisherSweepArgs::SECTION, file, a.flags()),
            output,
            oracle_check: oracle,
            threads,
        }),
        Command::Oracle(OracleCommand::Compare(m)) => match m {
            CompareModel::Helstrom(a) => job!(a, commands::HELSTROM, forced),
            CompareModel::Ising(a) => job!(a, commands::ISING_EXACT, forced),
            CompareModel::Opo(a) => job!(a, commands::OPO_FIDELITY, forced),
            CompareModel::Receiver(a) => job!(a, commands::OPO_RECEIVER, forced),
            CompareModel::Dicke(a) => job!(a, commands::DICKE, forced),
            CompareModel::Fisher(a) => job!(a, commands::FISHER_POINT, forced),
        },
    }
}

fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match threads {
        None => Ok(f()),
        #[cfg(feature = "parallel")]
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| CliError::invalid(format!("cannot start {n} threads: {e}"))),
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(f()),
    }
}

/// Evaluates a resolved configuration.
pub fn evaluate(config: &RunConfig) -> Result<Computed> {
    let RunConfig {
        model,
        params,
        sweep,
        oracle_check,
        ..
    } = config;
    let Some(sweep) = sweep else {
        let out = (model.eval)(params, *oracle_check)?;
        let mut table = Table::new(out.iter().map(|o| o.0.to_string()).collect());
        table.push(out.iter().map(|o| o.1).collect())?;
        return Ok(Computed {
            table,
            single: true,
            warnings: vec![],
        });
    };
    let values = sweep.grid();
    let results = map_ordered(&values, Execution::default(), |&v| {
        (model.eval)(&params.with(&sweep.variable, v), *oracle_check)
    });
    let names: Vec<&str> = match results.iter().find_map(|r| r.as_ref().ok()) {
        Some(out) => out.iter().map(|o| o.0).collect(),
        None => match results.into_iter().next() {
            Some(Err(e)) => return Err(e),
            _ => return Err(CliError::invalid("empty sweep")),
        },
    };
    let mut columns = vec![sweep.variable.clone()];
    columns.extend(names.iter().map(|n| n.to_string()));
    let mut table = Table::new(columns);
    let mut warnings = Vec::new();
    for (&v, r) in values.iter().zip(results) {
        let mut row = vec![v];
        match r {
            Ok(out) => row.extend(out.iter().map(|o| o.1)),
            Err(e) => {
                warnings.push(format!("{}={v}: {e}", sweep.variable));
                row.extend(std::iter::repeat_n(f64::NAN, names.len()));
            }
        }
        table.push(row)?;
    }
    Ok(Computed {
        table,
        single: false,
        warnings,
    })
}

/// Grid for the Fisher sweep: `[g_min, g_max]`, `g_max` defaulting to just
/// below threshold.
pub fn fisher_grid(params: &Params) -> Result<(f64, Vec<f64>)> {
    let gamma_norm = params.f64("gamma_norm")?;
    let g_th = threshold_g(gamma_norm);
    let g_min = params.f64_or("g_min", 0.5)?;
    let g_max = match params.parse::<f64>("g_max")? {
        Some(v) => v,
        None if g_th.is_finite() => SWEEP_CAP * g_th,
        None => {
            return Err(CliError::invalid(
                "no threshold for gamma_norm >= 2; pass --g-max",
            ))
        }
    };
    let scale = params.parse::<Scale>("scale")?.unwrap_or_default();
    let spec = SweepSpec::new("g", g_min, g_max, params.usize_or("points", 200)?, scale)?;
    Ok((
        gamma_norm,
        grid(spec.start, spec.stop, spec.points, spec.scale),
    ))
}

/// Normalized Fisher information over a grid of `g`; failed points become
/// NaN rows with a warning.
pub fn fisher_sweep_table(params: &Params, oracle_check: bool) -> Result<Computed> {
    let (gamma_norm, g_grid) = fisher_grid(params)?;
    let results = map_ordered(&g_grid, Execution::default(), |&g| {
        let v = normalized_fisher_at(g, gamma_norm)?;
        let check = if oracle_check {
            Some(normalized_fisher_v4(g, gamma_norm)?)
        } else {
            None
        };
        Ok::<_, CliError>((v, check))
    });
    let mut columns = vec!["g".to_string(), "normalized_fisher".to_string()];
    if oracle_check {
        columns.extend([
            "oracle_normalized_fisher".to_string(),
            "abs_diff".to_string(),
        ]);
    }
    let mut table = Table::new(columns);
    let mut warnings = Vec::new();
    for (&g, r) in g_grid.iter().zip(results) {
        let mut row = vec![g];
        match r {
            Ok((v, check)) => {
                row.push(v);
                if let Some(c) = check {
                    row.extend([c, (v - c).abs()]);
                }
            }
            Err(e) => {
                warnings.push(format!("g={g}: {e}"));
                row.extend(std::iter::repeat_n(f64::NAN, table.columns.len() - 1));
            }
        }
        table.push(row)?;
    }
    Ok(Computed {
        table,
        single: false,
        warnings,
    })
}

fn emit(
    computed: &Computed,
    output: &OutputSpec,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    let stdout_err = |e: std::io::Error| CliError::Io(format!("stdout: {e}"));
    let table = &computed.table;
    if let Some(path) = &output.csv {
        write_text(path, &csv_string(table)?)?;
    } else if computed.single {
        let row = &table.rows[0];
        if row.len() == 1 {
            writeln!(out, "{}", format_value(row[0])).map_err(stdout_err)?;
        } else {
            let width = table.columns.iter().map(String::len).max().unwrap_or(0);
            for (name, v) in table.columns.iter().zip(row) {
                writeln!(out, "{name:<width$}  {}", format_value(*v)).map_err(stdout_err)?;
            }
        }
    } else {
        out.write_all(csv_string(table)?.as_bytes())
            .map_err(stdout_err)?;
    }
    if let Some(path) = &output.svg {
        if table.columns.len() < 2 {
            return Err(CliError::invalid(
                "an SVG chart needs at least two columns; run a sweep",
            ));
        }
        let chart = svg_line_chart(
            table,
            &table.columns[0],
            &table.columns[1],
            output.log_x,
            output.log_y,
        )?;
        write_text(path, &chart.svg)?;
        if chart.skipped > 0 {
            let _ = writeln!(
                err,
                "warning: {} points left out of the chart",
                chart.skipped
            );
        }
    }
    for w in &computed.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    if !computed.warnings.is_empty() {
        let _ = writeln!(
            err,
            "warning: {} of {} sweep points failed",
            computed.warnings.len(),
            table.rows.len()
        );
    }
    Ok(())
}

/// Runs a parsed command line, writing results to `out` and warnings to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match build_job(cli)? {
        Job::Model(config) => {
            let computed = with_threads(config.threads, || evaluate(&config))??;
            emit(&computed, &config.output, out, err)
        }
        Job::FisherSweep {
            params,
            mut output,
            oracle_check,
            threads,
        } => {
            // The curve spans orders of magnitude.
            output.log_y = true;
            let computed = with_threads(threads, || fisher_sweep_table(&params, oracle_check))??;
            emit(&computed, &output, out, err)
        }
    }
}
