use std::path::Path;
use std::process::{Command, Output};

fn critdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn value(text: &str, name: &str) -> f64 {
    text.lines()
        .find_map(|l| {
            let mut it = l.split_whitespace();
            (it.next() == Some(name)).then(|| it.next().unwrap().parse().unwrap())
        })
        .unwrap_or_else(|| panic!("no `{name}` in {text}"))
}

#[test]
fn helstrom_prints_single_value() {
    let o = critdet(&["helstrom", "--fidelity", "0.5", "--p0", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0.146447\n");
}

#[test]
fn oracle_check_pairs_values() {
    let o = critdet(&[
        "ising",
        "exact",
        "--n",
        "8",
        "--j",
        "1",
        "--g0",
        "0.9",
        "--g1",
        "1.1",
        "--t",
        "0.5",
        "--grid",
        "half-shifted",
        "--oracle-check",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!((value(&text, "fidelity") - value(&text, "oracle_fidelity")).abs() < 1e-6);
    assert!(value(&text, "abs_diff") < 1e-10);
}

#[test]
fn oracle_compare_forces_the_check() {
    let o = critdet(&[
        "oracle", "compare", "opo", "--g0", "0.8", "--g1", "1.25", "--t", "1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(value(&stdout(&o), "abs_diff") < 1e-6);
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["helstrom", "--fidelity", "2", "--p0", "0.5"][..],
        &["helstrom", "--fidelity", "0.5"],
        &[
            "helstrom",
            "--fidelity",
            "0.5",
            "--p0",
            "0.5",
            "--bogus",
            "1",
        ],
        &[
            "ising", "exact", "--n", "8", "--g0", "0.9", "--g1", "1.1", "--t", "1", "--grid", "odd",
        ],
        &[
            "helstrom", "--p0", "0.5", "--sweep", "p1", "--start", "0", "--stop", "1", "--points",
            "3",
        ],
        &["fisher", "sweep", "--gamma-norm", "2.5"],
    ] {
        let o = critdet(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn non_convergence_exits_3() {
    let o = critdet(&[
        "dicke",
        "fidelity",
        "--g0",
        "0.9",
        "--g1",
        "1.1",
        "--t",
        "2",
        "--truncation",
        "4",
        "--oracle-check",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("did not converge"));
}

#[test]
fn io_failures_exit_4() {
    let o = critdet(&[
        "helstrom",
        "--fidelity",
        "0.5",
        "--p0",
        "0.5",
        "--csv",
        "/nonexistent/dir/out.csv",
    ]);
    assert_eq!(o.status.code(), Some(4));
    let o = critdet(&["helstrom", "--config", "/nonexistent/run.conf"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn failed_sweep_points_are_flagged() {
    let o = critdet(&[
        "helstrom", "--p0", "0.5", "--sweep", "fidelity", "--start", "0.5", "--stop", "1.5",
        "--points", "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().last().unwrap().ends_with(",NaN"));
    assert!(stderr(&o).contains("1 of 3 sweep points failed"));
}

fn fisher_csv(dir: &Path, name: &str, extra: &[&str]) -> Vec<u8> {
    let path = dir.join(name);
    let mut args = vec![
        "fisher",
        "sweep",
        "--gamma-norm",
        "0.01",
        "--g-min",
        "0.5",
        "--points",
        "60",
    ];
    args.extend(["--csv", path.to_str().unwrap()]);
    args.extend(extra);
    let o = critdet(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    std::fs::read(path).unwrap()
}

#[test]
fn csv_is_byte_identical_across_runs_and_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let a = fisher_csv(dir.path(), "a.csv", &[]);
    let b = fisher_csv(dir.path(), "b.csv", &[]);
    let c = fisher_csv(dir.path(), "c.csv", &["--threads", "1"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("g,normalized_fisher\n"));
    assert!(!text.contains('\r'));
    assert_eq!(text.lines().count(), 61);
}

#[test]
fn svg_is_written_for_sweeps() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("fig.svg");
    let o = critdet(&[
        "fisher",
        "sweep",
        "--gamma-norm",
        "0.05",
        "--points",
        "20",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(svg).unwrap();
    assert!(text.starts_with("<svg") && text.contains("<polyline"));
}

#[test]
fn config_file_values_are_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    std::fs::write(
        &conf,
        "# chain\n[ising]\nn = 8\ng0 = 0.9\ng1 = 1.1\nt = 0.5\n",
    )
    .unwrap();
    let conf = conf.to_str().unwrap();
    let from_file = critdet(&["ising", "exact", "--config", conf, "--t", "1.0"]);
    let direct = critdet(&[
        "ising", "exact", "--n", "8", "--g0", "0.9", "--g1", "1.1", "--t", "1.0",
    ]);
    assert_eq!(from_file.status.code(), Some(0), "{}", stderr(&from_file));
    assert_eq!(stdout(&from_file), stdout(&direct));
}

#[test]
fn config_sweep_and_output_sections() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    let csv = dir.path().join("out.csv");
    std::fs::write(
        &conf,
        format!(
            "[opo]\ng0 = 0.8\ng1 = 1.25\nt = 0\n[sweep]\nvariable = t\nstart = 0\nstop = 2\npoints = 5\n[output]\ncsv = {}\n",
            csv.display()
        ),
    )
    .unwrap();
    let o = critdet(&["opo", "fidelity", "--config", conf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(csv).unwrap();
    assert!(text.starts_with("t,fidelity,neg_log_fidelity,engine_fidelity\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn config_rejects_unknown_keys() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("bad.conf");
    std::fs::write(&conf, "[ising]\nsites = 8\n").unwrap();
    let o = critdet(&["ising", "exact", "--config", conf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown key `sites`"));
}
