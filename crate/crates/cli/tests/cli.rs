//! End-to-end checks of the binary: exit codes, column contracts,
//! determinism, and flag/job equivalence.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kgscatter"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn csv_rows(output: &Output) -> Vec<Vec<String>> {
    stdout(output)
        .lines()
        .map(|line| line.split(',').map(str::to_string).collect())
        .collect()
}

fn column(rows: &[Vec<String>], name: &str) -> usize {
    rows[0].iter().position(|h| h == name).expect("column exists")
}

#[test]
fn free_particle_phase_shift_is_zero() {
    let out = run(&[
        "phase-shift",
        "--potential",
        "varshni",
        "--mode",
        "rel",
        "--a",
        "0",
        "--b",
        "0",
        "--beta",
        "0.5",
        "--mass",
        "1",
        "--energy",
        "2",
        "--l",
        "0",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 2);
    let delta: f64 = rows[1][column(&rows, "delta")].parse().unwrap();
    assert!(delta.abs() < 1e-10, "delta = {delta}");
}

#[test]
fn numeric_flags_echo_exactly_as_given() {
    let out = run(&[
        "phase-shift",
        "--potential",
        "hellmann",
        "--mode",
        "rel",
        "--a",
        "2",
        "--b",
        "1",
        "--beta",
        "0.2",
        "--mass",
        "1",
        "--energy",
        "1",
        "--l",
        "0",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    for (name, want) in [("a", "2"), ("b", "1"), ("beta", "0.2"), ("mass_or_mu", "1"), ("energy", "1")] {
        assert_eq!(rows[1][column(&rows, name)], want, "column {name}");
    }
    assert_eq!(rows[1][column(&rows, "below_threshold")], "false");
}

#[test]
fn missing_required_flag_is_a_usage_error() {
    let out = run(&[
        "phase-shift",
        "--potential",
        "hellmann",
        "--mode",
        "rel",
        "--mass",
        "1",
        "--energy",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--beta"), "stderr: {err}");
}

#[test]
fn degenerate_channel_exits_2_unless_skipped() {
    let args = [
        "phase-shift",
        "--potential",
        "varshni-shukla",
        "--mode",
        "rel",
        "--b",
        "1",
        "--beta",
        "0.2",
        "--mass",
        "1",
        "--energy",
        "1",
        "--l",
        "0",
    ];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(2));

    let mut skipped = args.to_vec();
    skipped.push("--skip-degenerate");
    let out = run(&skipped);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(*rows[0].last().unwrap(), "reason");
    assert_eq!(rows[1][column(&rows, "delta")], "");
    assert!(rows[1].last().unwrap().contains("degenerate"));
}

#[test]
fn below_threshold_rows_are_flagged() {
    let out = run(&[
        "phase-shift",
        "--potential",
        "varshni",
        "--mode",
        "rel",
        "--a",
        "2",
        "--b",
        "1",
        "--beta",
        "0.6",
        "--mass",
        "1",
        "--energy",
        "1",
        "--l",
        "0",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows[1][column(&rows, "below_threshold")], "true");
    assert_eq!(rows[1][column(&rows, "k_re")], "0");
}

#[test]
fn bound_nr_closed_form_values() {
    let out = run(&[
        "bound",
        "--potential",
        "hellmann",
        "--mode",
        "nr",
        "--a",
        "2",
        "--b",
        "1",
        "--beta",
        "0.2",
        "--mu",
        "1",
        "--energy",
        "0",
        "--l",
        "0",
        "--n-max",
        "1",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 3);
    let e0: f64 = rows[1][column(&rows, "E")].parse().unwrap();
    let e1: f64 = rows[2][column(&rows, "E")].parse().unwrap();
    assert!((e0 + 0.805).abs() < 1e-9);
    assert!((e1 + 0.445).abs() < 1e-9);
}

#[test]
fn bound_flags_redundant_poles_of_constant_potentials() {
    let out = run(&[
        "bound",
        "--potential",
        "varshni-shukla",
        "--mode",
        "nr",
        "--b",
        "0",
        "--beta",
        "0.2",
        "--mu",
        "1",
        "--energy",
        "0",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows[1][column(&rows, "suspect_redundant")], "true");
    let e: f64 = rows[1][column(&rows, "E")].parse().unwrap();
    assert!((e + 0.005).abs() < 1e-12);
}

#[test]
fn wavefunction_emits_requested_samples() {
    let out = run(&[
        "wavefunction",
        "--potential",
        "hellmann",
        "--mode",
        "rel",
        "--a",
        "0.5",
        "--b",
        "1",
        "--beta",
        "0.3",
        "--mass",
        "1",
        "--energy",
        "2",
        "--l",
        "1",
        "--rmax",
        "10",
        "--samples",
        "7",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows[0], ["r", "u_re", "u_im"]);
    assert_eq!(rows.len(), 8);
    let r_last: f64 = rows[7][0].parse().unwrap();
    assert_eq!(r_last, 10.0);
}

#[test]
fn table_reports_run_for_all_ids() {
    for id in ["1", "2", "3", "4", "5", "6"] {
        let out = run(&["table", "--id", id]);
        assert!(out.status.success(), "table {id}");
        let text = stdout(&out);
        assert!(text.starts_with("table_id,"), "table {id} header");
    }
    // degenerate channels are flagged explicitly
    let out = run(&["table", "--id", "3"]);
    assert!(stdout(&out).contains("degenerate"));
    // unknown id is a numeric domain error
    let out = run(&["table", "--id", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_text_format_summarizes() {
    let out = run(&["table", "--id", "6", "--format", "text", "--convention", "wrapped"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("structural invariants: ok"));
    assert!(text.contains("invalid"));
    assert!(!text.contains('\x1b'), "NO_COLOR must disable ANSI");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "table", "--id", "4",
    ];
    let first = stdout(&run(&args));
    let second = stdout(&run(&args));
    assert_eq!(first, second);
    assert!(!first.contains("stamp"));
}

#[test]
fn stamp_is_opt_in_and_prefixes_the_report() {
    let out = run(&["table", "--id", "5", "--stamp"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# stamp: "), "got {text:.40}");
    assert!(text.lines().nth(1).unwrap().starts_with("table_id,"));
}

#[test]
fn sweep_flags_and_job_file_agree() {
    let flag_run = run(&[
        "sweep",
        "--potential",
        "hellmann",
        "--mode",
        "rel",
        "--a",
        "2",
        "--b",
        "1",
        "--mass",
        "1",
        "--energy",
        "1",
        "--l",
        "0,1",
        "--variable",
        "beta",
        "--start",
        "0.2",
        "--stop",
        "1.0",
        "--count",
        "5",
    ]);
    assert!(flag_run.status.success());

    let dir = tempfile::tempdir().unwrap();
    let job_path = dir.path().join("job.json");
    std::fs::write(
        &job_path,
        r#"[{"potential":"hellmann","mode":"rel","a":2.0,"b":1.0,"mass":1.0,"energy":1.0,"l":[0,1],"variable":"beta","start":0.2,"stop":1.0,"count":5}]"#,
    )
    .unwrap();
    let job_run = run(&["sweep", "--job", job_path.to_str().unwrap()]);
    assert!(job_run.status.success());
    assert_eq!(stdout(&flag_run), stdout(&job_run));
}

#[test]
fn sweep_b_requires_base_beta() {
    let out = run(&[
        "sweep",
        "--potential",
        "hellmann",
        "--mode",
        "rel",
        "--a",
        "2",
        "--mass",
        "1",
        "--energy",
        "1",
        "--variable",
        "b",
        "--start",
        "-2",
        "--stop",
        "2",
        "--count",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_format_is_well_formed() {
    let out = run(&[
        "phase-shift",
        "--potential",
        "hellmann",
        "--mode",
        "nr",
        "--a",
        "2",
        "--b",
        "1",
        "--beta",
        "0.2",
        "--mu",
        "1",
        "--energy",
        "1",
        "--l",
        "0,1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["potential"], "hellmann");
    assert_eq!(rows[0]["l"], 0);
    assert!(rows[0]["delta"].is_f64());
}

#[test]
fn validate_specfun_suite_passes() {
    let out = run(&["validate", "--suite", "specfun"]);
    assert!(out.status.success(), "stdout: {}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("[PASS]").count(), 3);
}

#[test]
fn validate_unknown_suite_is_usage_error() {
    let out = run(&["validate", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
}
