//! Command-line front end: single-point evaluations, parameter sweeps,
//! table reproduction, bound-state spectra, wave-function dumps and the
//! validation suite, emitting deterministic CSV or JSON.
//!
//! Exit codes: 0 success, 1 usage, 2 numeric domain error,
//! 3 invariant/validation failure, 4 convergence failure.

mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kgscatter::model::{Kinematics, PotentialKind, PotentialSpec};
use kgscatter::refdata::{self, EntryStatus};
use kgscatter::scattering;
use kgscatter::spectra;
use kgscatter::validate::{self, Suite};
use kgscatter::{ArgConvention, Error};

use output::{csv_safe, fmt_sig, OutputFormat, Rows};

#[derive(Parser)]
#[command(
    name = "kgscatter",
    about = "Partial-wave phase shifts, wave functions and bound states for the Varshni, Hellmann and Varshni-Shukla potentials",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Phase shifts for one parameter set, one row per l
    PhaseShift(PhaseShiftArgs),
    /// Bound-state energies (closed-form non-relativistic, pole-search relativistic)
    Bound(BoundArgs),
    /// Radial wave-function samples
    Wavefunction(WavefunctionArgs),
    /// Reproduction report for one embedded reference table
    Table(TableArgs),
    /// Sweep beta or b and emit plottable rows
    Sweep(SweepArgs),
    /// Run the validation suite
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PotentialArg {
    Varshni,
    Hellmann,
    #[value(alias = "vsp")]
    VarshniShukla,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Rel,
    Nr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Principal,
    Wrapped,
}

impl From<ConventionArg> for ArgConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Principal => ArgConvention::PrincipalLogGamma,
            ConventionArg::Wrapped => ArgConvention::WrappedArg,
        }
    }
}

/// Physics flags shared by every evaluating command.
#[derive(Args, Debug, Clone)]
struct ProblemArgs {
    /// Potential model
    #[arg(long, value_enum)]
    potential: PotentialArg,
    /// Relativistic (Klein-Gordon, natural units) or non-relativistic mode
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Strength a (Varshni constant shift / Hellmann Coulomb strength); must
    /// be 0 for varshni-shukla
    #[arg(long, default_value_t = 0.0)]
    a: f64,
    /// Strength b
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    /// Screening parameter beta > 0
    #[arg(long)]
    beta: f64,
    /// Rest mass M (relativistic mode)
    #[arg(long)]
    mass: Option<f64>,
    /// Reduced mass mu (non-relativistic mode)
    #[arg(long)]
    mu: Option<f64>,
    /// Planck constant (non-relativistic mode)
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    /// Energy E
    #[arg(long)]
    energy: f64,
}

#[derive(Debug, Clone)]
struct Problem {
    spec: PotentialSpec,
    kin: Kinematics,
    mass_or_mu: f64,
}

impl ProblemArgs {
    fn build(&self) -> Result<Problem, CliError> {
        let kind = match self.potential {
            PotentialArg::Varshni => PotentialKind::Varshni,
            PotentialArg::Hellmann => PotentialKind::Hellmann,
            PotentialArg::VarshniShukla => PotentialKind::VarshniShukla,
        };
        let spec = PotentialSpec::new(kind, self.a, self.b, self.beta).map_err(CliError::Numeric)?;
        let (kin, mass_or_mu) = match self.mode {
            ModeArg::Rel => {
                let mass = self
                    .mass
                    .ok_or_else(|| CliError::Usage("--mass is required in rel mode".into()))?;
                (
                    Kinematics::relativistic(mass, self.energy).map_err(CliError::Numeric)?,
                    mass,
                )
            }
            ModeArg::Nr => {
                let mu = self
                    .mu
                    .ok_or_else(|| CliError::Usage("--mu is required in nr mode".into()))?;
                (
                    Kinematics::non_relativistic(mu, self.hbar, self.energy)
                        .map_err(CliError::Numeric)?,
                    mu,
                )
            }
        };
        Ok(Problem { spec, kin, mass_or_mu })
    }

    fn mode_name(&self) -> &'static str {
        match self.mode {
            ModeArg::Rel => "rel",
            ModeArg::Nr => "nr",
        }
    }
}

#[derive(Args)]
struct PhaseShiftArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Angular momenta, comma separated
    #[arg(long, value_delimiter = ',', default_value = "0")]
    l: Vec<u32>,
    #[arg(long, value_enum, default_value_t = ConventionArg::Principal)]
    convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Emit a row with an empty delta and a reason instead of failing on
    /// degenerate (k = 0) or Γ-pole channels
    #[arg(long)]
    skip_degenerate: bool,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    l: Vec<u32>,
    /// Highest radial quantum number
    #[arg(long, default_value_t = 0)]
    n_max: u32,
    /// Relativistic root-search window lower edge (default -M + 1e-6)
    #[arg(long)]
    window_lo: Option<f64>,
    /// Relativistic root-search window upper edge (default M + |a| + 1)
    #[arg(long)]
    window_hi: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Args)]
struct WavefunctionArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long, default_value_t = 0)]
    l: u32,
    /// Largest sampled radius (default 30/beta)
    #[arg(long)]
    rmax: Option<f64>,
    /// Number of samples
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Args)]
struct TableArgs {
    /// Table number, 1 to 6
    #[arg(long)]
    id: u8,
    #[arg(long, value_enum, default_value_t = ConventionArg::Principal)]
    convention: ConventionArg,
    /// csv (machine) or text (human) report
    #[arg(long, default_value = "csv")]
    format: String,
    /// Stamp the report header with the generation time
    #[arg(long)]
    stamp: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON job file defining one or more sweep cases
    #[arg(long, conflicts_with_all = ["potential", "mode", "variable"])]
    job: Option<std::path::PathBuf>,
    #[arg(long, value_enum)]
    potential: Option<PotentialArg>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, default_value_t = 0.0)]
    a: f64,
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    /// Base beta (required when sweeping b)
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    mass: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    #[arg(long)]
    energy: Option<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    l: Vec<u32>,
    /// Swept variable
    #[arg(long, value_enum)]
    variable: Option<SweepVariable>,
    #[arg(long)]
    start: Option<f64>,
    #[arg(long)]
    stop: Option<f64>,
    #[arg(long, default_value_t = 20)]
    count: usize,
    #[arg(long, value_enum, default_value_t = SweepScale::Linear)]
    scale: SweepScale,
    #[arg(long, value_enum, default_value_t = ConventionArg::Principal)]
    convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[arg(long)]
    skip_degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
enum SweepVariable {
    Beta,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
enum SweepScale {
    Linear,
    Log,
}

#[derive(Args)]
struct ValidateArgs {
    /// specfun | oracle | spectra | all
    #[arg(long, default_value = "all")]
    suite: String,
}

/// Command outcomes carrying the documented exit codes.
enum CliError {
    Usage(String),
    Numeric(Error),
    Validation(String),
    Convergence(Error),
    Io(std::io::Error),
}

impl CliError {
    fn from_core(e: Error) -> Self {
        match e {
            Error::Convergence { .. }
            | Error::NoRoot(..)
            | Error::NodeCount { .. }
            | Error::Match
            | Error::Overflow(..) => CliError::Convergence(e),
            other => CliError::Numeric(other),
        }
    }

    fn report(self) -> ExitCode {
        match self {
            CliError::Usage(msg) => {
                eprintln!("usage error: {msg}");
                ExitCode::from(1)
            }
            CliError::Numeric(e) => {
                eprintln!("numeric domain error: {e}");
                ExitCode::from(2)
            }
            CliError::Validation(msg) => {
                eprintln!("validation failure: {msg}");
                ExitCode::from(3)
            }
            CliError::Convergence(e) => {
                eprintln!("convergence failure: {e}");
                ExitCode::from(4)
            }
            CliError::Io(e) => {
                eprintln!("io error: {e}");
                ExitCode::from(1)
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with zero exit
            if e.use_stderr() {
                let _ = e.print();
                return ExitCode::from(1);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let result = match cli.command {
        Command::PhaseShift(args) => cmd_phase_shift(args),
        Command::Bound(args) => cmd_bound(args),
        Command::Wavefunction(args) => cmd_wavefunction(args),
        Command::Table(args) => cmd_table(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Validate(args) => cmd_validate(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // downstream consumers closing the pipe early is not our failure
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => e.report(),
    }
}

const PHASE_HEADER: [&str; 13] = [
    "potential",
    "mode",
    "l",
    "a",
    "b",
    "beta",
    "mass_or_mu",
    "energy",
    "k_re",
    "k_im",
    "below_threshold",
    "delta",
    "convention",
];

fn phase_row(
    problem: &Problem,
    mode: &'static str,
    l: u32,
    conv: ArgConvention,
    skip_degenerate: bool,
) -> Result<Vec<String>, CliError> {
    let spec = &problem.spec;
    let mut row = vec![
        spec.kind.to_string(),
        mode.to_string(),
        l.to_string(),
        fmt_sig(spec.a),
        fmt_sig(spec.b),
        fmt_sig(spec.beta),
        fmt_sig(problem.mass_or_mu),
        fmt_sig(problem.kin.energy()),
    ];
    match scattering::phase_shift(spec, &problem.kin, l, conv) {
        Ok(rec) => {
            row.extend([
                fmt_sig(rec.channel.k.re),
                fmt_sig(rec.channel.k.im),
                rec.below_threshold.to_string(),
                fmt_sig(rec.delta),
                conv.to_string(),
            ]);
            if skip_degenerate {
                row.push(String::new());
            }
            Ok(row)
        }
        Err(e @ (Error::DegenerateChannel | Error::Pole(_))) if skip_degenerate => {
            let k = kgscatter::model::wave_number(spec, &problem.kin, l).ok();
            row.extend([
                k.map(|(k, _)| fmt_sig(k.re)).unwrap_or_default(),
                k.map(|(k, _)| fmt_sig(k.im)).unwrap_or_default(),
                k.map(|(_, below)| below.to_string()).unwrap_or_default(),
                String::new(),
                conv.to_string(),
            ]);
            row.push(csv_safe(&e.to_string()));
            Ok(row)
        }
        Err(e) => Err(CliError::from_core(e)),
    }
}

fn cmd_phase_shift(args: PhaseShiftArgs) -> Result<(), CliError> {
    let problem = args.problem.build()?;
    let mut header = PHASE_HEADER.to_vec();
    if args.skip_degenerate {
        header.push("reason");
    }
    let mut rows = Rows::new(header);
    for &l in &args.l {
        rows.push(phase_row(
            &problem,
            args.problem.mode_name(),
            l,
            args.convention.into(),
            args.skip_degenerate,
        )?);
    }
    rows.emit(args.format, &mut std::io::stdout().lock())?;
    Ok(())
}

fn cmd_bound(args: BoundArgs) -> Result<(), CliError> {
    let problem = args.problem.build()?;
    let spec = &problem.spec;
    let mode = args.problem.mode_name();
    let mut rows = Rows::new(vec![
        "potential",
        "mode",
        "n",
        "l",
        "E",
        "residual",
        "suspect_redundant",
    ]);
    let suspect = spec.is_constant();
    for &l in &args.l {
        match args.problem.mode {
            ModeArg::Nr => {
                for n in 0..=args.n_max {
                    let e = spectra::nr_energy(spec, problem.mass_or_mu, args.problem.hbar, l, n)
                        .map_err(CliError::from_core)?;
                    rows.push(vec![
                        spec.kind.to_string(),
                        mode.to_string(),
                        n.to_string(),
                        l.to_string(),
                        fmt_sig(e),
                        "0".to_string(),
                        suspect.to_string(),
                    ]);
                }
            }
            ModeArg::Rel => {
                let window = match (args.window_lo, args.window_hi) {
                    (Some(lo), Some(hi)) => Some((lo, hi)),
                    (None, None) => None,
                    _ => {
                        return Err(CliError::Usage(
                            "--window-lo and --window-hi must be given together".into(),
                        ))
                    }
                };
                let levels = spectra::solve_rel_levels(
                    spec,
                    problem.mass_or_mu,
                    l,
                    args.n_max,
                    window,
                );
                for lev in levels {
                    rows.push(vec![
                        spec.kind.to_string(),
                        mode.to_string(),
                        lev.n.to_string(),
                        lev.l.to_string(),
                        fmt_sig(lev.energy),
                        fmt_sig(lev.residual),
                        lev.suspect_redundant.to_string(),
                    ]);
                }
            }
        }
    }
    rows.emit(args.format, &mut std::io::stdout().lock())?;
    Ok(())
}

fn cmd_wavefunction(args: WavefunctionArgs) -> Result<(), CliError> {
    let problem = args.problem.build()?;
    if args.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let r_max = args.rmax.unwrap_or(30.0 / problem.spec.beta);
    if r_max.is_nan() || r_max <= 0.0 {
        return Err(CliError::Usage(format!("--rmax {r_max} must be > 0")));
    }
    let rs: Vec<f64> = (1..=args.samples)
        .map(|i| r_max * i as f64 / args.samples as f64)
        .collect();
    let samples = scattering::radial_wavefunction(&problem.spec, &problem.kin, args.l, &rs)
        .map_err(CliError::from_core)?;
    let mut rows = Rows::new(vec!["r", "u_re", "u_im"]);
    for s in samples {
        rows.push(vec![fmt_sig(s.r), fmt_sig(s.u.re), fmt_sig(s.u.im)]);
    }
    rows.emit(args.format, &mut std::io::stdout().lock())?;
    Ok(())
}

fn cmd_table(args: TableArgs) -> Result<(), CliError> {
    let conv: ArgConvention = args.convention.into();
    let report = refdata::compare_table(args.id, conv).map_err(CliError::from_core)?;
    let violations = refdata::structural_violations(args.id, conv).map_err(CliError::from_core)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();

    if args.stamp {
        let stamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        writeln!(out, "# stamp: {stamp}")?;
    }
    match args.format.as_str() {
        "csv" => {
            let mut rows = Rows::new(vec![
                "table_id",
                "mode",
                "potential",
                "l",
                "sweep_name",
                "sweep_value",
                "delta_published",
                "delta_computed",
                "abs_diff",
                "circle_diff_mod_2pi",
                "status",
                "coincidence",
            ]);
            for r in &report.entries {
                let e = &r.entry;
                rows.push(vec![
                    e.table_id.to_string(),
                    e.mode.to_string(),
                    e.kind.to_string(),
                    e.l.to_string(),
                    e.sweep_name.to_string(),
                    fmt_sig(e.sweep_value),
                    format!("{:.5}", e.delta_published),
                    r.delta_computed.map(fmt_sig).unwrap_or_default(),
                    r.abs_diff.map(fmt_sig).unwrap_or_default(),
                    r.circle_diff_mod_2pi.map(fmt_sig).unwrap_or_default(),
                    r.status.to_string(),
                    e.coincidence.to_string(),
                ]);
            }
            rows.emit(OutputFormat::Csv, &mut out)?;
        }
        "text" => {
            let color = std::env::var_os("NO_COLOR").is_none();
            let paint = |status: EntryStatus| -> String {
                if !color {
                    return status.to_string();
                }
                let code = match status {
                    EntryStatus::Match | EntryStatus::WrapMatch => "32",
                    EntryStatus::Mismatch => "31",
                    _ => "33",
                };
                format!("\x1b[{code}m{status}\x1b[0m")
            };
            writeln!(
                out,
                "table {} under the {} convention ({} entries)",
                report.table_id,
                report.convention,
                report.entries.len()
            )?;
            for r in &report.entries {
                let e = &r.entry;
                writeln!(
                    out,
                    "  {:<14} l={} {}={:<5} published {:>10.5}  computed {:>14}  {}",
                    e.kind.to_string(),
                    e.l,
                    e.sweep_name,
                    fmt_sig(e.sweep_value),
                    e.delta_published,
                    r.delta_computed.map(fmt_sig).unwrap_or_default(),
                    paint(r.status),
                )?;
            }
            for status in [
                EntryStatus::Match,
                EntryStatus::WrapMatch,
                EntryStatus::Mismatch,
                EntryStatus::Degenerate,
                EntryStatus::Pole,
                EntryStatus::Invalid,
            ] {
                writeln!(out, "  {:<11} {}", status.to_string(), report.count(status))?;
            }
            if violations.is_empty() {
                writeln!(out, "  structural invariants: ok")?;
            } else {
                for v in &violations {
                    writeln!(out, "  structural violation: {v}")?;
                }
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown table format {other:?} (csv|text)"
            )))
        }
    }
    if !violations.is_empty() {
        return Err(CliError::Validation(violations.join("; ")));
    }
    Ok(())
}

/// One sweep case; the JSON job file holds an array of these with the same
/// lower_snake_case keys as the CLI flags.
#[derive(Debug, Clone, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepCase {
    potential: String,
    mode: String,
    #[serde(default)]
    a: f64,
    #[serde(default)]
    b: f64,
    beta: Option<f64>,
    mass: Option<f64>,
    mu: Option<f64>,
    #[serde(default = "default_hbar")]
    hbar: f64,
    energy: f64,
    #[serde(default = "default_l")]
    l: Vec<u32>,
    variable: SweepVariable,
    start: f64,
    stop: f64,
    #[serde(default = "default_count")]
    count: usize,
    #[serde(default = "default_scale")]
    scale: SweepScale,
    #[serde(default = "default_convention")]
    convention: String,
    #[serde(default)]
    skip_degenerate: bool,
}

fn default_hbar() -> f64 {
    1.0
}
fn default_l() -> Vec<u32> {
    vec![0]
}
fn default_count() -> usize {
    20
}
fn default_scale() -> SweepScale {
    SweepScale::Linear
}
fn default_convention() -> String {
    "principal".into()
}

fn sweep_points(start: f64, stop: f64, count: usize, scale: SweepScale) -> Result<Vec<f64>, CliError> {
    if count == 0 {
        return Err(CliError::Usage("sweep count must be at least 1".into()));
    }
    if count > 1 && (start.is_nan() || stop.is_nan() || start >= stop) {
        return Err(CliError::Usage(format!(
            "sweep start {start} must be below stop {stop}"
        )));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    if scale == SweepScale::Log && start <= 0.0 {
        return Err(CliError::Usage("log sweeps need start > 0".into()));
    }
    let n = (count - 1) as f64;
    Ok((0..count)
        .map(|i| match scale {
            SweepScale::Linear => start + (stop - start) * i as f64 / n,
            SweepScale::Log => start * (stop / start).powf(i as f64 / n),
        })
        .collect())
}

fn run_sweep_case(case: &SweepCase, rows: &mut Rows) -> Result<(), CliError> {
    let conv = match case.convention.as_str() {
        "principal" => ArgConvention::PrincipalLogGamma,
        "wrapped" => ArgConvention::WrappedArg,
        other => {
            return Err(CliError::Usage(format!(
                "unknown convention {other:?} (principal|wrapped)"
            )))
        }
    };
    let potential = match case.potential.as_str() {
        "varshni" => PotentialArg::Varshni,
        "hellmann" => PotentialArg::Hellmann,
        "varshni-shukla" | "vsp" => PotentialArg::VarshniShukla,
        other => return Err(CliError::Usage(format!("unknown potential {other:?}"))),
    };
    let mode = match case.mode.as_str() {
        "rel" => ModeArg::Rel,
        "nr" => ModeArg::Nr,
        other => return Err(CliError::Usage(format!("unknown mode {other:?} (rel|nr)"))),
    };
    let points = sweep_points(case.start, case.stop, case.count, case.scale)?;
    let mode_name = match mode {
        ModeArg::Rel => "rel",
        ModeArg::Nr => "nr",
    };
    for &value in &points {
        let (beta, b) = match case.variable {
            SweepVariable::Beta => (value, case.b),
            SweepVariable::B => {
                let beta = case.beta.ok_or_else(|| {
                    CliError::Usage("--beta is required when sweeping b".into())
                })?;
                (beta, value)
            }
        };
        let problem = ProblemArgs {
            potential,
            mode,
            a: case.a,
            b,
            beta,
            mass: case.mass,
            mu: case.mu,
            hbar: case.hbar,
            energy: case.energy,
        }
        .build()?;
        for &l in &case.l {
            rows.push(phase_row(&problem, mode_name, l, conv, case.skip_degenerate)?);
        }
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let cases: Vec<SweepCase> = if let Some(path) = &args.job {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("bad job file {}: {e}", path.display())))?
    } else {
        let require = |name: &str, value: Option<f64>| {
            value.ok_or_else(|| CliError::Usage(format!("--{name} is required for a flag sweep")))
        };
        let potential = args
            .potential
            .ok_or_else(|| CliError::Usage("--potential is required".into()))?;
        let mode = args.mode.ok_or_else(|| CliError::Usage("--mode is required".into()))?;
        let variable = args
            .variable
            .ok_or_else(|| CliError::Usage("--variable is required".into()))?;
        vec![SweepCase {
            potential: match potential {
                PotentialArg::Varshni => "varshni".into(),
                PotentialArg::Hellmann => "hellmann".into(),
                PotentialArg::VarshniShukla => "varshni-shukla".into(),
            },
            mode: match mode {
                ModeArg::Rel => "rel".into(),
                ModeArg::Nr => "nr".into(),
            },
            a: args.a,
            b: args.b,
            beta: args.beta,
            mass: args.mass,
            mu: args.mu,
            hbar: args.hbar,
            energy: require("energy", args.energy)?,
            l: args.l.clone(),
            variable,
            start: require("start", args.start)?,
            stop: require("stop", args.stop)?,
            count: args.count,
            scale: args.scale,
            convention: match args.convention {
                ConventionArg::Principal => "principal".into(),
                ConventionArg::Wrapped => "wrapped".into(),
            },
            skip_degenerate: args.skip_degenerate,
        }]
    };

    let skip_any = cases.iter().any(|c| c.skip_degenerate);
    let mut header = PHASE_HEADER.to_vec();
    if skip_any {
        header.push("reason");
    }
    let mut rows = Rows::new(header);
    for case in &cases {
        if case.skip_degenerate != skip_any {
            return Err(CliError::Usage(
                "all job cases must agree on skip_degenerate (column layout)".into(),
            ));
        }
        run_sweep_case(case, &mut rows)?;
    }
    rows.emit(args.format, &mut std::io::stdout().lock())?;
    Ok(())
}

fn cmd_validate(args: ValidateArgs) -> Result<(), CliError> {
    let suite: Suite = args
        .suite
        .parse()
        .map_err(CliError::Usage)?;
    let reports = validate::run_suite(suite);
    let mut all_passed = true;
    for report in &reports {
        println!("{report}");
        all_passed &= report.passed;
    }
    if !all_passed {
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| format!("criterion {}", r.id))
            .collect();
        return Err(CliError::Validation(failed.join("; ")));
    }
    Ok(())
}
