//! The validation suite: analytically forced identities, differential
//! oracles and limit checks, each reported as a pass/fail line with the
//! measured value. The CLI `validate` command and the acceptance test
//! target both run these.
//!
//! The reproduction report over the published tables is informational; the
//! checks here rest only on identities the formulas force.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;

use crate::error::Error;
use crate::model::{Kinematics, PotentialSpec};
use crate::oracle::{self, circle_distance_mod_pi};
use crate::refdata::{self, EntryStatus};
use crate::scattering::phase_shift;
use crate::specfun::{log_gamma, ArgConvention};
use crate::spectra::{nr_energy, solve_rel_levels};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} - {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Specfun,
    Oracle,
    Spectra,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "specfun" => Ok(Suite::Specfun),
            "oracle" => Ok(Suite::Oracle),
            "spectra" => Ok(Suite::Spectra),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?} (specfun|oracle|spectra|all)")),
        }
    }
}

/// Criteria included in each suite; `all` additionally runs the table
/// reproduction report.
pub fn suite_criteria(suite: Suite) -> &'static [u8] {
    match suite {
        Suite::Specfun => &[1, 2, 8],
        Suite::Oracle => &[3, 7],
        Suite::Spectra => &[4, 5, 6],
        Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9],
    }
}

pub fn run_suite(suite: Suite) -> Vec<CriterionReport> {
    suite_criteria(suite)
        .iter()
        .map(|&id| run_criterion(id))
        .collect()
}

pub fn run_criterion(id: u8) -> CriterionReport {
    match id {
        1 => criterion_1_free_particle(),
        2 => criterion_2_structural_invariants(),
        3 => criterion_3_differential_oracle(),
        4 => criterion_4_coulomb_limit(),
        5 => criterion_5_shooting_vs_closed_form(),
        6 => criterion_6_nr_limit_gap(),
        7 => criterion_7_wavefunction_residual(),
        8 => criterion_8_specfun_accuracy(),
        9 => criterion_9_table_report(),
        _ => CriterionReport {
            id,
            name: "unknown",
            passed: false,
            detail: format!("no criterion with id {id}"),
        },
    }
}

fn rel(e: f64, m: f64) -> Kinematics {
    Kinematics::relativistic(m, e).unwrap()
}

pub fn criterion_1_free_particle() -> CriterionReport {
    let spec = PotentialSpec::varshni(0.0, 0.0, 0.2).unwrap();
    let kin = rel(2.0, 1.0);
    // warm-up so the timing below measures steady-state cost
    let _ = phase_shift(&spec, &kin, 0, ArgConvention::PrincipalLogGamma);

    let mut max_delta = 0.0_f64;
    let mut max_ms = 0.0_f64;
    for beta in [0.2, 0.5, 1.0] {
        let spec = PotentialSpec::varshni(0.0, 0.0, beta).unwrap();
        let start = Instant::now();
        let rec = match phase_shift(&spec, &kin, 0, ArgConvention::PrincipalLogGamma) {
            Ok(r) => r,
            Err(e) => {
                return CriterionReport {
                    id: 1,
                    name: "free-particle identity",
                    passed: false,
                    detail: format!("beta = {beta}: {e}"),
                }
            }
        };
        max_ms = max_ms.max(start.elapsed().as_secs_f64() * 1e3);
        max_delta = max_delta.max(rec.delta.abs());
    }
    CriterionReport {
        id: 1,
        name: "free-particle identity",
        passed: max_delta < 1e-10 && max_ms < 1.0,
        detail: format!("max |delta| = {max_delta:.3e} (limit 1e-10), max time {max_ms:.3} ms (limit 1 ms)"),
    }
}

/// Numeric value or a uniform error class, for spread checks over groups
/// where some members are legitimately degenerate.
#[derive(Debug, Clone, Copy, PartialEq)]
enum DeltaOutcome {
    Value(f64),
    Degenerate,
    Other,
}

fn delta_outcome(spec: &PotentialSpec, kin: &Kinematics, l: u32) -> DeltaOutcome {
    match phase_shift(spec, kin, l, ArgConvention::PrincipalLogGamma) {
        Ok(rec) => DeltaOutcome::Value(rec.delta),
        Err(Error::DegenerateChannel) => DeltaOutcome::Degenerate,
        Err(_) => DeltaOutcome::Other,
    }
}

fn spread(values: &[f64]) -> f64 {
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    hi - lo
}

pub fn criterion_2_structural_invariants() -> CriterionReport {
    let mut failures = Vec::new();
    let mut worst_a = 0.0_f64;
    let mut worst_b = 0.0_f64;
    let mut worst_c = 0.0_f64;

    // (a) Varshni delta identical across b when a = 0.
    let kin = rel(2.0, 1.0);
    for l in 0..4u32 {
        let deltas: Vec<f64> = [-2.0, -1.0, 0.0, 1.0, 2.0]
            .iter()
            .map(|&b| {
                match delta_outcome(&PotentialSpec::varshni(0.0, b, 0.2).unwrap(), &kin, l) {
                    DeltaOutcome::Value(v) => v,
                    other => {
                        failures.push(format!("(a) l={l} b={b}: {other:?}"));
                        f64::NAN
                    }
                }
            })
            .collect();
        let s = spread(&deltas);
        worst_a = worst_a.max(s);
        if s.is_nan() || s >= 1e-12 {
            failures.push(format!("(a) l={l}: spread {s:.3e} >= 1e-12"));
        }
    }

    // (b) three-potential coincidence at a = b = 0.
    for l in 0..4u32 {
        let specs = [
            PotentialSpec::varshni(0.0, 0.0, 0.2).unwrap(),
            PotentialSpec::hellmann(0.0, 0.0, 0.2).unwrap(),
            PotentialSpec::varshni_shukla(0.0, 0.2).unwrap(),
        ];
        let deltas: Vec<f64> = specs
            .iter()
            .map(|s| match delta_outcome(s, &kin, l) {
                DeltaOutcome::Value(v) => v,
                other => {
                    failures.push(format!("(b) l={l} {:?}: {other:?}", s.kind));
                    f64::NAN
                }
            })
            .collect();
        let s = spread(&deltas);
        worst_b = worst_b.max(s);
        if s.is_nan() || s >= 1e-12 {
            failures.push(format!("(b) l={l}: spread {s:.3e} >= 1e-12"));
        }
    }

    // (c) relativistic Varshni-Shukla delta beta-independent at E = M.
    // At l = 0 the channel has k = 0 for every beta: the identical outcome
    // is the degenerate classification itself.
    let kin_em = rel(1.0, 1.0);
    let betas = [0.2, 0.4, 0.6, 0.8, 1.0];
    for l in [0u32, 1] {
        let outcomes: Vec<DeltaOutcome> = betas
            .iter()
            .map(|&beta| {
                delta_outcome(&PotentialSpec::varshni_shukla(1.0, beta).unwrap(), &kin_em, l)
            })
            .collect();
        if outcomes.iter().all(|o| matches!(o, DeltaOutcome::Value(_))) {
            let deltas: Vec<f64> = outcomes
                .iter()
                .map(|o| match o {
                    DeltaOutcome::Value(v) => *v,
                    _ => unreachable!(),
                })
                .collect();
            let s = spread(&deltas);
            worst_c = worst_c.max(s);
            if s.is_nan() || s >= 1e-9 {
                failures.push(format!("(c) l={l}: spread {s:.3e} >= 1e-9"));
            }
        } else if !outcomes.iter().all(|o| *o == outcomes[0]) {
            failures.push(format!("(c) l={l}: mixed outcomes {outcomes:?}"));
        }
    }

    CriterionReport {
        id: 2,
        name: "structural table invariants",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!(
                "spreads: b-independence {worst_a:.2e}, coincidence {worst_b:.2e}, beta-independence {worst_c:.2e}"
            )
        } else {
            failures.join("; ")
        },
    }
}

fn differential_cases() -> Vec<(PotentialSpec, u32)> {
    let mut cases = Vec::new();
    for l in 0..3u32 {
        for a in [0.0, 0.5] {
            cases.push((PotentialSpec::varshni(a, 1.0, 0.3).unwrap(), l));
            cases.push((PotentialSpec::hellmann(a, 1.0, 0.3).unwrap(), l));
        }
        cases.push((PotentialSpec::varshni_shukla(1.0, 0.3).unwrap(), l));
    }
    cases
}

pub fn criterion_3_differential_oracle() -> CriterionReport {
    let kin = rel(2.0, 1.0);
    let cases = differential_cases();
    let n = cases.len();
    let mut worst = 0.0_f64;
    let mut slowest = 0.0_f64;
    let mut failures = Vec::new();
    for (spec, l) in cases {
        let start = Instant::now();
        let result = phase_shift(&spec, &kin, l, ArgConvention::PrincipalLogGamma)
            .map_err(|e| format!("{e}"))
            .and_then(|rec| {
                oracle::measure_phase_shift(&spec, &kin, l)
                    .map(|num| (rec.delta, num.delta_numeric))
                    .map_err(|e| format!("{e}"))
            });
        let secs = start.elapsed().as_secs_f64();
        slowest = slowest.max(secs);
        match result {
            Ok((analytic, numeric)) => {
                let d = circle_distance_mod_pi(analytic, numeric);
                worst = worst.max(d);
                if d.is_nan() || d >= 1e-3 {
                    failures.push(format!("{:?} a={} l={l}: distance {d:.2e}", spec.kind, spec.a));
                }
                if secs >= 1.0 {
                    failures.push(format!("{:?} a={} l={l}: took {secs:.2} s", spec.kind, spec.a));
                }
            }
            Err(e) => failures.push(format!("{:?} a={} l={l}: {e}", spec.kind, spec.a)),
        }
    }
    CriterionReport {
        id: 3,
        name: "differential oracle (analytic vs Numerov)",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{n} cases, worst circle distance {worst:.2e} (limit 1e-3), slowest {slowest:.2} s")
        } else {
            failures.join("; ")
        },
    }
}

pub fn criterion_4_coulomb_limit() -> CriterionReport {
    let errs: Vec<f64> = [1e-3, 1e-4]
        .iter()
        .map(|&beta| {
            let spec = PotentialSpec::hellmann(1.0, 0.0, beta).unwrap();
            (nr_energy(&spec, 1.0, 1.0, 0, 0).unwrap() + 0.5).abs()
        })
        .collect();
    let ratio = errs[0] / errs[1];
    let passed = errs[0] < 2e-3 && errs[1] < 2e-4 && (8.0..=12.0).contains(&ratio);
    CriterionReport {
        id: 4,
        name: "Coulomb limit of the Hellmann spectrum",
        passed,
        detail: format!(
            "|E + 1/2| = {:.3e} at beta=1e-3, {:.3e} at 1e-4, ratio {ratio:.2} (want 10 +/- 20%)",
            errs[0], errs[1]
        ),
    }
}

pub fn criterion_5_shooting_vs_closed_form() -> CriterionReport {
    let spec = PotentialSpec::hellmann(2.0, 1.0, 0.2).unwrap();
    let kin = Kinematics::non_relativistic(1.0, 1.0, 0.0).unwrap();
    let cases: [(u32, u32, (f64, f64)); 3] = [
        (0, 0, (-1.5, -0.6)),
        (1, 0, (-0.6, -0.41)),
        (0, 1, (-0.7, -0.365)),
    ];
    let start = Instant::now();
    let mut worst = 0.0_f64;
    let mut failures = Vec::new();
    for (n, l, window) in cases {
        let closed = nr_energy(&spec, 1.0, 1.0, l, n).unwrap();
        match oracle::shoot_bound_state(&spec, &kin, l, window, n) {
            Ok(level) => {
                let diff = (level.energy - closed).abs();
                worst = worst.max(diff);
                if diff.is_nan() || diff >= 1e-6 {
                    failures.push(format!("(n={n}, l={l}): |diff| = {diff:.2e}"));
                }
            }
            Err(e) => failures.push(format!("(n={n}, l={l}): {e}")),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 10.0 {
        failures.push(format!("total {secs:.1} s >= 10 s"));
    }
    CriterionReport {
        id: 5,
        name: "closed form vs shooting",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("worst |nr_energy - shooting| = {worst:.2e} (limit 1e-6), total {secs:.1} s")
        } else {
            failures.join("; ")
        },
    }
}

/// Gap between the relativistic n = 0 level (the root nearest M + E_nr)
/// and the non-relativistic energy at mu = M.
fn nr_limit_gap(spec: &PotentialSpec, mass: f64) -> Option<f64> {
    let e_nr = nr_energy(spec, mass, 1.0, 0, 0).ok()?;
    let levels = solve_rel_levels(spec, mass, 0, 0, None);
    levels
        .iter()
        .map(|lev| ((lev.energy - mass) - e_nr).abs())
        .min_by(f64::total_cmp)
}

pub fn criterion_6_nr_limit_gap() -> CriterionReport {
    let specs = [
        PotentialSpec::varshni(0.5, 1.0, 0.1).unwrap(),
        PotentialSpec::hellmann(0.5, 1.0, 0.1).unwrap(),
        PotentialSpec::varshni_shukla(1.0, 0.1).unwrap(),
    ];
    let mut lines = Vec::new();
    let mut passed = true;
    for spec in specs {
        let g50 = nr_limit_gap(&spec, 50.0);
        let g100 = nr_limit_gap(&spec, 100.0);
        match (g50, g100) {
            (Some(g50), Some(g100)) => {
                let ratio = g100 / g50;
                let ok = (0.3..=0.7).contains(&ratio);
                passed &= ok;
                lines.push(format!(
                    "{:?}: g(50)={g50:.4e}, g(100)={g100:.4e}, ratio {ratio:.3}{}",
                    spec.kind,
                    if ok { "" } else { " OUT OF [0.3, 0.7]" }
                ));
            }
            _ => {
                passed = false;
                lines.push(format!("{:?}: no n=0 level found", spec.kind));
            }
        }
    }
    CriterionReport {
        id: 6,
        name: "relativistic-to-NR gap halving",
        passed,
        detail: lines.join("; "),
    }
}

pub fn criterion_7_wavefunction_residual() -> CriterionReport {
    let kin = rel(2.0, 1.0);
    let specs = [
        PotentialSpec::varshni(0.5, 1.0, 0.3).unwrap(),
        PotentialSpec::hellmann(0.5, 1.0, 0.3).unwrap(),
        PotentialSpec::varshni_shukla(1.0, 0.3).unwrap(),
    ];
    let l = 1u32;
    let h = 1e-3;
    let rs: Vec<f64> = (0..=9900).map(|i| 0.1 + h * i as f64).collect();
    let mut worst = 0.0_f64;
    let mut failures = Vec::new();
    for spec in specs {
        let samples = match crate::scattering::radial_wavefunction(&spec, &kin, l, &rs) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("{:?}: {e}", spec.kind));
                continue;
            }
        };
        let ksq = crate::model::k_squared(&spec, &kin, l);
        let mut max_res = 0.0_f64;
        let mut scale = 0.0_f64;
        for i in 1..samples.len() - 1 {
            let w = oracle::effective_potential(&spec, &kin, l, samples[i].r).unwrap();
            let second =
                (samples[i + 1].u - 2.0 * samples[i].u + samples[i - 1].u) / (h * h);
            let res = (second + (ksq - w) * samples[i].u).norm();
            max_res = max_res.max(res);
            scale = scale.max((ksq.abs() + w.abs()) * samples[i].u.norm());
        }
        let relative = max_res / scale;
        worst = worst.max(relative);
        if relative.is_nan() || relative >= 1e-6 {
            failures.push(format!("{:?}: relative residual {relative:.2e}", spec.kind));
        }
    }
    CriterionReport {
        id: 7,
        name: "wave function satisfies the radial equation",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("worst second-difference residual {worst:.2e} (limit 1e-6) on r in [0.1, 10]")
        } else {
            failures.join("; ")
        },
    }
}

pub fn criterion_8_specfun_accuracy() -> CriterionReport {
    let mut rng = Xorshift64(0x9e3779b97f4a7c15);
    let mut worst = 0.0_f64;
    let mut failures = Vec::new();
    let mut checked = 0usize;
    while checked < 100 {
        let m = (rng.next_u64() % 31) as i32 - 15;
        let mag = 0.25 + 11.75 * rng.next_f64();
        let y = if rng.next_u64() & 1 == 0 { mag } else { -mag };
        let z = Complex64::new(m as f64, y);
        if z.norm() > 20.0 {
            continue;
        }
        checked += 1;
        let want = reference::log_gamma_integer_re(m, y);
        match log_gamma(z) {
            Ok(got) => {
                let rel_err = (got - want).norm() / want.norm();
                worst = worst.max(rel_err);
                if rel_err.is_nan() || rel_err >= 1e-10 {
                    failures.push(format!("z = {z}: rel err {rel_err:.2e}"));
                }
            }
            Err(e) => failures.push(format!("z = {z}: {e}")),
        }
    }
    // reflection identity |Γ(iy)|² = π/(y sinh πy)
    let mut worst_refl = 0.0_f64;
    for y in [0.5, 1.0, 2.0, 5.0] {
        let lg = log_gamma(Complex64::new(0.0, y)).unwrap();
        let got = (2.0 * lg.re).exp();
        let want = PI / (y * (PI * y).sinh());
        let rel_err = (got - want).abs() / want;
        worst_refl = worst_refl.max(rel_err);
        if rel_err.is_nan() || rel_err >= 1e-10 {
            failures.push(format!("reflection at y = {y}: rel err {rel_err:.2e}"));
        }
    }
    CriterionReport {
        id: 8,
        name: "log-gamma accuracy vs series oracle",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("100 points: worst rel err {worst:.2e} (limit 1e-10); reflection worst {worst_refl:.2e}")
        } else {
            failures.join("; ")
        },
    }
}

pub fn criterion_9_table_report() -> CriterionReport {
    let mut failures = Vec::new();
    let expected_degenerate = [(1u8, 5usize), (2, 0), (3, 15), (4, 2), (5, 0), (6, 0)];
    for conv in [ArgConvention::PrincipalLogGamma, ArgConvention::WrappedArg] {
        for (id, want) in expected_degenerate {
            match refdata::compare_table(id, conv) {
                Ok(report) => {
                    let got = report.count(EntryStatus::Degenerate);
                    if got != want {
                        failures.push(format!(
                            "table {id} ({conv}): {got} degenerate entries, expected {want}"
                        ));
                    }
                }
                Err(e) => failures.push(format!("table {id} ({conv}): {e}")),
            }
            match refdata::structural_violations(id, conv) {
                Ok(v) if v.is_empty() => {}
                Ok(v) => failures.extend(v),
                Err(e) => failures.push(format!("table {id} ({conv}): {e}")),
            }
        }
    }
    CriterionReport {
        id: 9,
        name: "reproduction report over all tables",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "6 tables x 2 conventions classified; degenerate entries flagged; structural invariants hold"
                .to_string()
        } else {
            failures.join("; ")
        },
    }
}

struct Xorshift64(u64);

impl Xorshift64 {
    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Reference values computed by routes independent of the Stirling-series
/// implementation in `specfun`: the Kummer series for argΓ(1+iy), the
/// reflection identity for |Γ(1+iy)|, and the exact Γ recurrence.
pub mod reference {
    use num_complex::Complex64;
    use std::f64::consts::PI;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    /// Σ_{k >= a} k^{-m} by Euler-Maclaurin; accurate to ~1e-25 for a >~ 400.
    fn hurwitz_tail(m: f64, a: f64) -> f64 {
        a.powf(1.0 - m) / (m - 1.0) + 0.5 * a.powf(-m) + m * a.powf(-m - 1.0) / 12.0
            - m * (m + 1.0) * (m + 2.0) * a.powf(-m - 3.0) / 720.0
            + m * (m + 1.0) * (m + 2.0) * (m + 3.0) * (m + 4.0) * a.powf(-m - 5.0) / 30240.0
    }

    /// argΓ(1+iy) = -γ y + Σ_{k>=1} [y/k - arctan(y/k)], the partial sum
    /// accelerated with ζ-tail corrections. The explicit summation length
    /// scales with y so the tail expansion keeps converging.
    pub fn arg_gamma_one_plus_iy(y: f64) -> f64 {
        if y < 0.0 {
            return -arg_gamma_one_plus_iy(-y);
        }
        let cut = 400.max((10.0 * y).ceil() as usize);
        let mut sum = -EULER_GAMMA * y;
        for k in 1..=cut {
            let t = y / k as f64;
            sum += t - t.atan();
        }
        // Σ_{k>K} [y/k - atan(y/k)] = Σ_j (-1)^{j+1} y^{2j+1}/(2j+1) ζ(2j+1, K+1)
        let a = (cut + 1) as f64;
        let mut sign = 1.0;
        for j in 1..=12 {
            let m = (2 * j + 1) as f64;
            sum += sign * (y / a).powf(m) * a.powf(m) / m * hurwitz_tail(m, a);
            sign = -sign;
        }
        sum
    }

    /// ln |Γ(1+iy)| from |Γ(1+iy)|² = πy / sinh(πy).
    pub fn ln_abs_gamma_one_plus_iy(y: f64) -> f64 {
        let x = PI * y.abs();
        // ln sinh x = x + ln(1 - e^{-2x}) - ln 2, stable for large x
        let ln_sinh = x + (1.0 - (-2.0 * x).exp()).ln() - 2.0_f64.ln();
        0.5 * ((PI * y.abs()).ln() - ln_sinh)
    }

    /// Principal log Γ(m + iy) for integer m and y != 0, assembled from the
    /// two identities above plus the exact recurrence along Re.
    pub fn log_gamma_integer_re(m: i32, y: f64) -> Complex64 {
        if y < 0.0 {
            return log_gamma_integer_re(m, -y).conj();
        }
        let mut value = Complex64::new(ln_abs_gamma_one_plus_iy(y), arg_gamma_one_plus_iy(y));
        if m >= 1 {
            for j in 1..m {
                value += Complex64::new(j as f64, y).ln();
            }
        } else {
            for j in m..=0 {
                value -= Complex64::new(j as f64, y).ln();
            }
        }
        value
    }
}
