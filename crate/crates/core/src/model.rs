//! Potentials, kinematics, and the per-channel parameter derivation shared
//! by all three potentials in both relativistic and non-relativistic modes.
//!
//! The radial equation after the screening substitution 1/r -> β/(1-e^{-βr})
//! is hypergeometric in z = 1 - e^{-βr}; each channel is characterised by
//! the wave number k, the index λ, the polynomial coefficients (P, Q, R)
//! and the ξ parameters built from the single radicand Q + R - k²/β².

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PotentialKind {
    Varshni,
    Hellmann,
    VarshniShukla,
}

impl std::fmt::Display for PotentialKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PotentialKind::Varshni => write!(f, "varshni"),
            PotentialKind::Hellmann => write!(f, "hellmann"),
            PotentialKind::VarshniShukla => write!(f, "varshni-shukla"),
        }
    }
}

/// One of the three screened potentials.
///
/// * Varshni:        V(r) = a [1 - (b/r) e^{-βr}]
/// * Hellmann:       V(r) = -a/r + (b/r) e^{-βr}
/// * Varshni-Shukla: V(r) = (b/r²) e^{-βr}
///
/// The Varshni-Shukla form has no `a`; construction rejects a nonzero `a`
/// there instead of silently ignoring it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    pub kind: PotentialKind,
    pub a: f64,
    pub b: f64,
    pub beta: f64,
}

impl PotentialSpec {
    pub fn new(kind: PotentialKind, a: f64, b: f64, beta: f64) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::Domain(format!("screening beta = {beta} must be > 0")));
        }
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain("potential strengths must be finite".into()));
        }
        if kind == PotentialKind::VarshniShukla && a != 0.0 {
            return Err(Error::Domain(format!(
                "varshni-shukla has no 'a' parameter (got a = {a}); pass 0"
            )));
        }
        Ok(PotentialSpec { kind, a, b, beta })
    }

    pub fn varshni(a: f64, b: f64, beta: f64) -> Result<Self> {
        Self::new(PotentialKind::Varshni, a, b, beta)
    }

    pub fn hellmann(a: f64, b: f64, beta: f64) -> Result<Self> {
        Self::new(PotentialKind::Hellmann, a, b, beta)
    }

    pub fn varshni_shukla(b: f64, beta: f64) -> Result<Self> {
        Self::new(PotentialKind::VarshniShukla, 0.0, b, beta)
    }

    /// Repulsive-range parameter of the Varshni-Shukla form, ρ = 1/β.
    pub fn rho(&self) -> f64 {
        1.0 / self.beta
    }

    /// True when the potential degenerates to a constant (or zero), which
    /// makes analytic pole "levels" redundant rather than physical.
    pub fn is_constant(&self) -> bool {
        match self.kind {
            PotentialKind::Varshni => self.a == 0.0 || self.b == 0.0,
            PotentialKind::Hellmann => self.a == 0.0 && self.b == 0.0,
            PotentialKind::VarshniShukla => self.b == 0.0,
        }
    }
}

/// Particle data. Relativistic mode uses natural units (ħ = c = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kinematics {
    Relativistic { mass: f64, energy: f64 },
    NonRelativistic { mu: f64, hbar: f64, energy: f64 },
}

impl Kinematics {
    pub fn relativistic(mass: f64, energy: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::Domain(format!("mass = {mass} must be > 0")));
        }
        if !energy.is_finite() {
            return Err(Error::Domain("energy must be finite".into()));
        }
        Ok(Kinematics::Relativistic { mass, energy })
    }

    pub fn non_relativistic(mu: f64, hbar: f64, energy: f64) -> Result<Self> {
        if !(mu.is_finite() && mu > 0.0) {
            return Err(Error::Domain(format!("mu = {mu} must be > 0")));
        }
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::Domain(format!("hbar = {hbar} must be > 0")));
        }
        if !energy.is_finite() {
            return Err(Error::Domain("energy must be finite".into()));
        }
        Ok(Kinematics::NonRelativistic { mu, hbar, energy })
    }

    pub fn is_relativistic(&self) -> bool {
        matches!(self, Kinematics::Relativistic { .. })
    }

    pub fn energy(&self) -> f64 {
        match *self {
            Kinematics::Relativistic { energy, .. } => energy,
            Kinematics::NonRelativistic { energy, .. } => energy,
        }
    }

    pub fn with_energy(&self, energy: f64) -> Self {
        match *self {
            Kinematics::Relativistic { mass, .. } => Kinematics::Relativistic { mass, energy },
            Kinematics::NonRelativistic { mu, hbar, .. } => {
                Kinematics::NonRelativistic { mu, hbar, energy }
            }
        }
    }

    /// The coupling pair (A, B) of the radial equation
    /// u'' + [B - A V(r) - l(l+1)/r²] u = 0:
    /// relativistic A = E + M, B = E² - M²; otherwise A = 2μ/ħ², B = 2μE/ħ².
    /// The non-relativistic limit substitutes the former by the latter.
    pub fn coupling(&self) -> (f64, f64) {
        match *self {
            Kinematics::Relativistic { mass, energy } => {
                (energy + mass, energy * energy - mass * mass)
            }
            Kinematics::NonRelativistic { mu, hbar, energy } => {
                let two_mu = 2.0 * mu / (hbar * hbar);
                (two_mu, two_mu * energy)
            }
        }
    }
}

/// Derived per-channel quantities; the single currency between the model,
/// scattering, spectra and oracle layers.
///
/// Invariants maintained by [`channel_params`]:
/// * xi3 = 2 λ,
/// * xi3 - xi1 - xi2 = 2ik/β,
/// * λ(λ-1) + R = 0,
/// * below_threshold iff the real pre-sqrt k² is negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    pub l: u32,
    pub k: Complex64,
    pub lambda: f64,
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub xi1: Complex64,
    pub xi2: Complex64,
    pub xi3: Complex64,
    pub xi1_star: Complex64,
    pub xi2_star: Complex64,
    pub below_threshold: bool,
}

/// The literal potential value V(r).
pub fn potential_exact(spec: &PotentialSpec, r: f64) -> Result<f64> {
    check_radius(r)?;
    let decay = (-spec.beta * r).exp();
    Ok(match spec.kind {
        PotentialKind::Varshni => spec.a * (1.0 - spec.b / r * decay),
        PotentialKind::Hellmann => -spec.a / r + spec.b / r * decay,
        PotentialKind::VarshniShukla => spec.b / (r * r) * decay,
    })
}

/// The potential with every 1/r (1/r² for Varshni-Shukla) replaced by the
/// screening substitution β/(1-e^{-βr}). This is the potential the analytic
/// solutions are exact for, and the one the oracle integrates.
pub fn potential_approx(spec: &PotentialSpec, r: f64) -> Result<f64> {
    check_radius(r)?;
    let z = 1.0 - (-spec.beta * r).exp();
    let decay = 1.0 - z;
    let b = spec.beta;
    Ok(match spec.kind {
        PotentialKind::Varshni => spec.a * (1.0 - spec.b * b * decay / z),
        PotentialKind::Hellmann => -spec.a * b / z + spec.b * b * decay / z,
        PotentialKind::VarshniShukla => spec.b * b * b * decay / (z * z),
    })
}

/// r -> infinity limit of [`potential_approx`] (the constant tail absorbed
/// into the asymptotic wave number).
pub fn approx_tail(spec: &PotentialSpec) -> f64 {
    match spec.kind {
        PotentialKind::Varshni => spec.a,
        PotentialKind::Hellmann => -spec.a * spec.beta,
        PotentialKind::VarshniShukla => 0.0,
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::Domain(format!("radius r = {r} must be > 0")));
    }
    Ok(())
}

/// The real k² before the square root; sign decides the threshold flag.
pub(crate) fn k_squared(spec: &PotentialSpec, kin: &Kinematics, l: u32) -> f64 {
    let (a_c, b_c) = kin.coupling();
    let ll1 = (l * (l + 1)) as f64;
    let b2 = spec.beta * spec.beta;
    match spec.kind {
        PotentialKind::Varshni => b_c - spec.a * a_c - ll1 * b2,
        PotentialKind::Hellmann => b_c + spec.a * a_c * spec.beta - ll1 * b2,
        PotentialKind::VarshniShukla => b_c - ll1 * b2,
    }
}

/// Asymptotic wave number as the principal square root of the real k².
///
/// Below threshold (k² < 0) this continues to k = i sqrt(-k²) and flags
/// the channel; k² = 0 exactly is a degenerate channel and an error.
pub fn wave_number(spec: &PotentialSpec, kin: &Kinematics, l: u32) -> Result<(Complex64, bool)> {
    let ksq = k_squared(spec, kin, l);
    if ksq == 0.0 {
        return Err(Error::DegenerateChannel);
    }
    if ksq > 0.0 {
        Ok((Complex64::new(ksq.sqrt(), 0.0), false))
    } else {
        Ok((Complex64::new(0.0, (-ksq).sqrt()), true))
    }
}

/// Coefficients of the transformed equation's bracket P z² + Q z + R.
///
/// They satisfy P + Q + R = k²/β² and λ(λ-1) = -R.
pub fn pqr(spec: &PotentialSpec, kin: &Kinematics, l: u32) -> (f64, f64, f64) {
    let (a_c, _) = kin.coupling();
    let ll1 = (l * (l + 1)) as f64;
    let ksq_over_b2 = k_squared(spec, kin, l) / (spec.beta * spec.beta);
    match spec.kind {
        PotentialKind::Varshni => {
            let q = spec.a * a_c * spec.b / spec.beta;
            (ksq_over_b2 + ll1 - q, q, -ll1)
        }
        PotentialKind::Hellmann => {
            let q = (spec.a - spec.b) * a_c / spec.beta;
            (ksq_over_b2 + ll1 - q, q, -ll1)
        }
        PotentialKind::VarshniShukla => {
            let q = a_c * spec.b;
            (ksq_over_b2 + ll1, q, -(q + ll1))
        }
    }
}

/// Index λ of the regular solution z^λ at the origin.
///
/// Varshni and Hellmann always give l + 1; Varshni-Shukla gives
/// 1/2 + sqrt(1/4 + l(l+1) + A b), which is complex (an error) for a
/// strongly attractive b < 0.
pub fn lambda_param(spec: &PotentialSpec, kin: &Kinematics, l: u32) -> Result<f64> {
    match spec.kind {
        PotentialKind::Varshni | PotentialKind::Hellmann => Ok((l + 1) as f64),
        PotentialKind::VarshniShukla => {
            let (a_c, _) = kin.coupling();
            let radicand = 0.25 + (l * (l + 1)) as f64 + a_c * spec.b;
            if radicand < 0.0 {
                return Err(Error::ComplexIndex(radicand));
            }
            Ok(0.5 + radicand.sqrt())
        }
    }
}

/// Assemble the full channel: k, λ, (P, Q, R) and the ξ parameters
///
///   ξ1 = λ - ik/β - s,  ξ2 = λ - ik/β + s,  ξ3 = 2λ,
///   ξ1* = λ + ik/β - s, ξ2* = λ + ik/β + s,
///
/// with s the principal square root of Q + R - k²/β² taken as a complex
/// number. The unified s reproduces each potential's printed radicand
/// (for Varshni-Shukla it equals i sqrt(l(l+1) + k²/β²)).
pub fn channel_params(spec: &PotentialSpec, kin: &Kinematics, l: u32) -> Result<ChannelParams> {
    let (k, below_threshold) = wave_number(spec, kin, l)?;
    let ksq = k_squared(spec, kin, l);
    let lambda = lambda_param(spec, kin, l)?;
    let (p, q, r) = pqr(spec, kin, l);
    let b2 = spec.beta * spec.beta;
    let s = Complex64::new(q + r - ksq / b2, 0.0).sqrt();
    let ik_over_beta = Complex64::i() * k / spec.beta;
    Ok(ChannelParams {
        l,
        k,
        lambda,
        p,
        q,
        r,
        xi1: lambda - ik_over_beta - s,
        xi2: lambda - ik_over_beta + s,
        xi3: Complex64::new(2.0 * lambda, 0.0),
        xi1_star: lambda + ik_over_beta - s,
        xi2_star: lambda + ik_over_beta + s,
        below_threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn rel(e: f64, m: f64) -> Kinematics {
        Kinematics::relativistic(m, e).unwrap()
    }

    #[test]
    fn varshni_exact_value() {
        let spec = PotentialSpec::varshni(2.0, 1.0, 0.2).unwrap();
        let v = potential_exact(&spec, 1.0).unwrap();
        assert_relative_eq!(v, 2.0 * (1.0 - (-0.2_f64).exp()), max_relative = 1e-14);
        assert!((v - 0.362538).abs() < 1e-6);
        // exponential term vanishes at large r
        assert_relative_eq!(potential_exact(&spec, 1e4).unwrap(), 2.0, max_relative = 1e-12);
    }

    #[test]
    fn hellmann_decays_to_zero() {
        let spec = PotentialSpec::hellmann(1.0, 1.0, 0.4).unwrap();
        assert!(potential_exact(&spec, 1e6).unwrap().abs() < 1e-5);
    }

    #[test]
    fn varshni_shukla_approx_value() {
        let spec = PotentialSpec::varshni_shukla(1.0, 0.5).unwrap();
        let v = potential_approx(&spec, 2.0).unwrap();
        let z = 1.0 - (-1.0_f64).exp();
        let want = 0.25 * (-1.0_f64).exp() / (z * z);
        assert_relative_eq!(v, want, max_relative = 1e-14);
        assert!((v - 0.2301684).abs() < 1e-6);
    }

    #[test]
    fn hellmann_approx_constant_tail() {
        let spec = PotentialSpec::hellmann(1.0, 0.0, 0.3).unwrap();
        let v = potential_approx(&spec, 200.0).unwrap();
        assert_relative_eq!(v, -0.3, max_relative = 1e-12);
        assert_relative_eq!(approx_tail(&spec), -0.3, max_relative = 1e-15);
    }

    #[test]
    fn approx_tends_to_exact_as_beta_shrinks() {
        let specs = [
            PotentialSpec::varshni(1.5, 1.0, 1.0).unwrap(),
            PotentialSpec::hellmann(1.0, 0.5, 1.0).unwrap(),
            PotentialSpec::varshni_shukla(1.0, 1.0).unwrap(),
        ];
        for base in specs {
            let mut last = f64::INFINITY;
            for beta in [0.4, 0.2, 0.1, 0.05] {
                let spec = PotentialSpec::new(base.kind, base.a, base.b, beta).unwrap();
                let diff = (potential_approx(&spec, 1.0).unwrap()
                    - potential_exact(&spec, 1.0).unwrap())
                .abs();
                assert!(diff < last, "{:?} beta={beta}: {diff} !< {last}", base.kind);
                last = diff;
            }
        }
    }

    #[test]
    fn varshni_shukla_rejects_nonzero_a() {
        assert!(PotentialSpec::new(PotentialKind::VarshniShukla, 2.0, 1.0, 0.2).is_err());
        let spec = PotentialSpec::varshni_shukla(1.0, 0.2).unwrap();
        assert_eq!(spec.rho(), 5.0);
    }

    #[test]
    fn wave_numbers_match_hand_values() {
        // VSP rel, E=2, M=1, l=0 -> k = sqrt(3)
        let vsp = PotentialSpec::varshni_shukla(1.0, 0.2).unwrap();
        let (k, below) = wave_number(&vsp, &rel(2.0, 1.0), 0).unwrap();
        assert_relative_eq!(k.re, 3.0_f64.sqrt(), max_relative = 1e-14);
        assert!(!below);

        // Hellmann rel, E=M=1, a=2, beta=0.2, l=0 -> k = sqrt(0.8)
        let hp = PotentialSpec::hellmann(2.0, 1.0, 0.2).unwrap();
        let (k, below) = wave_number(&hp, &rel(1.0, 1.0), 0).unwrap();
        assert_relative_eq!(k.re, 0.8_f64.sqrt(), max_relative = 1e-14);
        assert!(!below);

        // Varshni rel, E=M=1, a=2 -> k^2 = -4, k = 2i, below threshold
        let vp = PotentialSpec::varshni(2.0, 1.0, 0.2).unwrap();
        let (k, below) = wave_number(&vp, &rel(1.0, 1.0), 0).unwrap();
        assert_eq!(k.re, 0.0);
        assert_relative_eq!(k.im, 2.0, max_relative = 1e-14);
        assert!(below);
    }

    #[test]
    fn degenerate_channel_is_an_error() {
        // E = M, l = 0, VSP: k^2 = 0 exactly
        let vsp = PotentialSpec::varshni_shukla(1.0, 0.2).unwrap();
        assert_eq!(
            wave_number(&vsp, &rel(1.0, 1.0), 0),
            Err(Error::DegenerateChannel)
        );
    }

    #[test]
    fn pqr_hand_values() {
        let vsp = PotentialSpec::varshni_shukla(1.0, 0.2).unwrap();
        let (_, q, r) = pqr(&vsp, &rel(1.0, 1.0), 0);
        assert_eq!(q, 2.0);
        assert_eq!(r, -2.0);

        // Varshni with a = 0: Q = 0 regardless of b
        let vp = PotentialSpec::varshni(0.0, 5.0, 0.2).unwrap();
        assert_eq!(pqr(&vp, &rel(2.0, 1.0), 1).1, 0.0);

        // Hellmann with a = b: Q = 0
        let hp = PotentialSpec::hellmann(1.3, 1.3, 0.2).unwrap();
        assert_eq!(pqr(&hp, &rel(2.0, 1.0), 1).1, 0.0);
    }

    #[test]
    fn lambda_hand_values() {
        let vp = PotentialSpec::varshni(1.0, 1.0, 0.2).unwrap();
        assert_eq!(lambda_param(&vp, &rel(2.0, 1.0), 3).unwrap(), 4.0);

        let vsp = PotentialSpec::varshni_shukla(1.0, 0.2).unwrap();
        assert_eq!(lambda_param(&vsp, &rel(1.0, 1.0), 0).unwrap(), 2.0);

        // b = 0 reduces to the centrifugal-only index l + 1
        let free = PotentialSpec::varshni_shukla(0.0, 0.2).unwrap();
        for l in 0..4 {
            assert_eq!(lambda_param(&free, &rel(2.0, 1.0), l).unwrap(), (l + 1) as f64);
        }
    }

    #[test]
    fn vsp_complex_index_is_rejected() {
        let vsp = PotentialSpec::varshni_shukla(-2.0, 0.2).unwrap();
        assert!(matches!(
            lambda_param(&vsp, &rel(1.0, 1.0), 0),
            Err(Error::ComplexIndex(_))
        ));
    }

    #[test]
    fn free_channel_xi_stars() {
        let free = PotentialSpec::varshni(0.0, 0.0, 0.5).unwrap();
        let kin = rel(2.0, 1.0);
        let ch = channel_params(&free, &kin, 0).unwrap();
        let k = 3.0_f64.sqrt();
        assert!((ch.xi1_star - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((ch.xi2_star - Complex64::new(1.0, 2.0 * k / 0.5)).norm() < 1e-13);
    }

    #[test]
    fn channel_constraint_p_plus_q_plus_r() {
        let kin = rel(2.2, 1.0);
        for spec in [
            PotentialSpec::varshni(0.7, 1.3, 0.3).unwrap(),
            PotentialSpec::hellmann(0.7, 1.3, 0.3).unwrap(),
            PotentialSpec::varshni_shukla(1.3, 0.3).unwrap(),
        ] {
            for l in 0..3 {
                let (p, q, r) = pqr(&spec, &kin, l);
                let want = k_squared(&spec, &kin, l) / (0.3 * 0.3);
                assert_relative_eq!(p + q + r, want, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn varshni_a0_channels_independent_of_b() {
        let kin = rel(2.0, 1.0);
        let reference = channel_params(&PotentialSpec::varshni(0.0, 0.0, 0.2).unwrap(), &kin, 2)
            .unwrap();
        for b in [-2.0, -1.0, 1.0, 2.0] {
            let ch = channel_params(&PotentialSpec::varshni(0.0, b, 0.2).unwrap(), &kin, 2).unwrap();
            assert_eq!(ch, reference);
        }
    }

    #[test]
    fn potentials_coincide_at_zero_strengths() {
        for kin in [rel(2.0, 1.0), Kinematics::non_relativistic(1.0, 1.0, 1.0).unwrap()] {
            for l in 0..4 {
                let vp = channel_params(&PotentialSpec::varshni(0.0, 0.0, 0.25).unwrap(), &kin, l)
                    .unwrap();
                let hp = channel_params(&PotentialSpec::hellmann(0.0, 0.0, 0.25).unwrap(), &kin, l)
                    .unwrap();
                let vsp =
                    channel_params(&PotentialSpec::varshni_shukla(0.0, 0.25).unwrap(), &kin, l)
                        .unwrap();
                assert_eq!(vp, hp);
                assert_eq!(vp, vsp);
            }
        }
    }

    fn arbitrary_spec() -> impl Strategy<Value = PotentialSpec> {
        (0..3u8, 0.0_f64..2.0, -1.0_f64..2.0, 0.05_f64..1.0).prop_map(|(kind, a, b, beta)| {
            match kind {
                0 => PotentialSpec::varshni(a, b, beta).unwrap(),
                1 => PotentialSpec::hellmann(a, b, beta).unwrap(),
                _ => PotentialSpec::varshni_shukla(b.abs(), beta).unwrap(),
            }
        })
    }

    proptest! {
        #[test]
        fn indicial_identity(spec in arbitrary_spec(), e in 0.2_f64..3.0, l in 0u32..4) {
            for kin in [rel(e, 1.0), Kinematics::non_relativistic(1.0, 1.0, e).unwrap()] {
                let lambda = lambda_param(&spec, &kin, l).unwrap();
                let (_, _, r) = pqr(&spec, &kin, l);
                prop_assert!((lambda * (lambda - 1.0) + r).abs() < 1e-10 * lambda.max(1.0));
            }
        }

        #[test]
        fn xi_sum_identity(spec in arbitrary_spec(), e in 0.2_f64..3.0, l in 0u32..4) {
            let kin = rel(e, 1.0);
            if let Ok(ch) = channel_params(&spec, &kin, l) {
                let lhs = ch.xi3 - ch.xi1 - ch.xi2;
                let rhs = Complex64::i() * ch.k * (2.0 / spec.beta);
                prop_assert!((lhs - rhs).norm() < 1e-12 * rhs.norm().max(1.0));
                // xi1* is the conjugate of xi1 whenever k and s are both real
                if !ch.below_threshold && ch.xi1.im.abs() < 1e-14 + ch.k.re / spec.beta {
                    let s_real = (ch.xi2 - ch.xi1).im.abs() < 1e-12;
                    if s_real {
                        prop_assert!((ch.xi1_star - ch.xi1.conj()).norm() < 1e-12);
                    }
                }
            }
        }
    }
}
