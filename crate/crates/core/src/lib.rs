//! Partial-wave scattering for three screened potentials (Varshni,
//! Hellmann, Varshni-Shukla) under equal scalar/vector coupling: analytic
//! phase shifts, normalization constants, radial wave functions and bound
//! states, each cross-checked against an independent Numerov oracle.

pub mod error;
pub mod model;
pub mod oracle;
pub mod refdata;
pub mod scattering;
pub mod specfun;
pub mod spectra;
pub mod validate;

pub use error::{Error, Result};
pub use model::{ChannelParams, Kinematics, PotentialKind, PotentialSpec};
pub use scattering::{PhaseShiftRecord, WaveFunctionSample};
pub use specfun::ArgConvention;
pub use spectra::EnergyLevel;

pub use num_complex::Complex64;
