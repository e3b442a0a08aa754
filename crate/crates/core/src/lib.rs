//! Optimal measurements for programmable quantum state discriminators.
//!
//! A discriminator receives "program" qubits carrying copies of unknown
//! states and a data register guaranteed to match one of them. Averaging
//! over the unknown states turns identification into discrimination of two
//! fixed mixed states, for which both the minimum-error (Helstrom) optimum
//! and the optimum unambiguous measurement have closed forms. This crate
//! builds those density-operator pairs, evaluates the closed forms,
//! recomputes everything through independent spectral / reduced-basis /
//! grid-scan oracles, and Monte Carlo simulates the measurements.
//!
//! Modules:
//! - [`linops`]: dense complex matrices, Jacobi eigensolver, Dicke bases.
//! - [`scenarios`]: the discrimination scenarios and their (ρ₁, ρ₂) pairs.
//! - [`minerr`]: Helstrom solver and closed-form error probabilities.
//! - [`unamb`]: unambiguous-measurement optimization and closed forms.
//! - [`ncopy`]: Jordan bases and block-reduced spectra for n data copies.
//! - [`mcsim`]: seeded Monte Carlo measurement simulation.
//! - [`verify`]: the machine-checkable validation suite behind the CLI.
//! - [`curves`]: figure-data tables the CLI emits as CSV/JSON.

pub mod error;
pub mod linops;
pub mod rng;

pub use error::{Error, Result};
