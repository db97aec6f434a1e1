//! Thermal and intrinsic-decoherence correlations of a two-qubit anisotropic
//! Heisenberg XYZ chain with a z-axis Dzyaloshinskii-Moriya interaction.
//!
//! - [`qmat`]: 2×2 / 4×4 complex matrices, Jacobi eigensolver, partial
//!   trace, von Neumann entropy.
//! - [`model`]: Hamiltonian, Gibbs state, Milburn dephasing evolution.
//! - [`correlations`]: concurrence, mutual information, classical
//!   correlation, quantum discord.
//! - [`sweep`]: temperature / time sweeps and CSV output behind the `qcorr`
//!   binary.
//!
//! ```
//! use qcorr::model::{thermal_state, ModelParams, ThermalPoint};
//! use qcorr::correlations::correlation_report;
//!
//! let params = ModelParams::new(0.2, 0.4, 0.8, 1.0)?;
//! let rho = thermal_state(&ThermalPoint::new(params, 0.5)?)?;
//! let report = correlation_report(&rho)?;
//! assert!(report.concurrence > 0.5);
//! # Ok::<(), qcorr::Error>(())
//! ```

pub mod correlations;
pub mod error;
pub mod model;
pub mod qmat;
pub mod sweep;

pub use error::{Error, Result};
