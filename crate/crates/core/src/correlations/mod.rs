//! Concurrence, mutual information, classical correlation and quantum
//! discord for two-qubit states. Entropies are in bits; measurements for
//! discord act on qubit B.

mod concurrence;
mod discord;
mod measurement;

pub use concurrence::{concurrence, concurrence_x_state, X_SHAPE_TOL};
pub use discord::{
    classical_correlation, correlation_report, minimize_conditional_entropy, mutual_information,
    quantum_discord, ConditionalMinimum, CorrelationReport, PHI_GRID, THETA_GRID,
};
pub use measurement::{conditional_entropy, measurement_projectors, MeasurementBasis};
