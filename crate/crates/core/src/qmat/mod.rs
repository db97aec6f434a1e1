//! Dense complex linear algebra for one- and two-qubit operators.

mod eigen;
mod matrix;
mod state;

pub use eigen::{eig_hermitian, SpectralDecomposition};
pub use matrix::{kron_rows, pauli_x, pauli_y, pauli_z, Mat2, Mat4, Matrix, C64, HERMITIAN_TOL};
pub use state::{
    eigvals_2x2, entropy_of_spectrum, partial_trace, von_neumann_entropy, Subsystem,
    TwoQubitState, NEGATIVITY_TOL, TRACE_TOL,
};

pub(crate) use matrix::{ONE, ZERO};
