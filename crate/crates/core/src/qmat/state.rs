use super::eigen::eig_hermitian;
use super::matrix::{Mat2, Mat4, Matrix, C64, HERMITIAN_TOL};
use crate::error::{Error, Result};

/// Tolerance on `|Tr ρ - 1|` for a valid state.
pub const TRACE_TOL: f64 = 1e-12;

/// Most negative eigenvalue tolerated (and clipped to zero) in a state.
pub const NEGATIVITY_TOL: f64 = 1e-10;

/// Eigenvalues at or below this contribute nothing to the entropy.
const ENTROPY_FLOOR: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitState {
    matrix: Mat4,
}

impl TwoQubitState {
    pub fn new(matrix: Mat4) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::InvalidState("non-finite density matrix entry".into()));
        }
        let herr = matrix.hermiticity_error();
        if herr > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!("not Hermitian (error {herr:.3e})")));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
        }
        let spec = eig_hermitian(&matrix)?;
        if spec.eigenvalues[0] < -NEGATIVITY_TOL {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {:.3e}",
                spec.eigenvalues[0]
            )));
        }
        Ok(Self { matrix })
    }

    /// Symmetrizes and renormalizes a numerically assembled density
    /// operator before validating it.
    pub fn from_unnormalized(matrix: Mat4) -> Result<Self> {
        let h = matrix.hermitian_part();
        let tr = h.trace().re;
        if !(tr > 0.0) || !tr.is_finite() {
            return Err(Error::InvalidState(format!("cannot normalize, trace {tr}")));
        }
        Self::new(h.scale_re(1.0 / tr))
    }

    /// `|ψ><ψ|` for a (not necessarily normalized) state vector.
    pub fn pure(amplitudes: [C64; 4]) -> Result<Self> {
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if !(norm_sqr > 0.0) {
            return Err(Error::InvalidArgument("zero state vector".into()));
        }
        let n = norm_sqr.sqrt();
        let v = amplitudes.map(|z| z / n);
        Self::from_unnormalized(Mat4::outer(&v, &v))
    }

    pub fn maximally_mixed() -> Self {
        Self {
            matrix: Mat4::identity().scale_re(0.25),
        }
    }

    /// `ρ_A ⊗ ρ_B` for two single-qubit density matrices.
    pub fn product(rho_a: &Mat2, rho_b: &Mat2) -> Result<Self> {
        Self::from_unnormalized(rho_a.kron(rho_b))
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.matrix[(i, j)]
    }

    pub fn purity(&self) -> f64 {
        (self.matrix * self.matrix).trace().re
    }

    /// Largest modulus among entries off the diagonal and anti-diagonal.
    pub fn x_shape_spill(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                if i != j && i + j != 3 {
                    worst = worst.max(self.matrix[(i, j)].norm());
                }
            }
        }
        worst
    }

    pub fn partial_trace(&self, keep: Subsystem) -> Mat2 {
        partial_trace(&self.matrix, keep)
    }
}

/// Reduced matrix of a 4×4 operator: `Tr_B` when keeping A, `Tr_A` when
/// keeping B. Works for any operator, not only states.
pub fn partial_trace(m: &Mat4, keep: Subsystem) -> Mat2 {
    let mut out = Mat2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = match keep {
                Subsystem::A => m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)],
                Subsystem::B => m[(i, j)] + m[(2 + i, 2 + j)],
            };
        }
    }
    out
}

/// Von Neumann entropy in bits of a Hermitian, PSD, unit-trace matrix.
pub fn von_neumann_entropy<const N: usize>(m: &Matrix<N>) -> Result<f64> {
    let tr = m.trace();
    if (tr.re - 1.0).abs() > 1e-9 || tr.im.abs() > 1e-9 {
        return Err(Error::InvalidState(format!("entropy needs unit trace, got {tr}")));
    }
    let spec = eig_hermitian(m)?;
    entropy_of_spectrum(&spec.eigenvalues)
}

/// `-Σ λ log₂ λ` with the clipping rules applied; the result is clamped to
/// `[0, log₂ len]`.
pub fn entropy_of_spectrum(eigenvalues: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &lam in eigenvalues {
        if lam < -NEGATIVITY_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {lam:.3e}")));
        }
        if lam > ENTROPY_FLOOR {
            s -= lam * lam.log2();
        }
    }
    let max = (eigenvalues.len() as f64).log2();
    Ok(s.clamp(0.0, max))
}

/// Eigenvalues of a 2×2 Hermitian matrix, ascending, from trace and
/// determinant.
pub fn eigvals_2x2(m: &Mat2) -> [f64; 2] {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b = m[(0, 1)];
    let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    let mid = 0.5 * (a + d);
    [mid - half_gap, mid + half_gap]
}
