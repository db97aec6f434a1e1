use crate::error::{Error, Result};
use crate::qmat::{eig_hermitian, pauli_y, Matrix, TwoQubitState};

/// Off-X entries allowed in [`concurrence_x_state`] input.
pub const X_SHAPE_TOL: f64 = 1e-10;

/// Most negative singular value accepted before reporting failure.
const SPIN_FLIP_NEGATIVITY_TOL: f64 = 1e-9;

/// Eigenvalues of `ρ` at or below this are rounding noise and are dropped
/// from `√ρ`.
const RHO_EIGEN_FLOOR: f64 = 1e-14;

/// Wootters concurrence `max(0, λ1 - λ2 - λ3 - λ4)`.
///
/// The `λ_i` are square roots of the eigenvalues of
/// `R = ρ (σʸ⊗σʸ) ρ* (σʸ⊗σʸ)`, conjugation taken in the standard basis.
/// Equivalently they are the singular values of `A = √ρ (σʸ⊗σʸ) conj(√ρ)`
/// (`R` is similar to `A A†`). They are read off the 8×8 Hermitian
/// dilation `[[0, A], [A†, 0]]`, whose spectrum is `±λ_i`, so no square
/// root of a near-zero eigenvalue is ever taken.
pub fn concurrence(rho: &TwoQubitState) -> Result<f64> {
    let yy = pauli_y().kron(&pauli_y());
    let spec = eig_hermitian(rho.matrix())?;
    let sqrt_rho = spec.apply_fn(|e| if e > RHO_EIGEN_FLOOR { e.sqrt() } else { 0.0 });
    let a = sqrt_rho * yy * sqrt_rho.conj();

    let mut dilation = Matrix::<8>::zeros();
    for i in 0..4 {
        for j in 0..4 {
            dilation[(i, 4 + j)] = a[(i, j)];
            dilation[(4 + j, i)] = a[(i, j)].conj();
        }
    }
    let eigs = eig_hermitian(&dilation)?.eigenvalues;
    // ascending: eigs[4..] = λ4 ≤ λ3 ≤ λ2 ≤ λ1
    if eigs[4] < -SPIN_FLIP_NEGATIVITY_TOL {
        return Err(Error::NumericFailure(format!(
            "spin-flip spectrum is inconsistent (smallest singular value {:.3e})",
            eigs[4]
        )));
    }
    let lam: [f64; 4] = std::array::from_fn(|k| eigs[4 + k].max(0.0));
    let c = lam[3] - lam[2] - lam[1] - lam[0];
    Ok(if c > 0.0 { c.min(1.0) } else { 0.0 })
}

/// Concurrence of an X-shaped state,
/// `2 max(0, |ρ23| - √(ρ11 ρ44), |ρ14| - √(ρ22 ρ33))` (1-based indices).
pub fn concurrence_x_state(rho: &TwoQubitState) -> Result<f64> {
    let spill = rho.x_shape_spill();
    if spill > X_SHAPE_TOL {
        return Err(Error::InvalidArgument(format!(
            "state is not X-shaped (off-X entry {spill:.3e})"
        )));
    }
    let d = |i: usize| rho.entry(i, i).re.max(0.0);
    let inner = rho.entry(1, 2).norm() - (d(0) * d(3)).sqrt();
    let outer = rho.entry(0, 3).norm() - (d(1) * d(2)).sqrt();
    let c = 2.0 * inner.max(outer);
    Ok(if c > 0.0 { c.min(1.0) } else { 0.0 })
}
