use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};
use crate::qmat::{eigvals_2x2, Mat2, TwoQubitState, C64};

/// Outcomes with probability at or below this contribute no entropy.
const OUTCOME_FLOOR: f64 = 1e-12;

/// Angles of the unitary
///
/// ```text
/// V = ( cos θ          e^{-iφ} sin θ )
///     ( e^{iφ} sin θ   -cos θ        )
/// ```
///
/// whose columns define the projective measurement `B_k = V|k><k|V†`.
/// `θ ∈ [0, π/2]`, `φ ∈ [0, 2π)` covers every rank-1 projective measurement
/// on a qubit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementBasis {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementBasis {
    pub const COMPUTATIONAL: Self = Self { theta: 0.0, phi: 0.0 };

    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&theta) || !(0.0..TAU).contains(&phi) {
            return Err(Error::InvalidArgument(format!(
                "basis angles out of range: theta = {theta}, phi = {phi}"
            )));
        }
        Ok(Self { theta, phi })
    }

    /// Maps arbitrary angles to the canonical range without changing the
    /// measurement. `(θ, φ) → (-θ, φ + π)` leaves both projectors fixed and
    /// `(θ, φ) → (π - θ, φ + π)` swaps them.
    pub fn canonical(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(PI);
        let mut phi = phi;
        if theta > FRAC_PI_2 {
            theta = PI - theta;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    /// The two columns of `V`.
    pub fn vectors(&self) -> [[C64; 2]; 2] {
        let (s, c) = self.theta.sin_cos();
        let e = C64::from_polar(1.0, self.phi);
        [
            [C64::new(c, 0.0), e * s],
            [e.conj() * s, C64::new(-c, 0.0)],
        ]
    }
}

/// `[B_0, B_1]` for the given basis.
pub fn measurement_projectors(basis: &MeasurementBasis) -> [Mat2; 2] {
    basis.vectors().map(|v| Mat2::outer(&v, &v))
}

/// Unnormalized A-side state after outcome `v` on qubit B:
/// `σ[i][j] = Σ_{b,b'} conj(v_b) ρ[(i,b),(j,b')] v_{b'}`.
fn conditioned_a_state(rho: &TwoQubitState, v: &[C64; 2]) -> Mat2 {
    let m = rho.matrix();
    let mut out = Mat2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = C64::new(0.0, 0.0);
            for b in 0..2 {
                for bp in 0..2 {
                    acc += v[b].conj() * m[(2 * i + b, 2 * j + bp)] * v[bp];
                }
            }
            out[(i, j)] = acc;
        }
    }
    out
}

fn binary_entropy_bits(eigs: [f64; 2]) -> f64 {
    eigs.iter()
        .filter(|&&l| l > OUTCOME_FLOOR)
        .map(|&l| -l * l.log2())
        .sum::<f64>()
        .clamp(0.0, 1.0)
}

/// `Σ_k p_k S(ρ_k)` for the measurement `{𝟙 ⊗ B_k}` on qubit B.
///
/// `ρ_k` is `σ_k ⊗ B_k / p_k`, so its entropy equals that of the conditioned
/// A-side state `σ_k / p_k`.
pub fn conditional_entropy(rho: &TwoQubitState, basis: &MeasurementBasis) -> f64 {
    basis
        .vectors()
        .iter()
        .map(|v| {
            let sigma = conditioned_a_state(rho, v);
            let p = sigma.trace().re;
            if p <= OUTCOME_FLOOR {
                return 0.0;
            }
            let [l0, l1] = eigvals_2x2(&sigma);
            p * binary_entropy_bits([l0 / p, l1 / p])
        })
        .sum()
}
