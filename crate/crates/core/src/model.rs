//! Two-qubit anisotropic XYZ Heisenberg chain with a z-axis
//! Dzyaloshinskii-Moriya term.
//!
//! Units: ħ = k_B = 1, all couplings and temperatures share one energy unit.
//! Basis order is `|↑↑>, |↑↓>, |↓↑>, |↓↓>` (`|00>, |01>, |10>, |11>`).

use crate::error::{Error, Result};
use crate::qmat::{eig_hermitian, Mat4, SpectralDecomposition, TwoQubitState, C64, ONE, ZERO};

/// Agreement required between the generic and block closed-form spectra.
pub const SPECTRUM_CROSS_CHECK_TOL: f64 = 1e-10;

/// Couplings `J_x, J_y, J_z` and DM strength `D_z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    pub jx: f64,
    pub jy: f64,
    pub jz: f64,
    pub dz: f64,
}

impl ModelParams {
    pub fn new(jx: f64, jy: f64, jz: f64, dz: f64) -> Result<Self> {
        let p = Self { jx, jy, jz, dz };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("jx", self.jx), ("jy", self.jy), ("jz", self.jz), ("dz", self.dz)] {
            if !v.is_finite() {
                return Err(Error::InvalidArgument(format!("{name} must be finite, got {v}")));
            }
        }
        Ok(())
    }

    pub fn with_dz(self, dz: f64) -> Self {
        Self { dz, ..self }
    }

    /// `β = J_x + J_y + 2i D_z`
    pub fn beta(&self) -> C64 {
        C64::new(self.jx + self.jy, 2.0 * self.dz)
    }

    /// `μ = |β| = sqrt((J_x + J_y)² + 4 D_z²)`
    pub fn mu(&self) -> f64 {
        self.beta().norm()
    }
}

/// `H = ½ [J_x σˣσˣ + J_y σʸσʸ + J_z σᶻσᶻ + D_z (σˣσʸ - σʸσˣ)]` as a 4×4 matrix.
///
/// The `|↑↓>,|↓↑>` block carries `β/2` above the diagonal and `β*/2` below.
pub fn build_hamiltonian(p: &ModelParams) -> Mat4 {
    let half = |x: f64| C64::new(0.5 * x, 0.0);
    let mut h = Mat4::zeros();
    h[(0, 0)] = half(p.jz);
    h[(1, 1)] = half(-p.jz);
    h[(2, 2)] = half(-p.jz);
    h[(3, 3)] = half(p.jz);
    h[(0, 3)] = half(p.jx - p.jy);
    h[(3, 0)] = half(p.jx - p.jy);
    h[(1, 2)] = p.beta() * 0.5;
    h[(2, 1)] = p.beta().conj() * 0.5;
    debug_assert!(h.is_hermitian(0.0));
    h
}

/// Exact spectrum from the two decoupled 2×2 blocks, sorted ascending.
///
/// Outer block `{|↑↑>, |↓↓>}`: `(J_z ± (J_x - J_y))/2` with `(|↑↑> ± |↓↓>)/√2`.
/// Inner block `{|↑↓>, |↓↑>}`: `(-J_z ± μ)/2` with `(β/μ |↑↓> ± |↓↑>)/√2`.
pub fn closed_form_spectrum(p: &ModelParams) -> SpectralDecomposition<4> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let d = p.jx - p.jy;
    let mu = p.mu();
    let phase = if mu > 0.0 { p.beta() / mu } else { ONE };

    let pairs: [(f64, [C64; 4]); 4] = [
        (0.5 * (p.jz + d), [ONE * s, ZERO, ZERO, ONE * s]),
        (0.5 * (p.jz - d), [ONE * s, ZERO, ZERO, -ONE * s]),
        (0.5 * (-p.jz + mu), [ZERO, phase * s, ONE * s, ZERO]),
        (0.5 * (-p.jz - mu), [ZERO, phase * s, -ONE * s, ZERO]),
    ];
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&a, &b| pairs[a].0.total_cmp(&pairs[b].0).then(a.cmp(&b)));

    let mut eigenvalues = [0.0; 4];
    let mut eigenvectors = Mat4::zeros();
    for (slot, &k) in order.iter().enumerate() {
        eigenvalues[slot] = pairs[k].0;
        eigenvectors.set_column(slot, &pairs[k].1);
    }
    SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    }
}

/// Spectrum of the Hamiltonian from the generic eigensolver, cross-checked
/// against the block closed form.
pub fn hamiltonian_spectrum(p: &ModelParams) -> Result<SpectralDecomposition<4>> {
    p.validate()?;
    let generic = eig_hermitian(&build_hamiltonian(p))?;
    let exact = closed_form_spectrum(p);
    for (a, b) in generic.eigenvalues.iter().zip(exact.eigenvalues.iter()) {
        if (a - b).abs() > SPECTRUM_CROSS_CHECK_TOL {
            return Err(Error::InternalConsistency(format!(
                "eigensolver gave {:?}, block formulas gave {:?}",
                generic.eigenvalues, exact.eigenvalues
            )));
        }
    }
    Ok(generic)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThermalPoint {
    pub params: ModelParams,
    pub temperature: f64,
}

impl ThermalPoint {
    pub fn new(params: ModelParams, temperature: f64) -> Result<Self> {
        let tp = Self { params, temperature };
        tp.validate()?;
        Ok(tp)
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if !(self.temperature > 0.0) || !self.temperature.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "temperature must be positive and finite, got {}",
                self.temperature
            )));
        }
        Ok(())
    }
}

/// Gibbs state `e^{-H/T} / Z` built from the spectral decomposition.
///
/// Boltzmann weights are shifted by the ground energy before exponentiating.
pub fn thermal_state(tp: &ThermalPoint) -> Result<TwoQubitState> {
    tp.validate()?;
    let spec = hamiltonian_spectrum(&tp.params)?;
    let e0 = spec.eigenvalues[0];
    let t = tp.temperature;
    let unnormalized = spec.apply_fn(|e| (-(e - e0) / t).exp());
    TwoQubitState::from_unnormalized(unnormalized)
}

/// Unnormalized Gibbs matrix elements in the layout
///
/// ```text
/// ( ρ11   0     0     ρ41 )
/// ( 0     ρ22   ρ23*  0   )
/// ( 0     ρ23   ρ22   0   )
/// ( ρ41   0     0     ρ11 )
/// ```
///
/// together with the partition function `z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThermalElements {
    pub rho11: f64,
    pub rho41: f64,
    pub rho22: f64,
    pub rho23: C64,
    pub z: f64,
}

impl ThermalElements {
    /// Element formulas in their published closed form, read with a single
    /// overall `1/Z`:
    ///
    /// ```text
    /// ρ11 = ½ e^{-(Jx+Jy+Jz)/2T} (e^{Jx/T} + e^{Jy/T})
    /// ρ41 = ½ e^{-(Jx+Jy+Jz)/2T} (-e^{Jx/T} + e^{Jy/T})
    /// ρ22 = e^{Jz/2T} cosh(μ/2T)
    /// ρ23 = (Jx + Jy - 2i Dz) e^{Jz/2T} sinh(μ/2T) / μ
    /// Z   = 2ρ11 + 2ρ22
    /// ```
    pub fn published(tp: &ThermalPoint) -> Self {
        let p = &tp.params;
        let t = tp.temperature;
        let mu = p.mu();
        let pre = (-(p.jx + p.jy + p.jz) / (2.0 * t)).exp();
        let ex = (p.jx / t).exp();
        let ey = (p.jy / t).exp();
        let rho11 = 0.5 * pre * (ex + ey);
        let rho41 = 0.5 * pre * (-ex + ey);
        let ez = (p.jz / (2.0 * t)).exp();
        let rho22 = ez * (mu / (2.0 * t)).cosh();
        let sinh_over_mu = if mu > 0.0 {
            (mu / (2.0 * t)).sinh() / mu
        } else {
            1.0 / (2.0 * t)
        };
        let rho23 = p.beta().conj() * (ez * sinh_over_mu);
        let z = pre * (ex + ey) + 2.0 * ez * (mu / (2.0 * t)).cosh();
        Self {
            rho11,
            rho41,
            rho22,
            rho23,
            z,
        }
    }

    /// Reads the same elements back out of an assembled Gibbs state,
    /// multiplying by the spectral partition function.
    pub fn from_state(tp: &ThermalPoint, state: &TwoQubitState) -> Result<Self> {
        let spec = hamiltonian_spectrum(&tp.params)?;
        let z: f64 = spec
            .eigenvalues
            .iter()
            .map(|e| (-e / tp.temperature).exp())
            .sum();
        Ok(Self {
            rho11: z * state.entry(0, 0).re,
            rho41: z * state.entry(3, 0).re,
            rho22: z * state.entry(1, 1).re,
            rho23: state.entry(2, 1) * z,
            z,
        })
    }
}

/// The published element formulas next to the values read from
/// [`thermal_state`].
#[derive(Clone, Copy, Debug)]
pub struct ThermalCrossCheck {
    pub published: ThermalElements,
    pub assembled: ThermalElements,
}

impl ThermalCrossCheck {
    pub fn run(tp: &ThermalPoint) -> Result<Self> {
        let state = thermal_state(tp)?;
        Ok(Self {
            published: ThermalElements::published(tp),
            assembled: ThermalElements::from_state(tp, &state)?,
        })
    }

    /// Largest relative deviation over `ρ11, ρ41, ρ22, Z`.
    pub fn diagonal_and_corner_deviation(&self) -> f64 {
        let (a, b) = (&self.published, &self.assembled);
        let scale = a.z.abs().max(1e-300);
        [
            a.rho11 - b.rho11,
            a.rho41 - b.rho41,
            a.rho22 - b.rho22,
            a.z - b.z,
        ]
        .iter()
        .map(|d| d.abs() / scale)
        .fold(0.0, f64::max)
    }

    /// Relative deviation of `ρ23` after flipping the sign of the published
    /// value. The published element has the opposite overall sign to the
    /// Gibbs matrix of this Hamiltonian.
    pub fn rho23_sign_flipped_deviation(&self) -> f64 {
        (self.published.rho23 + self.assembled.rho23).norm() / self.published.z.abs().max(1e-300)
    }

    /// Relative deviation of `ρ23` taken literally.
    pub fn rho23_literal_deviation(&self) -> f64 {
        (self.published.rho23 - self.assembled.rho23).norm() / self.published.z.abs().max(1e-300)
    }
}

/// `(|↑↓> + |↓↑>)/√2`
pub fn bell_initial_state() -> TwoQubitState {
    let mut m = Mat4::zeros();
    for &(i, j) in &[(1, 1), (1, 2), (2, 1), (2, 2)] {
        m[(i, j)] = ONE * 0.5;
    }
    TwoQubitState::new(m).expect("Bell projector is a valid state")
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecoherenceParams {
    pub params: ModelParams,
    /// Phase decoherence rate.
    pub gamma: f64,
    pub time: f64,
}

impl DecoherenceParams {
    pub fn new(params: ModelParams, gamma: f64, time: f64) -> Result<Self> {
        let dp = Self { params, gamma, time };
        dp.validate()?;
        Ok(dp)
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if !(self.gamma >= 0.0) || !self.gamma.is_finite() {
            return Err(Error::InvalidArgument(format!("gamma must be >= 0, got {}", self.gamma)));
        }
        if !(self.time >= 0.0) || !self.time.is_finite() {
            return Err(Error::InvalidArgument(format!("time must be >= 0, got {}", self.time)));
        }
        Ok(())
    }

    pub fn at_time(self, time: f64) -> Self {
        Self { time, ..self }
    }
}

/// Intrinsic-decoherence evolution in the energy eigenbasis:
///
/// `ρ(t) = Σ_mn exp[-(γt/2)(E_m - E_n)² - i(E_m - E_n)t] <ψ_m|ρ(0)|ψ_n> |ψ_m><ψ_n|`
pub fn milburn_evolve(dp: &DecoherenceParams, rho0: &TwoQubitState) -> Result<TwoQubitState> {
    dp.validate()?;
    let spec = hamiltonian_spectrum(&dp.params)?;
    let w = spec.eigenvectors;
    let mut coeffs = w.adjoint() * *rho0.matrix() * w;
    let (gamma, t) = (dp.gamma, dp.time);
    for m in 0..4 {
        for n in 0..4 {
            if m == n {
                continue;
            }
            let de = spec.eigenvalues[m] - spec.eigenvalues[n];
            let factor = C64::new(-0.5 * gamma * t * de * de, -de * t).exp();
            coeffs[(m, n)] *= factor;
        }
    }
    TwoQubitState::from_unnormalized(w * coeffs * w.adjoint())
}

/// Which reading of the closed-form Bell-state solution to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormVariant {
    /// Populations carry `D_z sin(μt)/μ²`, exactly as typeset.
    AsPublished,
    /// Populations carry `D_z sin(μt)/μ`, which is what the spectral sum
    /// gives for this Hamiltonian.
    Corrected,
}

/// Closed-form decohered state starting from [`bell_initial_state`]:
///
/// ```text
/// ρ22 = ½ + D_z e^{-γμ²t/2} sin(μt) / μ^k     (k = 2 published, k = 1 corrected)
/// ρ33 = 1 - ρ22
/// ρ23 = (Jx + Jy - 2i D_z e^{-γμ²t/2} cos(μt)) / (2 (Jx + Jy - 2i D_z))
/// ρ32 = conj(ρ23)
/// ```
///
/// Returned as a raw matrix: the published populations are not guaranteed to
/// form a positive operator.
pub fn milburn_closed_form(dp: &DecoherenceParams, variant: ClosedFormVariant) -> Result<Mat4> {
    dp.validate()?;
    let p = &dp.params;
    let mu = p.mu();
    let mut m = Mat4::zeros();
    if mu == 0.0 {
        // H is proportional to the identity on the Bell block
        return Ok(*bell_initial_state().matrix());
    }
    let envelope = (-0.5 * dp.gamma * mu * mu * dp.time).exp();
    let (s, c) = (mu * dp.time).sin_cos();
    let denom = match variant {
        ClosedFormVariant::AsPublished => mu * mu,
        ClosedFormVariant::Corrected => mu,
    };
    let pop = p.dz * envelope * s / denom;
    m[(1, 1)] = C64::new(0.5 + pop, 0.0);
    m[(2, 2)] = C64::new(0.5 - pop, 0.0);
    let num = C64::new(p.jx + p.jy, -2.0 * p.dz * envelope * c);
    let rho23 = num / (p.beta().conj() * 2.0);
    m[(1, 2)] = rho23;
    m[(2, 1)] = rho23.conj();
    Ok(m)
}
