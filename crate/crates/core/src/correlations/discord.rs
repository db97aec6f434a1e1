use std::f64::consts::{FRAC_PI_2, TAU};

use super::concurrence::concurrence;
use super::measurement::{conditional_entropy, MeasurementBasis};
use crate::error::Result;
use crate::qmat::{von_neumann_entropy, Subsystem, TwoQubitState};

/// Grid points over `θ ∈ [0, π/2]` (endpoints included).
pub const THETA_GRID: usize = 65;
/// Grid points over `φ ∈ [0, 2π)`.
pub const PHI_GRID: usize = 128;

const SIMPLEX_MAX_ITERS: usize = 500;
const SIMPLEX_VALUE_TOL: f64 = 1e-12;
const SIMPLEX_SIZE_TOL: f64 = 1e-9;

/// Result of the conditional-entropy minimization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConditionalMinimum {
    pub basis: MeasurementBasis,
    pub value: f64,
}

/// `min_{B_k} S(ρ|{B_k})` over projective measurements on qubit B.
///
/// A 65 × 128 grid in `(θ, φ)` is scanned in row order with strict
/// improvement, so ties resolve to the smallest `θ`, then smallest `φ`. The
/// best grid point seeds a Nelder-Mead simplex in the unconstrained angles;
/// its result is mapped back to the canonical range and kept only if it
/// beats the grid.
pub fn minimize_conditional_entropy(rho: &TwoQubitState) -> ConditionalMinimum {
    let d_theta = FRAC_PI_2 / (THETA_GRID - 1) as f64;
    let d_phi = TAU / PHI_GRID as f64;

    let mut best = ConditionalMinimum {
        basis: MeasurementBasis::COMPUTATIONAL,
        value: f64::INFINITY,
    };
    for i in 0..THETA_GRID {
        let theta = if i == THETA_GRID - 1 { FRAC_PI_2 } else { i as f64 * d_theta };
        for j in 0..PHI_GRID {
            let basis = MeasurementBasis {
                theta,
                phi: j as f64 * d_phi,
            };
            let value = conditional_entropy(rho, &basis);
            if value < best.value {
                best = ConditionalMinimum { basis, value };
            }
        }
    }

    let f = |x: [f64; 2]| conditional_entropy(rho, &MeasurementBasis { theta: x[0], phi: x[1] });
    let start = [best.basis.theta, best.basis.phi];
    let (x, _) = nelder_mead(f, start, [d_theta, d_phi], best.value);
    let basis = MeasurementBasis::canonical(x[0], x[1]);
    let value = conditional_entropy(rho, &basis);
    if value < best.value {
        best = ConditionalMinimum { basis, value };
    }
    best
}

/// Minimal 2-D Nelder-Mead. Returns the best vertex and its value.
fn nelder_mead(f: impl Fn([f64; 2]) -> f64, start: [f64; 2], step: [f64; 2], f_start: f64) -> ([f64; 2], f64) {
    let mut pts = [
        (start, f_start),
        ([start[0] + step[0], start[1]], 0.0),
        ([start[0], start[1] + step[1]], 0.0),
    ];
    pts[1].1 = f(pts[1].0);
    pts[2].1 = f(pts[2].0);

    let lerp = |a: [f64; 2], b: [f64; 2], t: f64| [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];

    for _ in 0..SIMPLEX_MAX_ITERS {
        pts.sort_by(|a, b| a.1.total_cmp(&b.1));
        let spread = pts[2].1 - pts[0].1;
        let size = pts[1..]
            .iter()
            .map(|(x, _)| (x[0] - pts[0].0[0]).abs().max((x[1] - pts[0].0[1]).abs()))
            .fold(0.0, f64::max);
        if spread <= SIMPLEX_VALUE_TOL || size <= SIMPLEX_SIZE_TOL {
            break;
        }
        let centroid = lerp(pts[0].0, pts[1].0, 0.5);
        let worst = pts[2];

        let reflected = lerp(worst.0, centroid, 2.0);
        let fr = f(reflected);
        if fr < pts[0].1 {
            let expanded = lerp(worst.0, centroid, 3.0);
            let fe = f(expanded);
            pts[2] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < pts[1].1 {
            pts[2] = (reflected, fr);
        } else {
            let contracted = if fr < worst.1 {
                lerp(worst.0, centroid, 1.5)
            } else {
                lerp(worst.0, centroid, 0.5)
            };
            let fc = f(contracted);
            if fc < worst.1.min(fr) {
                pts[2] = (contracted, fc);
            } else {
                for k in 1..3 {
                    let x = lerp(pts[0].0, pts[k].0, 0.5);
                    pts[k] = (x, f(x));
                }
            }
        }
    }
    pts.sort_by(|a, b| a.1.total_cmp(&b.1));
    pts[0]
}

/// `I = S(ρ_A) + S(ρ_B) - S(ρ_AB)` in bits.
pub fn mutual_information(rho: &TwoQubitState) -> Result<f64> {
    let s_a = von_neumann_entropy(&rho.partial_trace(Subsystem::A))?;
    let s_b = von_neumann_entropy(&rho.partial_trace(Subsystem::B))?;
    let s_ab = von_neumann_entropy(rho.matrix())?;
    Ok(s_a + s_b - s_ab)
}

/// `CC = S(ρ_A) - S_min`
pub fn classical_correlation(rho: &TwoQubitState) -> Result<f64> {
    let s_a = von_neumann_entropy(&rho.partial_trace(Subsystem::A))?;
    Ok(s_a - minimize_conditional_entropy(rho).value)
}

/// `QD = S(ρ_B) - S(ρ_AB) + S_min`
pub fn quantum_discord(rho: &TwoQubitState) -> Result<f64> {
    let s_b = von_neumann_entropy(&rho.partial_trace(Subsystem::B))?;
    let s_ab = von_neumann_entropy(rho.matrix())?;
    Ok(s_b - s_ab + minimize_conditional_entropy(rho).value)
}

/// All correlation measures of one state, sharing a single minimization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationReport {
    pub concurrence: f64,
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub quantum_discord: f64,
    pub argmin_basis: MeasurementBasis,
    pub min_conditional_entropy: f64,
}

pub fn correlation_report(rho: &TwoQubitState) -> Result<CorrelationReport> {
    let s_a = von_neumann_entropy(&rho.partial_trace(Subsystem::A))?;
    let s_b = von_neumann_entropy(&rho.partial_trace(Subsystem::B))?;
    let s_ab = von_neumann_entropy(rho.matrix())?;
    let min = minimize_conditional_entropy(rho);
    Ok(CorrelationReport {
        concurrence: concurrence(rho)?,
        mutual_information: s_a + s_b - s_ab,
        classical_correlation: s_a - min.value,
        quantum_discord: s_b - s_ab + min.value,
        argmin_basis: min.basis,
        min_conditional_entropy: min.value,
    })
}
