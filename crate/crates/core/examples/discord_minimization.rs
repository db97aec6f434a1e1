//! Conditional-entropy minimization and the full correlation report.

use qcorr::correlations::{conditional_entropy, correlation_report, MeasurementBasis};
use qcorr::model::{thermal_state, ModelParams, ThermalPoint};

fn main() -> qcorr::Result<()> {
    let tp = ThermalPoint::new(ModelParams::new(0.2, 0.4, 0.8, 1.0)?, 1.0)?;
    let rho = thermal_state(&tp)?;

    println!("S(A|B) along a few measurement directions:");
    for (theta, phi) in [(0.0, 0.0), (0.4, 0.0), (std::f64::consts::FRAC_PI_4, 0.0), (std::f64::consts::FRAC_PI_4, 1.0)] {
        let b = MeasurementBasis::new(theta, phi)?;
        println!("  theta = {theta:.4} phi = {phi:.4}: {:.12}", conditional_entropy(&rho, &b));
    }

    let r = correlation_report(&rho)?;
    println!(
        "minimum {:.12} at theta = {:.6}, phi = {:.6}",
        r.min_conditional_entropy, r.argmin_basis.theta, r.argmin_basis.phi
    );
    println!(
        "C = {:.6}  I = {:.6}  CC = {:.6}  QD = {:.6}",
        r.concurrence, r.mutual_information, r.classical_correlation, r.quantum_discord
    );
    Ok(())
}
