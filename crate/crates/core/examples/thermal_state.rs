//! Gibbs state at a few temperatures, plus the published-element check.

use qcorr::model::{thermal_state, ModelParams, ThermalCrossCheck, ThermalPoint};

fn main() -> qcorr::Result<()> {
    let p = ModelParams::new(0.2, 0.4, 0.8, 1.0)?;
    for t in [0.1, 0.5, 1.0, 2.0] {
        let tp = ThermalPoint::new(p, t)?;
        let rho = thermal_state(&tp)?;
        println!(
            "T = {t:<4} rho11 = {:.6} rho22 = {:.6} |rho23| = {:.6} purity = {:.6}",
            rho.entry(0, 0).re,
            rho.entry(1, 1).re,
            rho.entry(1, 2).norm(),
            rho.purity()
        );
    }
    let check = ThermalCrossCheck::run(&ThermalPoint::new(p, 1.0)?)?;
    println!("closed-form diagonal/corner deviation: {:.2e}", check.diagonal_and_corner_deviation());
    println!("closed-form rho23, literal sign:       {:.2e}", check.rho23_literal_deviation());
    println!("closed-form rho23, sign flipped:       {:.2e}", check.rho23_sign_flipped_deviation());
    Ok(())
}
