//! Bell state under intrinsic decoherence, spectral sum vs closed forms.

use qcorr::correlations::correlation_report;
use qcorr::model::{bell_initial_state, milburn_closed_form, milburn_evolve, ClosedFormVariant, DecoherenceParams, ModelParams};

fn main() -> qcorr::Result<()> {
    let p = ModelParams::new(3.0, 0.6, 0.0, 0.3)?;
    let rho0 = bell_initial_state();
    println!("mu = {:.6}, steady-state C = (Jx+Jy)/mu = {:.6}", p.mu(), (p.jx + p.jy) / p.mu());
    println!("{:>6} {:>10} {:>10} {:>10} {:>12} {:>12}", "t", "C", "QD", "CC", "dev(mu)", "dev(mu^2)");
    for k in 0..=12 {
        let dp = DecoherenceParams::new(p, 0.1, 0.5 * k as f64)?;
        let rho = milburn_evolve(&dp, &rho0)?;
        let r = correlation_report(&rho)?;
        let corrected = milburn_closed_form(&dp, ClosedFormVariant::Corrected)?;
        let published = milburn_closed_form(&dp, ClosedFormVariant::AsPublished)?;
        println!(
            "{:>6.2} {:>10.6} {:>10.6} {:>10.6} {:>12.2e} {:>12.2e}",
            dp.time,
            r.concurrence,
            r.quantum_discord,
            r.classical_correlation,
            rho.matrix().max_abs_diff(&corrected),
            rho.matrix().max_abs_diff(&published)
        );
    }
    Ok(())
}
