//! Wootters concurrence: Werner family and the X-state shortcut.

use qcorr::correlations::{concurrence, concurrence_x_state};
use qcorr::qmat::{Mat4, TwoQubitState, C64};

fn main() -> qcorr::Result<()> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let z = C64::new(0.0, 0.0);
    let bell = TwoQubitState::pure([z, C64::new(s, 0.0), C64::new(s, 0.0), z])?;
    for p in [0.0, 0.25, 1.0 / 3.0, 0.5, 0.75, 1.0] {
        let m = bell.matrix().scale_re(p) + Mat4::identity().scale_re((1.0 - p) / 4.0);
        let w = TwoQubitState::new(m)?;
        println!(
            "Werner p = {p:.4}: C = {:.12} (X path {:.12}, (3p-1)/2 = {:.4})",
            concurrence(&w)?,
            concurrence_x_state(&w)?,
            ((3.0 * p - 1.0) / 2.0).max(0.0)
        );
    }
    let plus = TwoQubitState::pure([C64::new(0.5, 0.0); 4])?;
    println!("|++>: C = {}", concurrence(&plus)?);
    match concurrence_x_state(&plus) {
        Err(e) => println!("X path refuses |++>: {e}"),
        Ok(c) => println!("X path: {c}"),
    }
    Ok(())
}
