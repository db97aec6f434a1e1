//! Reduced states and von Neumann entropies of a thermal state.

use qcorr::model::{thermal_state, ModelParams, ThermalPoint};
use qcorr::qmat::{eig_hermitian, von_neumann_entropy, Subsystem};

fn main() -> qcorr::Result<()> {
    let rho = thermal_state(&ThermalPoint::new(ModelParams::new(0.2, 0.4, 0.8, 1.0)?, 0.5)?)?;
    let spec = eig_hermitian(rho.matrix())?;
    println!("spectrum of rho: {:?}", spec.eigenvalues);
    let s_ab = von_neumann_entropy(rho.matrix())?;
    let s_a = von_neumann_entropy(&rho.partial_trace(Subsystem::A))?;
    let s_b = von_neumann_entropy(&rho.partial_trace(Subsystem::B))?;
    println!("S(AB) = {s_ab:.9} bits, S(A) = {s_a:.9}, S(B) = {s_b:.9}");
    println!("I(A:B) = {:.9}", s_a + s_b - s_ab);
    Ok(())
}
