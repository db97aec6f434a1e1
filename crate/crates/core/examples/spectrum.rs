//! Hamiltonian matrix and its spectrum, closed form vs Jacobi.

use qcorr::model::{build_hamiltonian, closed_form_spectrum, hamiltonian_spectrum, ModelParams};

fn main() -> qcorr::Result<()> {
    let p = ModelParams::new(0.2, 0.4, 0.8, 1.0)?;
    let h = build_hamiltonian(&p);
    println!("H for {p:?}:");
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|j| format!("{:>14.4}", h[(i, j)])).collect();
        println!("  {}", row.join(" "));
    }
    let closed = closed_form_spectrum(&p);
    let numeric = hamiltonian_spectrum(&p)?;
    println!("mu = {:.6}", p.mu());
    for k in 0..4 {
        println!("E{k}: closed form {:+.12}, Jacobi {:+.12}", closed.eigenvalues[k], numeric.eigenvalues[k]);
    }
    Ok(())
}
