//! Thermal sweep over (Dz, T) written to CSV. Pass an output path, or the
//! file goes to the system temp dir.

use qcorr::sweep::{emit_csv, run_sweep, Preset, Range, SweepConfig};

fn main() -> qcorr::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map(Into::into)
        .unwrap_or_else(|| std::env::temp_dir().join("qcorr_fig1_coarse.csv"));
    let mut cfg = SweepConfig::from_preset(Preset::Fig1, out)?;
    // coarser than the preset so it finishes instantly
    cfg.axis = Range::new(0.01, 2.01, 0.2).map_err(qcorr::Error::Config)?;
    cfg.dz_axis = Some(Range::new(0.0, 3.0, 0.5).map_err(qcorr::Error::Config)?);
    let rows = run_sweep(&cfg)?;
    emit_csv(&cfg.output_path, cfg.mode, &rows)?;
    println!("{} rows -> {}", rows.len(), cfg.output_path.display());
    for r in rows.iter().filter(|r| (r.x - 0.61).abs() < 1e-9) {
        println!("Dz = {:.1} T = 0.61: C = {:.4} QD = {:.4}", r.dz, r.concurrence, r.quantum_discord);
    }
    Ok(())
}
