//! Scans the Dz = 6 decoherence trace for concurrence sudden death.

use qcorr::sweep::{death_revival_events, run_sweep, Preset, SweepConfig};

fn main() -> qcorr::Result<()> {
    let cfg = SweepConfig::from_preset(Preset::Fig2Lower, "unused.csv")?;
    let rows = run_sweep(&cfg)?;
    let min = rows.iter().min_by(|a, b| a.concurrence.total_cmp(&b.concurrence)).unwrap();
    println!(
        "{} rows; min C = {:.7} at t = {:.3} (QD there {:.3e}); floor (Jx+Jy)/mu = {:.7}",
        rows.len(),
        min.concurrence,
        min.x,
        min.quantum_discord,
        (cfg.params.jx + cfg.params.jy) / cfg.params.mu()
    );
    let events = death_revival_events(&rows);
    if events.is_empty() {
        println!("no interval with C = 0");
    }
    for ev in events {
        println!("C = 0 from t = {} to {} ({} rows)", ev.death_at, ev.revival_at, ev.zero_rows);
    }
    Ok(())
}
