use std::process::ExitCode;

use clap::Parser;
use qcorr::sweep::{death_revival_events, emit_csv, run_sweep, SweepArgs, SweepMode};

fn main() -> ExitCode {
    let args = match SweepArgs::try_parse() {
        Ok(a) => a,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(2);
        }
    };
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qcorr: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(args: SweepArgs) -> qcorr::Result<()> {
    let cfg = args.into_config()?;
    let rows = run_sweep(&cfg)?;
    emit_csv(&cfg.output_path, cfg.mode, &rows)?;
    eprintln!("wrote {} rows to {}", rows.len(), cfg.output_path.display());
    if cfg.mode == SweepMode::Decoherence {
        let events = death_revival_events(&rows);
        if events.is_empty() {
            eprintln!("no sudden death / revival events (C never clamps to 0)");
        }
        for ev in events {
            eprintln!(
                "dz = {}: C = 0 from t = {} for {} rows, revives at t = {}",
                ev.dz, ev.death_at, ev.zero_rows, ev.revival_at
            );
        }
    }
    Ok(())
}
