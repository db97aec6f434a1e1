//! Parameter sweeps over the thermal and decoherence models with CSV output.

mod config;
mod csv;
mod run;

pub use config::{
    parse_config, parse_config_file, Preset, Range, SweepArgs, SweepConfig, SweepMode, TEMPERATURE_FLOOR,
};
pub use csv::{emit_csv, format_significant, header, write_csv, SIGNIFICANT_DIGITS};
pub use run::{
    death_revival_events, run_decoherence_sweep, run_sweep, run_thermal_sweep, DeathRevival, SweepRow,
};
