use rayon::prelude::*;

use super::config::{SweepConfig, SweepMode};
use crate::correlations::correlation_report;
use crate::error::{Error, Result};
use crate::model::{
    bell_initial_state, milburn_closed_form, milburn_evolve, thermal_state, ClosedFormVariant, DecoherenceParams,
    ThermalPoint,
};

/// One grid point of a sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub dz: f64,
    /// Temperature (thermal) or time (decoherence).
    pub x: f64,
    pub concurrence: f64,
    pub classical_correlation: f64,
    pub quantum_discord: f64,
    pub mutual_information: f64,
    /// Max entrywise deviation of the published closed-form Bell-state
    /// solution from the spectral-sum state (decoherence only).
    pub closed_form_dev: Option<f64>,
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    match cfg.mode {
        SweepMode::Thermal => run_thermal_sweep(cfg),
        SweepMode::Decoherence => run_decoherence_sweep(cfg),
    }
}

/// Rows ordered by `(D_z, T)`.
pub fn run_thermal_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    if cfg.mode != SweepMode::Thermal {
        return Err(Error::Config(format!("expected a thermal config, got {}", cfg.mode)));
    }
    let grid = grid(cfg);
    let params = cfg.params;
    in_pool(cfg.threads, || {
        grid.par_iter()
            .map(|&(dz, t)| {
                let tp = ThermalPoint::new(params.with_dz(dz), t)?;
                let r = correlation_report(&thermal_state(&tp)?)?;
                Ok(SweepRow {
                    dz,
                    x: t,
                    concurrence: r.concurrence,
                    classical_correlation: r.classical_correlation,
                    quantum_discord: r.quantum_discord,
                    mutual_information: r.mutual_information,
                    closed_form_dev: None,
                })
            })
            .collect()
    })
}

/// Rows ordered by `(D_z, t)`, each evolved independently from the Bell
/// state.
pub fn run_decoherence_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    if cfg.mode != SweepMode::Decoherence {
        return Err(Error::Config(format!("expected a decohere config, got {}", cfg.mode)));
    }
    let grid = grid(cfg);
    let rho0 = bell_initial_state();
    let (params, gamma) = (cfg.params, cfg.gamma);
    in_pool(cfg.threads, || {
        grid.par_iter()
            .map(|&(dz, t)| {
                let dp = DecoherenceParams::new(params.with_dz(dz), gamma, t)?;
                let rho = milburn_evolve(&dp, &rho0)?;
                let published = milburn_closed_form(&dp, ClosedFormVariant::AsPublished)?;
                let r = correlation_report(&rho)?;
                Ok(SweepRow {
                    dz,
                    x: t,
                    concurrence: r.concurrence,
                    classical_correlation: r.classical_correlation,
                    quantum_discord: r.quantum_discord,
                    mutual_information: r.mutual_information,
                    closed_form_dev: Some(rho.matrix().max_abs_diff(&published)),
                })
            })
            .collect()
    })
}

fn grid(cfg: &SweepConfig) -> Vec<(f64, f64)> {
    let xs = cfg.axis.points();
    cfg.dz_points()
        .into_iter()
        .flat_map(|dz| xs.iter().map(move |&x| (dz, x)))
        .collect()
}

fn in_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(job),
            Err(_) => job(),
        },
        None => job(),
    }
}

/// A maximal run of rows with concurrence exactly zero, bounded on both
/// sides by rows with positive concurrence at the same `D_z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeathRevival {
    pub dz: f64,
    /// Axis value of the first zero row.
    pub death_at: f64,
    /// Axis value of the first positive row after the run.
    pub revival_at: f64,
    pub zero_rows: usize,
}

/// Scans each `D_z` trace for sudden death followed by revival.
pub fn death_revival_events(rows: &[SweepRow]) -> Vec<DeathRevival> {
    let mut events = Vec::new();
    for trace in rows.chunk_by(|a, b| a.dz == b.dz) {
        let mut i = 0;
        while i < trace.len() {
            if trace[i].concurrence != 0.0 {
                i += 1;
                continue;
            }
            let start = i;
            while i < trace.len() && trace[i].concurrence == 0.0 {
                i += 1;
            }
            if start > 0 && i < trace.len() {
                events.push(DeathRevival {
                    dz: trace[start].dz,
                    death_at: trace[start].x,
                    revival_at: trace[i].x,
                    zero_rows: i - start,
                });
            }
        }
    }
    events
}
