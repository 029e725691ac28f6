//! Sweep configuration and the CSV format behind the `sweep` subcommand.
//!
//! # CSV format
//!
//! ```text
//! k_mev,full,nrl_achiral,nrl_pol_r,nrl_pol_l
//! 0.00000000e0,2.00000000e0,5.00000000e-1,5.00000000e-1,1.50000000e0
//! ...
//! ```
//!
//! One row per grid point, k uniformly spaced and inclusive of both
//! endpoints. Values are the shift curves normalized by |e| Abar with equal
//! potential components, written with 9 significant digits and `\n` line
//! endings so the output is byte-deterministic for a fixed configuration.

use std::io::Write;

use thiserror::Error;

use crate::algebra::Handedness;
use crate::shift::{
    shift_full, shift_nrl_achiral, shift_nrl_polarized, PotentialAverages, ShiftError,
};
use crate::spinor::{FourMomentum, SpinorError};
use crate::state::ElectronState;
use crate::units::ELECTRON_MASS_MEV;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid sweep configuration: {0}")]
    InvalidSweep(String),
    #[error(transparent)]
    Spinor(#[from] SpinorError),
    #[error(transparent)]
    Shift(#[from] ShiftError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Momentum-sweep grid: `steps` points from `k_min` to `k_max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub k_min: f64,
    pub k_max: f64,
    pub steps: usize,
    pub mass: f64,
}

impl Default for SweepConfig {
    /// 0 to 3 MeV in 61 steps: spans the rest-dominated through
    /// ultrarelativistic regimes for the electron mass.
    fn default() -> Self {
        SweepConfig {
            k_min: 0.0,
            k_max: 3.0,
            steps: 61,
            mass: ELECTRON_MASS_MEV,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if !self.k_min.is_finite() || self.k_min < 0.0 {
            return Err(CliError::InvalidSweep(format!(
                "k_min must be finite and >= 0, got {}",
                self.k_min
            )));
        }
        if !self.k_max.is_finite() || self.k_max <= self.k_min {
            return Err(CliError::InvalidSweep(format!(
                "k_max must be finite and > k_min, got {}",
                self.k_max
            )));
        }
        if self.steps < 2 {
            return Err(CliError::InvalidSweep(format!(
                "steps must be >= 2, got {}",
                self.steps
            )));
        }
        if !self.mass.is_finite() || self.mass <= 0.0 {
            return Err(CliError::InvalidSweep(format!(
                "mass must be finite and > 0, got {}",
                self.mass
            )));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        let span = self.k_max - self.k_min;
        let denom = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i == self.steps - 1 {
                    self.k_max
                } else {
                    self.k_min + span * i as f64 / denom
                }
            })
            .collect()
    }
}

/// One sweep row: normalized shift values at momentum `k_mev`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub k_mev: f64,
    pub full: f64,
    pub nrl_achiral: f64,
    pub nrl_pol_r: f64,
    pub nrl_pol_l: f64,
}

/// Evaluate the four shift curves over the grid, normalized by |e| Abar
/// (coupling 1, all potential components 1). Values come from the
/// closed-form shift functions.
pub fn sweep_rows(config: &SweepConfig) -> Result<Vec<SweepRow>, CliError> {
    config.validate()?;
    let potentials = PotentialAverages::uniform(1.0);
    config
        .grid()
        .into_iter()
        .map(|k| {
            let p = FourMomentum::z_aligned(config.mass, k)?;
            Ok(SweepRow {
                k_mev: k,
                full: shift_full(&ElectronState::achiral(p), &potentials, 1.0).total,
                nrl_achiral: shift_nrl_achiral(&p, &potentials, 1.0).total,
                nrl_pol_r: shift_nrl_polarized(&p, &potentials, Handedness::Right, 1.0).total,
                nrl_pol_l: shift_nrl_polarized(&p, &potentials, Handedness::Left, 1.0).total,
            })
        })
        .collect()
}

/// Fixed 9-significant-digit scientific formatting used for all CSV values.
pub fn format_sig9(x: f64) -> String {
    format!("{x:.8e}")
}

pub const SWEEP_CSV_HEADER: &str = "k_mev,full,nrl_achiral,nrl_pol_r,nrl_pol_l";

/// Write rows as CSV; byte-deterministic for a fixed configuration.
pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], writer: &mut W) -> std::io::Result<()> {
    writeln!(writer, "{SWEEP_CSV_HEADER}")?;
    for row in rows {
        writeln!(
            writer,
            "{},{},{},{},{}",
            format_sig9(row.k_mev),
            format_sig9(row.full),
            format_sig9(row.nrl_achiral),
            format_sig9(row.nrl_pol_r),
            format_sig9(row.nrl_pol_l)
        )?;
    }
    writer.flush()
}
