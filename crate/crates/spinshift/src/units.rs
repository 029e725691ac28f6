//! Physical constants and natural-units bridges (ħ = c = 1, energies in MeV).
//!
//! Constants are CODATA-style values, collected here so every module and the
//! CLI agree on them.

use thiserror::Error;

use crate::shift::zeeman_shift;

/// Electron rest mass (MeV).
pub const ELECTRON_MASS_MEV: f64 = 0.510998946;

/// Speed of light (m/s, exact).
pub const SPEED_OF_LIGHT_M_PER_S: f64 = 2.997_924_58e8;

/// Bohr magneton (eV/T).
pub const BOHR_MAGNETON_EV_PER_T: f64 = 5.788_381_806_0e-5;

/// Inverse fine-structure constant.
pub const INVERSE_FINE_STRUCTURE: f64 = 137.035_999_084;

/// Electron gyromagnetic factor, tree level.
pub const GYROMAGNETIC_FACTOR: f64 = 2.0;

/// Published reference estimate for the benchmark scenario (3 gauss magnet,
/// 1 m apparatus), carried in reports for side-by-side comparison (MeV).
pub const REFERENCE_BAR_MAGNET_SHIFT_MEV: f64 = 0.160;

/// Coupling magnitude |e| in natural units, sqrt(4*pi*alpha).
pub fn elementary_charge_natural() -> f64 {
    (4.0 * std::f64::consts::PI / INVERSE_FINE_STRUCTURE).sqrt()
}

#[derive(Debug, Error, PartialEq)]
pub enum ScenarioError {
    #[error("magnetic field must be finite and >= 0, got {0}")]
    InvalidField(f64),
    #[error("apparatus scale must be finite and > 0, got {0}")]
    InvalidScale(f64),
    #[error("lorentz gamma must be finite and >= 1, got {0}")]
    InvalidGamma(f64),
}

/// Energy scale |e|·c·B·L of a unit charge crossing length `length_m` in a
/// field of `b_tesla`, expressed in MeV.
///
/// In SI this is c·B·L volts, hence c·B·L electron-volts for one elementary
/// charge; the 1e-6 converts eV to MeV.
pub fn tesla_meter_to_mev(b_tesla: f64, length_m: f64) -> f64 {
    b_tesla * length_m * SPEED_OF_LIGHT_M_PER_S * 1e-6
}

/// v = sqrt(1 - 1/gamma^2).
pub fn beta_from_gamma(gamma: f64) -> Result<f64, ScenarioError> {
    if !gamma.is_finite() || gamma < 1.0 {
        return Err(ScenarioError::InvalidGamma(gamma));
    }
    Ok((1.0 - 1.0 / (gamma * gamma)).max(0.0).sqrt())
}

/// Field/apparatus configuration for the physical estimates.
#[derive(Debug, Clone, Copy)]
pub struct Scenario {
    pub b_field_tesla: f64,
    pub apparatus_scale_m: f64,
    pub lorentz_gamma: f64,
}

impl Default for Scenario {
    /// The benchmark case: a 3 gauss bar magnet over a 1 m apparatus, with a
    /// slow electron at gamma = 1.001 for comparison.
    fn default() -> Self {
        Scenario {
            b_field_tesla: 3e-4,
            apparatus_scale_m: 1.0,
            lorentz_gamma: 1.001,
        }
    }
}

impl Scenario {
    pub fn validate(&self) -> Result<(), ScenarioError> {
        if !self.b_field_tesla.is_finite() || self.b_field_tesla < 0.0 {
            return Err(ScenarioError::InvalidField(self.b_field_tesla));
        }
        if !self.apparatus_scale_m.is_finite() || self.apparatus_scale_m <= 0.0 {
            return Err(ScenarioError::InvalidScale(self.apparatus_scale_m));
        }
        if !self.lorentz_gamma.is_finite() || self.lorentz_gamma < 1.0 {
            return Err(ScenarioError::InvalidGamma(self.lorentz_gamma));
        }
        Ok(())
    }
}

/// Estimates for one [`Scenario`].
///
/// `ratio` is `shift_ultrarelativistic_mev / shift_at_gamma_mev`; it is
/// infinite at gamma = 1 (zero velocity) and NaN when the field vanishes.
#[derive(Debug, Clone, Copy)]
pub struct ScenarioReport {
    /// |e|·<A3> energy scale from A = B×x/2 at |x| = apparatus scale (MeV).
    pub a3_natural_mev: f64,
    /// Magnetic shift in the |k|/E -> 1 limit (MeV).
    pub shift_ultrarelativistic_mev: f64,
    /// Magnetic shift at the scenario's gamma, |k|/E = v (MeV).
    pub shift_at_gamma_mev: f64,
    pub ratio: f64,
    /// Quantum-mechanical comparison shift for the same field (eV).
    pub zeeman_ev: f64,
    /// Reference estimate for the benchmark scenario (MeV).
    pub reference_shift_mev: f64,
}

/// Full estimate chain for a scenario.
///
/// The direct estimate |e|<A3> = B·c·d/2 differs from the reference value by
/// a geometry-dependent factor; both numbers are reported rather than
/// reconciled.
pub fn scenario_estimate(sc: &Scenario) -> Result<ScenarioReport, ScenarioError> {
    sc.validate()?;
    let a3_natural_mev = 0.5 * tesla_meter_to_mev(sc.b_field_tesla, sc.apparatus_scale_m);
    let v = beta_from_gamma(sc.lorentz_gamma)?;
    let shift_ultrarelativistic_mev = a3_natural_mev;
    let shift_at_gamma_mev = a3_natural_mev * v;
    let ratio = shift_ultrarelativistic_mev / shift_at_gamma_mev;
    let zeeman_ev = zeeman_shift([0.0, 0.0, sc.b_field_tesla], 0.5, GYROMAGNETIC_FACTOR);
    Ok(ScenarioReport {
        a3_natural_mev,
        shift_ultrarelativistic_mev,
        shift_at_gamma_mev,
        ratio,
        zeeman_ev,
        reference_shift_mev: REFERENCE_BAR_MAGNET_SHIFT_MEV,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tesla_meter_reference_values() {
        assert_eq!(tesla_meter_to_mev(1.0, 1.0), 299.792458);
        assert_eq!(tesla_meter_to_mev(0.0, 1.0), 0.0);
        let weak = tesla_meter_to_mev(3e-4, 1.0);
        assert!((weak - 0.0899377374).abs() < 1e-9, "got {weak}");
    }

    #[test]
    fn beta_monotone_with_endpoints() {
        assert_eq!(beta_from_gamma(1.0).unwrap(), 0.0);
        // Independent route: v = sqrt(gamma^2 - 1) / gamma.
        let mut prev = 0.0;
        for gamma in [1.001, 1.01, 1.1, 2.0, 10.0, 1e3, 1e6] {
            let v = beta_from_gamma(gamma).unwrap();
            let v_alt = (gamma * gamma - 1.0).sqrt() / gamma;
            assert!((v - v_alt).abs() < 1e-14 * v_alt.max(1.0));
            assert!(v > prev && v < 1.0);
            prev = v;
        }
        assert!((beta_from_gamma(1e8).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn slow_electron_velocity() {
        let v = beta_from_gamma(1.001).unwrap();
        assert!((v - 0.0446878).abs() < 1e-6, "got {v}");
        assert!((1.0 / v - 22.3775).abs() < 1e-3, "ratio {}", 1.0 / v);
    }

    #[test]
    fn gamma_below_one_rejected() {
        assert!(matches!(
            beta_from_gamma(0.999),
            Err(ScenarioError::InvalidGamma(_))
        ));
        let sc = Scenario {
            lorentz_gamma: 0.5,
            ..Scenario::default()
        };
        assert!(scenario_estimate(&sc).is_err());
    }

    #[test]
    fn default_scenario_report() {
        let report = scenario_estimate(&Scenario::default()).unwrap();
        assert!((report.a3_natural_mev - 0.0449688687).abs() < 1e-9);
        assert!(report.ratio > 20.0 && (report.ratio - 22.3775).abs() < 1e-3);
        // ratio * slow shift reconstructs the ultrarelativistic shift exactly
        assert!(
            (report.ratio * report.shift_at_gamma_mev - report.shift_ultrarelativistic_mev).abs()
                < 1e-15
        );
        let z = report.zeeman_ev.abs();
        assert!((1e-8..=1e-7).contains(&z), "zeeman {z}");
        assert_eq!(report.reference_shift_mev, 0.160);

        // slow shift implied by the reference value is about 1.4% of the
        // electron rest mass
        let v = beta_from_gamma(1.001).unwrap();
        let fraction = report.reference_shift_mev * v / ELECTRON_MASS_MEV;
        assert!((fraction - 0.014).abs() < 2e-4, "fraction {fraction}");
    }

    #[test]
    fn stationary_electron_sentinel() {
        let sc = Scenario {
            lorentz_gamma: 1.0,
            ..Scenario::default()
        };
        let report = scenario_estimate(&sc).unwrap();
        assert_eq!(report.shift_at_gamma_mev, 0.0);
        assert!(report.ratio.is_infinite());
    }

    #[test]
    fn natural_coupling_magnitude() {
        let e = elementary_charge_natural();
        // alpha = e^2 / 4pi
        let alpha = e * e / (4.0 * std::f64::consts::PI);
        assert!((alpha * INVERSE_FINE_STRUCTURE - 1.0).abs() < 1e-14);
        assert!((e - 0.302822).abs() < 1e-6);
    }
}
