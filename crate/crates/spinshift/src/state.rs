//! Single-electron superposition states over spin-z eigenstates and their
//! box-regularized normalization.
//!
//! The divergent (2pi)^3 delta^3(0) factor of the continuum normalization is
//! never evaluated: it is carried as a formal [`VolumeSymbol`] that must
//! cancel whenever a ratio produces a physical number.

use num_complex::Complex64;
use thiserror::Error;

use crate::spinor::FourMomentum;

#[derive(Debug, Error, PartialEq)]
pub enum StateError {
    #[error("state coefficients must not both vanish")]
    ZeroState,
    #[error("state coefficients must be finite")]
    NonFiniteCoefficients,
    #[error("volume symbol mismatch: numerator power {numerator}, denominator power {denominator}")]
    VolumeMismatch { numerator: i32, denominator: i32 },
}

/// Formal stand-in for the divergent (2pi)^3 delta^3(0) box factor, tracked
/// by its power. It is never converted to a number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VolumeSymbol {
    power: i32,
}

impl VolumeSymbol {
    pub const UNIT: VolumeSymbol = VolumeSymbol { power: 1 };

    pub const fn with_power(power: i32) -> Self {
        VolumeSymbol { power }
    }

    pub fn power(self) -> i32 {
        self.power
    }

    pub fn cancels_with(self, other: VolumeSymbol) -> bool {
        self.power == other.power
    }
}

/// A coefficient attached to a power of the formal box volume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regularized {
    pub coefficient: f64,
    pub volume: VolumeSymbol,
}

/// State norm 2E(|l+|^2 + |l-|^2) times one power of the box volume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularizedNorm {
    pub coefficient: f64,
    pub volume: VolumeSymbol,
}

impl RegularizedNorm {
    /// Divide a regularized numerator by this norm, checking that the volume
    /// symbols cancel before producing a plain number.
    pub fn cancel(&self, numerator: Regularized) -> Result<f64, StateError> {
        if !numerator.volume.cancels_with(self.volume) {
            return Err(StateError::VolumeMismatch {
                numerator: numerator.volume.power(),
                denominator: self.volume.power(),
            });
        }
        Ok(numerator.coefficient / self.coefficient)
    }
}

/// Superposition l+ |up, k> + l- |down, k> of spin-z eigenstates at fixed
/// momentum. Coefficients are not forced to unit norm; every downstream
/// formula carries the explicit |l+|^2 + |l-|^2 denominator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectronState {
    p: FourMomentum,
    lambda_plus: Complex64,
    lambda_minus: Complex64,
}

impl ElectronState {
    pub fn new(
        p: FourMomentum,
        lambda_plus: Complex64,
        lambda_minus: Complex64,
    ) -> Result<Self, StateError> {
        let finite = lambda_plus.re.is_finite()
            && lambda_plus.im.is_finite()
            && lambda_minus.re.is_finite()
            && lambda_minus.im.is_finite();
        if !finite {
            return Err(StateError::NonFiniteCoefficients);
        }
        if lambda_plus.norm_sqr() + lambda_minus.norm_sqr() == 0.0 {
            return Err(StateError::ZeroState);
        }
        Ok(ElectronState {
            p,
            lambda_plus,
            lambda_minus,
        })
    }

    /// Pure spin-up eigenstate.
    pub fn spin_up(p: FourMomentum) -> Self {
        ElectronState {
            p,
            lambda_plus: Complex64::new(1.0, 0.0),
            lambda_minus: Complex64::new(0.0, 0.0),
        }
    }

    /// Pure spin-down eigenstate.
    pub fn spin_down(p: FourMomentum) -> Self {
        ElectronState {
            p,
            lambda_plus: Complex64::new(0.0, 0.0),
            lambda_minus: Complex64::new(1.0, 0.0),
        }
    }

    /// Equal-weight real superposition, the achiral reference state.
    pub fn achiral(p: FourMomentum) -> Self {
        let c = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        ElectronState {
            p,
            lambda_plus: c,
            lambda_minus: c,
        }
    }

    pub fn momentum(&self) -> &FourMomentum {
        &self.p
    }

    pub fn lambda_plus(&self) -> Complex64 {
        self.lambda_plus
    }

    pub fn lambda_minus(&self) -> Complex64 {
        self.lambda_minus
    }

    /// |l+|^2 + |l-|^2.
    pub fn coefficient_norm_sq(&self) -> f64 {
        self.lambda_plus.norm_sqr() + self.lambda_minus.norm_sqr()
    }

    /// <Psi|Psi> = 2E (|l+|^2 + |l-|^2) times the box volume.
    pub fn norm(&self) -> RegularizedNorm {
        RegularizedNorm {
            coefficient: 2.0 * self.p.energy() * self.coefficient_norm_sq(),
            volume: VolumeSymbol::UNIT,
        }
    }

    /// Chirality expectation (|l+|^2 - |l-|^2) / 2(|l+|^2 + |l-|^2), the
    /// helicity of the state for momentum along +z; in [-1/2, 1/2].
    pub fn chirality_expectation(&self) -> f64 {
        0.5 * (self.lambda_plus.norm_sqr() - self.lambda_minus.norm_sqr())
            / self.coefficient_norm_sq()
    }
}
