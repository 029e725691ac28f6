//! First-order energy shifts of a free electron state in averaged
//! electromagnetic potentials: a brute-force matrix-element oracle next to
//! every closed form, in the full relativistic treatment and in the
//! non-relativistic limit (NRL).
//!
//! The oracle evaluates 2|e| A_mu psi† M_mu psi summed over the four spin
//! configurations with their lambda weights, where M_0 = I and
//! M_p = g5 sigma^{ab}/2, then divides by the state norm after checking that
//! the box-volume symbols cancel. The NRL is realized by zeroing psi3, psi4
//! inside every bilinear while keeping the full 2E(|l+|^2+|l-|^2)
//! normalization.

use std::sync::OnceLock;

use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{chiral_spin_operator, AlgebraError, Handedness, SpinorMatrix};
use crate::spinor::{dirac_spinor, DiracSpinor, FourMomentum, Spin, SpinorError};
use crate::state::{ElectronState, Regularized, StateError, VolumeSymbol};
use crate::units::BOHR_MAGNETON_EV_PER_T;

#[derive(Debug, Error, PartialEq)]
pub enum ShiftError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Spinor(#[from] SpinorError),
    #[error(transparent)]
    State(#[from] StateError),
    #[error("shift numerator has imaginary residue {0:e}")]
    NonHermitianNumerator(f64),
    #[error("difference decomposition violated by {0:e}")]
    DecompositionMismatch(f64),
}

/// Averaged potential components <A_0>..<A_3>; dimensionless for normalized
/// sweeps, MeV-equivalent when physical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialAverages {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl PotentialAverages {
    pub fn new(a0: f64, a1: f64, a2: f64, a3: f64) -> Self {
        PotentialAverages { a0, a1, a2, a3 }
    }

    /// Equal components, the normalization used by the sweep curves.
    pub fn uniform(a: f64) -> Self {
        Self::new(a, a, a, a)
    }

    pub fn component(&self, mu: usize) -> f64 {
        [self.a0, self.a1, self.a2, self.a3][mu]
    }

    pub fn max_abs(&self) -> f64 {
        self.a0
            .abs()
            .max(self.a1.abs())
            .max(self.a2.abs())
            .max(self.a3.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreatmentMode {
    Full,
    Nrl,
}

impl std::fmt::Display for TreatmentMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TreatmentMode::Full => write!(f, "full"),
            TreatmentMode::Nrl => write!(f, "nrl"),
        }
    }
}

/// An energy shift with its per-potential-component breakdown. `total` is the
/// exact sum of `by_component`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftResult {
    pub total: f64,
    pub by_component: [f64; 4],
    pub mode: TreatmentMode,
    pub charge_magnitude: f64,
}

impl ShiftResult {
    fn from_components(by_component: [f64; 4], mode: TreatmentMode, coupling: f64) -> Self {
        // normalize -0.0 from dead terms
        let by_component = by_component.map(|c| if c == 0.0 { 0.0 } else { c });
        ShiftResult {
            total: by_component.iter().sum(),
            by_component,
            mode,
            charge_magnitude: coupling,
        }
    }
}

/// Raw shift numerator, per component, before norm division; coefficients of
/// one power of the box volume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawNumerator {
    pub by_component: [f64; 4],
    pub volume: VolumeSymbol,
}

/// Operator contracted with A_mu in the shift integrand: the identity for
/// mu = 0, the chirally transformed spin operator for mu = 1..3.
pub fn shift_operator(mu: usize) -> Result<SpinorMatrix, AlgebraError> {
    static OPERATORS: OnceLock<[SpinorMatrix; 4]> = OnceLock::new();
    if mu > 3 {
        return Err(AlgebraError::InvalidGammaIndex(mu));
    }
    let ops = OPERATORS.get_or_init(|| {
        [
            SpinorMatrix::identity(),
            chiral_spin_operator(1).expect("fixed component"),
            chiral_spin_operator(2).expect("fixed component"),
            chiral_spin_operator(3).expect("fixed component"),
        ]
    });
    Ok(ops[mu])
}

fn spinor_for_mode(
    spin: Spin,
    p: &FourMomentum,
    mode: TreatmentMode,
) -> Result<DiracSpinor, SpinorError> {
    let u = dirac_spinor(spin, p)?;
    Ok(match mode {
        TreatmentMode::Full => u,
        TreatmentMode::Nrl => {
            let c = u.components();
            let zero = Complex64::new(0.0, 0.0);
            DiracSpinor::from_components([c[0], c[1], zero, zero])
        }
    })
}

/// Single bra-ket contraction u(bra)† M_mu u(ket) for momentum `p`, with the
/// NRL truncation applied to both sides when requested.
pub fn configuration_bilinear(
    bra: Spin,
    ket: Spin,
    mu: usize,
    p: &FourMomentum,
    mode: TreatmentMode,
) -> Result<Complex64, ShiftError> {
    let op = shift_operator(mu)?;
    let ub = spinor_for_mode(bra, p, mode)?;
    let uk = spinor_for_mode(ket, p, mode)?;
    Ok(ub.matrix_element(&op, &uk))
}

/// Shift numerator 2|e| A_mu sum_{rs} l_r* l_s u^r† M_mu u^s per component,
/// as raw volume coefficients.
pub fn shift_oracle_numerator(
    s: &ElectronState,
    a: &PotentialAverages,
    mode: TreatmentMode,
    coupling: f64,
) -> Result<RawNumerator, ShiftError> {
    let p = s.momentum();
    let spins = [
        (Spin::Up, s.lambda_plus()),
        (Spin::Down, s.lambda_minus()),
    ];
    let mut by_component = [0.0; 4];
    let hermitian_scale = 2.0 * p.energy() * s.coefficient_norm_sq();
    for (mu, slot) in by_component.iter_mut().enumerate() {
        let mut weighted = Complex64::new(0.0, 0.0);
        for (bra, lb) in spins {
            for (ket, lk) in spins {
                weighted += lb.conj() * lk * configuration_bilinear(bra, ket, mu, p, mode)?;
            }
        }
        if weighted.im.abs() > 1e-12 * hermitian_scale {
            return Err(ShiftError::NonHermitianNumerator(weighted.im));
        }
        *slot = 2.0 * coupling * a.component(mu) * weighted.re;
    }
    Ok(RawNumerator {
        by_component,
        volume: VolumeSymbol::UNIT,
    })
}

/// Brute-force expectation value of the energy shift: spinor contractions
/// over the four spin configurations, divided by the state norm after the
/// volume symbols cancel.
pub fn shift_oracle(
    s: &ElectronState,
    a: &PotentialAverages,
    mode: TreatmentMode,
    coupling: f64,
) -> Result<ShiftResult, ShiftError> {
    let numerator = shift_oracle_numerator(s, a, mode, coupling)?;
    let norm = s.norm();
    let mut by_component = [0.0; 4];
    for (slot, raw) in by_component.iter_mut().zip(numerator.by_component) {
        *slot = norm.cancel(Regularized {
            coefficient: raw,
            volume: numerator.volume,
        })?;
    }
    Ok(ShiftResult::from_components(by_component, mode, coupling))
}

/// Fully relativistic closed form |e| (2 A0 + (|k|/E) A3), independent of the
/// spin-state coefficients.
pub fn shift_full(s: &ElectronState, a: &PotentialAverages, coupling: f64) -> ShiftResult {
    let p = s.momentum();
    let velocity = p.k_mag() / p.energy();
    ShiftResult::from_components(
        [
            2.0 * coupling * a.a0,
            0.0,
            0.0,
            coupling * velocity * a.a3,
        ],
        TreatmentMode::Full,
        coupling,
    )
}

/// NRL closed form: electric part |e| A0 (1 - (|k|/E)(|l+|^2-|l-|^2)/|l|^2),
/// magnetic part -(|e|/|l|^2) { (m/E)[A1 Re(l+* l-) + A2 Im(l+* l-)]
/// + A3 (|l+|^2-|l-|^2)/2 } + |e| A3 |k| / 2E.
pub fn shift_nrl(s: &ElectronState, a: &PotentialAverages, coupling: f64) -> ShiftResult {
    let p = s.momentum();
    let e = p.energy();
    let velocity = p.k_mag() / e;
    let norm_sq = s.coefficient_norm_sq();
    let imbalance = (s.lambda_plus().norm_sqr() - s.lambda_minus().norm_sqr()) / norm_sq;
    let cross = s.lambda_plus().conj() * s.lambda_minus();
    let mass_ratio = p.mass() / e;
    ShiftResult::from_components(
        [
            coupling * a.a0 * (1.0 - velocity * imbalance),
            -coupling * mass_ratio * a.a1 * cross.re / norm_sq,
            -coupling * mass_ratio * a.a2 * cross.im / norm_sq,
            -0.5 * coupling * a.a3 * imbalance + 0.5 * coupling * a.a3 * velocity,
        ],
        TreatmentMode::Nrl,
        coupling,
    )
}

/// Electric NRL shift written through the chirality expectation:
/// |e| A0 (1 - (2|k|/E) <X>). Identical to the electric part of
/// [`shift_nrl`].
pub fn shift_nrl_chiral_form(s: &ElectronState, a0: f64, coupling: f64) -> f64 {
    let p = s.momentum();
    let velocity = p.k_mag() / p.energy();
    coupling * a0 * (1.0 - 2.0 * velocity * s.chirality_expectation())
}

/// NRL shift for the achiral (equal-weight real) state:
/// |e| (A0 - (m/2E) A1 + (|k|/2E) A3).
pub fn shift_nrl_achiral(p: &FourMomentum, a: &PotentialAverages, coupling: f64) -> ShiftResult {
    let e = p.energy();
    ShiftResult::from_components(
        [
            coupling * a.a0,
            -0.5 * coupling * a.a1 * p.mass() / e,
            0.0,
            0.5 * coupling * a.a3 * p.k_mag() / e,
        ],
        TreatmentMode::Nrl,
        coupling,
    )
}

/// NRL shift for a completely polarized state:
/// |e| [A0 (1 -/+ |k|/E) + A3 (|k|/2E -/+ 1/2)], upper signs for
/// right-handed (l- = 0), lower for left-handed (l+ = 0).
pub fn shift_nrl_polarized(
    p: &FourMomentum,
    a: &PotentialAverages,
    hand: Handedness,
    coupling: f64,
) -> ShiftResult {
    let e = p.energy();
    let velocity = p.k_mag() / e;
    let sign = hand.sign();
    ShiftResult::from_components(
        [
            coupling * a.a0 * (1.0 - sign * velocity),
            0.0,
            0.0,
            coupling * a.a3 * (0.5 * velocity - sign * 0.5),
        ],
        TreatmentMode::Nrl,
        coupling,
    )
}

/// The experimentally comparable NRL differences between polarized and
/// achiral shifts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftDifferences {
    /// Right-polarized minus achiral.
    pub polarized_minus_achiral_right: f64,
    /// Left-polarized minus achiral.
    pub polarized_minus_achiral_left: f64,
    /// Left minus right, |e| ((2|k|/E) A0 + A3).
    pub left_minus_right: f64,
}

/// Differences between the NRL polarized and achiral shifts. The left-right
/// difference decomposes exactly as (L - achiral) + (achiral - R); the
/// function checks the identity before returning.
pub fn shift_differences(
    p: &FourMomentum,
    a: &PotentialAverages,
    coupling: f64,
) -> Result<ShiftDifferences, ShiftError> {
    let achiral = shift_nrl_achiral(p, a, coupling).total;
    let right = shift_nrl_polarized(p, a, Handedness::Right, coupling).total;
    let left = shift_nrl_polarized(p, a, Handedness::Left, coupling).total;
    let diffs = ShiftDifferences {
        polarized_minus_achiral_right: right - achiral,
        polarized_minus_achiral_left: left - achiral,
        left_minus_right: left - right,
    };
    let closed = coupling * (2.0 * p.k_mag() / p.energy() * a.a0 + a.a3);
    let scale = coupling.abs() * a.max_abs().max(1.0);
    let deviation = (diffs.left_minus_right - closed).abs();
    if deviation > 1e-13 * scale {
        return Err(ShiftError::DecompositionMismatch(deviation));
    }
    Ok(diffs)
}

/// Quantum-mechanical Zeeman comparator -g_s mu_B B.S for a z-quantized
/// spin, in eV.
pub fn zeeman_shift(b_tesla: [f64; 3], spin_z: f64, g_s: f64) -> f64 {
    -g_s * BOHR_MAGNETON_EV_PER_T * b_tesla[2] * spin_z
}

/// Comparison scale for oracle-vs-closed-form checks:
/// |e| max|A| max(1, E/m).
pub fn shift_scale(s: &ElectronState, a: &PotentialAverages, coupling: f64) -> f64 {
    let p = s.momentum();
    let boost = if p.mass() > 0.0 {
        (p.energy() / p.mass()).max(1.0)
    } else {
        1.0
    };
    coupling.abs() * a.max_abs() * boost
}
