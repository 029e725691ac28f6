//! Plane-wave bilinear densities: number density, spin current, its chirally
//! transformed partner, and the free Hamiltonian density.
//!
//! For a superposition state at fixed momentum the bra and ket spinor sums
//! are coherent, so every density reduces to a bilinear of the single
//! lambda-weighted spinor. Same-momentum bilinears are position- and
//! time-independent (the plane-wave phases cancel), so everything is
//! evaluated at x = t = 0; a global phase on the state leaves all densities
//! unchanged. Raw values are coefficients of one power of the box volume.
//!
//! The chiral spin current is computed along two routes that the tests hold
//! against each other: the literal component expressions with the upper
//! bilinears sign-flipped, and the matrix form psi† (g5 sigma^{ab}/2) psi.

use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::chiral_spin_operator;
use crate::spinor::{dirac_spinor, DiracSpinor, Spin, SpinorError};
use crate::state::{ElectronState, Regularized, RegularizedNorm, StateError, VolumeSymbol};

#[derive(Debug, Error, PartialEq)]
pub enum CurrentsError {
    #[error(transparent)]
    Spinor(#[from] SpinorError),
    #[error(transparent)]
    State(#[from] StateError),
}

/// Raw bilinear densities of a state, as coefficients of the box volume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilinearDensities {
    /// Number density sum |psi_j|^2 (equals the norm coefficient 2E|l|^2).
    pub rho0: f64,
    /// Spin current s, whose spatial integral is the spin vector.
    pub spin_current: [f64; 3],
    /// Chirally transformed spin current s'.
    pub chiral_spin_current: [f64; 3],
    pub volume: VolumeSymbol,
}

/// Densities divided by the state norm coefficient; these are the values the
/// closed forms use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedDensities {
    pub rho0: f64,
    pub spin_current: [f64; 3],
    pub chiral_spin_current: [f64; 3],
}

impl BilinearDensities {
    pub fn normalized_by(&self, norm: &RegularizedNorm) -> Result<NormalizedDensities, StateError> {
        let div = |c: f64| {
            norm.cancel(Regularized {
                coefficient: c,
                volume: self.volume,
            })
        };
        Ok(NormalizedDensities {
            rho0: div(self.rho0)?,
            spin_current: [
                div(self.spin_current[0])?,
                div(self.spin_current[1])?,
                div(self.spin_current[2])?,
            ],
            chiral_spin_current: [
                div(self.chiral_spin_current[0])?,
                div(self.chiral_spin_current[1])?,
                div(self.chiral_spin_current[2])?,
            ],
        })
    }
}

/// The lambda-weighted plane-wave spinor l+ u(up) + l- u(down) whose
/// bilinears give the state's densities.
pub fn coherent_spinor(s: &ElectronState) -> Result<DiracSpinor, SpinorError> {
    let up = dirac_spinor(Spin::Up, s.momentum())?;
    let down = dirac_spinor(Spin::Down, s.momentum())?;
    Ok(up.scaled(s.lambda_plus()) + down.scaled(s.lambda_minus()))
}

/// Spin current components from the component expressions:
/// s1 = Re(psi1* psi2 + psi3* psi4), s2 = Im(same),
/// s3 = (|psi1|^2 - |psi2|^2 + |psi3|^2 - |psi4|^2) / 2.
fn spin_current_components(w: &[Complex64; 4]) -> [f64; 3] {
    let cross = w[0].conj() * w[1] + w[2].conj() * w[3];
    [
        cross.re,
        cross.im,
        0.5 * (w[0].norm_sqr() - w[1].norm_sqr() + w[2].norm_sqr() - w[3].norm_sqr()),
    ]
}

/// The bracketed 3-vector of the energy-shift integrand: the spin current
/// with the psi1, psi2 bilinears sign-reversed.
pub(crate) fn shift_vector_components(w: &[Complex64; 4]) -> [f64; 3] {
    let cross = -w[0].conj() * w[1] + w[2].conj() * w[3];
    [
        cross.re,
        cross.im,
        0.5 * (-w[0].norm_sqr() + w[1].norm_sqr() + w[2].norm_sqr() - w[3].norm_sqr()),
    ]
}

/// Chiral spin current via the matrix route psi† (g5 sigma^{ab}/2) psi.
fn chiral_spin_current_matrix(w: &DiracSpinor) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (p, slot) in out.iter_mut().enumerate() {
        let op = chiral_spin_operator(p + 1).expect("components 1..=3");
        *slot = w.matrix_element(&op, w).re;
    }
    out
}

/// All bilinear densities of the state, as raw volume coefficients. The
/// chiral spin current is reported from the matrix route; see
/// [`shift_vector_identity_check`] for the cross-route deviation.
pub fn bilinear_densities(s: &ElectronState) -> Result<BilinearDensities, CurrentsError> {
    let w = coherent_spinor(s)?;
    Ok(BilinearDensities {
        rho0: w.norm_sq(),
        spin_current: spin_current_components(w.components()),
        chiral_spin_current: chiral_spin_current_matrix(&w),
        volume: VolumeSymbol::UNIT,
    })
}

/// Max absolute deviation between the energy-shift integrand vector
/// (component expressions) and the chiral spin current (matrix route). The
/// two are the same object; the deviation is floating-point noise only.
pub fn shift_vector_identity_check(s: &ElectronState) -> Result<f64, CurrentsError> {
    let w = coherent_spinor(s)?;
    let literal = shift_vector_components(w.components());
    let matrix = chiral_spin_current_matrix(&w);
    Ok(literal
        .iter()
        .zip(matrix.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

/// Free Hamiltonian density of the plane-wave state, normalized by the state
/// norm. Spatial derivatives act as +i k_p on the ket side; the result is the
/// state energy E, independent of the spin coefficients.
pub fn free_energy_density(s: &ElectronState) -> Result<f64, CurrentsError> {
    let w = coherent_spinor(s)?.components().to_owned();
    let p = s.momentum();
    let [kx, ky, kz] = p.momentum();
    let i = Complex64::i();
    let dx = i * kx;
    let dy = i * ky;
    let dz = i * kz;
    let mass_term = 2.0 * p.mass() * (w[0].conj() * w[2] + w[1].conj() * w[3]).re;
    let upper = (w[0].conj() * dz * w[0] + w[0].conj() * (dx - i * dy) * w[1]
        + w[1].conj() * (dx + i * dy) * w[0]
        - w[1].conj() * dz * w[1])
        .im;
    let lower = (w[2].conj() * dz * w[2] + w[2].conj() * (dx - i * dy) * w[3]
        + w[3].conj() * (dx + i * dy) * w[2]
        - w[3].conj() * dz * w[3])
        .im;
    let raw = Regularized {
        coefficient: mass_term - upper + lower,
        volume: VolumeSymbol::UNIT,
    };
    Ok(s.norm().cancel(raw)?)
}
