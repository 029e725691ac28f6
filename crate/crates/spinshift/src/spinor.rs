//! Momentum-space Dirac spinors in spin-z eigenstates, plus the general
//! spin-axis two-component spinors.
//!
//! The closed-form four-spinors are the aligned-momentum ones,
//! u(up) = (sqrt(E-kz), 0, sqrt(E+kz), 0) and
//! u(down) = (0, sqrt(E+kz), 0, sqrt(E-kz)), normalized to u†u = 2E.
//! Signed kz is accepted; transverse momentum is rejected by this
//! constructor.

use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{gamma, SpinorMatrix, C_ZERO};
use crate::units::ELECTRON_MASS_MEV;

#[derive(Debug, Error, PartialEq)]
pub enum SpinorError {
    #[error("mass must be finite and >= 0, got {0}")]
    InvalidMass(f64),
    #[error("momentum components must be finite")]
    NonFiniteMomentum,
    #[error("spinor construction requires momentum along z, got transverse ({0}, {1})")]
    NonAxialMomentum(f64, f64),
    #[error("spin axis angles out of range: theta {theta}, phi {phi}")]
    InvalidAxis { theta: f64, phi: f64 },
    #[error("zero spinor")]
    ZeroSpinor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

/// On-shell momentum: mass and 3-momentum in MeV, energy derived.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    mass: f64,
    k: [f64; 3],
}

impl FourMomentum {
    pub fn new(mass: f64, k: [f64; 3]) -> Result<Self, SpinorError> {
        if !mass.is_finite() || mass < 0.0 {
            return Err(SpinorError::InvalidMass(mass));
        }
        if k.iter().any(|c| !c.is_finite()) {
            return Err(SpinorError::NonFiniteMomentum);
        }
        Ok(FourMomentum { mass, k })
    }

    pub fn z_aligned(mass: f64, kz: f64) -> Result<Self, SpinorError> {
        Self::new(mass, [0.0, 0.0, kz])
    }

    /// Electron of momentum kz along z.
    pub fn electron(kz: f64) -> Result<Self, SpinorError> {
        Self::z_aligned(ELECTRON_MASS_MEV, kz)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn momentum(&self) -> [f64; 3] {
        self.k
    }

    pub fn kz(&self) -> f64 {
        self.k[2]
    }

    pub fn k_mag(&self) -> f64 {
        (self.k[0] * self.k[0] + self.k[1] * self.k[1] + self.k[2] * self.k[2]).sqrt()
    }

    /// E = sqrt(m^2 + |k|^2).
    pub fn energy(&self) -> f64 {
        (self.mass * self.mass + self.k[0] * self.k[0] + self.k[1] * self.k[1]
            + self.k[2] * self.k[2])
            .sqrt()
    }

    pub fn is_z_aligned(&self) -> bool {
        self.k[0] == 0.0 && self.k[1] == 0.0
    }
}

/// Four complex amplitudes (units MeV^(1/2)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracSpinor {
    components: [Complex64; 4],
}

impl DiracSpinor {
    pub fn from_components(components: [Complex64; 4]) -> Self {
        DiracSpinor { components }
    }

    pub fn components(&self) -> &[Complex64; 4] {
        &self.components
    }

    /// u†u.
    pub fn norm_sq(&self) -> f64 {
        self.components.iter().map(|c| c.norm_sqr()).sum()
    }

    /// self† · other.
    pub fn inner(&self, other: &DiracSpinor) -> Complex64 {
        self.components
            .iter()
            .zip(other.components.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// self† M other.
    pub fn matrix_element(&self, m: &SpinorMatrix, other: &DiracSpinor) -> Complex64 {
        let mv = m.apply(&other.components);
        self.components
            .iter()
            .zip(mv.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        let mut out = *self;
        for e in &mut out.components {
            *e *= c;
        }
        out
    }
}

impl std::ops::Add for DiracSpinor {
    type Output = DiracSpinor;
    fn add(self, other: DiracSpinor) -> DiracSpinor {
        let mut out = self;
        for (a, b) in out.components.iter_mut().zip(other.components.iter()) {
            *a += b;
        }
        out
    }
}

pub type TwoSpinor = [Complex64; 2];

/// Spin quantization axis (theta in [0, pi], phi in [0, 2pi)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinAxis {
    theta: f64,
    phi: f64,
}

impl SpinAxis {
    pub fn new(theta: f64, phi: f64) -> Result<Self, SpinorError> {
        let in_range = theta.is_finite()
            && phi.is_finite()
            && (0.0..=std::f64::consts::PI).contains(&theta)
            && (0.0..2.0 * std::f64::consts::PI).contains(&phi);
        if !in_range {
            return Err(SpinorError::InvalidAxis { theta, phi });
        }
        Ok(SpinAxis { theta, phi })
    }

    pub fn z() -> Self {
        SpinAxis {
            theta: 0.0,
            phi: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Unit-norm two-component spinor along `axis`:
/// xi(up) = (cos t/2, e^{i phi} sin t/2), xi(down) = (-e^{-i phi} sin t/2, cos t/2).
pub fn two_spinor(axis: SpinAxis, spin: Spin) -> TwoSpinor {
    let half = axis.theta / 2.0;
    let (sin, cos) = half.sin_cos();
    let phase = Complex64::from_polar(1.0, axis.phi);
    match spin {
        Spin::Up => [Complex64::new(cos, 0.0), phase * sin],
        Spin::Down => [-phase.conj() * sin, Complex64::new(cos, 0.0)],
    }
}

/// Spin-z eigenstate four-spinor for momentum along z.
pub fn dirac_spinor(spin: Spin, p: &FourMomentum) -> Result<DiracSpinor, SpinorError> {
    if !p.is_z_aligned() {
        return Err(SpinorError::NonAxialMomentum(p.k[0], p.k[1]));
    }
    let e = p.energy();
    let kz = p.kz();
    let m = p.mass();
    // E - |kz| = m^2 / (E + |kz|): avoids catastrophic cancellation at
    // |kz| >> m, keeping u†u = 2E and ubar u = 2m to full precision
    let large = e + kz.abs();
    let small = if large > 0.0 { m * m / large } else { 0.0 };
    let (lower_sq, upper_sq) = if kz >= 0.0 {
        (small, large)
    } else {
        (large, small)
    };
    let lower = lower_sq.sqrt();
    let upper = upper_sq.sqrt();
    let r = |x: f64| Complex64::new(x, 0.0);
    let components = match spin {
        Spin::Up => [r(lower), C_ZERO, r(upper), C_ZERO],
        Spin::Down => [C_ZERO, r(upper), C_ZERO, r(lower)],
    };
    Ok(DiracSpinor::from_components(components))
}

/// Relative residual ||(gamma^mu k_mu - m I) u|| / ||u|| with covariant
/// k_mu = (E, -k).
pub fn dirac_equation_residual(u: &DiracSpinor, p: &FourMomentum) -> Result<f64, SpinorError> {
    let norm = u.norm_sq().sqrt();
    if norm == 0.0 {
        return Err(SpinorError::ZeroSpinor);
    }
    let g = |mu: usize| gamma(mu).expect("fixed indices 0..=3");
    let mut slash = g(0) * p.energy();
    for (i, ki) in p.momentum().iter().enumerate() {
        slash = slash - g(i + 1) * *ki;
    }
    let op = slash - SpinorMatrix::identity() * p.mass();
    let residual = op.apply(u.components());
    let res_norm: f64 = residual.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    Ok(res_norm / norm)
}

#[cfg(test)]
mod tests {
    use super::*;

    const REL: f64 = 1e-12;

    fn log_momentum_grid() -> Vec<f64> {
        let mut grid = vec![0.0];
        let mut k = 1e-3;
        while k <= 1e3 {
            grid.push(k);
            k *= 10.0_f64.powf(0.25);
        }
        grid
    }

    #[test]
    fn momentum_invariants() {
        let p = FourMomentum::electron(2.0).unwrap();
        assert!(p.energy() >= p.kz());
        assert!(p.energy() >= p.mass());
        assert!((p.energy() - (0.510998946f64.powi(2) + 4.0).sqrt()).abs() < 1e-15);
        assert!(matches!(
            FourMomentum::new(-1.0, [0.0; 3]),
            Err(SpinorError::InvalidMass(_))
        ));
        assert!(matches!(
            FourMomentum::new(1.0, [0.0, f64::NAN, 0.0]),
            Err(SpinorError::NonFiniteMomentum)
        ));
    }

    #[test]
    fn two_spinor_special_angles() {
        let up_z = two_spinor(SpinAxis::z(), Spin::Up);
        assert_eq!(up_z[0], Complex64::new(1.0, 0.0));
        assert_eq!(up_z[1], C_ZERO);

        let flipped = two_spinor(SpinAxis::new(std::f64::consts::PI, 0.0).unwrap(), Spin::Up);
        assert!(flipped[0].norm() < 1e-15);
        assert!((flipped[1] - Complex64::new(1.0, 0.0)).norm() < 1e-15);

        let equator = two_spinor(
            SpinAxis::new(std::f64::consts::FRAC_PI_2, 0.0).unwrap(),
            Spin::Up,
        );
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        assert!((equator[0].re - inv_sqrt2).abs() < 1e-15);
        assert!((equator[1].re - inv_sqrt2).abs() < 1e-15);
    }

    #[test]
    fn two_spinor_orthonormal_over_angles() {
        for i in 0..8 {
            for j in 0..8 {
                let theta = std::f64::consts::PI * i as f64 / 7.0;
                let phi = 2.0 * std::f64::consts::PI * j as f64 / 8.0;
                let axis = SpinAxis::new(theta, phi).unwrap();
                let up = two_spinor(axis, Spin::Up);
                let down = two_spinor(axis, Spin::Down);
                let norm_up: f64 = up.iter().map(|c| c.norm_sqr()).sum();
                let norm_down: f64 = down.iter().map(|c| c.norm_sqr()).sum();
                let overlap = up[0].conj() * down[0] + up[1].conj() * down[1];
                assert!((norm_up - 1.0).abs() < 1e-14);
                assert!((norm_down - 1.0).abs() < 1e-14);
                assert!(overlap.norm() < 1e-15);
            }
        }
    }

    #[test]
    fn axis_range_contract() {
        assert!(SpinAxis::new(-0.1, 0.0).is_err());
        assert!(SpinAxis::new(0.0, 7.0).is_err());
    }

    #[test]
    fn rest_frame_spinor() {
        let p = FourMomentum::electron(0.0).unwrap();
        let u = dirac_spinor(Spin::Up, &p).unwrap();
        let sqrt_m = ELECTRON_MASS_MEV.sqrt();
        assert!((u.components()[0].re - sqrt_m).abs() < 1e-15);
        assert_eq!(u.components()[1], C_ZERO);
        assert!((u.components()[2].re - sqrt_m).abs() < 1e-15);
        assert_eq!(u.components()[3], C_ZERO);
    }

    #[test]
    fn moving_down_spinor_components() {
        let m = 0.511;
        let p = FourMomentum::z_aligned(m, m).unwrap();
        let e = m * std::f64::consts::SQRT_2;
        let u = dirac_spinor(Spin::Down, &p).unwrap();
        assert_eq!(u.components()[0], C_ZERO);
        assert!((u.components()[1].re - (e + m).sqrt()).abs() < 1e-14);
        assert_eq!(u.components()[2], C_ZERO);
        assert!((u.components()[3].re - (e - m).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn normalization_and_orthogonality_over_grid() {
        for kz in log_momentum_grid() {
            let p = FourMomentum::electron(kz).unwrap();
            let up = dirac_spinor(Spin::Up, &p).unwrap();
            let down = dirac_spinor(Spin::Down, &p).unwrap();
            let two_e = 2.0 * p.energy();
            assert!((up.norm_sq() - two_e).abs() <= REL * two_e, "kz {kz}");
            assert!((down.norm_sq() - two_e).abs() <= REL * two_e);
            // disjoint support: exactly zero
            assert_eq!(up.inner(&down), C_ZERO);
        }
    }

    #[test]
    fn lorentz_scalar_is_2m() {
        let g0 = gamma(0).unwrap();
        for kz in log_momentum_grid() {
            let p = FourMomentum::electron(kz).unwrap();
            for spin in [Spin::Up, Spin::Down] {
                let u = dirac_spinor(spin, &p).unwrap();
                let ubar_u = u.matrix_element(&g0, &u);
                let two_m = 2.0 * p.mass();
                assert!((ubar_u.re - two_m).abs() <= REL * two_m, "kz {kz}");
                assert!(ubar_u.im.abs() <= REL * two_m);
            }
        }
    }

    #[test]
    fn dirac_residual_vanishes_on_solutions() {
        let rest = FourMomentum::electron(0.0).unwrap();
        let u0 = dirac_spinor(Spin::Up, &rest).unwrap();
        assert_eq!(dirac_equation_residual(&u0, &rest).unwrap(), 0.0);

        let p = FourMomentum::electron(2.0).unwrap();
        let u = dirac_spinor(Spin::Down, &p).unwrap();
        assert!(dirac_equation_residual(&u, &p).unwrap() < REL);

        for kz in log_momentum_grid() {
            let p = FourMomentum::electron(kz).unwrap();
            for spin in [Spin::Up, Spin::Down] {
                let u = dirac_spinor(spin, &p).unwrap();
                assert!(dirac_equation_residual(&u, &p).unwrap() < REL, "kz {kz}");
            }
        }
    }

    #[test]
    fn residual_negative_control() {
        let p = FourMomentum::electron(1.5).unwrap();
        let junk = DiracSpinor::from_components([
            Complex64::new(0.3, -0.1),
            Complex64::new(1.0, 0.4),
            Complex64::new(-0.2, 0.9),
            Complex64::new(0.5, 0.0),
        ]);
        assert!(dirac_equation_residual(&junk, &p).unwrap() > 1e-3);
        let zero = DiracSpinor::from_components([C_ZERO; 4]);
        assert_eq!(
            dirac_equation_residual(&zero, &p),
            Err(SpinorError::ZeroSpinor)
        );
    }

    #[test]
    fn transverse_momentum_rejected() {
        let p = FourMomentum::new(0.511, [0.1, 0.0, 1.0]).unwrap();
        assert!(matches!(
            dirac_spinor(Spin::Up, &p),
            Err(SpinorError::NonAxialMomentum(_, _))
        ));
    }

    #[test]
    fn negative_kz_supported() {
        let p = FourMomentum::electron(-3.0).unwrap();
        let u = dirac_spinor(Spin::Up, &p).unwrap();
        assert!((u.norm_sq() - 2.0 * p.energy()).abs() <= REL * 2.0 * p.energy());
        assert!(dirac_equation_residual(&u, &p).unwrap() < REL);
    }

    #[test]
    fn z_axis_two_spinor_matches_rest_spinor_blocks() {
        // at rest both blocks reduce to sqrt(m) * xi
        let p = FourMomentum::electron(0.0).unwrap();
        let sqrt_m = p.mass().sqrt();
        for spin in [Spin::Up, Spin::Down] {
            let xi = two_spinor(SpinAxis::z(), spin);
            let u = dirac_spinor(spin, &p).unwrap();
            for (i, xi_i) in xi.iter().enumerate() {
                assert!((u.components()[i] - xi_i * sqrt_m).norm() < 1e-14);
                assert!((u.components()[i + 2] - xi_i * sqrt_m).norm() < 1e-14);
            }
        }
    }
}
