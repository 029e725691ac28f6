//! Runtime verification suites behind the `verify` subcommand: matrix
//! algebra, spinor contracts, bilinear identities, oracle vs closed-form
//! equivalence, and the halving/difference relations. Random sweeps use a
//! fixed seed so every run checks the same instances.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    chiral_projector, gamma, gamma5, metric, sigma_ab, spin_component_pair, Handedness,
    PauliMatrix, SpinorMatrix,
};
use crate::currents::{bilinear_densities, free_energy_density, shift_vector_identity_check};
use crate::shift::{
    configuration_bilinear, shift_differences, shift_full, shift_nrl, shift_nrl_achiral,
    shift_nrl_chiral_form, shift_nrl_polarized, shift_oracle, shift_scale, PotentialAverages,
    TreatmentMode,
};
use crate::spinor::{dirac_equation_residual, dirac_spinor, two_spinor, FourMomentum, Spin, SpinAxis};
use crate::state::ElectronState;

/// Default tolerances: `exact` for algebraic identities built from exact
/// literals, `tight` for closed-form floating-point agreement, `component`
/// for per-component nullification checks.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub exact: f64,
    pub tight: f64,
    pub component: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            exact: 1e-14,
            tight: 1e-12,
            component: 1e-13,
        }
    }
}

impl Tolerances {
    /// Replace every tolerance with one override value.
    pub fn uniform(tol: f64) -> Self {
        Tolerances {
            exact: tol,
            tight: tol,
            component: tol,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckFailure {
    pub property: String,
    pub deviation: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<CheckFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn total_checks(&self) -> usize {
        self.suites.iter().map(|s| s.checks).sum()
    }

    pub fn total_failures(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for suite in &self.suites {
            writeln!(
                f,
                "suite {:<24} {:>5} checks  {:>3} failures  [{}]",
                suite.name,
                suite.checks,
                suite.failures.len(),
                if suite.passed() { "pass" } else { "FAIL" }
            )?;
            for failure in &suite.failures {
                writeln!(
                    f,
                    "  FAIL {} (deviation {:.3e}, tolerance {:.3e})",
                    failure.property, failure.deviation, failure.tolerance
                )?;
            }
        }
        writeln!(
            f,
            "total: {} checks, {} failures",
            self.total_checks(),
            self.total_failures()
        )
    }
}

struct Checker {
    name: &'static str,
    checks: usize,
    failures: Vec<CheckFailure>,
}

impl Checker {
    fn new(name: &'static str) -> Self {
        Checker {
            name,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, property: impl FnOnce() -> String, deviation: f64, tolerance: f64) {
        self.checks += 1;
        // NaN deviations must fail, so test the passing condition
        let within = deviation <= tolerance;
        if !within {
            self.failures.push(CheckFailure {
                property: property(),
                deviation,
                tolerance,
            });
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            checks: self.checks,
            failures: self.failures,
        }
    }
}

fn momentum_grid() -> Vec<f64> {
    let mut grid = vec![0.0];
    let mut k = 1e-3;
    while k <= 1e3 {
        grid.push(k);
        k *= 10.0_f64.powf(0.2);
    }
    grid
}

fn random_state(rng: &mut ChaCha8Rng, k_max: f64) -> ElectronState {
    let p = FourMomentum::electron(rng.gen_range(0.0..k_max)).expect("finite momentum");
    loop {
        let lp = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let lm = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let norm = (lp.norm_sqr() + lm.norm_sqr()).sqrt();
        if norm > 1e-2 {
            let scale = Complex64::new(1.0 / norm, 0.0);
            return ElectronState::new(p, scale * lp, scale * lm).expect("unit coefficients");
        }
    }
}

fn random_potentials(rng: &mut ChaCha8Rng) -> PotentialAverages {
    PotentialAverages::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

fn matrix_unit(i: usize, j: usize) -> SpinorMatrix {
    let mut entries = [[Complex64::new(0.0, 0.0); 4]; 4];
    entries[i][j] = Complex64::new(1.0, 0.0);
    SpinorMatrix::from_rows(entries)
}

/// Hermitian operator for the real part of a bilinear piece.
fn re_operator(piece: SpinorMatrix) -> SpinorMatrix {
    (piece + piece.adjoint()).scaled(Complex64::new(0.5, 0.0))
}

/// Hermitian operator for the imaginary part of a bilinear piece.
fn im_operator(piece: SpinorMatrix) -> SpinorMatrix {
    (piece - piece.adjoint()).scaled(Complex64::new(0.0, -0.5))
}

/// Deviation of a candidate g5 from the explicit block form
/// diag(-I2, +I2). Exposed for the corrupted-matrix negative control.
pub(crate) fn gamma5_block_deviation(candidate: &SpinorMatrix) -> f64 {
    let one = Complex64::new(1.0, 0.0);
    let mut entries = [[Complex64::new(0.0, 0.0); 4]; 4];
    entries[0][0] = -one;
    entries[1][1] = -one;
    entries[2][2] = one;
    entries[3][3] = one;
    candidate.max_abs_diff(&SpinorMatrix::from_rows(entries))
}

fn clifford_suite(tol: &Tolerances) -> SuiteReport {
    let mut c = Checker::new("clifford-algebra");
    for mu in 0..4 {
        for nu in 0..4 {
            let anti = gamma(mu)
                .expect("index in range")
                .anticommutator(&gamma(nu).expect("index in range"));
            let expected = SpinorMatrix::identity() * (2.0 * metric(mu, nu));
            c.check(
                || format!("anticommutator({mu},{nu}) = 2 g({mu},{nu}) I"),
                anti.max_abs_diff(&expected),
                tol.exact,
            );
        }
    }
    c.check(
        || "gamma5 product form equals block form".into(),
        gamma5_block_deviation(&gamma5()),
        tol.exact,
    );
    for mu in 0..4 {
        c.check(
            || format!("gamma5 anticommutes with gamma({mu})"),
            gamma5().anticommutator(&gamma(mu).expect("index in range")).max_abs(),
            tol.exact,
        );
    }
    c.check(
        || "gamma0 hermitian".into(),
        gamma(0).expect("fixed").max_abs_diff(&gamma(0).expect("fixed").adjoint()),
        tol.exact,
    );
    for i in 1..=3 {
        let g = gamma(i).expect("fixed");
        c.check(
            || format!("gamma({i}) anti-hermitian"),
            (g + g.adjoint()).max_abs(),
            tol.exact,
        );
    }
    for p in 1..=3 {
        let (a, b) = spin_component_pair(p).expect("fixed");
        let s = sigma_ab(a, b).expect("fixed");
        c.check(
            || format!("sigma({a},{b}) hermitian"),
            s.max_abs_diff(&s.adjoint()),
            tol.exact,
        );
        // g5 sigma^{ab} block form diag(-sigma_p, sigma_p)
        let pauli = PauliMatrix::sigma(p).expect("fixed");
        let mut entries = [[Complex64::new(0.0, 0.0); 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                entries[i][j] = -pauli.entry(i, j);
                entries[i + 2][j + 2] = pauli.entry(i, j);
            }
        }
        c.check(
            || format!("gamma5 sigma block form, component {p}"),
            (gamma5() * s).max_abs_diff(&SpinorMatrix::from_rows(entries)),
            tol.exact,
        );
    }
    let plus = chiral_projector(Handedness::Right);
    let minus = chiral_projector(Handedness::Left);
    c.check(
        || "projector idempotence (+)".into(),
        (plus * plus).max_abs_diff(&plus),
        tol.exact,
    );
    c.check(
        || "projector idempotence (-)".into(),
        (minus * minus).max_abs_diff(&minus),
        tol.exact,
    );
    c.check(
        || "projector completeness".into(),
        (plus + minus).max_abs_diff(&SpinorMatrix::identity()),
        tol.exact,
    );
    c.check(
        || "projector orthogonality".into(),
        (plus * minus).max_abs(),
        tol.exact,
    );
    c.finish()
}

fn spinor_suite(tol: &Tolerances) -> SuiteReport {
    let mut c = Checker::new("spinor-contracts");
    let g0 = gamma(0).expect("fixed");
    for kz in momentum_grid() {
        let p = FourMomentum::electron(kz).expect("finite");
        let two_e = 2.0 * p.energy();
        let two_m = 2.0 * p.mass();
        for spin in [Spin::Up, Spin::Down] {
            let u = dirac_spinor(spin, &p).expect("axial");
            c.check(
                || format!("u†u = 2E at kz {kz}"),
                (u.norm_sq() - two_e).abs() / two_e,
                tol.tight,
            );
            c.check(
                || format!("ubar u = 2m at kz {kz}"),
                (u.matrix_element(&g0, &u).re - two_m).abs() / two_m,
                tol.tight,
            );
            c.check(
                || format!("dirac residual at kz {kz}"),
                dirac_equation_residual(&u, &p).expect("nonzero"),
                tol.tight,
            );
        }
        let up = dirac_spinor(Spin::Up, &p).expect("axial");
        let down = dirac_spinor(Spin::Down, &p).expect("axial");
        c.check(
            || format!("u(up)†u(down) = 0 at kz {kz}"),
            up.inner(&down).norm(),
            tol.exact,
        );
    }
    // general-axis two-spinors: unit norm, orthogonality, z-axis reduction
    for i in 0..5 {
        for j in 0..5 {
            let theta = std::f64::consts::PI * i as f64 / 4.0;
            let phi = 2.0 * std::f64::consts::PI * j as f64 / 5.0;
            let axis = SpinAxis::new(theta, phi).expect("in range");
            let up = two_spinor(axis, Spin::Up);
            let down = two_spinor(axis, Spin::Down);
            let norm_dev = ((up[0].norm_sqr() + up[1].norm_sqr()) - 1.0)
                .abs()
                .max(((down[0].norm_sqr() + down[1].norm_sqr()) - 1.0).abs());
            c.check(
                || format!("two-spinor unit norm at ({theta:.2},{phi:.2})"),
                norm_dev,
                tol.exact,
            );
            c.check(
                || format!("two-spinor orthogonality at ({theta:.2},{phi:.2})"),
                (up[0].conj() * down[0] + up[1].conj() * down[1]).norm(),
                tol.exact,
            );
        }
    }
    let z_up = two_spinor(SpinAxis::z(), Spin::Up);
    c.check(
        || "z-axis two-spinor reduces to (1, 0)".into(),
        (z_up[0] - Complex64::new(1.0, 0.0)).norm() + z_up[1].norm(),
        tol.exact,
    );
    c.finish()
}

fn identity_suite(tol: &Tolerances) -> SuiteReport {
    let mut c = Checker::new("bilinear-identities");
    let mut rng = ChaCha8Rng::seed_from_u64(0x51D3);
    for _ in 0..1000 {
        let s = random_state(&mut rng, 100.0);
        c.check(
            || "shift vector equals chiral spin current".into(),
            shift_vector_identity_check(&s).expect("axial"),
            tol.tight,
        );
    }
    for _ in 0..200 {
        let s = random_state(&mut rng, 100.0);
        let e = s.momentum().energy();
        c.check(
            || "free energy density equals E".into(),
            (free_energy_density(&s).expect("axial") - e).abs() / e,
            tol.tight,
        );
        // spin current dual route: component expressions vs psi† sigma/2 psi
        let d = bilinear_densities(&s).expect("axial");
        let w = crate::currents::coherent_spinor(&s).expect("axial");
        for p in 1..=3 {
            let (a, b) = spin_component_pair(p).expect("fixed");
            let matrix = w
                .matrix_element(&(sigma_ab(a, b).expect("fixed") * 0.5), &w)
                .re;
            c.check(
                || format!("spin current dual route, component {p}"),
                (d.spin_current[p - 1] - matrix).abs(),
                tol.tight * d.rho0.max(1.0),
            );
        }
    }
    for kz in [0.0, 0.5, 3.0, 40.0] {
        let p = FourMomentum::electron(kz).expect("finite");
        let up = ElectronState::spin_up(p);
        let d = bilinear_densities(&up).expect("axial");
        let e = p.energy();
        c.check(
            || format!("pure-up spin current z = E at kz {kz}"),
            (d.spin_current[2] - e).abs() / e,
            tol.tight,
        );
        c.check(
            || format!("pure-up chiral spin current z = kz at kz {kz}"),
            (d.chiral_spin_current[2] - kz).abs() / e,
            tol.tight,
        );
    }
    c.finish()
}

fn oracle_suite(tol: &Tolerances) -> SuiteReport {
    let mut c = Checker::new("oracle-equivalence");
    let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1E);
    for _ in 0..1000 {
        let s = random_state(&mut rng, 100.0);
        let a = random_potentials(&mut rng);
        let scale = shift_scale(&s, &a, 1.0);
        let full_oracle = shift_oracle(&s, &a, TreatmentMode::Full, 1.0).expect("axial");
        let full_closed = shift_full(&s, &a, 1.0);
        c.check(
            || "oracle matches full closed form".into(),
            (full_oracle.total - full_closed.total).abs(),
            tol.tight * scale,
        );
        let nrl_oracle = shift_oracle(&s, &a, TreatmentMode::Nrl, 1.0).expect("axial");
        let nrl_closed = shift_nrl(&s, &a, 1.0);
        c.check(
            || "oracle matches NRL closed form".into(),
            (nrl_oracle.total - nrl_closed.total).abs(),
            tol.tight * scale,
        );
        c.check(
            || "A1 component vanishes in full treatment".into(),
            full_oracle.by_component[1].abs(),
            tol.component * scale,
        );
        c.check(
            || "A2 component vanishes in full treatment".into(),
            full_oracle.by_component[2].abs(),
            tol.component * scale,
        );
        c.check(
            || "chiral form matches NRL electric part".into(),
            (shift_nrl_chiral_form(&s, a.a0, 1.0) - nrl_closed.by_component[0]).abs(),
            tol.exact * a.a0.abs().max(1.0),
        );
    }
    // methods contraction identities, per configuration
    for kz in [0.0, 0.7, 12.0, 300.0] {
        let p = FourMomentum::electron(kz).expect("finite");
        for spin in [Spin::Up, Spin::Down] {
            let b = configuration_bilinear(spin, spin, 3, &p, TreatmentMode::Full)
                .expect("axial");
            c.check(
                || format!("same-spin A3 bilinear = 2|k| at kz {kz}"),
                (2.0 * b.re - 2.0 * kz).abs() / (2.0 * kz).max(1.0),
                tol.component,
            );
        }
        let b0 = configuration_bilinear(Spin::Up, Spin::Down, 0, &p, TreatmentMode::Full)
            .expect("axial");
        c.check(
            || format!("cross-spin electric bilinear = 0 at kz {kz}"),
            b0.norm(),
            tol.exact,
        );
        for mu in [1usize, 2] {
            let b = configuration_bilinear(Spin::Up, Spin::Down, mu, &p, TreatmentMode::Full)
                .expect("axial");
            c.check(
                || format!("cross-spin A{mu} cancellation at kz {kz}"),
                b.norm(),
                tol.exact * p.energy().max(1.0),
            );
        }
        // boxed electric contraction: u†u = 2E per same-spin configuration
        let b_up = configuration_bilinear(Spin::Up, Spin::Up, 0, &p, TreatmentMode::Full)
            .expect("axial");
        c.check(
            || format!("same-spin electric bilinear = 2E at kz {kz}"),
            (b_up.re - 2.0 * p.energy()).abs() / (2.0 * p.energy()),
            tol.component,
        );
        // the opposite-spin cancellation piece by piece: the upper and lower
        // cross bilinears contribute -/+ m/2 (real parts) and +/- i m/2
        // (imaginary parts)
        let up = dirac_spinor(Spin::Up, &p).expect("axial");
        let down = dirac_spinor(Spin::Down, &p).expect("axial");
        let upper = matrix_unit(0, 1).scaled(Complex64::new(-1.0, 0.0));
        let lower = matrix_unit(2, 3);
        let half_m = 0.5 * p.mass();
        let pieces = [
            ("Re upper", up.matrix_element(&re_operator(upper), &down), Complex64::new(-half_m, 0.0)),
            ("Re lower", up.matrix_element(&re_operator(lower), &down), Complex64::new(half_m, 0.0)),
            ("Im upper", up.matrix_element(&im_operator(upper), &down), Complex64::new(0.0, half_m)),
            ("Im lower", up.matrix_element(&im_operator(lower), &down), Complex64::new(0.0, -half_m)),
        ];
        for (label, got, expected) in pieces {
            c.check(
                || format!("cross-spin {label} piece = {expected} at kz {kz}"),
                (got - expected).norm() / half_m.max(1e-30),
                tol.component,
            );
        }
    }
    c.finish()
}

fn structure_suite(tol: &Tolerances) -> SuiteReport {
    let mut c = Checker::new("halving-and-differences");
    let mut rng = ChaCha8Rng::seed_from_u64(0xd1ff);
    for kz in momentum_grid() {
        let p = FourMomentum::electron(kz).expect("finite");
        let a = random_potentials(&mut rng);
        let scale = a.max_abs().max(1.0);
        let full = shift_full(&ElectronState::achiral(p), &a, 1.0);
        let achiral = shift_nrl_achiral(&p, &a, 1.0);
        c.check(
            || format!("NRL electric term is half the full shift at kz {kz}"),
            (achiral.by_component[0] - 0.5 * full.by_component[0]).abs(),
            tol.exact * scale,
        );
        c.check(
            || format!("NRL fixed magnetic term is half the full shift at kz {kz}"),
            (achiral.by_component[3] - 0.5 * full.by_component[3]).abs(),
            tol.exact * scale,
        );
        let d = shift_differences(&p, &a, 1.0).expect("closed-form identity");
        let sum = d.polarized_minus_achiral_left - d.polarized_minus_achiral_right;
        c.check(
            || format!("difference decomposition at kz {kz}"),
            (d.left_minus_right - sum).abs(),
            tol.exact * scale,
        );
        let uniform = PotentialAverages::uniform(1.0);
        let du = shift_differences(&p, &uniform, 1.0).expect("closed-form identity");
        let headroom = du
            .left_minus_right
            .abs()
            .max(du.polarized_minus_achiral_left.abs())
            .max(du.polarized_minus_achiral_right.abs());
        c.check(
            || format!("left-right exceeds polarized-achiral at kz {kz}"),
            headroom - du.left_minus_right.abs(),
            tol.exact,
        );
        // polarized totals agree with the general NRL form
        let right = shift_nrl_polarized(&p, &a, Handedness::Right, 1.0);
        let via_up = shift_nrl(&ElectronState::spin_up(p), &a, 1.0);
        c.check(
            || format!("right-polarized closed form at kz {kz}"),
            (right.total - via_up.total).abs(),
            tol.exact * scale,
        );
    }
    c.finish()
}

/// Run every suite with the given tolerances.
pub fn run_verification(tol: &Tolerances) -> VerificationReport {
    VerificationReport {
        suites: vec![
            clifford_suite(tol),
            spinor_suite(tol),
            identity_suite(tol),
            oracle_suite(tol),
            structure_suite(tol),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_verification_is_green() {
        let report = run_verification(&Tolerances::default());
        assert!(report.passed(), "{report}");
        assert_eq!(report.suites.len(), 5);
        assert!(report.total_checks() > 1000);
    }

    #[test]
    fn corrupted_gamma5_detected() {
        // flip one sign in the block form: the comparator must flag it
        let mut entries = [[Complex64::new(0.0, 0.0); 4]; 4];
        entries[0][0] = Complex64::new(1.0, 0.0); // should be -1
        entries[1][1] = Complex64::new(-1.0, 0.0);
        entries[2][2] = Complex64::new(1.0, 0.0);
        entries[3][3] = Complex64::new(1.0, 0.0);
        let corrupted = SpinorMatrix::from_rows(entries);
        assert!(gamma5_block_deviation(&corrupted) > 1.0);
        assert_eq!(gamma5_block_deviation(&gamma5()), 0.0);
    }

    #[test]
    fn tightened_tolerance_reports_floating_point_floor() {
        // far below the double-precision floor the sweeps must fail, and the
        // report must name the failing properties
        let report = run_verification(&Tolerances::uniform(1e-18));
        assert!(!report.passed());
        assert!(report.total_failures() > 0);
        let rendered = report.to_string();
        assert!(rendered.contains("FAIL"));
    }
}
