//! Weyl-basis gamma matrices and fixed-size complex matrix algebra.
//!
//! Entries are assembled from exact integer and half-integer complex literals
//! so that structural identities (Clifford relations, block forms, projector
//! algebra) hold to machine precision. Metric signature is (+,-,-,-); the
//! spatial spin pairing is (2,3)->1, (3,1)->2, (1,2)->3.

use num_complex::Complex64;
use thiserror::Error;

pub(crate) const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const C_ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const C_I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("gamma index must be in 0..=3, got {0}")]
    InvalidGammaIndex(usize),
    #[error("pauli index must be in 1..=3, got {0}")]
    InvalidPauliIndex(usize),
    #[error("spin pair needs distinct spatial indices in 1..=3, got ({0}, {1})")]
    InvalidSpinPair(usize, usize),
}

/// Chirality / polarization handedness. `Right` carries the +1 sign of the
/// chiral projector (1 + g5)/2 and corresponds to the pure spin-up state for
/// momentum along +z.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    pub fn sign(self) -> f64 {
        match self {
            Handedness::Right => 1.0,
            Handedness::Left => -1.0,
        }
    }
}

/// Minkowski metric g = diag(+1, -1, -1, -1).
pub fn metric(mu: usize, nu: usize) -> f64 {
    if mu != nu {
        0.0
    } else if mu == 0 {
        1.0
    } else {
        -1.0
    }
}

type Block2 = [[Complex64; 2]; 2];

const BLOCK_ZERO: Block2 = [[C_ZERO, C_ZERO], [C_ZERO, C_ZERO]];
const BLOCK_ID: Block2 = [[C_ONE, C_ZERO], [C_ZERO, C_ONE]];

fn block_neg(b: Block2) -> Block2 {
    let mut out = b;
    for row in &mut out {
        for e in row.iter_mut() {
            *e = -*e;
        }
    }
    out
}

/// A 2x2 Pauli matrix: hermitian, traceless, determinant -1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliMatrix {
    entries: Block2,
}

impl PauliMatrix {
    /// sigma_p for p in 1..=3 (x, y, z).
    pub fn sigma(p: usize) -> Result<Self, AlgebraError> {
        let entries = match p {
            1 => [[C_ZERO, C_ONE], [C_ONE, C_ZERO]],
            2 => [[C_ZERO, -C_I], [C_I, C_ZERO]],
            3 => [[C_ONE, C_ZERO], [C_ZERO, -C_ONE]],
            _ => return Err(AlgebraError::InvalidPauliIndex(p)),
        };
        Ok(PauliMatrix { entries })
    }

    pub fn block(&self) -> Block2 {
        self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn determinant(&self) -> Complex64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }
}

/// A 4x4 complex matrix acting on Dirac spinors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorMatrix {
    entries: [[Complex64; 4]; 4],
}

impl SpinorMatrix {
    pub const fn from_rows(entries: [[Complex64; 4]; 4]) -> Self {
        SpinorMatrix { entries }
    }

    pub fn zero() -> Self {
        SpinorMatrix {
            entries: [[C_ZERO; 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = C_ONE;
        }
        m
    }

    /// Assemble from 2x2 blocks: [[ul, ur], [ll, lr]].
    pub fn from_blocks(ul: Block2, ur: Block2, ll: Block2, lr: Block2) -> Self {
        let mut m = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.entries[i][j] = ul[i][j];
                m.entries[i][j + 2] = ur[i][j];
                m.entries[i + 2][j] = ll[i][j];
                m.entries[i + 2][j + 2] = lr[i][j];
            }
        }
        m
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] = self.entries[j][i].conj();
            }
        }
        out
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        let mut out = *self;
        for row in &mut out.entries {
            for e in row.iter_mut() {
                *e *= c;
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64; 4]) -> [Complex64; 4] {
        let mut out = [C_ZERO; 4];
        for (slot, row) in out.iter_mut().zip(self.entries.iter()) {
            *slot = row.iter().zip(v.iter()).map(|(m, x)| m * x).sum();
        }
        out
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|e| e.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn is_anti_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint().scaled(-C_ONE)) <= tol
    }
}

impl std::ops::Add for SpinorMatrix {
    type Output = SpinorMatrix;
    fn add(self, other: SpinorMatrix) -> SpinorMatrix {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] += other.entries[i][j];
            }
        }
        out
    }
}

impl std::ops::Sub for SpinorMatrix {
    type Output = SpinorMatrix;
    fn sub(self, other: SpinorMatrix) -> SpinorMatrix {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] -= other.entries[i][j];
            }
        }
        out
    }
}

impl std::ops::Neg for SpinorMatrix {
    type Output = SpinorMatrix;
    fn neg(self) -> SpinorMatrix {
        self.scaled(-C_ONE)
    }
}

impl std::ops::Mul for SpinorMatrix {
    type Output = SpinorMatrix;
    fn mul(self, other: SpinorMatrix) -> SpinorMatrix {
        let mut out = SpinorMatrix::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = C_ZERO;
                for k in 0..4 {
                    acc += self.entries[i][k] * other.entries[k][j];
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }
}

impl std::ops::Mul<f64> for SpinorMatrix {
    type Output = SpinorMatrix;
    fn mul(self, c: f64) -> SpinorMatrix {
        self.scaled(Complex64::new(c, 0.0))
    }
}

/// Weyl-basis gamma matrix: g0 has identity blocks off-diagonal, g^i has
/// +sigma_i upper-right and -sigma_i lower-left.
pub fn gamma(mu: usize) -> Result<SpinorMatrix, AlgebraError> {
    match mu {
        0 => Ok(SpinorMatrix::from_blocks(
            BLOCK_ZERO, BLOCK_ID, BLOCK_ID, BLOCK_ZERO,
        )),
        1..=3 => {
            let s = PauliMatrix::sigma(mu)?.block();
            Ok(SpinorMatrix::from_blocks(
                BLOCK_ZERO,
                s,
                block_neg(s),
                BLOCK_ZERO,
            ))
        }
        _ => Err(AlgebraError::InvalidGammaIndex(mu)),
    }
}

/// g5 = i g0 g1 g2 g3, computed from the product (block-diagonal (-I2, +I2)
/// in this basis).
pub fn gamma5() -> SpinorMatrix {
    let g = |mu| gamma(mu).expect("fixed indices 0..=3");
    (g(0) * g(1) * g(2) * g(3)).scaled(C_I)
}

/// Spin matrix sigma^{ab} = i g^a g^b for distinct spatial a, b.
pub fn sigma_ab(a: usize, b: usize) -> Result<SpinorMatrix, AlgebraError> {
    if !(1..=3).contains(&a) || !(1..=3).contains(&b) || a == b {
        return Err(AlgebraError::InvalidSpinPair(a, b));
    }
    Ok((gamma(a)? * gamma(b)?).scaled(C_I))
}

/// Chirality projector (I +/- g5)/2.
pub fn chiral_projector(hand: Handedness) -> SpinorMatrix {
    (SpinorMatrix::identity() + gamma5() * hand.sign()) * 0.5
}

/// Cyclic index pair for spin component p: 1->(2,3), 2->(3,1), 3->(1,2).
pub fn spin_component_pair(p: usize) -> Result<(usize, usize), AlgebraError> {
    match p {
        1 => Ok((2, 3)),
        2 => Ok((3, 1)),
        3 => Ok((1, 2)),
        _ => Err(AlgebraError::InvalidPauliIndex(p)),
    }
}

/// Chirally transformed spin operator g5 sigma^{ab} / 2 for component p.
pub fn chiral_spin_operator(p: usize) -> Result<SpinorMatrix, AlgebraError> {
    let (a, b) = spin_component_pair(p)?;
    Ok((gamma5() * sigma_ab(a, b)?) * 0.5)
}
