//! First-order electric and magnetic energy shifts of free electron states.
//!
//! The library evaluates the expectation value of the electromagnetic energy
//! shift for a single-electron spin superposition along two independent
//! routes: a brute-force spinor matrix-element oracle built on Weyl-basis
//! gamma matrices, and the closed forms in both the fully relativistic
//! treatment and the non-relativistic limit. A verification runner and a
//! momentum-sweep CSV emitter sit on top.

pub mod algebra;
pub mod cli;
pub mod currents;
pub mod shift;
pub mod spinor;
pub mod state;
pub mod units;
pub mod verify;

pub use algebra::{Handedness, PauliMatrix, SpinorMatrix};
pub use num_complex::Complex64;
pub use shift::{PotentialAverages, ShiftResult, TreatmentMode};
pub use spinor::{DiracSpinor, FourMomentum, Spin, SpinAxis};
pub use state::ElectronState;
