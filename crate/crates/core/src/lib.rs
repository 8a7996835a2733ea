//! Exact Dedekind sums, modular Dedekind symbols for `SL(2,Z)`, `Gamma_0(N)`
//! and `Gamma_0(N)^+`, their higher-order analogues on word presentations,
//! and floating-point q-series checks.

pub mod dedekind_sum;
pub mod error;
pub mod exact_core;
pub mod higher_order;
pub mod numerics;
pub mod phase;
pub mod sample;
pub mod symbols_classical;
pub mod symbols_congruence;
pub mod symbols_moonshine;
pub mod verify;
pub mod words;

pub use dedekind_sum::{dedekind_sum, s_fast, s_naive};
pub use error::{Error, Result};
pub use exact_core::{Cusp, GroupData, GroupKind, ModZ, Rat, ScaledMat};
pub use higher_order::{s_star, s_star_matrix, AffineModZ, StarCusp};
pub use phase::{omega, rho};
pub use words::{GroupPreset, Letter, Word};
