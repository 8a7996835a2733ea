//! Exact arithmetic underlying every symbol computation: rationals,
//! scaled integer matrices, arithmetic functions and group volumes.

pub mod arith;
pub mod group;
pub mod matrix;
pub mod rat;

pub use arith::{arith, central_binomial_check, divisors, factorize, is_squarefree, mobius, sigma1, Arith};
pub use group::{GroupData, GroupKind};
pub use matrix::{in_gamma0, in_gamma0_plus, mat_inv, mat_mul, Cusp, ScaledMat};
pub use rat::{denom_divides, frac, int, rat, sgn, ModZ, Rat};
