//! Floating-point q-series used to check the exact symbols against their
//! analytic definitions.

pub mod eta;
pub mod periods;
pub mod series;

pub use eta::{eta_residual, log_eta, log_eta_for, log_eta_n, log_eta_plus, sample_point};
pub use periods::{
    base_point, conj_log_defect, e2_period, e2_symbol_difference, l1, l1_f11, modular_symbol, modular_symbol_at,
    omega_float, omega_float_raw, F11Data, OMEGA1_37, OMEGA2_37_IM, PERIOD_TOL,
};
pub use series::{
    e2_difference_series, e2_series, f11_coefficients, f11_coefficients_brute, f11_coefficients_chi,
    f11_integer_coefficients, f11_series, sigma1_table, QSeries, TailBound, MAX_TERMS,
};
