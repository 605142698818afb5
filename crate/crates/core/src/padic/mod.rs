//! Finite-precision p-adic numbers and the truncated fermionic p-adic
//! q-integral, with diagnostics comparing partial integrals against the
//! exact symbolic moments.

mod integral;
mod num;

pub use integral::{
    check_shift_identity_finite, convergence_report, exact_moment, fermionic_integral_partial,
    ConvergenceReport, ConvergenceRow, QChoice, ShiftCheck, DEFAULT_PRECISION, GUARD_DIGITS,
    MAX_TERMS, MIN_GAIN,
};
pub use num::{is_odd_prime, valuation_of_rational, PAdicNum, PAdicOp, Valuation};
