//! q-Euler numbers and polynomials with weight 0, their weighted variants,
//! Frobenius-Euler numbers and polynomials, and the two sides of each
//! identity relating them.

mod cache;
pub mod identities;
mod numbers;
mod polynomial;

pub use numbers::{
    cached_q_euler, classical_euler_numbers, first_recurrence_violation, frobenius_numbers,
    preload_q_euler, q_euler_numbers, q_euler_numbers_weighted, weighted_by_closed_form,
    weighted_by_recurrence, FrobeniusSeq, QEulerSeq,
};
pub use polynomial::{frobenius_polynomial, minus_q_inverse, q_euler_polynomial};
