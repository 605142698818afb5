//! Exact arithmetic kernel.
//!
//! [`BigRat`] is the coefficient domain, [`QPoly`] holds polynomials in the
//! indeterminate `q`, and [`QRatFn`] is the field of reduced rational
//! functions in `q` in which every q-Euler value lives. [`XPoly`] is a
//! polynomial in a second indeterminate `x` over any [`Scalar`].

mod binomial;
mod intpoly;
mod qpoly;
mod ratfn;
mod xpoly;

pub use binomial::{binomial, binomial_rat};
pub use qpoly::QPoly;
pub use ratfn::QRatFn;
pub use xpoly::{Scalar, XPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept reduced with a positive denominator.
pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// The q-number `[x]_q = 1 + q + ... + q^(x-1)`; the zero polynomial for `x = 0`.
pub fn q_integer(x: usize) -> QPoly {
    QPoly::new(vec![BigRat::one(); x])
}

/// `[x]_q` as an element of the field.
pub fn q_integer_fn(x: usize) -> QRatFn {
    QRatFn::from_poly(q_integer(x))
}

/// Exact integer power with `0^0 = 1`.
pub fn int_pow(base: i64, exp: u32) -> BigRat {
    if exp == 0 {
        return BigRat::one();
    }
    if base == 0 {
        return BigRat::zero();
    }
    BigRat::from_integer(num_traits::pow(BigInt::from(base), exp as usize))
}
