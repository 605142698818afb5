//! Exact q-Euler numbers and polynomials with weight 0, Frobenius-Euler
//! numbers and polynomials, truncated fermionic p-adic q-integrals, and
//! machine verification of the identities relating them.
//!
//! All symbolic values live in [`QRatFn`], the field of rational functions
//! in `q` over the rationals, kept in a canonical form so that identity
//! checks reduce to structural equality.

pub mod bernstein;
pub mod error;
pub mod euler;
pub mod exactq;
pub mod padic;
pub mod verify;

pub use error::{BernsteinError, EulerError, ExactError, PAdicError};
pub use exactq::{BigRat, QPoly, QRatFn, Scalar, XPoly};
