use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{binomial, BigRat, QRatFn};

/// Coefficient ring for [`XPoly`].
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_bigint(n: BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }
}

impl Scalar for BigRat {
    fn from_bigint(n: BigInt) -> Self {
        BigRat::from_integer(n)
    }
}

impl Scalar for QRatFn {
    fn from_bigint(n: BigInt) -> Self {
        QRatFn::from_rat(BigRat::from_integer(n))
    }
}

/// Dense polynomial in `x`, ascending powers, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(
    serialize = "C: Serialize + Clone",
    deserialize = "C: Deserialize<'de> + Scalar"
))]
#[serde(from = "Vec<C>", into = "Vec<C>")]
pub struct XPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> From<Vec<C>> for XPoly<C> {
    fn from(v: Vec<C>) -> Self {
        XPoly::new(v)
    }
}

impl<C> From<XPoly<C>> for Vec<C> {
    fn from(p: XPoly<C>) -> Self {
        p.coeffs
    }
}

impl<C: Scalar> XPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![C::zero(), C::one()])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_int(&self, at: i64) -> C {
        self.eval(&C::from_i64(at))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn map<D: Scalar>(&self, f: impl FnMut(&C) -> D) -> XPoly<D> {
        XPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(a + b x)`, expanded with binomial coefficients.
    pub fn compose_linear(&self, a: &C, b: &C) -> Self {
        let deg = match self.degree() {
            None => return Self::zero(),
            Some(d) => d,
        };
        let a_pows = powers(a, deg);
        let b_pows = powers(b, deg);
        let mut out = vec![C::zero(); deg + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c (a + b x)^k = c sum_j C(k, j) a^(k-j) b^j x^j
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                let term = C::from_bigint(binomial(k, j)) * &a_pows[k - j] * &b_pows[j] * c;
                *slot = slot.clone() + term;
            }
        }
        Self::new(out)
    }

    /// `p(x + shift)`.
    pub fn shift(&self, shift: &C) -> Self {
        self.compose_linear(shift, &C::one())
    }

    /// `p(1 - x)`.
    pub fn reflect(&self) -> Self {
        self.compose_linear(&C::one(), &-C::one())
    }
}

fn powers<C: Scalar>(base: &C, up_to: usize) -> Vec<C> {
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(C::one());
    for i in 0..up_to {
        let next = out[i].clone() * base;
        out.push(next);
    }
    out
}

impl<C: Scalar> fmt::Display for XPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·x")?,
                _ => write!(f, "{c}·x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for XPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly[{self}]")
    }
}

impl<C: Scalar> Add<&XPoly<C>> for &XPoly<C> {
    type Output = XPoly<C>;

    fn add(self, rhs: &XPoly<C>) -> XPoly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Scalar> Sub<&XPoly<C>> for &XPoly<C> {
    type Output = XPoly<C>;

    fn sub(self, rhs: &XPoly<C>) -> XPoly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<C: Scalar> Neg for &XPoly<C> {
    type Output = XPoly<C>;

    fn neg(self) -> XPoly<C> {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Scalar> Mul<&XPoly<C>> for &XPoly<C> {
    type Output = XPoly<C>;

    fn mul(self, rhs: &XPoly<C>) -> XPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        XPoly::new(out)
    }
}
