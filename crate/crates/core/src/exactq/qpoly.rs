use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{intpoly, BigRat};

/// Dense polynomial in `q` over the rationals, ascending powers.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is
/// the empty vector and `degree` is exact.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct QPoly {
    coeffs: Vec<BigRat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: BigRat, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRat::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    pub fn q() -> Self {
        Self::monomial(BigRat::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, at: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigRat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// `q^d * p(1/q)` for `d = degree(p)`: the coefficient list reversed.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Leading coefficient and the monic associate. The zero polynomial maps to itself.
    pub fn into_monic(self) -> (BigRat, Self) {
        match self.leading().cloned() {
            None => (BigRat::one(), self),
            Some(lc) if lc.is_one() => (lc, self),
            Some(lc) => {
                let inv = lc.recip();
                let monic = self.scale(&inv);
                (lc, monic)
            }
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let factor = &rem[i] * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i - dd + j] -= &factor * d;
                }
            }
            quot[i - dd] = factor;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Exact quotient; the caller guarantees `divisor | self`.
    pub fn exact_div(&self, divisor: &QPoly) -> QPoly {
        if divisor.is_one() {
            return self.clone();
        }
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return QPoly::zero();
        }
        let (ca, a) = intpoly::primitive_part(&self.coeffs);
        let (cb, b) = intpoly::primitive_part(&divisor.coeffs);
        // Gauss: a primitive divisor of an integer polynomial leaves an integer quotient
        let quot = intpoly::exact_quotient(&a, &b).expect("exact_div with nonzero remainder");
        QPoly::new(intpoly::to_rational(quot, &(ca / cb)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => return QPoly::zero(),
            (true, false) => return b.clone().into_monic().1,
            (false, true) => return a.clone().into_monic().1,
            _ => {}
        }
        let (_, x) = intpoly::primitive_part(&a.coeffs);
        let (_, y) = intpoly::primitive_part(&b.coeffs);
        let g = intpoly::gcd(&x, &y);
        QPoly::new(intpoly::to_rational(g, &BigRat::one()))
            .into_monic()
            .1
    }

    fn write_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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
                1 => write!(f, "{c}·q")?,
                _ => write!(f, "{c}·q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl From<QPoly> for Vec<String> {
    fn from(p: QPoly) -> Self {
        p.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl TryFrom<Vec<String>> for QPoly {
    type Error = crate::ExactError;

    fn try_from(v: Vec<String>) -> Result<Self, Self::Error> {
        v.iter()
            .map(|s| {
                s.parse::<BigRat>()
                    .map_err(|_| crate::ExactError::BadCoefficient(s.clone()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(QPoly::new)
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPoly::new(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigRat::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        QPoly::new(coeffs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly { (&self).$m(&rhs) }
        }
        impl $tr<&QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: &QPoly) -> QPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        -&self
    }
}
