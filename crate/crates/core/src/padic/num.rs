use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactq::BigRat;
use crate::PAdicError;

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<(), PAdicError> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(PAdicError::InvalidPrime(p))
    }
}

fn p_pow(p: u64, e: i64) -> BigUint {
    debug_assert!(e >= 0);
    num_traits::pow(BigUint::from(p), e as usize)
}

/// Split off the largest power of `p` dividing a nonzero integer.
fn strip_p(mut n: BigUint, p: u64) -> (i64, BigUint) {
    let pb = BigUint::from(p);
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return (v, n);
        }
        n = q;
        v += 1;
    }
}

/// p-adic valuation of a rational; `None` for zero.
pub fn valuation_of_rational(r: &BigRat, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let (vn, _) = strip_p(r.numer().magnitude().clone(), p);
    let (vd, _) = strip_p(r.denom().magnitude().clone(), p);
    Some(vn - vd)
}

/// Valuation of a value known only to finite precision.
///
/// `AtLeast(k)` means the value is indistinguishable from zero at absolute
/// precision `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Valuation {
    Exact(i64),
    AtLeast(i64),
}

impl Valuation {
    /// Best known lower bound.
    pub fn bound(self) -> i64 {
        match self {
            Valuation::Exact(v) | Valuation::AtLeast(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Valuation::Exact(_))
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.bound().cmp(&other.bound()))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Exact(v) => write!(f, "{v}"),
            Valuation::AtLeast(v) => write!(f, "≥{v}"),
        }
    }
}

/// Element of ℚ_p known modulo `p^precision`.
///
/// Stored as `p^valuation · unit` with the unit reduced modulo
/// `p^(precision - valuation)`. A value indistinguishable from zero has
/// `valuation == precision` and a zero unit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PAdicNum {
    p: u64,
    precision: i64,
    valuation: i64,
    unit: BigUint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PAdicOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl PAdicNum {
    pub fn zero(p: u64, precision: i64) -> Result<Self, PAdicError> {
        check_prime(p)?;
        Ok(Self::zero_unchecked(p, precision))
    }

    fn zero_unchecked(p: u64, precision: i64) -> Self {
        PAdicNum {
            p,
            precision,
            valuation: precision,
            unit: BigUint::zero(),
        }
    }

    pub fn one(p: u64, precision: i64) -> Result<Self, PAdicError> {
        Self::from_rational(&BigRat::one(), p, precision)
    }

    /// Canonical expansion of `r` modulo `p^precision`.
    pub fn from_rational(r: &BigRat, p: u64, precision: i64) -> Result<Self, PAdicError> {
        check_prime(p)?;
        if precision <= 0 {
            return Err(PAdicError::InvalidPrecision(precision));
        }
        Ok(Self::from_rational_unchecked(r, p, precision))
    }

    pub(crate) fn from_rational_unchecked(r: &BigRat, p: u64, precision: i64) -> Self {
        if r.is_zero() {
            return Self::zero_unchecked(p, precision);
        }
        let (vn, un) = strip_p(r.numer().magnitude().clone(), p);
        let (vd, ud) = strip_p(r.denom().magnitude().clone(), p);
        let valuation = vn - vd;
        if valuation >= precision {
            return Self::zero_unchecked(p, precision);
        }
        let modulus = p_pow(p, precision - valuation);
        let inv = ud
            .modinv(&modulus)
            .expect("denominator unit is invertible mod p^k");
        let mut unit = (un * inv) % &modulus;
        if r.is_negative() {
            unit = (&modulus - unit) % &modulus;
        }
        PAdicNum {
            p,
            precision,
            valuation,
            unit,
        }
    }

    pub fn from_int(n: i64, p: u64, precision: i64) -> Result<Self, PAdicError> {
        Self::from_rational(&BigRat::from_integer(BigInt::from(n)), p, precision)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Digits known past the leading one; zero for an indistinguishable value.
    pub fn relative_precision(&self) -> i64 {
        self.precision - self.valuation
    }

    pub fn unit(&self) -> &BigUint {
        &self.unit
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    pub fn valuation(&self) -> Valuation {
        if self.is_zero() {
            Valuation::AtLeast(self.precision)
        } else {
            Valuation::Exact(self.valuation)
        }
    }

    /// `|x|_p = p^{-v}`, or the bound `p^{-precision}` for an indistinguishable value.
    pub fn norm(&self) -> BigRat {
        let v = self.valuation().bound();
        let pv = BigRat::from_integer(BigInt::from(p_pow(self.p, v.abs())));
        if v >= 0 {
            pv.recip()
        } else {
            pv
        }
    }

    /// The value as an integer in `[0, p^precision)` when it is p-integral.
    pub fn residue(&self) -> Option<BigUint> {
        if self.precision <= 0 {
            return Some(BigUint::zero());
        }
        if self.is_zero() {
            return Some(BigUint::zero());
        }
        if self.valuation < 0 {
            return None;
        }
        Some(&self.unit * p_pow(self.p, self.valuation))
    }

    /// Forget digits beyond `precision` (never adds digits).
    pub fn with_precision(&self, precision: i64) -> Self {
        if precision >= self.precision {
            return self.clone();
        }
        if self.is_zero() || self.valuation >= precision {
            return Self::zero_unchecked(self.p, precision);
        }
        let modulus = p_pow(self.p, precision - self.valuation);
        PAdicNum {
            p: self.p,
            precision,
            valuation: self.valuation,
            unit: &self.unit % modulus,
        }
    }

    fn same_prime(&self, other: &Self) -> Result<(), PAdicError> {
        if self.p != other.p {
            return Err(PAdicError::PrimeMismatch(self.p, other.p));
        }
        Ok(())
    }

    /// Build from `p^base · digits`, where `digits` is known modulo `p^(precision - base)`.
    fn normalize(p: u64, precision: i64, base: i64, digits: BigUint) -> Self {
        if digits.is_zero() || base >= precision {
            return Self::zero_unchecked(p, precision);
        }
        let (shift, unit) = strip_p(digits, p);
        let valuation = base + shift;
        if valuation >= precision {
            return Self::zero_unchecked(p, precision);
        }
        PAdicNum {
            p,
            precision,
            valuation,
            unit,
        }
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Result<Self, PAdicError> {
        self.same_prime(other)?;
        let precision = self.precision.min(other.precision);
        let base = self.valuation.min(other.valuation);
        if base >= precision {
            return Ok(Self::zero_unchecked(self.p, precision));
        }
        let modulus = p_pow(self.p, precision - base);
        let lift = |x: &PAdicNum| -> BigUint {
            if x.is_zero() {
                BigUint::zero()
            } else {
                (&x.unit * p_pow(x.p, x.valuation - base)) % &modulus
            }
        };
        let a = lift(self);
        let b = lift(other);
        let digits = if negate {
            (a + &modulus - b) % &modulus
        } else {
            (a + b) % &modulus
        };
        Ok(Self::normalize(self.p, precision, base, digits))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PAdicError> {
        self.add_signed(other, false)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PAdicError> {
        self.add_signed(other, true)
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let modulus = p_pow(self.p, self.relative_precision());
        PAdicNum {
            unit: (&modulus - &self.unit) % &modulus,
            ..self.clone()
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PAdicError> {
        self.same_prime(other)?;
        let precision = (self.precision + other.valuation).min(other.precision + self.valuation);
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero_unchecked(self.p, precision));
        }
        let valuation = self.valuation + other.valuation;
        let modulus = p_pow(self.p, precision - valuation);
        Ok(PAdicNum {
            p: self.p,
            precision,
            valuation,
            unit: (&self.unit * &other.unit) % modulus,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, PAdicError> {
        self.same_prime(other)?;
        if other.is_zero() {
            return Err(PAdicError::DivisionByZero);
        }
        let rel = self.relative_precision().min(other.relative_precision());
        if self.is_zero() {
            return Ok(Self::zero_unchecked(
                self.p,
                self.precision - other.valuation,
            ));
        }
        let valuation = self.valuation - other.valuation;
        let modulus = p_pow(self.p, rel);
        let inv = other.unit.modinv(&modulus).expect("units are invertible");
        Ok(PAdicNum {
            p: self.p,
            precision: valuation + rel,
            valuation,
            unit: (&self.unit * inv) % modulus,
        })
    }

    pub fn arith(&self, other: &Self, op: PAdicOp) -> Result<Self, PAdicError> {
        match op {
            PAdicOp::Add => self.try_add(other),
            PAdicOp::Sub => self.try_sub(other),
            PAdicOp::Mul => self.try_mul(other),
            PAdicOp::Div => self.try_div(other),
        }
    }

    /// `self^e` by repeated squaring on the unit part.
    pub fn pow(&self, e: u64) -> Self {
        if e == 0 {
            let precision = self.relative_precision().max(1);
            return Self::from_rational_unchecked(&BigRat::one(), self.p, precision);
        }
        if self.is_zero() {
            let e = i64::try_from(e).unwrap_or(i64::MAX);
            let precision = self.precision.saturating_mul(e).max(self.precision);
            return Self::zero_unchecked(self.p, precision);
        }
        let rel = self.relative_precision();
        let modulus = p_pow(self.p, rel);
        let valuation = self.valuation * e.to_i64().expect("exponent fits in i64");
        PAdicNum {
            p: self.p,
            precision: valuation + rel,
            valuation,
            unit: self.unit.modpow(&BigUint::from(e), &modulus),
        }
    }
}

impl fmt::Display for PAdicNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p;
        if self.is_zero() {
            return write!(f, "O({p}^{})", self.precision);
        }
        match self.valuation {
            0 => write!(f, "{}", self.unit)?,
            v => write!(f, "{}·{p}^{v}", self.unit)?,
        }
        write!(f, " + O({p}^{})", self.precision)
    }
}

impl fmt::Debug for PAdicNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PAdicNum({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{int, rat};

    fn pn(r: BigRat, p: u64, k: i64) -> PAdicNum {
        PAdicNum::from_rational(&r, p, k).unwrap()
    }

    #[test]
    fn primes() {
        assert!(is_odd_prime(3) && is_odd_prime(5) && is_odd_prime(101));
        assert!(!is_odd_prime(2) && !is_odd_prime(4) && !is_odd_prime(1) && !is_odd_prime(9));
        assert_eq!(
            PAdicNum::zero(4, 5).unwrap_err(),
            PAdicError::InvalidPrime(4)
        );
    }

    #[test]
    fn from_rational_examples() {
        let half = pn(rat(1, 2), 3, 4);
        assert_eq!(half.residue(), Some(BigUint::from(41u32)));
        let z = pn(int(0), 3, 4);
        assert!(z.is_zero());
        assert_eq!(z.valuation(), Valuation::AtLeast(4));
        assert_eq!(pn(int(9), 3, 5).valuation(), Valuation::Exact(2));
        assert_eq!(pn(rat(5, 9), 3, 5).valuation(), Valuation::Exact(-2));
        assert_eq!(pn(int(-1), 3, 2).residue(), Some(BigUint::from(8u32)));
        assert!(pn(int(81), 3, 4).is_zero());
    }

    #[test]
    fn arithmetic_examples() {
        let x = pn(rat(7, 2), 3, 6);
        let zero = pn(int(0), 3, 6);
        assert_eq!(x.try_add(&zero).unwrap(), x);

        let three = pn(int(3), 3, 5);
        let nine = three.try_mul(&three).unwrap();
        assert_eq!(nine.valuation(), Valuation::Exact(2));
        assert_eq!(nine.unit(), &BigUint::one());

        // q = 4, 1 - q = -3
        let one = pn(int(1), 3, 5);
        let one_minus_q = one.try_sub(&pn(int(4), 3, 5)).unwrap();
        assert_eq!(one_minus_q.valuation(), Valuation::Exact(1));
        let inv = one.try_div(&one_minus_q).unwrap();
        assert_eq!(inv.valuation(), Valuation::Exact(-1));
        assert_eq!(
            inv.try_mul(&one_minus_q).unwrap().with_precision(3),
            pn(int(1), 3, 3)
        );

        assert_eq!(one.try_div(&zero).unwrap_err(), PAdicError::DivisionByZero);
        let five_adic = pn(int(1), 5, 5);
        assert_eq!(
            one.try_add(&five_adic).unwrap_err(),
            PAdicError::PrimeMismatch(3, 5)
        );
    }

    #[test]
    fn precision_propagation() {
        let a = pn(int(1), 3, 8);
        let b = pn(int(2), 3, 5);
        assert_eq!(a.try_add(&b).unwrap().precision(), 5);
        // cancellation keeps absolute precision, loses relative
        let c = pn(int(10), 3, 5).try_sub(&pn(int(1), 3, 5)).unwrap();
        assert_eq!(c.valuation(), Valuation::Exact(2));
        assert_eq!(c.relative_precision(), 3);
        // mul: relative precision of the worse factor
        let d = pn(int(9), 3, 6).try_mul(&pn(int(2), 3, 6)).unwrap();
        assert_eq!(d.precision(), 6);
        let e = pn(int(9), 3, 6).try_mul(&pn(int(3), 3, 6)).unwrap();
        assert_eq!((e.valuation(), e.precision()), (Valuation::Exact(3), 7));
    }

    #[test]
    fn pow_by_squaring() {
        let q = pn(int(4), 3, 10);
        let direct = (0..9).fold(pn(int(1), 3, 10), |acc, _| acc.try_mul(&q).unwrap());
        assert_eq!(q.pow(9), direct);
        assert_eq!(
            q.pow(27).residue(),
            Some(BigUint::from(4u32).pow(27) % BigUint::from(59049u32))
        );
    }

    #[test]
    fn display() {
        assert_eq!(pn(rat(1, 2), 3, 4).to_string(), "41 + O(3^4)");
        assert_eq!(pn(int(0), 3, 4).to_string(), "O(3^4)");
        assert_eq!(pn(rat(1, 3), 3, 2).to_string(), "1·3^-1 + O(3^2)");
    }
}
