use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{BigRat, QPoly};
use crate::ExactError;

/// Element of the field of rational functions in `q` over the rationals.
///
/// Always stored in canonical form: `gcd(num, den) = 1` and `den` is monic,
/// so two values are equal as field elements iff their fields are identical.
/// Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRatFn")]
pub struct QRatFn {
    num: QPoly,
    den: QPoly,
}

#[derive(Deserialize)]
struct RawRatFn {
    num: QPoly,
    den: QPoly,
}

impl TryFrom<RawRatFn> for QRatFn {
    type Error = ExactError;

    fn try_from(raw: RawRatFn) -> Result<Self, Self::Error> {
        QRatFn::new(raw.num, raw.den)
    }
}

impl QRatFn {
    /// Reduce `num/den` to canonical form.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = QPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Self::normalize_lead(num, den)
    }

    /// Make the denominator monic; assumes `num` and `den` already coprime.
    fn normalize_lead(num: QPoly, den: QPoly) -> Self {
        let (lc, den) = den.into_monic();
        let num = if lc.is_one() {
            num
        } else {
            num.scale(&lc.recip())
        };
        QRatFn { num, den }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRatFn {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(super::int(n))
    }

    pub fn q() -> Self {
        Self::from_poly(QPoly::q())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let mono = QPoly::monomial(BigRat::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            QRatFn {
                num: QPoly::one(),
                den: mono,
            }
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational constant, if it is one.
    pub fn as_constant(&self) -> Option<BigRat> {
        match (self.num.degree(), self.den.is_one()) {
            (None, _) => Some(BigRat::zero()),
            (Some(0), true) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.num.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::normalize_lead(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QRatFn) -> Result<Self, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRatFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&BigRat::from_integer(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        // coprime stays coprime under powers
        QRatFn {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Exact value at `q = at`.
    pub fn eval(&self, at: &BigRat) -> Result<BigRat, ExactError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(ExactError::Pole { at: at.to_string() });
        }
        Ok(self.num.eval(at) / d)
    }

    /// The substitution `q -> 1/q`, a field automorphism and an involution.
    pub fn subst_q_inverse(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        // N(1/q)/D(1/q) = rev(N)/rev(D) * q^(deg D - deg N)
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        if dd >= dn {
            num = num.shift_up(dd - dn);
        } else {
            den = den.shift_up(dn - dd);
        }
        // reversal preserves coprimality except for factors of q, which the gcd removes
        Self::reduce(num, den)
    }
}

impl Zero for QRatFn {
    fn zero() -> Self {
        QRatFn {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QRatFn {
    fn one() -> Self {
        QRatFn {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }
}

impl fmt::Display for QRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for QRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRatFn{self}")
    }
}

impl From<QPoly> for QRatFn {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<BigRat> for QRatFn {
    fn from(c: BigRat) -> Self {
        Self::from_rat(c)
    }
}

impl Add<&QRatFn> for &QRatFn {
    type Output = QRatFn;

    fn add(self, rhs: &QRatFn) -> QRatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return QRatFn::from_poly(&self.num + &rhs.num);
            }
            return QRatFn::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = QPoly::gcd(&self.den, &rhs.den);
        let lhs_cof = self.den.exact_div(&g);
        let rhs_cof = rhs.den.exact_div(&g);
        let num = &(&self.num * &rhs_cof) + &(&rhs.num * &lhs_cof);
        let den = &self.den * &rhs_cof;
        if num.is_zero() {
            return QRatFn::zero();
        }
        // the sum is coprime to both cofactors, so only g can cancel
        let common = QPoly::gcd(&num, &g);
        if common.is_one() {
            return QRatFn::normalize_lead(num, den);
        }
        QRatFn::normalize_lead(num.exact_div(&common), den.exact_div(&common))
    }
}

impl Neg for &QRatFn {
    type Output = QRatFn;

    fn neg(self) -> QRatFn {
        QRatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub<&QRatFn> for &QRatFn {
    type Output = QRatFn;

    fn sub(self, rhs: &QRatFn) -> QRatFn {
        self + &(-rhs)
    }
}

impl Mul<&QRatFn> for &QRatFn {
    type Output = QRatFn;

    fn mul(self, rhs: &QRatFn) -> QRatFn {
        if self.is_zero() || rhs.is_zero() {
            return QRatFn::zero();
        }
        // cross-cancel so the product is already reduced
        let g1 = QPoly::gcd(&self.num, &rhs.den);
        let g2 = QPoly::gcd(&rhs.num, &self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        QRatFn::normalize_lead(num, den)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<QRatFn> for QRatFn {
            type Output = QRatFn;
            fn $m(self, rhs: QRatFn) -> QRatFn { (&self).$m(&rhs) }
        }
        impl $tr<&QRatFn> for QRatFn {
            type Output = QRatFn;
            fn $m(self, rhs: &QRatFn) -> QRatFn { (&self).$m(rhs) }
        }
        impl $tr<QRatFn> for &QRatFn {
            type Output = QRatFn;
            fn $m(self, rhs: QRatFn) -> QRatFn { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for QRatFn {
    type Output = QRatFn;

    fn neg(self) -> QRatFn {
        -&self
    }
}

impl std::iter::Sum for QRatFn {
    fn sum<I: Iterator<Item = QRatFn>>(iter: I) -> Self {
        iter.fold(QRatFn::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{int, rat};

    fn one_plus_q() -> QRatFn {
        QRatFn::from_poly(QPoly::from_ints(&[1, 1]))
    }

    fn minus_q_over_one_plus_q() -> QRatFn {
        (-QRatFn::q()).checked_div(&one_plus_q()).unwrap()
    }

    #[test]
    fn add_collapses_to_one() {
        let a = QRatFn::q().checked_div(&one_plus_q()).unwrap();
        let b = QRatFn::one().checked_div(&one_plus_q()).unwrap();
        let s = &a + &b;
        assert_eq!(s, QRatFn::one());
        assert_eq!(s.num().coeffs(), &[int(1)]);
        assert_eq!(s.den().coeffs(), &[int(1)]);
    }

    #[test]
    fn multiplicative_identity_and_self_difference() {
        let f = minus_q_over_one_plus_q();
        assert_eq!(&f * &QRatFn::one(), f);
        assert!((&f - &f).is_zero());
        assert_eq!((&f - &f).den(), &QPoly::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            QRatFn::q().checked_div(&QRatFn::zero()),
            Err(ExactError::DivisionByZero)
        );
        assert_eq!(
            QRatFn::new(QPoly::one(), QPoly::zero()),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(minus_q_over_one_plus_q().eval(&int(1)).unwrap(), rat(-1, 2));
        assert_eq!(QRatFn::one().eval(&rat(7, 3)).unwrap(), int(1));
        let f = QRatFn::new(QPoly::from_ints(&[1, -1]), QPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(f.eval(&int(1)).unwrap(), int(0));
        assert!(matches!(f.eval(&int(-1)), Err(ExactError::Pole { at }) if at == "-1"));
    }

    #[test]
    fn subst_q_inverse_examples() {
        let f = minus_q_over_one_plus_q();
        let expected = (-QRatFn::one()).checked_div(&one_plus_q()).unwrap();
        assert_eq!(f.subst_q_inverse(), expected);
        let c = QRatFn::from_rat(rat(5, 7));
        assert_eq!(c.subst_q_inverse(), c);
        assert_eq!(QRatFn::q().subst_q_inverse(), QRatFn::q_pow(-1));
        assert_eq!(f.subst_q_inverse().subst_q_inverse(), f);
    }

    #[test]
    fn canonical_den_is_monic() {
        let f = QRatFn::new(QPoly::from_ints(&[2, 2]), QPoly::from_ints(&[4, 0, 4])).unwrap();
        assert!(f.den().is_monic());
        assert_eq!(f.den(), &QPoly::from_ints(&[1, 0, 1]));
        assert_eq!(f.num(), &QPoly::new(vec![rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn display_form() {
        assert_eq!(minus_q_over_one_plus_q().to_string(), "(-1·q)/(1 + 1·q)");
        assert_eq!(QRatFn::zero().to_string(), "(0)/(1)");
    }
}
