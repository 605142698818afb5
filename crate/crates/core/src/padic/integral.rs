use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::num::{check_prime, valuation_of_rational, PAdicNum, Valuation};
use crate::euler::q_euler_numbers;
use crate::exactq::{BigRat, XPoly};
use crate::PAdicError;

/// Extra digits carried while summing, dropped before results are returned.
pub const GUARD_DIGITS: i64 = 4;

/// Default absolute precision for integral experiments.
pub const DEFAULT_PRECISION: i64 = 12;

/// Valuation gain required of a converging report.
pub const MIN_GAIN: i64 = 2;

/// Largest `p^N` accepted by [`fermionic_integral_partial`].
pub const MAX_TERMS: u64 = 1 << 20;

/// An admissible `q`: a rational with `|1 - q|_p < 1`, and the working precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QChoice {
    p: u64,
    q: BigRat,
    precision: i64,
}

impl QChoice {
    pub fn new(p: u64, q: BigRat, precision: i64) -> Result<Self, PAdicError> {
        check_prime(p)?;
        if precision <= 0 {
            return Err(PAdicError::InvalidPrecision(precision));
        }
        let gap = BigRat::one() - &q;
        // q = 1 gives gap 0, which is admissible
        let admissible = valuation_of_rational(&gap, p).is_none_or(|v| v >= 1);
        if !admissible {
            return Err(PAdicError::InadmissibleQ(q.to_string()));
        }
        Ok(QChoice { p, q, precision })
    }

    /// `q = 1 + offset · p`.
    pub fn with_offset(p: u64, offset: i64, precision: i64) -> Result<Self, PAdicError> {
        let q = BigRat::one() + BigRat::from_integer(BigInt::from(offset) * BigInt::from(p));
        Self::new(p, q, precision)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> &BigRat {
        &self.q
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn q_padic(&self) -> PAdicNum {
        PAdicNum::from_rational_unchecked(&self.q, self.p, self.precision)
    }

    fn embed(&self, r: &BigRat, precision: i64) -> PAdicNum {
        PAdicNum::from_rational_unchecked(r, self.p, precision)
    }
}

fn level_size(p: u64, level: u32) -> Result<u64, PAdicError> {
    p.checked_pow(level)
        .filter(|&m| m <= MAX_TERMS)
        .ok_or(PAdicError::LevelTooLarge { p, level })
}

/// `[2]_q / (1 + q^{p^N}) Σ_{x=0}^{p^N - 1} f(x) (-q)^x`, reported at the
/// precision of `qc`.
///
/// Fails with `PrecisionUnderflow` when negative valuations in `f` eat every
/// digit that was asked for, and with `LevelTooLarge` when `p^N` exceeds
/// [`MAX_TERMS`].
pub fn fermionic_integral_partial(
    f: &XPoly<BigRat>,
    qc: &QChoice,
    level: u32,
) -> Result<PAdicNum, PAdicError> {
    let terms = level_size(qc.p, level)?;
    let work = qc.precision + GUARD_DIGITS;
    let q = qc.embed(&qc.q, work);
    let neg_q = q.neg();
    let mut power = qc.embed(&BigRat::one(), work);
    let mut sum = qc.embed(&BigRat::zero(), work);
    for x in 0..terms {
        let x = BigRat::from_integer(BigInt::from(x));
        let fx = qc.embed(&f.eval(&x), work);
        sum = sum.try_add(&fx.try_mul(&power)?)?;
        power = power.try_mul(&neg_q)?;
    }
    let one = qc.embed(&BigRat::one(), work);
    let two_q = one.try_add(&q)?;
    let prefactor = two_q.try_div(&one.try_add(&q.pow(terms))?)?;
    let value = prefactor.try_mul(&sum)?.with_precision(qc.precision);
    if value.precision() < qc.precision && value.is_zero() {
        return Err(PAdicError::PrecisionUnderflow {
            requested: qc.precision,
            achieved: value.precision(),
        });
    }
    Ok(value)
}

fn monomial(n: usize) -> XPoly<BigRat> {
    let mut coeffs = vec![BigRat::zero(); n + 1];
    coeffs[n] = BigRat::one();
    XPoly::new(coeffs)
}

/// `Ẽ_{n,q}` at the rational `q` of `qc`, embedded in ℚ_p.
pub fn exact_moment(n: usize, qc: &QChoice) -> PAdicNum {
    let value = q_euler_numbers(n)
        .get(n)
        .eval(&qc.q)
        .expect("1 + q is a p-adic unit, so never zero");
    qc.embed(&value, qc.precision)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub level: u32,
    pub defect: Valuation,
}

/// Valuations of `I_N(x^n) - Ẽ_{n,q}` across levels `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub moment: usize,
    pub p: u64,
    pub q: String,
    pub precision: i64,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    /// Every partial integral already equals the limit to full precision.
    pub fn is_exact(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.defect == Valuation::AtLeast(self.precision))
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].defect.bound() >= w[0].defect.bound())
    }

    /// Growth in the valuation from the first to the last level.
    pub fn gain(&self) -> i64 {
        match (self.rows.first(), self.rows.last()) {
            (Some(a), Some(b)) => b.defect.bound() - a.defect.bound(),
            _ => 0,
        }
    }

    /// Nondecreasing and gaining at least `min_gain` overall.
    pub fn grows_by(&self, min_gain: i64) -> bool {
        self.is_nondecreasing() && self.gain() >= min_gain
    }

    /// Exact at every level, or nondecreasing with a gain of at least
    /// [`MIN_GAIN`] (capped by the number of level steps).
    pub fn growth_holds(&self) -> bool {
        let steps = self.rows.len().saturating_sub(1) as i64;
        self.is_exact() || self.grows_by(MIN_GAIN.min(steps))
    }
}

pub fn convergence_report(
    moment: usize,
    qc: &QChoice,
    levels: &[u32],
) -> Result<ConvergenceReport, PAdicError> {
    let target = exact_moment(moment, qc);
    let f = monomial(moment);
    let rows = levels
        .iter()
        .map(|&level| {
            let partial = fermionic_integral_partial(&f, qc, level)?;
            Ok(ConvergenceRow {
                level,
                defect: partial.try_sub(&target)?.valuation(),
            })
        })
        .collect::<Result<Vec<_>, PAdicError>>()?;
    Ok(ConvergenceReport {
        moment,
        p: qc.p,
        q: qc.q.to_string(),
        precision: qc.precision,
        rows,
    })
}

/// Defect of the shift relation
/// `q^n I(f(· + n)) + (-1)^{n-1} I(f) = [2]_q Σ_{l<n} (-1)^{n-1-l} f(l) q^l`
/// with both integrals truncated at level `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftCheck {
    pub shift: usize,
    pub level: u32,
    pub defect: Valuation,
}

pub fn check_shift_identity_finite(
    f: &XPoly<BigRat>,
    shift: usize,
    qc: &QChoice,
    level: u32,
) -> Result<ShiftCheck, PAdicError> {
    let shifted = f.shift(&BigRat::from_integer(BigInt::from(shift)));
    let i_shifted = fermionic_integral_partial(&shifted, qc, level)?;
    let i_plain = fermionic_integral_partial(f, qc, level)?;
    let q_n = qc.q_padic().pow(shift as u64);
    let mut lhs = q_n.try_mul(&i_shifted)?;
    lhs = if shift % 2 == 1 {
        lhs.try_add(&i_plain)?
    } else {
        lhs.try_sub(&i_plain)?
    };
    let mut q_pow = BigRat::one();
    let mut sum = BigRat::zero();
    for l in 0..shift {
        let term = f.eval(&BigRat::from_integer(BigInt::from(l))) * &q_pow;
        if (shift - 1 - l).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        q_pow *= &qc.q;
    }
    let rhs = qc.embed(&((BigRat::one() + &qc.q) * sum), qc.precision);
    Ok(ShiftCheck {
        shift,
        level,
        defect: lhs.try_sub(&rhs)?.valuation(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{int, rat};

    fn xp(c: &[i64]) -> XPoly<BigRat> {
        XPoly::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn q_choice_validation() {
        assert!(QChoice::with_offset(3, 1, 12).is_ok());
        assert_eq!(
            QChoice::with_offset(4, 1, 12).unwrap_err(),
            PAdicError::InvalidPrime(4)
        );
        assert!(matches!(
            QChoice::new(3, int(2), 12),
            Err(PAdicError::InadmissibleQ(_))
        ));
        assert!(QChoice::new(5, rat(11, 6), 8).is_ok());
    }

    #[test]
    fn constant_integrand_is_exactly_one() {
        for (p, levels) in [(3u64, 1..=6u32), (5, 1..=4), (7, 1..=3)] {
            let qc = QChoice::with_offset(p, 1, 12).unwrap();
            let one = PAdicNum::one(p, 12).unwrap();
            for level in levels {
                let i = fermionic_integral_partial(&xp(&[1]), &qc, level).unwrap();
                assert_eq!(i, one, "p={p} N={level}");
            }
        }
    }

    #[test]
    fn first_moment_approaches_minus_four_fifths() {
        let qc = QChoice::with_offset(3, 1, 12).unwrap();
        let target = PAdicNum::from_rational(&rat(-4, 5), 3, 12).unwrap();
        assert_eq!(exact_moment(1, &qc), target);
        let mut last = 0;
        for level in 1..=6 {
            let i = fermionic_integral_partial(&xp(&[0, 1]), &qc, level).unwrap();
            let v = i.try_sub(&target).unwrap().valuation().bound();
            assert!(v > last, "N={level}: {v} after {last}");
            last = v;
        }
    }

    #[test]
    fn unit_shift_of_constant_is_exact() {
        let qc = QChoice::with_offset(3, 1, 12).unwrap();
        for level in 1..=4 {
            let c = check_shift_identity_finite(&xp(&[1]), 1, &qc, level).unwrap();
            assert_eq!(c.defect, Valuation::AtLeast(12));
        }
    }

    #[test]
    fn underflow_is_flagged() {
        // (x - 2)^2 takes 4, 1, 0 on 0, 1, 2 and 4·1 + 1·(-4) cancels at q = 4,
        // leaving nothing of the 20 digits lost to the denominator
        let scale = BigRat::new(1.into(), BigInt::from(3).pow(20));
        let f = xp(&[4, -4, 1]).scale(&scale);
        let qc = QChoice::with_offset(3, 1, 6).unwrap();
        assert!(matches!(
            fermionic_integral_partial(&f, &qc, 1),
            Err(PAdicError::PrecisionUnderflow { requested: 6, .. })
        ));
        // the same polynomial without the scale is fine
        assert!(fermionic_integral_partial(&xp(&[4, -4, 1]), &qc, 1).is_ok());
        assert_eq!(
            fermionic_integral_partial(&xp(&[1]), &qc, 40).unwrap_err(),
            PAdicError::LevelTooLarge { p: 3, level: 40 }
        );
    }

    #[test]
    fn q_equal_to_one_is_admissible() {
        let qc = QChoice::new(3, int(1), 8).unwrap();
        let target = PAdicNum::from_rational(&rat(-1, 2), 3, 8).unwrap();
        assert_eq!(exact_moment(1, &qc), target);
    }
}
